#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "veds/graph.hpp"

namespace veds {

// Closed range of positions [left, right], 1-based.
struct Interval {
  std::size_t left = 0;
  std::size_t right = 0;

  bool contains(std::size_t p) const { return left <= p && p <= right; }
  bool operator==(const Interval&) const = default;
};

struct ConvexityCheck {
  bool ok = true;
  // On failure: smallest x-index whose neighbourhood is not contiguous, and
  // the first Y position inside its span that is not a neighbour.
  std::size_t violating_x = 0;
  std::size_t gap_position = 0;
};

// Checks that `yperm` (position -> y-index, listed in position order) puts
// every N(x) on consecutive positions. Throws InputError unless `yperm` is a
// permutation of 1..n2.
ConvexityCheck validate_convex_ordering(const BipartiteGraph& g,
                                        std::span<const std::size_t> yperm);

// A convex ordering of Y together with X sorted lexicographically by the
// (left, right) endpoints of its neighbourhood interval. Positions are
// 1-based; the vectors below are indexed by position - 1.
struct LexConvexOrdering {
  std::vector<std::size_t> xperm;  // X position -> x-index
  std::vector<std::size_t> yperm;  // Y position -> y-index
  std::vector<std::size_t> x_pos;  // x-index - 1 -> X position
  std::vector<std::size_t> y_pos;  // y-index - 1 -> Y position
  // Interval of Y positions of N(x), by X position; empty for isolated x.
  std::vector<std::optional<Interval>> x_span;
  // Min/max X positions of N(y), by Y position; empty for isolated y. Not
  // contiguous in general.
  std::vector<std::optional<Interval>> y_span;

  std::size_t x_at(std::size_t pos) const { return xperm[pos - 1]; }
  std::size_t y_at(std::size_t pos) const { return yperm[pos - 1]; }
  std::size_t position_of_x(std::size_t i) const { return x_pos[i - 1]; }
  std::size_t position_of_y(std::size_t j) const { return y_pos[j - 1]; }
  const std::optional<Interval>& interval_x(std::size_t pos) const { return x_span[pos - 1]; }
  const std::optional<Interval>& interval_y(std::size_t pos) const { return y_span[pos - 1]; }

  bool operator==(const LexConvexOrdering&) const = default;
};

// Bucket-sorts X by (left, right) under a convex `yperm` in O(n + m).
// Isolated X vertices come first; remaining ties keep ascending x-index.
// Throws InputError if `yperm` is not a convex ordering of g.
LexConvexOrdering compute_lex_convex_ordering(const BipartiteGraph& g,
                                              std::span<const std::size_t> yperm);

// Adjacent-pair check of the lex condition on an ordering's X side.
bool is_lex_sorted(const LexConvexOrdering& ord);

// Full consistency check of `ord` against `g`: bijective permutations,
// inverses, convex yperm, interval tables matching the adjacency, lex order.
// Returns an explanation of the first problem, or nullopt when valid.
std::optional<std::string> check_lex_convex_ordering(const BipartiteGraph& g,
                                                     const LexConvexOrdering& ord);

inline constexpr std::size_t kMaxExhaustiveOrderingY = 10;

// Lexicographically least convex permutation of Y, by trying permutations
// in order. Throws CapacityError when n2 > kMaxExhaustiveOrderingY.
std::optional<std::vector<std::size_t>> find_convex_ordering_exhaustive(
    const BipartiteGraph& g);

std::vector<std::size_t> identity_permutation(std::size_t n);

}  // namespace veds
