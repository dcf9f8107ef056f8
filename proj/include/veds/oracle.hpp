#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "veds/graph.hpp"
#include "veds/set_system.hpp"
#include "veds/solver.hpp"

namespace veds {

inline constexpr std::size_t kMaxBruteForceVertices = 24;
inline constexpr std::size_t kMaxBruteForceSets = 20;

// Minimum VED-set by trying subsets in increasing size, lexicographically
// least member list (x_1..x_n1, y_1..y_n2) first. Domination is checked with
// bitmasks, independently of is_ve_dominating_set.
// Throws CapacityError when n1 + n2 > kMaxBruteForceVertices.
SolveResult brute_force_gamma_ve(const BipartiteGraph& g);

// Smallest subfamily covering 1..p (lexicographically least among equals),
// or nullopt. Throws CapacityError when q > kMaxBruteForceSets.
std::optional<std::vector<std::size_t>> brute_force_min_cover(const SetSystem& ss);

struct GeneratorConfig {
  std::size_t n1 = 1;
  std::size_t n2 = 1;
  double density = 0.5;  // mean interval length as a fraction of n2
  std::uint64_t seed = 0;
  bool require_connected = false;
};

// Each x gets a random interval of Y (identity order); lengths are
// geometric with mean density * n2. With require_connected, redraws up to a
// fixed budget and then throws GenerationError.
BipartiteGraph gen_random_convex_bipartite(const GeneratorConfig& cfg);

// Set system with q <= p sets, every element covered.
SetSystem gen_random_set_system(std::size_t p, std::size_t q, std::uint64_t seed);

struct Disagreement {
  std::size_t trial = 0;
  std::size_t exact = 0;
  std::size_t oracle = 0;
  std::string instance;  // graph text, replayable
};

struct CrossCheckReport {
  std::size_t trials = 0;
  std::size_t agreements = 0;
  std::vector<Disagreement> disagreements;
  std::size_t witness_failures = 0;  // exact or baseline witness invalid / wrong size
  std::size_t baseline_gaps = 0;     // instances where baseline > exact
  std::size_t max_baseline_gap = 0;
  std::size_t total_baseline_gap = 0;
};

// solve_exact against brute_force_gamma_ve on `trials` connected convex
// instances with n1 + n2 <= size_cap (at least 2). Deterministic in `seed`.
CrossCheckReport cross_check(std::size_t trials, std::size_t size_cap, std::uint64_t seed);

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace veds
