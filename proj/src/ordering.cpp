#include "veds/ordering.hpp"

#include <algorithm>
#include <numeric>

#include "veds/errors.hpp"

namespace veds {

namespace {

void require_permutation(std::span<const std::size_t> perm, std::size_t n,
                         const char* what) {
  if (perm.size() != n) {
    throw InputError(std::string(what) + " has " + std::to_string(perm.size()) +
                     " entries, expected " + std::to_string(n));
  }
  std::vector<char> seen(n + 1, 0);
  for (std::size_t v : perm) {
    if (v < 1 || v > n || seen[v]) {
      throw InputError(std::string(what) + " is not a permutation of 1.." +
                       std::to_string(n) + " (bad or repeated entry " +
                       std::to_string(v) + ")");
    }
    seen[v] = 1;
  }
}

std::vector<std::size_t> inverse(std::span<const std::size_t> perm) {
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t p = 1; p <= perm.size(); ++p) inv[perm[p - 1] - 1] = p;
  return inv;
}

}  // namespace

std::vector<std::size_t> identity_permutation(std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{1});
  return perm;
}

ConvexityCheck validate_convex_ordering(const BipartiteGraph& g,
                                        std::span<const std::size_t> yperm) {
  require_permutation(yperm, g.n2(), "yorder");
  const auto pos = inverse(yperm);
  std::vector<std::size_t> positions;
  for (std::size_t i = 1; i <= g.n1(); ++i) {
    const auto nbrs = g.neighbors_of_x(i);
    if (nbrs.empty()) continue;
    positions.clear();
    for (std::size_t j : nbrs) positions.push_back(pos[j - 1]);
    std::sort(positions.begin(), positions.end());
    if (positions.back() - positions.front() + 1 == positions.size()) continue;
    for (std::size_t k = 1; k < positions.size(); ++k) {
      if (positions[k] != positions[k - 1] + 1) {
        return {false, i, positions[k - 1] + 1};
      }
    }
  }
  return {};
}

LexConvexOrdering compute_lex_convex_ordering(const BipartiteGraph& g,
                                              std::span<const std::size_t> yperm) {
  const auto check = validate_convex_ordering(g, yperm);
  if (!check.ok) {
    throw InputError("yorder is not convex: N(x" + std::to_string(check.violating_x) +
                     ") skips position " + std::to_string(check.gap_position));
  }
  const std::size_t n1 = g.n1();
  const std::size_t n2 = g.n2();

  LexConvexOrdering ord;
  ord.yperm.assign(yperm.begin(), yperm.end());
  ord.y_pos = inverse(yperm);

  // Interval per x-index.
  std::vector<std::optional<Interval>> by_index(n1 + 1);
  for (std::size_t i = 1; i <= n1; ++i) {
    const auto nbrs = g.neighbors_of_x(i);
    if (nbrs.empty()) continue;
    Interval iv{n2 + 1, 0};
    for (std::size_t j : nbrs) {
      const std::size_t p = ord.y_pos[j - 1];
      iv.left = std::min(iv.left, p);
      iv.right = std::max(iv.right, p);
    }
    by_index[i] = iv;
  }

  // Two stable counting passes: by right, then by left.
  std::vector<std::size_t> order;
  for (std::size_t i = 1; i <= n1; ++i) {
    if (by_index[i]) order.push_back(i);
  }
  auto bucket_pass = [&](auto key) {
    std::vector<std::size_t> count(n2 + 2, 0);
    for (std::size_t i : order) ++count[key(*by_index[i])];
    for (std::size_t k = 1; k < count.size(); ++k) count[k] += count[k - 1];
    std::vector<std::size_t> sorted(order.size());
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      sorted[--count[key(*by_index[*it])]] = *it;
    }
    order = std::move(sorted);
  };
  bucket_pass([](const Interval& iv) { return iv.right; });
  bucket_pass([](const Interval& iv) { return iv.left; });

  for (std::size_t i = 1; i <= n1; ++i) {
    if (!by_index[i]) ord.xperm.push_back(i);
  }
  ord.xperm.insert(ord.xperm.end(), order.begin(), order.end());
  ord.x_pos = inverse(ord.xperm);
  ord.x_span.resize(n1);
  for (std::size_t p = 1; p <= n1; ++p) ord.x_span[p - 1] = by_index[ord.xperm[p - 1]];

  ord.y_span.resize(n2);
  for (std::size_t q = 1; q <= n2; ++q) {
    const auto nbrs = g.neighbors_of_y(ord.yperm[q - 1]);
    if (nbrs.empty()) continue;
    Interval iv{n1 + 1, 0};
    for (std::size_t i : nbrs) {
      const std::size_t p = ord.x_pos[i - 1];
      iv.left = std::min(iv.left, p);
      iv.right = std::max(iv.right, p);
    }
    ord.y_span[q - 1] = iv;
  }
  return ord;
}

bool is_lex_sorted(const LexConvexOrdering& ord) {
  for (std::size_t p = 1; p < ord.xperm.size(); ++p) {
    const auto& a = ord.x_span[p - 1];
    const auto& b = ord.x_span[p];
    if (!a) continue;
    if (!b) return false;
    if (a->left > b->left) return false;
    if (a->left == b->left && a->right > b->right) return false;
  }
  return true;
}

std::optional<std::string> check_lex_convex_ordering(const BipartiteGraph& g,
                                                     const LexConvexOrdering& ord) {
  try {
    require_permutation(ord.xperm, g.n1(), "xperm");
    require_permutation(ord.yperm, g.n2(), "yperm");
  } catch (const InputError& e) {
    return e.what();
  }
  if (ord.x_pos != inverse(ord.xperm) || ord.y_pos != inverse(ord.yperm)) {
    return "position tables are not inverse to the permutations";
  }
  if (ord.x_span.size() != g.n1() || ord.y_span.size() != g.n2()) {
    return "interval tables have the wrong size";
  }
  if (const auto c = validate_convex_ordering(g, ord.yperm); !c.ok) {
    return "yperm is not convex at x" + std::to_string(c.violating_x);
  }
  for (std::size_t p = 1; p <= g.n1(); ++p) {
    const auto nbrs = g.neighbors_of_x(ord.x_at(p));
    const auto& iv = ord.interval_x(p);
    if (nbrs.empty() != !iv.has_value()) return "x interval presence mismatch";
    if (!iv) continue;
    std::size_t lo = g.n2() + 1, hi = 0;
    for (std::size_t j : nbrs) {
      lo = std::min(lo, ord.position_of_y(j));
      hi = std::max(hi, ord.position_of_y(j));
    }
    if (iv->left != lo || iv->right != hi) return "x interval table mismatch";
  }
  for (std::size_t q = 1; q <= g.n2(); ++q) {
    const auto nbrs = g.neighbors_of_y(ord.y_at(q));
    const auto& iv = ord.interval_y(q);
    if (nbrs.empty() != !iv.has_value()) return "y interval presence mismatch";
    if (!iv) continue;
    std::size_t lo = g.n1() + 1, hi = 0;
    for (std::size_t i : nbrs) {
      lo = std::min(lo, ord.position_of_x(i));
      hi = std::max(hi, ord.position_of_x(i));
    }
    if (iv->left != lo || iv->right != hi) return "y interval table mismatch";
  }
  if (!is_lex_sorted(ord)) return "X side is not lexicographically sorted";
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> find_convex_ordering_exhaustive(
    const BipartiteGraph& g) {
  if (g.n2() > kMaxExhaustiveOrderingY) {
    throw CapacityError("exhaustive convex-ordering search supports n2 <= " +
                        std::to_string(kMaxExhaustiveOrderingY) + " (got " +
                        std::to_string(g.n2()) + "); declare a 'yorder' line instead");
  }
  auto perm = identity_permutation(g.n2());
  do {
    if (validate_convex_ordering(g, perm).ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace veds
