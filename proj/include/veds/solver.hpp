#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "veds/chain_decomposition.hpp"
#include "veds/graph.hpp"
#include "veds/ordering.hpp"

namespace veds {

// Positions (under a lex-convex ordering) that drive one step of the exact
// recursion on a connected graph:
//   r_prime = right(x_1), r = right(y_1), s = right(x_r),
//   l = left(y_{s+1}), p = right(y_{s+1})            (absent when s = n2),
//   alpha = max{i <= r_prime : y_i adjacent to all of J_1} (r_prime if J_1 = ∅),
//   k_alpha = right(y_alpha), l_alpha = left(x_{k_alpha + 1}) (absent if k_alpha = n1).
struct FrontierIndices {
  std::size_t r_prime = 0;
  std::size_t r = 0;
  std::size_t s = 0;
  std::optional<std::size_t> l;
  std::optional<std::size_t> p;
  std::optional<std::size_t> alpha;
  std::optional<std::size_t> k_alpha;
  std::optional<std::size_t> l_alpha;

  bool operator==(const FrontierIndices&) const = default;
};

// Throws ContractError for a graph without edges or a disconnected graph.
FrontierIndices frontier_indices(const BipartiteGraph& g, const LexConvexOrdering& ord,
                                 const ChainDecomposition& decomp);

enum class Branch { Universal, GPrime, GTilde, ComponentSplit };

std::string to_string(Branch b);  // "universal", "g_prime", "g_tilde", "component_split"

struct TraceStep {
  // Subproblem G[X_{x_start} ∪ Y_{y_start}] in positions of the top-level
  // ordering.
  std::size_t x_start = 0;
  std::size_t y_start = 0;
  Branch branch = Branch::Universal;
  std::optional<VertexRef> chosen;
  std::size_t gamma_ve = 0;  // value of the subproblem
};

struct SolveResult {
  std::size_t gamma_ve = 0;
  VertexSet witness;
  std::vector<TraceStep> trace;
  std::size_t states_evaluated = 0;
};

struct SolveOptions {
  bool memoize = true;
  bool verify_witness = true;
};

// Exact minimum ve-domination on a convex bipartite graph. Each state is a
// suffix pair of positions; the first connected component of the suffix is
// reduced either by x_r (G' = suffix beyond y_s) or by y_alpha (G~ = suffix
// past N(y_alpha)), keeping the cheaper one, with a universal vertex ending a
// component in one step. Other components ride along in both children.
// Memoised states are bounded by (n1 + 1)(n2 + 1).
// Throws InputError if `ord` is not a lex-convex ordering of g.
SolveResult solve_exact(const BipartiteGraph& g, const LexConvexOrdering& ord,
                        const SolveOptions& options = {});

// The prior chain-based rule: one vertex x_t per chain (the rightmost
// neighbour of the chain's leftmost Y vertex). Always a VED-set, not always
// a minimum one. Throws ContractError for disconnected or edgeless graphs.
SolveResult solve_baseline(const BipartiteGraph& g, const LexConvexOrdering& ord,
                           const ChainDecomposition& decomp);

enum class SuffixBranch { GPrime, GTilde };

struct SuffixSubproblem {
  InducedSubgraph sub;
  // First retained positions; absent when the branch is empty.
  std::optional<std::size_t> x_start;
  std::optional<std::size_t> y_start;
};

// G' = G[X_l ∪ Y_{s+1}] or G~ = G[X_{k_alpha+1} ∪ Y_{l_alpha}] with vertices
// that lose all neighbours dropped. Missing frontier positions give an
// empty subproblem.
SuffixSubproblem reduce_to_suffix(const BipartiteGraph& g, const LexConvexOrdering& ord,
                                  const FrontierIndices& fi, SuffixBranch branch);

}  // namespace veds
