#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "veds/graph.hpp"
#include "veds/ordering.hpp"

namespace veds {

// One chain subgraph H_i. Members are original indices listed in position
// order, so front()/back() are the leftmost/rightmost vertices.
struct ChainBlock {
  std::vector<std::size_t> xs;
  std::vector<std::size_t> ys;

  bool operator==(const ChainBlock&) const = default;
};

// (H_1, J_1, H_2, J_2, ...): isolated_sets[i] is J_{i+1}, stranded after
// H_{i+1} is removed, and may be empty. Both vectors have the same length.
struct ChainDecomposition {
  std::vector<ChainBlock> chains;
  std::vector<std::vector<std::size_t>> isolated_sets;
  // Vertices left over once no edges remain; Y members are flagged by the
  // lemma report.
  VertexSet tail_isolated;
  // The last chain is a whole remainder that was already a chain graph.
  bool ends_with_chain_remainder = false;

  bool operator==(const ChainDecomposition&) const = default;
};

// Peels chains off a connected convex bipartite graph. Each step takes the
// first remaining Y vertex y_f, its remaining neighbour x_t with the largest
// right endpoint, H = G[N(y_f) ∪ N(x_t)], then strands X vertices with no
// neighbour left. Linear in n given the ordering.
// Throws ContractError when g is disconnected.
ChainDecomposition decompose(const BipartiteGraph& g, const LexConvexOrdering& ord);

// Neighbourhoods on X totally ordered by inclusion.
bool is_chain_graph(const BipartiteGraph& g);

struct LemmaClauseResult {
  std::size_t chain = 0;  // 1-based i
  bool stranded_adjacent = true;     // (a) each v in J_i has a neighbour in Y_{H_i}
  bool successor_touches = true;     // (b) leftmost X of H_{i+1} ~ rightmost Y of H_i
  bool no_long_overlap = true;       // (c) H_i avoids J_{i+1} and H_{i+2}
  std::string detail;
};

struct LemmaReport {
  bool partition_ok = true;
  bool chains_are_chain_graphs = true;
  bool tail_has_y = false;
  std::vector<LemmaClauseResult> clauses;

  bool all_passed() const;
};

// Re-checks the structural lemma of the decomposition against g.
// Throws ContractError if `decomp` names vertices outside g.
LemmaReport verify_decomposition_lemma(const BipartiteGraph& g,
                                       const ChainDecomposition& decomp);

}  // namespace veds
