#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace veds {

enum class Side : std::uint8_t { X, Y };

// A vertex named by its side and 1-based index within that side, so x3 is
// {Side::X, 3}. Ordering puts every X vertex before every Y vertex.
struct VertexRef {
  Side side = Side::X;
  std::size_t index = 0;

  auto operator<=>(const VertexRef&) const = default;
};

inline VertexRef x_vertex(std::size_t i) { return {Side::X, i}; }
inline VertexRef y_vertex(std::size_t j) { return {Side::Y, j}; }

// "x3" / "y12".
std::string to_string(VertexRef v);

// Parses "x3" / "y12" (case-insensitive side letter). Throws InputError.
VertexRef parse_vertex(std::string_view text);

using VertexSet = std::set<VertexRef>;

std::string to_string(const VertexSet& set);  // "{x1, y2}"

// Parses a comma- and/or whitespace-separated list of vertex names.
VertexSet parse_vertex_list(std::string_view text);

// An edge x_i ~ y_j, 1-based on both sides.
struct Edge {
  std::size_t x = 0;
  std::size_t y = 0;

  auto operator<=>(const Edge&) const = default;
};

// Immutable bipartite graph with sides X = {x_1..x_n1}, Y = {y_1..y_n2}.
// Adjacency is stored sorted in both directions. All indices are 1-based.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  std::size_t n1() const { return adj_x_.size(); }
  std::size_t n2() const { return adj_y_.size(); }
  std::size_t num_vertices() const { return n1() + n2(); }
  std::size_t num_edges() const { return num_edges_; }

  // Sorted Y-indices adjacent to x_i.
  std::span<const std::size_t> neighbors_of_x(std::size_t i) const {
    return adj_x_[i - 1];
  }
  // Sorted X-indices adjacent to y_j.
  std::span<const std::size_t> neighbors_of_y(std::size_t j) const {
    return adj_y_[j - 1];
  }
  std::span<const std::size_t> neighbors(VertexRef v) const {
    return v.side == Side::X ? neighbors_of_x(v.index) : neighbors_of_y(v.index);
  }
  std::size_t degree(VertexRef v) const { return neighbors(v).size(); }

  bool has_edge(std::size_t i, std::size_t j) const;
  bool contains(VertexRef v) const {
    return v.index >= 1 && v.index <= (v.side == Side::X ? n1() : n2());
  }

  // Edges sorted by (x, y).
  std::vector<Edge> edges() const;

  // Every vertex of the graph, X side first.
  VertexSet vertices() const;

  bool operator==(const BipartiteGraph&) const = default;

 private:
  friend BipartiteGraph build_graph(std::size_t, std::size_t,
                                    std::span<const Edge>);

  std::vector<std::vector<std::size_t>> adj_x_;
  std::vector<std::vector<std::size_t>> adj_y_;
  std::size_t num_edges_ = 0;
};

// Builds a graph with exactly the given edge set; duplicates collapse.
// Throws InputError naming the first pair outside [1,n1] x [1,n2].
BipartiteGraph build_graph(std::size_t n1, std::size_t n2,
                           std::span<const Edge> edges);

inline BipartiteGraph build_graph(std::size_t n1, std::size_t n2,
                                  std::initializer_list<Edge> edges) {
  return build_graph(n1, n2, std::span<const Edge>(edges.begin(), edges.size()));
}

// True iff every edge uv has a member of `d` in N[u] ∪ N[v].
// Runs in O(m + sum of degrees over d). Throws ContractError if some member
// of `d` is not a vertex of `g`.
bool is_ve_dominating_set(const BipartiteGraph& g, const VertexSet& d);

// The smallest edge (by (x, y)) left undominated by `d`, if any.
std::optional<Edge> first_undominated_edge(const BipartiteGraph& g,
                                           const VertexSet& d);

// An induced subgraph together with the index translation in both
// directions. Child indices are 1..|xs| and 1..|ys| in ascending parent order.
struct InducedSubgraph {
  BipartiteGraph graph;
  std::vector<std::size_t> x_to_parent;  // child index - 1 -> parent index
  std::vector<std::size_t> y_to_parent;
  std::vector<std::size_t> x_from_parent;  // parent index - 1 -> child index, 0 if absent
  std::vector<std::size_t> y_from_parent;

  VertexRef to_parent(VertexRef child) const;
  std::optional<VertexRef> from_parent(VertexRef parent) const;
  VertexSet lift(const VertexSet& child_set) const;
};

// Induced subgraph on the given X- and Y-indices (any order, duplicates ok).
InducedSubgraph induced_subgraph(const BipartiteGraph& g,
                                 std::span<const std::size_t> xs,
                                 std::span<const std::size_t> ys);

struct Component {
  std::vector<std::size_t> xs;  // ascending
  std::vector<std::size_t> ys;  // ascending

  bool operator==(const Component&) const = default;
};

// Connected components, isolated vertices as singletons. Components holding
// an X vertex come first ordered by their smallest X index, then Y-only
// components by Y index.
std::vector<Component> connected_components(const BipartiteGraph& g);

bool is_connected(const BipartiteGraph& g);

}  // namespace veds
