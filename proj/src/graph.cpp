#include "veds/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <queue>

#include "veds/errors.hpp"

namespace veds {

std::string to_string(VertexRef v) {
  return (v.side == Side::X ? "x" : "y") + std::to_string(v.index);
}

VertexRef parse_vertex(std::string_view text) {
  if (text.size() < 2) {
    throw InputError("invalid vertex name '" + std::string(text) + "'");
  }
  const char side = static_cast<char>(std::tolower(static_cast<unsigned char>(text[0])));
  if (side != 'x' && side != 'y') {
    throw InputError("invalid vertex name '" + std::string(text) +
                     "': expected x<i> or y<j>");
  }
  std::size_t index = 0;
  const auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || index == 0) {
    throw InputError("invalid vertex name '" + std::string(text) +
                     "': index must be a positive integer");
  }
  return {side == 'x' ? Side::X : Side::Y, index};
}

std::string to_string(const VertexSet& set) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : set) {
    if (!first) out += ", ";
    out += to_string(v);
    first = false;
  }
  return out + "}";
}

VertexSet parse_vertex_list(std::string_view text) {
  VertexSet out;
  std::size_t pos = 0;
  auto is_sep = [](char c) {
    return c == ',' || std::isspace(static_cast<unsigned char>(c)) || c == '{' || c == '}';
  };
  while (pos < text.size()) {
    while (pos < text.size() && is_sep(text[pos])) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    if (end > pos) out.insert(parse_vertex(text.substr(pos, end - pos)));
    pos = end;
  }
  return out;
}

bool BipartiteGraph::has_edge(std::size_t i, std::size_t j) const {
  if (i < 1 || i > n1() || j < 1 || j > n2()) return false;
  const auto& row = adj_x_[i - 1];
  return std::binary_search(row.begin(), row.end(), j);
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (std::size_t i = 1; i <= n1(); ++i) {
    for (std::size_t j : adj_x_[i - 1]) out.push_back({i, j});
  }
  return out;
}

VertexSet BipartiteGraph::vertices() const {
  VertexSet out;
  for (std::size_t i = 1; i <= n1(); ++i) out.insert(x_vertex(i));
  for (std::size_t j = 1; j <= n2(); ++j) out.insert(y_vertex(j));
  return out;
}

BipartiteGraph build_graph(std::size_t n1, std::size_t n2,
                           std::span<const Edge> edges) {
  BipartiteGraph g;
  g.adj_x_.resize(n1);
  g.adj_y_.resize(n2);
  for (const auto& e : edges) {
    if (e.x < 1 || e.x > n1 || e.y < 1 || e.y > n2) {
      throw InputError("edge (" + std::to_string(e.x) + "," + std::to_string(e.y) +
                       ") out of range for graph with n1=" + std::to_string(n1) +
                       ", n2=" + std::to_string(n2));
    }
    g.adj_x_[e.x - 1].push_back(e.y);
  }
  for (auto& row : g.adj_x_) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  // Filling Y rows in increasing x keeps them sorted.
  for (std::size_t i = 1; i <= n1; ++i) {
    for (std::size_t j : g.adj_x_[i - 1]) g.adj_y_[j - 1].push_back(i);
    g.num_edges_ += g.adj_x_[i - 1].size();
  }
  return g;
}

namespace {

void require_members(const BipartiteGraph& g, const VertexSet& d) {
  for (const auto& v : d) {
    if (!g.contains(v)) {
      throw ContractError("vertex " + to_string(v) + " is not in the graph");
    }
  }
}

// marked[v] <=> v lies in N[w] for some w in d. An edge uv is ve-dominated
// exactly when one of its endpoints is marked.
struct Marks {
  std::vector<char> x;
  std::vector<char> y;
};

Marks closed_neighbourhood_marks(const BipartiteGraph& g, const VertexSet& d) {
  Marks m{std::vector<char>(g.n1() + 1, 0), std::vector<char>(g.n2() + 1, 0)};
  for (const auto& w : d) {
    if (w.side == Side::X) {
      m.x[w.index] = 1;
      for (std::size_t j : g.neighbors_of_x(w.index)) m.y[j] = 1;
    } else {
      m.y[w.index] = 1;
      for (std::size_t i : g.neighbors_of_y(w.index)) m.x[i] = 1;
    }
  }
  return m;
}

}  // namespace

std::optional<Edge> first_undominated_edge(const BipartiteGraph& g,
                                           const VertexSet& d) {
  require_members(g, d);
  const Marks m = closed_neighbourhood_marks(g, d);
  for (std::size_t i = 1; i <= g.n1(); ++i) {
    if (m.x[i]) continue;
    for (std::size_t j : g.neighbors_of_x(i)) {
      if (!m.y[j]) return Edge{i, j};
    }
  }
  return std::nullopt;
}

bool is_ve_dominating_set(const BipartiteGraph& g, const VertexSet& d) {
  return !first_undominated_edge(g, d).has_value();
}

VertexRef InducedSubgraph::to_parent(VertexRef child) const {
  const auto& map = child.side == Side::X ? x_to_parent : y_to_parent;
  return {child.side, map.at(child.index - 1)};
}

std::optional<VertexRef> InducedSubgraph::from_parent(VertexRef parent) const {
  const auto& map = parent.side == Side::X ? x_from_parent : y_from_parent;
  if (parent.index < 1 || parent.index > map.size() || map[parent.index - 1] == 0) {
    return std::nullopt;
  }
  return VertexRef{parent.side, map[parent.index - 1]};
}

VertexSet InducedSubgraph::lift(const VertexSet& child_set) const {
  VertexSet out;
  for (const auto& v : child_set) out.insert(to_parent(v));
  return out;
}

InducedSubgraph induced_subgraph(const BipartiteGraph& g,
                                 std::span<const std::size_t> xs,
                                 std::span<const std::size_t> ys) {
  InducedSubgraph sub;
  sub.x_from_parent.assign(g.n1(), 0);
  sub.y_from_parent.assign(g.n2(), 0);
  for (std::size_t i : xs) {
    if (i < 1 || i > g.n1()) throw InputError("x-index " + std::to_string(i) + " out of range");
    sub.x_from_parent[i - 1] = 1;
  }
  for (std::size_t j : ys) {
    if (j < 1 || j > g.n2()) throw InputError("y-index " + std::to_string(j) + " out of range");
    sub.y_from_parent[j - 1] = 1;
  }
  for (std::size_t i = 1; i <= g.n1(); ++i) {
    if (sub.x_from_parent[i - 1]) {
      sub.x_to_parent.push_back(i);
      sub.x_from_parent[i - 1] = sub.x_to_parent.size();
    }
  }
  for (std::size_t j = 1; j <= g.n2(); ++j) {
    if (sub.y_from_parent[j - 1]) {
      sub.y_to_parent.push_back(j);
      sub.y_from_parent[j - 1] = sub.y_to_parent.size();
    }
  }
  std::vector<Edge> edges;
  for (std::size_t ci = 1; ci <= sub.x_to_parent.size(); ++ci) {
    for (std::size_t j : g.neighbors_of_x(sub.x_to_parent[ci - 1])) {
      if (const std::size_t cj = sub.y_from_parent[j - 1]; cj != 0) edges.push_back({ci, cj});
    }
  }
  sub.graph = build_graph(sub.x_to_parent.size(), sub.y_to_parent.size(), edges);
  return sub;
}

std::vector<Component> connected_components(const BipartiteGraph& g) {
  std::vector<char> seen_x(g.n1() + 1, 0);
  std::vector<char> seen_y(g.n2() + 1, 0);
  std::vector<Component> out;

  auto flood = [&](VertexRef start) {
    Component c;
    std::queue<VertexRef> queue;
    queue.push(start);
    (start.side == Side::X ? seen_x : seen_y)[start.index] = 1;
    while (!queue.empty()) {
      const VertexRef v = queue.front();
      queue.pop();
      (v.side == Side::X ? c.xs : c.ys).push_back(v.index);
      const Side other = v.side == Side::X ? Side::Y : Side::X;
      auto& seen = other == Side::X ? seen_x : seen_y;
      for (std::size_t u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          queue.push({other, u});
        }
      }
    }
    std::sort(c.xs.begin(), c.xs.end());
    std::sort(c.ys.begin(), c.ys.end());
    out.push_back(std::move(c));
  };

  // Scanning X in index order already yields components sorted by their
  // smallest X index; Y-only leftovers follow in Y order.
  for (std::size_t i = 1; i <= g.n1(); ++i) {
    if (!seen_x[i]) flood(x_vertex(i));
  }
  for (std::size_t j = 1; j <= g.n2(); ++j) {
    if (!seen_y[j]) flood(y_vertex(j));
  }
  return out;
}

bool is_connected(const BipartiteGraph& g) {
  return connected_components(g).size() <= 1;
}

}  // namespace veds
