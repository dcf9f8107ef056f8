#include "veds/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "veds/errors.hpp"

namespace veds {

std::string to_string(TreeKind kind) { return kind == TreeKind::Star ? "star" : "comb"; }

TreeCertificate make_star_certificate(std::size_t n1, std::size_t center) {
  TreeCertificate cert;
  cert.kind = TreeKind::Star;
  cert.center = center;
  for (std::size_t v = 1; v <= n1; ++v) {
    if (v != center) cert.edges.emplace_back(center, v);
  }
  return cert;
}

TreeCertificate make_comb_certificate(std::vector<std::size_t> backbone,
                                      std::vector<std::size_t> teeth) {
  TreeCertificate cert;
  cert.kind = TreeKind::Comb;
  for (std::size_t k = 0; k < backbone.size(); ++k) {
    if (k + 1 < backbone.size()) cert.edges.emplace_back(backbone[k], backbone[k + 1]);
    if (k < teeth.size()) cert.edges.emplace_back(backbone[k], teeth[k]);
  }
  cert.backbone = std::move(backbone);
  cert.teeth = std::move(teeth);
  return cert;
}

VertexRef ReductionArtifact::hub() const {
  return cert.kind == TreeKind::Star ? role("u")
                                     : role("r" + std::to_string(source.universe + 1));
}

namespace {

void require_size_restriction(const SetSystem& ss) {
  if (!ss.within_size_restriction()) {
    throw ContractError("reduction requires q <= p (got q=" + std::to_string(ss.num_sets()) +
                        ", p=" + std::to_string(ss.universe) + ")");
  }
}

// Shared part of both constructions: a_i = x_i, b_j = y_j, z_i = y_{q+i},
// membership edges and the a_i z_i matching.
void add_element_gadgets(const SetSystem& ss, std::vector<Edge>& edges,
                         std::map<std::string, VertexRef>& roles) {
  const std::size_t p = ss.universe;
  const std::size_t q = ss.num_sets();
  for (std::size_t i = 1; i <= p; ++i) roles["a" + std::to_string(i)] = x_vertex(i);
  for (std::size_t j = 1; j <= q; ++j) roles["b" + std::to_string(j)] = y_vertex(j);
  for (std::size_t i = 1; i <= p; ++i) roles["z" + std::to_string(i)] = y_vertex(q + i);
  for (std::size_t j = 1; j <= q; ++j) {
    for (std::size_t i : ss.set(j)) edges.push_back({i, j});
  }
  for (std::size_t i = 1; i <= p; ++i) edges.push_back({i, q + i});
}

}  // namespace

ReductionArtifact reduce_star_convex(const SetSystem& ss) {
  require_size_restriction(ss);
  const std::size_t p = ss.universe;
  const std::size_t q = ss.num_sets();
  const std::size_t u = p + 1, u_prime = p + 2, v = q + p + 1;

  ReductionArtifact art;
  std::vector<Edge> edges;
  add_element_gadgets(ss, edges, art.roles);
  art.roles["u"] = x_vertex(u);
  art.roles["u'"] = x_vertex(u_prime);
  art.roles["v"] = y_vertex(v);
  edges.push_back({u, v});
  edges.push_back({u_prime, v});
  for (std::size_t j = 1; j <= q; ++j) edges.push_back({u, j});

  art.graph = build_graph(p + 2, q + p + 1, edges);
  art.cert = make_star_certificate(p + 2, u);
  art.source = ss;
  art.coverless = !ss.has_cover();
  return art;
}

ReductionArtifact reduce_comb_convex(const SetSystem& ss) {
  require_size_restriction(ss);
  const std::size_t p = ss.universe;
  const std::size_t q = ss.num_sets();
  auto r = [p](std::size_t k) { return p + k; };  // r_1..r_{p+1}
  const std::size_t r_prime = 2 * p + 2, w = q + p + 1;

  ReductionArtifact art;
  std::vector<Edge> edges;
  add_element_gadgets(ss, edges, art.roles);
  for (std::size_t k = 1; k <= p + 1; ++k) art.roles["r" + std::to_string(k)] = x_vertex(r(k));
  art.roles["r'" + std::to_string(p + 1)] = x_vertex(r_prime);
  art.roles["w"] = y_vertex(w);
  for (std::size_t j = 1; j <= q; ++j) {
    for (std::size_t k = 1; k <= p + 1; ++k) edges.push_back({r(k), j});
  }
  edges.push_back({r(p + 1), w});
  edges.push_back({r_prime, w});

  std::vector<std::size_t> backbone, teeth;
  for (std::size_t k = 1; k <= p + 1; ++k) backbone.push_back(r(k));
  for (std::size_t i = 1; i <= p; ++i) teeth.push_back(i);
  teeth.push_back(r_prime);

  art.graph = build_graph(2 * p + 2, q + p + 1, edges);
  art.cert = make_comb_certificate(std::move(backbone), std::move(teeth));
  art.source = ss;
  art.coverless = !ss.has_cover();
  return art;
}

VertexSet cover_to_vedset(const ReductionArtifact& art, const std::vector<std::size_t>& cover) {
  if (!art.source.is_cover(cover)) throw ContractError("the given sets do not cover the universe");
  VertexSet d;
  for (std::size_t j : cover) d.insert(y_vertex(j));
  d.insert(art.hub());
  return d;
}

std::vector<std::size_t> vedset_to_cover(const ReductionArtifact& art, const VertexSet& d) {
  if (!is_ve_dominating_set(art.graph, d)) {
    throw ContractError("vertex set " + to_string(d) + " is not ve-dominating");
  }
  if (art.coverless) throw DomainError("set system has an element in no set; no cover exists");

  const std::size_t p = art.source.universe;
  const std::size_t q = art.source.num_sets();
  VertexSet normal = d;

  // The hub gadget edge forces one of three vertices; the hub dominates
  // everything the other two (and, for a comb, the whole backbone) do.
  if (art.cert.kind == TreeKind::Star) {
    normal.erase(art.role("v"));
    normal.erase(art.role("u'"));
  } else {
    normal.erase(art.role("w"));
    normal.erase(art.role("r'" + std::to_string(p + 1)));
    for (std::size_t k = 1; k <= p; ++k) normal.erase(art.role("r" + std::to_string(k)));
  }
  normal.insert(art.hub());

  auto replace_by_set_vertex = [&](VertexRef gadget, std::size_t element) {
    if (!normal.erase(gadget)) return;
    std::optional<std::size_t> lowest;
    for (std::size_t y : art.graph.neighbors_of_x(element)) {
      if (y > q) continue;
      if (normal.contains(y_vertex(y))) return;
      if (!lowest) lowest = y;
    }
    normal.insert(y_vertex(*lowest));
  };
  for (std::size_t i = 1; i <= p; ++i) replace_by_set_vertex(art.role("z" + std::to_string(i)), i);
  for (std::size_t i = 1; i <= p; ++i) replace_by_set_vertex(art.role("a" + std::to_string(i)), i);

  std::vector<std::size_t> cover;
  for (const auto& v : normal) {
    if (v.side == Side::Y && v.index <= q) cover.push_back(v.index);
  }
  if (!art.source.is_cover(cover) || cover.size() + 1 > d.size()) {
    throw std::logic_error("cover extraction produced an invalid cover");
  }
  return cover;
}

TreeConvexityCheck verify_tree_convexity(const BipartiteGraph& g, const TreeCertificate& cert) {
  const std::size_t n = g.n1();
  if (n == 0) return {};
  if (cert.edges.size() + 1 != n) {
    throw InputError("certificate has " + std::to_string(cert.edges.size()) +
                     " edges; a tree on " + std::to_string(n) + " X vertices needs " +
                     std::to_string(n - 1));
  }
  std::vector<std::vector<std::size_t>> tree(n + 1);
  for (const auto& [a, b] : cert.edges) {
    if (a < 1 || a > n || b < 1 || b > n || a == b) {
      throw InputError("certificate edge (x" + std::to_string(a) + ", x" + std::to_string(b) +
                       ") is not between distinct X vertices");
    }
    tree[a].push_back(b);
    tree[b].push_back(a);
  }

  // Walks `allowed` from its first member; returns how many it reached.
  std::vector<char> mark(n + 1, 0);
  auto reach_within = [&](const std::vector<std::size_t>& allowed) {
    for (std::size_t v : allowed) mark[v] = 1;
    std::size_t reached = 0;
    std::queue<std::size_t> queue;
    queue.push(allowed.front());
    mark[allowed.front()] = 2;
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop();
      ++reached;
      for (std::size_t u : tree[v]) {
        if (mark[u] == 1) {
          mark[u] = 2;
          queue.push(u);
        }
      }
    }
    for (std::size_t v : allowed) mark[v] = 0;
    return reached;
  };

  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{1});
  if (reach_within(all) != n) throw InputError("certificate is not connected, so not a tree");

  if (cert.kind == TreeKind::Star) {
    if (n >= 3 && (cert.center < 1 || cert.center > n || tree[cert.center].size() != n - 1)) {
      throw InputError("star certificate: centre must be adjacent to every other X vertex");
    }
  } else {
    if (cert.backbone.empty() || cert.backbone.size() != cert.teeth.size()) {
      throw InputError("comb certificate needs one tooth per backbone vertex");
    }
    if (make_comb_certificate(cert.backbone, cert.teeth).edges != cert.edges) {
      throw InputError("comb certificate edges do not match its backbone and teeth");
    }
    for (std::size_t t : cert.teeth) {
      if (tree[t].size() != 1) throw InputError("comb tooth x" + std::to_string(t) + " is not pendant");
    }
  }

  for (std::size_t j = 1; j <= g.n2(); ++j) {
    const auto nbrs = g.neighbors_of_y(j);
    if (nbrs.size() <= 1) continue;
    const std::vector<std::size_t> members(nbrs.begin(), nbrs.end());
    if (reach_within(members) != members.size()) return {false, j};
  }
  return {};
}

std::optional<std::vector<std::size_t>> find_cover_up_to(const SetSystem& ss,
                                                         std::size_t max_size) {
  const std::size_t q = ss.num_sets();
  for (std::size_t t = 0; t <= std::min(max_size, q); ++t) {
    std::vector<std::size_t> pick(t);
    std::iota(pick.begin(), pick.end(), std::size_t{1});
    while (true) {
      if (ss.is_cover(pick)) return pick;
      // Next t-combination of 1..q in lexicographic order.
      std::size_t k = t;
      while (k > 0 && pick[k - 1] == q - t + k) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t m = k; m < t; ++m) pick[m] = pick[m - 1] + 1;
    }
  }
  return std::nullopt;
}

ApproxCoverResult approx_set_cover(const SetSystem& ss, std::size_t k, const VedSolver& solver) {
  if (!ss.has_cover()) throw DomainError("set system has an element in no set; no cover exists");
  if (auto small = find_cover_up_to(ss, k)) return {std::move(*small), false};
  const ReductionArtifact art = reduce_star_convex(ss);
  const VertexSet d = solver(art.graph);
  return {vedset_to_cover(art, d), true};
}

}  // namespace veds
