#include "veds/chain_decomposition.hpp"

#include <algorithm>

#include "veds/errors.hpp"

namespace veds {

namespace {

// Remainder intervals are pairwise nested iff, sorted by (left asc,
// right desc), the right endpoints never increase.
bool nested_intervals(std::vector<Interval> spans) {
  std::sort(spans.begin(), spans.end(), [](const Interval& a, const Interval& b) {
    return a.left != b.left ? a.left < b.left : a.right > b.right;
  });
  for (std::size_t k = 1; k < spans.size(); ++k) {
    if (spans[k].right > spans[k - 1].right) return false;
  }
  return true;
}

}  // namespace

ChainDecomposition decompose(const BipartiteGraph& g, const LexConvexOrdering& ord) {
  if (!is_connected(g)) {
    throw ContractError("chain decomposition needs a connected graph; split components first");
  }
  ChainDecomposition out;
  const std::size_t n1 = g.n1();
  const std::size_t n2 = g.n2();
  if (g.num_edges() == 0) {
    out.tail_isolated = g.vertices();
    return out;
  }

  // Connected with an edge: no isolated X, so every position has a span.
  auto lo = [&](std::size_t p) { return ord.interval_x(p)->left; };
  auto hi = [&](std::size_t p) { return ord.interval_x(p)->right; };

  std::size_t next = 1;  // first X position not yet reached by any y_f
  std::size_t yf = 1;    // first remaining Y position
  std::vector<std::size_t> carry;  // reached X positions reaching beyond the last block

  while (true) {
    std::vector<std::size_t> block_x = std::move(carry);
    carry.clear();
    while (next <= n1 && lo(next) <= yf) block_x.push_back(next++);
    if (block_x.empty()) break;

    std::size_t xt = block_x.front();
    for (std::size_t p : block_x) {
      if (hi(p) >= hi(xt)) xt = p;
    }
    const std::size_t s = hi(xt);

    if (!out.chains.empty() && s == n2) {
      std::vector<std::size_t> rest = block_x;
      for (std::size_t p = next; p <= n1; ++p) rest.push_back(p);
      std::vector<Interval> spans;
      for (std::size_t p : rest) spans.push_back({std::max(lo(p), yf), hi(p)});
      if (nested_intervals(std::move(spans))) {
        block_x = std::move(rest);
        next = n1 + 1;
        out.ends_with_chain_remainder = true;
      }
    }

    std::vector<std::size_t> stranded;
    while (next <= n1 && lo(next) <= s) {
      (hi(next) <= s ? stranded : carry).push_back(next);
      ++next;
    }

    ChainBlock block;
    for (std::size_t p : block_x) block.xs.push_back(ord.x_at(p));
    for (std::size_t q = yf; q <= s; ++q) block.ys.push_back(ord.y_at(q));
    out.chains.push_back(std::move(block));
    std::vector<std::size_t> j_set;
    for (std::size_t p : stranded) j_set.push_back(ord.x_at(p));
    out.isolated_sets.push_back(std::move(j_set));

    yf = s + 1;
    if (yf > n2 && carry.empty()) break;
  }

  for (std::size_t p : carry) out.tail_isolated.insert(x_vertex(ord.x_at(p)));
  for (std::size_t p = next; p <= n1; ++p) out.tail_isolated.insert(x_vertex(ord.x_at(p)));
  for (std::size_t q = yf; q <= n2; ++q) out.tail_isolated.insert(y_vertex(ord.y_at(q)));
  return out;
}

bool is_chain_graph(const BipartiteGraph& g) {
  std::vector<std::size_t> xs(g.n1());
  for (std::size_t i = 1; i <= g.n1(); ++i) xs[i - 1] = i;
  std::stable_sort(xs.begin(), xs.end(), [&](std::size_t a, std::size_t b) {
    return g.neighbors_of_x(a).size() > g.neighbors_of_x(b).size();
  });
  for (std::size_t k = 1; k < xs.size(); ++k) {
    const auto big = g.neighbors_of_x(xs[k - 1]);
    const auto small = g.neighbors_of_x(xs[k]);
    if (!std::includes(big.begin(), big.end(), small.begin(), small.end())) return false;
  }
  return true;
}

bool LemmaReport::all_passed() const {
  if (!partition_ok || !chains_are_chain_graphs) return false;
  return std::all_of(clauses.begin(), clauses.end(), [](const LemmaClauseResult& c) {
    return c.stranded_adjacent && c.successor_touches && c.no_long_overlap;
  });
}

LemmaReport verify_decomposition_lemma(const BipartiteGraph& g,
                                       const ChainDecomposition& decomp) {
  if (decomp.isolated_sets.size() != decomp.chains.size()) {
    throw ContractError("decomposition has mismatched chain and stranded-set counts");
  }
  const std::size_t t = decomp.chains.size();
  std::vector<std::size_t> chain_of_x(g.n1() + 1, 0), stranded_in(g.n1() + 1, 0);
  std::vector<std::size_t> chain_of_y(g.n2() + 1, 0);
  std::vector<std::size_t> hits_x(g.n1() + 1, 0), hits_y(g.n2() + 1, 0);

  auto check_x = [&](std::size_t i) {
    if (i < 1 || i > g.n1()) throw ContractError("decomposition names x" + std::to_string(i) + " outside the graph");
    ++hits_x[i];
  };
  auto check_y = [&](std::size_t j) {
    if (j < 1 || j > g.n2()) throw ContractError("decomposition names y" + std::to_string(j) + " outside the graph");
    ++hits_y[j];
  };

  LemmaReport report;
  for (std::size_t c = 1; c <= t; ++c) {
    for (std::size_t i : decomp.chains[c - 1].xs) { check_x(i); chain_of_x[i] = c; }
    for (std::size_t j : decomp.chains[c - 1].ys) { check_y(j); chain_of_y[j] = c; }
    for (std::size_t i : decomp.isolated_sets[c - 1]) { check_x(i); stranded_in[i] = c; }
    const auto& h = decomp.chains[c - 1];
    if (h.xs.empty() || h.ys.empty()) report.partition_ok = false;
    if (!is_chain_graph(induced_subgraph(g, h.xs, h.ys).graph)) report.chains_are_chain_graphs = false;
  }
  for (const auto& v : decomp.tail_isolated) {
    if (v.side == Side::X) {
      check_x(v.index);
    } else {
      check_y(v.index);
      report.tail_has_y = true;
    }
  }
  for (std::size_t i = 1; i <= g.n1(); ++i) report.partition_ok &= hits_x[i] == 1;
  for (std::size_t j = 1; j <= g.n2(); ++j) report.partition_ok &= hits_y[j] == 1;

  for (std::size_t c = 1; c <= t; ++c) {
    LemmaClauseResult r;
    r.chain = c;
    const auto& h = decomp.chains[c - 1];
    for (std::size_t v : decomp.isolated_sets[c - 1]) {
      const auto nbrs = g.neighbors_of_x(v);
      const bool touches = std::any_of(nbrs.begin(), nbrs.end(),
                                       [&](std::size_t y) { return chain_of_y[y] == c; });
      if (!touches) {
        r.stranded_adjacent = false;
        r.detail += "x" + std::to_string(v) + " in J_" + std::to_string(c) + " has no neighbour in H_" +
                    std::to_string(c) + "; ";
      }
    }
    if (c < t) {
      const auto& succ = decomp.chains[c];
      if (!g.has_edge(succ.xs.front(), h.ys.back())) {
        r.successor_touches = false;
        r.detail += "leftmost x" + std::to_string(succ.xs.front()) + " of H_" + std::to_string(c + 1) +
                    " misses rightmost y" + std::to_string(h.ys.back()) + "; ";
      }
    }
    for (std::size_t x : h.xs) {
      for (std::size_t y : g.neighbors_of_x(x)) {
        if (chain_of_y[y] == c + 2) {
          r.no_long_overlap = false;
          r.detail += "x" + std::to_string(x) + " reaches H_" + std::to_string(c + 2) + "; ";
        }
      }
    }
    for (std::size_t y : h.ys) {
      for (std::size_t x : g.neighbors_of_y(y)) {
        if (stranded_in[x] == c + 1 || chain_of_x[x] == c + 2) {
          r.no_long_overlap = false;
          r.detail += "y" + std::to_string(y) + " reaches x" + std::to_string(x) + "; ";
        }
      }
    }
    report.clauses.push_back(std::move(r));
  }
  return report;
}

}  // namespace veds
