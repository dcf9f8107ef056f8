#include <gtest/gtest.h>

#include "test_support.hpp"
#include "veds/chain_decomposition.hpp"
#include "veds/errors.hpp"
#include "veds/oracle.hpp"
#include "veds/solver.hpp"

namespace veds {
namespace {

struct Prepared {
  BipartiteGraph g;
  LexConvexOrdering ord;
  ChainDecomposition decomp;
};

Prepared prepare(BipartiteGraph g, std::vector<std::size_t> yperm = {}) {
  if (yperm.empty()) yperm = identity_permutation(g.n2());
  auto ord = compute_lex_convex_ordering(g, yperm);
  auto decomp = is_connected(g) && g.num_edges() > 0 ? decompose(g, ord) : ChainDecomposition{};
  return {std::move(g), std::move(ord), std::move(decomp)};
}

TEST(Frontier, Path8) {
  const auto p = prepare(testing::path8());
  const auto fi = frontier_indices(p.g, p.ord, p.decomp);
  EXPECT_EQ(fi.r_prime, 1u);
  EXPECT_EQ(fi.r, 2u);
  EXPECT_EQ(fi.s, 2u);
  EXPECT_EQ(fi.l, 3u);
  EXPECT_EQ(fi.p, 4u);
  EXPECT_EQ(fi.alpha, 1u);
  EXPECT_EQ(fi.k_alpha, 2u);
  EXPECT_EQ(fi.l_alpha, 2u);
}

TEST(Frontier, Complete) {
  const auto p = prepare(testing::complete(3, 4));
  const auto fi = frontier_indices(p.g, p.ord, p.decomp);
  EXPECT_EQ(fi.r, 3u);
  EXPECT_EQ(fi.s, 4u);
  EXPECT_FALSE(fi.l.has_value());
  EXPECT_FALSE(fi.p.has_value());
}

TEST(Frontier, Counterexample) {
  const auto p = prepare(testing::counterexample());
  const auto fi = frontier_indices(p.g, p.ord, p.decomp);
  EXPECT_EQ(fi.r_prime, 2u);
  EXPECT_EQ(fi.r, 1u);
  EXPECT_EQ(fi.s, 2u);
  EXPECT_EQ(fi.l, 3u);
  EXPECT_EQ(fi.p, 3u);
  EXPECT_EQ(fi.alpha, 2u);
  EXPECT_EQ(fi.k_alpha, 3u);
  EXPECT_FALSE(fi.l_alpha.has_value());
}

TEST(Frontier, EdgelessIsContractError) {
  const auto g = build_graph(1, 1, {});
  const auto ord = compute_lex_convex_ordering(g, identity_permutation(1));
  EXPECT_THROW(frontier_indices(g, ord, {}), ContractError);
}

TEST(Suffix, Path8Branches) {
  const auto p = prepare(testing::path8());
  const auto fi = frontier_indices(p.g, p.ord, p.decomp);
  const auto gp = reduce_to_suffix(p.g, p.ord, fi, SuffixBranch::GPrime);
  EXPECT_EQ(gp.sub.x_to_parent, (std::vector<std::size_t>{3, 4}));
  EXPECT_EQ(gp.sub.y_to_parent, (std::vector<std::size_t>{3, 4}));
  EXPECT_EQ(gp.sub.graph.num_edges(), 3u);
  const auto gt = reduce_to_suffix(p.g, p.ord, fi, SuffixBranch::GTilde);
  EXPECT_EQ(gt.sub.x_to_parent, (std::vector<std::size_t>{3, 4}));
  EXPECT_EQ(gt.sub.y_to_parent, (std::vector<std::size_t>{2, 3, 4}));
  EXPECT_EQ(gt.sub.graph.num_edges(), 4u);
}

TEST(Suffix, CompleteGPrimeIsEmpty) {
  const auto p = prepare(testing::complete(2, 3));
  const auto fi = frontier_indices(p.g, p.ord, p.decomp);
  const auto gp = reduce_to_suffix(p.g, p.ord, fi, SuffixBranch::GPrime);
  EXPECT_FALSE(gp.x_start.has_value());
  EXPECT_EQ(gp.sub.graph.num_vertices(), 0u);
}

TEST(SolveExact, Examples) {
  auto p = prepare(testing::counterexample());
  auto r = solve_exact(p.g, p.ord);
  EXPECT_EQ(r.gamma_ve, 1u);
  EXPECT_EQ(r.witness, VertexSet{y_vertex(2)});
  ASSERT_FALSE(r.trace.empty());
  EXPECT_EQ(r.trace.front().branch, Branch::Universal);

  p = prepare(testing::path8());
  r = solve_exact(p.g, p.ord);
  EXPECT_EQ(r.gamma_ve, 2u);
  EXPECT_EQ(r.trace.front().branch, Branch::GPrime);  // tie with G~ goes to G'
  EXPECT_EQ(r.trace.front().chosen, x_vertex(2));

  p = prepare(build_graph(1, 1, {{1, 1}}));
  r = solve_exact(p.g, p.ord);
  EXPECT_EQ(r.gamma_ve, 1u);
  EXPECT_EQ(r.witness, VertexSet{x_vertex(1)});
}

TEST(SolveExact, EdgelessAndDisconnected) {
  auto p = prepare(build_graph(3, 2, {}));
  EXPECT_EQ(solve_exact(p.g, p.ord).gamma_ve, 0u);
  // Two P8 copies side by side plus an isolated x.
  std::vector<Edge> edges;
  for (const Edge& e : testing::path8().edges()) {
    edges.push_back(e);
    edges.push_back({e.x + 4, e.y + 4});
  }
  p = prepare(build_graph(9, 8, edges));
  const auto r = solve_exact(p.g, p.ord);
  EXPECT_EQ(r.gamma_ve, 4u);
  EXPECT_TRUE(is_ve_dominating_set(p.g, r.witness));
  EXPECT_TRUE(std::any_of(r.trace.begin(), r.trace.end(),
                          [](const TraceStep& t) { return t.branch == Branch::ComponentSplit; }));
}

TEST(SolveExact, InvalidOrderingIsInputError) {
  const auto g = testing::path8();
  auto ord = compute_lex_convex_ordering(g, identity_permutation(4));
  std::swap(ord.xperm[0], ord.xperm[1]);
  EXPECT_THROW(solve_exact(g, ord), InputError);
}

TEST(SolveBaseline, Examples) {
  auto p = prepare(testing::counterexample());
  auto b = solve_baseline(p.g, p.ord, p.decomp);
  EXPECT_EQ(b.witness, (VertexSet{x_vertex(1), x_vertex(3)}));
  EXPECT_EQ(b.gamma_ve, 2u);

  p = prepare(testing::complete(3, 2));
  b = solve_baseline(p.g, p.ord, p.decomp);
  EXPECT_EQ(b.witness, VertexSet{x_vertex(3)});

  p = prepare(testing::path8());
  b = solve_baseline(p.g, p.ord, p.decomp);
  EXPECT_EQ(b.witness, (VertexSet{x_vertex(2), x_vertex(4)}));
}

TEST(SolveBaseline, DisconnectedIsContractError) {
  const auto g = build_graph(2, 2, {{1, 1}, {2, 2}});
  const auto ord = compute_lex_convex_ordering(g, identity_permutation(2));
  EXPECT_THROW(solve_baseline(g, ord, {}), ContractError);
}

// Oracle agreement, witness contract, baseline dominance, memo on/off, on
// shuffled labels so the convex order is not the identity.
TEST(SolveExact, AgreesWithOracleOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    const std::size_t n1 = 1 + seed % 8, n2 = 1 + (seed / 8) % 6;
    const auto inst = testing::random_instance(seed, n1, n2, 0.2 + (seed % 4) * 0.15);
    const auto p = prepare(inst.graph, inst.yperm);
    const auto exact = solve_exact(p.g, p.ord);
    const auto oracle = brute_force_gamma_ve(p.g);
    ASSERT_EQ(exact.gamma_ve, oracle.gamma_ve) << "seed " << seed;
    EXPECT_EQ(exact.witness.size(), exact.gamma_ve);
    EXPECT_TRUE(testing::naive_ve_dominates(p.g, exact.witness));

    SolveOptions naive;
    naive.memoize = false;
    EXPECT_EQ(solve_exact(p.g, p.ord, naive).gamma_ve, exact.gamma_ve);

    const auto base = solve_baseline(p.g, p.ord, p.decomp);
    EXPECT_TRUE(testing::naive_ve_dominates(p.g, base.witness));
    EXPECT_GE(base.gamma_ve, exact.gamma_ve);
  }
}

// Disjoint unions: value is the sum of the parts.
TEST(SolveExact, AdditiveOverComponents) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto a = testing::random_instance(seed, 4, 3, 0.4, false).graph;
    const auto b = testing::random_instance(seed + 1000, 3, 4, 0.4, false).graph;
    std::vector<Edge> edges = a.edges();
    for (const Edge& e : b.edges()) edges.push_back({e.x + a.n1(), e.y + a.n2()});
    const auto u = build_graph(a.n1() + b.n1(), a.n2() + b.n2(), edges);
    const auto pu = prepare(u), pa = prepare(a), pb = prepare(b);
    EXPECT_EQ(solve_exact(pu.g, pu.ord).gamma_ve,
              solve_exact(pa.g, pa.ord).gamma_ve + solve_exact(pb.g, pb.ord).gamma_ve);
    EXPECT_EQ(brute_force_gamma_ve(u).gamma_ve, solve_exact(pu.g, pu.ord).gamma_ve);
  }
}

// The first step of the solver against the explicit frontier indices and
// the explicitly rebuilt subproblems G' and G~.
TEST(SolveExact, TopLevelStepMatchesExplicitRecursion) {
  std::size_t checked = 0;
  for (std::uint64_t seed = 0; seed < 800; ++seed) {
    const auto inst = testing::random_instance(seed, 2 + seed % 9, 2 + seed % 7, 0.25);
    const auto p = prepare(inst.graph, inst.yperm);
    const auto r = solve_exact(p.g, p.ord);
    const TraceStep& top = r.trace.front();
    if (top.branch == Branch::Universal) continue;
    ++checked;
    const auto fi = frontier_indices(p.g, p.ord, p.decomp);
    const auto gp = reduce_to_suffix(p.g, p.ord, fi, SuffixBranch::GPrime);
    std::size_t best = brute_force_gamma_ve(gp.sub.graph).gamma_ve;
    if (fi.alpha) {
      const auto gt = reduce_to_suffix(p.g, p.ord, fi, SuffixBranch::GTilde);
      best = std::min(best, brute_force_gamma_ve(gt.sub.graph).gamma_ve);
    }
    ASSERT_EQ(r.gamma_ve, best + 1) << "seed " << seed;
    if (top.branch == Branch::GPrime) {
      EXPECT_EQ(top.chosen, x_vertex(p.ord.x_at(fi.r))) << "seed " << seed;
    } else {
      ASSERT_TRUE(fi.alpha.has_value());
      EXPECT_EQ(top.chosen, y_vertex(p.ord.y_at(*fi.alpha))) << "seed " << seed;
    }
  }
  EXPECT_GT(checked, 100u);
}

TEST(SolveExact, StatesBoundedBySuffixPairs) {
  const auto inst = testing::random_instance(99, 300, 300, 0.02);
  const auto p = prepare(inst.graph, inst.yperm);
  const auto r = solve_exact(p.g, p.ord);
  EXPECT_LE(r.states_evaluated, 301u * 301u);
  EXPECT_TRUE(is_ve_dominating_set(p.g, r.witness));
}

}  // namespace
}  // namespace veds
