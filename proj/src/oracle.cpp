#include "veds/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>

#include "veds/chain_decomposition.hpp"
#include "veds/errors.hpp"
#include "veds/formats.hpp"
#include "veds/ordering.hpp"

namespace veds {

namespace {

// Visits the k-subsets of {0..n-1} in lexicographic order until `visit`
// returns true. Returns whether it stopped early.
template <typename Visit>
bool for_each_combination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return false;
  std::vector<std::size_t> pick(k);
  for (std::size_t t = 0; t < k; ++t) pick[t] = t;
  while (true) {
    if (visit(pick)) return true;
    std::size_t t = k;
    while (t > 0 && pick[t - 1] == n - k + t - 1) --t;
    if (t == 0) return false;
    ++pick[t - 1];
    for (std::size_t m = t; m < k; ++m) pick[m] = pick[m - 1] + 1;
  }
}

// Portable draws on top of mt19937_64, whose output sequence is fixed by
// the standard (the std distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SolveResult brute_force_gamma_ve(const BipartiteGraph& g) {
  const std::size_t n1 = g.n1();
  const std::size_t n = g.num_vertices();
  if (n > kMaxBruteForceVertices) {
    throw CapacityError("brute force handles at most " + std::to_string(kMaxBruteForceVertices) +
                        " vertices, got " + std::to_string(n));
  }
  std::vector<std::uint32_t> closed(n, 0);
  for (std::size_t i = 1; i <= n1; ++i) {
    closed[i - 1] |= 1u << (i - 1);
    for (std::size_t j : g.neighbors_of_x(i)) {
      closed[i - 1] |= 1u << (n1 + j - 1);
      closed[n1 + j - 1] |= 1u << (i - 1);
    }
  }
  for (std::size_t j = 1; j <= g.n2(); ++j) closed[n1 + j - 1] |= 1u << (n1 + j - 1);

  std::vector<std::uint32_t> targets;
  for (const Edge& e : g.edges()) targets.push_back(closed[e.x - 1] | closed[n1 + e.y - 1]);
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

  SolveResult result;
  for (std::size_t k = 0; k <= n; ++k) {
    const bool found = for_each_combination(n, k, [&](const std::vector<std::size_t>& pick) {
      ++result.states_evaluated;
      std::uint32_t mask = 0;
      for (std::size_t b : pick) mask |= 1u << b;
      for (std::uint32_t t : targets) {
        if ((t & mask) == 0) return false;
      }
      for (std::size_t b : pick) {
        result.witness.insert(b < n1 ? x_vertex(b + 1) : y_vertex(b - n1 + 1));
      }
      return true;
    });
    if (found) {
      result.gamma_ve = k;
      return result;
    }
  }
  throw std::logic_error("the full vertex set always ve-dominates");
}

std::optional<std::vector<std::size_t>> brute_force_min_cover(const SetSystem& ss) {
  const std::size_t q = ss.num_sets();
  if (q > kMaxBruteForceSets) {
    throw CapacityError("brute-force set cover handles at most " + std::to_string(kMaxBruteForceSets) +
                        " sets, got " + std::to_string(q));
  }
  const std::size_t words = (ss.universe + 63) / 64;
  std::vector<std::vector<std::uint64_t>> bits(q, std::vector<std::uint64_t>(words, 0));
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t e : ss.sets[j]) bits[j][(e - 1) / 64] |= 1ULL << ((e - 1) % 64);
  }
  std::vector<std::uint64_t> full(words, ~0ULL);
  if (ss.universe % 64 != 0) full.back() = (1ULL << (ss.universe % 64)) - 1;

  std::optional<std::vector<std::size_t>> best;
  for (std::size_t k = 0; k <= q && !best; ++k) {
    for_each_combination(q, k, [&](const std::vector<std::size_t>& pick) {
      std::vector<std::uint64_t> acc(words, 0);
      for (std::size_t j : pick) {
        for (std::size_t w = 0; w < words; ++w) acc[w] |= bits[j][w];
      }
      if (acc != full) return false;
      best.emplace();
      for (std::size_t j : pick) best->push_back(j + 1);
      return true;
    });
  }
  return best;
}

BipartiteGraph gen_random_convex_bipartite(const GeneratorConfig& cfg) {
  if (cfg.n1 < 1 || cfg.n2 < 1) throw InputError("generator needs n1, n2 >= 1");
  if (!(cfg.density > 0.0 && cfg.density <= 1.0)) throw InputError("density must lie in (0, 1]");

  const double mean = std::max(1.0, cfg.density * static_cast<double>(cfg.n2));
  Rng rng(cfg.seed);
  auto draw_length = [&]() -> std::size_t {
    if (mean <= 1.0) return 1;
    const double stop = 1.0 / mean;
    const double u = rng.unit();
    const double extra = std::floor(std::log1p(-u) / std::log1p(-stop));
    return static_cast<std::size_t>(std::min<double>(static_cast<double>(cfg.n2), 1.0 + extra));
  };

  constexpr int kRetries = 1000;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= cfg.n1; ++i) {
      const std::size_t len = draw_length();
      const std::size_t start = 1 + rng.below(cfg.n2 - len + 1);
      for (std::size_t j = start; j < start + len; ++j) edges.push_back({i, j});
    }
    BipartiteGraph g = build_graph(cfg.n1, cfg.n2, edges);
    if (!cfg.require_connected || is_connected(g)) return g;
  }
  throw GenerationError("no connected instance after " + std::to_string(kRetries) +
                        " draws (n1=" + std::to_string(cfg.n1) + ", n2=" + std::to_string(cfg.n2) +
                        "); try a higher density");
}

SetSystem gen_random_set_system(std::size_t p, std::size_t q, std::uint64_t seed) {
  if (p < 1 || q < 1 || q > p) throw InputError("random set systems need 1 <= q <= p");
  Rng rng(seed);
  const double keep = 0.2 + 0.5 * rng.unit();
  std::vector<std::vector<std::size_t>> sets(q);
  for (auto& s : sets) {
    for (std::size_t e = 1; e <= p; ++e) {
      if (rng.unit() < keep) s.push_back(e);
    }
    if (s.empty()) s.push_back(1 + rng.below(p));
  }
  for (std::size_t e = 1; e <= p; ++e) {
    const bool covered = std::any_of(sets.begin(), sets.end(), [e](const auto& s) {
      return std::find(s.begin(), s.end(), e) != s.end();
    });
    if (!covered) sets[rng.below(q)].push_back(e);
  }
  return make_set_system(p, std::move(sets));
}

CrossCheckReport cross_check(std::size_t trials, std::size_t size_cap, std::uint64_t seed) {
  if (size_cap < 2) throw InputError("cross_check needs size_cap >= 2");
  CrossCheckReport report;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = splitmix64(seed ^ splitmix64(t));
    Rng rng(trial_seed);
    GeneratorConfig cfg;
    cfg.n1 = 1 + rng.below(size_cap - 1);
    cfg.n2 = 1 + rng.below(size_cap - cfg.n1);
    cfg.density = 0.15 + 0.7 * rng.unit();
    cfg.seed = trial_seed;
    cfg.require_connected = true;
    BipartiteGraph g;
    while (true) {
      try {
        g = gen_random_convex_bipartite(cfg);
        break;
      } catch (const GenerationError&) {
        cfg.density = std::min(1.0, cfg.density + 0.25);  // density 1 is K_{n1,n2}
      }
    }

    const auto yperm = identity_permutation(g.n2());
    const LexConvexOrdering ord = compute_lex_convex_ordering(g, yperm);
    SolveOptions opts;
    opts.verify_witness = false;  // counted below instead of thrown
    const SolveResult exact = solve_exact(g, ord, opts);
    const SolveResult oracle = brute_force_gamma_ve(g);
    const SolveResult baseline = solve_baseline(g, ord, decompose(g, ord));

    auto witness_ok = [&](const SolveResult& r) {
      return r.witness.size() == r.gamma_ve && is_ve_dominating_set(g, r.witness);
    };
    if (!witness_ok(exact) || !witness_ok(baseline)) ++report.witness_failures;

    if (exact.gamma_ve == oracle.gamma_ve) {
      ++report.agreements;
    } else {
      report.disagreements.push_back({t, exact.gamma_ve, oracle.gamma_ve, write_graph_text(g, yperm)});
    }
    if (baseline.gamma_ve > exact.gamma_ve) {
      const std::size_t gap = baseline.gamma_ve - exact.gamma_ve;
      ++report.baseline_gaps;
      report.total_baseline_gap += gap;
      report.max_baseline_gap = std::max(report.max_baseline_gap, gap);
    }
  }
  return report;
}

}  // namespace veds
