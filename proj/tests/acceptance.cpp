// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "test_support.hpp"
#include "veds/chain_decomposition.hpp"
#include "veds/formats.hpp"
#include "veds/oracle.hpp"
#include "veds/ordering.hpp"
#include "veds/reductions.hpp"
#include "veds/solver.hpp"

namespace {

using namespace veds;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
  std::printf("criterion %d: %s  %s (%s)\n", id, ok ? "PASS" : "FAIL", what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

// Witness tallies shared by criteria 1-3 for criterion 7.
struct WitnessTally {
  std::size_t checked = 0;
  std::size_t bad = 0;
  void check(const BipartiteGraph& g, const SolveResult& r) {
    ++checked;
    if (r.witness.size() != r.gamma_ve || !testing::naive_ve_dominates(g, r.witness)) ++bad;
  }
} witnesses;

void criterion1() {
  const auto t0 = Clock::now();
  const std::size_t trials = 1000;
  const CrossCheckReport rep = cross_check(trials, 14, 20240611);

  // Second pass on the same kind of instances with Y labels shuffled, so
  // the exact solver also runs under non-identity orders; witnesses of both
  // solvers are checked here for criterion 7.
  std::size_t shuffled_ok = 0;
  const std::size_t shuffled = 1000;
  for (std::uint64_t t = 0; t < shuffled; ++t) {
    const std::uint64_t seed = splitmix64(t + 77);
    const std::size_t n1 = 1 + seed % 12;
    const std::size_t n2 = 1 + (seed >> 8) % (14 - n1);
    const auto inst = testing::random_instance(seed, n1, n2, 0.15 + 0.1 * static_cast<double>((seed >> 16) % 7));
    const auto ord = compute_lex_convex_ordering(inst.graph, inst.yperm);
    SolveOptions opts;
    opts.verify_witness = false;
    const auto exact = solve_exact(inst.graph, ord, opts);
    const auto base = solve_baseline(inst.graph, ord, decompose(inst.graph, ord));
    witnesses.check(inst.graph, exact);
    witnesses.check(inst.graph, base);
    if (exact.gamma_ve == brute_force_gamma_ve(inst.graph).gamma_ve) ++shuffled_ok;
  }
  witnesses.checked += 2 * trials;
  witnesses.bad += rep.witness_failures;

  const double secs = seconds_since(t0);
  const bool ok = rep.agreements == trials && rep.disagreements.empty() && shuffled_ok == shuffled &&
                  secs < 300.0;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%zu/%zu identity-order + %zu/%zu shuffled agree, n1+n2<=14, %.1fs < 300s; "
                "baseline worse on %zu",
                rep.agreements, trials, shuffled_ok, shuffled, secs, rep.baseline_gaps);
  report(1, ok, "exact solver equals brute force", buf);
  for (const auto& d : rep.disagreements) {
    std::printf("  trial %zu: exact %zu oracle %zu\n%s", d.trial, d.exact, d.oracle, d.instance.c_str());
  }
}

void criterion2() {
  const auto t0 = Clock::now();
  const auto file = parse_graph_text(read_text_file(std::string(VEDS_DATA_DIR) + "/counterexample.cbg"));
  const auto& g = file.graph;
  const auto ord = compute_lex_convex_ordering(g, *file.yorder);
  const auto base = solve_baseline(g, ord, decompose(g, ord));
  const auto exact = solve_exact(g, ord);
  const auto oracle = brute_force_gamma_ve(g);
  witnesses.check(g, base);
  witnesses.check(g, exact);
  const double secs = seconds_since(t0);
  const bool ok = base.gamma_ve == 2 && exact.gamma_ve == 1 && oracle.gamma_ve == 1 && secs < 1.0;
  char buf[256];
  std::snprintf(buf, sizeof buf, "baseline %zu %s, exact %zu %s, oracle %zu, %.4fs < 1s", base.gamma_ve,
                to_string(base.witness).c_str(), exact.gamma_ve, to_string(exact.witness).c_str(),
                oracle.gamma_ve, secs);
  report(2, ok, "baseline strictly worse on the shipped counterexample", buf);
}

// Every family of q <= p nonempty subsets of {1..p} as a multiset, for p <= 4.
std::vector<SetSystem> exhaustive_systems(std::size_t max_p) {
  std::vector<SetSystem> out;
  for (std::size_t p = 1; p <= max_p; ++p) {
    const std::size_t subsets = (1u << p) - 1;
    for (std::size_t q = 1; q <= p; ++q) {
      std::vector<std::size_t> pick(q, 1);  // non-decreasing subset masks
      while (true) {
        std::vector<std::vector<std::size_t>> sets;
        for (std::size_t mask : pick) {
          std::vector<std::size_t> s;
          for (std::size_t e = 1; e <= p; ++e) if (mask >> (e - 1) & 1u) s.push_back(e);
          sets.push_back(std::move(s));
        }
        auto ss = make_set_system(p, std::move(sets));
        if (ss.has_cover()) out.push_back(std::move(ss));
        std::size_t k = q;
        while (k > 0 && pick[k - 1] == subsets) --k;
        if (k == 0) break;
        ++pick[k - 1];
        for (std::size_t m = k; m < q; ++m) pick[m] = pick[k - 1];
      }
    }
  }
  return out;
}

void criteria3_4_8() {
  const auto t0 = Clock::now();
  std::vector<SetSystem> systems = exhaustive_systems(4);
  const std::size_t exhaustive = systems.size();
  for (std::uint64_t s = 0; s < 600; ++s) {
    systems.push_back(gen_random_set_system(5, 1 + s % 5, splitmix64(s + 31337)));
  }

  const VedSolver oracle_solver = [](const BipartiteGraph& g) { return brute_force_gamma_ve(g).witness; };
  std::size_t roundtrip_ok = 0, cert_ok = 0, certs = 0;
  std::size_t phase1_ok = 0, phase2_cases = 0, phase2_ok = 0;
  std::size_t convex_reduced = 0;
  std::size_t max_vertices = 0;
  for (const auto& ss : systems) {
    const auto min_cover = brute_force_min_cover(ss);
    const std::size_t t = min_cover->size();
    bool both = true;
    for (const auto& art : {reduce_star_convex(ss), reduce_comb_convex(ss)}) {
      max_vertices = std::max(max_vertices, art.graph.num_vertices());
      const auto brute = brute_force_gamma_ve(art.graph);
      witnesses.check(art.graph, brute);
      both = both && brute.gamma_ve == t + 1;
      ++certs;
      if (verify_tree_convexity(art.graph, art.cert).ok) ++cert_ok;

      // Reduced graphs are rarely convex; run the convex solvers where they
      // are. The factorial search is kept to n2 <= 7 to bound the run time.
      if (art.graph.n2() <= 7 && is_connected(art.graph)) {
        if (const auto perm = find_convex_ordering_exhaustive(art.graph)) {
          ++convex_reduced;
          const auto ord = compute_lex_convex_ordering(art.graph, *perm);
          SolveOptions opts;
          opts.verify_witness = false;
          const auto exact = solve_exact(art.graph, ord, opts);
          witnesses.check(art.graph, exact);
          witnesses.check(art.graph, solve_baseline(art.graph, ord, decompose(art.graph, ord)));
          both = both && exact.gamma_ve == brute.gamma_ve;
        }
      }
    }
    if (both) ++roundtrip_ok;

    const auto full = approx_set_cover(ss, ss.num_sets(), oracle_solver);
    if (!full.used_reduction && full.cover.size() == t && ss.is_cover(full.cover)) ++phase1_ok;
    if (t > 1) {
      ++phase2_cases;
      const auto approx = approx_set_cover(ss, 1, oracle_solver);
      if (approx.used_reduction && ss.is_cover(approx.cover)) ++phase2_ok;
    }
  }
  const double secs = seconds_since(t0);

  char buf[320];
  std::snprintf(buf, sizeof buf,
                "%zu/%zu systems (%zu exhaustive p<=4, %zu random p=5), star and comb, up to %zu "
                "vertices, %.1fs < 600s",
                roundtrip_ok, systems.size(), exhaustive, systems.size() - exhaustive, max_vertices, secs);
  report(3, roundtrip_ok == systems.size() && secs < 600.0, "min cover + 1 == gamma_ve of reduced graphs", buf);

  std::snprintf(buf, sizeof buf, "%zu/%zu certificates over %zu systems (%zu random)", cert_ok, certs,
                systems.size(), systems.size() - exhaustive);
  report(4, cert_ok == certs && systems.size() - exhaustive >= 500, "tree-convexity certificates hold", buf);

  std::snprintf(buf, sizeof buf, "phase 1 minimum on %zu/%zu; k=1 reduction path valid on %zu/%zu",
                phase1_ok, systems.size(), phase2_ok, phase2_cases);
  report(8, phase1_ok == systems.size() && phase2_ok == phase2_cases && phase2_cases > 0,
         "approx_set_cover phases", buf);
  std::printf("  (convex reduced graphs also solved exactly: %zu)\n", convex_reduced);
}

void criterion5() {
  const auto t0 = Clock::now();
  const std::size_t trials = 1000;
  std::size_t passed = 0, max_n = 0, chains = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const std::uint64_t seed = splitmix64(t + 555);
    const std::size_t n = 2 + seed % 199;  // n1 + n2 in [2, 200]
    const std::size_t n1 = 1 + (seed >> 9) % (n - 1);
    const std::size_t n2 = n - n1;
    const double density = 0.02 + 0.05 * static_cast<double>((seed >> 20) % 6);
    const auto inst = testing::random_instance(seed, n1, n2, density);
    const auto ord = compute_lex_convex_ordering(inst.graph, inst.yperm);
    const auto d = decompose(inst.graph, ord);
    const auto rep = verify_decomposition_lemma(inst.graph, d);
    if (rep.all_passed() && !rep.tail_has_y) ++passed;
    max_n = std::max(max_n, n);
    chains += d.chains.size();
  }
  char buf[256];
  std::snprintf(buf, sizeof buf, "%zu/%zu connected instances, n<=%zu, %zu chains checked, %.1fs", passed,
                trials, max_n, chains, seconds_since(t0));
  report(5, passed == trials, "decomposition lemma clauses (a)(b)(c)", buf);
}

void criterion6() {
  const std::vector<std::size_t> sizes{200, 400, 800, 1600};
  std::vector<double> per_solve;
  double worst_single = 0;
  std::string detail;
  for (std::size_t n : sizes) {
    const std::size_t h = n / 2;
    const double density = std::min(1.0, 3.0 * std::log(static_cast<double>(h)) / static_cast<double>(h));
    double total = 0;
    std::size_t solves = 0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto g = gen_random_convex_bipartite({h, h, density, seed * 1000 + n, true});
      const auto ord = compute_lex_convex_ordering(g, identity_permutation(h));
      // Repeat until the clock has something to measure.
      const auto t0 = Clock::now();
      std::size_t reps = 0;
      do {
        const auto t1 = Clock::now();
        const auto r = solve_exact(g, ord);
        worst_single = std::max(worst_single, seconds_since(t1));
        if (r.witness.size() != r.gamma_ve) worst_single = 1e9;
        ++reps;
      } while (seconds_since(t0) < 0.1);
      total += seconds_since(t0);
      solves += reps;
    }
    per_solve.push_back(total / static_cast<double>(solves));
    char buf[64];
    std::snprintf(buf, sizeof buf, "n=%zu %.3fms; ", n, 1e3 * per_solve.back());
    detail += buf;
  }
  const double slope = std::log(per_solve[3] / per_solve[2]) / std::log(2.0);
  char buf[128];
  std::snprintf(buf, sizeof buf, "slope(800->1600) %.2f <= 2.5, slowest single solve %.3fs < 10s", slope,
                worst_single);
  report(6, slope <= 2.5 && worst_single < 10.0, "memoised exact solver scales polynomially",
         detail + buf);
}

void criterion7() {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu solver outputs checked, %zu invalid", witnesses.checked, witnesses.bad);
  report(7, witnesses.bad == 0 && witnesses.checked > 0, "witnesses are VED-sets of the reported size", buf);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criteria3_4_8();
  criterion5();
  criterion6();
  criterion7();
  std::printf("%s: %d criterion(s) failed\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
