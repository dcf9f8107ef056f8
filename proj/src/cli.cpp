#include "veds/cli.hpp"

#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "veds/chain_decomposition.hpp"
#include "veds/errors.hpp"
#include "veds/formats.hpp"
#include "veds/oracle.hpp"
#include "veds/ordering.hpp"
#include "veds/reductions.hpp"
#include "veds/solver.hpp"

namespace veds::cli {

namespace {

using nlohmann::json;

constexpr const char* kGrammar = R"(Graph file (.cbg):
  graph <n1> <n2>
  edge <i> <j>              one line per edge x_i ~ y_j, 1-based
  yorder <j1> <j2> ... <jn2> optional convex ordering of Y
  '#' starts a comment; blank lines are ignored.

Set-system file (.scp):
  universe <p>
  set <j>: <e1> <e2> ...    j = 1..q, elements in 1..p

Vertex names are x<i> / y<j>; --set takes them comma- or space-separated.
Exit codes: 0 ok, 1 domain/contract error, 2 input/parse error, 3 capacity.)";

json vertex_array(const VertexSet& set) {
  json arr = json::array();
  for (const auto& v : set) arr.push_back(to_string(v));
  return arr;
}

std::string join(const std::vector<std::size_t>& xs, const char* prefix, const char* sep = ",") {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) s += sep;
    s += prefix + std::to_string(xs[k]);
  }
  return s;
}

GraphFile load_graph(const std::string& path) { return parse_graph_text(read_text_file(path)); }

// Declared yorder if present, else the exhaustive search for small n2.
LexConvexOrdering ordering_for(const GraphFile& file) {
  if (file.yorder) return compute_lex_convex_ordering(file.graph, *file.yorder);
  if (file.graph.n2() > kMaxExhaustiveOrderingY) {
    throw CapacityError("no yorder declared and n2 = " + std::to_string(file.graph.n2()) +
                        " is above the exhaustive-search limit of " +
                        std::to_string(kMaxExhaustiveOrderingY) + "; add a 'yorder' line");
  }
  auto perm = find_convex_ordering_exhaustive(file.graph);
  if (!perm) throw DomainError("graph has no convex ordering of Y");
  return compute_lex_convex_ordering(file.graph, *perm);
}

struct Options {
  std::string input;
  std::string algorithm = "exact";
  bool emit_set = false;
  bool trace = false;
  bool json = false;
  bool no_memo = false;
  std::string set_text;
  std::string target = "star";
  std::string out_path;
  bool certify = false;
  std::size_t n1 = 0, n2 = 0;
  double density = 0.5;
  std::uint64_t seed = 0;
  bool connected = false;
  std::size_t trials = 100;
  std::size_t max_n = 14;
};

int cmd_solve(const Options& o, std::ostream& out) {
  const GraphFile file = load_graph(o.input);
  const auto& g = file.graph;
  const auto start = std::chrono::steady_clock::now();
  SolveResult result;
  if (o.algorithm == "bruteforce") {
    result = brute_force_gamma_ve(g);
    result.trace.clear();
  } else {
    const LexConvexOrdering ord = ordering_for(file);
    if (o.algorithm == "exact") {
      SolveOptions opts;
      opts.memoize = !o.no_memo;
      result = solve_exact(g, ord, opts);
    } else {
      result = solve_baseline(g, ord, decompose(g, ord));
    }
  }
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (o.json) {
    json j;
    j["algorithm"] = o.algorithm;
    j["gamma_ve"] = result.gamma_ve;
    j["witness"] = vertex_array(result.witness);
    j["elapsed_ms"] = elapsed;
    if (o.trace) {
      json steps = json::array();
      for (const auto& t : result.trace) {
        steps.push_back({{"x_start", t.x_start},
                         {"y_start", t.y_start},
                         {"branch", to_string(t.branch)},
                         {"chosen", t.chosen ? json(to_string(*t.chosen)) : json(nullptr)},
                         {"gamma_ve", t.gamma_ve}});
      }
      j["trace"] = steps;
    }
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "gamma_ve = " << result.gamma_ve << '\n';
  if (o.emit_set) out << "witness = " << to_string(result.witness) << '\n';
  if (o.trace) {
    for (const auto& t : result.trace) {
      out << "step x_start=" << t.x_start << " y_start=" << t.y_start
          << " branch=" << to_string(t.branch)
          << " chosen=" << (t.chosen ? to_string(*t.chosen) : "-") << " gamma_ve=" << t.gamma_ve
          << '\n';
    }
  }
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const GraphFile file = load_graph(o.input);
  const VertexSet d = parse_vertex_list(o.set_text);
  for (const auto& v : d) {
    if (!file.graph.contains(v)) throw InputError("vertex " + to_string(v) + " is not in the graph");
  }
  const auto missed = first_undominated_edge(file.graph, d);
  if (o.json) {
    json j{{"valid", !missed.has_value()}, {"set", vertex_array(d)}};
    if (missed) j["undominated_edge"] = {to_string(x_vertex(missed->x)), to_string(y_vertex(missed->y))};
    out << j.dump(2) << '\n';
  } else if (missed) {
    out << "INVALID: edge x" << missed->x << " y" << missed->y << " is not ve-dominated\n";
  } else {
    out << "VALID\n";
  }
  return missed ? 1 : 0;
}

int cmd_order(const Options& o, std::ostream& out) {
  const GraphFile file = load_graph(o.input);
  const LexConvexOrdering ord = ordering_for(file);
  if (o.json) {
    json rows = json::array();
    for (std::size_t p = 1; p <= ord.xperm.size(); ++p) {
      const auto& span = ord.interval_x(p);
      rows.push_back({{"position", p},
                      {"x", "x" + std::to_string(ord.x_at(p))},
                      {"left", span ? json(span->left) : json(nullptr)},
                      {"right", span ? json(span->right) : json(nullptr)}});
    }
    out << json{{"xperm", ord.xperm}, {"yperm", ord.yperm}, {"intervals", rows}}.dump(2) << '\n';
    return 0;
  }
  out << "yperm: " << join(ord.yperm, "y", " ") << '\n';
  out << "xperm: " << join(ord.xperm, "x", " ") << '\n';
  out << std::left << std::setw(6) << "pos" << std::setw(8) << "x" << std::setw(6) << "left"
      << "right\n";
  for (std::size_t p = 1; p <= ord.xperm.size(); ++p) {
    const auto& span = ord.interval_x(p);
    out << std::setw(6) << p << std::setw(8) << ("x" + std::to_string(ord.x_at(p)));
    if (span) {
      out << std::setw(6) << span->left << span->right << '\n';
    } else {
      out << std::setw(6) << "-" << "-\n";
    }
  }
  return 0;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const GraphFile file = load_graph(o.input);
  const LexConvexOrdering ord = ordering_for(file);
  const ChainDecomposition dec = decompose(file.graph, ord);
  const LemmaReport rep = verify_decomposition_lemma(file.graph, dec);
  if (o.json) {
    json chains = json::array();
    for (std::size_t c = 0; c < dec.chains.size(); ++c) {
      chains.push_back({{"xs", dec.chains[c].xs}, {"ys", dec.chains[c].ys}, {"stranded", dec.isolated_sets[c]}});
    }
    json clauses = json::array();
    for (const auto& c : rep.clauses) {
      clauses.push_back({{"chain", c.chain},
                         {"a", c.stranded_adjacent},
                         {"b", c.successor_touches},
                         {"c", c.no_long_overlap},
                         {"detail", c.detail}});
    }
    out << json{{"chains", chains},
                {"tail_isolated", vertex_array(dec.tail_isolated)},
                {"ends_with_chain_remainder", dec.ends_with_chain_remainder},
                {"lemma",
                 {{"partition_ok", rep.partition_ok},
                  {"chains_are_chain_graphs", rep.chains_are_chain_graphs},
                  {"tail_has_y", rep.tail_has_y},
                  {"clauses", clauses},
                  {"passed", rep.all_passed()}}}}
               .dump(2)
        << '\n';
    return 0;
  }
  for (std::size_t c = 0; c < dec.chains.size(); ++c) {
    out << "H" << c + 1 << ": X={" << join(dec.chains[c].xs, "x") << "} Y={"
        << join(dec.chains[c].ys, "y") << "}\n";
    out << "J" << c + 1 << ": {" << join(dec.isolated_sets[c], "x") << "}\n";
  }
  out << "tail: " << to_string(dec.tail_isolated) << '\n';
  auto ok = [](bool b) { return b ? "ok" : "FAIL"; };
  out << "lemma: partition " << ok(rep.partition_ok) << ", chain graphs "
      << ok(rep.chains_are_chain_graphs) << '\n';
  for (const auto& c : rep.clauses) {
    out << "  H" << c.chain << ": (a) " << ok(c.stranded_adjacent) << " (b) "
        << ok(c.successor_touches) << " (c) " << ok(c.no_long_overlap);
    if (!c.detail.empty()) out << "  " << c.detail;
    out << '\n';
  }
  out << "lemma " << (rep.all_passed() ? "PASS" : "FAIL") << '\n';
  return 0;
}

int cmd_reduce(const Options& o, std::ostream& out) {
  const SetSystem ss = parse_set_system_text(read_text_file(o.input));
  const ReductionArtifact art = o.target == "star" ? reduce_star_convex(ss) : reduce_comb_convex(ss);
  const std::string graph_text = write_graph_text(art.graph);
  const std::string cert_text = write_certificate_text(art.cert);
  if (!o.out_path.empty()) {
    write_text_file(o.out_path, graph_text);
    write_text_file(o.out_path + ".tree", cert_text);
    out << "wrote " << o.out_path << " and " << o.out_path << ".tree\n";
  } else {
    out << graph_text << cert_text;
  }
  if (art.coverless) out << "# coverless: some element lies in no set\n";
  if (o.certify) {
    const auto check = verify_tree_convexity(art.graph, art.cert);
    out << "# certificate " << (check.ok ? "OK" : "FAILED at y" + std::to_string(check.violating_y)) << '\n';
    if (!check.ok) return 1;
  }
  // Roles in vertex order.
  std::vector<std::pair<VertexRef, std::string>> roles;
  for (const auto& [name, v] : art.roles) roles.emplace_back(v, name);
  std::sort(roles.begin(), roles.end());
  for (const auto& [v, name] : roles) out << "# " << to_string(v) << " = " << name << '\n';
  return 0;
}

int cmd_oracle_ve(const Options& o, std::ostream& out) {
  const GraphFile file = load_graph(o.input);
  const SolveResult r = brute_force_gamma_ve(file.graph);
  if (o.json) {
    out << json{{"gamma_ve", r.gamma_ve}, {"witness", vertex_array(r.witness)}}.dump(2) << '\n';
  } else {
    out << "gamma_ve = " << r.gamma_ve << "\nwitness = " << to_string(r.witness) << '\n';
  }
  return 0;
}

int cmd_oracle_setcover(const Options& o, std::ostream& out) {
  const SetSystem ss = parse_set_system_text(read_text_file(o.input));
  const auto cover = brute_force_min_cover(ss);
  if (o.json) {
    out << json{{"cover", cover ? json(*cover) : json(nullptr)},
                {"size", cover ? json(cover->size()) : json(nullptr)}}
               .dump(2)
        << '\n';
  } else if (cover) {
    out << "min_cover = " << cover->size() << "\ncover = {" << join(*cover, "C") << "}\n";
  } else {
    out << "min_cover = none\n";
  }
  return 0;
}

int cmd_gen(const Options& o, std::ostream& out) {
  GeneratorConfig cfg;
  cfg.n1 = o.n1;
  cfg.n2 = o.n2;
  cfg.density = o.density;
  cfg.seed = o.seed;
  cfg.require_connected = o.connected;
  const BipartiteGraph g = gen_random_convex_bipartite(cfg);
  const std::string text = write_graph_text(g, identity_permutation(g.n2()));
  if (o.out_path.empty()) {
    out << text;
  } else {
    write_text_file(o.out_path, text);
  }
  return 0;
}

int cmd_bench(const Options& o, std::ostream& out) {
  const auto start = std::chrono::steady_clock::now();
  const CrossCheckReport rep = cross_check(o.trials, o.max_n, o.seed);
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (o.json) {
    json dis = json::array();
    for (const auto& d : rep.disagreements) {
      dis.push_back({{"trial", d.trial}, {"exact", d.exact}, {"oracle", d.oracle}, {"instance", d.instance}});
    }
    out << json{{"trials", rep.trials},
                {"agreements", rep.agreements},
                {"disagreements", dis},
                {"witness_failures", rep.witness_failures},
                {"baseline_gaps", rep.baseline_gaps},
                {"max_baseline_gap", rep.max_baseline_gap},
                {"total_baseline_gap", rep.total_baseline_gap},
                {"elapsed_ms", elapsed}}
               .dump(2)
        << '\n';
  } else {
    out << "trials: " << rep.trials << "\nagreements: " << rep.agreements
        << "\ndisagreements: " << rep.disagreements.size()
        << "\nwitness failures: " << rep.witness_failures
        << "\nbaseline worse than exact: " << rep.baseline_gaps << " (max gap "
        << rep.max_baseline_gap << ", total " << rep.total_baseline_gap << ")\n"
        << "elapsed_ms: " << std::fixed << std::setprecision(1) << elapsed << '\n';
    for (const auto& d : rep.disagreements) {
      out << "# trial " << d.trial << ": exact " << d.exact << " vs oracle " << d.oracle << '\n'
          << d.instance;
    }
  }
  return rep.disagreements.empty() && rep.witness_failures == 0 ? 0 : 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum vertex-edge domination on convex bipartite graphs", "veds"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "Compute gamma_ve of a graph file");
  solve->add_option("file", o.input, "Graph file")->required();
  solve->add_option("--algorithm", o.algorithm, "exact, baseline or bruteforce")
      ->check(CLI::IsMember({"exact", "baseline", "bruteforce"}));
  solve->add_flag("--emit-set", o.emit_set, "Print the witness set");
  solve->add_flag("--trace", o.trace, "Print the recursion trace");
  solve->add_flag("--no-memo", o.no_memo, "Disable memoisation (exponential; small inputs only)");
  solve->add_flag("--json", o.json, "JSON output");

  auto* verify = app.add_subcommand("verify", "Check whether a vertex set is ve-dominating");
  verify->add_option("file", o.input, "Graph file")->required();
  verify->add_option("--set", o.set_text, "Vertices, e.g. \"x1,y2\"")->required();
  verify->add_flag("--json", o.json, "JSON output");

  auto* order = app.add_subcommand("order", "Print the lex-convex ordering and intervals");
  order->add_option("file", o.input, "Graph file")->required();
  order->add_flag("--json", o.json, "JSON output");

  auto* decomp = app.add_subcommand("decompose", "Chain decomposition and its lemma report");
  decomp->add_option("file", o.input, "Graph file")->required();
  decomp->add_flag("--json", o.json, "JSON output");

  auto* reduce = app.add_subcommand("reduce", "Reduce a set system to a star- or comb-convex graph");
  reduce->add_option("file", o.input, "Set-system file")->required();
  reduce->add_option("--target", o.target, "star or comb")->check(CLI::IsMember({"star", "comb"}));
  reduce->add_option("--out", o.out_path, "Write the graph here and the certificate to <out>.tree");
  reduce->add_flag("--certify", o.certify, "Check tree-convexity against the certificate");

  auto* oracle = app.add_subcommand("oracle", "Brute-force ground truth");
  oracle->require_subcommand(1);
  auto* oracle_ve = oracle->add_subcommand("ve", "Exhaustive gamma_ve (n1 + n2 <= 24)");
  oracle_ve->add_option("file", o.input, "Graph file")->required();
  oracle_ve->add_flag("--json", o.json, "JSON output");
  auto* oracle_sc = oracle->add_subcommand("setcover", "Exhaustive minimum set cover (q <= 20)");
  oracle_sc->add_option("file", o.input, "Set-system file")->required();
  oracle_sc->add_flag("--json", o.json, "JSON output");

  auto* gen = app.add_subcommand("gen", "Random instance generation");
  gen->require_subcommand(1);
  auto* gen_convex = gen->add_subcommand("convex", "Random convex bipartite graph with yorder");
  gen_convex->add_option("--n1", o.n1, "X side size")->required()->check(CLI::PositiveNumber);
  gen_convex->add_option("--n2", o.n2, "Y side size")->required()->check(CLI::PositiveNumber);
  gen_convex->add_option("--density", o.density, "Mean interval length / n2, in (0, 1]");
  gen_convex->add_option("--seed", o.seed, "Seed");
  gen_convex->add_flag("--connected", o.connected, "Redraw until connected");
  gen_convex->add_option("--out", o.out_path, "Output file (default stdout)");

  auto* bench = app.add_subcommand("bench", "Cross-check exact solver against brute force");
  bench->add_option("--trials", o.trials, "Number of random instances");
  bench->add_option("--max-n", o.max_n, "Cap on n1 + n2 (2..24)")->check(CLI::Range(2, 24));
  bench->add_option("--seed", o.seed, "Seed");
  bench->add_flag("--json", o.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (order->parsed()) return cmd_order(o, out);
    if (decomp->parsed()) return cmd_decompose(o, out);
    if (reduce->parsed()) return cmd_reduce(o, out);
    if (oracle_ve->parsed()) return cmd_oracle_ve(o, out);
    if (oracle_sc->parsed()) return cmd_oracle_setcover(o, out);
    if (gen_convex->parsed()) return cmd_gen(o, out);
    if (bench->parsed()) return cmd_bench(o, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return 3;
  } catch (const ContractError& e) {
    err << "contract error: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return 1;
  } catch (const GenerationError& e) {
    err << "generation error: " << e.what() << '\n';
    return 1;
  }
  err << "no subcommand given\n";
  return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"veds"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace veds::cli
