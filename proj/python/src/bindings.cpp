#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "veds/chain_decomposition.hpp"
#include "veds/errors.hpp"
#include "veds/formats.hpp"
#include "veds/oracle.hpp"
#include "veds/ordering.hpp"
#include "veds/reductions.hpp"
#include "veds/solver.hpp"

namespace py = pybind11;
using namespace veds;

namespace {

std::vector<std::string> names(const VertexSet& set) {
  std::vector<std::string> out;
  for (const auto& v : set) out.push_back(to_string(v));
  return out;
}

VertexSet parse_names(const std::vector<std::string>& vs) {
  VertexSet out;
  for (const auto& s : vs) out.insert(parse_vertex(s));
  return out;
}

std::vector<std::size_t> order_or_identity(const BipartiteGraph& g,
                                           const std::optional<std::vector<std::size_t>>& yorder) {
  return yorder ? *yorder : identity_permutation(g.n2());
}

py::dict result_dict(const SolveResult& r) {
  py::list trace;
  for (const auto& t : r.trace) {
    py::dict step;
    step["x_start"] = t.x_start;
    step["y_start"] = t.y_start;
    step["branch"] = to_string(t.branch);
    step["chosen"] = t.chosen ? py::object(py::str(to_string(*t.chosen))) : py::object(py::none());
    step["gamma_ve"] = t.gamma_ve;
    trace.append(step);
  }
  py::dict d;
  d["gamma_ve"] = r.gamma_ve;
  d["witness"] = names(r.witness);
  d["trace"] = trace;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Minimum vertex-edge domination on convex bipartite graphs";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
  py::register_exception<GenerationError>(m, "GenerationError", PyExc_RuntimeError);
  py::register_exception<ContractError>(m, "ContractError", PyExc_ValueError);

  py::class_<BipartiteGraph>(m, "Graph")
      .def_property_readonly("n1", &BipartiteGraph::n1)
      .def_property_readonly("n2", &BipartiteGraph::n2)
      .def_property_readonly("num_edges", &BipartiteGraph::num_edges)
      .def("edges",
           [](const BipartiteGraph& g) {
             std::vector<std::pair<std::size_t, std::size_t>> out;
             for (const Edge& e : g.edges()) out.emplace_back(e.x, e.y);
             return out;
           })
      .def("neighbors",
           [](const BipartiteGraph& g, const std::string& v) {
             const VertexRef ref = parse_vertex(v);
             if (!g.contains(ref)) throw InputError("vertex " + v + " is not in the graph");
             const auto nb = g.neighbors(ref);
             return std::vector<std::size_t>(nb.begin(), nb.end());
           })
      .def("__eq__", [](const BipartiteGraph& a, const BipartiteGraph& b) { return a == b; })
      .def("__repr__", [](const BipartiteGraph& g) {
        return "<Graph n1=" + std::to_string(g.n1()) + " n2=" + std::to_string(g.n2()) +
               " m=" + std::to_string(g.num_edges()) + ">";
      });

  m.def(
      "build_graph",
      [](std::size_t n1, std::size_t n2, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
        std::vector<Edge> es;
        for (const auto& [x, y] : edges) es.push_back({x, y});
        return build_graph(n1, n2, es);
      },
      py::arg("n1"), py::arg("n2"), py::arg("edges"));

  m.def(
      "is_ve_dominating_set",
      [](const BipartiteGraph& g, const std::vector<std::string>& d) {
        return is_ve_dominating_set(g, parse_names(d));
      },
      py::arg("graph"), py::arg("vertices"));

  m.def(
      "parse_graph",
      [](const std::string& text) {
        GraphFile f = parse_graph_text(text);
        return py::make_tuple(f.graph, f.yorder);
      },
      py::arg("text"), "Returns (graph, yorder or None).");
  m.def("write_graph", &write_graph_text, py::arg("graph"), py::arg("yorder") = py::none());

  m.def(
      "lex_convex_ordering",
      [](const BipartiteGraph& g, const std::optional<std::vector<std::size_t>>& yorder) {
        const auto ord = compute_lex_convex_ordering(g, order_or_identity(g, yorder));
        py::list spans;
        for (const auto& s : ord.x_span) {
          spans.append(s ? py::object(py::make_tuple(s->left, s->right)) : py::object(py::none()));
        }
        py::dict d;
        d["xperm"] = ord.xperm;
        d["yperm"] = ord.yperm;
        d["intervals"] = spans;
        return d;
      },
      py::arg("graph"), py::arg("yorder") = py::none());

  m.def("find_convex_ordering", &find_convex_ordering_exhaustive, py::arg("graph"));

  m.def(
      "solve_exact",
      [](const BipartiteGraph& g, const std::optional<std::vector<std::size_t>>& yorder, bool memoize) {
        SolveOptions opts;
        opts.memoize = memoize;
        return result_dict(solve_exact(g, compute_lex_convex_ordering(g, order_or_identity(g, yorder)), opts));
      },
      py::arg("graph"), py::arg("yorder") = py::none(), py::arg("memoize") = true);

  m.def(
      "solve_baseline",
      [](const BipartiteGraph& g, const std::optional<std::vector<std::size_t>>& yorder) {
        const auto ord = compute_lex_convex_ordering(g, order_or_identity(g, yorder));
        return result_dict(solve_baseline(g, ord, decompose(g, ord)));
      },
      py::arg("graph"), py::arg("yorder") = py::none());

  m.def(
      "brute_force_gamma_ve", [](const BipartiteGraph& g) { return result_dict(brute_force_gamma_ve(g)); },
      py::arg("graph"));

  m.def(
      "decompose",
      [](const BipartiteGraph& g, const std::optional<std::vector<std::size_t>>& yorder) {
        const auto ord = compute_lex_convex_ordering(g, order_or_identity(g, yorder));
        const auto dec = decompose(g, ord);
        py::list chains;
        for (std::size_t c = 0; c < dec.chains.size(); ++c) {
          py::dict h;
          h["xs"] = dec.chains[c].xs;
          h["ys"] = dec.chains[c].ys;
          h["stranded"] = dec.isolated_sets[c];
          chains.append(h);
        }
        py::dict d;
        d["chains"] = chains;
        d["tail_isolated"] = names(dec.tail_isolated);
        d["lemma_passed"] = verify_decomposition_lemma(g, dec).all_passed();
        return d;
      },
      py::arg("graph"), py::arg("yorder") = py::none());

  py::class_<SetSystem>(m, "SetSystem")
      .def(py::init([](std::size_t p, std::vector<std::vector<std::size_t>> sets) {
             return make_set_system(p, std::move(sets));
           }),
           py::arg("universe"), py::arg("sets"))
      .def_readonly("universe", &SetSystem::universe)
      .def_readonly("sets", &SetSystem::sets)
      .def("is_cover", [](const SetSystem& ss, const std::vector<std::size_t>& c) { return ss.is_cover(c); });

  m.def(
      "reduce",
      [](const SetSystem& ss, const std::string& target) {
        if (target != "star" && target != "comb") throw InputError("target must be 'star' or 'comb'");
        const auto art = target == "star" ? reduce_star_convex(ss) : reduce_comb_convex(ss);
        py::dict roles;
        for (const auto& [name, v] : art.roles) roles[py::str(name)] = to_string(v);
        py::dict d;
        d["graph"] = art.graph;
        d["certificate"] = write_certificate_text(art.cert);
        d["certificate_ok"] = verify_tree_convexity(art.graph, art.cert).ok;
        d["roles"] = roles;
        d["coverless"] = art.coverless;
        return d;
      },
      py::arg("set_system"), py::arg("target") = "star");

  m.def("brute_force_min_cover", &brute_force_min_cover, py::arg("set_system"));

  m.def(
      "approx_set_cover",
      [](const SetSystem& ss, std::size_t k) {
        const VedSolver solver = [](const BipartiteGraph& g) { return brute_force_gamma_ve(g).witness; };
        const auto r = approx_set_cover(ss, k, solver);
        return py::make_tuple(r.cover, r.used_reduction);
      },
      py::arg("set_system"), py::arg("k"),
      "Phase 1 exhaustive search up to k, else the star reduction solved by brute force. "
      "Returns (cover, used_reduction).");

  m.def(
      "gen_convex",
      [](std::size_t n1, std::size_t n2, double density, std::uint64_t seed, bool connected) {
        return gen_random_convex_bipartite({n1, n2, density, seed, connected});
      },
      py::arg("n1"), py::arg("n2"), py::arg("density") = 0.5, py::arg("seed") = 0,
      py::arg("connected") = false);

  m.def(
      "cross_check",
      [](std::size_t trials, std::size_t size_cap, std::uint64_t seed) {
        const auto r = cross_check(trials, size_cap, seed);
        py::dict d;
        d["trials"] = r.trials;
        d["agreements"] = r.agreements;
        d["disagreements"] = r.disagreements.size();
        d["witness_failures"] = r.witness_failures;
        d["baseline_gaps"] = r.baseline_gaps;
        return d;
      },
      py::arg("trials"), py::arg("size_cap") = 14, py::arg("seed") = 0);
}
