#include "veds/formats.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "veds/errors.hpp"

namespace veds {

namespace {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

std::size_t parse_count(std::string_view tok, std::size_t line) {
  std::size_t value = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) fail(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

GraphFile parse_graph_text(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines.front().tokens.front() != "graph") {
    throw InputError("graph file must start with 'graph <n1> <n2>'");
  }
  const auto& head = lines.front();
  if (head.tokens.size() != 3) fail(head.number, "expected 'graph <n1> <n2>'");
  const std::size_t n1 = parse_count(head.tokens[1], head.number);
  const std::size_t n2 = parse_count(head.tokens[2], head.number);

  GraphFile out;
  std::vector<Edge> edges;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    const std::string& key = line.tokens.front();
    if (key == "edge") {
      if (line.tokens.size() != 3) fail(line.number, "expected 'edge <i> <j>'");
      const Edge e{parse_count(line.tokens[1], line.number), parse_count(line.tokens[2], line.number)};
      if (e.x < 1 || e.x > n1 || e.y < 1 || e.y > n2) {
        fail(line.number, "edge (" + std::to_string(e.x) + ", " + std::to_string(e.y) +
                              ") outside [1," + std::to_string(n1) + "] x [1," + std::to_string(n2) + "]");
      }
      edges.push_back(e);
    } else if (key == "yorder") {
      if (out.yorder) fail(line.number, "duplicate yorder");
      std::vector<std::size_t> perm;
      for (std::size_t t = 1; t < line.tokens.size(); ++t) perm.push_back(parse_count(line.tokens[t], line.number));
      if (perm.size() != n2) fail(line.number, "yorder lists " + std::to_string(perm.size()) + " vertices, need " + std::to_string(n2));
      out.yorder = std::move(perm);
    } else if (key == "graph") {
      fail(line.number, "duplicate graph header");
    } else {
      fail(line.number, "unknown directive '" + key + "'");
    }
  }
  out.graph = build_graph(n1, n2, edges);
  return out;
}

std::string write_graph_text(const BipartiteGraph& g,
                             const std::optional<std::vector<std::size_t>>& yorder) {
  std::ostringstream out;
  out << "graph " << g.n1() << ' ' << g.n2() << '\n';
  for (const Edge& e : g.edges()) out << "edge " << e.x << ' ' << e.y << '\n';
  if (yorder) {
    out << "yorder";
    for (std::size_t j : *yorder) out << ' ' << j;
    out << '\n';
  }
  return out.str();
}

SetSystem parse_set_system_text(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty() || lines.front().tokens.front() != "universe") {
    throw InputError("set-system file must start with 'universe <p>'");
  }
  const auto& head = lines.front();
  if (head.tokens.size() != 2) fail(head.number, "expected 'universe <p>'");
  const std::size_t p = parse_count(head.tokens[1], head.number);

  std::vector<std::vector<std::size_t>> sets;
  std::vector<char> seen;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto& line = lines[k];
    if (line.tokens.front() != "set" || line.tokens.size() < 2) {
      fail(line.number, "expected 'set <j>: <elements>'");
    }
    std::string label = line.tokens[1];
    std::vector<std::string> rest(line.tokens.begin() + 2, line.tokens.end());
    // Accept both "set 1: 2 3" and "set 1 : 2 3".
    if (!label.empty() && label.back() == ':') {
      label.pop_back();
    } else if (!rest.empty() && rest.front() == ":") {
      rest.erase(rest.begin());
    } else {
      fail(line.number, "missing ':' after set index");
    }
    const std::size_t j = parse_count(label, line.number);
    if (j < 1) fail(line.number, "set indices start at 1");
    if (j > sets.size()) {
      sets.resize(j);
      seen.resize(j, 0);
    }
    if (seen[j - 1]) fail(line.number, "set " + std::to_string(j) + " defined twice");
    seen[j - 1] = 1;
    for (const auto& tok : rest) sets[j - 1].push_back(parse_count(tok, line.number));
  }
  for (std::size_t j = 1; j <= seen.size(); ++j) {
    if (!seen[j - 1]) throw InputError("set " + std::to_string(j) + " is missing; sets must be numbered 1..q");
  }
  return make_set_system(p, std::move(sets));
}

std::string write_set_system_text(const SetSystem& ss) {
  std::ostringstream out;
  out << "universe " << ss.universe << '\n';
  for (std::size_t j = 1; j <= ss.num_sets(); ++j) {
    out << "set " << j << ':';
    for (std::size_t e : ss.set(j)) out << ' ' << e;
    out << '\n';
  }
  return out.str();
}

namespace {

std::vector<std::size_t> parse_x_list(std::string_view list, std::size_t line) {
  std::vector<std::size_t> out;
  for (const auto& v : parse_vertex_list(list)) {
    if (v.side != Side::X) fail(line, "certificate vertices must be on the X side");
  }
  // parse_vertex_list sorts; keep the written order instead.
  std::size_t start = 0;
  while (start < list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    out.push_back(parse_vertex(list.substr(start, end - start)).index);
    start = end + 1;
  }
  return out;
}

}  // namespace

TreeCertificate parse_certificate_text(std::string_view text, std::size_t n1) {
  const auto lines = tokenize(text);
  if (lines.size() != 1 || lines.front().tokens.size() < 3 || lines.front().tokens[0] != "tree") {
    throw InputError("certificate must be a single 'tree star|comb ...' line");
  }
  const auto& line = lines.front();
  auto value_of = [&](const std::string& key) -> std::string {
    for (std::size_t t = 2; t < line.tokens.size(); ++t) {
      if (line.tokens[t].rfind(key + "=", 0) == 0) return line.tokens[t].substr(key.size() + 1);
    }
    fail(line.number, "missing '" + key + "='");
  };
  if (line.tokens[1] == "star") {
    const VertexRef c = parse_vertex(value_of("center"));
    if (c.side != Side::X) fail(line.number, "star centre must be an X vertex");
    return make_star_certificate(n1, c.index);
  }
  if (line.tokens[1] == "comb") {
    return make_comb_certificate(parse_x_list(value_of("backbone"), line.number),
                                 parse_x_list(value_of("teeth"), line.number));
  }
  fail(line.number, "unknown tree kind '" + line.tokens[1] + "'");
}

std::string write_certificate_text(const TreeCertificate& cert) {
  auto join = [](const std::vector<std::size_t>& xs) {
    std::string s;
    for (std::size_t k = 0; k < xs.size(); ++k) s += (k ? ",x" : "x") + std::to_string(xs[k]);
    return s;
  };
  if (cert.kind == TreeKind::Star) return "tree star center=x" + std::to_string(cert.center) + "\n";
  return "tree comb backbone=" + join(cert.backbone) + " teeth=" + join(cert.teeth) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

}  // namespace veds
