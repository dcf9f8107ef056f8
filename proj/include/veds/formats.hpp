#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "veds/graph.hpp"
#include "veds/reductions.hpp"
#include "veds/set_system.hpp"

namespace veds {

// Graph text:
//   graph <n1> <n2>
//   edge <i> <j>            (x_i ~ y_j, repeated)
//   yorder <j1> ... <jn2>   (optional, a convex ordering of Y)
// Blank lines and '#' comments are ignored.
struct GraphFile {
  BipartiteGraph graph;
  std::optional<std::vector<std::size_t>> yorder;
};

// Throws InputError with the offending line number.
GraphFile parse_graph_text(std::string_view text);

// Canonical form: header, edges sorted by (i, j), then yorder if given.
std::string write_graph_text(const BipartiteGraph& g,
                             const std::optional<std::vector<std::size_t>>& yorder = {});

// Set-system text:
//   universe <p>
//   set <j>: <e1> <e2> ...  (j = 1..q, each exactly once)
SetSystem parse_set_system_text(std::string_view text);
std::string write_set_system_text(const SetSystem& ss);

// Certificate sidecar, one line:
//   tree star center=x<k>
//   tree comb backbone=x<a>,x<b>,... teeth=x<c>,x<d>,...
// A star is rebuilt over x_1..x_n1.
TreeCertificate parse_certificate_text(std::string_view text, std::size_t n1);
std::string write_certificate_text(const TreeCertificate& cert);

// Whole-file read; InputError if the file cannot be opened.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace veds
