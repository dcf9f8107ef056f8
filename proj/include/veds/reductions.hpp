#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "veds/graph.hpp"
#include "veds/set_system.hpp"

namespace veds {

enum class TreeKind { Star, Comb };

std::string to_string(TreeKind kind);

// A tree on the X side of a graph witnessing tree-convexity. Vertices are
// x-indices. For a star, `center` is the single non-pendant vertex; for a
// comb, teeth[k] hangs off backbone[k].
struct TreeCertificate {
  TreeKind kind = TreeKind::Star;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t center = 0;
  std::vector<std::size_t> backbone;
  std::vector<std::size_t> teeth;

  bool operator==(const TreeCertificate&) const = default;
};

TreeCertificate make_star_certificate(std::size_t n1, std::size_t center);
TreeCertificate make_comb_certificate(std::vector<std::size_t> backbone,
                                      std::vector<std::size_t> teeth);

// A reduced graph plus the certificate and the vertex roles of the
// construction ("a1", "b2", "z1", "u", "v", "u'" for star; "r1".."r{p+1}",
// "r'{p+1}", "w" for comb).
struct ReductionArtifact {
  BipartiteGraph graph;
  TreeCertificate cert;
  std::map<std::string, VertexRef> roles;
  SetSystem source;
  // Some element lies in no set, so no cover (and no size correspondence).
  bool coverless = false;

  VertexRef role(const std::string& name) const { return roles.at(name); }
  VertexRef hub() const;  // u (star) or r_{p+1} (comb)
};

// X = A ∪ {u, u'}, Y = B ∪ Z ∪ {v}; edges a_i b_j for s_i ∈ C_j, a_i z_i,
// u v, v u', and u b_j for every j. Throws ContractError when q > p.
ReductionArtifact reduce_star_convex(const SetSystem& ss);

// X = A ∪ R ∪ {r'_{p+1}}, Y = B ∪ Z ∪ {w}; memberships, a_i z_i, B × R
// complete, r_{p+1} w and w r'_{p+1}. Throws ContractError when q > p.
ReductionArtifact reduce_comb_convex(const SetSystem& ss);

// D = {b_j : j ∈ cover} ∪ {hub}. Throws ContractError if `cover` is not a
// cover of the source system.
VertexSet cover_to_vedset(const ReductionArtifact& art,
                          const std::vector<std::size_t>& cover);

// Normalises a VED-set of the reduced graph (hub gadget -> hub, comb
// backbone dropped, z_i / a_i replaced by their lowest-index B-neighbour or
// dropped when one is present) and reads the cover off the B members.
// The result has size at most |d| - 1. Throws ContractError when d is not
// a VED-set and DomainError when the system is coverless.
std::vector<std::size_t> vedset_to_cover(const ReductionArtifact& art, const VertexSet& d);

struct TreeConvexityCheck {
  bool ok = true;
  std::size_t violating_y = 0;
};

// Every N(y) must induce a connected subtree of the certificate. Throws
// InputError if the certificate is not a tree of its declared kind spanning
// exactly x_1..x_n1.
TreeConvexityCheck verify_tree_convexity(const BipartiteGraph& g, const TreeCertificate& cert);

// Any VED-set of a graph; used as the black-box solver by approx_set_cover.
using VedSolver = std::function<VertexSet(const BipartiteGraph&)>;

struct ApproxCoverResult {
  std::vector<std::size_t> cover;
  bool used_reduction = false;  // false: exhaustive search found it
};

// Returns a cover of size <= k when one exists (smallest first); otherwise
// solves the star-convex reduction with `solver` and converts back.
// Throws DomainError if the system has no cover.
ApproxCoverResult approx_set_cover(const SetSystem& ss, std::size_t k, const VedSolver& solver);

// Smallest cover among subfamilies of size <= max_size, lexicographically
// least among equals.
std::optional<std::vector<std::size_t>> find_cover_up_to(const SetSystem& ss,
                                                         std::size_t max_size);

}  // namespace veds
