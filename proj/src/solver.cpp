#include "veds/solver.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "veds/errors.hpp"

namespace veds {

std::string to_string(Branch b) {
  switch (b) {
    case Branch::Universal: return "universal";
    case Branch::GPrime: return "g_prime";
    case Branch::GTilde: return "g_tilde";
    case Branch::ComponentSplit: return "component_split";
  }
  return "unknown";
}

FrontierIndices frontier_indices(const BipartiteGraph& g, const LexConvexOrdering& ord,
                                 const ChainDecomposition& decomp) {
  if (g.num_edges() == 0) throw ContractError("frontier indices need at least one edge");
  if (!is_connected(g)) throw ContractError("frontier indices need a connected graph");
  if (decomp.chains.empty()) throw ContractError("decomposition has no chains");

  const std::size_t n1 = g.n1();
  const std::size_t n2 = g.n2();
  FrontierIndices fi;
  fi.r_prime = ord.interval_x(1)->right;
  fi.r = ord.interval_y(1)->right;
  fi.s = ord.interval_x(fi.r)->right;
  if (fi.s < n2) {
    fi.l = ord.interval_y(fi.s + 1)->left;
    fi.p = ord.interval_y(fi.s + 1)->right;
  }
  const auto& stranded = decomp.isolated_sets.front();
  for (std::size_t q = fi.r_prime; q >= 1; --q) {
    const std::size_t y = ord.y_at(q);
    const bool sees_all = std::all_of(stranded.begin(), stranded.end(),
                                      [&](std::size_t x) { return g.has_edge(x, y); });
    if (sees_all) {
      fi.alpha = q;
      break;
    }
  }
  if (fi.alpha) {
    fi.k_alpha = ord.interval_y(*fi.alpha)->right;
    if (*fi.k_alpha < n1) fi.l_alpha = ord.interval_x(*fi.k_alpha + 1)->left;
  }
  return fi;
}

SuffixSubproblem reduce_to_suffix(const BipartiteGraph& g, const LexConvexOrdering& ord,
                                  const FrontierIndices& fi, SuffixBranch branch) {
  SuffixSubproblem out;
  if (branch == SuffixBranch::GPrime && fi.l) {
    out.x_start = *fi.l;
    out.y_start = fi.s + 1;
  } else if (branch == SuffixBranch::GTilde && fi.k_alpha && fi.l_alpha) {
    out.x_start = *fi.k_alpha + 1;
    out.y_start = *fi.l_alpha;
  }
  std::vector<std::size_t> xs, ys;
  if (out.x_start) {
    std::vector<char> keep_y(g.n2() + 1, 0);
    for (std::size_t p = *out.x_start; p <= g.n1(); ++p) {
      bool any = false;
      for (std::size_t y : g.neighbors_of_x(ord.x_at(p))) {
        if (ord.position_of_y(y) >= *out.y_start) {
          keep_y[y] = 1;
          any = true;
        }
      }
      if (any) xs.push_back(ord.x_at(p));
    }
    for (std::size_t j = 1; j <= g.n2(); ++j) {
      if (keep_y[j]) ys.push_back(j);
    }
  }
  out.sub = induced_subgraph(g, xs, ys);
  return out;
}

namespace {

// One state of the exact recursion: the suffix G[X_a ∪ Y_b] under the
// top-level positions. Clipping a suffix keeps X sorted by left endpoint, so
// the lex quantities of its first component can be read off one scan.
class SuffixSolver {
 public:
  SuffixSolver(const BipartiteGraph& g, const LexConvexOrdering& ord, bool memoize)
      : ord_(ord), n1_(g.n1()), n2_(g.n2()), memoize_(memoize) {
    lo_.assign(n1_ + 2, 0);
    hi_.assign(n1_ + 2, 0);
    for (std::size_t p = 1; p <= n1_; ++p) {
      if (const auto& iv = ord.interval_x(p)) {
        lo_[p] = iv->left;
        hi_[p] = iv->right;
      } else {
        first_active_ = p + 1;
      }
    }
  }

  SolveResult run() {
    const Key root = canonical({1, 1});
    const std::size_t gamma = evaluate(root);
    SolveResult result;
    result.gamma_ve = gamma;
    result.states_evaluated = states_evaluated_;
    for (Key k = root; k != kEmpty;) {
      const Decision& d = decided_.at(pack(k));
      if (d.multi_component) {
        result.trace.push_back({k.a, k.b, Branch::ComponentSplit, std::nullopt, d.gamma});
      }
      result.trace.push_back({k.a, k.b, d.branch, d.chosen, d.gamma});
      result.witness.insert(d.chosen);
      k = d.child;
    }
    return result;
  }

 private:
  struct Key {
    std::size_t a = 0;  // first X position
    std::size_t b = 0;  // first Y position
    bool operator==(const Key&) const = default;
  };

  struct Decision {
    std::size_t gamma = 0;
    Branch branch = Branch::Universal;
    VertexRef chosen;
    Key child;
    bool multi_component = false;
  };

  // What the scan of one canonical state finds.
  struct Analysis {
    std::optional<VertexRef> universal;
    Key universal_child;
    bool multi_component = false;
    std::size_t xr = 0;  // position of x_r
    Key gprime_child;
    std::optional<std::size_t> alpha;
    Key gtilde_child;
  };

  struct Frame {
    Key key;
    Analysis an;
    int stage = 0;
    bool pending = false;
    std::size_t first = 0;
    std::size_t second = 0;
  };

  static Frame make_frame(Key k) {
    Frame f;
    f.key = k;
    return f;
  }

  static constexpr Key kEmpty{std::numeric_limits<std::size_t>::max(),
                              std::numeric_limits<std::size_t>::max()};

  static std::uint64_t pack(Key k) {
    return (static_cast<std::uint64_t>(k.a) << 32) ^ static_cast<std::uint64_t>(k.b);
  }

  // Drops isolated vertices from the front of the suffix: a becomes the
  // first X position with an edge into Y_b, b becomes the first Y position
  // with an edge, i.e. y_f. kEmpty when the suffix has no edges.
  Key canonical(Key k) const {
    if (k == kEmpty) return kEmpty;
    std::size_t a = std::max(k.a, first_active_);
    while (a <= n1_ && hi_[a] < k.b) ++a;
    if (a > n1_) return kEmpty;
    return {a, std::max(lo_[a], k.b)};
  }

  Analysis analyse(Key k) const {
    const std::size_t yf = k.b;
    Analysis an;
    std::size_t comp_end = hi_[k.a];
    std::size_t r_prime = n2_ + 1, s = 0;
    std::size_t first_max = 0;  // smallest position attaining s
    std::size_t max_left = 0, min_right = n2_ + 1;
    bool has_stranded = false;
    std::size_t stranded_max_left = 0, stranded_min_right = n2_ + 1;

    for (std::size_t p = k.a; p <= n1_; ++p) {
      if (hi_[p] < yf) continue;
      const std::size_t left = std::max(lo_[p], yf);
      if (left > comp_end) {
        an.multi_component = true;
        break;
      }
      comp_end = std::max(comp_end, hi_[p]);
      max_left = std::max(max_left, left);
      min_right = std::min(min_right, hi_[p]);
      if (left == yf) {
        // N(y_f) is a prefix of the component.
        r_prime = std::min(r_prime, hi_[p]);
        if (hi_[p] > s) first_max = p;
        if (hi_[p] >= s) {
          s = hi_[p];
          an.xr = p;
        }
      } else if (hi_[p] <= s) {
        has_stranded = true;
        stranded_max_left = std::max(stranded_max_left, lo_[p]);
        stranded_min_right = std::min(stranded_min_right, hi_[p]);
      }
    }

    if (s == comp_end) {
      an.universal = x_vertex(ord_.x_at(first_max));
    } else if (max_left <= min_right) {
      an.universal = y_vertex(ord_.y_at(max_left));
    }
    if (an.universal) {
      an.universal_child = {k.a, comp_end + 1};
      return an;
    }

    an.gprime_child = {k.a, s + 1};
    const std::size_t low = has_stranded ? std::max(yf, stranded_max_left) : yf;
    const std::size_t high = has_stranded ? std::min(r_prime, stranded_min_right) : r_prime;
    if (low <= high) {
      an.alpha = high;
      // Every X position before the first left endpoint beyond alpha is in
      // N(y_alpha) or already isolated.
      const auto begin = lo_.begin() + static_cast<std::ptrdiff_t>(k.a);
      const auto end = lo_.begin() + static_cast<std::ptrdiff_t>(n1_ + 1);
      const auto it = std::partition_point(begin, end, [&](std::size_t v) { return v <= high; });
      an.gtilde_child = {static_cast<std::size_t>(it - lo_.begin()), high + 1};
    }
    return an;
  }

  // Post-order evaluation with an explicit stack; recursion depth would
  // otherwise grow with n2.
  std::size_t evaluate(Key root) {
    if (root == kEmpty) return 0;
    std::vector<Frame> stack;
    std::size_t last = 0;

    // True when the value of `child` is available immediately.
    auto request = [&](Key child, std::size_t& slot) {
      if (child == kEmpty) {
        slot = 0;
        return true;
      }
      if (memoize_) {
        if (auto it = decided_.find(pack(child)); it != decided_.end()) {
          slot = it->second.gamma;
          return true;
        }
      }
      stack.push_back(make_frame(child));
      return false;
    };

    stack.push_back(make_frame(root));
    while (!stack.empty()) {
      const std::size_t top = stack.size() - 1;
      Frame& f = stack[top];
      if (f.stage == 0) {
        f.an = analyse(f.key);
        ++states_evaluated_;
        f.stage = 1;
        const Key child = canonical(f.an.universal ? f.an.universal_child : f.an.gprime_child);
        if (f.an.universal) {
          f.an.universal_child = child;
        } else {
          f.an.gprime_child = child;
        }
        if (!request(child, f.first)) {
          stack[top].pending = true;
          continue;
        }
      }
      if (f.stage == 1) {
        if (f.pending) {
          f.first = last;
          f.pending = false;
        }
        if (!f.an.universal && f.an.alpha) {
          f.stage = 2;
          f.an.gtilde_child = canonical(f.an.gtilde_child);
          if (!request(f.an.gtilde_child, f.second)) {
            stack[top].pending = true;
            continue;
          }
        }
      }
      if (f.stage == 2 && f.pending) {
        f.second = last;
        f.pending = false;
      }

      Decision d;
      if (f.an.universal) {
        d = {f.first + 1, Branch::Universal, *f.an.universal, f.an.universal_child,
             f.an.multi_component};
      } else if (f.stage == 2 && f.second < f.first) {
        d = {f.second + 1, Branch::GTilde, y_vertex(ord_.y_at(*f.an.alpha)),
             f.an.gtilde_child, f.an.multi_component};
      } else {
        d = {f.first + 1, Branch::GPrime, x_vertex(ord_.x_at(f.an.xr)), f.an.gprime_child,
             f.an.multi_component};
      }
      decided_[pack(f.key)] = d;
      last = d.gamma;
      stack.pop_back();
    }
    return last;
  }

  const LexConvexOrdering& ord_;
  std::size_t n1_;
  std::size_t n2_;
  bool memoize_;
  std::size_t first_active_ = 1;
  std::vector<std::size_t> lo_;
  std::vector<std::size_t> hi_;
  std::unordered_map<std::uint64_t, Decision> decided_;
  std::size_t states_evaluated_ = 0;
};

}  // namespace

SolveResult solve_exact(const BipartiteGraph& g, const LexConvexOrdering& ord,
                        const SolveOptions& options) {
  if (auto problem = check_lex_convex_ordering(g, ord)) {
    throw InputError("invalid lex-convex ordering: " + *problem);
  }
  SolveResult result = SuffixSolver(g, ord, options.memoize).run();
  if (options.verify_witness &&
      (result.witness.size() != result.gamma_ve || !is_ve_dominating_set(g, result.witness))) {
    throw std::logic_error("exact solver produced an invalid witness " +
                           to_string(result.witness));
  }
  return result;
}

SolveResult solve_baseline(const BipartiteGraph& g, const LexConvexOrdering& ord,
                           const ChainDecomposition& decomp) {
  if (g.num_edges() == 0) throw ContractError("baseline needs at least one edge");
  if (!is_connected(g)) throw ContractError("baseline needs a connected graph");
  SolveResult result;
  for (const auto& chain : decomp.chains) {
    const std::size_t leftmost_y = chain.ys.front();
    std::optional<std::size_t> best;
    for (std::size_t x : chain.xs) {
      if (!g.has_edge(x, leftmost_y)) continue;
      const std::size_t reach = ord.interval_x(ord.position_of_x(x))->right;
      if (!best || reach >= ord.interval_x(ord.position_of_x(*best))->right) best = x;
    }
    if (!best) throw ContractError("chain without a neighbour of its leftmost y");
    result.witness.insert(x_vertex(*best));
  }
  result.gamma_ve = result.witness.size();
  if (!is_ve_dominating_set(g, result.witness)) {
    throw std::logic_error("baseline produced a set that is not ve-dominating");
  }
  return result;
}

}  // namespace veds
