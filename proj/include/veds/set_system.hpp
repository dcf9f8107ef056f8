#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace veds {

// Universe {1..p} with a family of q subsets C_1..C_q. Set indices are
// 1-based; each set is stored sorted and duplicate-free.
struct SetSystem {
  std::size_t universe = 0;
  std::vector<std::vector<std::size_t>> sets;

  std::size_t num_sets() const { return sets.size(); }
  const std::vector<std::size_t>& set(std::size_t j) const { return sets[j - 1]; }

  // The hardness constructions assume q <= p.
  bool within_size_restriction() const { return num_sets() <= universe; }

  // True iff the union of the named sets is the whole universe.
  // Throws ContractError for indices outside 1..q.
  bool is_cover(std::span<const std::size_t> set_indices) const;

  // Elements contained in no set at all.
  std::vector<std::size_t> uncovered_elements() const;
  bool has_cover() const { return uncovered_elements().empty(); }

  bool operator==(const SetSystem&) const = default;
};

// Validates and normalises: every set nonempty, elements within 1..p.
// Throws InputError.
SetSystem make_set_system(std::size_t universe,
                          std::vector<std::vector<std::size_t>> sets);

}  // namespace veds
