#include "veds/set_system.hpp"

#include <algorithm>
#include <string>

#include "veds/errors.hpp"

namespace veds {

bool SetSystem::is_cover(std::span<const std::size_t> set_indices) const {
  std::vector<char> covered(universe + 1, 0);
  std::size_t remaining = universe;
  for (std::size_t j : set_indices) {
    if (j < 1 || j > num_sets()) {
      throw ContractError("set index " + std::to_string(j) + " out of range 1.." +
                          std::to_string(num_sets()));
    }
    for (std::size_t e : set(j)) {
      if (!covered[e]) {
        covered[e] = 1;
        --remaining;
      }
    }
  }
  return remaining == 0;
}

std::vector<std::size_t> SetSystem::uncovered_elements() const {
  std::vector<char> covered(universe + 1, 0);
  for (const auto& s : sets) {
    for (std::size_t e : s) covered[e] = 1;
  }
  std::vector<std::size_t> out;
  for (std::size_t e = 1; e <= universe; ++e) {
    if (!covered[e]) out.push_back(e);
  }
  return out;
}

SetSystem make_set_system(std::size_t universe,
                          std::vector<std::vector<std::size_t>> sets) {
  SetSystem ss{universe, std::move(sets)};
  for (std::size_t j = 1; j <= ss.num_sets(); ++j) {
    auto& s = ss.sets[j - 1];
    if (s.empty()) throw InputError("set " + std::to_string(j) + " is empty");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.front() < 1 || s.back() > universe) {
      throw InputError("set " + std::to_string(j) + " has an element outside 1.." +
                       std::to_string(universe));
    }
  }
  return ss;
}

}  // namespace veds
