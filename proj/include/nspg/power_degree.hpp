#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "nspg/group.hpp"
#include "nspg/subgroup.hpp"

namespace nspg {

// Distinct cyclic subgroups <g>, each as a sorted element list.
inline std::vector<std::vector<Element>> cyclic_subgroups(const FiniteGroup& g) {
  std::set<std::vector<Element>> seen;
  for (Element a = 0; a < g.order(); ++a) seen.insert(generated_subgroup(g, {a}).elements());
  return {seen.begin(), seen.end()};
}

// Degree of v in the power graph from the group structure alone: the sum
// of phi(|C|) over cyclic subgroups C strictly containing <v>, plus o(v) - 1.
inline std::uint64_t degree_in_power_graph_formula(const FiniteGroup& g, std::uint64_t v) {
  g.check_element(v);
  const auto own = generated_subgroup(g, {Element(v)});
  std::uint64_t degree = own.order() - 1;
  for (const auto& c : cyclic_subgroups(g)) {
    if (c.size() <= own.order()) continue;
    bool contains_own = true;
    for (Element x : own.elements())
      if (!std::binary_search(c.begin(), c.end(), x)) {
        contains_own = false;
        break;
      }
    if (contains_own) degree += euler_phi(c.size());
  }
  return degree;
}

}  // namespace nspg
