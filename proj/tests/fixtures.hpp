// Shared structures for the test binaries.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tdl/order.hpp"
#include "tdl/tense_algebra.hpp"

namespace fixtures {

using tdl::Element;

inline tdl::Lattice chain(int n) {
  std::vector<std::pair<Element, Element>> pairs;
  for (Element i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return tdl::lattice_from_poset(tdl::build_poset(n, pairs));
}

// 0, u, v, 1 with u and v incomparable.
inline tdl::Lattice boolean4() {
  std::vector<std::pair<Element, Element>> pairs{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  return tdl::lattice_from_poset(tdl::build_poset(4, pairs, {"0", "u", "v", "1"}));
}

// Indices of the six-element example lattice.
enum Ex : Element { k0 = 0, ka = 1, kb = 2, kc = 3, kd = 4, k1 = 5 };

inline tdl::Lattice ex_lattice() {
  std::vector<std::pair<Element, Element>> covers{{k0, ka}, {k0, kb}, {ka, kc}, {ka, kd},
                                                  {kb, kd}, {kc, k1}, {kd, k1}};
  return tdl::lattice_from_poset(tdl::build_poset(6, covers, {"0", "a", "b", "c", "d", "1"}));
}

inline tdl::TdlAlgebra ex_algebra() {
  tdl::OperatorTable G{kb, kb, kb, kb, kd, k1};
  tdl::OperatorTable H{k0, ka, k0, k1, ka, k1};
  tdl::OperatorTable F{k0, ka, kc, kc, kc, kc};
  tdl::OperatorTable P{k0, kd, k0, k1, kd, k1};
  return tdl::build_tdl_algebra(ex_lattice(), G, H, F, P);
}

inline std::vector<tdl::TdlAlgebra> sweep(int max_size) { return tdl::algebra_census(max_size); }

}  // namespace fixtures
