#pragma once

#include <initializer_list>

#include "qrep/engine.hpp"

namespace qtest {

using namespace qrep;

inline Eigen::VectorXi ivec(std::initializer_list<int> v) {
  Eigen::VectorXi d(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (int x : v) d[i++] = x;
  return d;
}

inline IsoClass cls(std::initializer_list<int> v) { return IsoClass{ivec(v)}; }

inline Quiver a1() { return default_orientation(build_diagram(DynkinType::A, 1)); }
inline Quiver a2() { return make_quiver(build_diagram(DynkinType::A, 2), {{0, 1}}); }
inline Quiver a3() { return make_quiver(build_diagram(DynkinType::A, 3), {{0, 1}, {1, 2}}); }
inline Quiver a4() { return make_quiver(build_diagram(DynkinType::A, 4), {{0, 1}, {1, 2}, {2, 3}}); }
inline Quiver d4() { return make_quiver(build_diagram(DynkinType::D, 4), {{0, 2}, {1, 2}, {2, 3}}); }
inline Quiver e6() { return default_orientation(build_diagram(DynkinType::E, 6)); }

}  // namespace qtest
