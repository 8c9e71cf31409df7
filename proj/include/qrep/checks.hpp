#pragma once

// Verification primitives for the identities the engine is built
// around: the derivative formula for bar-involution coefficients, the
// sum identities that characterize rational smoothness, and the
// Riedtmann identity relating Hall, automorphism and extension counts.

#include <string>
#include <vector>

#include "qrep/engine.hpp"

namespace qrep {

struct MainCheckRow {
  int kprime = -1;
  int k = -1;
  Rat value_at_1 = Rat(0);
  Rat derivative_v = Rat(0);  // d/dv of Omega^c_{c'} at v = 1
  std::vector<int> connecting;          // ops with c' + op = c
  std::vector<int> connecting_regular;  // the regular ones
  std::vector<Rat> expected;            // -2 c'_s c'_t e^Y per regular op
  bool pass = false;
  std::string note;
};

// For c' < c: Omega(1) = 0; the derivative is nonzero iff a regular
// elementary operation connects the pair, and then equals
// -2 c'_s c'_t e^Y.
MainCheckRow theorem_main_check(Engine& engine, const OrbitCatalog& cat, int kprime, int k);

struct SumCheckRow {
  int kprime = -1;
  int k = -1;
  Rat lhs = Rat(0);
  Rat rhs = Rat(0);
  bool pass = false;
};

// -(sum of d Omega^{c''}_{cmin}/du at 1 over cmin < c'' <= c) = dim E_d(J(c))
SumCheckRow smoothness_sum_from_cmin(Engine& engine, const OrbitCatalog& cat, int k);
// for rationally smooth c: the same sum from any c' <= c equals d(c) - d(c')
SumCheckRow smoothness_sum_between(Engine& engine, const OrbitCatalog& cat, int kprime, int k);

struct RiedtmannRow {
  int op_index = -1;
  Laurent lhs, rhs;  // cross-multiplied polynomial identity
  bool pass = false;
};

// F^{middle}_{b(t),b(s)} a_{b(t)} a_{b(s)} = E^{middle}_{b(t),b(s)} a_{middle}
RiedtmannRow riedtmann_check(Engine& engine, int op_index);

}  // namespace qrep
