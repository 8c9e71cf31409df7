#include "qrep/checks.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qrep {

MainCheckRow theorem_main_check(Engine& engine, const OrbitCatalog& cat, int kprime, int k) {
  if (kprime == k || !leq(cat, kprime, k)) {
    throw std::invalid_argument("theorem_main_check: requires c' strictly below c");
  }
  MainCheckRow row;
  row.kprime = kprime;
  row.k = k;
  const OmegaCoeff& w = engine.omega(cat, kprime, k);
  row.value_at_1 = w.value_at_1;
  row.derivative_v = Rat(2) * w.derivative_at_1;

  const IsoClass& cp = cat.classes[static_cast<size_t>(kprime)];
  const IsoClass& c = cat.classes[static_cast<size_t>(k)];
  const auto& ops = engine.elementary_ops();
  for (size_t i = 0; i < ops.size(); ++i) {
    if (cp.c + ops[i].op == c.c) {
      row.connecting.push_back(static_cast<int>(i));
      if (ops[i].regular) {
        row.connecting_regular.push_back(static_cast<int>(i));
        Rat e = Rat(-2) * Rat(cp.c[ops[i].s]) * Rat(cp.c[ops[i].t]) * ops[i].e_value;
        e.canonicalize();
        row.expected.push_back(e);
      }
    }
  }

  std::ostringstream note;
  bool ok = row.value_at_1 == 0;
  if (!ok) note << "Omega(1) != 0; ";
  if (row.connecting_regular.empty()) {
    if (row.derivative_v != 0) {
      ok = false;
      note << "derivative nonzero without a regular connecting operation; ";
    }
  } else {
    std::set<Rat> distinct(row.expected.begin(), row.expected.end());
    if (row.connecting_regular.size() > 1) {
      note << "multiple regular operations connect this pair; ";
    }
    if (distinct.size() > 1) {
      note << "connecting operations predict different derivatives; ";
    }
    if (row.derivative_v == 0) {
      ok = false;
      note << "derivative vanishes despite a regular connecting operation; ";
    } else if (!distinct.count(row.derivative_v)) {
      ok = false;
      note << "derivative does not match -2 c'_s c'_t e; ";
    }
  }
  row.pass = ok;
  row.note = note.str();
  return row;
}

SumCheckRow smoothness_sum_from_cmin(Engine& engine, const OrbitCatalog& cat, int k) {
  SumCheckRow row;
  row.kprime = cmin_index(cat);
  row.k = k;
  Rat lhs(0);
  for (int kk = 0; kk < cat.size(); ++kk) {
    if (kk == row.kprime || !leq(cat, kk, k)) continue;
    lhs -= engine.omega(cat, row.kprime, kk).derivative_at_1;
  }
  lhs.canonicalize();
  row.lhs = lhs;
  OrbitInfo info = orbit_info(engine.over_rationals(), cat, k);
  row.rhs = Rat(static_cast<long>(info.dim_EdJ));
  row.pass = row.lhs == row.rhs;
  return row;
}

SumCheckRow smoothness_sum_between(Engine& engine, const OrbitCatalog& cat, int kprime, int k) {
  if (!leq(cat, kprime, k)) throw std::invalid_argument("smoothness_sum_between: c' must degenerate from c");
  SumCheckRow row;
  row.kprime = kprime;
  row.k = k;
  Rat lhs(0);
  for (int kk = 0; kk < cat.size(); ++kk) {
    if (kk == kprime || !leq(cat, kk, k) || !leq(cat, kprime, kk)) continue;
    lhs -= engine.omega(cat, kprime, kk).derivative_at_1;
  }
  lhs.canonicalize();
  row.lhs = lhs;
  row.rhs = Rat(static_cast<long>(orbit_dim(cat, k) - orbit_dim(cat, kprime)));
  row.pass = row.lhs == row.rhs;
  return row;
}

RiedtmannRow riedtmann_check(Engine& engine, int op_index) {
  const ElementaryOp& op = engine.elementary_ops().at(static_cast<size_t>(op_index));
  RiedtmannRow row;
  row.op_index = op_index;
  int nu = engine.word().nu();
  Laurent f = engine.sub_polynomial(op.middle, unit_class(nu, op.s), unit_class(nu, op.t));
  const Eigen::MatrixXi& H = engine.hom_table();
  row.lhs = f * aut_order(H, unit_class(nu, op.t)) * aut_order(H, unit_class(nu, op.s));
  row.rhs = op.ext_count * aut_order(H, op.middle);
  row.pass = row.lhs == row.rhs;
  return row;
}

}  // namespace qrep
