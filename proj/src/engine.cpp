#include "qrep/engine.hpp"

#include <algorithm>

namespace qrep {

Engine::Engine(Quiver quiver, EngineOptions opt)
    : word_(std::make_shared<const AdaptedWord>(adapted_word(quiver))),
      opt_(opt),
      rng_(opt.seed) {}

ModuleContext<FieldQ>& Engine::over_rationals() {
  if (!ctx_q_) ctx_q_ = std::make_unique<ModuleContext<FieldQ>>(word_, FieldQ{}, opt_.guards);
  return *ctx_q_;
}

ModuleContext<FieldFp>& Engine::over_prime(long long p) {
  auto it = ctx_p_.find(p);
  if (it == ctx_p_.end()) {
    it = ctx_p_.emplace(p, std::make_unique<ModuleContext<FieldFp>>(word_, FieldFp{p}, opt_.guards)).first;
  }
  return *it->second;
}

const Eigen::MatrixXi& Engine::hom_table() {
  if (ctx_q_) return ctx_q_->hom_table();
  return over_prime(opt_.op_prime_a).hom_table();
}

const OrbitCatalog& Engine::catalog(const Eigen::VectorXi& d) {
  std::vector<int> key(d.data(), d.data() + d.size());
  auto it = catalogs_.find(key);
  if (it == catalogs_.end()) it = catalogs_.emplace(key, build_catalog(over_rationals(), d)).first;
  return it->second;
}

const std::vector<std::pair<IsoClass, long long>>& Engine::ext_tallies(long long p, int s, int t) {
  auto key = std::make_tuple(p, s, t);
  auto it = ext_cache_.find(key);
  if (it == ext_cache_.end()) {
    it = ext_cache_.emplace(key, over_prime(p).extension_classes(s, t)).first;
  }
  return it->second;
}

const std::vector<ElementaryOp>& Engine::elementary_ops() {
  if (!ops_built_) {
    OpEnumeration e = enumerate_elementary_ops(over_prime(opt_.op_prime_a), over_prime(opt_.op_prime_b));
    ops_ = std::move(e.ops);
    op_warnings_ = std::move(e.warnings);
    for (ElementaryOp& op : ops_) {
      op.ext_count = ext_polynomial(op.s, op.t, op.middle);
      auto [red, at1] = reduced_ext(op.ext_count);
      op.reduced = red;
      op.e_value = at1;
      op.regular = op.e_value != 0;
      op.annotated = true;
    }
    ops_built_ = true;
  }
  return ops_;
}

const std::vector<std::string>& Engine::op_warnings() {
  elementary_ops();
  return op_warnings_;
}

long long Engine::pool_prime(int idx) const {
  if (idx < static_cast<int>(opt_.prime_pool.size())) return opt_.prime_pool[static_cast<size_t>(idx)];
  // continue with primes not already in the pool
  int skip = idx - static_cast<int>(opt_.prime_pool.size());
  for (int i = 0;; ++i) {
    long long p = nth_prime(i);
    if (std::find(opt_.prime_pool.begin(), opt_.prime_pool.end(), p) != opt_.prime_pool.end()) continue;
    if (skip-- == 0) return p;
  }
}

Laurent Engine::hall_polynomial(const IsoClass& top, const std::vector<IsoClass>& quotients) {
  return interpolate_counts(
      [&](long long p) {
        return Rat(static_cast<long>(
            filtration_count(over_prime(p), top, quotients, hall_memos_[p])));
      },
      opt_.guards, [this](int i) { return pool_prime(i); });
}

Laurent Engine::ext_polynomial(int s, int t, const IsoClass& middle) {
  return interpolate_counts(
      [&](long long p) {
        for (const auto& [cls, count] : ext_tallies(p, s, t)) {
          if (cls == middle) return Rat(static_cast<long>(count));
        }
        return Rat(0);
      },
      opt_.guards, [this](int i) { return pool_prime(i); });
}

Laurent Engine::sub_polynomial(const IsoClass& top, const IsoClass& sub, const IsoClass& quot) {
  return interpolate_counts(
      [&](long long p) {
        ModuleContext<FieldFp>& ctx = over_prime(p);
        return Rat(static_cast<long>(count_submodules(ctx, ctx.rep_of_class(top), sub, quot)));
      },
      opt_.guards, [this](int i) { return pool_prime(i); });
}

const OmegaCoeff& Engine::omega(const OrbitCatalog& cat, int kprime, int k) {
  std::vector<int> key(cat.d.data(), cat.d.data() + cat.d.size());
  key.push_back(-1);
  key.push_back(kprime);
  key.push_back(k);
  auto it = omega_cache_.find(key);
  if (it != omega_cache_.end()) return it->second;

  OmegaCoeff w;
  w.cprime = cat.classes.at(static_cast<size_t>(kprime));
  w.c = cat.classes.at(static_cast<size_t>(k));
  if (kprime == k) {
    w.poly_u = Laurent::constant(Rat(1));
    w.value_at_1 = Rat(1);
  } else if (!leq(cat, kprime, k)) {
    w.poly_u = Laurent();
  } else {
    // isotypic pieces of c' listed from the top of the filtration down
    std::vector<IsoClass> pieces;
    for (int t = word_->nu() - 1; t >= 0; --t) {
      IsoClass piece;
      piece.c = Eigen::VectorXi::Zero(word_->nu());
      piece.c[t] = w.cprime.c[t];
      pieces.push_back(piece);
    }
    Laurent f = hall_polynomial(w.c, pieces);
    const Eigen::MatrixXi& H = hom_table();
    Laurent num = f.inverted_variable();
    for (const IsoClass& piece : pieces) {
      if ((piece.c.array() != 0).any()) num *= aut_order(H, piece).inverted_variable();
    }
    auto quotient = num.divided_exact(aut_order(H, w.c).inverted_variable());
    if (!quotient) throw InternalError("omega: the coefficient is not a Laurent polynomial in u");
    w.poly_u = quotient->normalized_low_zero();
    w.value_at_1 = w.poly_u.eval(Rat(1));
    w.derivative_at_1 = w.poly_u.derivative().eval(Rat(1));
  }
  return omega_cache_.emplace(key, std::move(w)).first->second;
}

IsoClass Engine::generic_class(const OrbitCatalog& cat, const std::vector<int>& arrows_J) {
  ModuleContext<FieldFp>& ctx = over_prime(opt_.sample_prime);
  const Quiver& q = ctx.quiver();
  std::uniform_int_distribution<long long> dist(0, opt_.sample_prime - 1);
  std::vector<bool> in_J(q.arrows.size(), false);
  for (int a : arrows_J) in_J[static_cast<size_t>(a)] = true;
  int best = -1;
  for (int trial = 0; trial < opt_.sample_count; ++trial) {
    Rep<FieldFp> rep{q, cat.d, {}};
    for (size_t a = 0; a < q.arrows.size(); ++a) {
      auto m = field_zeros(ctx.field(), cat.d[q.arrows[a].to], cat.d[q.arrows[a].from]);
      if (in_J[a]) {
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
          for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = ctx.field().make(dist(rng_));
        }
      }
      rep.maps.push_back(std::move(m));
    }
    int k = cat.index_of(ctx.identify(rep));
    if (k < 0) throw InternalError("generic_class: sampled class missing from the catalog");
    if (best < 0 || leq(cat, best, k)) best = k;
  }
  return cat.classes.at(static_cast<size_t>(best));
}

}  // namespace qrep
