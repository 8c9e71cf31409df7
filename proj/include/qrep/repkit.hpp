#pragma once

// Explicit quiver representations over an exact field, Hom/Ext
// dimensions by linear algebra, indecomposables via reflection
// functors, and identification of isomorphism classes from hom counts.
//
// Field descriptors:
//   FieldQ  - the rationals
//   FieldFp - a prime field F_p
// A ModuleContext binds an adapted word to one field and caches the
// indecomposables plus the hom table; it is immutable once built.

#include <cmath>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qrep/dynkin.hpp"
#include "qrep/numeric.hpp"

namespace qrep {

struct Guards {
  long long max_total_dim = 6;  // submodule enumeration: cap on sum(dims) of the ambient rep
  int max_interp_degree = 24;   // interpolation degree cap
  double max_ext_bits = 22.0;   // extension enumeration: cap on ext_dim * log2(p)
};

struct FieldQ {
  using Scalar = Rat;
  long long characteristic() const { return 0; }
  Scalar make(long long n) const { return Rat(static_cast<long>(n)); }
  Scalar normalize(const Scalar& x) const { return x; }
  std::string name() const { return "Q"; }
};

struct FieldFp {
  long long p = 2;
  using Scalar = Fp;
  long long characteristic() const { return p; }
  Scalar make(long long n) const { return Fp(n, p); }
  Scalar normalize(const Scalar& x) const { return Fp(x.value(), p); }
  std::string name() const { return "F" + std::to_string(p); }
};

template <class F>
struct Rep {
  using K = typename F::Scalar;
  Quiver quiver;
  Eigen::VectorXi dims;
  std::vector<MatX<K>> maps;  // maps[a] : dims[to] x dims[from], aligned with quiver.arrows

  long long total_dim() const { return dims.cast<long long>().sum(); }
};

inline bool same_quiver(const Quiver& a, const Quiver& b) {
  return a.diagram.rank == b.diagram.rank && a.arrows == b.arrows;
}

template <class F>
MatX<typename F::Scalar> field_zeros(const F& field, Eigen::Index r, Eigen::Index c) {
  return MatX<typename F::Scalar>::Constant(r, c, field.make(0));
}

template <class F>
Rep<F> zero_rep(const Quiver& q, const F& field) {
  Rep<F> rep{q, Eigen::VectorXi::Zero(q.vertex_count()), {}};
  for (size_t a = 0; a < q.arrows.size(); ++a) rep.maps.push_back(field_zeros(field, 0, 0));
  return rep;
}

template <class F>
Rep<F> simple_rep(const Quiver& q, int vertex, const F& field) {
  Rep<F> rep{q, Eigen::VectorXi::Zero(q.vertex_count()), {}};
  rep.dims[vertex] = 1;
  for (const Arrow& a : q.arrows) {
    rep.maps.push_back(field_zeros(field, rep.dims[a.to], rep.dims[a.from]));
  }
  return rep;
}

template <class F>
Rep<F> direct_sum(const Rep<F>& x, const Rep<F>& y, const F& field) {
  if (!same_quiver(x.quiver, y.quiver)) throw std::invalid_argument("direct_sum: different quivers");
  Rep<F> rep{x.quiver, x.dims + y.dims, {}};
  for (size_t a = 0; a < x.maps.size(); ++a) {
    const Arrow& ar = x.quiver.arrows[a];
    auto m = field_zeros(field, rep.dims[ar.to], rep.dims[ar.from]);
    m.topLeftCorner(x.dims[ar.to], x.dims[ar.from]) = x.maps[a];
    m.bottomRightCorner(y.dims[ar.to], y.dims[ar.from]) = y.maps[a];
    rep.maps.push_back(std::move(m));
  }
  return rep;
}

// <d1, d2> = sum_i d1_i d2_i - sum_{a: i->j} d1_i d2_j; equals hom - ext.
inline long long euler_form(const Quiver& q, const Eigen::VectorXi& d1, const Eigen::VectorXi& d2) {
  if (d1.size() != q.vertex_count() || d2.size() != q.vertex_count()) {
    throw std::invalid_argument("euler_form: vector length mismatch");
  }
  long long s = 0;
  for (int i = 0; i < q.vertex_count(); ++i) s += static_cast<long long>(d1[i]) * d2[i];
  for (const Arrow& a : q.arrows) s -= static_cast<long long>(d1[a.from]) * d2[a.to];
  return s;
}

namespace detail {

// Column/row layout shared by the hom constraint matrix and the
// extension-class unflattening: unknowns g_i are stacked per vertex in
// column-major order; equation blocks are stacked per arrow likewise.
inline std::vector<long long> block_offsets(const Eigen::VectorXi& rows, const Eigen::VectorXi& cols) {
  std::vector<long long> off(static_cast<size_t>(rows.size()) + 1, 0);
  for (Eigen::Index i = 0; i < rows.size(); ++i) {
    off[static_cast<size_t>(i) + 1] = off[static_cast<size_t>(i)] +
                                      static_cast<long long>(rows[i]) * cols[i];
  }
  return off;
}

}  // namespace detail

// Matrix of g = (g_i) |-> (f^N_a g_i - g_j f^M_a)_{a: i->j}. Its kernel
// is Hom(M, N), its cokernel Ext^1(M, N).
template <class F>
MatX<typename F::Scalar> hom_constraint_matrix(const Rep<F>& M, const Rep<F>& N, const F& field) {
  using K = typename F::Scalar;
  const Quiver& q = M.quiver;
  Eigen::VectorXi arrow_rows(q.arrows.size()), arrow_cols(q.arrows.size());
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    arrow_rows[static_cast<Eigen::Index>(a)] = N.dims[q.arrows[a].to];
    arrow_cols[static_cast<Eigen::Index>(a)] = M.dims[q.arrows[a].from];
  }
  auto row_off = detail::block_offsets(arrow_rows, arrow_cols);
  Eigen::VectorXi gn = N.dims, gm = M.dims;
  auto col_off = detail::block_offsets(gn, gm);
  MatX<K> delta = field_zeros(field, row_off.back(), col_off.back());
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    int i = q.arrows[a].from, j = q.arrows[a].to;
    long long ro = row_off[a];
    int nj = N.dims[j], mi = M.dims[i], ni = N.dims[i], mj = M.dims[j];
    // + f^N_a g_i
    for (int c = 0; c < mi; ++c) {
      for (int r = 0; r < nj; ++r) {
        for (int k = 0; k < ni; ++k) {
          delta(ro + c * nj + r, col_off[static_cast<size_t>(i)] + c * ni + k) += N.maps[a](r, k);
        }
      }
    }
    // - g_j f^M_a
    for (int c = 0; c < mi; ++c) {
      for (int r = 0; r < nj; ++r) {
        for (int k = 0; k < mj; ++k) {
          delta(ro + c * nj + r, col_off[static_cast<size_t>(j)] + k * nj + r) -= M.maps[a](k, c);
        }
      }
    }
  }
  return delta;
}

template <class F>
long long hom_dim(const Rep<F>& M, const Rep<F>& N, const F& field) {
  if (!same_quiver(M.quiver, N.quiver)) throw std::invalid_argument("hom_dim: different quivers");
  long long unknowns = 0;
  for (int i = 0; i < M.quiver.vertex_count(); ++i) {
    unknowns += static_cast<long long>(M.dims[i]) * N.dims[i];
  }
  return unknowns - rank_of(hom_constraint_matrix(M, N, field));
}

template <class F>
long long ext_dim(const Rep<F>& M, const Rep<F>& N, const F& field) {
  long long e = hom_dim(M, N, field) - euler_form(M.quiver, M.dims, N.dims);
  if (e < 0) throw InternalError("ext_dim: negative value, hereditary Euler identity violated");
  return e;
}

// BGP reflection functor at a sink: the new space at i is the kernel of
// the assembled map (+)_{a: j->i} V_j -> V_i.
template <class F>
Rep<F> reflection_functor(const Rep<F>& rep, int i, const F& field) {
  using K = typename F::Scalar;
  const Quiver& q = rep.quiver;
  if (i < 0 || i >= q.vertex_count()) throw std::invalid_argument("reflection_functor: vertex out of range");
  if (!q.is_sink(i)) throw std::invalid_argument("reflection_functor: vertex is not a sink");
  std::vector<size_t> in_arrows;
  long long total = 0;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    if (q.arrows[a].to == i) {
      in_arrows.push_back(a);
      total += rep.dims[q.arrows[a].from];
    }
  }
  MatX<K> h = field_zeros(field, rep.dims[i], total);
  long long off = 0;
  for (size_t a : in_arrows) {
    int dj = rep.dims[q.arrows[a].from];
    h.middleCols(off, dj) = rep.maps[a];
    off += dj;
  }
  MatX<K> ker = kernel_basis<K>(h);
  Rep<F> out{q.reversed_at(i), rep.dims, {}};
  out.dims[i] = static_cast<int>(ker.cols());
  out.maps.resize(q.arrows.size());
  off = 0;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    if (q.arrows[a].to != i) {
      out.maps[a] = rep.maps[a];
    }
  }
  for (size_t a : in_arrows) {
    int dj = rep.dims[q.arrows[a].from];
    out.maps[a] = ker.middleRows(off, dj);
    off += dj;
  }
  for (auto& m : out.maps) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = field.normalize(m(r, c));
    }
  }
  return out;
}

// Inverse reflection at a source: the new space at i is the cokernel of
// the assembled map V_i -> (+)_{a: i->j} V_j.
template <class F>
Rep<F> coreflection_functor(const Rep<F>& rep, int i, const F& field) {
  using K = typename F::Scalar;
  const Quiver& q = rep.quiver;
  if (i < 0 || i >= q.vertex_count()) throw std::invalid_argument("coreflection_functor: vertex out of range");
  if (!q.is_source(i)) throw std::invalid_argument("coreflection_functor: vertex is not a source");
  std::vector<size_t> out_arrows;
  long long total = 0;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    if (q.arrows[a].from == i) {
      out_arrows.push_back(a);
      total += rep.dims[q.arrows[a].to];
    }
  }
  MatX<K> g = field_zeros(field, total, rep.dims[i]);
  long long off = 0;
  for (size_t a : out_arrows) {
    int dj = rep.dims[q.arrows[a].to];
    g.middleRows(off, dj) = rep.maps[a];
    off += dj;
  }
  MatX<K> lk = left_kernel_basis<K>(g);  // rows span the cokernel projection
  Rep<F> out{q.reversed_at(i), rep.dims, {}};
  out.dims[i] = static_cast<int>(lk.rows());
  out.maps.resize(q.arrows.size());
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    if (q.arrows[a].from != i) out.maps[a] = rep.maps[a];
  }
  off = 0;
  for (size_t a : out_arrows) {
    int dj = rep.dims[q.arrows[a].to];
    out.maps[a] = lk.middleCols(off, dj);
    off += dj;
  }
  for (auto& m : out.maps) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) m(r, c) = field.normalize(m(r, c));
    }
  }
  return out;
}

template <class F>
class ModuleContext {
 public:
  using K = typename F::Scalar;

  ModuleContext(std::shared_ptr<const AdaptedWord> word, F field, Guards guards = {})
      : word_(std::move(word)), field_(field), guards_(guards) {
    build_indecomposables();
    build_hom_table();
  }

  const AdaptedWord& word() const { return *word_; }
  std::shared_ptr<const AdaptedWord> word_ptr() const { return word_; }
  const Quiver& quiver() const { return word_->quiver; }
  const F& field() const { return field_; }
  const Guards& guards() const { return guards_; }
  int nu() const { return word_->nu(); }

  // e_{alpha^t}, constructed once by Gabriel's correspondence
  const Rep<F>& indec(int t) const { return indecomposables_.at(static_cast<size_t>(t)); }

  // H(s, t) = dim Hom(e_{alpha^s}, e_{alpha^t}); upper unitriangular
  const Eigen::MatrixXi& hom_table() const { return hom_; }

  // [e_{alpha^s}, e(c)] by additivity
  long long hom_from_indec(int s, const IsoClass& cls) const {
    long long h = 0;
    for (int t = 0; t < nu(); ++t) h += static_cast<long long>(hom_(s, t)) * cls.c[t];
    return h;
  }

  // dim Ext^1(e_{alpha^t}, e_{alpha^s}) from the hom table and the Euler form
  long long ext_between(int t, int s) const {
    return hom_(t, s) - euler_form(quiver(), word_->root_order[t], word_->root_order[s]);
  }

  Rep<F> rep_of_class(const IsoClass& cls) const {
    if (cls.c.size() != nu()) throw std::invalid_argument("rep_of_class: class has wrong length");
    if ((cls.c.array() < 0).any()) throw std::invalid_argument("rep_of_class: negative multiplicity");
    Rep<F> rep{quiver(), word_->dimension_vector(cls), {}};
    for (size_t a = 0; a < quiver().arrows.size(); ++a) {
      const Arrow& ar = quiver().arrows[a];
      auto m = field_zeros(field_, rep.dims[ar.to], rep.dims[ar.from]);
      Eigen::Index ro = 0, co = 0;
      for (int t = 0; t < nu(); ++t) {
        const Rep<F>& e = indec(t);
        for (int k = 0; k < cls.c[t]; ++k) {
          m.block(ro, co, e.dims[ar.to], e.dims[ar.from]) = e.maps[a];
          ro += e.dims[ar.to];
          co += e.dims[ar.from];
        }
      }
      rep.maps.push_back(std::move(m));
    }
    return rep;
  }

  // Solve H c = ([e_{alpha^s}, rep])_s; unitriangularity makes c unique.
  IsoClass identify(const Rep<F>& rep) const {
    if (!same_quiver(rep.quiver, quiver())) throw std::invalid_argument("identify: representation lives on another quiver");
    std::vector<long long> h(static_cast<size_t>(nu()));
    for (int s = 0; s < nu(); ++s) h[static_cast<size_t>(s)] = hom_dim(indec(s), rep, field_);
    IsoClass cls;
    cls.c = Eigen::VectorXi::Zero(nu());
    for (int s = nu() - 1; s >= 0; --s) {
      long long v = h[static_cast<size_t>(s)];
      for (int t = s + 1; t < nu(); ++t) v -= static_cast<long long>(hom_(s, t)) * cls.c[t];
      if (v < 0) throw InternalError("identify: negative multiplicity, corrupt representation");
      cls.c[s] = static_cast<int>(v);
    }
    if (word_->dimension_vector(cls) != rep.dims) {
      throw InternalError("identify: hom counts do not match the dimension vector");
    }
    return cls;
  }

  // All nonzero classes of Ext^1(e_{alpha^t}, e_{alpha^s}) tallied by the
  // isomorphism class of the middle term. Requires a prime field.
  std::vector<std::pair<IsoClass, long long>> extension_classes(int s, int t) const;

 private:
  void build_indecomposables() {
    indecomposables_.reserve(static_cast<size_t>(nu()));
    for (int t = 0; t < nu(); ++t) {
      Rep<F> rep = simple_rep(word_->quiver_chain[static_cast<size_t>(t)], word_->word[static_cast<size_t>(t)], field_);
      for (int k = t - 1; k >= 0; --k) rep = coreflection_functor(rep, word_->word[static_cast<size_t>(k)], field_);
      if (rep.dims != word_->root_order[static_cast<size_t>(t)]) {
        throw InternalError("indecomposable at position " + std::to_string(t) +
                            " has wrong dimension vector");
      }
      indecomposables_.push_back(std::move(rep));
    }
  }

  void build_hom_table() {
    hom_ = Eigen::MatrixXi::Zero(nu(), nu());
    for (int s = 0; s < nu(); ++s) {
      for (int t = 0; t < nu(); ++t) {
        hom_(s, t) = static_cast<int>(hom_dim(indec(s), indec(t), field_));
      }
    }
    for (int s = 0; s < nu(); ++s) {
      if (hom_(s, s) != 1) throw InternalError("hom table diagonal is not 1");
      for (int t = 0; t < s; ++t) {
        if (hom_(s, t) != 0) throw InternalError("hom table is not triangular for the adapted order");
      }
    }
  }

  std::shared_ptr<const AdaptedWord> word_;
  F field_;
  Guards guards_;
  std::vector<Rep<F>> indecomposables_;
  Eigen::MatrixXi hom_;
};

template <>
inline std::vector<std::pair<IsoClass, long long>> ModuleContext<FieldFp>::extension_classes(int s, int t) const {
  if (s < 0 || s >= nu() || t < 0 || t >= nu()) throw std::invalid_argument("extension_classes: index out of range");
  const Rep<FieldFp>& N = indec(s);  // submodule end
  const Rep<FieldFp>& M = indec(t);  // quotient end
  MatX<Fp> delta = hom_constraint_matrix(M, N, field_);
  MatX<Fp> dt = delta.transpose();
  auto pivots = row_reduce(dt);
  std::vector<bool> in_image(static_cast<size_t>(delta.rows()), false);
  for (auto c : pivots) in_image[static_cast<size_t>(c)] = true;
  std::vector<long long> free_coords;
  for (Eigen::Index r = 0; r < delta.rows(); ++r) {
    if (!in_image[static_cast<size_t>(r)]) free_coords.push_back(r);
  }
  long long e = static_cast<long long>(free_coords.size());
  if (e != ext_dim(M, N, field_)) throw InternalError("extension_classes: cokernel dimension mismatch");
  if (e == 0) return {};
  double bits = static_cast<double>(e) * std::log2(static_cast<double>(field_.p));
  if (bits > guards_.max_ext_bits) {
    throw GuardError("extension_classes: p^e with e=" + std::to_string(e) + ", p=" +
                     std::to_string(field_.p) + " exceeds the enumeration guard");
  }

  // row layout of delta, to unflatten coset representatives per arrow
  const Quiver& q = quiver();
  Eigen::VectorXi arrow_rows(q.arrows.size()), arrow_cols(q.arrows.size());
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    arrow_rows[static_cast<Eigen::Index>(a)] = N.dims[q.arrows[a].to];
    arrow_cols[static_cast<Eigen::Index>(a)] = M.dims[q.arrows[a].from];
  }
  auto row_off = detail::block_offsets(arrow_rows, arrow_cols);

  std::map<IsoClass, long long> tally;
  std::vector<long long> lambda(static_cast<size_t>(e), 0);
  lambda[0] = 1;
  Rep<FieldFp> middle{q, N.dims + M.dims, {}};
  middle.maps.resize(q.arrows.size());
  while (true) {
    for (size_t a = 0; a < q.arrows.size(); ++a) {
      const Arrow& ar = q.arrows[a];
      auto m = field_zeros(field_, middle.dims[ar.to], middle.dims[ar.from]);
      m.topLeftCorner(N.dims[ar.to], N.dims[ar.from]) = N.maps[a];
      m.bottomRightCorner(M.dims[ar.to], M.dims[ar.from]) = M.maps[a];
      middle.maps[a] = std::move(m);
    }
    for (size_t k = 0; k < lambda.size(); ++k) {
      if (lambda[k] == 0) continue;
      long long coord = free_coords[k];
      size_t a = 0;
      while (row_off[a + 1] <= coord) ++a;
      long long local = coord - row_off[a];
      int nj = N.dims[q.arrows[a].to];
      int c = static_cast<int>(local / nj);
      int r = static_cast<int>(local % nj);
      // epsilon block sits in rows of N at target, columns of M at source
      middle.maps[a](r, N.dims[q.arrows[a].from] + c) = field_.make(lambda[k]);
    }
    tally[identify(middle)] += 1;
    // next nonzero vector over F_p
    size_t k = 0;
    while (k < lambda.size()) {
      if (++lambda[k] < field_.p) break;
      lambda[k] = 0;
      ++k;
    }
    if (k == lambda.size()) break;
  }
  return std::vector<std::pair<IsoClass, long long>>(tally.begin(), tally.end());
}

template <>
inline std::vector<std::pair<IsoClass, long long>> ModuleContext<FieldQ>::extension_classes(int, int) const {
  throw std::invalid_argument("extension_classes: enumeration requires a prime field");
}

}  // namespace qrep
