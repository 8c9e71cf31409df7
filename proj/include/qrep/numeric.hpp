#pragma once

// Exact scalars and dense exact linear algebra.
//
// Everything downstream computes over one of two fields: the rationals
// (GMP mpq_class) or a prime field F_p. Matrices are Eigen dense types
// instantiated on these scalars; row reduction, kernels and solvers are
// the free functions below. No floating point anywhere.

#include <Eigen/Core>
#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrep {

using Rat = mpq_class;
using Int = mpz_class;

// A guard (size/degree cap) was exceeded; the run is refused, not wrong.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed; this signals a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Element of a prime field F_p. The modulus travels with the value so
// that Eigen expressions over Fp matrices need no external context; a
// default-constructed element (or Fp(int)) is an integer constant with
// unset modulus and adopts the modulus of the first modular operand it
// meets.
class Fp {
 public:
  Fp() : v_(0), p_(0) {}
  explicit Fp(long long constant) : v_(constant), p_(0) {}
  explicit Fp(int constant) : v_(constant), p_(0) {}
  Fp(long long v, long long p) : v_(v), p_(p) { reduce(); }

  long long value() const { return v_; }
  long long modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    long long p = join(a.p_, b.p_);
    return Fp(a.v_ + b.v_, p, tag{});
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    long long p = join(a.p_, b.p_);
    return Fp(a.v_ - b.v_, p, tag{});
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    long long p = join(a.p_, b.p_);
    if (p == 0) return Fp(a.v_ * b.v_, 0, tag{});
    return Fp(static_cast<long long>(static_cast<__int128>(a.v_) * b.v_ % p), p, tag{});
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return Fp(-v_, p_, tag{}); }
  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    long long p = join(a.p_, b.p_);
    if (p == 0) return a.v_ == b.v_;
    return ((a.v_ - b.v_) % p + p) % p == 0;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  Fp inverse() const {
    if (p_ == 0) {
      if (v_ == 1 || v_ == -1) return *this;
      throw InternalError("Fp: inverse of integer constant " + std::to_string(v_));
    }
    if (v_ == 0) throw InternalError("Fp: inverse of zero");
    // extended Euclid
    long long a = v_, m = p_, x0 = 1, x1 = 0;
    while (m != 0) {
      long long q = a / m;
      long long t = a - q * m;
      a = m;
      m = t;
      t = x0 - q * x1;
      x0 = x1;
      x1 = t;
    }
    if (a != 1) throw InternalError("Fp: modulus " + std::to_string(p_) + " not prime to value");
    return Fp(x0, p_);
  }

  friend std::ostream& operator<<(std::ostream& os, const Fp& x) {
    return os << x.v_;
  }

 private:
  struct tag {};
  Fp(long long v, long long p, tag) : v_(v), p_(p) { reduce(); }
  static long long join(long long p, long long q) {
    if (p == 0) return q;
    if (q == 0) return p;
    if (p != q) throw InternalError("Fp: mixed moduli " + std::to_string(p) + ", " + std::to_string(q));
    return p;
  }
  void reduce() {
    if (p_ != 0) v_ = (v_ % p_ + p_) % p_;
  }

  long long v_;
  long long p_;
};

template <class K>
using MatX = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;
template <class K>
using VecX = Eigen::Matrix<K, Eigen::Dynamic, 1>;

// In-place Gauss-Jordan over an exact field; returns the pivot columns.
template <class K>
std::vector<Eigen::Index> row_reduce(MatX<K>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index pr = -1;
    for (Eigen::Index i = r; i < m.rows(); ++i) {
      if (!(m(i, c) == K(0))) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    if (pr != r) m.row(pr).swap(m.row(r));
    K inv = K(1) / m(r, c);
    for (Eigen::Index j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == K(0)) continue;
      K f = m(i, c);
      for (Eigen::Index j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
long long rank_of(MatX<K> m) {
  return static_cast<long long>(row_reduce(m).size());
}

// Columns form a basis of { x : m x = 0 }.
template <class K>
MatX<K> kernel_basis(const MatX<K>& m) {
  MatX<K> r = m;
  auto pivots = row_reduce(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  Eigen::Index free_count = m.cols() - static_cast<Eigen::Index>(pivots.size());
  MatX<K> ker = MatX<K>::Zero(m.cols(), free_count);
  Eigen::Index k = 0;
  for (Eigen::Index c = 0; c < m.cols(); ++c) {
    if (is_pivot[static_cast<size_t>(c)]) continue;
    ker(c, k) = K(1);
    for (size_t i = 0; i < pivots.size(); ++i) ker(pivots[i], k) = -r(static_cast<Eigen::Index>(i), c);
    ++k;
  }
  return ker;
}

// Rows form a basis of { y : y m = 0 }.
template <class K>
MatX<K> left_kernel_basis(const MatX<K>& m) {
  MatX<K> mt = m.transpose();
  return kernel_basis<K>(mt).transpose();
}

// Some solution x of a x = b; throws on an inconsistent system.
template <class K>
MatX<K> solve_any(const MatX<K>& a, const MatX<K>& b) {
  if (a.rows() != b.rows()) throw InternalError("solve_any: row mismatch");
  MatX<K> aug(a.rows(), a.cols() + b.cols());
  aug.leftCols(a.cols()) = a;
  aug.rightCols(b.cols()) = b;
  auto pivots = row_reduce(aug);
  for (auto c : pivots) {
    if (c >= a.cols()) throw InternalError("solve_any: inconsistent system");
  }
  MatX<K> x = MatX<K>::Zero(a.cols(), b.cols());
  for (size_t i = 0; i < pivots.size(); ++i) {
    x.row(pivots[i]) = aug.block(static_cast<Eigen::Index>(i), a.cols(), 1, b.cols());
  }
  return x;
}

inline Rat to_rat(long long n) { return Rat(static_cast<long>(n)); }

inline std::string rat_to_string(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  return c.get_str();
}

}  // namespace qrep

namespace Eigen {

template <>
struct NumTraits<qrep::Rat> : GenericNumTraits<qrep::Rat> {
  using Real = qrep::Rat;
  using NonInteger = qrep::Rat;
  using Literal = qrep::Rat;
  using Nested = qrep::Rat;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100
  };
};

template <>
struct NumTraits<qrep::Fp> : GenericNumTraits<qrep::Fp> {
  using Real = qrep::Fp;
  using NonInteger = qrep::Fp;
  using Literal = qrep::Fp;
  using Nested = qrep::Fp;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 4,
    MulCost = 8
  };
};

}  // namespace Eigen
