#pragma once

// Exact univariate Laurent polynomials with rational coefficients.
// Used with variable q (finite field size) and u = v^2; the variable
// name is supplied at rendering time.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrep/numeric.hpp"

namespace qrep {

class Laurent {
 public:
  Laurent() = default;
  static Laurent constant(const Rat& c) { return monomial(0, c); }
  static Laurent monomial(int exp, const Rat& coeff);
  // the variable itself, x^1
  static Laurent variable() { return monomial(1, Rat(1)); }

  bool is_zero() const { return terms_.empty(); }
  // lowest/highest exponent; zero polynomial reports (0, 0)
  int lowest() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int highest() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }
  const std::map<int, Rat>& terms() const { return terms_; }
  Rat coeff(int exp) const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  Laurent operator-() const;
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }

  // multiply by x^k
  Laurent shifted(int k) const;
  // substitute x -> x^{-1}
  Laurent inverted_variable() const;
  // shift so the lowest exponent is 0 (zero stays zero)
  Laurent normalized_low_zero() const { return shifted(-lowest()); }

  // exact division; nullopt if the remainder is nonzero or den == 0
  std::optional<Laurent> divided_exact(const Laurent& den) const;

  Rat eval(const Rat& x) const;
  // formal derivative d/dx (valid for Laurent exponents)
  Laurent derivative() const;

  std::string to_string(const std::string& var) const;

 private:
  void set(int exp, const Rat& c);
  std::map<int, Rat> terms_;  // exponent -> nonzero coefficient
};

// The unique polynomial of degree < points.size() through the given
// (x, y) points, by Newton divided differences. The x values must be
// pairwise distinct.
Laurent interpolate_through(const std::vector<std::pair<long long, Rat>>& points);

}  // namespace qrep
