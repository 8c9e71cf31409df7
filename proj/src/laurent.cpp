#include "qrep/laurent.hpp"

#include <sstream>

namespace qrep {

Laurent Laurent::monomial(int exp, const Rat& coeff) {
  Laurent p;
  p.set(exp, coeff);
  return p;
}

Rat Laurent::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Laurent::set(int exp, const Rat& c) {
  if (c == 0) {
    terms_.erase(exp);
  } else {
    terms_[exp] = c;
  }
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) set(e, coeff(e) + c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) set(e, coeff(e) - c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent p;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      p.set(ea + eb, p.coeff(ea + eb) + ca * cb);
    }
  }
  return p;
}

Laurent Laurent::operator-() const {
  Laurent p;
  for (const auto& [e, c] : terms_) p.terms_[e] = -c;
  return p;
}

Laurent Laurent::shifted(int k) const {
  Laurent p;
  for (const auto& [e, c] : terms_) p.terms_[e + k] = c;
  return p;
}

Laurent Laurent::inverted_variable() const {
  Laurent p;
  for (const auto& [e, c] : terms_) p.terms_[-e] = c;
  return p;
}

std::optional<Laurent> Laurent::divided_exact(const Laurent& den) const {
  if (den.is_zero()) return std::nullopt;
  if (is_zero()) return Laurent();
  // shift both to ordinary polynomials, long-divide, shift back
  Laurent num = shifted(-lowest());
  Laurent d = den.shifted(-den.lowest());
  int dd = d.highest();
  Laurent q;
  while (!num.is_zero() && num.highest() >= dd) {
    int e = num.highest() - dd;
    Rat f = num.coeff(num.highest()) / d.coeff(dd);
    Laurent t = Laurent::monomial(e, f);
    q += t;
    num -= t * d;
  }
  if (!num.is_zero()) return std::nullopt;
  return q.shifted(lowest() - den.lowest());
}

Rat Laurent::eval(const Rat& x) const {
  Rat acc(0);
  for (const auto& [e, c] : terms_) {
    Rat pw(1);
    int n = e >= 0 ? e : -e;
    for (int i = 0; i < n; ++i) pw *= x;
    if (e < 0) {
      if (x == 0) throw InternalError("Laurent: evaluating negative exponent at 0");
      pw = Rat(1) / pw;
    }
    acc += c * pw;
  }
  acc.canonicalize();
  return acc;
}

Laurent Laurent::derivative() const {
  Laurent p;
  for (const auto& [e, c] : terms_) {
    if (e != 0) p.set(e - 1, c * Rat(e));
  }
  return p;
}

std::string Laurent::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rat c = it->second;
    int e = it->first;
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    bool unit = (a == 1) && e != 0;
    if (!unit) os << rat_to_string(a);
    if (e != 0) {
      if (!unit) os << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

Laurent interpolate_through(const std::vector<std::pair<long long, Rat>>& points) {
  size_t n = points.size();
  if (n == 0) return Laurent();
  // divided differences
  std::vector<Rat> dd(n);
  for (size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (size_t level = 1; level < n; ++level) {
    for (size_t i = n - 1; i >= level; --i) {
      Rat dx = to_rat(points[i].first - points[i - level].first);
      dd[i] = (dd[i] - dd[i - 1]) / dx;
      dd[i].canonicalize();
      if (i == level) break;
    }
  }
  Laurent poly;
  Laurent basis = Laurent::constant(Rat(1));
  for (size_t k = 0; k < n; ++k) {
    poly += basis * Laurent::constant(dd[k]);
    basis *= Laurent::variable() - Laurent::constant(to_rat(points[k].first));
  }
  return poly;
}

}  // namespace qrep
