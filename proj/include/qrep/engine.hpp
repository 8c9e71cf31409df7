#pragma once

// Ties one quiver to its adapted word, module contexts over the
// rationals and over prime fields, orbit catalogs, annotated elementary
// operations, interpolated Hall polynomials and bar-involution
// coefficients. Everything is cached; the heavy objects are built once
// per field or prime and shared.

#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "qrep/hall.hpp"
#include "qrep/orbits.hpp"

namespace qrep {

struct EngineOptions {
  Guards guards;
  std::vector<long long> prime_pool;  // interpolation sample points; extended with fresh primes as needed
  long long op_prime_a = 3;           // elementary operations are enumerated here...
  long long op_prime_b = 5;           // ...and revalidated here
  long long sample_prime = 10007;
  int sample_count = 8;
  unsigned long long seed = 1;
};

// A representative of Omega^c_{c'} in u = v^2, normalized so its lowest
// exponent is 0. The value at u = 1 is exact; the derivative at u = 1
// is meaningful whenever the value vanishes (power-of-v shifts drop out
// there).
struct OmegaCoeff {
  IsoClass cprime, c;
  Laurent poly_u;
  Rat value_at_1 = Rat(0);
  Rat derivative_at_1 = Rat(0);  // d/du at u = 1
};

class Engine {
 public:
  explicit Engine(Quiver quiver, EngineOptions opt = {});

  const AdaptedWord& word() const { return *word_; }
  std::shared_ptr<const AdaptedWord> word_ptr() const { return word_; }
  const EngineOptions& options() const { return opt_; }
  const Guards& guards() const { return opt_.guards; }

  ModuleContext<FieldQ>& over_rationals();
  ModuleContext<FieldFp>& over_prime(long long p);

  // the hom table is independent of the ground field; reuse whichever
  // context already exists
  const Eigen::MatrixXi& hom_table();

  const OrbitCatalog& catalog(const Eigen::VectorXi& d);

  // every elementary operation of the quiver, annotated with E(q),
  // e(q) = E/(q-1) and e(1)
  const std::vector<ElementaryOp>& elementary_ops();
  const std::vector<std::string>& op_warnings();

  // middle-term tallies of extension_classes(s, t) at a prime, cached
  const std::vector<std::pair<IsoClass, long long>>& ext_tallies(long long p, int s, int t);

  // interpolated counting polynomials
  Laurent hall_polynomial(const IsoClass& top, const std::vector<IsoClass>& quotients);
  Laurent ext_polynomial(int s, int t, const IsoClass& middle);
  Laurent sub_polynomial(const IsoClass& top, const IsoClass& sub, const IsoClass& quot);

  const OmegaCoeff& omega(const OrbitCatalog& cat, int kprime, int k);

  // identified class of a random point of E_d(J) over a large prime
  // field: the maximal class among sample_count draws
  IsoClass generic_class(const OrbitCatalog& cat, const std::vector<int>& arrows_J);

  // i-th interpolation sample point: the configured pool first, then
  // fresh primes beyond it
  long long pool_prime(int idx) const;

 private:
  std::shared_ptr<const AdaptedWord> word_;
  EngineOptions opt_;
  std::unique_ptr<ModuleContext<FieldQ>> ctx_q_;
  std::map<long long, std::unique_ptr<ModuleContext<FieldFp>>> ctx_p_;
  std::map<long long, HallMemo> hall_memos_;
  std::map<std::vector<int>, OrbitCatalog> catalogs_;
  bool ops_built_ = false;
  std::vector<ElementaryOp> ops_;
  std::vector<std::string> op_warnings_;
  std::map<std::tuple<long long, int, int>, std::vector<std::pair<IsoClass, long long>>> ext_cache_;
  std::map<std::vector<int>, OmegaCoeff> omega_cache_;
  std::mt19937_64 rng_;
};

}  // namespace qrep
