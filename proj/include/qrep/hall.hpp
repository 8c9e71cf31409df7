#pragma once

// Brute-force counting over F_p: subrepresentation enumeration by
// row-echelon Grassmannian tuples with arrow-compatibility pruning,
// Hall/filtration counts, and exact polynomial interpolation of
// counting functions across primes.

#include <functional>
#include <map>
#include <vector>

#include "qrep/laurent.hpp"
#include "qrep/orbits.hpp"
#include "qrep/repkit.hpp"

namespace qrep {

long long nth_prime(int idx);  // 0-based: 2, 3, 5, ...

// Visits every subrepresentation of `top` with the given dimension
// vector, passing the subrepresentation and the quotient. Subspaces are
// chosen vertex by vertex in a topological order of the quiver, so an
// arrow is checked as soon as both its endpoints are fixed.
void for_each_subrep(const ModuleContext<FieldFp>& ctx, const Rep<FieldFp>& top,
                     const Eigen::VectorXi& subdims,
                     const std::function<void(const Rep<FieldFp>&, const Rep<FieldFp>&)>& visit);

// F^{top}_{quot, sub}(p): submodules isomorphic to e(sub) with quotient
// isomorphic to e(quot).
long long count_submodules(const ModuleContext<FieldFp>& ctx, const Rep<FieldFp>& top,
                           const IsoClass& sub, const IsoClass& quot);

struct HallMemo {
  std::map<std::vector<int>, long long> table;
};

// F^{top}_{q_1, ..., q_k}(p): filtrations with successive quotients
// e(q_1), ..., e(q_2), ... where q_1 is the top quotient.
long long filtration_count(const ModuleContext<FieldFp>& ctx, const IsoClass& top,
                           const std::vector<IsoClass>& quotients, HallMemo& memo);

// e(q) = E(q)/(q-1) and its value at 1; extension-count polynomials
// factor through q-1 because the class set is a cone minus the origin.
// Throws InternalError on a nonzero remainder.
std::pair<Laurent, Rat> reduced_ext(const Laurent& ext_count);

// Fits the counting function at the first m primes (m starts at 4),
// verifies at 2 fresh primes, and grows m on mismatch; aborts past the
// degree guard with the samples listed. prime_at(i) supplies the i-th
// sample point and defaults to the i-th prime.
Laurent interpolate_counts(const std::function<Rat(long long)>& counter, const Guards& guards,
                           const std::function<long long(int)>& prime_at = nth_prime);

}  // namespace qrep
