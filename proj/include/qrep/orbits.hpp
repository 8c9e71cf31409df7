#pragma once

// Orbit catalogs for E_d, the degeneration order by the Bongartz hom
// criterion, elementary operations, arrow supports J(c), the rational
// smoothness classifier, automorphism group orders and F_q point
// counts with Euler characteristics.

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qrep/laurent.hpp"
#include "qrep/repkit.hpp"

namespace qrep {

struct OrbitCatalog {
  std::shared_ptr<const AdaptedWord> word;
  Eigen::VectorXi d;
  std::vector<IsoClass> classes;   // lexicographic order
  long long dim_Ed = 0;            // sum over arrows of d_i d_j
  long long dim_Gd = 0;            // sum of d_i^2
  Eigen::MatrixXi hom_into;        // (s, k) = [e_{alpha^s}, e(classes[k])]
  Eigen::MatrixXi hom_from;        // (s, k) = [e(classes[k]), e_{alpha^s}]
  std::vector<long long> orbit_dims;

  int size() const { return static_cast<int>(classes.size()); }
  int index_of(const IsoClass& cls) const;

 private:
  friend OrbitCatalog build_catalog(const ModuleContext<FieldQ>&, const Eigen::VectorXi&);
  std::map<IsoClass, int> index_;
};

OrbitCatalog build_catalog(const ModuleContext<FieldQ>& ctx, const Eigen::VectorXi& d);

long long orbit_dim(const OrbitCatalog& cat, int k);

// Bongartz criterion (iii): c' degenerates from c iff every
// [e_{alpha^s}, -] count weakly grows.
bool leq(const OrbitCatalog& cat, int kprime, int k);
// criterion (iv), hom counts out of the modules
bool leq_dual(const OrbitCatalog& cat, int kprime, int k);

// the semisimple class: d_i at the simple root positions
IsoClass cmin_class(const AdaptedWord& word, const Eigen::VectorXi& d);
int cmin_index(const OrbitCatalog& cat);

// arrows on which some summand of e(c) acts by a nonzero matrix
std::vector<int> support(const ModuleContext<FieldQ>& ctx, const IsoClass& cls);
long long dim_Ed_of(const Quiver& q, const Eigen::VectorXi& d, const std::vector<int>& arrows);

struct OrbitInfo {
  IsoClass cls;
  long long dim = 0;
  std::vector<int> arrows_J;
  long long dim_EdJ = 0;
  bool smooth = false;
};

// Theorem: the closure is rationally smooth iff it fills E_d(J(c)),
// i.e. iff d(c) = dim E_d(J(c)); the same boolean answers smoothness.
OrbitInfo orbit_info(const ModuleContext<FieldQ>& ctx, const OrbitCatalog& cat, int k);

// |GL_m(F_q)| as an exact polynomial in q
Laurent gl_order(int m);
// a_c(q) = q^{sum_{s<t} c_s c_t H(s,t)} prod_s |GL_{c_s}(F_q)|
Laurent aut_order(const Eigen::MatrixXi& hom_table, const IsoClass& cls);

struct PointCounts {
  Laurent orbit_count;       // Q_c(q) = |G_d(F_q)| / a_c(q)
  Laurent projective_count;  // P_c(q) = sum of Q over cmin < c' <= c, divided by (q-1)
  Rat euler_char;            // P_c(1)
};

PointCounts point_counts(const ModuleContext<FieldQ>& ctx, const OrbitCatalog& cat, int k);

// both halves of the degeneration-order Hasse diagram, kprime -> k covers
std::vector<std::pair<int, int>> hasse_edges(const OrbitCatalog& cat);

// A non-split exact sequence e_{alpha^s} -> middle -> e_{alpha^t} with
// indecomposable ends, recorded through its effect on multiplicity
// vectors. The extension-count polynomial data is attached later by the
// hall layer.
struct ElementaryOp {
  int s = 0;  // in(Y): the submodule end
  int t = 0;  // out(Y): the quotient end
  IsoClass middle;
  Eigen::VectorXi op;  // middle - b(s) - b(t), componentwise
  Laurent ext_count;   // E(q)
  Laurent reduced;     // e(q) = E(q)/(q-1)
  Rat e_value = Rat(0);
  bool regular = false;
  bool annotated = false;
};

struct OpEnumeration {
  std::vector<ElementaryOp> ops;
  std::vector<std::string> warnings;
};

// Enumerates middle classes at two primes and keeps the union; a set
// mismatch between the primes is reported as a warning (counts are
// polynomial values and may vanish at small primes).
OpEnumeration enumerate_elementary_ops(const ModuleContext<FieldFp>& a, const ModuleContext<FieldFp>& b);

// Op(c): the operations applicable at c
std::vector<int> ops_at(const IsoClass& cls, const std::vector<ElementaryOp>& ops);

// S_c by its definition: classes c' = cmin + op for some operation, with c' <= c
std::vector<int> s_set(const OrbitCatalog& cat, int k, const std::vector<ElementaryOp>& ops);
// S_c by the arrow-support description: { c^{ij} : i->j in J(c) }
std::vector<int> s_set_by_support(const ModuleContext<FieldQ>& ctx, const OrbitCatalog& cat, int k);

}  // namespace qrep
