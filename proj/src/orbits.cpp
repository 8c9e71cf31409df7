#include "qrep/orbits.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qrep {

int OrbitCatalog::index_of(const IsoClass& cls) const {
  auto it = index_.find(cls);
  return it == index_.end() ? -1 : it->second;
}

OrbitCatalog build_catalog(const ModuleContext<FieldQ>& ctx, const Eigen::VectorXi& d) {
  OrbitCatalog cat;
  cat.word = ctx.word_ptr();
  cat.d = d;
  cat.classes = homogeneity_solutions(ctx.word(), d);
  for (int k = 0; k < cat.size(); ++k) cat.index_[cat.classes[static_cast<size_t>(k)]] = k;
  for (const Arrow& a : ctx.quiver().arrows) cat.dim_Ed += static_cast<long long>(d[a.from]) * d[a.to];
  for (int i = 0; i < d.size(); ++i) cat.dim_Gd += static_cast<long long>(d[i]) * d[i];
  int nu = ctx.nu();
  cat.hom_into = Eigen::MatrixXi::Zero(nu, cat.size());
  cat.hom_from = Eigen::MatrixXi::Zero(nu, cat.size());
  const Eigen::MatrixXi& H = ctx.hom_table();
  for (int k = 0; k < cat.size(); ++k) {
    const IsoClass& c = cat.classes[static_cast<size_t>(k)];
    for (int s = 0; s < nu; ++s) {
      long long into = 0, from = 0;
      for (int t = 0; t < nu; ++t) {
        into += static_cast<long long>(H(s, t)) * c.c[t];
        from += static_cast<long long>(H(t, s)) * c.c[t];
      }
      cat.hom_into(s, k) = static_cast<int>(into);
      cat.hom_from(s, k) = static_cast<int>(from);
    }
    long long end_dim = 0;
    for (int s = 0; s < nu; ++s) end_dim += static_cast<long long>(c.c[s]) * cat.hom_into(s, k);
    cat.orbit_dims.push_back(cat.dim_Gd - end_dim);
  }
  return cat;
}

long long orbit_dim(const OrbitCatalog& cat, int k) {
  if (k < 0 || k >= cat.size()) throw std::invalid_argument("orbit_dim: class not in catalog");
  return cat.orbit_dims[static_cast<size_t>(k)];
}

bool leq(const OrbitCatalog& cat, int kprime, int k) {
  if (kprime < 0 || kprime >= cat.size() || k < 0 || k >= cat.size()) {
    throw std::invalid_argument("leq: class not in catalog");
  }
  return (cat.hom_into.col(kprime).array() >= cat.hom_into.col(k).array()).all();
}

bool leq_dual(const OrbitCatalog& cat, int kprime, int k) {
  if (kprime < 0 || kprime >= cat.size() || k < 0 || k >= cat.size()) {
    throw std::invalid_argument("leq_dual: class not in catalog");
  }
  return (cat.hom_from.col(kprime).array() >= cat.hom_from.col(k).array()).all();
}

IsoClass cmin_class(const AdaptedWord& word, const Eigen::VectorXi& d) {
  IsoClass c;
  c.c = Eigen::VectorXi::Zero(word.nu());
  for (int i = 0; i < word.vertex_count(); ++i) {
    int t = word.simple_root_index(i);
    if (t < 0) throw InternalError("cmin: simple root missing from the order");
    c.c[t] = d[i];
  }
  return c;
}

int cmin_index(const OrbitCatalog& cat) {
  int k = cat.index_of(cmin_class(*cat.word, cat.d));
  if (k < 0) throw InternalError("cmin: semisimple class missing from the catalog");
  return k;
}

std::vector<int> support(const ModuleContext<FieldQ>& ctx, const IsoClass& cls) {
  std::vector<int> J;
  for (size_t a = 0; a < ctx.quiver().arrows.size(); ++a) {
    bool nonzero = false;
    for (int t = 0; t < ctx.nu() && !nonzero; ++t) {
      if (cls.c[t] == 0) continue;
      const auto& m = ctx.indec(t).maps[a];
      for (Eigen::Index r = 0; r < m.rows() && !nonzero; ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
          if (!(m(r, c) == Rat(0))) {
            nonzero = true;
            break;
          }
        }
      }
    }
    if (nonzero) J.push_back(static_cast<int>(a));
  }
  return J;
}

long long dim_Ed_of(const Quiver& q, const Eigen::VectorXi& d, const std::vector<int>& arrows) {
  long long s = 0;
  for (int a : arrows) {
    s += static_cast<long long>(d[q.arrows[static_cast<size_t>(a)].from]) * d[q.arrows[static_cast<size_t>(a)].to];
  }
  return s;
}

OrbitInfo orbit_info(const ModuleContext<FieldQ>& ctx, const OrbitCatalog& cat, int k) {
  OrbitInfo info;
  info.cls = cat.classes.at(static_cast<size_t>(k));
  info.dim = orbit_dim(cat, k);
  info.arrows_J = support(ctx, info.cls);
  info.dim_EdJ = dim_Ed_of(ctx.quiver(), cat.d, info.arrows_J);
  if (info.dim > info.dim_EdJ) throw InternalError("orbit dimension exceeds dim E_d(J(c))");
  info.smooth = info.dim == info.dim_EdJ;
  return info;
}

Laurent gl_order(int m) {
  Laurent r = Laurent::constant(Rat(1));
  for (int k = 0; k < m; ++k) {
    r *= Laurent::monomial(m, Rat(1)) - Laurent::monomial(k, Rat(1));
  }
  return r;
}

Laurent aut_order(const Eigen::MatrixXi& hom_table, const IsoClass& cls) {
  int nu = static_cast<int>(cls.c.size());
  long long exp = 0;
  for (int s = 0; s < nu; ++s) {
    for (int t = s + 1; t < nu; ++t) {
      exp += static_cast<long long>(cls.c[s]) * cls.c[t] * hom_table(s, t);
    }
  }
  Laurent r = Laurent::monomial(static_cast<int>(exp), Rat(1));
  for (int s = 0; s < nu; ++s) r *= gl_order(cls.c[s]);
  return r;
}

PointCounts point_counts(const ModuleContext<FieldQ>& ctx, const OrbitCatalog& cat, int k) {
  Laurent gd = Laurent::constant(Rat(1));
  for (int i = 0; i < cat.d.size(); ++i) gd *= gl_order(cat.d[i]);
  auto orbit_count = [&](int kk) {
    Laurent a = aut_order(ctx.hom_table(), cat.classes[static_cast<size_t>(kk)]);
    auto q = gd.divided_exact(a);
    if (!q) throw InternalError("point_counts: a_c does not divide |G_d|");
    return *q;
  };
  PointCounts pc;
  pc.orbit_count = orbit_count(k);
  int kmin = cmin_index(cat);
  Laurent sum;
  for (int kk = 0; kk < cat.size(); ++kk) {
    if (kk != kmin && leq(cat, kk, k)) sum += orbit_count(kk);
  }
  Laurent qm1 = Laurent::variable() - Laurent::constant(Rat(1));
  auto p = sum.divided_exact(qm1);
  if (!p) throw InternalError("point_counts: orbit sum not divisible by q-1");
  pc.projective_count = *p;
  pc.euler_char = pc.projective_count.eval(Rat(1));
  return pc;
}

std::vector<std::pair<int, int>> hasse_edges(const OrbitCatalog& cat) {
  int n = cat.size();
  std::vector<std::pair<int, int>> edges;
  for (int kp = 0; kp < n; ++kp) {
    for (int k = 0; k < n; ++k) {
      if (kp == k || !leq(cat, kp, k)) continue;
      bool covered = true;
      for (int m = 0; m < n && covered; ++m) {
        if (m != kp && m != k && leq(cat, kp, m) && leq(cat, m, k)) covered = false;
      }
      if (covered) edges.push_back({kp, k});
    }
  }
  return edges;
}

OpEnumeration enumerate_elementary_ops(const ModuleContext<FieldFp>& a, const ModuleContext<FieldFp>& b) {
  OpEnumeration out;
  int nu = a.nu();
  for (int s = 0; s < nu; ++s) {
    for (int t = 0; t < nu; ++t) {
      if (s == t) continue;
      long long ea = a.ext_between(t, s);
      long long eb = b.ext_between(t, s);
      if (ea != eb) {
        throw InternalError("ext dimension differs between primes for pair (" +
                            std::to_string(s) + ", " + std::to_string(t) + ")");
      }
      if (ea == 0) continue;
      auto ta = a.extension_classes(s, t);
      auto tb = b.extension_classes(s, t);
      std::set<IsoClass> classes;
      for (const auto& [cls, cnt] : ta) classes.insert(cls);
      std::set<IsoClass> classes_b;
      for (const auto& [cls, cnt] : tb) classes_b.insert(cls);
      if (classes != classes_b) {
        std::ostringstream os;
        os << "middle classes at p=" << a.field().p << " and p=" << b.field().p
           << " differ for pair (s=" << s + 1 << ", t=" << t + 1
           << "); keeping the union (counts are polynomial values)";
        out.warnings.push_back(os.str());
      }
      classes.insert(classes_b.begin(), classes_b.end());
      for (const IsoClass& middle : classes) {
        ElementaryOp op;
        op.s = s;
        op.t = t;
        op.middle = middle;
        op.op = middle.c;
        op.op[s] -= 1;
        op.op[t] -= 1;
        if (middle.c[s] > 0 || middle.c[t] > 0 || (middle.c.array() >= 2).any()) {
          std::ostringstream os;
          os << "middle term " << middle.to_string() << " for pair (s=" << s + 1 << ", t=" << t + 1
             << ") overlaps the ends or has multiplicity >= 2; op vector taken componentwise";
          out.warnings.push_back(os.str());
        }
        out.ops.push_back(std::move(op));
      }
    }
  }
  return out;
}

std::vector<int> ops_at(const IsoClass& cls, const std::vector<ElementaryOp>& ops) {
  std::vector<int> idx;
  for (size_t i = 0; i < ops.size(); ++i) {
    if (((cls.c + ops[i].op).array() >= 0).all()) idx.push_back(static_cast<int>(i));
  }
  return idx;
}

std::vector<int> s_set(const OrbitCatalog& cat, int k, const std::vector<ElementaryOp>& ops) {
  IsoClass cmin = cat.classes[static_cast<size_t>(cmin_index(cat))];
  std::set<int> found;
  for (const ElementaryOp& op : ops) {
    Eigen::VectorXi v = cmin.c + op.op;
    if ((v.array() < 0).any()) continue;
    int kp = cat.index_of(IsoClass{v});
    if (kp >= 0 && leq(cat, kp, k)) found.insert(kp);
  }
  return std::vector<int>(found.begin(), found.end());
}

std::vector<int> s_set_by_support(const ModuleContext<FieldQ>& ctx, const OrbitCatalog& cat, int k) {
  const AdaptedWord& w = *cat.word;
  IsoClass cmin = cmin_class(w, cat.d);
  std::set<int> found;
  for (int a : support(ctx, cat.classes[static_cast<size_t>(k)])) {
    const Arrow& ar = ctx.quiver().arrows[static_cast<size_t>(a)];
    Root sum = Root::Zero(w.vertex_count());
    sum[ar.from] = 1;
    sum[ar.to] = 1;
    int pos_sum = w.root_index(sum);
    if (pos_sum < 0) throw InternalError("s_set: alpha_i + alpha_j is not a root");
    Eigen::VectorXi v = cmin.c;
    v[pos_sum] += 1;
    v[w.simple_root_index(ar.from)] -= 1;
    v[w.simple_root_index(ar.to)] -= 1;
    int kp = cat.index_of(IsoClass{v});
    if (kp < 0) throw InternalError("s_set: c^{ij} is not in the catalog");
    found.insert(kp);
  }
  return std::vector<int>(found.begin(), found.end());
}

}  // namespace qrep
