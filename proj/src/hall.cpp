#include "qrep/hall.hpp"

#include <algorithm>
#include <sstream>

namespace qrep {

long long nth_prime(int idx) {
  static std::vector<long long> primes = {2, 3};
  while (static_cast<int>(primes.size()) <= idx) {
    long long c = primes.back() + 2;
    while (true) {
      bool ok = true;
      for (long long p : primes) {
        if (p * p > c) break;
        if (c % p == 0) {
          ok = false;
          break;
        }
      }
      if (ok) break;
      c += 2;
    }
    primes.push_back(c);
  }
  return primes[static_cast<size_t>(idx)];
}

namespace {

// One subspace of F_p^d in reduced row echelon form.
struct Subspace {
  MatX<Fp> rows;            // e x d, rows span the space
  std::vector<int> pivots;  // ascending pivot columns
  std::vector<int> free_coords;  // complement coordinates
};

// v in the row space? (v is consumed)
bool reduces_to_zero(const Subspace& w, VecX<Fp> v) {
  for (size_t r = 0; r < w.pivots.size(); ++r) {
    Fp f = v[w.pivots[r]];
    if (!f.is_zero()) v -= f * w.rows.row(static_cast<Eigen::Index>(r)).transpose();
  }
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) return false;
  }
  return true;
}

// Enumerate all e-dimensional subspaces of F_p^d by pivot pattern.
void for_each_subspace(const FieldFp& field, int d, int e,
                       const std::function<void(const Subspace&)>& visit) {
  if (e < 0 || e > d) return;
  std::vector<int> pivots(static_cast<size_t>(e));
  for (int i = 0; i < e; ++i) pivots[static_cast<size_t>(i)] = i;
  while (true) {
    std::vector<std::pair<int, int>> free_pos;  // (row, col)
    std::vector<bool> is_pivot(static_cast<size_t>(d), false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    for (int r = 0; r < e; ++r) {
      for (int c = pivots[static_cast<size_t>(r)] + 1; c < d; ++c) {
        if (!is_pivot[static_cast<size_t>(c)]) free_pos.push_back({r, c});
      }
    }
    Subspace w;
    w.pivots = pivots;
    for (int c = 0; c < d; ++c) {
      if (!is_pivot[static_cast<size_t>(c)]) w.free_coords.push_back(c);
    }
    w.rows = field_zeros(field, e, d);
    for (int r = 0; r < e; ++r) w.rows(r, pivots[static_cast<size_t>(r)]) = field.make(1);
    std::vector<long long> vals(free_pos.size(), 0);
    while (true) {
      for (size_t i = 0; i < free_pos.size(); ++i) {
        w.rows(free_pos[i].first, free_pos[i].second) = field.make(vals[i]);
      }
      visit(w);
      size_t k = 0;
      while (k < vals.size()) {
        if (++vals[k] < field.p) break;
        vals[k] = 0;
        ++k;
      }
      if (k == vals.size()) break;
    }
    // next pivot combination
    int i = e - 1;
    while (i >= 0 && pivots[static_cast<size_t>(i)] == d - e + i) --i;
    if (i < 0) break;
    ++pivots[static_cast<size_t>(i)];
    for (int j = i + 1; j < e; ++j) pivots[static_cast<size_t>(j)] = pivots[static_cast<size_t>(j - 1)] + 1;
  }
}

std::vector<int> topological_order(const Quiver& q) {
  int n = q.vertex_count();
  std::vector<int> indeg(static_cast<size_t>(n), 0);
  for (const Arrow& a : q.arrows) ++indeg[static_cast<size_t>(a.to)];
  std::vector<int> order;
  std::vector<int> ready;
  for (int i = n - 1; i >= 0; --i) {
    if (indeg[static_cast<size_t>(i)] == 0) ready.push_back(i);
  }
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (const Arrow& a : q.arrows) {
      if (a.from == v && --indeg[static_cast<size_t>(a.to)] == 0) ready.push_back(a.to);
    }
  }
  if (static_cast<int>(order.size()) != n) throw InternalError("quiver orientation has a cycle");
  return order;
}

struct SubrepSearch {
  const ModuleContext<FieldFp>& ctx;
  const Rep<FieldFp>& top;
  const Eigen::VectorXi& subdims;
  const std::function<void(const Rep<FieldFp>&, const Rep<FieldFp>&)>& visit;
  std::vector<int> order;
  std::vector<int> rank_of_vertex;  // position in order
  std::vector<Subspace> chosen;

  void emit() {
    const Quiver& q = top.quiver;
    const FieldFp& field = ctx.field();
    Rep<FieldFp> sub{q, subdims, {}};
    Rep<FieldFp> quot{q, top.dims - subdims, {}};
    std::vector<MatX<Fp>> proj(static_cast<size_t>(q.vertex_count()));
    for (int v = 0; v < q.vertex_count(); ++v) {
      const Subspace& w = chosen[static_cast<size_t>(v)];
      int d = top.dims[v], e = subdims[v];
      MatX<Fp> pi = field_zeros(field, d - e, d);
      for (int k = 0; k < d - e; ++k) {
        int c = w.free_coords[static_cast<size_t>(k)];
        pi(k, c) = field.make(1);
        for (size_t r = 0; r < w.pivots.size(); ++r) {
          pi(k, w.pivots[r]) = -w.rows(static_cast<Eigen::Index>(r), c);
        }
      }
      proj[static_cast<size_t>(v)] = std::move(pi);
    }
    for (size_t a = 0; a < q.arrows.size(); ++a) {
      const Arrow& ar = q.arrows[a];
      const Subspace& wi = chosen[static_cast<size_t>(ar.from)];
      const Subspace& wj = chosen[static_cast<size_t>(ar.to)];
      MatX<Fp> fb = top.maps[a] * wi.rows.transpose();  // d_j x e_i
      MatX<Fp> s = field_zeros(ctx.field(), subdims[ar.to], subdims[ar.from]);
      for (Eigen::Index r = 0; r < s.rows(); ++r) {
        s.row(r) = fb.row(wj.pivots[static_cast<size_t>(r)]);
      }
      sub.maps.push_back(std::move(s));
      // quotient map: project, then restrict to complement coordinates
      MatX<Fp> pf = proj[static_cast<size_t>(ar.to)] * top.maps[a];
      MatX<Fp> g = field_zeros(ctx.field(), quot.dims[ar.to], quot.dims[ar.from]);
      for (Eigen::Index c = 0; c < g.cols(); ++c) {
        g.col(c) = pf.col(wi.free_coords[static_cast<size_t>(c)]);
      }
      quot.maps.push_back(std::move(g));
    }
    visit(sub, quot);
  }

  void recurse(size_t pos) {
    if (pos == order.size()) {
      emit();
      return;
    }
    int v = order[pos];
    const Quiver& q = top.quiver;
    for_each_subspace(ctx.field(), top.dims[v], subdims[v], [&](const Subspace& w) {
      for (size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].to != v) continue;
        int i = q.arrows[a].from;
        const Subspace& wi = chosen[static_cast<size_t>(i)];
        MatX<Fp> image = top.maps[a] * wi.rows.transpose();
        for (Eigen::Index c = 0; c < image.cols(); ++c) {
          if (!reduces_to_zero(w, image.col(c))) return;
        }
      }
      chosen[static_cast<size_t>(v)] = w;
      recurse(pos + 1);
    });
  }
};

}  // namespace

void for_each_subrep(const ModuleContext<FieldFp>& ctx, const Rep<FieldFp>& top,
                     const Eigen::VectorXi& subdims,
                     const std::function<void(const Rep<FieldFp>&, const Rep<FieldFp>&)>& visit) {
  if (subdims.size() != top.dims.size()) throw std::invalid_argument("for_each_subrep: dimension vector length");
  if ((subdims.array() < 0).any() || ((top.dims - subdims).array() < 0).any()) return;
  if (top.total_dim() > ctx.guards().max_total_dim) {
    throw GuardError("subrepresentation enumeration: total dimension " +
                     std::to_string(top.total_dim()) + " exceeds the guard (" +
                     std::to_string(ctx.guards().max_total_dim) + ")");
  }
  SubrepSearch search{ctx, top, subdims, visit, topological_order(top.quiver), {}, {}};
  search.chosen.resize(static_cast<size_t>(top.quiver.vertex_count()));
  search.recurse(0);
}

long long count_submodules(const ModuleContext<FieldFp>& ctx, const Rep<FieldFp>& top,
                           const IsoClass& sub, const IsoClass& quot) {
  Eigen::VectorXi ds = ctx.word().dimension_vector(sub);
  Eigen::VectorXi dq = ctx.word().dimension_vector(quot);
  if (ds + dq != top.dims) throw std::invalid_argument("count_submodules: dimension vectors do not balance");
  long long count = 0;
  for_each_subrep(ctx, top, ds, [&](const Rep<FieldFp>& w, const Rep<FieldFp>& q) {
    if (ctx.identify(w) == sub && ctx.identify(q) == quot) ++count;
  });
  return count;
}

static std::vector<int> memo_key(const IsoClass& top, const std::vector<IsoClass>& quotients) {
  std::vector<int> key(top.c.data(), top.c.data() + top.c.size());
  for (const IsoClass& q : quotients) {
    key.push_back(-1);
    key.insert(key.end(), q.c.data(), q.c.data() + q.c.size());
  }
  return key;
}

long long filtration_count(const ModuleContext<FieldFp>& ctx, const IsoClass& top,
                           const std::vector<IsoClass>& quotients, HallMemo& memo) {
  std::vector<IsoClass> quots;
  Eigen::VectorXi total = Eigen::VectorXi::Zero(ctx.word().vertex_count());
  for (const IsoClass& q : quotients) {
    if ((q.c.array() != 0).any()) quots.push_back(q);
    total += ctx.word().dimension_vector(q);
  }
  if (total != ctx.word().dimension_vector(top)) {
    throw std::invalid_argument("filtration_count: quotient dimensions do not sum to the top");
  }
  std::vector<int> key = memo_key(top, quots);
  if (auto it = memo.table.find(key); it != memo.table.end()) return it->second;

  long long result = 0;
  if (quots.empty()) {
    result = (top.c.array() == 0).all() ? 1 : 0;
  } else {
    IsoClass first = quots.front();
    std::vector<IsoClass> rest(quots.begin() + 1, quots.end());
    Eigen::VectorXi subdims = ctx.word().dimension_vector(top) - ctx.word().dimension_vector(first);
    if ((subdims.array() >= 0).all()) {
      Rep<FieldFp> rep = ctx.rep_of_class(top);
      for_each_subrep(ctx, rep, subdims, [&](const Rep<FieldFp>& w, const Rep<FieldFp>& q) {
        if (ctx.identify(q) == first) result += filtration_count(ctx, ctx.identify(w), rest, memo);
      });
    }
  }
  memo.table[key] = result;
  return result;
}

std::pair<Laurent, Rat> reduced_ext(const Laurent& ext_count) {
  Laurent qm1 = Laurent::variable() - Laurent::constant(Rat(1));
  auto e = ext_count.divided_exact(qm1);
  if (!e) throw InternalError("extension-count polynomial is not divisible by q-1");
  return {*e, e->eval(Rat(1))};
}

Laurent interpolate_counts(const std::function<Rat(long long)>& counter, const Guards& guards,
                           const std::function<long long(int)>& prime_at) {
  std::vector<std::pair<long long, Rat>> samples;
  auto sample_up_to = [&](int count) {
    while (static_cast<int>(samples.size()) < count) {
      long long p = prime_at(static_cast<int>(samples.size()));
      samples.push_back({p, counter(p)});
    }
  };
  int m = 4;
  while (true) {
    sample_up_to(m + 2);
    std::vector<std::pair<long long, Rat>> pts(samples.begin(), samples.begin() + m);
    Laurent poly = interpolate_through(pts);
    bool ok = true;
    for (int i = m; i < m + 2; ++i) {
      if (poly.eval(to_rat(samples[static_cast<size_t>(i)].first)) != samples[static_cast<size_t>(i)].second) {
        ok = false;
        break;
      }
    }
    if (ok) return poly;
    if (m >= guards.max_interp_degree + 1) {
      std::ostringstream os;
      os << "interpolation did not stabilize within degree " << guards.max_interp_degree << "; samples:";
      for (const auto& [p, v] : samples) os << " (" << p << ", " << rat_to_string(v) << ")";
      throw GuardError(os.str());
    }
    m = std::min(m + 2, guards.max_interp_degree + 1);
  }
}

}  // namespace qrep
