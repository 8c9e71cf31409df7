#include "qrep/dynkin.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qrep {

char type_letter(DynkinType t) {
  switch (t) {
    case DynkinType::A: return 'A';
    case DynkinType::D: return 'D';
    case DynkinType::E: return 'E';
  }
  return '?';
}

DynkinType parse_type_letter(const std::string& s) {
  if (s == "A" || s == "a") return DynkinType::A;
  if (s == "D" || s == "d") return DynkinType::D;
  if (s == "E" || s == "e") return DynkinType::E;
  throw std::invalid_argument("unknown Dynkin type '" + s + "' (expected A, D or E)");
}

static std::vector<std::pair<int, int>> edge_list(DynkinType type, int rank) {
  std::vector<std::pair<int, int>> edges;
  switch (type) {
    case DynkinType::A:
      if (rank < 1) throw std::invalid_argument("type A requires rank >= 1");
      for (int i = 0; i + 1 < rank; ++i) edges.push_back({i, i + 1});
      break;
    case DynkinType::D:
      if (rank < 4) throw std::invalid_argument("type D requires rank >= 4");
      edges.push_back({0, 2});
      edges.push_back({1, 2});
      for (int i = 2; i + 1 < rank; ++i) edges.push_back({i, i + 1});
      break;
    case DynkinType::E:
      if (rank < 6 || rank > 8) throw std::invalid_argument("type E requires rank in {6, 7, 8}");
      edges.push_back({0, 2});   // 1 - 3
      edges.push_back({1, 3});   // 2 - 4
      for (int i = 2; i + 1 < rank; ++i) edges.push_back({i, i + 1});  // 3-4-...-n
      break;
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

DynkinDiagram build_diagram(DynkinType type, int rank) {
  DynkinDiagram d;
  d.type = type;
  d.rank = rank;
  d.edges = edge_list(type, rank);
  d.cartan = Eigen::MatrixXi::Zero(rank, rank);
  for (int i = 0; i < rank; ++i) d.cartan(i, i) = 2;
  for (auto [i, j] : d.edges) {
    d.cartan(i, j) = -1;
    d.cartan(j, i) = -1;
  }
  return d;
}

bool Quiver::is_sink(int i) const {
  for (const Arrow& a : arrows) {
    if (a.from == i) return false;
  }
  return true;
}

bool Quiver::is_source(int i) const {
  for (const Arrow& a : arrows) {
    if (a.to == i) return false;
  }
  return true;
}

Quiver Quiver::reversed_at(int i) const {
  Quiver q = *this;
  for (Arrow& a : q.arrows) {
    if (a.from == i || a.to == i) std::swap(a.from, a.to);
  }
  return q;
}

Quiver make_quiver(DynkinDiagram diagram, std::vector<Arrow> arrows) {
  std::set<std::pair<int, int>> want(diagram.edges.begin(), diagram.edges.end());
  for (const Arrow& a : arrows) {
    if (a.from < 0 || a.from >= diagram.rank || a.to < 0 || a.to >= diagram.rank) {
      throw std::invalid_argument("arrow endpoint out of range: " + std::to_string(a.from + 1) +
                                  ">" + std::to_string(a.to + 1));
    }
    auto e = std::minmax(a.from, a.to);
    if (!want.erase({e.first, e.second})) {
      throw std::invalid_argument("arrow " + std::to_string(a.from + 1) + ">" +
                                  std::to_string(a.to + 1) +
                                  " does not orient a fresh diagram edge");
    }
  }
  if (!want.empty()) {
    auto [i, j] = *want.begin();
    throw std::invalid_argument("edge {" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                "} is missing an orientation");
  }
  return Quiver{std::move(diagram), std::move(arrows)};
}

Quiver default_orientation(DynkinDiagram diagram) {
  std::vector<Arrow> arrows;
  for (auto [i, j] : diagram.edges) arrows.push_back({i, j});
  return Quiver{std::move(diagram), std::move(arrows)};
}

long long inner_product(const Root& a, const Root& b, const DynkinDiagram& diagram) {
  long long s = 0;
  for (int i = 0; i < diagram.rank; ++i) {
    for (int j = 0; j < diagram.rank; ++j) s += static_cast<long long>(a[i]) * diagram.cartan(i, j) * b[j];
  }
  return s;
}

Root reflect(const Root& z, int i, const DynkinDiagram& diagram) {
  if (i < 0 || i >= diagram.rank) throw std::invalid_argument("reflect: vertex index out of range");
  if (z.size() != diagram.rank) throw std::invalid_argument("reflect: vector has wrong length");
  long long pairing = 0;
  for (int j = 0; j < diagram.rank; ++j) pairing += static_cast<long long>(diagram.cartan(i, j)) * z[j];
  Root r = z;
  r[i] -= static_cast<int>(pairing);
  return r;
}

static bool graded_lex_less(const Root& a, const Root& b) {
  int sa = a.sum(), sb = b.sum();
  if (sa != sb) return sa < sb;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

RootSystem positive_roots(const DynkinDiagram& diagram) {
  std::set<std::vector<int>> seen;
  std::vector<Root> queue;
  for (int i = 0; i < diagram.rank; ++i) {
    Root e = Root::Zero(diagram.rank);
    e[i] = 1;
    queue.push_back(e);
    seen.insert(std::vector<int>(e.data(), e.data() + e.size()));
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    Root z = queue[head];
    for (int i = 0; i < diagram.rank; ++i) {
      Root r = reflect(z, i, diagram);
      if ((r.array() < 0).any()) continue;  // roots are all-positive or all-negative
      std::vector<int> key(r.data(), r.data() + r.size());
      if (seen.insert(key).second) queue.push_back(r);
    }
  }
  std::sort(queue.begin(), queue.end(), graded_lex_less);
  RootSystem rs;
  rs.positive_roots = std::move(queue);
  rs.nu = static_cast<int>(rs.positive_roots.size());
  return rs;
}

std::string IsoClass::to_string() const {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (i) os << ",";
    os << c[i];
  }
  os << ")";
  return os.str();
}

IsoClass unit_class(int nu, int t) {
  IsoClass b;
  b.c = Eigen::VectorXi::Zero(nu);
  b.c[t] = 1;
  return b;
}

int AdaptedWord::root_index(const Root& r) const {
  auto it = index_.find(std::vector<int>(r.data(), r.data() + r.size()));
  return it == index_.end() ? -1 : it->second;
}

int AdaptedWord::simple_root_index(int vertex) const {
  Root e = Root::Zero(vertex_count());
  e[vertex] = 1;
  return root_index(e);
}

Eigen::VectorXi AdaptedWord::dimension_vector(const IsoClass& cls) const {
  if (cls.c.size() != nu()) throw std::invalid_argument("class has wrong length for this word");
  Eigen::VectorXi d = Eigen::VectorXi::Zero(vertex_count());
  for (int t = 0; t < nu(); ++t) d += cls.c[t] * root_order[t];
  return d;
}

namespace {

// Depth-first search over sink choices, smallest index first. A prefix
// is kept only while every induced root s_{i_1}...s_{i_{k-1}}(alpha_{i_k})
// stays positive and fresh, which is exactly reducedness; plain greedy
// sink elimination can produce non-reduced words (A3 with 1>2, 2>3
// already fails), so choices may need to be revisited.
struct WordSearch {
  const DynkinDiagram& diagram;
  int nu;
  std::vector<int> word;
  std::vector<Root> roots;
  std::vector<Quiver> chain;
  std::map<std::vector<int>, int> used;

  bool extend(const Quiver& current) {
    int k = static_cast<int>(word.size());
    if (k == nu) return true;
    for (int i = 0; i < current.vertex_count(); ++i) {
      if (!current.is_sink(i)) continue;
      Root z = Root::Zero(current.vertex_count());
      z[i] = 1;
      for (int j = k - 1; j >= 0; --j) z = reflect(z, word[static_cast<size_t>(j)], diagram);
      if ((z.array() < 0).any()) continue;
      std::vector<int> key(z.data(), z.data() + z.size());
      if (used.count(key)) continue;
      word.push_back(i);
      roots.push_back(z);
      chain.push_back(current);
      used[key] = k;
      if (extend(current.reversed_at(i))) return true;
      word.pop_back();
      roots.pop_back();
      chain.pop_back();
      used.erase(key);
    }
    return false;
  }
};

}  // namespace

AdaptedWord adapted_word(const Quiver& quiver) {
  int nu = positive_roots(quiver.diagram).nu;
  WordSearch search{quiver.diagram, nu, {}, {}, {}, {}};
  if (!search.extend(quiver)) {
    throw InternalError("adapted_word: no adapted reduced word found");
  }
  AdaptedWord w;
  w.quiver = quiver;
  w.word = std::move(search.word);
  w.root_order = std::move(search.roots);
  w.quiver_chain = std::move(search.chain);
  w.index_ = std::move(search.used);
  return w;
}

static void homogeneity_dfs(const AdaptedWord& word, int t, Eigen::VectorXi& remaining,
                            Eigen::VectorXi& c, std::vector<IsoClass>& out) {
  if (t == word.nu()) {
    if (remaining.isZero()) out.push_back(IsoClass{c});
    return;
  }
  const Root& alpha = word.root_order[t];
  int bound = -1;  // min over supported coordinates of remaining/alpha
  for (Eigen::Index i = 0; i < alpha.size(); ++i) {
    if (alpha[i] > 0) {
      int b = remaining[i] / alpha[i];
      bound = bound < 0 ? b : std::min(bound, b);
    }
  }
  for (int m = 0; m <= bound; ++m) {
    c[t] = m;
    homogeneity_dfs(word, t + 1, remaining, c, out);
    remaining -= alpha;
  }
  remaining += (bound + 1) * alpha;
  c[t] = 0;
}

std::vector<IsoClass> homogeneity_solutions(const AdaptedWord& word, const Eigen::VectorXi& d) {
  if (d.size() != word.vertex_count()) throw std::invalid_argument("dimension vector has wrong length");
  if ((d.array() < 0).any()) throw std::invalid_argument("dimension vector must be nonnegative");
  std::vector<IsoClass> out;
  Eigen::VectorXi remaining = d;
  Eigen::VectorXi c = Eigen::VectorXi::Zero(word.nu());
  homogeneity_dfs(word, 0, remaining, c, out);
  return out;
}

}  // namespace qrep
