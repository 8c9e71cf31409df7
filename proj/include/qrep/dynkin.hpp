#pragma once

// Simply laced Cartan data: diagrams, quiver orientations, positive
// roots, simple reflections, and sink-adapted reduced words of the
// longest Weyl group element together with the total order they induce
// on the positive roots.
//
// Vertex labeling convention (0-based internally, 1-based in all user
// facing text):
//   A_n : the path 1 - 2 - ... - n
//   D_n : branch vertex 3 adjacent to the leaves 1, 2 and to the chain
//         3 - 4 - ... - n
//   E_n : Bourbaki labeling (2 attached to 4 on the path 1-3-4-5-...-n)

#include <Eigen/Core>

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qrep/numeric.hpp"

namespace qrep {

enum class DynkinType { A, D, E };

char type_letter(DynkinType t);
DynkinType parse_type_letter(const std::string& s);

using Root = Eigen::VectorXi;

struct DynkinDiagram {
  DynkinType type = DynkinType::A;
  int rank = 0;
  Eigen::MatrixXi cartan;
  std::vector<std::pair<int, int>> edges;  // i < j, 0-based
};

// Throws std::invalid_argument on an invalid (type, rank) pair.
DynkinDiagram build_diagram(DynkinType type, int rank);

struct Arrow {
  int from = 0;
  int to = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct Quiver {
  DynkinDiagram diagram;
  std::vector<Arrow> arrows;  // one per edge

  int vertex_count() const { return diagram.rank; }
  bool is_sink(int i) const;
  bool is_source(int i) const;
  // reverse every arrow incident to i (the quiver reflection s_i when
  // i is a sink or a source); arrow order is preserved
  Quiver reversed_at(int i) const;
};

// Validates that the arrows orient exactly the diagram edges.
Quiver make_quiver(DynkinDiagram diagram, std::vector<Arrow> arrows);
// Every edge {i, j} with i < j oriented i -> j.
Quiver default_orientation(DynkinDiagram diagram);

struct RootSystem {
  std::vector<Root> positive_roots;  // graded lexicographic order
  int nu = 0;
};

RootSystem positive_roots(const DynkinDiagram& diagram);

// s_i(z) = z - (z, alpha_i)_Q alpha_i
Root reflect(const Root& z, int i, const DynkinDiagram& diagram);
long long inner_product(const Root& a, const Root& b, const DynkinDiagram& diagram);

// Multiplicity vector of an isomorphism class: c_t copies of the
// indecomposable attached to the t-th root of an adapted order.
struct IsoClass {
  Eigen::VectorXi c;

  friend bool operator==(const IsoClass& a, const IsoClass& b) {
    return a.c.size() == b.c.size() && a.c == b.c;
  }
  friend std::strong_ordering operator<=>(const IsoClass& a, const IsoClass& b) {
    for (Eigen::Index i = 0; i < std::min(a.c.size(), b.c.size()); ++i) {
      if (a.c[i] != b.c[i]) return a.c[i] <=> b.c[i];
    }
    return a.c.size() <=> b.c.size();
  }
  std::string to_string() const;
};

IsoClass unit_class(int nu, int t);

struct AdaptedWord {
  Quiver quiver;
  std::vector<int> word;           // i_1 ... i_nu, 0-based vertices
  std::vector<Root> root_order;    // alpha^t = s_{i_1}...s_{i_{t-1}}(alpha_{i_t})
  std::vector<Quiver> quiver_chain;  // Q_1 = quiver, Q_{k+1} = s_{i_k} Q_k

  int nu() const { return static_cast<int>(word.size()); }
  int vertex_count() const { return quiver.vertex_count(); }
  // position of a root in the order, -1 if not a positive root
  int root_index(const Root& r) const;
  // position t with alpha^t = alpha_i
  int simple_root_index(int vertex) const;
  Eigen::VectorXi dimension_vector(const IsoClass& cls) const;

 private:
  friend AdaptedWord adapted_word(const Quiver&);
  std::map<std::vector<int>, int> index_;
};

// Sink elimination with smallest-index tie breaking; the result is a
// reduced word for w_0 adapted to the quiver.
AdaptedWord adapted_word(const Quiver& quiver);

// All c with sum_t c_t alpha^t = sum_k d_k alpha_k, in lexicographic
// order of c.
std::vector<IsoClass> homogeneity_solutions(const AdaptedWord& word, const Eigen::VectorXi& d);

}  // namespace qrep
