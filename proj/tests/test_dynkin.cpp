#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"

using namespace qtest;

TEST_CASE("diagram construction") {
  DynkinDiagram a2d = build_diagram(DynkinType::A, 2);
  Eigen::MatrixXi want(2, 2);
  want << 2, -1, -1, 2;
  CHECK(a2d.cartan == want);
  CHECK(a2d.edges == std::vector<std::pair<int, int>>{{0, 1}});

  DynkinDiagram a1d = build_diagram(DynkinType::A, 1);
  CHECK(a1d.cartan(0, 0) == 2);
  CHECK(a1d.edges.empty());

  DynkinDiagram d4d = build_diagram(DynkinType::D, 4);
  CHECK(d4d.edges == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}, {2, 3}});
  CHECK(d4d.cartan == d4d.cartan.transpose().eval());
  int branch_neighbors = 0;
  for (int j = 0; j < 4; ++j) branch_neighbors += d4d.cartan(2, j) == -1 ? 1 : 0;
  CHECK(branch_neighbors == 3);

  CHECK_THROWS_AS(build_diagram(DynkinType::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_diagram(DynkinType::D, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_diagram(DynkinType::E, 5), std::invalid_argument);
  CHECK_THROWS_AS(build_diagram(DynkinType::E, 9), std::invalid_argument);
}

TEST_CASE("quiver validation") {
  CHECK_THROWS_AS(make_quiver(build_diagram(DynkinType::A, 3), {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_quiver(build_diagram(DynkinType::A, 2), {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(make_quiver(build_diagram(DynkinType::A, 2), {{0, 2}, {0, 1}}), std::invalid_argument);
  Quiver q = a3();
  CHECK(q.is_sink(2));
  CHECK(q.is_source(0));
  CHECK(!q.is_sink(1));
  Quiver r = q.reversed_at(2);
  CHECK(r.is_source(2));
}

TEST_CASE("positive root counts per type") {
  CHECK(positive_roots(build_diagram(DynkinType::A, 2)).nu == 3);
  CHECK(positive_roots(build_diagram(DynkinType::A, 4)).nu == 10);
  CHECK(positive_roots(build_diagram(DynkinType::D, 4)).nu == 12);
  CHECK(positive_roots(build_diagram(DynkinType::D, 5)).nu == 20);
  CHECK(positive_roots(build_diagram(DynkinType::E, 6)).nu == 36);
  CHECK(positive_roots(build_diagram(DynkinType::E, 7)).nu == 63);
  CHECK(positive_roots(build_diagram(DynkinType::E, 8)).nu == 120);
}

TEST_CASE("positive roots of A2") {
  RootSystem rs = positive_roots(build_diagram(DynkinType::A, 2));
  std::set<std::vector<int>> got;
  for (const Root& r : rs.positive_roots) got.insert({r[0], r[1]});
  CHECK(got == std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}});
  // every root has norm 2 and simple roots appear
  for (const Root& r : rs.positive_roots) {
    CHECK(inner_product(r, r, build_diagram(DynkinType::A, 2)) == 2);
  }
}

TEST_CASE("simple reflections") {
  DynkinDiagram d = build_diagram(DynkinType::A, 2);
  Root a1 = ivec({1, 0}), a2 = ivec({0, 1});
  CHECK(reflect(a1, 1, d) == ivec({1, 1}));
  CHECK(reflect(a1, 0, d) == ivec({-1, 0}));
  CHECK_THROWS_AS(reflect(a1, 2, d), std::invalid_argument);

  DynkinDiagram d4d = build_diagram(DynkinType::D, 4);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 50; ++trial) {
    Root z(4);
    for (int i = 0; i < 4; ++i) z[i] = entry(rng);
    for (int i = 0; i < 4; ++i) {
      Root once = reflect(z, i, d4d);
      CHECK(reflect(once, i, d4d) == z);                        // involution
      CHECK(inner_product(once, once, d4d) == inner_product(z, z, d4d));
    }
  }
}

namespace {

void check_adapted(const AdaptedWord& w) {
  RootSystem rs = positive_roots(w.quiver.diagram);
  CHECK(w.nu() == rs.nu);
  std::set<std::vector<int>> order_roots, all_roots;
  for (const Root& r : w.root_order) order_roots.insert({r.data(), r.data() + r.size()});
  for (const Root& r : rs.positive_roots) all_roots.insert({r.data(), r.data() + r.size()});
  CHECK(order_roots == all_roots);  // bijective onto R+, hence reduced
  // sink condition along the reflected chain
  REQUIRE(w.quiver_chain.size() == static_cast<size_t>(w.nu()));
  CHECK(same_quiver(w.quiver_chain[0], w.quiver));
  for (int k = 0; k < w.nu(); ++k) {
    CHECK(w.quiver_chain[static_cast<size_t>(k)].is_sink(w.word[static_cast<size_t>(k)]));
    if (k + 1 < w.nu()) {
      CHECK(same_quiver(w.quiver_chain[static_cast<size_t>(k) + 1],
                        w.quiver_chain[static_cast<size_t>(k)].reversed_at(w.word[static_cast<size_t>(k)])));
    }
  }
  // the root formula itself
  for (int t = 0; t < w.nu(); ++t) {
    Root z = Root::Zero(w.vertex_count());
    z[w.word[static_cast<size_t>(t)]] = 1;
    for (int k = t - 1; k >= 0; --k) z = reflect(z, w.word[static_cast<size_t>(k)], w.quiver.diagram);
    CHECK(z == w.root_order[static_cast<size_t>(t)]);
  }
}

}  // namespace

TEST_CASE("adapted word for A2") {
  AdaptedWord w = adapted_word(a2());
  CHECK(w.word == std::vector<int>{1, 0, 1});
  CHECK(w.root_order[0] == ivec({0, 1}));
  CHECK(w.root_order[1] == ivec({1, 1}));
  CHECK(w.root_order[2] == ivec({1, 0}));
  check_adapted(w);
}

TEST_CASE("A2 has a unique adapted word, found by exhaustion") {
  // brute force: all 8 words of length 3 over {s_1, s_2}; keep the ones
  // that are reduced (all induced roots positive and distinct) and whose
  // letters are sinks along the reflected chain
  Quiver q = a2();
  std::vector<std::vector<int>> adapted;
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<int> word = {(mask >> 2) & 1, (mask >> 1) & 1, mask & 1};
    std::set<std::vector<int>> roots;
    bool ok = true;
    for (int t = 0; t < 3 && ok; ++t) {
      Root z = Root::Zero(2);
      z[word[static_cast<size_t>(t)]] = 1;
      for (int k = t - 1; k >= 0; --k) z = reflect(z, word[static_cast<size_t>(k)], q.diagram);
      if ((z.array() < 0).any() || !roots.insert({z[0], z[1]}).second) ok = false;
    }
    Quiver current = q;
    for (int t = 0; t < 3 && ok; ++t) {
      if (!current.is_sink(word[static_cast<size_t>(t)])) ok = false;
      current = current.reversed_at(word[static_cast<size_t>(t)]);
    }
    if (ok) adapted.push_back(word);
  }
  REQUIRE(adapted.size() == 1);
  CHECK(adapted[0] == adapted_word(q).word);
}

TEST_CASE("root counts match the closed forms") {
  auto binom_a = [](int n) { return n * (n + 1) / 2; };
  for (int n : {1, 2, 3, 5, 7}) CHECK(positive_roots(build_diagram(DynkinType::A, n)).nu == binom_a(n));
  for (int n : {4, 5, 6}) CHECK(positive_roots(build_diagram(DynkinType::D, n)).nu == n * (n - 1));
}

TEST_CASE("adapted word for A1") {
  AdaptedWord w = adapted_word(a1());
  CHECK(w.word == std::vector<int>{0});
}

TEST_CASE("adapted word for A3, D4, E6") {
  AdaptedWord w3 = adapted_word(a3());
  CHECK(w3.nu() == 6);
  CHECK(w3.word[0] == 2);  // the unique sink
  check_adapted(w3);
  check_adapted(adapted_word(d4()));
  check_adapted(adapted_word(e6()));
}

TEST_CASE("homogeneity solutions") {
  AdaptedWord w = adapted_word(a2());
  auto sols = homogeneity_solutions(w, ivec({1, 1}));
  REQUIRE(sols.size() == 2);
  std::set<IsoClass> got(sols.begin(), sols.end());
  CHECK(got.count(cls({1, 0, 1})) == 1);
  CHECK(got.count(cls({0, 1, 0})) == 1);

  auto zero = homogeneity_solutions(w, ivec({0, 0}));
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].c.isZero());

  AdaptedWord w3 = adapted_word(a3());
  CHECK(homogeneity_solutions(w3, ivec({1, 1, 1})).size() == 4);

  // solutions satisfy the linear system exactly and are pairwise distinct
  auto sols3 = homogeneity_solutions(w3, ivec({1, 2, 1}));
  CHECK(sols3.size() == 5);
  std::set<IsoClass> distinct(sols3.begin(), sols3.end());
  CHECK(distinct.size() == sols3.size());
  for (const IsoClass& c : sols3) {
    CHECK(w3.dimension_vector(c) == ivec({1, 2, 1}));
    // Tr additivity: weighted heights add up to the total dimension
    long long tr = 0;
    for (int t = 0; t < w3.nu(); ++t) tr += c.c[t] * w3.root_order[static_cast<size_t>(t)].sum();
    CHECK(tr == 4);
  }
}
