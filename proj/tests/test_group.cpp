#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/group.hpp"

using namespace qwalk;

TEST_CASE("product examples") {
  const int n = 5;
  CHECK(mul(DihedralElement(n, 0, 0), DihedralElement(n, 1, 0)) == DihedralElement(n, 1, 0));
  CHECK(mul(DihedralElement(n, 1, 1), DihedralElement(n, 1, 1)) == DihedralElement::identity(n));
  // a b = b a^{n-1}
  CHECK(mul(DihedralElement(n, 1, 0), DihedralElement(n, 0, 1)) == DihedralElement(n, n - 1, 1));
  CHECK_THROWS_AS(mul(DihedralElement(5, 1, 0), DihedralElement(7, 1, 0)), ParameterError);
  CHECK_THROWS_AS(DihedralElement(5, 5, 0), ParameterError);
  CHECK_THROWS_AS(DihedralElement(5, 0, 2), ParameterError);
}

TEST_CASE("group axioms, exhaustive for n <= 7") {
  for (int n : {3, 5, 7}) {
    const auto g = all_elements(n);
    REQUIRE(g.size() == static_cast<std::size_t>(2 * n));
    const auto e = DihedralElement::identity(n);
    for (const auto& x : g) {
      CHECK(x * e == x);
      CHECK(e * x == x);
      CHECK(x * inverse(x) == e);
      CHECK(inverse(x) * x == e);
      for (const auto& y : g) {
        const auto xy = x * y;
        CHECK(xy.n() == n);
        // agrees with composition of the n-gon permutations
        CHECK(oracle::permutation(xy) == oracle::compose(oracle::permutation(x), oracle::permutation(y)));
        for (const auto& z : g) CHECK((x * y) * z == x * (y * z));
      }
    }
  }
}

TEST_CASE("presentation relations") {
  for (int n : {3, 5, 9}) {
    const auto a = DihedralElement::rotation(n, 1);
    const auto b = DihedralElement::reflection(n, 0);
    auto power = DihedralElement::identity(n);
    for (int k = 0; k < n; ++k) power = power * a;
    CHECK(power == DihedralElement::identity(n));
    CHECK(b * b == DihedralElement::identity(n));
    CHECK(b * a * b == inverse(a));
  }
}

TEST_CASE("even or small orders are rejected") {
  CHECK_THROWS_AS(cayley_graph(4), DomainError);
  CHECK_THROWS_AS(cayley_graph(1), DomainError);
  CHECK_THROWS_AS(semi_cayley_adjacency(6), DomainError);
  CHECK_THROWS_AS(all_elements(2), DomainError);
}

TEST_CASE("Cayley graph shape") {
  const CayleyGraph g3 = cayley_graph(3);
  CHECK(g3.edge_count() == 9);
  std::set<int> nb(g3.neighbors[0].begin(), g3.neighbors[0].end());
  const std::set<int> expected{DihedralElement(3, 1, 0).ordinal(), DihedralElement(3, 2, 0).ordinal(),
                               DihedralElement(3, 0, 1).ordinal()};
  CHECK(nb == expected);
  for (int n : {3, 5, 7, 11, 21}) {
    const CayleyGraph g = cayley_graph(n);
    CHECK(g.edge_count() == 3 * n);
    CHECK(g.is_connected());
    for (int u = 0; u < 2 * n; ++u) {
      std::set<int> s(g.neighbors[u].begin(), g.neighbors[u].end());
      CHECK(s.size() == 3);
      for (int v : s) {
        CHECK(g.has_edge(u, v));
        CHECK(g.has_edge(v, u));
      }
    }
  }
}

TEST_CASE("phi examples") {
  CHECK(phi(DihedralElement::identity(5)).value() == 0);
  CHECK(phi(DihedralElement::reflection(5, 0)).value() == 5);
  CHECK(phi(DihedralElement::reflection(5, 2)).value() == 8);
}

TEST_CASE("phi is a graph isomorphism, exhaustive for n <= 11") {
  for (int n = 3; n <= 11; n += 2) {
    const CayleyGraph g = cayley_graph(n);
    const auto a = semi_cayley_adjacency(n);
    const auto elems = all_elements(n);
    std::set<int> image;
    for (const auto& x : elems) image.insert(phi(x).value());
    CHECK(image.size() == static_cast<std::size_t>(2 * n));
    for (const auto& x : elems) {
      for (const auto& y : elems) {
        CHECK(g.has_edge(x.ordinal(), y.ordinal()) == (a(phi(x).value(), phi(y).value()) == 1));
      }
    }
  }
}

TEST_CASE("semi-Cayley adjacency") {
  const auto a3 = semi_cayley_adjacency(3);
  CHECK(a3(0, 1) == 1);
  CHECK(a3(0, 2) == 1);
  CHECK(a3(0, 3) == 1);
  CHECK(a3.row(0).sum() == 3);
  for (int n : {3, 5, 7, 13, 31}) {
    const auto a = semi_cayley_adjacency(n);
    CHECK(a.cast<double>() == oracle::block_adjacency(n));
    CHECK(a == a.transpose());
    CHECK(a.diagonal().sum() == 0);
    for (int i = 0; i < 2 * n; ++i) {
      CHECK(a.row(i).sum() == 3);
      for (int j : semi_cayley_neighbors(n, i)) CHECK(semi_cayley_adjacent(n, i, j));
    }
    CHECK(normalized_adjacency(n).isApprox(a.cast<double>() / 3.0));
  }
}

TEST_CASE("vertex index parts") {
  const VertexIndex v = VertexIndex::from_parts(7, 1, 3);
  CHECK(v.value() == 10);
  CHECK(v.block() == 1);
  CHECK(v.residue() == 3);
  CHECK_THROWS_AS(VertexIndex(7, 14), ParameterError);
  CHECK_THROWS_AS(VertexIndex(7, -1), ParameterError);
}
