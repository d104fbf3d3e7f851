#include "quivexp/errors.hpp"
#include "quivexp/quiver.hpp"

#include <doctest.h>

#include <random>

using namespace quivexp;

namespace {

Quiver bipartite() { return parse_quiver("vertices 3\n1 -> 2\n1 -> 2\n3 -> 2\n3 -> 2\n"); }

DimVector random_vector(std::mt19937_64& gen, std::size_t n, int max) {
  std::uniform_int_distribution<int> dist(0, max);
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = dist(gen);
  return DimVector(v);
}

}  // namespace

TEST_CASE("make_kronecker") {
  Quiver k3 = make_kronecker(3);
  CHECK(k3.vertex_count() == 2);
  CHECK(k3.arrows() == std::vector<Arrow>(3, Arrow{0, 1}));
  CHECK(k3.is_kronecker());
  CHECK(make_kronecker(1).arrows().size() == 1);
  CHECK(make_kronecker(2).arrow_count(0, 1) == 2);
  CHECK_THROWS_AS(make_kronecker(0), InputError);
}

TEST_CASE("quiver construction rejects bad input") {
  CHECK_THROWS_AS(Quiver(2, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(Quiver(2, {{0, 2}}), InputError);
  CHECK_THROWS_AS(Quiver(1, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Quiver(0, {}), InputError);
  Quiver q(3, {{2, 1}, {1, 0}});
  CHECK(q.topological_order() == std::vector<int>{2, 1, 0});
}

TEST_CASE("dimension vectors") {
  DimVector d{3, 6, 5};
  CHECK(d.total() == 14);
  CHECK(DimVector{3, 5, 1}.fits_in(d));
  CHECK_FALSE(DimVector{4, 0, 0}.fits_in(d));
  CHECK_FALSE(DimVector{1, 1}.fits_in(d));
  CHECK(d - DimVector{3, 5, 1} == DimVector{0, 1, 4});
  CHECK_THROWS_AS((DimVector{1, 0} - DimVector{0, 1}), InputError);
  CHECK_THROWS_AS(DimVector({-1}), InputError);
  CHECK_THROWS_AS(DimVector({kMaxDimEntry + 1}), InputError);
  CHECK(parse_dim_vector("3,6,5") == d);
  CHECK_THROWS_AS(parse_dim_vector("3,,5"), InputError);
  CHECK_THROWS_AS(parse_dim_vector("3,-1"), InputError);
  CHECK_THROWS_AS(parse_dim_vector("1,2,"), InputError);
  CHECK(DimVector{0, 2} < DimVector{1, 0});
}

TEST_CASE("euler_form examples") {
  Quiver k3 = make_kronecker(3);
  CHECK(euler_form(k3, {1, 0}, {0, 1}) == -3);
  CHECK(euler_form(k3, {2, 2}, {2, 2}) == -4);
  CHECK(euler_form(bipartite(), {3, 5, 1}, {0, 1, 4}) == 1);
  CHECK_THROWS_AS(euler_form(k3, {1, 0, 0}, {0, 1}), InputError);
}

TEST_CASE("euler_form is bilinear") {
  std::mt19937_64 gen(11);
  const std::vector<Quiver> quivers{make_kronecker(2), make_kronecker(5), bipartite(),
                                    Quiver(4, {{0, 1}, {1, 2}, {0, 2}, {3, 2}, {0, 3}})};
  for (const Quiver& q : quivers) {
    const auto n = static_cast<std::size_t>(q.vertex_count());
    for (int trial = 0; trial < 50; ++trial) {
      DimVector a = random_vector(gen, n, 9);
      DimVector b = random_vector(gen, n, 9);
      DimVector c = random_vector(gen, n, 9);
      CHECK(euler_form(q, a + b, c) == euler_form(q, a, c) + euler_form(q, b, c));
      CHECK(euler_form(q, c, a + b) == euler_form(q, c, a) + euler_form(q, c, b));
      CHECK(symmetrized_form(q, a, b) == symmetrized_form(q, b, a));
    }
  }
}

TEST_CASE("euler_form on unit vectors counts arrows") {
  Quiver q(4, {{0, 1}, {0, 1}, {1, 2}, {0, 2}, {3, 2}, {0, 3}});
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const int expected = (i == j ? 1 : 0) - q.arrow_count(i, j);
      CHECK(euler_form(q, DimVector::unit(4, i), DimVector::unit(4, j)) == expected);
    }
  }
}

TEST_CASE("symmetrized_form examples") {
  CHECK(symmetrized_form(make_kronecker(2), {1, 1}, {1, 0}) == 0);
  CHECK(symmetrized_form(bipartite(), {3, 6, 5}, {0, 0, 0}) == 0);
  CHECK(symmetrized_form(bipartite(), {3, 6, 5}, DimVector::unit(3, 1)) == -4);
  CHECK(symmetrized_form(bipartite(), {3, 6, 5}, DimVector::unit(3, 0)) == -6);
  CHECK(symmetrized_form(bipartite(), {3, 6, 5}, DimVector::unit(3, 2)) == -2);
}

TEST_CASE("in_fundamental_domain") {
  CHECK(in_fundamental_domain(bipartite(), {3, 6, 5}));
  CHECK_FALSE(in_fundamental_domain(Quiver(1, {}), {1}));
  CHECK(in_fundamental_domain(make_kronecker(2), {1, 1}));
  CHECK_THROWS_AS(in_fundamental_domain(make_kronecker(2), {0, 0}), InputError);
  // Disconnected support: vertices 1 and 3 without vertex 2.
  CHECK_FALSE(in_fundamental_domain(bipartite(), {1, 0, 1}));
  // K(3) with d = (1, 5): (d, e_2) = 10 - 3 > 0.
  CHECK_FALSE(in_fundamental_domain(make_kronecker(3), {1, 5}));
}

TEST_CASE("parse_quiver") {
  CHECK(parse_quiver("vertices 2\n1 -> 2\n1 -> 2\n") == make_kronecker(2));
  Quiver b = bipartite();
  CHECK(b.vertex_count() == 3);
  CHECK(b.arrow_count(0, 1) == 2);
  CHECK(b.arrow_count(2, 1) == 2);
  CHECK(parse_quiver("# header\n\nvertices 2  # two\n  1->2\n") == make_kronecker(1));
  CHECK_THROWS_WITH_AS(parse_quiver("vertices 2\n1 -> 2\n2 -> 1\n"), "quiver has a directed cycle",
                       InputError);
  CHECK_THROWS_WITH_AS(parse_quiver("vertices 2\n1 -> 2\n1 => 2\n"),
                       "quiver line 3: expected 'i -> j'", InputError);
  CHECK_THROWS_WITH_AS(parse_quiver("1 -> 2\n"), "quiver line 1: expected 'vertices N'", InputError);
  CHECK_THROWS_AS(parse_quiver("vertices 2\n1 -> 3\n"), InputError);
  CHECK_THROWS_AS(parse_quiver("# nothing\n"), InputError);
}
