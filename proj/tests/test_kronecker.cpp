#include "quivexp/errors.hpp"
#include "quivexp/kronecker.hpp"
#include "quivexp/schofield.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace quivexp;

namespace {

// Smallest integer y >= c, found by exact comparison against the surd.
std::int64_t ceil_by_comparison(const QuadraticSurd& c) {
  std::int64_t y = static_cast<std::int64_t>(std::floor(c.to_double())) - 1;
  while (c > Rational(y)) ++y;
  return y;
}

template <typename Fn>
void for_each_definite(int m_lo, int m_hi, std::int64_t dmax, Fn&& fn) {
  for (int m = m_lo; m <= m_hi; ++m) {
    for (std::int64_t d1 = 1; d1 <= dmax; ++d1) {
      for (std::int64_t d2 = 1; d2 <= dmax; ++d2) {
        KroneckerContext ctx(m, {d1, d2});
        if (ctx.self_form() <= 0) fn(ctx);
      }
    }
  }
}

}  // namespace

TEST_CASE("beta") {
  CHECK(beta(2) == Rational(1));
  CHECK(beta(3) == QuadraticSurd(3, 1, 5, 2));
  CHECK(beta(4) == QuadraticSurd(2, 1, 3, 1));
  CHECK_THROWS_AS(beta(1), InputError);
  for (int m = 2; m <= 30; ++m) {
    const QuadraticSurd b = beta(m);
    const auto mm = QuadraticSurd::from_rational(m);
    const auto one = QuadraticSurd::from_rational(1);
    CHECK((b * b - mm * b + one).sign() == 0);
  }
}

TEST_CASE("context validation") {
  CHECK_THROWS_AS(KroneckerContext(1, {1, 1}), InputError);
  CHECK_THROWS_AS(KroneckerContext(3, {1, 1, 1}), InputError);
  CHECK(KroneckerContext(3, {2, 2}).self_form() == -4);
}

TEST_CASE("c_d_exact examples") {
  KroneckerContext ctx(3, {2, 2});
  CHECK(c_d_exact(ctx, 1) == QuadraticSurd(5, -1, 5, 2));
  CHECK(std::fabs(c_d_exact(ctx, 1).to_double() - 1.381966) < 1e-6);
  CHECK(c_d_exact(ctx, 0) == Rational(0));
  CHECK(c_d_exact(ctx, 2) == Rational(2));
  CHECK(c_d_exact(KroneckerContext(5, {3, 7}), 0) == Rational(0));
  CHECK_THROWS_AS(c_d_exact(ctx, 3), InputError);
  CHECK_THROWS_AS(c_d_exact(ctx, -1), InputError);
}

TEST_CASE("c_d_exact is the smaller zero of the quadratic") {
  // Float oracle straight from the quadratic y -> <(x,y), d-(x,y)>.
  for_each_definite(2, 5, 10, [](const KroneckerContext& ctx) {
    const double d1 = static_cast<double>(ctx.d()[0]);
    const double d2 = static_cast<double>(ctx.d()[1]);
    const double m = ctx.m();
    for (std::int64_t x = 0; x <= ctx.d()[0]; ++x) {
      // q_x(y) = -y^2 + (m x + d2) y + x (d1 - x) - m x d2
      const double b = m * x + d2;
      const double c = x * (d1 - x) - m * x * d2;
      const double smaller = (b - std::sqrt(b * b + 4 * c)) / 2;
      CHECK(std::fabs(c_d_exact(ctx, x).to_double() - smaller) < 1e-9);
    }
  });
}

TEST_CASE("c_d_ceil examples") {
  CHECK(c_d_ceil(KroneckerContext(3, {2, 2}), 1) == 2);
  CHECK(c_d_ceil(KroneckerContext(3, {10, 10}), 5) == 7);
  CHECK(c_d_exact(KroneckerContext(3, {10, 10}), 5) == QuadraticSurd(25, -1, 125, 2));
  CHECK(c_d_ceil(KroneckerContext(3, {10, 10}), 0) == 0);
  CHECK_THROWS_AS(c_d_ceil(KroneckerContext(3, {1, 5}), 0), InputError);
}

TEST_CASE("c_d_ceil equals the ceiling of the exact surd") {
  for_each_definite(2, 5, 12, [](const KroneckerContext& ctx) {
    for (std::int64_t x = 0; x <= ctx.d()[0]; ++x) {
      CHECK(c_d_ceil(ctx, x) == ceil_by_comparison(c_d_exact(ctx, x)));
    }
  });
}

TEST_CASE("c_d_ceil is the least y with (x, y) embedding by the closed form") {
  for_each_definite(2, 5, 12, [](const KroneckerContext& ctx) {
    for (std::int64_t x = 0; x <= ctx.d()[0]; ++x) {
      std::int64_t y = 0;
      while (!embeds_closed_form(ctx, {x, y})) ++y;
      CHECK(c_d_ceil(ctx, x) == y);
    }
  });
}

TEST_CASE("estimate: (d2/d1) x <= c_d(x) <= min(m x, d2)") {
  for_each_definite(2, 5, 12, [](const KroneckerContext& ctx) {
    const std::int64_t d1 = ctx.d()[0];
    const std::int64_t d2 = ctx.d()[1];
    for (std::int64_t x = 0; x <= d1; ++x) {
      const QuadraticSurd c = c_d_exact(ctx, x);
      CHECK(c >= Rational(d2 * x, d1));
      CHECK(c <= Rational(std::min<std::int64_t>(ctx.m() * x, d2)));
    }
  });
}

TEST_CASE("sign pattern of the quadratic around its zeros") {
  for_each_definite(2, 4, 9, [](const KroneckerContext& ctx) {
    const std::int64_t d2 = ctx.d()[1];
    for (std::int64_t x = 0; x <= ctx.d()[0]; ++x) {
      const QuadraticSurd lower = c_d_exact(ctx, x);
      const QuadraticSurd upper = QuadraticSurd::from_rational(ctx.m() * x + d2) - lower;
      for (std::int64_t y = 0; y <= d2; ++y) {
        const bool nonneg = euler_form(ctx.quiver(), {x, y}, ctx.d() - DimVector{x, y}) >= 0;
        const bool between = lower <= Rational(y) && Rational(y) <= upper;
        CHECK(nonneg == between);
      }
    }
  });
}

TEST_CASE("concavity of c_d") {
  for_each_definite(2, 5, 12, [](const KroneckerContext& ctx) {
    if (ctx.self_form() >= 0) return;
    for (std::int64_t x = 1; x + 1 <= ctx.d()[0]; ++x) {
      const double left = c_d_exact(ctx, x - 1).to_double();
      const double mid = c_d_exact(ctx, x).to_double();
      const double right = c_d_exact(ctx, x + 1).to_double();
      CHECK(left + right <= 2 * mid + 1e-9);
    }
  });
}

TEST_CASE("embeds_closed_form examples") {
  KroneckerContext ctx(3, {2, 2});
  CHECK(embeds_closed_form(ctx, {1, 2}));
  CHECK_FALSE(embeds_closed_form(ctx, {1, 1}));
  CHECK(embeds_closed_form(ctx, {0, 0}));
  CHECK_FALSE(embeds_closed_form(ctx, {3, 0}));
  CHECK_THROWS_WITH_AS(embeds_closed_form(KroneckerContext(3, {1, 5}), {0, 1}),
                       doctest::Contains("closed form inapplicable"), InputError);
}

TEST_CASE("closed form agrees with the recursive criterion") {
  for (int m = 2; m <= 4; ++m) {
    Quiver q = make_kronecker(m);
    SubdimCache cache(q);
    for (std::int64_t d1 = 0; d1 <= 8; ++d1) {
      for (std::int64_t d2 = 0; d2 <= 8; ++d2) {
        KroneckerContext ctx(m, {d1, d2});
        if (ctx.self_form() > 0) continue;
        for_each_below(ctx.d(), [&](const DimVector& e) {
          CHECK(embeds_closed_form(ctx, e) == embeds(q, e, ctx.d(), cache));
        });
      }
    }
  }
}

TEST_CASE("dual_dim") {
  auto [e1, d1] = dual_dim({1, 2}, {2, 2});
  CHECK(e1 == DimVector{0, 1});
  CHECK(d1 == DimVector{2, 2});
  auto [e2, d2] = dual_dim({0, 0}, {3, 5});
  CHECK(e2 == DimVector{5, 3});
  CHECK(d2 == DimVector{5, 3});
  auto [e3, d3] = dual_dim({4, 7}, {4, 7});
  CHECK(e3 == DimVector{0, 0});
  CHECK(d3 == DimVector{7, 4});
  CHECK_THROWS_AS(dual_dim({3, 0}, {2, 2}), InputError);
}
