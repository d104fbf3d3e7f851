#include "quivexp/kronecker.hpp"

#include "quivexp/errors.hpp"

namespace quivexp {

namespace {

void require_definite(const KroneckerContext& ctx) {
  if (ctx.self_form() > 0) {
    throw InputError("closed form inapplicable: <d,d> = " + std::to_string(ctx.self_form()) +
                     " > 0 for d = " + ctx.d().to_string() +
                     "; use the recursive subdimension test instead");
  }
}

void require_in_range(const KroneckerContext& ctx, std::int64_t x) {
  if (x < 0 || x > ctx.d()[0]) {
    throw InputError("x = " + std::to_string(x) + " outside [0, " +
                     std::to_string(ctx.d()[0]) + "]");
  }
}

}  // namespace

KroneckerContext::KroneckerContext(int m, DimVector d)
    : m_(m), d_(std::move(d)), quiver_(make_kronecker(m < 2 ? 1 : m)), self_form_(0) {
  if (m_ < 2) {
    throw InputError("Kronecker closed form needs m >= 2");
  }
  if (d_.size() != 2) {
    throw InputError("Kronecker dimension vector must have two entries");
  }
  self_form_ = euler_form(quiver_, d_, d_);
}

QuadraticSurd beta(int m) {
  if (m < 2) {
    throw InputError("beta needs m >= 2");
  }
  BigInt mm(m);
  return QuadraticSurd(mm, 1, mm * mm - 4, 2);
}

QuadraticSurd c_d_exact(const KroneckerContext& ctx, std::int64_t x) {
  require_in_range(ctx, x);
  const BigInt mx = BigInt(ctx.m()) * x;
  const BigInt d1 = ctx.d()[0];
  const BigInt d2 = ctx.d()[1];
  BigInt radicand = (mx - d2) * (mx - d2) + 4 * BigInt(x) * (d1 - x);
  return QuadraticSurd(mx + d2, -1, radicand, 2);
}

std::int64_t c_d_ceil(const KroneckerContext& ctx, std::int64_t x) {
  require_definite(ctx);
  require_in_range(ctx, x);
  const std::int64_t d1 = ctx.d()[0];
  const std::int64_t d2 = ctx.d()[1];
  const std::int64_t m = ctx.m();
  for (std::int64_t y = 0; y <= d2; ++y) {
    // q_x(y) = <(x,y), (d1-x, d2-y)>
    __int128 q = static_cast<__int128>(x) * (d1 - x) + static_cast<__int128>(y) * (d2 - y) -
                 static_cast<__int128>(m) * x * (d2 - y);
    if (q >= 0 || 2 * static_cast<__int128>(y) >= static_cast<__int128>(m) * x + d2) {
      return y;
    }
  }
  // q_x(d2) = x (d1 - x) >= 0, so the loop always returns.
  throw std::logic_error("c_d_ceil: no admissible y");
}

bool embeds_closed_form(const KroneckerContext& ctx, const DimVector& e) {
  require_definite(ctx);
  if (e.size() != 2) {
    throw InputError("Kronecker dimension vector must have two entries");
  }
  if (!e.fits_in(ctx.d())) return false;
  return euler_form(ctx.quiver(), e, ctx.d() - e) >= 0;
}

std::pair<DimVector, DimVector> dual_dim(const DimVector& e, const DimVector& d) {
  if (e.size() != 2 || d.size() != 2) {
    throw InputError("dual_dim needs two-entry dimension vectors");
  }
  if (!e.fits_in(d)) {
    throw InputError("dual_dim needs e <= d, got e = " + e.to_string() + ", d = " + d.to_string());
  }
  return {DimVector{d[1] - e[1], d[0] - e[0]}, DimVector{d[1], d[0]}};
}

}  // namespace quivexp
