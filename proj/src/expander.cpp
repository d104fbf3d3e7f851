#include "quivexp/expander.hpp"

#include "quivexp/errors.hpp"
#include "quivexp/kronecker.hpp"

namespace quivexp {

ExpanderParams::ExpanderParams(Rational delta, Rational epsilon)
    : delta_(std::move(delta)), epsilon_(std::move(epsilon)) {
  if (delta_ <= 0 || delta_ >= 1) {
    throw InputError("delta must satisfy 0 < delta < 1, got " + to_string(delta_));
  }
  if (epsilon_ <= 0) {
    throw InputError("epsilon must be positive, got " + to_string(epsilon_));
  }
}

BigInt StabilityFunction::operator()(const DimVector& d) const {
  if (d.size() != weights_.size()) {
    throw InputError("stability function has " + std::to_string(weights_.size()) +
                     " weights, dimension vector " + d.to_string() + " does not match");
  }
  BigInt sum = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    sum += BigInt(weights_[i]) * d[i];
  }
  return sum;
}

QuadraticSurd epsilon_k(int k) {
  if (k < 2) {
    throw InputError("epsilon_k needs k >= 2");
  }
  BigInt kk(k);
  return QuadraticSurd(kk + 1, -1, kk * kk - 2 * kk + 5, 2);
}

QuadraticSurd epsilon_m_alpha_delta(int m, const Rational& alpha, const Rational& delta) {
  if (delta <= 0 || delta >= 1) {
    throw InputError("delta must satisfy 0 < delta < 1, got " + to_string(delta));
  }
  const Rational mm(m);
  if (alpha * alpha - mm * alpha + 1 >= 0) {
    throw InputError("alpha = " + to_string(alpha) + " violates alpha^2 - m alpha + 1 < 0 for m = " +
                     std::to_string(m));
  }
  const Rational linear = mm * delta + alpha - 2 * alpha * delta;
  if (linear <= 0) {
    throw InputError("m delta + alpha - 2 alpha delta must be positive, got " + to_string(linear));
  }
  const Rational offset = mm * delta - alpha;
  const Rational radicand = offset * offset + 4 * delta * (1 - delta);
  return QuadraticSurd::from_parts(linear, Rational(-1), radicand) / (2 * alpha * delta);
}

std::int64_t min_embedded_e2(int m, const DimVector& d, std::int64_t e1, SubdimCache& cache) {
  if (m >= 2) {
    KroneckerContext ctx(m, d);
    if (ctx.self_form() <= 0) {
      return c_d_ceil(ctx, e1);
    }
  }
  const Quiver kronecker = make_kronecker(m);
  for (std::int64_t e2 = 0; e2 <= d[1]; ++e2) {
    if (embeds(kronecker, DimVector{e1, e2}, d, cache)) return e2;
  }
  throw std::logic_error("(e1, d2) always embeds in d");
}

ExpanderDecision expander_exists(int m, const DimVector& d, const ExpanderParams& params,
                                 SubdimCache& cache) {
  if (m < 1) {
    throw InputError("expander test needs m >= 1");
  }
  if (d.size() != 2 || d[0] < 1 || d[1] < 1) {
    throw InputError("expander test needs d = (d1, d2) with d1, d2 >= 1");
  }
  if (!(cache.quiver() == make_kronecker(m))) {
    throw InputError("subdimension cache does not belong to K(" + std::to_string(m) + ")");
  }
  const Rational slope = (1 + params.epsilon()) * Rational(d[1], d[0]);
  const BigInt max_e1 = floor_of(params.delta() * d[0]);
  for (std::int64_t e1 = 1; e1 <= max_e1; ++e1) {
    std::int64_t e2 = min_embedded_e2(m, d, e1, cache);
    if (Rational(e2) < slope * e1) {
      return {false, DimVector{e1, e2}};
    }
  }
  return {true, std::nullopt};
}

bool expander_exists_uniform(const SlopeParams& slope, const Rational& delta,
                             const Rational& epsilon) {
  if (slope.m < 1) {
    throw InputError("uniform expander test needs m >= 1");
  }
  if (epsilon <= 0) {
    throw InputError("epsilon must be positive, got " + to_string(epsilon));
  }
  return epsilon_m_alpha_delta(slope.m, slope.alpha, delta) >= epsilon;
}

namespace {

void require_balanced(const StabilityFunction& theta, const DimVector& d) {
  BigInt value = theta(d);
  if (value != 0) {
    throw InputError("Theta(d) = " + value.str() + " for d = " + d.to_string() +
                     "; Theta(d) must vanish");
  }
}

// e in Sub(d) with |e| <= delta |d|, lexicographic order.
std::vector<DimVector> small_subdims(const Quiver& quiver, const DimVector& d,
                                     const Rational& delta, SubdimCache& cache) {
  std::vector<DimVector> out;
  const Rational bound = delta * d.total();
  for (DimVector& e : generic_subdims(quiver, d, cache)) {
    if (Rational(e.total()) <= bound) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

ExpanderDecision theta_expander_exists(const Quiver& quiver, const StabilityFunction& theta,
                                       const DimVector& d, const ExpanderParams& params,
                                       SubdimCache& cache) {
  require_balanced(theta, d);
  for (const DimVector& e : small_subdims(quiver, d, params.delta(), cache)) {
    if (Rational(theta(e)) > -params.epsilon() * e.total()) {
      return {false, e};
    }
  }
  return {true, std::nullopt};
}

std::optional<Rational> theta_epsilon_supremum(const Quiver& quiver,
                                               const StabilityFunction& theta,
                                               const DimVector& d, const Rational& delta,
                                               SubdimCache& cache) {
  if (delta <= 0 || delta >= 1) {
    throw InputError("delta must satisfy 0 < delta < 1, got " + to_string(delta));
  }
  require_balanced(theta, d);
  std::optional<Rational> best;
  for (const DimVector& e : small_subdims(quiver, d, delta, cache)) {
    if (e.is_zero()) continue;
    Rational bound(-theta(e), BigInt(e.total()));
    if (!best || bound < *best) best = bound;
  }
  return best;
}

}  // namespace quivexp
