#pragma once

#include "quivexp/quiver.hpp"
#include "quivexp/rational.hpp"
#include "quivexp/schofield.hpp"
#include "quivexp/surd.hpp"

#include <optional>
#include <vector>

namespace quivexp {

// 0 < delta < 1 and epsilon > 0, checked at construction.
class ExpanderParams {
 public:
  ExpanderParams(Rational delta, Rational epsilon);

  const Rational& delta() const { return delta_; }
  const Rational& epsilon() const { return epsilon_; }

 private:
  Rational delta_;
  Rational epsilon_;
};

// Arrow count and the dimension ratio alpha = d2 / d1 of a family of
// Kronecker dimension vectors.
struct SlopeParams {
  int m;
  Rational alpha;
};

// Linear functional Theta(d) = sum_i w_i d_i with integer weights.
class StabilityFunction {
 public:
  explicit StabilityFunction(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {}

  const std::vector<std::int64_t>& weights() const { return weights_; }
  // Throws InputError on a length mismatch.
  BigInt operator()(const DimVector& d) const;

 private:
  std::vector<std::int64_t> weights_;
};

struct ExpanderDecision {
  bool exists;
  std::optional<DimVector> violating_e;
};

// (k + 1 - sqrt(k^2 - 2k + 5)) / 2, for k >= 2.
QuadraticSurd epsilon_k(int k);

// (m delta + alpha - 2 alpha delta - sqrt((m delta - alpha)^2 + 4 delta (1 - delta)))
//   / (2 alpha delta)
//
// Requires 0 < delta < 1, alpha^2 - m alpha + 1 < 0 and
// m delta + alpha - 2 alpha delta > 0; each violation raises its own InputError.
QuadraticSurd epsilon_m_alpha_delta(int m, const Rational& alpha, const Rational& delta);

// Least e2 with (e1, e2) -> d for K(m). Uses the closed form when m >= 2 and
// <d, d> <= 0, the recursive test otherwise.
std::int64_t min_embedded_e2(int m, const DimVector& d, std::int64_t e1, SubdimCache& cache);

// Whether a (delta, epsilon)-expander representation of K(m) of dimension
// vector d exists: for every 1 <= e1 <= floor(delta d1), the least e2 with
// (e1, e2) -> d must satisfy e2 >= (1 + epsilon) (d2 / d1) e1. On failure the
// violating (e1, e2) with the smallest e1 is reported. `cache` must belong
// to K(m); it is only consulted when the closed form does not apply.
ExpanderDecision expander_exists(int m, const DimVector& d, const ExpanderParams& params,
                                 SubdimCache& cache);

// epsilon <= epsilon_m(alpha, delta), compared exactly.
bool expander_exists_uniform(const SlopeParams& slope, const Rational& delta,
                             const Rational& epsilon);

// Every e in Sub(d) with |e| <= delta |d| satisfies Theta(e) <= -epsilon |e|.
// Requires Theta(d) == 0. The violating e reported is the lexicographically
// smallest.
ExpanderDecision theta_expander_exists(const Quiver& quiver, const StabilityFunction& theta,
                                       const DimVector& d, const ExpanderParams& params,
                                       SubdimCache& cache);

// Largest epsilon for which theta_expander_exists holds at (d, delta): the
// minimum of -Theta(e) / |e| over non-zero e in Sub(d) with |e| <= delta |d|.
// nullopt when no such e exists (every epsilon works). Requires Theta(d) == 0.
std::optional<Rational> theta_epsilon_supremum(const Quiver& quiver,
                                               const StabilityFunction& theta,
                                               const DimVector& d, const Rational& delta,
                                               SubdimCache& cache);

}  // namespace quivexp
