#pragma once

#include "quivexp/quiver.hpp"
#include "quivexp/surd.hpp"

#include <utility>

namespace quivexp {

// The generalized Kronecker quiver K(m), m >= 2, with a fixed dimension
// vector d = (d1, d2).
class KroneckerContext {
 public:
  KroneckerContext(int m, DimVector d);

  int m() const { return m_; }
  const DimVector& d() const { return d_; }
  const Quiver& quiver() const { return quiver_; }
  // <d, d> = d1^2 + d2^2 - m d1 d2
  std::int64_t self_form() const { return self_form_; }

 private:
  int m_;
  DimVector d_;
  Quiver quiver_;
  std::int64_t self_form_;
};

// (m + sqrt(m^2 - 4)) / 2, the larger root of t^2 - m t + 1.
QuadraticSurd beta(int m);

// Smaller zero of y -> <(x,y), d - (x,y)>, for 0 <= x <= d1:
// (m x + d2 - sqrt((m x - d2)^2 + 4 x (d1 - x))) / 2.
QuadraticSurd c_d_exact(const KroneckerContext& ctx, std::int64_t x);

// Least integer y in [0, d2] with <(x,y), d - (x,y)> >= 0 or 2y >= m x + d2.
// This is ceil(c_d(x)), obtained from the integer predicate alone. Requires
// <d, d> <= 0.
std::int64_t c_d_ceil(const KroneckerContext& ctx, std::int64_t x);

// e -> d through the single inequality <e, d - e> >= 0, valid when <d, d> <= 0.
// Throws InputError ("closed form inapplicable") when <d, d> > 0; returns false
// when e does not fit in d.
bool embeds_closed_form(const KroneckerContext& ctx, const DimVector& e);

// ((d2 - e2, d1 - e1), (d2, d1)): the pair that (e, d) is equivalent to under
// transposing every arrow.
std::pair<DimVector, DimVector> dual_dim(const DimVector& e, const DimVector& d);

}  // namespace quivexp
