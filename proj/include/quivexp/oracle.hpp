#pragma once

#include "quivexp/expander.hpp"
#include "quivexp/finite_field.hpp"
#include "quivexp/quiver.hpp"
#include "quivexp/subspace.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quivexp {

// A point of the representation space R_d(Q) over F_p: one
// d[target] x d[source] matrix per arrow, in arrow order.
class FiniteFieldRep {
 public:
  FiniteFieldRep(std::uint32_t p, Quiver quiver, DimVector d, std::vector<FpMatrix> matrices);

  std::uint32_t p() const { return p_; }
  PrimeField field() const { return PrimeField(p_); }
  const Quiver& quiver() const { return quiver_; }
  const DimVector& dim() const { return d_; }
  const std::vector<FpMatrix>& matrices() const { return matrices_; }

  friend bool operator==(const FiniteFieldRep&, const FiniteFieldRep&) = default;

 private:
  std::uint32_t p_;
  Quiver quiver_;
  DimVector d_;
  std::vector<FpMatrix> matrices_;
};

struct ExpanderVerdict {
  bool ok;
  std::optional<Subspace> witness;
};

// dim(f_1(U) + ... + f_m(U)) for a representation of K(m) and U <= F_p^{d1}.
std::size_t image_sum_dim(const FiniteFieldRep& rep, const Subspace& u);

// Checks dim sum_k f_k(U) >= (1 + epsilon) (d2 / d1) dim U for every non-zero
// U with dim U <= delta d1, by exhaustive search over canonical bases. Prefixes
// whose image is already large enough are pruned, which leaves the verdict and
// the first witness in enumeration order unchanged.
ExpanderVerdict is_expander_rep(const FiniteFieldRep& rep, const ExpanderParams& params,
                                std::uint64_t budget = kDefaultBudget);

// Whether subspaces U_i <= F_p^{d_i} with dim U_i = e_i exist such that every
// arrow maps U_source into U_target. Vertices are handled in topological
// order; the subspace at a vertex is chosen among those containing the images
// already forced into it, and sinks need no choice at all.
bool has_subrep_of_dim(const FiniteFieldRep& rep, const DimVector& e,
                       std::uint64_t budget = kDefaultBudget);

// Entries drawn from std::mt19937_64 seeded with `seed`, arrow by arrow in
// row-major order; each entry is one 64-bit draw x accepted when
// x >= 2^64 mod p and reduced mod p. Bit-identical across platforms.
FiniteFieldRep random_rep(const Quiver& quiver, const DimVector& d, std::uint32_t p,
                          std::uint64_t seed);

// Transposes every map of a K(m) representation; dimension vector reversed.
FiniteFieldRep dual_rep(const FiniteFieldRep& rep);

// Replaces the first arrow's map by the identity (requires d1 == d2).
FiniteFieldRep with_identity_first_arrow(FiniteFieldRep rep);

// {"p": P, "quiver": {"vertices": N, "arrows": [[i,j],...]}, "dim": [...],
//  "matrices": [[[row...]...]...]} with 1-based arrow endpoints.
nlohmann::json rep_to_json(const FiniteFieldRep& rep);
FiniteFieldRep rep_from_json(const nlohmann::json& j);
FiniteFieldRep load_rep(const std::string& path);

nlohmann::json subspace_to_json(const Subspace& u);

}  // namespace quivexp
