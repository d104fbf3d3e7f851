#pragma once

#include "quivexp/finite_field.hpp"
#include "quivexp/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace quivexp {

// Default cap on the number of subspaces (or search nodes) one enumeration may visit.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// Subspace of F_p^n, represented by its unique reduced row-echelon basis.
class Subspace {
 public:
  // `basis` must already be in reduced row-echelon form without zero rows.
  Subspace(std::uint32_t p, FpMatrix basis);
  // Row space of arbitrary generators.
  static Subspace span(const PrimeField& field, const FpMatrix& generators);

  std::uint32_t p() const { return p_; }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const FpMatrix& basis() const { return basis_; }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::uint32_t p_;
  FpMatrix basis_;
};

// Number of k-dimensional subspaces of F_p^n.
BigInt gaussian_binomial(std::uint32_t p, int n, int k);

// Lazily yields every k-dimensional subspace of F_p^n exactly once.
//
// Order: pivot column sets in lexicographic order; within a pivot set the free
// entries run as an odometer whose most significant digit is the first free
// entry of the first row.
class SubspaceStream {
 public:
  // Throws BudgetExceeded when the Gaussian binomial exceeds `budget`.
  SubspaceStream(std::uint32_t p, int n, int k, std::uint64_t budget = kDefaultBudget);

  std::optional<Subspace> next();

 private:
  bool advance_pivots();
  void reset_free_positions();

  PrimeField field_;
  int n_;
  int k_;
  std::vector<int> pivots_;
  std::vector<std::pair<int, int>> free_;  // (row, column)
  std::vector<std::uint32_t> values_;
  bool done_ = false;
};

inline SubspaceStream enumerate_subspaces(std::uint32_t p, int n, int k,
                                          std::uint64_t budget = kDefaultBudget) {
  return SubspaceStream(p, n, k, budget);
}

// Depth-first walk over the same canonical bases and in the same order as
// SubspaceStream, with pruning. After each proper prefix of rows is fixed,
// keep_prefix(partial, filled) decides whether any completion is visited;
// `partial` has k rows of which the first `filled` are set. Complete bases go
// to on_subspace, which returns true to stop the walk.
struct EchelonVisitor {
  std::function<bool(const FpMatrix& partial, std::size_t filled)> keep_prefix;
  std::function<bool(const Subspace& subspace)> on_subspace;
};

// Returns true if on_subspace stopped the walk. Every prefix and every
// complete basis counts against the budget through `visited`; exceeding
// `budget` throws BudgetExceeded.
bool walk_subspaces(std::uint32_t p, int n, int k, const EchelonVisitor& visitor,
                    std::uint64_t& visited, std::uint64_t budget = kDefaultBudget);

}  // namespace quivexp
