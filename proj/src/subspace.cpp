#include "quivexp/subspace.hpp"

#include "quivexp/errors.hpp"

#include <numeric>
#include <string>

namespace quivexp {

namespace {

bool is_reduced_echelon(const FpMatrix& m) {
  int last_pivot = -1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int pivot = -1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) {
        pivot = static_cast<int>(j);
        break;
      }
    }
    if (pivot <= last_pivot || m(i, pivot) != 1) return false;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r != i && m(r, pivot) != 0) return false;
    }
    last_pivot = pivot;
  }
  return true;
}

void check_shape(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw InputError("subspace dimension " + std::to_string(k) + " not in [0, " +
                     std::to_string(n) + "]");
  }
}

// Next k-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

// Free (row, column) slots of an echelon basis with the given pivots.
std::vector<std::pair<int, int>> free_slots(const std::vector<int>& pivots, int n) {
  std::vector<char> is_pivot(n, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<std::pair<int, int>> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (int c = pivots[r] + 1; c < n; ++c) {
      if (!is_pivot[c]) out.emplace_back(static_cast<int>(r), c);
    }
  }
  return out;
}

}  // namespace

Subspace::Subspace(std::uint32_t p, FpMatrix basis) : p_(p), basis_(std::move(basis)) {
  if (!is_reduced_echelon(basis_)) {
    throw InputError("subspace basis is not in reduced row-echelon form");
  }
}

Subspace Subspace::span(const PrimeField& field, const FpMatrix& generators) {
  return Subspace(field.p(), rref(field, generators));
}

BigInt gaussian_binomial(std::uint32_t p, int n, int k) {
  check_shape(n, k);
  // q-Pascal: [n,k] = [n-1,k-1] + p^k [n-1,k]
  std::vector<BigInt> row(k + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      BigInt pk = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(j));
      row[j] = row[j - 1] + pk * row[j];
    }
  }
  return row[k];
}

SubspaceStream::SubspaceStream(std::uint32_t p, int n, int k, std::uint64_t budget)
    : field_(p), n_(n), k_(k) {
  check_shape(n, k);
  BigInt count = gaussian_binomial(p, n, k);
  if (count > budget) {
    throw BudgetExceeded("enumerating " + count.str() + " subspaces exceeds the budget of " +
                         std::to_string(budget));
  }
  pivots_.resize(k);
  std::iota(pivots_.begin(), pivots_.end(), 0);
  reset_free_positions();
}

void SubspaceStream::reset_free_positions() {
  free_ = free_slots(pivots_, n_);
  values_.assign(free_.size(), 0);
}

bool SubspaceStream::advance_pivots() {
  if (!next_combination(pivots_, n_)) return false;
  reset_free_positions();
  return true;
}

std::optional<Subspace> SubspaceStream::next() {
  if (done_) return std::nullopt;
  FpMatrix basis(k_, n_);
  for (int r = 0; r < k_; ++r) basis(r, pivots_[r]) = 1;
  for (std::size_t i = 0; i < free_.size(); ++i) {
    basis(free_[i].first, free_[i].second) = values_[i];
  }

  std::size_t i = values_.size();
  bool carried = true;
  while (carried && i > 0) {
    --i;
    if (++values_[i] < field_.p()) {
      carried = false;
    } else {
      values_[i] = 0;
    }
  }
  if (carried && !advance_pivots()) done_ = true;

  return Subspace(field_.p(), std::move(basis));
}

namespace {

struct Walker {
  const PrimeField& field;
  int n;
  int k;
  const EchelonVisitor& visitor;
  std::uint64_t& visited;
  std::uint64_t budget;
  std::vector<int> pivots;
  std::vector<std::vector<int>> row_free;  // free columns per row
  FpMatrix partial;

  void count_node() {
    if (++visited > budget) {
      throw BudgetExceeded("subspace search exceeded the budget of " + std::to_string(budget) +
                           " nodes");
    }
  }

  // Fills free entries of `row` digit by digit; returns true to stop.
  bool fill(std::size_t row, std::size_t slot) {
    const auto& cols = row_free[row];
    if (slot < cols.size()) {
      for (std::uint32_t v = 0; v < field.p(); ++v) {
        partial(row, cols[slot]) = v;
        if (fill(row, slot + 1)) return true;
      }
      partial(row, cols[slot]) = 0;
      return false;
    }
    count_node();
    if (row + 1 == static_cast<std::size_t>(k)) {
      return visitor.on_subspace(Subspace(field.p(), partial));
    }
    if (visitor.keep_prefix && !visitor.keep_prefix(partial, row + 1)) return false;
    return fill(row + 1, 0);
  }

  bool run() {
    if (k == 0) {
      count_node();
      return visitor.on_subspace(Subspace(field.p(), FpMatrix(0, n)));
    }
    pivots.resize(k);
    std::iota(pivots.begin(), pivots.end(), 0);
    do {
      partial = FpMatrix(k, n);
      for (int r = 0; r < k; ++r) partial(r, pivots[r]) = 1;
      row_free.assign(k, {});
      for (auto [r, c] : free_slots(pivots, n)) row_free[r].push_back(c);
      if (fill(0, 0)) return true;
    } while (next_combination(pivots, n));
    return false;
  }
};

}  // namespace

bool walk_subspaces(std::uint32_t p, int n, int k, const EchelonVisitor& visitor,
                    std::uint64_t& visited, std::uint64_t budget) {
  check_shape(n, k);
  PrimeField field(p);
  Walker walker{field, n, k, visitor, visited, budget, {}, {}, {}};
  return walker.run();
}

}  // namespace quivexp
