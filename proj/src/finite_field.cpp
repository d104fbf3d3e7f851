#include "quivexp/finite_field.hpp"

#include "quivexp/errors.hpp"

#include <string>
#include <utility>

namespace quivexp {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t i = 2; i * i <= n; ++i) {
    if (n % i == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw InputError("field characteristic " + std::to_string(p) +
                     " must be a prime below 2^31");
  }
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  // Fermat: a^(p-2)
  std::uint32_t result = 1;
  std::uint32_t base = a % p_;
  for (std::uint32_t e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

FpMatrix FpMatrix::identity(std::size_t n) {
  FpMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FpMatrix FpMatrix::transposed() const {
  FpMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

void FpMatrix::apply(const PrimeField& field, std::span<const std::uint32_t> v,
                     std::span<std::uint32_t> out) const {
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    const std::uint32_t* r = data_.data() + i * cols_;
    for (std::size_t j = 0; j < cols_; ++j) {
      acc = (acc + static_cast<std::uint64_t>(r[j]) * v[j]) % field.p();
    }
    out[i] = static_cast<std::uint32_t>(acc);
  }
}

namespace {

// Gauss-Jordan elimination; returns the rank. With `reduce` false only the
// forward pass needed for the rank is done.
std::size_t eliminate(const PrimeField& field, std::uint32_t* a, std::size_t rows,
                      std::size_t cols, bool reduce) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot * cols + col] == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[pivot * cols + j], a[rank * cols + j]);
    }
    std::uint32_t* prow = a + rank * cols;
    const std::uint32_t scale = field.inv(prow[col]);
    for (std::size_t j = col; j < cols; ++j) prow[j] = field.mul(prow[j], scale);
    for (std::size_t i = reduce ? 0 : rank + 1; i < rows; ++i) {
      if (i == rank) continue;
      std::uint32_t* row = a + i * cols;
      const std::uint32_t factor = row[col];
      if (factor == 0) continue;
      for (std::size_t j = col; j < cols; ++j) {
        row[j] = field.sub(row[j], field.mul(factor, prow[j]));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

FpMatrix rref(const PrimeField& field, FpMatrix m) {
  std::size_t r = (m.rows() == 0 || m.cols() == 0) ? 0 : eliminate(field, &m(0, 0), m.rows(), m.cols(), true);
  FpMatrix out(r, m.cols());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

std::size_t rank_in_place(const PrimeField& field, std::span<std::uint32_t> buffer,
                          std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) return 0;
  return eliminate(field, buffer.data(), rows, cols, false);
}

std::size_t rank(const PrimeField& field, const FpMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  FpMatrix copy = m;
  return eliminate(field, &copy(0, 0), copy.rows(), copy.cols(), false);
}

}  // namespace quivexp
