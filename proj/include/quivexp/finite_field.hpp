#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace quivexp {

bool is_prime(std::uint64_t n);

// Arithmetic in F_p for a prime p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t inv(std::uint32_t a) const;

 private:
  std::uint32_t p_;
};

// Dense row-major matrix over F_p. Zero rows or zero columns are allowed.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FpMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const std::uint32_t> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<std::uint32_t> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  FpMatrix transposed() const;
  // this * v for a column vector v of length cols().
  void apply(const PrimeField& field, std::span<const std::uint32_t> v,
             std::span<std::uint32_t> out) const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint32_t> data_;
};

// Reduced row-echelon form; zero rows are dropped.
FpMatrix rref(const PrimeField& field, FpMatrix m);

// Rank of `rows` vectors of length `cols` stored row-major in `buffer`.
// The buffer is destroyed.
std::size_t rank_in_place(const PrimeField& field, std::span<std::uint32_t> buffer,
                          std::size_t rows, std::size_t cols);

std::size_t rank(const PrimeField& field, const FpMatrix& m);

}  // namespace quivexp
