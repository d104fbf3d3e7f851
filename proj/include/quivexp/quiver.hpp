#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace quivexp {

// Upper bound on a single dimension-vector entry.
inline constexpr std::int64_t kMaxDimEntry = 1'000'000;

struct Arrow {
  int source;  // 0-based vertex index
  int target;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

// Finite acyclic quiver. Parallel arrows are repeated entries in arrows().
class Quiver {
 public:
  // Throws InputError on out-of-range endpoints or a directed cycle.
  Quiver(int vertex_count, std::vector<Arrow> arrows);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  // Number of arrows source -> target.
  int arrow_count(int source, int target) const;
  // Vertices ordered so every arrow points forward.
  const std::vector<int>& topological_order() const { return topo_order_; }
  // Two vertices, every arrow 0 -> 1, at least one arrow.
  bool is_kronecker() const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertex_count_ == b.vertex_count_ && a.arrows_ == b.arrows_;
  }

 private:
  int vertex_count_;
  std::vector<Arrow> arrows_;
  std::vector<int> topo_order_;
};

// Dimension vector: non-negative integers, one per vertex.
//
// The defaulted ordering is lexicographic and serves as the canonical
// enumeration order; the componentwise partial order is fits_in().
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::vector<std::int64_t> entries);
  DimVector(std::initializer_list<std::int64_t> entries);

  static DimVector zero(std::size_t size);
  static DimVector unit(std::size_t size, std::size_t index);

  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }

  std::int64_t total() const;
  bool is_zero() const;
  // Componentwise this <= other; false on a length mismatch.
  bool fits_in(const DimVector& other) const;

  // Throws InputError if a result entry would be negative or lengths differ.
  friend DimVector operator+(const DimVector& a, const DimVector& b);
  friend DimVector operator-(const DimVector& a, const DimVector& b);

  friend auto operator<=>(const DimVector&, const DimVector&) = default;
  friend bool operator==(const DimVector&, const DimVector&) = default;

  // "(a,b,c)"
  std::string to_string() const;

 private:
  std::vector<std::int64_t> entries_;
};

// Comma-separated non-negative integers, e.g. "3,6,5".
DimVector parse_dim_vector(std::string_view csv);

Quiver make_kronecker(int m);

// <d,e> = sum_i d_i e_i - sum_{a: i->j} d_i e_j
std::int64_t euler_form(const Quiver& quiver, const DimVector& d, const DimVector& e);

// <d,e> + <e,d>
std::int64_t symmetrized_form(const Quiver& quiver, const DimVector& d, const DimVector& e);

// Connected support and (d, unit_i) <= 0 for every i in the support.
// Throws InputError for d == 0.
bool in_fundamental_domain(const Quiver& quiver, const DimVector& d);

// Text format: first non-comment line "vertices N", then one "i -> j" line per
// arrow with 1-based indices. '#' comments to end of line; blank lines skipped.
Quiver parse_quiver(std::string_view text);
Quiver load_quiver(const std::string& path);

}  // namespace quivexp
