#pragma once

#include "quivexp/quiver.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace quivexp {

// Memo of Sub(e) = { e' <= e : e' embeds generically in e } for one quiver.
// Entries are mathematical facts and never invalidated. Lookups and inserts
// are serialized by an internal mutex, so a cache may be shared by threads.
class SubdimCache {
 public:
  using Entry = std::shared_ptr<const std::vector<DimVector>>;

  explicit SubdimCache(Quiver quiver) : quiver_(std::move(quiver)) {}

  const Quiver& quiver() const { return quiver_; }

  Entry find(const DimVector& e) const;
  // Keeps an existing entry if one raced ahead; returns the stored entry.
  Entry insert(const DimVector& e, std::vector<DimVector> subdims);
  std::size_t size() const;

 private:
  Quiver quiver_;
  mutable std::mutex mutex_;
  std::map<DimVector, Entry> entries_;
};

// e -> d: a general representation of dimension vector d has a
// subrepresentation of dimension vector e. Decided recursively via
// <e', d - e> >= 0 for every e' in Sub(e). Returns false when e does not fit
// in d; throws InputError on length mismatch or when the cache belongs to a
// different quiver.
bool embeds(const Quiver& quiver, const DimVector& e, const DimVector& d, SubdimCache& cache);

// Sub(d), sorted lexicographically. Always contains 0 and d.
std::vector<DimVector> generic_subdims(const Quiver& quiver, const DimVector& d,
                                       SubdimCache& cache);

// Calls fn(e) for every e <= d componentwise, in lexicographic order.
template <typename Fn>
void for_each_below(const DimVector& d, Fn&& fn) {
  std::vector<std::int64_t> cur(d.size(), 0);
  for (;;) {
    fn(DimVector(cur));
    std::size_t i = cur.size();
    while (i > 0) {
      --i;
      if (cur[i] < d[i]) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
      if (i == 0) return;
    }
    if (cur.empty()) return;
  }
}

}  // namespace quivexp
