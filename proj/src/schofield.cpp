#include "quivexp/schofield.hpp"

#include "quivexp/errors.hpp"

namespace quivexp {

SubdimCache::Entry SubdimCache::find(const DimVector& e) const {
  std::lock_guard lock(mutex_);
  auto it = entries_.find(e);
  return it == entries_.end() ? nullptr : it->second;
}

SubdimCache::Entry SubdimCache::insert(const DimVector& e, std::vector<DimVector> subdims) {
  auto entry = std::make_shared<const std::vector<DimVector>>(std::move(subdims));
  std::lock_guard lock(mutex_);
  auto [it, inserted] = entries_.emplace(e, std::move(entry));
  return it->second;
}

std::size_t SubdimCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

namespace {

void check_inputs(const Quiver& quiver, const DimVector& v, const SubdimCache& cache) {
  if (static_cast<int>(v.size()) != quiver.vertex_count()) {
    throw InputError("dimension vector " + v.to_string() + " does not match the quiver");
  }
  if (!(cache.quiver() == quiver)) {
    throw InputError("subdimension cache belongs to a different quiver");
  }
}

SubdimCache::Entry subdims_of(const Quiver& quiver, const DimVector& d, SubdimCache& cache);

bool embeds_unchecked(const Quiver& quiver, const DimVector& e, const DimVector& d,
                      SubdimCache& cache) {
  if (!e.fits_in(d)) return false;
  if (e.is_zero() || e == d) return true;
  const DimVector rest = d - e;
  for (const DimVector& sub : *subdims_of(quiver, e, cache)) {
    if (euler_form(quiver, sub, rest) < 0) return false;
  }
  return true;
}

SubdimCache::Entry subdims_of(const Quiver& quiver, const DimVector& d, SubdimCache& cache) {
  if (auto hit = cache.find(d)) return hit;
  std::vector<DimVector> result;
  for_each_below(d, [&](const DimVector& e) {
    if (embeds_unchecked(quiver, e, d, cache)) result.push_back(e);
  });
  return cache.insert(d, std::move(result));
}

}  // namespace

bool embeds(const Quiver& quiver, const DimVector& e, const DimVector& d, SubdimCache& cache) {
  check_inputs(quiver, e, cache);
  check_inputs(quiver, d, cache);
  return embeds_unchecked(quiver, e, d, cache);
}

std::vector<DimVector> generic_subdims(const Quiver& quiver, const DimVector& d,
                                       SubdimCache& cache) {
  check_inputs(quiver, d, cache);
  return *subdims_of(quiver, d, cache);
}

}  // namespace quivexp
