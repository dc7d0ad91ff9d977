#pragma once

#include <cstddef>
#include <functional>
#include <unordered_map>
#include <vector>

#include "antichain/errors.hpp"
#include "antichain/int_poly.hpp"
#include "antichain/poset.hpp"
#include "antichain/subset.hpp"

namespace antichain {

// All ideals of a poset in canonical order: by cardinality, then
// lexicographically on the sorted member list. The empty ideal is first and
// the full poset last; the order is a linear extension of inclusion.
class IdealFamily {
 public:
  IdealFamily(std::vector<Subset> ideals, std::vector<Subset> maxima);

  std::size_t size() const noexcept { return ideals_.size(); }
  const Subset& ideal(std::size_t i) const noexcept { return ideals_[i]; }
  const Subset& max_of(std::size_t i) const noexcept { return max_[i]; }
  const std::vector<Subset>& ideals() const noexcept { return ideals_; }

  // Whether I_j is contained in I_i.
  bool contains(std::size_t i, std::size_t j) const noexcept {
    return ideals_[j].is_subset_of(ideals_[i]);
  }

  // Throws InvalidArgument if s is not one of the ideals.
  std::size_t index_of(const Subset& s) const;

 private:
  std::vector<Subset> ideals_;
  std::vector<Subset> max_;
  std::unordered_map<Subset, std::size_t, SubsetHash> index_;
};

IdealFamily enumerate_ideals(const Poset& p, std::size_t max_ideals = kDefaultMaxIdeals);

bool is_ideal(const Poset& p, const Subset& s);
bool is_antichain(const Poset& p, const Subset& s);

// max(I). Throws NotAnIdeal.
Subset max_elements(const Poset& p, const Subset& ideal);

// Calls visit once per antichain (the empty one included). Backtracking over
// incomparable elements; independent of the ideal enumeration. Throws
// ExplosionError once more than max_antichains have been produced.
void enumerate_antichains(const Poset& p, const std::function<void(const Subset&)>& visit,
                          std::size_t max_antichains = kDefaultMaxIdeals);

// N_P(x) summed over antichains directly.
IntPoly antichain_poly_direct(const Poset& p, std::size_t max_antichains = kDefaultMaxIdeals);

// M_P(x) summed over ideals.
IntPoly ideal_poly_direct(const Poset& p, std::size_t max_ideals = kDefaultMaxIdeals);

}  // namespace antichain
