#include "antichain/ideals.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace antichain {

IdealFamily::IdealFamily(std::vector<Subset> ideals, std::vector<Subset> maxima)
    : ideals_(std::move(ideals)), max_(std::move(maxima)) {
  index_.reserve(ideals_.size());
  for (std::size_t i = 0; i < ideals_.size(); ++i) index_.emplace(ideals_[i], i);
}

std::size_t IdealFamily::index_of(const Subset& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) throw InvalidArgument("subset is not an ideal of this family");
  return it->second;
}

bool is_ideal(const Poset& p, const Subset& s) {
  bool ok = true;
  s.for_each([&](std::size_t x) {
    if (!p.down(x).is_subset_of(s)) ok = false;
  });
  return ok;
}

bool is_antichain(const Poset& p, const Subset& s) {
  bool ok = true;
  s.for_each([&](std::size_t x) {
    Subset others = p.down(x) | p.up(x);
    others.erase(x);
    if (others.intersects(s)) ok = false;
  });
  return ok;
}

namespace {

Subset maxima_of_ideal(const Poset& p, const Subset& ideal) {
  Subset out(p.size());
  ideal.for_each([&](std::size_t x) {
    Subset strict_up = p.up(x);
    strict_up.erase(x);
    if (!strict_up.intersects(ideal)) out.insert(x);
  });
  return out;
}

}  // namespace

Subset max_elements(const Poset& p, const Subset& ideal) {
  if (!is_ideal(p, ideal)) throw NotAnIdeal();
  return maxima_of_ideal(p, ideal);
}

IdealFamily enumerate_ideals(const Poset& p, std::size_t max_ideals) {
  const std::size_t n = p.size();
  std::vector<Subset> strict_down(n);
  for (std::size_t e = 0; e < n; ++e) {
    strict_down[e] = p.down(e);
    strict_down[e].erase(e);
  }

  std::unordered_set<Subset, SubsetHash> seen;
  std::vector<Subset> found;
  found.emplace_back(n);
  seen.insert(found.back());
  for (std::size_t head = 0; head < found.size(); ++head) {
    const Subset current = found[head];
    for (std::size_t e = 0; e < n; ++e) {
      if (current.contains(e) || !strict_down[e].is_subset_of(current)) continue;
      Subset next = current;
      next.insert(e);
      if (seen.insert(next).second) {
        if (found.size() >= max_ideals) throw ExplosionError("ideal count", max_ideals);
        found.push_back(std::move(next));
      }
    }
  }

  std::vector<std::size_t> card(found.size());
  for (std::size_t i = 0; i < found.size(); ++i) card[i] = found[i].count();
  std::vector<std::size_t> perm(found.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (card[a] != card[b]) return card[a] < card[b];
    return found[a].lex_less(found[b]);
  });
  std::vector<Subset> ideals, maxima;
  ideals.reserve(found.size());
  maxima.reserve(found.size());
  for (auto i : perm) {
    maxima.push_back(maxima_of_ideal(p, found[i]));
    ideals.push_back(std::move(found[i]));
  }
  return IdealFamily(std::move(ideals), std::move(maxima));
}

void enumerate_antichains(const Poset& p, const std::function<void(const Subset&)>& visit,
                          std::size_t max_antichains) {
  const std::size_t n = p.size();
  std::vector<Subset> incomparable(n, Subset(n));
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t f = e + 1; f < n; ++f)
      if (!p.comparable(e, f)) incomparable[e].insert(f);

  std::size_t produced = 0;
  Subset chosen(n);
  // candidates: elements above the last chosen index, incomparable to all chosen
  std::function<void(const Subset&)> extend = [&](const Subset& candidates) {
    if (++produced > max_antichains) throw ExplosionError("antichain count", max_antichains);
    visit(chosen);
    candidates.for_each([&](std::size_t e) {
      // incomparable[e] only holds larger indices, so each antichain is
      // produced once
      chosen.insert(e);
      extend(candidates & incomparable[e]);
      chosen.erase(e);
    });
  };
  extend(Subset::full(n));
}

IntPoly antichain_poly_direct(const Poset& p, std::size_t max_antichains) {
  std::vector<mpz_class> counts(p.size() + 1, 0);
  enumerate_antichains(
      p, [&](const Subset& a) { ++counts[a.count()]; }, max_antichains);
  return IntPoly(std::move(counts));
}

IntPoly ideal_poly_direct(const Poset& p, std::size_t max_ideals) {
  const IdealFamily fam = enumerate_ideals(p, max_ideals);
  std::vector<mpz_class> counts(p.size() + 1, 0);
  for (const auto& ideal : fam.ideals()) ++counts[ideal.count()];
  return IntPoly(std::move(counts));
}

}  // namespace antichain
