#include "antichain/poset.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "antichain/errors.hpp"
#include "antichain/ideals.hpp"

namespace antichain {

Poset Poset::from_relations(std::size_t n, const std::vector<Cover>& relations) {
  Poset p;
  p.n_ = n;
  std::vector<std::vector<std::size_t>> below(n);
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<std::size_t>> above(n);
  for (const auto& [u, v] : relations) {
    if (u >= n || v >= n)
      throw InvalidArgument("relation " + std::to_string(u) + " < " + std::to_string(v) +
                            " references an element outside 0.." + std::to_string(n));
    if (u == v) throw InvalidArgument("relation " + std::to_string(u) + " < itself");
    below[v].push_back(u);
    above[u].push_back(v);
    ++indegree[v];
  }

  // Kahn's algorithm; lowest index first keeps the result deterministic.
  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<std::size_t> ready;
  for (std::size_t i = n; i-- > 0;)
    if (indegree[i] == 0) ready.push_back(i);
  while (!ready.empty()) {
    std::sort(ready.begin(), ready.end(), std::greater<>());
    const std::size_t v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (auto w : above[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  if (order.size() != n) throw InvalidArgument("relations contain a cycle");

  p.down_.assign(n, Subset(n));
  for (auto v : order) {
    p.down_[v].insert(v);
    for (auto u : below[v]) p.down_[v] |= p.down_[u];
  }
  p.up_.assign(n, Subset(n));
  for (std::size_t v = 0; v < n; ++v)
    p.down_[v].for_each([&](std::size_t u) { p.up_[u].insert(v); });

  p.lower_.assign(n, {});
  p.upper_.assign(n, {});
  for (std::size_t v = 0; v < n; ++v) {
    Subset strict = p.down_[v];
    strict.erase(v);
    Subset implied(n);
    strict.for_each([&](std::size_t w) {
      Subset sw = p.down_[w];
      sw.erase(w);
      implied |= sw;
    });
    (strict - implied).for_each([&](std::size_t u) {
      p.covers_.emplace_back(u, v);
    });
  }
  std::sort(p.covers_.begin(), p.covers_.end());
  for (const auto& [u, v] : p.covers_) {
    p.lower_[v].push_back(u);
    p.upper_[u].push_back(v);
  }
  p.derive_rank();
  return p;
}

void Poset::derive_rank() {
  std::vector<int> r(n_, 0);
  // Linear extension: sort elements by downset size.
  std::vector<std::size_t> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return down_[a].count() < down_[b].count();
  });
  for (auto v : order) {
    if (lower_[v].empty()) {
      r[v] = 1;
      continue;
    }
    const int below = r[lower_[v].front()];
    for (auto u : lower_[v])
      if (r[u] != below) return;
    r[v] = below + 1;
  }
  int top = -1;
  for (std::size_t v = 0; v < n_; ++v) {
    if (!upper_[v].empty()) continue;
    if (top < 0) top = r[v];
    if (r[v] != top) return;
  }
  rank_ = std::move(r);
}

bool Poset::is_connected() const {
  if (n_ == 0) return true;
  std::vector<std::size_t> parent(n_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n_;
  for (const auto& [u, v] : covers_) {
    auto a = find(u), b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

int Poset::rank(std::size_t x) const { return ranks()[x]; }

const std::vector<int>& Poset::ranks() const {
  if (!rank_) throw NotGraded();
  return *rank_;
}

int Poset::max_rank() const {
  const auto& r = ranks();
  return r.empty() ? 0 : *std::max_element(r.begin(), r.end());
}

std::vector<std::size_t> Poset::rank_levels() const {
  std::vector<std::size_t> levels(static_cast<std::size_t>(max_rank()), 0);
  for (int r : ranks()) ++levels[static_cast<std::size_t>(r - 1)];
  return levels;
}

std::vector<std::size_t> Poset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n_; ++v)
    if (lower_[v].empty()) out.push_back(v);
  return out;
}

std::vector<std::size_t> Poset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < n_; ++v)
    if (upper_[v].empty()) out.push_back(v);
  return out;
}

Subset Poset::down_closure(const Subset& s) const {
  Subset out(n_);
  s.for_each([&](std::size_t x) { out |= down_[x]; });
  return out;
}

Poset chain(std::size_t n) {
  if (n == 0) throw InvalidArgument("chain length must be positive");
  std::vector<Cover> rel;
  for (std::size_t i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return Poset::from_relations(n, rel);
}

Poset product(const Poset& p, const Poset& q) {
  const std::size_t m = q.size();
  std::vector<Cover> rel;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (const auto& [b1, b2] : q.covers()) rel.emplace_back(a * m + b1, a * m + b2);
  for (const auto& [a1, a2] : p.covers())
    for (std::size_t b = 0; b < m; ++b) rel.emplace_back(a1 * m + b, a2 * m + b);
  return Poset::from_relations(p.size() * m, rel);
}

Poset ordinal_sum(const Poset& p, const Poset& q) {
  const std::size_t off = p.size();
  std::vector<Cover> rel(p.covers());
  for (const auto& [u, v] : q.covers()) rel.emplace_back(u + off, v + off);
  for (auto top : p.maximal_elements())
    for (auto bottom : q.minimal_elements()) rel.emplace_back(top, bottom + off);
  return Poset::from_relations(p.size() + q.size(), rel);
}

Poset disjoint_union(const Poset& p, const Poset& q) {
  const std::size_t off = p.size();
  std::vector<Cover> rel(p.covers());
  for (const auto& [u, v] : q.covers()) rel.emplace_back(u + off, v + off);
  return Poset::from_relations(p.size() + q.size(), rel);
}

Poset symmetric_square_quotient(std::size_t n) {
  if (n == 0) throw InvalidArgument("H(n) needs n >= 1");
  // index of (i, j), 0 <= i <= j < n, in lexicographic order
  std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n, 0));
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) index[i][j] = next++;
  std::vector<Cover> rel;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (i + 1 <= j) rel.emplace_back(index[i][j], index[i + 1][j]);
      if (j + 1 < n) rel.emplace_back(index[i][j], index[i][j + 1]);
    }
  return Poset::from_relations(next, rel);
}

Poset k_poset(std::size_t n) {
  if (n == 0) throw InvalidArgument("K(n) needs n >= 1");
  return ordinal_sum(ordinal_sum(chain(n), disjoint_union(chain(1), chain(1))), chain(n));
}

Poset ideal_poset(const Poset& p, std::size_t max_ideals) {
  const IdealFamily fam = enumerate_ideals(p, max_ideals);
  std::vector<Cover> rel;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const Subset& ideal = fam.ideal(i);
    for (std::size_t e = 0; e < p.size(); ++e) {
      if (ideal.contains(e)) continue;
      Subset strict = p.down(e);
      strict.erase(e);
      if (!strict.is_subset_of(ideal)) continue;
      Subset bigger = ideal;
      bigger.insert(e);
      rel.emplace_back(i, fam.index_of(bigger));
    }
  }
  return Poset::from_relations(fam.size(), rel);
}

bool is_rank_unimodal_levels(const std::vector<std::size_t>& levels) {
  std::size_t i = 0;
  while (i + 1 < levels.size() && levels[i] <= levels[i + 1]) ++i;
  while (i + 1 < levels.size() && levels[i] >= levels[i + 1]) ++i;
  return i + 1 >= levels.size();
}

bool unique_largest_rank_level(const Poset& p, std::size_t k) {
  if (k == 0) throw InvalidArgument("k must be positive");
  const auto levels = p.rank_levels();
  if (!is_rank_unimodal_levels(levels)) throw NotRankUnimodal();
  const std::size_t d = levels.size();
  if (k > d) return false;
  // window ending at rank i (1-based) covers ranks i+1-k .. i
  std::size_t best = 0, hits = 0;
  for (std::size_t i = k; i <= d; ++i) {
    std::size_t sum = 0;
    for (std::size_t j = i + 1 - k; j <= i; ++j) sum += levels[j - 1];
    if (sum > best) {
      best = sum;
      hits = 1;
    } else if (sum == best) {
      ++hits;
    }
  }
  return hits == 1;
}

}  // namespace antichain
