#include "antichain/corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <functional>
#include <set>

#include "antichain/errors.hpp"

namespace antichain {

namespace {

using Mask = std::uint16_t;
using Code = std::vector<Mask>;

// levels[i][v] = down-neighbour mask (over level i-1) of vertex v of level i;
// levels[0] holds zeros.
using Layered = std::vector<std::vector<Mask>>;

Mask permute_bits(Mask m, const std::vector<std::size_t>& new_pos) {
  Mask out = 0;
  for (std::size_t b = 0; b < new_pos.size(); ++b)
    if (m >> b & 1u) out = static_cast<Mask>(out | (1u << new_pos[b]));
  return out;
}

Code canonical_code(const Layered& g) {
  const std::size_t d = g.size();
  // perms[i] lists old vertices of level i in new order, for i < d-1
  std::vector<std::vector<std::size_t>> perms(d);
  for (std::size_t i = 0; i + 1 < d; ++i) {
    perms[i].resize(g[i].size());
    std::iota(perms[i].begin(), perms[i].end(), 0);
  }
  Code best;
  bool have = false;
  while (true) {
    Code code;
    std::vector<std::size_t> prev_pos;  // new position of each old vertex one level down
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Mask> mapped(g[i].size());
      for (std::size_t v = 0; v < g[i].size(); ++v) mapped[v] = i == 0 ? 0 : permute_bits(g[i][v], prev_pos);
      if (i + 1 < d) {
        for (auto v : perms[i]) code.push_back(mapped[v]);
        prev_pos.assign(g[i].size(), 0);
        for (std::size_t p = 0; p < perms[i].size(); ++p) prev_pos[perms[i][p]] = p;
      } else {
        std::sort(mapped.begin(), mapped.end());
        code.insert(code.end(), mapped.begin(), mapped.end());
      }
    }
    if (!have || code < best) {
      best = std::move(code);
      have = true;
    }
    // odometer over the permutations of all levels but the top
    std::size_t i = 0;
    while (i + 1 < d && !std::next_permutation(perms[i].begin(), perms[i].end())) ++i;
    if (i + 1 >= d) break;
  }
  return best;
}

bool connected(const Layered& g) {
  std::vector<std::size_t> offset(g.size() + 1, 0);
  for (std::size_t i = 0; i < g.size(); ++i) offset[i + 1] = offset[i] + g[i].size();
  std::vector<std::size_t> parent(offset.back());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 1; i < g.size(); ++i)
    for (std::size_t v = 0; v < g[i].size(); ++v)
      for (std::size_t b = 0; b < g[i - 1].size(); ++b)
        if (g[i][v] >> b & 1u) parent[find(offset[i] + v)] = find(offset[i - 1] + b);
  const std::size_t root = find(0);
  for (std::size_t x = 0; x < parent.size(); ++x)
    if (find(x) != root) return false;
  return true;
}

Poset realize(const Layered& g) {
  std::vector<std::size_t> offset(g.size() + 1, 0);
  for (std::size_t i = 0; i < g.size(); ++i) offset[i + 1] = offset[i] + g[i].size();
  std::vector<Cover> rel;
  for (std::size_t i = 1; i < g.size(); ++i)
    for (std::size_t v = 0; v < g[i].size(); ++v)
      for (std::size_t b = 0; b < g[i - 1].size(); ++b)
        if (g[i][v] >> b & 1u) rel.emplace_back(offset[i - 1] + b, offset[i] + v);
  return Poset::from_relations(offset.back(), rel);
}

// Level `level` vertices get nondecreasing nonzero masks whose union covers
// level-1; permuting a level realizes every isomorphism class this way.
void extend(Layered& g, const std::vector<std::size_t>& sizes, std::size_t level,
            std::set<Code>& seen, std::vector<std::pair<Code, Layered>>& out) {
  if (level == sizes.size()) {
    if (!connected(g)) return;
    Code code = canonical_code(g);
    if (seen.insert(code).second) out.emplace_back(std::move(code), g);
    return;
  }
  const std::size_t below = sizes[level - 1];
  const Mask full = static_cast<Mask>((1u << below) - 1);
  const std::size_t count = sizes[level];
  std::vector<Mask>& row = g[level];
  row.assign(count, 1);
  // iterate nondecreasing tuples over 1..full
  std::function<void(std::size_t, Mask, Mask)> pick = [&](std::size_t v, Mask lo, Mask covered) {
    if (v == count) {
      if (covered == full) extend(g, sizes, level + 1, seen, out);
      return;
    }
    for (Mask m = lo; m <= full && m != 0; ++m) {
      row[v] = m;
      pick(v + 1, m, static_cast<Mask>(covered | m));
      if (m == full) break;
    }
  };
  pick(0, 1, 0);
}

void compositions(std::size_t remaining, std::vector<std::size_t>& parts,
                  std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 0) {
    out.push_back(parts);
    return;
  }
  for (std::size_t p = 1; p <= remaining; ++p) {
    parts.push_back(p);
    compositions(remaining - p, parts, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<Poset> connected_graded_posets(std::size_t max_size) {
  if (max_size > 12) throw InvalidArgument("corpus generation is limited to 12 elements");
  std::vector<Poset> result;
  for (std::size_t size = 1; size <= max_size; ++size) {
    std::vector<std::vector<std::size_t>> comps;
    std::vector<std::size_t> parts;
    compositions(size, parts, comps);
    std::sort(comps.begin(), comps.end());
    for (const auto& sizes : comps) {
      if (sizes.size() == 1 && sizes[0] != 1) continue;  // antichains are disconnected
      std::set<Code> seen;
      std::vector<std::pair<Code, Layered>> found;
      Layered g(sizes.size());
      g[0].assign(sizes[0], 0);
      if (sizes.size() == 1) {
        found.emplace_back(Code{}, g);
      } else {
        extend(g, sizes, 1, seen, found);
      }
      std::sort(found.begin(), found.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (const auto& [code, layered] : found) result.push_back(realize(layered));
    }
  }
  return result;
}

}  // namespace antichain
