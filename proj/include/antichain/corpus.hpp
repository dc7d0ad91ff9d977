#pragma once

#include <cstddef>
#include <vector>

#include "antichain/poset.hpp"

namespace antichain {

// Every connected graded poset with 1..max_size elements, one per
// isomorphism class. Ordered by size, then rank-level composition, then a
// canonical adjacency code, so the output is deterministic. Elements are
// numbered rank level by rank level. Practical up to max_size = 8.
std::vector<Poset> connected_graded_posets(std::size_t max_size);

}  // namespace antichain
