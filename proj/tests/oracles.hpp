#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "perm.hpp"
#include "perm_group.hpp"

namespace locus::test {

// Pairwise-product fixpoint; a different closure strategy than the library's
// breadth-first generator walk.
std::set<Permutation> naive_closure(uint32_t degree,
                                    const std::vector<Permutation>& gens);

// Every subgroup of g, found by checking each subset of element indices for
// closure. Only usable on tiny groups.
std::vector<ElemSet> brute_force_subgroups(const PermGroup& g);

// (canonical representative, class size) per conjugacy class of subgroups,
// sorted by (order, representative). Conjugation is done on raw permutations
// rather than through the index tables used by the library.
std::vector<std::pair<ElemSet, size_t>> brute_force_classes(const PermGroup& g);

}  // namespace locus::test
