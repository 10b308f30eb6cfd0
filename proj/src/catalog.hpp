#pragma once

#include <optional>
#include <string>
#include <vector>

#include "perm.hpp"
#include "perm_group.hpp"

namespace locus {

// Generating data for a group, before closure.
struct GroupSpec {
  std::string name;  // display name: catalog identifier or "degree <n>" input
  uint32_t degree = 0;
  std::vector<Permutation> gens;
};

// Recognizes C<n>, D<2n>, S<n>, A<n> and C<n>xC<m>; empty when the name does
// not parse as a catalog identifier. Size limits are the CLI catalog bounds
// (C: n <= 64, D: order <= 64, S/A: n <= 5, CxC: nm <= 64); names outside
// them error with cap_exceeded.
std::optional<GroupSpec> catalog_lookup(const std::string& name);

// Parses the group-spec text format: a "degree N" header line followed by
// one generator per line in 1-based cycle notation. '#' starts a comment.
GroupSpec parse_group_spec(const std::string& text);

// Catalog name if the text matches an identifier, otherwise group-spec text.
GroupSpec resolve_group_input(const std::string& input);

// Every catalog identifier, used by the verification suite: cyclic, dihedral,
// symmetric, alternating and C<n>xC<m> entries in a fixed order.
std::vector<std::string> catalog_names();

PermGroup build_group(const GroupSpec& spec, size_t order_cap = kDefaultOrderCap);

}  // namespace locus
