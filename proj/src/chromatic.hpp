#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "error.hpp"

namespace locus {

// Height value standing for infinity in chromatic thresholds.
inline constexpr uint32_t kInfiniteHeight = UINT32_MAX;

// Column rule: disengaged (nullopt) or every height from the given value up.
using Threshold = std::optional<uint32_t>;

// Subset of the chromatic spectrum of non-equivariant spectra: one column of
// points per prime at heights 2..inf, all columns sharing a single generic
// height-one point. Finitely many primes are tracked explicitly; `rest`
// applies uniformly to every other prime.
struct ChromaticSubset {
  std::map<uint64_t, Threshold> columns;
  Threshold rest;
  bool generic = false;

  bool is_empty() const;
  bool is_whole_space() const;

  // Thresholds start at 2 and the generic point drags every column in with
  // it (its closure is the whole space).
  void validate(Status on_error = Status::invalid_argument) const;
};

ChromaticSubset whole_chromatic_space(const std::vector<uint64_t>& explicit_primes);

// Compactness locus of the finite localization inverting y. Per column the
// answer is all-or-nothing: the column survives in full (heights 2..inf)
// exactly when y avoids it, and the generic point survives only when y is
// empty. y must be a union of closures of finite-height points: finite
// thresholds only, and generic membership only as the whole space; anything
// else errors with not_closed.
ChromaticSubset sh_localization_locus(const ChromaticSubset& y);

// The subset inverted by the classical localization at p: every column
// except p, from height 2 up.
ChromaticSubset p_localization_inverted(uint64_t p,
                                        const std::vector<uint64_t>& explicit_primes);

}  // namespace locus
