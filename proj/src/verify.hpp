#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace locus {

struct VerifyOptions {
  size_t max_order = 60;     // catalog groups up to this order take part
  int poset_count = 200;     // random posets for the localization oracle
  int max_poset_points = 10;
  int max_y_samples = 50;    // closed subsets tried per poset
  uint64_t seed = 0x10c05;   // fixed so runs are reproducible
  bool inject_failure = false;  // corrupts one comparison, for testing exit paths
};

struct VerifyLine {
  std::string name;
  size_t checks = 0;
  size_t mismatches = 0;
};

// Cross-checks the library's shortcuts against first-principles computations:
// o_p against the intersection of p-power-index normal subgroups,
// p-subnormality against an explicit chain search, finite localization
// against closed-subset enumeration and the clopen duality equivalences,
// plus the whole-spectrum and free-locus containment facts on the catalog.
struct VerifyReport {
  std::vector<VerifyLine> lines;

  bool all_passed() const;
  std::string table() const;  // one "ok/FAIL name (n checks)" row per line
};

VerifyReport run_verification(const VerifyOptions& opts = {});

}  // namespace locus
