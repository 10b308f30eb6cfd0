#pragma once

#include <string>
#include <vector>

#include "chromatic.hpp"
#include "eq_locus.hpp"
#include "poset.hpp"

namespace locus {

// Schema-level mirror of EqLocus, detached from the group machinery so that
// figures can be rendered straight from a JSON document.
struct LocusClassEntry {
  std::string label;
  uint64_t order = 0;
  std::string rep;              // generators in cycle notation
  std::vector<bool> columns;    // aligned with LocusDoc::primes
  bool generic = false;
  bool height_one = false;
};

struct LocusDoc {
  std::string group;
  std::string op;
  std::string subject_key;  // "normal" or "subgroup"; empty when inapplicable
  std::string subject;
  std::vector<uint64_t> primes;  // ascending
  std::vector<LocusClassEntry> classes;
};

LocusDoc doc_of(const EqLocus& z);

// {"group":..., "op":..., "normal":..., "classes":[{"label":..., "order":...,
//  "rep":..., "columns":{"2":true, ..., "generic":true}, "height_one":...}]}
std::string locus_to_json(const LocusDoc& doc);
LocusDoc locus_doc_from_json(const std::string& text);

// {"columns":{"2":{"from":2},"5":null}, "default":{"from":2},
//  "generic":false}; an unbounded height serializes as {"from":"inf"}
std::string chromatic_to_json(const ChromaticSubset& s);
ChromaticSubset chromatic_from_json(const std::string& text);

// {"members":[...],"closed":bool}; members in poset point order
std::string poset_subset_to_json(const FinitePoset& p, const PointSet& s);
PointSet poset_subset_from_json(const FinitePoset& p, const std::string& text);

}  // namespace locus
