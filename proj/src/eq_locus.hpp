#pragma once

#include <memory>
#include <string>
#include <vector>

#include "chromatic.hpp"
#include "perm_group.hpp"

namespace locus {

// A group with its subgroup classes and display names, shared by the loci
// computed over it.
struct GroupContext {
  std::string name;  // catalog identifier or "degree N" for spec-file input
  PermGroup group;
  std::vector<SubgroupClass> classes;
  std::vector<std::string> labels;  // "1", "C2", "H12#1", ..., "D10" for G

  static std::shared_ptr<const GroupContext> make(std::string name, PermGroup g,
                                                  size_t lattice_cap = kDefaultLatticeCap);

  size_t index_of_class(const ElemSet& canonical_rep) const;
  size_t trivial_class() const { return 0; }
  size_t full_class() const { return classes.size() - 1; }
};

// Resolves a subgroup-class selector: "1", "G", a catalog-style name or bare
// number giving the order, "<order>#<i>" picking the i-th class of that order
// in canonical order, or a comma-separated generator list in cycle notation.
// With require_normal set, name/number/index forms range over normal classes
// only and a resolved non-normal class is rejected. Several classes matching
// an order is ambiguous_selector; no class matching is invalid_argument.
size_t resolve_class_selector(const GroupContext& ctx, const std::string& selector,
                              bool require_normal);

// Subset of the spectrum of compact G-spectra. Per subgroup class there is
// one chromatic tower per prime; membership above height 1 never depends on
// the height, so a tower is stored as one bit. Explicit primes cover at
// least the primes dividing |G|; every other prime behaves like the generic
// tag. All towers of a class share one height-1 point.
struct EqLocus {
  std::shared_ptr<const GroupContext> ctx;
  std::string op;             // operation that produced the locus
  std::string subject_key;    // "normal" or "subgroup"
  std::string subject;        // label of the class the operation was fed
  std::vector<uint64_t> primes;            // ascending
  std::vector<std::vector<bool>> column;   // [class][prime]
  std::vector<bool> generic;               // [class]
  std::vector<bool> height_one;            // [class]

  bool is_whole_spectrum() const;
  bool is_empty() const;
  void check_invariant() const;  // height-1 point pulls in every tower
};

// Raw membership criteria, usable with any conjugate representative.
bool inflation_column_holds(const PermGroup& g, const ElemSet& n, const ElemSet& h,
                            uint64_t p);
bool inflation_height_one_holds(const PermGroup& g, const ElemSet& n, const ElemSet& h);
bool geomfix_column_holds(const PermGroup& g, const ElemSet& n, const ElemSet& h,
                          uint64_t p);
bool geomfix_height_one_holds(const PermGroup& g, const ElemSet& n, const ElemSet& h);

// Locus of the inflation functor along G -> G/N: a tower (H,p) lies in the
// locus iff N ∩ H ⊆ o_p(H), the height-1 point of H iff that holds at every
// prime. Extra explicit primes beyond those dividing |G| may be requested.
EqLocus inflation_locus(std::shared_ptr<const GroupContext> ctx, size_t normal_idx,
                        const std::vector<uint64_t>& extra_primes = {});

// Locus of relative geometric fixed points: (H,p) in the locus iff
// o_p(H) ⊇ N; at the generic tag and at height 1 the condition is H ⊇ N
// (together with every prime column for height 1).
EqLocus geometric_fixed_locus(std::shared_ptr<const GroupContext> ctx,
                              size_t normal_idx,
                              const std::vector<uint64_t>& extra_primes = {});

// Support of the orbit G/H: every class subconjugate to H, at all primes and
// heights including 1.
EqLocus orbit_support(std::shared_ptr<const GroupContext> ctx, size_t class_idx,
                      const std::vector<uint64_t>& extra_primes = {});

// Union of orbit supports over the family of classes intersecting N
// trivially; the locus carved out by N-free spectra.
EqLocus n_free_locus(std::shared_ptr<const GroupContext> ctx, size_t normal_idx,
                     const std::vector<uint64_t>& extra_primes = {});

// Locus of absolute geometric fixed points of the class H, a subset of the
// non-equivariant chromatic spectrum: column p present iff H is p-perfect,
// generic present iff H is p-perfect at every prime.
ChromaticSubset absolute_geometric_fixed_locus(const GroupContext& ctx,
                                               size_t class_idx,
                                               const std::vector<uint64_t>& extra_primes = {});

EqLocus empty_locus(std::shared_ptr<const GroupContext> ctx,
                    const std::vector<uint64_t>& extra_primes = {});
EqLocus whole_spectrum(std::shared_ptr<const GroupContext> ctx,
                       const std::vector<uint64_t>& extra_primes = {});

// Pointwise set algebra; both sides must live on the same spectrum.
EqLocus locus_union(const EqLocus& a, const EqLocus& b);
EqLocus locus_intersect(const EqLocus& a, const EqLocus& b);
bool locus_contains(const EqLocus& outer, const EqLocus& inner);
bool locus_equal(const EqLocus& a, const EqLocus& b);

}  // namespace locus
