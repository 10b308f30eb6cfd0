#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "perm.hpp"

namespace locus {

inline constexpr size_t kDefaultOrderCap = 10000;
inline constexpr size_t kDefaultLatticeCap = 200;

// A subgroup is a sorted list of element indices into the ambient group.
using ElemSet = std::vector<uint32_t>;

// Finite permutation group with its element list fully materialized and
// sorted lexicographically by image array. The identity is always index 0.
class PermGroup {
public:
  // Closes the generators under products; errors with cap_exceeded when more
  // than `order_cap` elements appear, and parse_error on degree mismatches.
  static PermGroup generate(uint32_t degree, std::vector<Permutation> gens,
                            size_t order_cap = kDefaultOrderCap);

  uint32_t degree() const { return degree_; }
  size_t order() const { return elems_.size(); }
  const std::vector<Permutation>& elements() const { return elems_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const Permutation& elem(uint32_t i) const { return elems_[i]; }

  uint32_t mult(uint32_t i, uint32_t j) const;  // index of elems_[i] * elems_[j]
  uint32_t inv(uint32_t i) const { return inv_[i]; }
  uint32_t elem_order(uint32_t i) const { return elem_order_[i]; }
  uint32_t conj(uint32_t x, uint32_t g) const;  // index of g^-1 x g

  uint32_t index_of(const Permutation& p) const;  // errors when absent

  // Prime divisors of the group order, ascending.
  std::vector<uint64_t> primes() const;

  ElemSet full_set() const;

private:
  PermGroup() = default;

  uint32_t degree_ = 0;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elems_;
  std::vector<uint32_t> inv_;
  std::vector<uint32_t> elem_order_;
  std::vector<uint32_t> table_;  // order*order product table when small enough
};

struct SubgroupClass {
  ElemSet rep;        // lexicographically least conjugate
  size_t order = 0;
  size_t class_size = 0;
  bool is_normal = false;  // equivalent to class_size == 1
};

// Subgroup-level operations. Sets are always sorted ascending.

bool set_contains(const ElemSet& a, uint32_t x);
bool set_includes(const ElemSet& a, const ElemSet& b);  // b subset of a
ElemSet set_intersect(const ElemSet& a, const ElemSet& b);

ElemSet subgroup_closure(const PermGroup& g, const ElemSet& seed);
ElemSet conjugate_set(const PermGroup& g, const ElemSet& s, uint32_t by);
bool is_subgroup(const PermGroup& g, const ElemSet& s);
bool is_normal_in(const PermGroup& g, const ElemSet& s, const ElemSet& ambient);

// Lexicographically least conjugate of s; optionally reports the number of
// distinct conjugates.
ElemSet canonical_conjugate(const PermGroup& g, const ElemSet& s,
                            size_t* class_size = nullptr);

// True when some conjugate of k lies inside h.
bool is_subconjugate(const PermGroup& g, const ElemSet& k, const ElemSet& h);

// Smallest normal subgroup of h whose index in h is a power of p, computed
// as the subgroup generated by the elements of h of order prime to p.
ElemSet o_p(const PermGroup& g, const ElemSet& h, uint64_t p);

// Containment criterion: h is p-subnormal in g iff h contains o_p(G).
bool is_p_subnormal(const PermGroup& g, const ElemSet& h, uint64_t p);

// All conjugacy classes of subgroups, sorted by (order, representative).
// Errors with cap_exceeded when g.order() exceeds lattice_cap.
std::vector<SubgroupClass> subgroup_classes(const PermGroup& g,
                                            size_t lattice_cap = kDefaultLatticeCap);

// Every subgroup of g, expanded from the class list; sorted like the classes
// with conjugates of one class ordered lexicographically.
std::vector<ElemSet> all_subgroups(const PermGroup& g,
                                   const std::vector<SubgroupClass>& classes);

enum class FamilyKind {
  n_free,          // K with K ∩ N trivial
  not_containing,  // K that do not contain N
};

// Indices into `classes` of the members of the family determined by the
// normal subgroup classes[normal_idx]. Errors with invalid_argument when
// that class is not normal. The predicate is checked over all conjugates.
std::vector<size_t> family_from_predicate(const PermGroup& g,
                                          const std::vector<SubgroupClass>& classes,
                                          size_t normal_idx, FamilyKind kind);

// Deterministic small generating set for s: repeatedly adjoins the least
// element outside the subgroup generated so far.
std::vector<uint32_t> minimal_generators(const PermGroup& g, const ElemSet& s);

// Cycle-notation strings of minimal_generators, comma separated; "()" for
// the trivial subgroup.
std::string describe_subgroup(const PermGroup& g, const ElemSet& s);

}  // namespace locus
