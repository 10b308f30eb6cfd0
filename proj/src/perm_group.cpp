#include "perm_group.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "error.hpp"

namespace locus {

namespace {

constexpr size_t kTableLimit = 512;  // build the product table up to this order

}  // namespace

PermGroup PermGroup::generate(uint32_t degree, std::vector<Permutation> gens,
                              size_t order_cap) {
  for (const Permutation& p : gens)
    if (p.degree() != degree)
      fail(Status::parse_error, "generator degree does not match group degree");

  std::set<Permutation> seen;
  std::deque<Permutation> queue;
  seen.insert(Permutation::identity(degree));
  queue.push_back(Permutation::identity(degree));
  while (!queue.empty()) {
    Permutation cur = std::move(queue.front());
    queue.pop_front();
    for (const Permutation& gen : gens) {
      Permutation next = cur * gen;
      if (seen.insert(next).second) {
        if (seen.size() > order_cap)
          fail(Status::cap_exceeded,
               "group order exceeds cap of " + std::to_string(order_cap));
        queue.push_back(std::move(next));
      }
    }
  }

  PermGroup g;
  g.degree_ = degree;
  g.gens_ = std::move(gens);
  g.elems_.assign(seen.begin(), seen.end());  // set order = sorted by images
  assert(g.elems_[0].is_identity());

  size_t n = g.elems_.size();
  if (n <= kTableLimit) {
    g.table_.resize(n * n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        g.table_[i * n + j] = g.index_of(g.elems_[i] * g.elems_[j]);
  }

  g.inv_.resize(n);
  for (size_t i = 0; i < n; ++i) g.inv_[i] = g.index_of(g.elems_[i].inverse());

  g.elem_order_.resize(n);
  for (size_t i = 0; i < n; ++i) {
    uint32_t k = 1;
    uint32_t x = static_cast<uint32_t>(i);
    while (x != 0) {
      x = g.mult(x, static_cast<uint32_t>(i));
      ++k;
    }
    g.elem_order_[i] = k;
  }
  return g;
}

uint32_t PermGroup::mult(uint32_t i, uint32_t j) const {
  if (!table_.empty()) return table_[static_cast<size_t>(i) * order() + j];
  return index_of(elems_[i] * elems_[j]);
}

uint32_t PermGroup::conj(uint32_t x, uint32_t g) const {
  return mult(mult(inv_[g], x), g);
}

uint32_t PermGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
  if (it == elems_.end() || !(*it == p))
    fail(Status::invalid_argument, "permutation is not a group element");
  return static_cast<uint32_t>(it - elems_.begin());
}

std::vector<uint64_t> PermGroup::primes() const {
  std::vector<uint64_t> result;
  size_t n = order();
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result.push_back(n);
  return result;
}

ElemSet PermGroup::full_set() const {
  ElemSet all(order());
  std::iota(all.begin(), all.end(), 0u);
  return all;
}

bool set_contains(const ElemSet& a, uint32_t x) {
  return std::binary_search(a.begin(), a.end(), x);
}

bool set_includes(const ElemSet& a, const ElemSet& b) {
  return std::includes(a.begin(), a.end(), b.begin(), b.end());
}

ElemSet set_intersect(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

ElemSet subgroup_closure(const PermGroup& g, const ElemSet& seed) {
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  std::deque<uint32_t> queue{0};
  for (uint32_t x : seed) {
    if (!in[x]) {
      in[x] = true;
      queue.push_back(x);
    }
  }
  // Right-multiplying by the seed reaches every word in the seed elements;
  // inverses come for free in a finite group.
  while (!queue.empty()) {
    uint32_t cur = queue.front();
    queue.pop_front();
    for (uint32_t s : seed) {
      uint32_t next = g.mult(cur, s);
      if (!in[next]) {
        in[next] = true;
        queue.push_back(next);
      }
    }
  }
  ElemSet out;
  for (uint32_t i = 0; i < g.order(); ++i)
    if (in[i]) out.push_back(i);
  return out;
}

ElemSet conjugate_set(const PermGroup& g, const ElemSet& s, uint32_t by) {
  ElemSet out;
  out.reserve(s.size());
  for (uint32_t x : s) out.push_back(g.conj(x, by));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_subgroup(const PermGroup& g, const ElemSet& s) {
  if (s.empty() || s[0] != 0) return false;
  for (uint32_t a : s)
    for (uint32_t b : s)
      if (!set_contains(s, g.mult(a, b))) return false;
  return true;
}

bool is_normal_in(const PermGroup& g, const ElemSet& s, const ElemSet& ambient) {
  for (uint32_t t : ambient)
    if (conjugate_set(g, s, t) != s) return false;
  return true;
}

ElemSet canonical_conjugate(const PermGroup& g, const ElemSet& s,
                            size_t* class_size) {
  std::set<ElemSet> conjugates;
  ElemSet best = s;
  for (uint32_t t = 0; t < g.order(); ++t) {
    ElemSet c = conjugate_set(g, s, t);
    if (c < best) best = c;
    if (class_size) conjugates.insert(std::move(c));
  }
  if (class_size) *class_size = conjugates.size();
  return best;
}

bool is_subconjugate(const PermGroup& g, const ElemSet& k, const ElemSet& h) {
  if (k.size() > h.size()) return false;
  for (uint32_t t = 0; t < g.order(); ++t)
    if (set_includes(h, conjugate_set(g, k, t))) return true;
  return false;
}

ElemSet o_p(const PermGroup& g, const ElemSet& h, uint64_t p) {
  ElemSet coprime;
  for (uint32_t x : h)
    if (g.elem_order(x) % p != 0) coprime.push_back(x);
  return subgroup_closure(g, coprime);
}

bool is_p_subnormal(const PermGroup& g, const ElemSet& h, uint64_t p) {
  return set_includes(h, o_p(g, g.full_set(), p));
}

std::vector<SubgroupClass> subgroup_classes(const PermGroup& g, size_t lattice_cap) {
  if (g.order() > lattice_cap)
    fail(Status::cap_exceeded,
         "subgroup enumeration capped at order " + std::to_string(lattice_cap));

  // Every cyclic subgroup, all conjugates included.
  std::set<ElemSet> cyclics;
  for (uint32_t x = 1; x < g.order(); ++x) cyclics.insert(subgroup_closure(g, {x}));

  std::map<ElemSet, SubgroupClass> found;
  std::deque<ElemSet> worklist;
  auto record = [&](const ElemSet& sub) {
    SubgroupClass cls;
    cls.rep = canonical_conjugate(g, sub, &cls.class_size);
    cls.order = sub.size();
    cls.is_normal = cls.class_size == 1;
    if (found.emplace(cls.rep, cls).second) worklist.push_back(cls.rep);
  };

  record(ElemSet{0});
  for (const ElemSet& c : cyclics) record(c);

  // Cyclic extension: join each known representative with each cyclic
  // subgroup until nothing new appears.
  while (!worklist.empty()) {
    ElemSet base = std::move(worklist.front());
    worklist.pop_front();
    for (const ElemSet& c : cyclics) {
      if (set_includes(base, c)) continue;
      ElemSet seed = base;
      seed.insert(seed.end(), c.begin(), c.end());
      std::sort(seed.begin(), seed.end());
      seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
      record(subgroup_closure(g, seed));
    }
  }

  std::vector<SubgroupClass> classes;
  classes.reserve(found.size());
  for (auto& [rep, cls] : found) classes.push_back(std::move(cls));
  std::sort(classes.begin(), classes.end(),
            [](const SubgroupClass& a, const SubgroupClass& b) {
              if (a.order != b.order) return a.order < b.order;
              return a.rep < b.rep;
            });
  return classes;
}

std::vector<ElemSet> all_subgroups(const PermGroup& g,
                                   const std::vector<SubgroupClass>& classes) {
  std::vector<ElemSet> subs;
  for (const SubgroupClass& cls : classes) {
    std::set<ElemSet> conjugates;
    for (uint32_t t = 0; t < g.order(); ++t)
      conjugates.insert(conjugate_set(g, cls.rep, t));
    subs.insert(subs.end(), conjugates.begin(), conjugates.end());
  }
  return subs;
}

std::vector<size_t> family_from_predicate(const PermGroup& g,
                                          const std::vector<SubgroupClass>& classes,
                                          size_t normal_idx, FamilyKind kind) {
  const SubgroupClass& n = classes.at(normal_idx);
  if (!n.is_normal)
    fail(Status::invalid_argument, "family predicate needs a normal subgroup");

  std::vector<size_t> members;
  for (size_t i = 0; i < classes.size(); ++i) {
    bool in_family = true;
    for (uint32_t t = 0; t < g.order() && in_family; ++t) {
      ElemSet c = conjugate_set(g, classes[i].rep, t);
      switch (kind) {
        case FamilyKind::n_free:
          in_family = set_intersect(c, n.rep).size() == 1;
          break;
        case FamilyKind::not_containing:
          in_family = !set_includes(c, n.rep);
          break;
      }
    }
    if (in_family) members.push_back(i);
  }
  return members;
}

std::vector<uint32_t> minimal_generators(const PermGroup& g, const ElemSet& s) {
  std::vector<uint32_t> gens;
  ElemSet current{0};
  for (uint32_t x : s) {
    if (set_contains(current, x)) continue;
    gens.push_back(x);
    ElemSet seed = current;
    seed.push_back(x);
    std::sort(seed.begin(), seed.end());
    current = subgroup_closure(g, seed);
    if (current == s) break;
  }
  return gens;
}

std::string describe_subgroup(const PermGroup& g, const ElemSet& s) {
  std::vector<uint32_t> gens = minimal_generators(g, s);
  if (gens.empty()) return "()";
  std::ostringstream out;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) out << ',';
    out << g.elem(gens[i]).to_cycles();
  }
  return out.str();
}

}  // namespace locus
