#include "oracles.hpp"

#include <algorithm>
#include <map>

namespace locus::test {

std::set<Permutation> naive_closure(uint32_t degree,
                                    const std::vector<Permutation>& gens) {
  std::set<Permutation> elems;
  elems.insert(Permutation::identity(degree));
  for (const Permutation& g : gens) elems.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Permutation> snapshot(elems.begin(), elems.end());
    for (const Permutation& a : snapshot)
      for (const Permutation& b : snapshot)
        if (elems.insert(a * b).second) grew = true;
  }
  return elems;
}

std::vector<ElemSet> brute_force_subgroups(const PermGroup& g) {
  size_t n = g.order();
  std::vector<ElemSet> subs;
  for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
    if (!(mask & 1)) continue;  // must contain the identity
    ElemSet s;
    for (size_t i = 0; i < n; ++i)
      if (mask & (uint64_t{1} << i)) s.push_back(static_cast<uint32_t>(i));
    if (n % s.size() != 0) continue;
    bool closed = true;
    for (uint32_t a : s) {
      for (uint32_t b : s) {
        if (!std::binary_search(s.begin(), s.end(), g.mult(a, b))) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed) subs.push_back(std::move(s));
  }
  return subs;
}

std::vector<std::pair<ElemSet, size_t>> brute_force_classes(const PermGroup& g) {
  std::vector<ElemSet> subs = brute_force_subgroups(g);
  std::map<ElemSet, std::set<ElemSet>> by_rep;
  for (const ElemSet& s : subs) {
    std::set<ElemSet> conjugates;
    for (uint32_t t = 0; t < g.order(); ++t) {
      const Permutation& tp = g.elem(t);
      Permutation tinv = tp.inverse();
      ElemSet c;
      for (uint32_t x : s) c.push_back(g.index_of(tinv * g.elem(x) * tp));
      std::sort(c.begin(), c.end());
      conjugates.insert(std::move(c));
    }
    by_rep[*conjugates.begin()] = std::move(conjugates);
  }
  std::vector<std::pair<ElemSet, size_t>> classes;
  for (auto& [rep, conjugates] : by_rep) classes.emplace_back(rep, conjugates.size());
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  return classes;
}

}  // namespace locus::test
