#include "verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>

#include "catalog.hpp"
#include "eq_locus.hpp"
#include "error.hpp"
#include "perm_group.hpp"
#include "poset.hpp"

namespace locus {

namespace {

struct CatalogEntry {
  std::string name;
  std::shared_ptr<const GroupContext> ctx;
  std::vector<ElemSet> subgroups;
};

std::vector<CatalogEntry> build_catalog(size_t max_order) {
  std::vector<CatalogEntry> out;
  for (const std::string& name : catalog_names()) {
    PermGroup g = build_group(*catalog_lookup(name));
    if (g.order() > max_order) continue;
    CatalogEntry entry;
    entry.name = name;
    entry.ctx = GroupContext::make(name, g);
    entry.subgroups = all_subgroups(entry.ctx->group, entry.ctx->classes);
    out.push_back(std::move(entry));
  }
  return out;
}

bool is_power_of(size_t n, uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

// o_p(h) recomputed as the intersection of every subgroup of h that is
// normal in h with index a power of p; the library route generates from
// p'-order elements instead.
ElemSet intersection_route_o_p(const PermGroup& g, const std::vector<ElemSet>& subgroups,
                               const ElemSet& h, uint64_t p) {
  ElemSet meet = h;
  for (const ElemSet& k : subgroups) {
    if (!set_includes(h, k)) continue;
    if (!is_power_of(h.size() / k.size(), p)) continue;
    if (!is_normal_in(g, k, h)) continue;
    meet = set_intersect(meet, k);
  }
  return meet;
}

// every subgroup reachable from g by a descending chain of normal steps of
// index exactly p; the library route instead tests containment of o_p(G)
std::set<ElemSet> chain_route_subnormal(const PermGroup& g,
                                        const std::vector<ElemSet>& subgroups,
                                        uint64_t p) {
  std::set<ElemSet> reached{g.full_set()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const ElemSet& h : std::vector<ElemSet>(reached.begin(), reached.end())) {
      for (const ElemSet& k : subgroups) {
        if (h.size() != k.size() * p) continue;
        if (!set_includes(h, k)) continue;
        if (!is_normal_in(g, k, h)) continue;
        if (reached.insert(k).second) grew = true;
      }
    }
  }
  return reached;
}

FinitePoset random_poset(std::mt19937_64& rng, int max_points) {
  int n = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_points));
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  std::vector<std::pair<int, int>> arrows;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng() % 3 == 0) arrows.push_back({a, b});
  return FinitePoset::build(std::move(names), arrows);
}

std::vector<PointSet> closed_subsets(const FinitePoset& p) {
  std::vector<PointSet> out;
  for (uint32_t mask = 0; mask < (1u << p.size()); ++mask) {
    PointSet s(p.size());
    for (size_t i = 0; i < p.size(); ++i) s[i] = (mask >> i) & 1;
    if (p.is_specialization_closed(s)) out.push_back(s);
  }
  return out;
}

struct Tally {
  VerifyLine* line;
  bool corrupt_next;

  void operator()(bool same) {
    ++line->checks;
    if (corrupt_next) {
      same = !same;
      corrupt_next = false;
    }
    if (!same) ++line->mismatches;
  }
};

}  // namespace

bool VerifyReport::all_passed() const {
  for (const VerifyLine& line : lines)
    if (line.mismatches > 0) return false;
  return true;
}

std::string VerifyReport::table() const {
  std::string out;
  for (const VerifyLine& line : lines) {
    out += line.mismatches == 0 ? "  ok  " : "FAIL  ";
    out += line.name;
    out += "  (" + std::to_string(line.checks) + " checks";
    if (line.mismatches > 0)
      out += ", " + std::to_string(line.mismatches) + " mismatches";
    out += ")\n";
  }
  return out;
}

VerifyReport run_verification(const VerifyOptions& opts) {
  VerifyReport report;
  report.lines.resize(6);
  report.lines[0].name = "o_p equals the meet of p-power-index normal subgroups";
  report.lines[1].name = "p-subnormality containment test equals chain search";
  report.lines[2].name = "finite localization equals closed-subset enumeration";
  report.lines[3].name = "clopen inverted set, full complement locus: equivalent";
  report.lines[4].name = "whole-spectrum inflation locus only for trivial N";
  report.lines[5].name = "free locus contained in inflation locus, strict on D10";

  std::vector<CatalogEntry> catalog = build_catalog(opts.max_order);

  Tally o_p_tally{&report.lines[0], opts.inject_failure};
  Tally chain_tally{&report.lines[1], false};
  for (const CatalogEntry& entry : catalog) {
    const PermGroup& g = entry.ctx->group;
    for (uint64_t p : g.primes()) {
      for (const SubgroupClass& cls : entry.ctx->classes)
        o_p_tally(o_p(g, cls.rep, p) ==
                  intersection_route_o_p(g, entry.subgroups, cls.rep, p));
      std::set<ElemSet> reachable = chain_route_subnormal(g, entry.subgroups, p);
      for (const ElemSet& k : entry.subgroups)
        chain_tally(is_p_subnormal(g, k, p) == (reachable.count(k) > 0));
    }
  }

  Tally locus_tally{&report.lines[2], false};
  Tally clopen_tally{&report.lines[3], false};
  std::mt19937_64 rng(opts.seed);
  for (int trial = 0; trial < opts.poset_count; ++trial) {
    FinitePoset poset = random_poset(rng, opts.max_poset_points);
    std::vector<PointSet> all_closed = closed_subsets(poset);
    std::vector<int> comp = poset.components();

    std::vector<size_t> picks;
    if (all_closed.size() <= static_cast<size_t>(opts.max_y_samples)) {
      for (size_t i = 0; i < all_closed.size(); ++i) picks.push_back(i);
    } else {
      for (int i = 0; i < opts.max_y_samples; ++i)
        picks.push_back(rng() % all_closed.size());
    }

    for (size_t pick : picks) {
      const PointSet& y = all_closed[pick];
      PointSet v(poset.size());
      for (size_t i = 0; i < poset.size(); ++i) v[i] = !y[i];

      PointSet z = finite_localization_locus(poset, y);
      PointSet best(poset.size());
      for (const PointSet& s : all_closed) {
        bool inside = true;
        for (size_t i = 0; i < poset.size(); ++i)
          if (s[i] && !v[i]) inside = false;
        if (!inside) continue;
        for (size_t i = 0; i < poset.size(); ++i)
          if (s[i]) best[i] = true;
      }
      locus_tally(z == best);

      bool union_of_components = true;
      for (size_t i = 0; i < poset.size(); ++i)
        for (size_t j = 0; j < poset.size(); ++j)
          if (comp[i] == comp[j] && y[i] != y[j]) union_of_components = false;
      bool duality = is_clopen(poset, y);
      clopen_tally(duality == (z == v) && duality == union_of_components);
    }
  }

  Tally whole_tally{&report.lines[4], false};
  Tally free_tally{&report.lines[5], false};
  for (const CatalogEntry& entry : catalog) {
    for (size_t idx = 0; idx < entry.ctx->classes.size(); ++idx) {
      if (!entry.ctx->classes[idx].is_normal) continue;
      EqLocus inf = inflation_locus(entry.ctx, idx);
      whole_tally(inf.is_whole_spectrum() == (entry.ctx->classes[idx].order == 1));

      EqLocus free = n_free_locus(entry.ctx, idx);
      bool expected_strict =
          entry.name == "D10" && (entry.ctx->labels[idx] == "C5" ||
                                  entry.ctx->labels[idx] == "D10");
      bool strict = locus_contains(inf, free) && !locus_equal(inf, free);
      free_tally(locus_contains(inf, free) && (!expected_strict || strict));
    }
  }

  // the D10 free locus against C5 is exactly the classes 1 and C2
  for (const CatalogEntry& entry : catalog) {
    if (entry.name != "D10") continue;
    EqLocus free = n_free_locus(entry.ctx, 2);
    EqLocus expected =
        locus_union(orbit_support(entry.ctx, 0), orbit_support(entry.ctx, 1));
    free_tally(locus_equal(free, expected));
  }

  return report;
}

}  // namespace locus
