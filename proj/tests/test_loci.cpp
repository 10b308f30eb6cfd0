#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "chromatic.hpp"
#include "eq_locus.hpp"
#include "error.hpp"
#include "oracles.hpp"
#include "perm_group.hpp"

using namespace locus;

namespace {

std::shared_ptr<const GroupContext> context_of(const std::string& name) {
  auto spec = catalog_lookup(name);
  REQUIRE(spec.has_value());
  return GroupContext::make(name, build_group(*spec));
}

// o_p computed away from the library's index tables: raw element orders,
// then the pairwise-product closure from the oracle helpers.
ElemSet naive_o_p(const PermGroup& g, const ElemSet& h, uint64_t p) {
  std::vector<Permutation> gens;
  for (uint32_t x : h) {
    Permutation e = g.elem(x);
    Permutation acc = e;
    uint64_t order = 1;
    while (!acc.is_identity()) {
      acc = acc * e;
      ++order;
    }
    if (order % p != 0) gens.push_back(e);
  }
  ElemSet out;
  for (const Permutation& q : test::naive_closure(g.degree(), gens))
    out.push_back(g.index_of(q));
  std::sort(out.begin(), out.end());
  return out;
}

bool includes_sorted(const ElemSet& big, const ElemSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

ElemSet intersect_sorted(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<size_t> normal_indices(const GroupContext& ctx) {
  std::vector<size_t> out;
  for (size_t i = 0; i < ctx.classes.size(); ++i)
    if (ctx.classes[i].is_normal) out.push_back(i);
  return out;
}

using Row = std::vector<bool>;

void check_locus(const EqLocus& z, const std::vector<Row>& columns,
                 const Row& generic, const Row& height_one) {
  REQUIRE(z.column.size() == columns.size());
  for (size_t i = 0; i < columns.size(); ++i) {
    CAPTURE(i);
    CHECK(z.column[i] == columns[i]);
  }
  CHECK(z.generic == generic);
  CHECK(z.height_one == height_one);
}

}  // namespace

TEST_CASE("group context labels subgroup classes") {
  auto d10 = context_of("D10");
  CHECK(d10->labels == std::vector<std::string>{"1", "C2", "C5", "D10"});
  CHECK(d10->trivial_class() == 0);
  CHECK(d10->full_class() == 3);

  auto a4 = context_of("A4");
  CHECK(a4->labels == std::vector<std::string>{"1", "C2", "C3", "H4", "A4"});

  auto klein = context_of("C2xC2");
  CHECK(klein->labels ==
        std::vector<std::string>{"1", "C2#1", "C2#2", "C2#3", "C2xC2"});

  // a group fed in as generators rather than a catalog name gets "G"
  auto anon = GroupContext::make(
      "degree 5", build_group(parse_group_spec("degree 5\n(1 2 3 4 5)\n(2 5)(3 4)\n")));
  CHECK(anon->labels == std::vector<std::string>{"1", "C2", "C5", "G"});
}

TEST_CASE("selectors resolve to subgroup classes") {
  auto d10 = context_of("D10");
  CHECK(resolve_class_selector(*d10, "1", true) == 0);
  CHECK(resolve_class_selector(*d10, "G", true) == 3);
  CHECK(resolve_class_selector(*d10, "D10", true) == 3);
  CHECK(resolve_class_selector(*d10, "C5", true) == 2);
  CHECK(resolve_class_selector(*d10, "5", true) == 2);
  CHECK(resolve_class_selector(*d10, "2", false) == 1);
  CHECK(resolve_class_selector(*d10, "(1 2 3 4 5)", true) == 2);
  CHECK(resolve_class_selector(*d10, "(2 5)(3 4)", false) == 1);
  CHECK(resolve_class_selector(*d10, "(1,2,3,4,5)", true) == 2);
  CHECK(resolve_class_selector(*d10, "()", true) == 0);

  // C2 is not normal in D10
  CHECK_THROWS_AS(resolve_class_selector(*d10, "2", true), Error);
  try {
    resolve_class_selector(*d10, "(2 5)(3 4)", true);
  } catch (const Error& e) {
    CHECK(e.status() == Status::invalid_argument);
  }
}

TEST_CASE("ambiguous selectors demand an index or generators") {
  auto klein = context_of("C2xC2");
  CHECK_THROWS_AS(resolve_class_selector(*klein, "2", true), Error);
  try {
    resolve_class_selector(*klein, "C2", true);
  } catch (const Error& e) {
    CHECK(e.status() == Status::ambiguous_selector);
  }
  CHECK(resolve_class_selector(*klein, "2#1", true) == 1);
  CHECK(resolve_class_selector(*klein, "2#3", true) == 3);
  CHECK(resolve_class_selector(*klein, "(3 4)", true) == 1);
  CHECK(resolve_class_selector(*klein, "(1 2)", true) == 2);
  CHECK_THROWS_AS(resolve_class_selector(*klein, "2#4", true), Error);
  CHECK_THROWS_AS(resolve_class_selector(*klein, "3", true), Error);
  CHECK_THROWS_AS(resolve_class_selector(*klein, "junk", true), Error);
}

// Reference tables below were worked out by hand from the membership rule:
// a tower (H, p) survives inflation along G -> G/N iff N ∩ H ⊆ o_p(H), and
// survives the N-geometric fixed points functor iff o_p(H) ⊇ N. Classes of
// D10 appear in the order 1, C2, C5, D10 and primes in the order 2, 5.

TEST_CASE("inflation locus of D10 modulo the whole group") {
  auto d10 = context_of("D10");
  EqLocus z = inflation_locus(d10, 3);
  CHECK(z.primes == std::vector<uint64_t>{2, 5});
  check_locus(z,
              {{true, true}, {false, true}, {true, false}, {false, true}},
              {true, true, true, true}, {true, false, false, false});
  CHECK(z.op == "inflation");
  CHECK(z.subject == "D10");
  CHECK_FALSE(z.is_whole_spectrum());
  CHECK_FALSE(z.is_empty());
}

TEST_CASE("inflation locus of D10 modulo the rotation subgroup") {
  auto d10 = context_of("D10");
  EqLocus z = inflation_locus(d10, resolve_class_selector(*d10, "C5", true));
  check_locus(z,
              {{true, true}, {true, true}, {true, false}, {true, true}},
              {true, true, true, true}, {true, true, false, true});
}

TEST_CASE("geometric fixed points locus of D10 at the rotation subgroup") {
  auto d10 = context_of("D10");
  EqLocus z = geometric_fixed_locus(d10, 2);
  check_locus(z,
              {{false, false}, {false, false}, {true, false}, {true, true}},
              {false, false, true, true}, {false, false, false, true});
  CHECK(z.op == "geometric-fixed");
  CHECK(z.subject == "C5");
}

TEST_CASE("geometric fixed points locus of D10 at the whole group") {
  auto d10 = context_of("D10");
  EqLocus z = geometric_fixed_locus(d10, 3);
  check_locus(z,
              {{false, false}, {false, false}, {false, false}, {false, true}},
              {false, false, false, true}, {false, false, false, false});
}

TEST_CASE("trivial normal subgroup gives the whole spectrum both ways") {
  for (const char* name : {"D10", "C12", "A4", "S4"}) {
    CAPTURE(name);
    auto ctx = context_of(name);
    CHECK(inflation_locus(ctx, 0).is_whole_spectrum());
    CHECK(geometric_fixed_locus(ctx, 0).is_whole_spectrum());
    for (size_t idx : normal_indices(*ctx)) {
      if (idx == 0) continue;
      CHECK_FALSE(inflation_locus(ctx, idx).is_whole_spectrum());
      CHECK_FALSE(geometric_fixed_locus(ctx, idx).is_whole_spectrum());
    }
  }
}

TEST_CASE("cyclic prime group matches the classical localization picture") {
  auto c5 = context_of("C5");
  EqLocus z = inflation_locus(c5, 1, {2, 3});
  CHECK(c5->labels == std::vector<std::string>{"1", "C5"});
  CHECK(z.primes == std::vector<uint64_t>{2, 3, 5});
  // only the 5-column of the full class above height one is lost
  check_locus(z, {{true, true, true}, {true, true, false}}, {true, true},
              {true, false});
}

TEST_CASE("loci reject a non-normal class") {
  auto d10 = context_of("D10");
  CHECK_THROWS_AS(inflation_locus(d10, 1), Error);
  CHECK_THROWS_AS(geometric_fixed_locus(d10, 1), Error);
  CHECK_THROWS_AS(n_free_locus(d10, 1), Error);
  try {
    inflation_locus(d10, 1);
  } catch (const Error& e) {
    CHECK(e.status() == Status::invalid_argument);
  }
}

TEST_CASE("orbit supports are downward closed families") {
  auto d10 = context_of("D10");
  EqLocus s1 = orbit_support(d10, 0);
  check_locus(s1, {{true, true}, {false, false}, {false, false}, {false, false}},
              {true, false, false, false}, {true, false, false, false});

  EqLocus s2 = orbit_support(d10, 1);
  check_locus(s2, {{true, true}, {true, true}, {false, false}, {false, false}},
              {true, true, false, false}, {true, true, false, false});

  EqLocus s5 = orbit_support(d10, 2);
  check_locus(s5, {{true, true}, {false, false}, {true, true}, {false, false}},
              {true, false, true, false}, {true, false, true, false});

  CHECK(orbit_support(d10, 3).is_whole_spectrum());
  CHECK(s2.op == "orbit-support");
  CHECK(s2.subject == "C2");
}

TEST_CASE("free locus against the rotation subgroup of D10") {
  auto d10 = context_of("D10");
  EqLocus free = n_free_locus(d10, 2);
  check_locus(free, {{true, true}, {true, true}, {false, false}, {false, false}},
              {true, true, false, false}, {true, true, false, false});
  CHECK(free.op == "n-free");
  CHECK(free.subject == "C5");
  CHECK(locus_equal(free, locus_union(orbit_support(d10, 0), orbit_support(d10, 1))));

  // strictly smaller than the inflation locus of the same normal subgroup
  EqLocus inf = inflation_locus(d10, 2);
  CHECK(locus_contains(inf, free));
  CHECK_FALSE(locus_equal(inf, free));

  CHECK(n_free_locus(d10, 0).is_whole_spectrum());
  EqLocus against_g = n_free_locus(d10, 3);
  check_locus(against_g,
              {{true, true}, {false, false}, {false, false}, {false, false}},
              {true, false, false, false}, {true, false, false, false});
}

TEST_CASE("free loci stay inside inflation loci") {
  for (const char* name : {"C12", "A4", "S4", "D12"}) {
    CAPTURE(name);
    auto ctx = context_of(name);
    for (size_t idx : normal_indices(*ctx))
      CHECK(locus_contains(inflation_locus(ctx, idx), n_free_locus(ctx, idx)));
  }
}

TEST_CASE("larger normal subgroups give smaller loci") {
  for (const char* name : {"D10", "C12", "S4"}) {
    CAPTURE(name);
    auto ctx = context_of(name);
    std::vector<size_t> normals = normal_indices(*ctx);
    for (size_t a : normals) {
      for (size_t b : normals) {
        if (!includes_sorted(ctx->classes[b].rep, ctx->classes[a].rep)) continue;
        CHECK(locus_contains(inflation_locus(ctx, a), inflation_locus(ctx, b)));
        CHECK(locus_contains(geometric_fixed_locus(ctx, a),
                             geometric_fixed_locus(ctx, b)));
        CHECK(locus_contains(n_free_locus(ctx, a), n_free_locus(ctx, b)));
      }
    }
  }
}

TEST_CASE("membership agrees with direct computation on every subgroup") {
  for (const char* name : {"D10", "C12", "A4"}) {
    CAPTURE(name);
    auto ctx = context_of(name);
    const PermGroup& g = ctx->group;
    std::vector<ElemSet> subgroups = test::brute_force_subgroups(g);

    for (size_t n_idx : normal_indices(*ctx)) {
      const ElemSet& n = ctx->classes[n_idx].rep;
      EqLocus inf = inflation_locus(ctx, n_idx);
      EqLocus fix = geometric_fixed_locus(ctx, n_idx);

      for (const ElemSet& k : subgroups) {
        size_t cls = ctx->index_of_class(canonical_conjugate(g, k));
        bool inf_all = true;
        bool fix_all = true;
        for (size_t kp = 0; kp < inf.primes.size(); ++kp) {
          ElemSet op = naive_o_p(g, k, inf.primes[kp]);
          bool inf_here = includes_sorted(op, intersect_sorted(n, k));
          bool fix_here = includes_sorted(op, n);
          CAPTURE(n_idx);
          CAPTURE(kp);
          CHECK(inf.column[cls][kp] == inf_here);
          CHECK(fix.column[cls][kp] == fix_here);
          inf_all = inf_all && inf_here;
          fix_all = fix_all && fix_here;
        }
        CHECK(inf.height_one[cls] == inf_all);
        CHECK(fix.height_one[cls] == fix_all);
        CHECK(inf.generic[cls]);
        CHECK(fix.generic[cls] == includes_sorted(k, n));
      }
    }
  }
}

TEST_CASE("locus set algebra") {
  auto d10 = context_of("D10");
  EqLocus inf = inflation_locus(d10, 2);
  EqLocus fix = geometric_fixed_locus(d10, 2);

  CHECK(locus_contains(inf, inf));
  CHECK(locus_equal(locus_union(inf, empty_locus(d10)), inf));
  CHECK(locus_equal(locus_intersect(inf, whole_spectrum(d10)), inf));
  CHECK(locus_union(inf, whole_spectrum(d10)).is_whole_spectrum());
  CHECK(locus_intersect(inf, empty_locus(d10)).is_empty());

  EqLocus meet = locus_intersect(inf, fix);
  CHECK(locus_contains(inf, meet));
  CHECK(locus_contains(fix, meet));
  EqLocus join = locus_union(inf, fix);
  CHECK(locus_contains(join, inf));
  CHECK(locus_contains(join, fix));
  meet.check_invariant();
  join.check_invariant();

  // loci over different groups or prime lists do not mix
  auto c12 = context_of("C12");
  CHECK_THROWS_AS(locus_union(inf, inflation_locus(c12, 0)), Error);
  CHECK_THROWS_AS(locus_union(inf, inflation_locus(d10, 2, {3})), Error);
}

TEST_CASE("extra primes behave like the generic tag") {
  auto d10 = context_of("D10");
  EqLocus inf = inflation_locus(d10, 2, {3, 7});
  CHECK(inf.primes == std::vector<uint64_t>{2, 3, 5, 7});
  for (size_t i = 0; i < inf.column.size(); ++i) {
    CHECK(inf.column[i][1] == inf.generic[i]);
    CHECK(inf.column[i][3] == inf.generic[i]);
  }
  EqLocus fix = geometric_fixed_locus(d10, 2, {3});
  for (size_t i = 0; i < fix.column.size(); ++i)
    CHECK(fix.column[i][1] == fix.generic[i]);

  CHECK_THROWS_AS(inflation_locus(d10, 2, {4}), Error);
}

TEST_CASE("absolute fixed points land in the chromatic space") {
  auto d10 = context_of("D10");

  ChromaticSubset trivial = absolute_geometric_fixed_locus(*d10, 0);
  CHECK(trivial.is_whole_space());

  ChromaticSubset c2 = absolute_geometric_fixed_locus(*d10, 1);
  CHECK_FALSE(c2.columns.at(2).has_value());
  CHECK(c2.columns.at(5) == Threshold{2});
  CHECK(c2.rest == Threshold{2});
  CHECK_FALSE(c2.generic);

  // D10 is 5-perfect (its only proper normal quotient is C2) but not 2-perfect
  ChromaticSubset d10_full = absolute_geometric_fixed_locus(*d10, 3);
  CHECK_FALSE(d10_full.columns.at(2).has_value());
  CHECK(d10_full.columns.at(5) == Threshold{2});
  CHECK_FALSE(d10_full.generic);

  // a perfect group is p-perfect at every prime
  auto a5 = context_of("A5");
  ChromaticSubset whole = absolute_geometric_fixed_locus(*a5, a5->full_class());
  CHECK(whole.is_whole_space());

  ChromaticSubset with_extra = absolute_geometric_fixed_locus(*d10, 1, {7});
  CHECK(with_extra.columns.at(7) == Threshold{2});
}

TEST_CASE("p perfection in the absolute locus matches naive o_p") {
  for (const char* name : {"D10", "C12", "A4", "S4"}) {
    CAPTURE(name);
    auto ctx = context_of(name);
    for (size_t i = 0; i < ctx->classes.size(); ++i) {
      ChromaticSubset z = absolute_geometric_fixed_locus(*ctx, i);
      bool all = true;
      for (const auto& [p, t] : z.columns) {
        const ElemSet& h = ctx->classes[i].rep;
        bool perfect = naive_o_p(ctx->group, h, p) == h;
        CHECK(t.has_value() == perfect);
        all = all && perfect;
      }
      CHECK(z.generic == all);
      CHECK(z.rest == Threshold{2});
    }
  }
}
