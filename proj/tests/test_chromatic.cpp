#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "chromatic.hpp"
#include "error.hpp"
#include "poset.hpp"

using namespace locus;

namespace {

const std::vector<uint64_t> kPrimes{2, 3, 5};
constexpr uint32_t kMaxHeight = 12;

Threshold threshold_at(const ChromaticSubset& s, uint64_t p) {
  auto it = s.columns.find(p);
  return it != s.columns.end() ? it->second : s.rest;
}

// The chromatic space cut off at a finite height, as a specialization poset:
// one shared generic point and one chain per prime. For subsets whose
// thresholds stay at or below the cutoff, localization there agrees with the
// full space column for column.
FinitePoset truncated_space() {
  std::vector<std::string> names{"g"};
  std::vector<std::pair<int, int>> arrows;
  for (uint64_t p : kPrimes) {
    for (uint32_t n = 2; n <= kMaxHeight; ++n) {
      names.push_back("p" + std::to_string(p) + "h" + std::to_string(n));
      int idx = static_cast<int>(names.size()) - 1;
      arrows.push_back({n == 2 ? 0 : idx - 1, idx});
    }
  }
  return FinitePoset::build(std::move(names), arrows);
}

PointSet embed(const FinitePoset& poset, const ChromaticSubset& s) {
  PointSet out(poset.size());
  out[0] = s.generic;
  size_t idx = 1;
  for (uint64_t p : kPrimes) {
    Threshold t = threshold_at(s, p);
    for (uint32_t n = 2; n <= kMaxHeight; ++n, ++idx)
      out[idx] = t.has_value() && n >= *t;
  }
  return out;
}

ChromaticSubset random_thomason(std::mt19937_64& rng) {
  ChromaticSubset y;
  for (uint64_t p : kPrimes)
    y.columns[p] = rng() % 2 ? Threshold{} : Threshold{2 + uint32_t(rng() % (kMaxHeight - 1))};
  y.rest = Threshold{};
  y.generic = false;
  y.validate();
  return y;
}

}  // namespace

TEST_CASE("whole space and empty subset classify correctly") {
  ChromaticSubset whole = whole_chromatic_space(kPrimes);
  CHECK(whole.is_whole_space());
  CHECK_FALSE(whole.is_empty());
  CHECK(whole.generic);
  whole.validate();

  ChromaticSubset empty;
  empty.columns = {{2, Threshold{}}, {3, Threshold{}}, {5, Threshold{}}};
  CHECK(empty.is_empty());
  CHECK_FALSE(empty.is_whole_space());
  empty.validate();
}

TEST_CASE("validate rejects malformed subsets") {
  ChromaticSubset bad_threshold;
  bad_threshold.columns[2] = 1;
  CHECK_THROWS_AS(bad_threshold.validate(), Error);

  ChromaticSubset bad_prime;
  bad_prime.columns[4] = 2;
  CHECK_THROWS_AS(bad_prime.validate(), Error);

  ChromaticSubset stray_generic;
  stray_generic.columns[2] = Threshold{};
  stray_generic.generic = true;
  CHECK_THROWS_AS(stray_generic.validate(), Error);

  try {
    bad_threshold.validate(Status::not_closed);
  } catch (const Error& e) {
    CHECK(e.status() == Status::not_closed);
  }
}

TEST_CASE("localizing at p keeps exactly the p column above height one") {
  for (uint64_t p : kPrimes) {
    ChromaticSubset y = p_localization_inverted(p, kPrimes);
    ChromaticSubset z = sh_localization_locus(y);
    for (uint64_t q : kPrimes) {
      Threshold t = threshold_at(z, q);
      if (q == p) {
        REQUIRE(t.has_value());
        CHECK(*t == 2);
      } else {
        CHECK_FALSE(t.has_value());
      }
    }
    CHECK_FALSE(z.rest.has_value());
    CHECK_FALSE(z.generic);
    CHECK_FALSE(z.is_empty());
    CHECK_FALSE(z.is_whole_space());
  }
}

TEST_CASE("inverting nothing keeps the whole space") {
  ChromaticSubset y;
  y.columns = {{2, Threshold{}}, {3, Threshold{}}, {5, Threshold{}}};
  ChromaticSubset z = sh_localization_locus(y);
  CHECK(z.is_whole_space());
  CHECK(z.generic);
}

TEST_CASE("inverting everything leaves nothing") {
  ChromaticSubset z = sh_localization_locus(whole_chromatic_space(kPrimes));
  CHECK(z.is_empty());
}

TEST_CASE("inverting one closure knocks out only that column") {
  ChromaticSubset y;
  y.columns = {{2, Threshold{4}}, {3, Threshold{}}, {5, Threshold{}}};
  ChromaticSubset z = sh_localization_locus(y);
  CHECK_FALSE(threshold_at(z, 2).has_value());
  CHECK(threshold_at(z, 3) == Threshold{2});
  CHECK(threshold_at(z, 5) == Threshold{2});
  CHECK(z.rest == Threshold{2});
  CHECK_FALSE(z.generic);
}

TEST_CASE("subsets that are not unions of finite closures are rejected") {
  ChromaticSubset point_at_infinity;
  point_at_infinity.columns[2] = Threshold{kInfiniteHeight};
  point_at_infinity.validate();
  CHECK_THROWS_AS(sh_localization_locus(point_at_infinity), Error);
  try {
    sh_localization_locus(point_at_infinity);
  } catch (const Error& e) {
    CHECK(e.status() == Status::not_closed);
  }

  ChromaticSubset bad;
  bad.columns[2] = Threshold{1};
  CHECK_THROWS_AS(sh_localization_locus(bad), Error);
  try {
    sh_localization_locus(bad);
  } catch (const Error& e) {
    CHECK(e.status() == Status::not_closed);
  }
}

TEST_CASE("localization agrees with the truncated specialization poset") {
  FinitePoset poset = truncated_space();
  std::mt19937_64 rng(555111);
  for (int trial = 0; trial < 100; ++trial) {
    ChromaticSubset y = random_thomason(rng);
    PointSet y_points = embed(poset, y);
    REQUIRE(poset.is_specialization_closed(y_points));

    ChromaticSubset z = sh_localization_locus(y);
    PointSet expected = finite_localization_locus(poset, y_points);

    CAPTURE(trial);
    CHECK(embed(poset, z) == expected);
    CHECK(is_clopen(poset, y_points) == (y.is_empty() || y.is_whole_space()));
  }
}

TEST_CASE("a column engaged only through rest still blocks the generic point") {
  ChromaticSubset y;
  y.columns = {{2, Threshold{}}, {3, Threshold{}}, {5, Threshold{}}};
  y.rest = Threshold{3};
  y.validate();
  ChromaticSubset z = sh_localization_locus(y);
  CHECK_FALSE(z.generic);
  CHECK_FALSE(z.rest.has_value());
  CHECK(threshold_at(z, 2) == Threshold{2});
}
