#include "chromatic.hpp"

namespace locus {

namespace {

bool engaged_from_two(const Threshold& t) { return t && *t == 2; }

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

bool ChromaticSubset::is_empty() const {
  if (generic || rest) return false;
  for (const auto& [p, t] : columns)
    if (t) return false;
  return true;
}

bool ChromaticSubset::is_whole_space() const {
  if (!generic || !engaged_from_two(rest)) return false;
  for (const auto& [p, t] : columns)
    if (!engaged_from_two(t)) return false;
  return true;
}

void ChromaticSubset::validate(Status on_error) const {
  auto check_threshold = [&](const Threshold& t) {
    if (t && *t < 2)
      fail(on_error, "chromatic thresholds start at height 2");
  };
  check_threshold(rest);
  for (const auto& [p, t] : columns) {
    if (!is_prime(p)) fail(on_error, "chromatic column keys must be primes");
    check_threshold(t);
  }
  if (generic && !is_whole_space())
    fail(on_error,
         "a subset containing the generic point must be the whole space");
}

ChromaticSubset whole_chromatic_space(const std::vector<uint64_t>& explicit_primes) {
  ChromaticSubset s;
  for (uint64_t p : explicit_primes) s.columns[p] = 2;
  s.rest = 2;
  s.generic = true;
  return s;
}

ChromaticSubset sh_localization_locus(const ChromaticSubset& y) {
  y.validate(Status::not_closed);
  auto require_finite = [](const Threshold& t) {
    if (t && *t == kInfiniteHeight)
      fail(Status::not_closed,
           "inverted subset must be a union of closures of finite-height "
           "points; a lone point at infinite height is not one");
  };
  require_finite(y.rest);
  for (const auto& [p, t] : y.columns) require_finite(t);

  // A column's points all share their closure tail, so either the whole
  // column avoids y or none of it does.
  ChromaticSubset z;
  for (const auto& [p, t] : y.columns)
    z.columns[p] = t ? Threshold{} : Threshold{2};
  z.rest = y.rest ? Threshold{} : Threshold{2};
  z.generic = y.is_empty();
  z.validate();
  return z;
}

ChromaticSubset p_localization_inverted(uint64_t p,
                                        const std::vector<uint64_t>& explicit_primes) {
  ChromaticSubset y;
  y.columns[p] = Threshold{};
  for (uint64_t q : explicit_primes)
    if (q != p) y.columns[q] = 2;
  y.rest = 2;
  y.generic = false;
  return y;
}

}  // namespace locus
