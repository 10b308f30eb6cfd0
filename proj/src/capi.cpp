#include "locus.h"

#include <cstdlib>
#include <cstring>
#include <set>
#include <string>

#include "catalog.hpp"
#include "chromatic.hpp"
#include "eq_locus.hpp"
#include "error.hpp"
#include "json_io.hpp"
#include "perm_group.hpp"
#include "poset.hpp"
#include "render.hpp"
#include "verify.hpp"

using namespace locus;

struct locus_group {
  std::shared_ptr<const GroupContext> ctx;
};

struct locus_eq_locus {
  EqLocus z;
};

struct locus_poset {
  FinitePoset p;
};

namespace {

thread_local std::string g_last_error;

locus_status to_status(Status s) { return static_cast<locus_status>(s); }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// runs fn, routing any failure into the status code and thread error slot
template <typename Fn>
locus_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return LOCUS_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.status());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LOCUS_INVALID_ARGUMENT;
  }
}

std::string require(const char* value, const char* what) {
  if (value == nullptr)
    fail(Status::invalid_argument, std::string(what) + " must not be null");
  return value;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<uint64_t> parse_primes_csv(const char* csv) {
  std::vector<uint64_t> out;
  if (csv == nullptr) return out;
  std::string text = csv;
  size_t start = 0;
  while (start < text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    if (!item.empty()) {
      if (item.find_first_not_of("0123456789") != std::string::npos)
        fail(Status::parse_error, "not a prime: \"" + item + "\"");
      out.push_back(std::stoull(item));
    }
    start = comma + 1;
  }
  return out;
}

EqLocus compute_eq(std::shared_ptr<const GroupContext> ctx, const std::string& op,
                   const std::string& selector,
                   const std::vector<uint64_t>& primes) {
  if (op == "inflation")
    return inflation_locus(ctx, resolve_class_selector(*ctx, selector, true), primes);
  if (op == "geomfix")
    return geometric_fixed_locus(ctx, resolve_class_selector(*ctx, selector, true),
                                 primes);
  if (op == "support")
    return orbit_support(ctx, resolve_class_selector(*ctx, selector, false), primes);
  if (op == "nfree")
    return n_free_locus(ctx, resolve_class_selector(*ctx, selector, true), primes);
  fail(Status::invalid_argument,
       "unknown operation \"" + op + "\" (inflation, geomfix, support, nfree)");
}

}  // namespace

extern "C" {

const char* locus_last_error(void) { return g_last_error.c_str(); }

void locus_string_free(char* s) { std::free(s); }

locus_status locus_group_open(const char* input, size_t max_order,
                              locus_group** out) {
  return guarded([&] {
    std::string text = require(input, "group input");
    if (out == nullptr) fail(Status::invalid_argument, "output slot must not be null");
    GroupSpec spec = resolve_group_input(text);
    size_t order_cap = max_order == 0 ? kDefaultOrderCap : max_order;
    size_t lattice_cap = max_order == 0 ? kDefaultLatticeCap : max_order;
    PermGroup g = build_group(spec, order_cap);
    *out = new locus_group{GroupContext::make(spec.name, std::move(g), lattice_cap)};
  });
}

void locus_group_close(locus_group* g) { delete g; }

size_t locus_group_order(const locus_group* g) {
  return g == nullptr ? 0 : g->ctx->group.order();
}

size_t locus_group_class_count(const locus_group* g) {
  return g == nullptr ? 0 : g->ctx->classes.size();
}

locus_status locus_group_summary(const locus_group* g, char** out) {
  return guarded([&] {
    if (g == nullptr || out == nullptr)
      fail(Status::invalid_argument, "null argument");
    std::string line = g->ctx->name + ": |G|=" + std::to_string(g->ctx->group.order()) +
                       ", " + std::to_string(g->ctx->classes.size()) +
                       " subgroup classes, primes";
    std::vector<uint64_t> primes = g->ctx->group.primes();
    if (primes.empty()) line += " none";
    for (uint64_t p : primes) line += " " + std::to_string(p);
    *out = dup_string(line);
  });
}

locus_status locus_eq_compute(const locus_group* g, const char* op,
                              const char* selector, const char* primes_csv,
                              locus_eq_locus** out) {
  return guarded([&] {
    if (g == nullptr || out == nullptr)
      fail(Status::invalid_argument, "null argument");
    EqLocus z = compute_eq(g->ctx, require(op, "operation"),
                           require(selector, "selector"), parse_primes_csv(primes_csv));
    *out = new locus_eq_locus{std::move(z)};
  });
}

void locus_eq_free(locus_eq_locus* z) { delete z; }

locus_status locus_eq_to_json(const locus_eq_locus* z, char** out) {
  return guarded([&] {
    if (z == nullptr || out == nullptr)
      fail(Status::invalid_argument, "null argument");
    *out = dup_string(locus_to_json(doc_of(z->z)));
  });
}

locus_status locus_eq_render(const locus_eq_locus* z, const char* format,
                             char** out) {
  return guarded([&] {
    if (z == nullptr || out == nullptr)
      fail(Status::invalid_argument, "null argument");
    *out = dup_string(
        render_eq_figure(doc_of(z->z), parse_format(require(format, "format"))));
  });
}

int locus_eq_is_whole(const locus_eq_locus* z) {
  return z != nullptr && z->z.is_whole_spectrum() ? 1 : 0;
}

int locus_eq_is_empty(const locus_eq_locus* z) {
  return z != nullptr && z->z.is_empty() ? 1 : 0;
}

locus_status locus_absfix_json(const locus_group* g, const char* selector,
                               const char* primes_csv, char** out) {
  return guarded([&] {
    if (g == nullptr || out == nullptr)
      fail(Status::invalid_argument, "null argument");
    size_t idx = resolve_class_selector(*g->ctx, require(selector, "selector"), false);
    ChromaticSubset z =
        absolute_geometric_fixed_locus(*g->ctx, idx, parse_primes_csv(primes_csv));
    *out = dup_string(chromatic_to_json(z));
  });
}

locus_status locus_render_json(const char* locus_json, const char* format,
                               char** out) {
  return guarded([&] {
    if (out == nullptr) fail(Status::invalid_argument, "null argument");
    LocusDoc doc = locus_doc_from_json(require(locus_json, "locus JSON"));
    *out = dup_string(render_eq_figure(doc, parse_format(require(format, "format"))));
  });
}

locus_status locus_chromatic_render(const char* chromatic_json, const char* title,
                                    const char* format, char** out) {
  return guarded([&] {
    if (out == nullptr) fail(Status::invalid_argument, "null argument");
    ChromaticSubset s = chromatic_from_json(require(chromatic_json, "chromatic JSON"));
    LocusDoc doc = chromatic_figure_doc(s, title == nullptr ? "chromatic subset" : title);
    *out = dup_string(render_eq_figure(doc, parse_format(require(format, "format"))));
  });
}

locus_status locus_poset_open(const char* text, locus_poset** out) {
  return guarded([&] {
    if (out == nullptr) fail(Status::invalid_argument, "null argument");
    *out = new locus_poset{FinitePoset::parse(require(text, "poset text"))};
  });
}

void locus_poset_close(locus_poset* p) { delete p; }

size_t locus_poset_size(const locus_poset* p) {
  return p == nullptr ? 0 : p->p.size();
}

locus_status locus_poset_localize(const locus_poset* p, const char* y_json,
                                  char** out) {
  return guarded([&] {
    if (p == nullptr || out == nullptr)
      fail(Status::invalid_argument, "null argument");
    PointSet y = poset_subset_from_json(p->p, require(y_json, "subset JSON"));
    *out = dup_string(poset_subset_to_json(p->p, finite_localization_locus(p->p, y)));
  });
}

locus_status locus_poset_complement(const locus_poset* p, const char* y_json,
                                    char** out) {
  return guarded([&] {
    if (p == nullptr || out == nullptr)
      fail(Status::invalid_argument, "null argument");
    PointSet y = poset_subset_from_json(p->p, require(y_json, "subset JSON"));
    PointSet v(y.size());
    for (size_t i = 0; i < y.size(); ++i) v[i] = !y[i];
    *out = dup_string(poset_subset_to_json(p->p, v));
  });
}

int locus_poset_is_clopen(const locus_poset* p, const char* y_json) {
  int result = 0;
  locus_status status = guarded([&] {
    if (p == nullptr) fail(Status::invalid_argument, "null argument");
    PointSet y = poset_subset_from_json(p->p, require(y_json, "subset JSON"));
    result = is_clopen(p->p, y) ? 1 : 0;
  });
  return status == LOCUS_OK ? result : -static_cast<int>(status);
}

locus_status locus_poset_render(const locus_poset* p, const char* first_json,
                                const char* first_label, const char* second_json,
                                const char* second_label, const char* format,
                                char** out) {
  return guarded([&] {
    if (p == nullptr || out == nullptr)
      fail(Status::invalid_argument, "null argument");
    std::vector<PosetOverlay> overlays;
    if (first_json != nullptr)
      overlays.push_back({first_label == nullptr ? "" : first_label,
                          poset_subset_from_json(p->p, first_json)});
    if (second_json != nullptr) {
      if (first_json == nullptr)
        fail(Status::invalid_argument, "second overlay without a first");
      overlays.push_back({second_label == nullptr ? "" : second_label,
                          poset_subset_from_json(p->p, second_json)});
    }
    *out = dup_string(
        render_poset_figure(p->p, overlays, parse_format(require(format, "format"))));
  });
}

locus_status locus_sh_localize(const char* y_json, const char* primes_csv,
                               char** out) {
  return guarded([&] {
    if (out == nullptr) fail(Status::invalid_argument, "null argument");
    ChromaticSubset y = chromatic_from_json(require(y_json, "chromatic JSON"));
    for (uint64_t p : parse_primes_csv(primes_csv))
      if (y.columns.find(p) == y.columns.end()) y.columns[p] = y.rest;
    y.validate(Status::parse_error);
    *out = dup_string(chromatic_to_json(sh_localization_locus(y)));
  });
}

locus_status locus_sh_invert_at(unsigned long long p, const char* primes_csv,
                                char** out) {
  return guarded([&] {
    if (out == nullptr) fail(Status::invalid_argument, "null argument");
    if (!is_prime(p))
      fail(Status::parse_error, "not a prime: " + std::to_string(p));
    std::set<uint64_t> explicit_primes{2, 3, 5, p};
    for (uint64_t q : parse_primes_csv(primes_csv)) explicit_primes.insert(q);
    ChromaticSubset y = p_localization_inverted(
        p, {explicit_primes.begin(), explicit_primes.end()});
    *out = dup_string(chromatic_to_json(sh_localization_locus(y)));
  });
}

locus_status locus_verify(size_t max_order, int inject_failure, char** table_out) {
  VerifyReport report;
  locus_status status = guarded([&] {
    VerifyOptions opts;
    if (max_order > 0) opts.max_order = max_order;
    opts.inject_failure = inject_failure != 0;
    report = run_verification(opts);
    if (table_out != nullptr) *table_out = dup_string(report.table());
  });
  if (status != LOCUS_OK) return status;
  if (!report.all_passed()) {
    g_last_error = "verification found mismatches";
    return LOCUS_VERIFY_FAILED;
  }
  return LOCUS_OK;
}

}  // extern "C"
