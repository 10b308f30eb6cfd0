#include "eq_locus.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "catalog.hpp"
#include "error.hpp"

namespace locus {

namespace {

// Primes for a locus over ctx: divisors of |G| plus any requested extras.
std::vector<uint64_t> locus_primes(const GroupContext& ctx,
                                   const std::vector<uint64_t>& extra) {
  std::set<uint64_t> ps;
  for (uint64_t p : ctx.group.primes()) ps.insert(p);
  for (uint64_t p : extra) {
    bool prime = p >= 2;
    for (uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (!prime) fail(Status::parse_error, "not a prime: " + std::to_string(p));
    ps.insert(p);
  }
  return {ps.begin(), ps.end()};
}

std::vector<uint64_t> order_primes(size_t order) {
  std::vector<uint64_t> out;
  size_t n = order;
  for (uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_cyclic(const PermGroup& g, const ElemSet& s) {
  for (uint32_t x : s)
    if (g.elem_order(x) == s.size()) return true;
  return false;
}

// Group order implied by a catalog-style name, with no size caps; used only
// to interpret selectors.
std::optional<uint64_t> selector_order(const std::string& name) {
  if (name.size() < 2) return std::nullopt;
  auto number = [](const std::string& s) -> std::optional<uint64_t> {
    if (s.empty() || s.size() > 6) return std::nullopt;
    uint64_t v = 0;
    for (char c : s) {
      if (!isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      v = v * 10 + (c - '0');
    }
    return v;
  };
  char kind = name[0];
  std::string rest = name.substr(1);
  if (kind == 'C') {
    size_t x = rest.find('x');
    if (x != std::string::npos) {
      if (x + 2 > rest.size() || rest[x + 1] != 'C') return std::nullopt;
      auto n = number(rest.substr(0, x));
      auto m = number(rest.substr(x + 2));
      if (!n || !m) return std::nullopt;
      return *n * *m;
    }
    return number(rest);
  }
  auto n = number(rest);
  if (!n) return std::nullopt;
  switch (kind) {
    case 'D':
      return (*n >= 4 && *n % 2 == 0) ? std::optional<uint64_t>(*n) : std::nullopt;
    case 'S':
    case 'A': {
      if (*n > 12) return std::nullopt;
      uint64_t fact = 1;
      for (uint64_t i = 2; i <= *n; ++i) fact *= i;
      return kind == 'S' ? fact : std::max<uint64_t>(fact / 2, 1);
    }
    default:
      return std::nullopt;
  }
}

}  // namespace

std::shared_ptr<const GroupContext> GroupContext::make(std::string name, PermGroup g,
                                                       size_t lattice_cap) {
  auto ctx = std::shared_ptr<GroupContext>(
      new GroupContext{std::move(name), std::move(g), {}, {}});
  ctx->classes = subgroup_classes(ctx->group, lattice_cap);

  bool named = false;
  try {
    named = catalog_lookup(ctx->name).has_value();
  } catch (const Error&) {
    named = false;
  }

  std::vector<std::string> base(ctx->classes.size());
  for (size_t i = 0; i < ctx->classes.size(); ++i) {
    const SubgroupClass& cls = ctx->classes[i];
    if (cls.order == 1)
      base[i] = "1";
    else if (cls.order == ctx->group.order())
      base[i] = named ? ctx->name : "G";
    else if (is_cyclic(ctx->group, cls.rep))
      base[i] = "C" + std::to_string(cls.order);
    else
      base[i] = "H" + std::to_string(cls.order);
  }
  // disambiguate repeated names in canonical order
  std::map<std::string, size_t> total, seen;
  for (const std::string& b : base) ++total[b];
  ctx->labels.resize(base.size());
  for (size_t i = 0; i < base.size(); ++i) {
    size_t k = ++seen[base[i]];
    ctx->labels[i] =
        total[base[i]] > 1 ? base[i] + "#" + std::to_string(k) : base[i];
  }
  return ctx;
}

size_t GroupContext::index_of_class(const ElemSet& canonical_rep) const {
  for (size_t i = 0; i < classes.size(); ++i)
    if (classes[i].rep == canonical_rep) return i;
  fail(Status::invalid_argument, "subgroup is not represented by any class");
}

size_t resolve_class_selector(const GroupContext& ctx, const std::string& selector,
                              bool require_normal) {
  if (selector.empty())
    fail(Status::invalid_argument, "empty subgroup selector");

  auto finish = [&](size_t idx) {
    if (require_normal && !ctx.classes[idx].is_normal)
      fail(Status::invalid_argument,
           "class '" + ctx.labels[idx] + "' is not normal in " + ctx.name);
    return idx;
  };

  if (selector == "1") return finish(ctx.trivial_class());
  if (selector == "G") return finish(ctx.full_class());

  // explicit generator list in cycle notation; commas inside parentheses
  // separate points of a cycle, commas outside separate generators
  if (selector[0] == '(') {
    ElemSet seed{0};
    size_t start = 0;
    int depth = 0;
    for (size_t i = 0; i <= selector.size(); ++i) {
      if (i < selector.size() && selector[i] == '(') ++depth;
      if (i < selector.size() && selector[i] == ')') --depth;
      if (i < selector.size() && !(selector[i] == ',' && depth == 0)) continue;
      Permutation p =
          Permutation::from_cycles(ctx.group.degree(), selector.substr(start, i - start));
      seed.push_back(ctx.group.index_of(p));
      start = i + 1;
    }
    std::sort(seed.begin(), seed.end());
    seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
    ElemSet sub = subgroup_closure(ctx.group, seed);
    return finish(ctx.index_of_class(canonical_conjugate(ctx.group, sub)));
  }

  // order, either bare, via a catalog-style name, or with a #index suffix
  uint64_t order = 0;
  long pick = -1;
  std::string body = selector;
  size_t hash = selector.find('#');
  if (hash != std::string::npos) {
    body = selector.substr(0, hash);
    std::string idx = selector.substr(hash + 1);
    if (idx.empty() ||
        idx.find_first_not_of("0123456789") != std::string::npos || idx == "0")
      fail(Status::parse_error, "bad class index in selector: " + selector);
    pick = std::stol(idx);
  }
  if (!body.empty() && body.find_first_not_of("0123456789") == std::string::npos) {
    order = std::stoull(body);
  } else if (auto implied = selector_order(body)) {
    order = *implied;
  } else {
    fail(Status::invalid_argument, "cannot interpret selector: " + selector);
  }

  std::vector<size_t> hits;
  for (size_t i = 0; i < ctx.classes.size(); ++i) {
    if (ctx.classes[i].order != order) continue;
    if (require_normal && !ctx.classes[i].is_normal) continue;
    hits.push_back(i);
  }
  if (hits.empty())
    fail(Status::invalid_argument,
         "no " + std::string(require_normal ? "normal " : "") + "subgroup class of order " +
             std::to_string(order) + " in " + ctx.name);
  if (pick > 0) {
    if (static_cast<size_t>(pick) > hits.size())
      fail(Status::invalid_argument, "class index out of range in selector: " + selector);
    return finish(hits[pick - 1]);
  }
  if (hits.size() > 1)
    fail(Status::ambiguous_selector,
         "selector '" + selector + "' matches " + std::to_string(hits.size()) +
             " classes; use order#index or an explicit generator list");
  return finish(hits[0]);
}

bool EqLocus::is_whole_spectrum() const {
  for (size_t i = 0; i < column.size(); ++i) {
    if (!generic[i] || !height_one[i]) return false;
    for (bool b : column[i])
      if (!b) return false;
  }
  return true;
}

bool EqLocus::is_empty() const {
  for (size_t i = 0; i < column.size(); ++i) {
    if (generic[i] || height_one[i]) return false;
    for (bool b : column[i])
      if (b) return false;
  }
  return true;
}

void EqLocus::check_invariant() const {
  for (size_t i = 0; i < column.size(); ++i) {
    if (!height_one[i]) continue;
    bool all = generic[i];
    for (bool b : column[i]) all = all && b;
    if (!all)
      fail(Status::invalid_argument,
           "height-1 membership without every tower of the class");
  }
}

bool inflation_column_holds(const PermGroup& g, const ElemSet& n, const ElemSet& h,
                            uint64_t p) {
  if (h.size() % p != 0) return true;  // o_p(H) = H and N∩H ⊆ H
  return set_includes(o_p(g, h, p), set_intersect(n, h));
}

bool inflation_height_one_holds(const PermGroup& g, const ElemSet& n,
                                const ElemSet& h) {
  for (uint64_t p : order_primes(h.size()))
    if (!inflation_column_holds(g, n, h, p)) return false;
  return true;
}

bool geomfix_column_holds(const PermGroup& g, const ElemSet& n, const ElemSet& h,
                          uint64_t p) {
  if (h.size() % p != 0) return set_includes(h, n);
  return set_includes(o_p(g, h, p), n);
}

bool geomfix_height_one_holds(const PermGroup& g, const ElemSet& n,
                              const ElemSet& h) {
  if (!set_includes(h, n)) return false;  // condition at all primes not dividing |H|
  for (uint64_t p : order_primes(h.size()))
    if (!geomfix_column_holds(g, n, h, p)) return false;
  return true;
}

namespace {

EqLocus blank(std::shared_ptr<const GroupContext> ctx,
              const std::vector<uint64_t>& extra_primes, bool value) {
  EqLocus z;
  z.primes = locus_primes(*ctx, extra_primes);
  z.column.assign(ctx->classes.size(), std::vector<bool>(z.primes.size(), value));
  z.generic.assign(ctx->classes.size(), value);
  z.height_one.assign(ctx->classes.size(), value);
  z.ctx = std::move(ctx);
  return z;
}

const SubgroupClass& normal_class(const GroupContext& ctx, size_t idx) {
  const SubgroupClass& n = ctx.classes.at(idx);
  if (!n.is_normal)
    fail(Status::invalid_argument,
         "class '" + ctx.labels[idx] + "' is not normal in " + ctx.name);
  return n;
}

}  // namespace

EqLocus empty_locus(std::shared_ptr<const GroupContext> ctx,
                    const std::vector<uint64_t>& extra_primes) {
  EqLocus z = blank(std::move(ctx), extra_primes, false);
  z.op = "empty";
  return z;
}

EqLocus whole_spectrum(std::shared_ptr<const GroupContext> ctx,
                       const std::vector<uint64_t>& extra_primes) {
  EqLocus z = blank(std::move(ctx), extra_primes, true);
  z.op = "whole";
  return z;
}

EqLocus inflation_locus(std::shared_ptr<const GroupContext> ctx, size_t normal_idx,
                        const std::vector<uint64_t>& extra_primes) {
  const GroupContext& c = *ctx;
  const SubgroupClass& n = normal_class(c, normal_idx);
  EqLocus z = blank(ctx, extra_primes, false);
  z.op = "inflation";
  z.subject_key = "normal";
  z.subject = c.labels[normal_idx];
  for (size_t i = 0; i < c.classes.size(); ++i) {
    const ElemSet& h = c.classes[i].rep;
    for (size_t k = 0; k < z.primes.size(); ++k)
      z.column[i][k] = inflation_column_holds(c.group, n.rep, h, z.primes[k]);
    z.generic[i] = true;  // N∩H ⊆ H = o_p(H) whenever p does not divide |H|
    z.height_one[i] = inflation_height_one_holds(c.group, n.rep, h);
  }
  z.check_invariant();
  return z;
}

EqLocus geometric_fixed_locus(std::shared_ptr<const GroupContext> ctx,
                              size_t normal_idx,
                              const std::vector<uint64_t>& extra_primes) {
  const GroupContext& c = *ctx;
  const SubgroupClass& n = normal_class(c, normal_idx);
  EqLocus z = blank(ctx, extra_primes, false);
  z.op = "geometric-fixed";
  z.subject_key = "normal";
  z.subject = c.labels[normal_idx];
  for (size_t i = 0; i < c.classes.size(); ++i) {
    const ElemSet& h = c.classes[i].rep;
    for (size_t k = 0; k < z.primes.size(); ++k)
      z.column[i][k] = geomfix_column_holds(c.group, n.rep, h, z.primes[k]);
    z.generic[i] = set_includes(h, n.rep);
    z.height_one[i] = geomfix_height_one_holds(c.group, n.rep, h);
  }
  z.check_invariant();
  return z;
}

EqLocus orbit_support(std::shared_ptr<const GroupContext> ctx, size_t class_idx,
                      const std::vector<uint64_t>& extra_primes) {
  const GroupContext& c = *ctx;
  const ElemSet& h = c.classes.at(class_idx).rep;
  EqLocus z = blank(ctx, extra_primes, false);
  z.op = "orbit-support";
  z.subject_key = "subgroup";
  z.subject = c.labels[class_idx];
  for (size_t i = 0; i < c.classes.size(); ++i) {
    if (!is_subconjugate(c.group, c.classes[i].rep, h)) continue;
    z.column[i].assign(z.primes.size(), true);
    z.generic[i] = true;
    z.height_one[i] = true;
  }
  z.check_invariant();
  return z;
}

EqLocus n_free_locus(std::shared_ptr<const GroupContext> ctx, size_t normal_idx,
                     const std::vector<uint64_t>& extra_primes) {
  const GroupContext& c = *ctx;
  normal_class(c, normal_idx);
  EqLocus z = empty_locus(ctx, extra_primes);
  for (size_t idx :
       family_from_predicate(c.group, c.classes, normal_idx, FamilyKind::n_free))
    z = locus_union(z, orbit_support(ctx, idx, extra_primes));
  z.op = "n-free";
  z.subject_key = "normal";
  z.subject = c.labels[normal_idx];
  z.check_invariant();
  return z;
}

ChromaticSubset absolute_geometric_fixed_locus(const GroupContext& ctx,
                                               size_t class_idx,
                                               const std::vector<uint64_t>& extra_primes) {
  const ElemSet& h = ctx.classes.at(class_idx).rep;
  ChromaticSubset z;
  bool perfect_everywhere = true;
  for (uint64_t p : locus_primes(ctx, extra_primes)) {
    bool perfect = h.size() % p != 0 || o_p(ctx.group, h, p) == h;
    z.columns[p] = perfect ? Threshold{2} : Threshold{};
    perfect_everywhere = perfect_everywhere && perfect;
  }
  z.rest = 2;  // p-perfection is automatic at primes not dividing |H|
  z.generic = perfect_everywhere;
  z.validate();
  return z;
}

namespace {

void require_same_spectrum(const EqLocus& a, const EqLocus& b) {
  bool same = a.ctx == b.ctx;
  if (!same && a.ctx && b.ctx) {
    same = a.ctx->group.elements() == b.ctx->group.elements() &&
           a.ctx->classes.size() == b.ctx->classes.size();
    for (size_t i = 0; same && i < a.ctx->classes.size(); ++i)
      same = a.ctx->classes[i].rep == b.ctx->classes[i].rep;
  }
  if (!same || a.primes != b.primes)
    fail(Status::invalid_argument, "loci live on different spectra");
}

}  // namespace

EqLocus locus_union(const EqLocus& a, const EqLocus& b) {
  require_same_spectrum(a, b);
  EqLocus z = a;
  z.op = "union";
  for (size_t i = 0; i < z.column.size(); ++i) {
    for (size_t k = 0; k < z.primes.size(); ++k)
      z.column[i][k] = a.column[i][k] || b.column[i][k];
    z.generic[i] = a.generic[i] || b.generic[i];
    z.height_one[i] = a.height_one[i] || b.height_one[i];
  }
  z.check_invariant();
  return z;
}

EqLocus locus_intersect(const EqLocus& a, const EqLocus& b) {
  require_same_spectrum(a, b);
  EqLocus z = a;
  z.op = "intersection";
  for (size_t i = 0; i < z.column.size(); ++i) {
    for (size_t k = 0; k < z.primes.size(); ++k)
      z.column[i][k] = a.column[i][k] && b.column[i][k];
    z.generic[i] = a.generic[i] && b.generic[i];
    z.height_one[i] = a.height_one[i] && b.height_one[i];
  }
  z.check_invariant();
  return z;
}

bool locus_contains(const EqLocus& outer, const EqLocus& inner) {
  require_same_spectrum(outer, inner);
  for (size_t i = 0; i < outer.column.size(); ++i) {
    for (size_t k = 0; k < outer.primes.size(); ++k)
      if (inner.column[i][k] && !outer.column[i][k]) return false;
    if (inner.generic[i] && !outer.generic[i]) return false;
    if (inner.height_one[i] && !outer.height_one[i]) return false;
  }
  return true;
}

bool locus_equal(const EqLocus& a, const EqLocus& b) {
  require_same_spectrum(a, b);
  return a.column == b.column && a.generic == b.generic && a.height_one == b.height_one;
}

}  // namespace locus
