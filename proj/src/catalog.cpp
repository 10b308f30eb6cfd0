#include "catalog.hpp"

#include <cctype>
#include <sstream>

#include "error.hpp"

namespace locus {

namespace {

std::optional<uint64_t> parse_number(const std::string& s) {
  if (s.empty() || s.size() > 6) return std::nullopt;
  uint64_t value = 0;
  for (char c : s) {
    if (!isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return value;
}

Permutation cycle_on_range(uint32_t degree, uint32_t lo, uint32_t len) {
  std::vector<uint32_t> images(degree);
  for (uint32_t i = 0; i < degree; ++i) images[i] = i;
  for (uint32_t i = 0; i < len; ++i) images[lo + i] = lo + (i + 1) % len;
  return Permutation(std::move(images));
}

GroupSpec cyclic_spec(const std::string& name, uint32_t n) {
  GroupSpec spec{name, n, {}};
  if (n > 1) spec.gens.push_back(cycle_on_range(n, 0, n));
  if (n == 1) spec.degree = 1;
  return spec;
}

GroupSpec dihedral_spec(const std::string& name, uint32_t n) {
  // Dihedral group of order 2n acting on n points; the action on a digon is
  // not faithful, so D4 gets the regular Klein-four action instead.
  if (n == 2) {
    GroupSpec spec{name, 4, {}};
    spec.gens.push_back(Permutation::from_cycles(4, "(1 2)"));
    spec.gens.push_back(Permutation::from_cycles(4, "(3 4)"));
    return spec;
  }
  GroupSpec spec{name, n, {}};
  spec.gens.push_back(cycle_on_range(n, 0, n));
  std::vector<uint32_t> mirror(n);
  for (uint32_t i = 0; i < n; ++i) mirror[i] = (n - i) % n;
  spec.gens.push_back(Permutation(std::move(mirror)));
  return spec;
}

GroupSpec symmetric_spec(const std::string& name, uint32_t n) {
  GroupSpec spec{name, n, {}};
  if (n >= 2) {
    std::vector<uint32_t> swap01(n);
    for (uint32_t i = 0; i < n; ++i) swap01[i] = i;
    swap01[0] = 1;
    swap01[1] = 0;
    spec.gens.push_back(Permutation(std::move(swap01)));
  }
  if (n >= 3) spec.gens.push_back(cycle_on_range(n, 0, n));
  if (n == 0) spec.degree = 1;
  return spec;
}

GroupSpec alternating_spec(const std::string& name, uint32_t n) {
  GroupSpec spec{name, n < 3 ? 3 : n, {}};
  if (n >= 3) {
    spec.gens.push_back(Permutation::from_cycles(spec.degree, "(1 2 3)"));
    if (n >= 4) {
      // An n-cycle for odd n, an (n-1)-cycle on 2..n for even n; both even.
      if (n % 2 == 1)
        spec.gens.push_back(cycle_on_range(n, 0, n));
      else
        spec.gens.push_back(cycle_on_range(n, 1, n - 1));
    }
  }
  return spec;
}

GroupSpec product_spec(const std::string& name, uint32_t n, uint32_t m) {
  GroupSpec spec{name, n + m, {}};
  if (n > 1) spec.gens.push_back(cycle_on_range(n + m, 0, n));
  if (m > 1) spec.gens.push_back(cycle_on_range(n + m, n, m));
  if (spec.degree == 0) spec.degree = 1;
  return spec;
}

}  // namespace

std::optional<GroupSpec> catalog_lookup(const std::string& name) {
  if (name.size() < 2) return std::nullopt;
  char kind = name[0];
  std::string rest = name.substr(1);

  if (kind == 'C') {
    size_t x = rest.find('x');
    if (x != std::string::npos) {
      // C<n>xC<m>
      if (x + 2 > rest.size() || rest[x + 1] != 'C') return std::nullopt;
      auto n = parse_number(rest.substr(0, x));
      auto m = parse_number(rest.substr(x + 2));
      if (!n || !m || *n < 1 || *m < 1) return std::nullopt;
      if (*n * *m > 64)
        fail(Status::cap_exceeded, "catalog product groups stop at order 64");
      return product_spec(name, static_cast<uint32_t>(*n), static_cast<uint32_t>(*m));
    }
    auto n = parse_number(rest);
    if (!n || *n < 1) return std::nullopt;
    if (*n > 64) fail(Status::cap_exceeded, "catalog cyclic groups stop at C64");
    return cyclic_spec(name, static_cast<uint32_t>(*n));
  }

  auto n = parse_number(rest);
  if (!n) return std::nullopt;

  switch (kind) {
    case 'D':
      if (*n < 4 || *n % 2 != 0) return std::nullopt;
      if (*n > 64) fail(Status::cap_exceeded, "catalog dihedral groups stop at D64");
      return dihedral_spec(name, static_cast<uint32_t>(*n / 2));
    case 'S':
      if (*n < 1) return std::nullopt;
      if (*n > 5) fail(Status::cap_exceeded, "catalog symmetric groups stop at S5");
      return symmetric_spec(name, static_cast<uint32_t>(*n));
    case 'A':
      if (*n < 1) return std::nullopt;
      if (*n > 5) fail(Status::cap_exceeded, "catalog alternating groups stop at A5");
      return alternating_spec(name, static_cast<uint32_t>(*n));
    default:
      return std::nullopt;
  }
}

GroupSpec parse_group_spec(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  GroupSpec spec;
  bool have_header = false;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    size_t end = line.find_last_not_of(" \t\r");
    line = line.substr(begin, end - begin + 1);

    if (!have_header) {
      std::istringstream header(line);
      std::string keyword;
      uint64_t degree = 0;
      if (!(header >> keyword >> degree) || keyword != "degree" || degree < 1)
        fail(Status::parse_error,
             "group spec must start with a 'degree N' line, got: " + line);
      std::string extra;
      if (header >> extra)
        fail(Status::parse_error, "trailing text after degree header: " + line);
      spec.degree = static_cast<uint32_t>(degree);
      spec.name = "degree " + std::to_string(degree);
      have_header = true;
      continue;
    }
    spec.gens.push_back(Permutation::from_cycles(spec.degree, line));
  }
  if (!have_header)
    fail(Status::parse_error, "empty group spec");
  return spec;
}

GroupSpec resolve_group_input(const std::string& input) {
  if (auto spec = catalog_lookup(input)) return *spec;
  if (input.find('\n') != std::string::npos ||
      input.rfind("degree", 0) == 0)
    return parse_group_spec(input);
  fail(Status::parse_error, "unknown group: " + input);
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (uint32_t n = 1; n <= 64; ++n) names.push_back("C" + std::to_string(n));
  for (uint32_t order = 4; order <= 64; order += 2)
    names.push_back("D" + std::to_string(order));
  for (uint32_t n = 2; n <= 5; ++n) names.push_back("S" + std::to_string(n));
  for (uint32_t n = 3; n <= 5; ++n) names.push_back("A" + std::to_string(n));
  for (uint32_t n = 2; n <= 32; ++n)
    for (uint32_t m = n; n * m <= 64; ++m)
      names.push_back("C" + std::to_string(n) + "xC" + std::to_string(m));
  return names;
}

PermGroup build_group(const GroupSpec& spec, size_t order_cap) {
  return PermGroup::generate(spec.degree, spec.gens, order_cap);
}

}  // namespace locus
