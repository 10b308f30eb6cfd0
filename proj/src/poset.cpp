#include "poset.hpp"

#include <map>
#include <sstream>

#include "error.hpp"

namespace locus {

FinitePoset FinitePoset::parse(const std::string& text) {
  std::vector<std::string> names;
  std::map<std::string, int> index;
  std::vector<std::pair<int, int>> arrows;

  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    if (keyword == "point") {
      std::string name;
      if (!(fields >> name))
        fail(Status::parse_error, "point line without a name");
      if (index.count(name))
        fail(Status::parse_error, "duplicate point: " + name);
      index[name] = static_cast<int>(names.size());
      names.push_back(name);
    } else if (keyword == "spec") {
      std::string a, b;
      if (!(fields >> a >> b))
        fail(Status::parse_error, "spec line needs two point names");
      if (!index.count(a)) fail(Status::parse_error, "unknown point: " + a);
      if (!index.count(b)) fail(Status::parse_error, "unknown point: " + b);
      arrows.emplace_back(index[a], index[b]);
    } else {
      fail(Status::parse_error, "unknown poset directive: " + keyword);
    }
    std::string extra;
    if (fields >> extra)
      fail(Status::parse_error, "trailing text on poset line: " + extra);
  }
  return build(std::move(names), arrows);
}

FinitePoset FinitePoset::build(std::vector<std::string> names,
                               const std::vector<std::pair<int, int>>& arrows) {
  FinitePoset p;
  size_t n = names.size();
  p.names_ = std::move(names);
  p.leq_.assign(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) p.leq_[i][i] = true;
  for (auto [a, b] : arrows) p.leq_[a][b] = true;

  // reflexive-transitive closure
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      if (p.leq_[i][k])
        for (size_t j = 0; j < n; ++j)
          if (p.leq_[k][j]) p.leq_[i][j] = true;

  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (p.leq_[i][j] && p.leq_[j][i])
        fail(Status::parse_error, "specialization cycle through " + p.names_[i] +
                                      " and " + p.names_[j]);
  return p;
}

int FinitePoset::index_of(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  fail(Status::parse_error, "unknown point: " + name);
}

PointSet FinitePoset::closure(const PointSet& s) const {
  PointSet out(size(), false);
  for (size_t x = 0; x < size(); ++x)
    if (s[x])
      for (size_t y = 0; y < size(); ++y)
        if (leq_[x][y]) out[y] = true;
  return out;
}

bool FinitePoset::is_specialization_closed(const PointSet& s) const {
  return closure(s) == s;
}

bool FinitePoset::is_generization_closed(const PointSet& s) const {
  for (size_t x = 0; x < size(); ++x)
    if (s[x])
      for (size_t y = 0; y < size(); ++y)
        if (leq_[y][x] && !s[y]) return false;
  return true;
}

std::vector<int> FinitePoset::components() const {
  std::vector<int> comp(size(), -1);
  int next = 0;
  for (size_t seed = 0; seed < size(); ++seed) {
    if (comp[seed] != -1) continue;
    comp[seed] = next;
    std::vector<size_t> stack{seed};
    while (!stack.empty()) {
      size_t x = stack.back();
      stack.pop_back();
      for (size_t y = 0; y < size(); ++y) {
        if (comp[y] == -1 && (leq_[x][y] || leq_[y][x])) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return comp;
}

std::vector<int> FinitePoset::ranks() const {
  std::vector<int> rank(size(), -1);
  // longest chain of strict specializations into each point; finite because
  // the relation is antisymmetric
  bool progress = true;
  for (size_t x = 0; x < size(); ++x) rank[x] = 0;
  while (progress) {
    progress = false;
    for (size_t x = 0; x < size(); ++x) {
      for (size_t y = 0; y < size(); ++y) {
        if (x != y && leq_[x][y] && rank[y] < rank[x] + 1) {
          rank[y] = rank[x] + 1;
          progress = true;
        }
      }
    }
  }
  return rank;
}

PointSet point_set_of(const FinitePoset& p, const std::vector<std::string>& members) {
  PointSet out(p.size(), false);
  for (const std::string& name : members) out[p.index_of(name)] = true;
  return out;
}

std::vector<std::string> names_of(const FinitePoset& p, const PointSet& s) {
  std::vector<std::string> out;
  for (size_t i = 0; i < p.size(); ++i)
    if (s[i]) out.push_back(p.names()[i]);
  return out;
}

PointSet largest_specialization_closed_inside(const FinitePoset& p, const PointSet& u) {
  PointSet out(p.size(), false);
  for (size_t x = 0; x < p.size(); ++x) {
    bool inside = true;
    for (size_t y = 0; y < p.size() && inside; ++y)
      if (p.specializes(static_cast<int>(x), static_cast<int>(y)) && !u[y])
        inside = false;
    out[x] = inside;
  }
  return out;
}

PointSet finite_localization_locus(const FinitePoset& p, const PointSet& y) {
  if (!p.is_specialization_closed(y))
    fail(Status::not_closed, "inverted subset is not specialization closed");
  PointSet v(p.size());
  for (size_t i = 0; i < p.size(); ++i) v[i] = !y[i];
  return largest_specialization_closed_inside(p, v);
}

bool is_clopen(const FinitePoset& p, const PointSet& y) {
  return p.is_specialization_closed(y) && p.is_generization_closed(y);
}

}  // namespace locus
