#pragma once

#include <string>
#include <utility>
#include <vector>

namespace locus {

using PointSet = std::vector<bool>;

// Finite spectral space presented as its specialization poset. The stored
// relation is the reflexive-transitive closure of the input arrows.
class FinitePoset {
public:
  // Text format, one declaration per line:
  //   point <name>
  //   spec <a> <b>     (a specializes to b: b lies in the closure of a)
  // '#' starts a comment.
  static FinitePoset parse(const std::string& text);

  static FinitePoset build(std::vector<std::string> names,
                           const std::vector<std::pair<int, int>>& arrows);

  size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  int index_of(const std::string& name) const;

  // y lies in the closure of x
  bool specializes(int x, int y) const { return leq_[x][y]; }

  PointSet closure(const PointSet& s) const;
  bool is_specialization_closed(const PointSet& s) const;
  bool is_generization_closed(const PointSet& s) const;

  // connected components of the comparability graph; returns a component id
  // per point, ids numbered by first appearance
  std::vector<int> components() const;

  // length of the longest strict specialization chain ending at each point;
  // used to layer figures
  std::vector<int> ranks() const;

private:
  FinitePoset() = default;

  std::vector<std::string> names_;
  std::vector<std::vector<bool>> leq_;
};

// Resolves names to a membership vector; unknown names error.
PointSet point_set_of(const FinitePoset& p, const std::vector<std::string>& members);
std::vector<std::string> names_of(const FinitePoset& p, const PointSet& s);

// Largest specialization-closed subset contained in an arbitrary subset u:
// the points whose whole closure stays inside u.
PointSet largest_specialization_closed_inside(const FinitePoset& p, const PointSet& u);

// Compactness locus of the finite localization inverting the specialization-
// closed subset y; errors with not_closed when y is not specialization-closed.
PointSet finite_localization_locus(const FinitePoset& p, const PointSet& y);

// Closed under specialization and generization at once; equivalently the
// localization satisfies the strongest duality formalism available.
bool is_clopen(const FinitePoset& p, const PointSet& y);

}  // namespace locus
