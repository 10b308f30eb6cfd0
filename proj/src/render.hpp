#pragma once

#include <string>
#include <vector>

#include "json_io.hpp"
#include "poset.hpp"

namespace locus {

enum class Format { svg, dot, ascii };

// Accepts "svg", "dot" or "ascii"; anything else errors with parse_error.
Format parse_format(const std::string& name);

// Tower figure of an equivariant locus: one block per subgroup class holding
// a base height-1 point and one chromatic tower per prime plus a final
// generic tower, drawn at heights 2..7, an ellipsis and the top point.
// Output bytes depend only on the document and the format.
std::string render_eq_figure(const LocusDoc& doc, Format format);

// Up to two subsets drawn over a poset: the first in the light emphasis
// tone, the second in the dark tone; a point in both keeps the light tone,
// nesting the first region inside the second.
struct PosetOverlay {
  std::string label;
  PointSet members;
};

std::string render_poset_figure(const FinitePoset& p,
                                const std::vector<PosetOverlay>& overlays,
                                Format format);

// Presents a chromatic subset as a one-block tower document so the tower
// renderer applies: the base point stands for the generic point, the final
// column for the untracked primes. Only drawable when every engaged column
// starts at height 2; partial columns error with invalid_argument.
LocusDoc chromatic_figure_doc(const ChromaticSubset& s, const std::string& op);

}  // namespace locus
