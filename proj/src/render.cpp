#include "render.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "error.hpp"

namespace locus {

namespace {

// shared two-tone palette: light = inner emphasis, dark = ambient subset
constexpr const char* kLightFill = "#aed4f2";
constexpr const char* kDarkFill = "#3a78b5";
constexpr const char* kPlainFill = "#ffffff";
constexpr const char* kInkStroke = "#2b5f8f";
constexpr const char* kDimStroke = "#8a8a8a";

std::string figure_title(const LocusDoc& doc) {
  std::string title = doc.op.empty() ? "locus" : doc.op + " locus";
  title += " of " + doc.group;
  if (!doc.subject_key.empty())
    title += ", " + doc.subject_key + " " + doc.subject;
  return title;
}

std::vector<std::string> column_labels(const LocusDoc& doc) {
  std::vector<std::string> labels;
  for (uint64_t p : doc.primes) labels.push_back(std::to_string(p));
  labels.push_back("g");
  return labels;
}

bool column_member(const LocusClassEntry& cls, size_t col) {
  return col < cls.columns.size() ? static_cast<bool>(cls.columns[col]) : cls.generic;
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

void svg_open(std::string& out, int width, int height) {
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) + "\">\n";
}

void svg_text(std::string& out, int x, int y, const std::string& text,
              const char* anchor = "start") {
  out += "  <text x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) +
         "\" font-family=\"monospace\" font-size=\"12\" fill=\"#222222\" text-anchor=\"" +
         anchor + "\">" + xml_escape(text) + "</text>\n";
}

void svg_dot(std::string& out, int x, int y, int r, bool filled) {
  out += "  <circle cx=\"" + std::to_string(x) + "\" cy=\"" + std::to_string(y) +
         "\" r=\"" + std::to_string(r) + "\" fill=\"" +
         (filled ? kLightFill : kPlainFill) + "\" stroke=\"" +
         (filled ? kInkStroke : kDimStroke) + "\"/>\n";
}

// vertical geometry shared by the svg tower figure
constexpr int kTitleY = 20;
constexpr int kClassLabelY = 46;
constexpr int kInfY = 70;
constexpr int kEllipsisY = 96;
constexpr int kTowerTopY = 114;   // height 7
constexpr int kTowerStep = 22;    // heights 7 down to 2
constexpr int kBaseY = 258;
constexpr int kPrimeLabelY = 280;
constexpr int kLegendY = 304;
constexpr int kFigureHeight = 324;
constexpr int kColumnStride = 24;
constexpr int kClassGutter = 40;

int tower_y(uint32_t height) { return kTowerTopY + static_cast<int>(7 - height) * kTowerStep; }

std::string eq_svg(const LocusDoc& doc) {
  std::vector<std::string> cols = column_labels(doc);
  const int ncols = static_cast<int>(cols.size());
  const int block_width = std::max((ncols - 1) * kColumnStride, 16);
  const int x0 = 56;
  const int width = x0 + static_cast<int>(doc.classes.size()) * block_width +
                    static_cast<int>(doc.classes.size() - 1) * kClassGutter + 32;

  std::string out;
  svg_open(out, width, kFigureHeight);
  svg_text(out, x0, kTitleY, figure_title(doc));

  // height axis
  svg_text(out, 40, kInfY + 4, "inf", "end");
  svg_text(out, 40, kEllipsisY + 4, ":", "end");
  for (uint32_t h = 2; h <= 7; ++h)
    svg_text(out, 40, tower_y(h) + 4, std::to_string(h), "end");
  svg_text(out, 40, kBaseY + 4, "1", "end");

  int class_x = x0;
  for (const LocusClassEntry& cls : doc.classes) {
    const int center_x = class_x + (ncols - 1) * (kColumnStride / 2);
    svg_text(out, center_x, kClassLabelY, cls.label, "middle");
    for (int j = 0; j < ncols; ++j) {
      const int x = class_x + j * kColumnStride;
      const bool in = column_member(cls, static_cast<size_t>(j));
      svg_dot(out, x, kInfY, 5, in);
      svg_text(out, x, kEllipsisY + 4, ":", "middle");
      for (uint32_t h = 7; h >= 2; --h) svg_dot(out, x, tower_y(h), 5, in);
      svg_text(out, x, kPrimeLabelY, cols[static_cast<size_t>(j)], "middle");
    }
    svg_dot(out, center_x, kBaseY, 5, cls.height_one);
    class_x += block_width + kClassGutter;
  }

  svg_dot(out, x0 + 4, kLegendY - 4, 5, true);
  svg_text(out, x0 + 16, kLegendY, "in locus");
  svg_dot(out, x0 + 104, kLegendY - 4, 5, false);
  svg_text(out, x0 + 116, kLegendY, "not in locus");
  svg_text(out, x0, kLegendY + 16,
           "g = any other prime; row 1 = shared height-1 point of the class");
  out += "</svg>\n";
  return out;
}

std::string eq_dot(const LocusDoc& doc) {
  std::vector<std::string> cols = column_labels(doc);
  std::string out = "digraph locus {\n";
  out += "  graph [label=\"" + dot_escape(figure_title(doc)) +
         "\\nfilled = in locus, g = any other prime\", labelloc=\"t\", "
         "fontname=\"monospace\", fontsize=12];\n";
  out += "  rankdir=\"BT\";\n";
  out += "  node [shape=\"circle\", width=0.2, fixedsize=true, fontsize=8, "
         "fontname=\"monospace\", style=\"filled\", color=\"" +
         std::string(kInkStroke) + "\"];\n";
  out += "  edge [arrowsize=0.5, color=\"" + std::string(kDimStroke) + "\"];\n";

  auto fill = [](bool in) {
    return std::string("fillcolor=\"") + (in ? kLightFill : kPlainFill) + "\"";
  };

  for (size_t c = 0; c < doc.classes.size(); ++c) {
    const LocusClassEntry& cls = doc.classes[c];
    std::string base = "b" + std::to_string(c);
    out += "  " + base + " [label=\"" + dot_escape(cls.label) +
           "\", shape=\"ellipse\", width=0.6, fixedsize=false, " +
           fill(cls.height_one) + "];\n";
    for (size_t j = 0; j < cols.size(); ++j) {
      std::string col = "c" + std::to_string(c) + "_" + cols[j];
      const bool in = column_member(cls, j);
      for (uint32_t h = 2; h <= 7; ++h) {
        out += "  " + col + "_h" + std::to_string(h) + " [label=\"" +
               (h == 2 ? dot_escape(cols[j]) : "") + "\", " + fill(in) + "];\n";
      }
      out += "  " + col + "_top [label=\"inf\", " + fill(in) + "];\n";
      out += "  " + base + " -> " + col + "_h2;\n";
      for (uint32_t h = 2; h < 7; ++h)
        out += "  " + col + "_h" + std::to_string(h) + " -> " + col + "_h" +
               std::to_string(h + 1) + ";\n";
      out += "  " + col + "_h7 -> " + col + "_top [style=\"dotted\"];\n";
    }
  }

  auto rank_row = [&](const std::string& suffix) {
    out += "  { rank=\"same\";";
    for (size_t c = 0; c < doc.classes.size(); ++c)
      for (const std::string& col : cols)
        out += " c" + std::to_string(c) + "_" + col + suffix + ";";
    out += " }\n";
  };
  out += "  { rank=\"same\";";
  for (size_t c = 0; c < doc.classes.size(); ++c)
    out += " b" + std::to_string(c) + ";";
  out += " }\n";
  for (uint32_t h = 2; h <= 7; ++h) rank_row("_h" + std::to_string(h));
  rank_row("_top");
  out += "}\n";
  return out;
}

void trim_right(std::string& line) {
  while (!line.empty() && line.back() == ' ') line.pop_back();
}

std::string eq_ascii(const LocusDoc& doc) {
  std::vector<std::string> cols = column_labels(doc);
  const size_t ncols = cols.size();
  size_t colw = 1;
  for (const std::string& c : cols) colw = std::max(colw, c.size());
  const size_t stride = colw + 2;
  const size_t glyph_width = ncols * stride - 2;

  std::vector<size_t> block_width;
  for (const LocusClassEntry& cls : doc.classes)
    block_width.push_back(std::max(glyph_width, cls.label.size()));

  const std::string margin(5, ' ');
  auto label5 = [](const std::string& s) {
    return std::string(5 - std::min<size_t>(5, s.size()), ' ') + s;
  };

  // one text row across every class block; fill(c, col) yields the glyph
  auto row = [&](const std::string& head, auto fill) {
    std::string line = label5(head) + "    ";
    for (size_t c = 0; c < doc.classes.size(); ++c) {
      std::string block(block_width[c], ' ');
      for (size_t j = 0; j < ncols; ++j) {
        std::string glyph = fill(c, j);
        for (size_t k = 0; k < glyph.size() && j * stride + k < block.size(); ++k)
          block[j * stride + k] = glyph[k];
      }
      line += block;
      if (c + 1 < doc.classes.size()) line += "    ";
    }
    trim_right(line);
    return line + "\n";
  };

  std::string out = figure_title(doc) + "\n\n";
  out += row("", [&](size_t c, size_t j) {
    return j == 0 ? doc.classes[c].label : std::string{};
  });
  auto tower_glyph = [&](size_t c, size_t j) {
    return std::string(column_member(doc.classes[c], j) ? "#" : ".");
  };
  out += row("inf", tower_glyph);
  out += row(":", [&](size_t, size_t) { return std::string(":"); });
  for (uint32_t h = 7; h >= 2; --h) out += row(std::to_string(h), tower_glyph);
  out += row("1", [&](size_t c, size_t j) {
    size_t base_col = (ncols - 1) / 2;
    if (j != base_col) return std::string{};
    return std::string(doc.classes[c].height_one ? "#" : ".");
  });
  out += row("", [&](size_t, size_t j) { return cols[j]; });
  out += "\n";
  out += "legend: # in locus, . not in locus, g = any other prime\n";
  out += "        row 1 = shared height-1 point of the class\n";
  return out;
}

// ----- poset figures -----

struct PosetLayout {
  std::vector<int> rank;                // per point
  std::vector<int> comp;                // per point
  std::vector<int> slot;                // per point: horizontal slot
  std::vector<std::pair<int, int>> covers;  // a specializes to b, no point between
  int total_slots = 0;
  int max_rank = 0;
  int component_count = 0;
};

PosetLayout layout_poset(const FinitePoset& p) {
  PosetLayout l;
  l.rank = p.ranks();
  l.comp = p.components();
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i) {
    l.max_rank = std::max(l.max_rank, l.rank[i]);
    l.component_count = std::max(l.component_count, l.comp[i] + 1);
  }

  l.slot.assign(p.size(), 0);
  int offset = 0;
  for (int c = 0; c < l.component_count; ++c) {
    std::vector<int> used(static_cast<size_t>(l.max_rank) + 1, 0);
    int comp_width = 0;
    for (int i = 0; i < n; ++i) {
      if (l.comp[i] != c) continue;
      l.slot[i] = offset + used[l.rank[i]]++;
      comp_width = std::max(comp_width, used[l.rank[i]]);
    }
    offset += comp_width;
  }
  l.total_slots = offset;

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b || !p.specializes(a, b)) continue;
      bool covered = true;
      for (int z = 0; z < n; ++z) {
        if (z == a || z == b) continue;
        if (p.specializes(a, z) && p.specializes(z, b)) covered = false;
      }
      if (covered) l.covers.push_back({a, b});
    }
  }
  return l;
}

int overlay_tone(const std::vector<PosetOverlay>& overlays, size_t point) {
  if (!overlays.empty() && overlays[0].members[point]) return 1;  // light
  if (overlays.size() > 1 && overlays[1].members[point]) return 2;  // dark
  return 0;
}

std::string overlay_label(const std::vector<PosetOverlay>& overlays, size_t i) {
  if (overlays[i].label.empty()) return "subset " + std::to_string(i + 1);
  return overlays[i].label;
}

std::string poset_title(const FinitePoset& p) {
  return "specialization poset, " + std::to_string(p.size()) + " point" +
         (p.size() == 1 ? "" : "s");
}

std::string poset_svg(const FinitePoset& p, const std::vector<PosetOverlay>& overlays,
                      const PosetLayout& l) {
  const int x_step = 110;
  const int y_step = 60;
  auto x_of = [&](int i) { return 56 + l.slot[i] * x_step + l.comp[i] * 40; };
  auto y_of = [&](int i) { return 56 + l.rank[i] * y_step; };

  const int legend_y = 56 + (l.max_rank + 1) * y_step + 8;
  const int width =
      std::max(56 + l.total_slots * x_step + (l.component_count - 1) * 40 + 40, 460);
  const int height = legend_y + 28;

  std::string out;
  svg_open(out, width, height);
  svg_text(out, 24, kTitleY, poset_title(p));

  for (const auto& [a, b] : l.covers)
    out += "  <line x1=\"" + std::to_string(x_of(a)) + "\" y1=\"" +
           std::to_string(y_of(a)) + "\" x2=\"" + std::to_string(x_of(b)) +
           "\" y2=\"" + std::to_string(y_of(b)) + "\" stroke=\"" + kDimStroke +
           "\" stroke-width=\"1\"/>\n";

  for (size_t i = 0; i < p.size(); ++i) {
    const int tone = overlay_tone(overlays, i);
    const char* fill = tone == 1 ? kLightFill : tone == 2 ? kDarkFill : kPlainFill;
    out += "  <circle cx=\"" + std::to_string(x_of(static_cast<int>(i))) +
           "\" cy=\"" + std::to_string(y_of(static_cast<int>(i))) +
           "\" r=\"7\" fill=\"" + fill + "\" stroke=\"#444444\"/>\n";
    svg_text(out, x_of(static_cast<int>(i)) + 12, y_of(static_cast<int>(i)) + 4,
             p.names()[i]);
  }

  int legend_x = 24;
  for (size_t i = 0; i < overlays.size(); ++i) {
    out += "  <rect x=\"" + std::to_string(legend_x) + "\" y=\"" +
           std::to_string(legend_y - 10) + "\" width=\"12\" height=\"12\" fill=\"" +
           (i == 0 ? kLightFill : kDarkFill) + "\" stroke=\"#444444\"/>\n";
    svg_text(out, legend_x + 18, legend_y, overlay_label(overlays, i));
    legend_x += 18 + 9 * static_cast<int>(overlay_label(overlays, i).size()) + 24;
  }
  out += "</svg>\n";
  return out;
}

std::string poset_dot(const FinitePoset& p, const std::vector<PosetOverlay>& overlays,
                      const PosetLayout& l) {
  std::string legend;
  for (size_t i = 0; i < overlays.size(); ++i)
    legend += std::string(i ? ", " : "\\n") + (i == 0 ? "light = " : "dark = ") +
              dot_escape(overlay_label(overlays, i));
  std::string out = "digraph poset {\n";
  out += "  graph [label=\"" + dot_escape(poset_title(p)) + legend +
         "\", labelloc=\"t\", fontname=\"monospace\", fontsize=12];\n";
  out += "  rankdir=\"TB\";\n";
  out += "  node [shape=\"ellipse\", fontsize=10, fontname=\"monospace\", "
         "style=\"filled\", color=\"#444444\"];\n";
  out += "  edge [arrowsize=0.5, color=\"" + std::string(kDimStroke) + "\"];\n";

  for (size_t i = 0; i < p.size(); ++i) {
    const int tone = overlay_tone(overlays, i);
    const char* fill = tone == 1 ? kLightFill : tone == 2 ? kDarkFill : kPlainFill;
    out += "  \"" + dot_escape(p.names()[i]) + "\" [fillcolor=\"" + fill + "\"];\n";
  }
  for (int r = 0; r <= l.max_rank; ++r) {
    out += "  { rank=\"same\";";
    for (size_t i = 0; i < p.size(); ++i)
      if (l.rank[i] == r) out += " \"" + dot_escape(p.names()[i]) + "\";";
    out += " }\n";
  }
  for (const auto& [a, b] : l.covers)
    out += "  \"" + dot_escape(p.names()[a]) + "\" -> \"" +
           dot_escape(p.names()[b]) + "\";\n";
  out += "}\n";
  return out;
}

std::string poset_ascii(const FinitePoset& p, const std::vector<PosetOverlay>& overlays,
                        const PosetLayout& l) {
  std::string out = poset_title(p) + "\n\n";
  auto marked = [&](size_t i) {
    std::string s = p.names()[i];
    if (!overlays.empty() && overlays[0].members[i]) s += " *";
    if (overlays.size() > 1 && overlays[1].members[i]) s += " +";
    return s;
  };

  for (int c = 0; c < l.component_count; ++c) {
    if (l.component_count > 1)
      out += "component " + std::to_string(c + 1) + ":\n";
    const std::string indent = l.component_count > 1 ? "  " : "";
    for (int r = 0; r <= l.max_rank; ++r) {
      std::string line;
      for (size_t i = 0; i < p.size(); ++i) {
        if (l.comp[i] != c || l.rank[i] != r) continue;
        line += (line.empty() ? "" : "   ") + marked(i);
      }
      if (!line.empty())
        out += indent + "rank " + std::to_string(r) + ": " + line + "\n";
    }
  }

  if (!l.covers.empty()) {
    out += "covers:\n";
    for (const auto& [a, b] : l.covers)
      out += "  " + p.names()[a] + " -> " + p.names()[b] + "\n";
  }
  if (!overlays.empty()) {
    out += "legend:";
    out += " * = " + overlay_label(overlays, 0);
    if (overlays.size() > 1) out += ", + = " + overlay_label(overlays, 1);
    out += "\n";
  }
  return out;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "svg") return Format::svg;
  if (name == "dot") return Format::dot;
  if (name == "ascii") return Format::ascii;
  fail(Status::parse_error, "unknown format: \"" + name + "\" (svg, dot, ascii)");
}

std::string render_eq_figure(const LocusDoc& doc, Format format) {
  if (doc.classes.empty())
    fail(Status::invalid_argument, "locus document has no classes");
  switch (format) {
    case Format::svg: return eq_svg(doc);
    case Format::dot: return eq_dot(doc);
    case Format::ascii: return eq_ascii(doc);
  }
  fail(Status::invalid_argument, "unreachable format");
}

LocusDoc chromatic_figure_doc(const ChromaticSubset& s, const std::string& op) {
  s.validate();
  auto full_tower = [](const Threshold& t) {
    if (t.has_value() && *t != 2)
      fail(Status::invalid_argument,
           "only subsets made of whole towers are drawable");
    return t.has_value();
  };
  LocusDoc doc;
  doc.group = "SH";
  doc.op = op;
  LocusClassEntry entry;
  entry.label = "spectra";
  entry.order = 1;
  for (const auto& [p, t] : s.columns) {
    doc.primes.push_back(p);
    entry.columns.push_back(full_tower(t));
  }
  entry.generic = full_tower(s.rest);
  entry.height_one = s.generic;
  doc.classes.push_back(std::move(entry));
  return doc;
}

std::string render_poset_figure(const FinitePoset& p,
                                const std::vector<PosetOverlay>& overlays,
                                Format format) {
  if (overlays.size() > 2)
    fail(Status::invalid_argument, "at most two overlays are drawable");
  for (const PosetOverlay& o : overlays)
    if (o.members.size() != p.size())
      fail(Status::invalid_argument, "overlay does not match the poset");
  PosetLayout l = layout_poset(p);
  switch (format) {
    case Format::svg: return poset_svg(p, overlays, l);
    case Format::dot: return poset_dot(p, overlays, l);
    case Format::ascii: return poset_ascii(p, overlays, l);
  }
  fail(Status::invalid_argument, "unreachable format");
}

}  // namespace locus
