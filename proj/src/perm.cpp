#include "perm.hpp"

#include <numeric>
#include <sstream>

#include "error.hpp"

namespace locus {

Permutation::Permutation(std::vector<uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (uint32_t img : images_) {
    if (img >= images_.size() || seen[img])
      fail(Status::parse_error, "image array is not a permutation");
    seen[img] = true;
  }
}

Permutation Permutation::identity(uint32_t degree) {
  std::vector<uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (uint32_t i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (degree() != other.degree())
    fail(Status::invalid_argument, "degree mismatch in permutation product");
  std::vector<uint32_t> images(degree());
  for (uint32_t i = 0; i < degree(); ++i) images[i] = images_[other.images_[i]];
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<uint32_t> images(degree());
  for (uint32_t i = 0; i < degree(); ++i) images[images_[i]] = i;
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(uint32_t degree, const std::string& text) {
  std::vector<uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);

  std::vector<bool> used(degree, false);

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };

  skip_ws();
  bool saw_cycle = false;
  while (pos < text.size()) {
    if (text[pos] != '(')
      fail(Status::parse_error, "expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<uint32_t> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!isdigit(static_cast<unsigned char>(text[pos])))
        fail(Status::parse_error, "expected point number in cycle notation: " + text);
      uint64_t value = 0;
      while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        ++pos;
      }
      if (value < 1 || value > degree)
        fail(Status::parse_error, "point out of range in cycle notation: " + text);
      uint32_t point = static_cast<uint32_t>(value - 1);
      if (used[point])
        fail(Status::parse_error, "point repeated in cycle notation: " + text);
      used[point] = true;
      cycle.push_back(point);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
    }
    if (pos >= text.size())
      fail(Status::parse_error, "unterminated cycle: " + text);
    ++pos;  // ')'
    saw_cycle = true;

    for (size_t i = 0; i < cycle.size(); ++i)
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  if (!saw_cycle)
    fail(Status::parse_error, "empty cycle expression: " + text);

  return Permutation(std::move(images));
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> done(degree(), false);
  bool any = false;
  for (uint32_t start = 0; start < degree(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out << '(';
    uint32_t point = start;
    bool first = true;
    while (!done[point]) {
      done[point] = true;
      if (!first) out << ' ';
      out << (point + 1);
      first = false;
      point = images_[point];
    }
    out << ')';
    any = true;
  }
  if (!any) return "()";
  return out.str();
}

}  // namespace locus
