#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace locus {

// Permutation of {0, ..., degree-1}, stored as the image array.
// Text formats (cycle notation, group-spec files) use 1-based points.
class Permutation {
public:
  explicit Permutation(std::vector<uint32_t> images);

  static Permutation identity(uint32_t degree);

  // Parses cycle notation such as "(1 2 3)(4 5)". Points are 1-based and
  // must lie in [1, degree]; fixed points may be omitted. "()" is identity.
  static Permutation from_cycles(uint32_t degree, const std::string& text);

  uint32_t degree() const { return static_cast<uint32_t>(images_.size()); }
  uint32_t apply(uint32_t point) const { return images_[point]; }
  bool is_identity() const;

  // (a * b)(x) = a(b(x))
  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;

  // 1-based cycle notation with fixed points omitted; identity is "()".
  std::string to_cycles() const;

  const std::vector<uint32_t>& images() const { return images_; }

  auto operator<=>(const Permutation& other) const { return images_ <=> other.images_; }
  bool operator==(const Permutation& other) const { return images_ == other.images_; }

private:
  std::vector<uint32_t> images_;
};

}  // namespace locus
