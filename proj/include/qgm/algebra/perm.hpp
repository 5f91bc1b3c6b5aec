#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qgm {

/// A permutation of {0, ..., degree-1}.
///
/// Stored 0-based; the JSON layer converts to and from the 1-based arrays used
/// in input files. Composition follows (a * b)(i) = a(b(i)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint32_t> images);

  static Perm identity(std::size_t degree);
  /// Builds from 1-based images, e.g. {2, 1, 3} is the transposition (1 2).
  static Perm from_one_based(const std::vector<std::uint32_t>& images);
  /// Builds from disjoint cycles written 1-based, e.g. {{1, 2}, {3, 4}}.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<std::uint32_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::uint32_t>& images() const { return images_; }
  std::vector<std::uint32_t> one_based() const;

  Perm inverse() const;
  bool is_identity() const;
  std::size_t order() const;
  std::size_t fixed_point_count() const;
  bool is_derangement() const { return fixed_point_count() == 0; }

  /// Cycle notation, 1-based, identity printed as "()".
  std::string to_string() const;

  friend Perm operator*(const Perm& a, const Perm& b);
  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace qgm
