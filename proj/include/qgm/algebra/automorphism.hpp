#pragma once

#include <cstddef>
#include <vector>

#include "qgm/algebra/perm_group.hpp"

namespace qgm {

/// A group automorphism of a PermGroup, stored as an element-index map.
class AutoMap {
 public:
  AutoMap() = default;
  AutoMap(std::vector<Perm> generator_images, std::vector<std::size_t> map)
      : generator_images_(std::move(generator_images)), map_(std::move(map)) {}

  static AutoMap identity(const PermGroup& g);

  const std::vector<Perm>& generator_images() const { return generator_images_; }
  /// map()[x] is the index of the image of element x.
  const std::vector<std::size_t>& map() const { return map_; }
  std::size_t operator()(std::size_t x) const { return map_[x]; }

  AutoMap then(const AutoMap& next) const;  // next ∘ this
  AutoMap inverse() const;
  AutoMap power(long long k) const;
  bool is_identity() const;
  std::size_t order() const;

 private:
  std::vector<Perm> generator_images_;
  std::vector<std::size_t> map_;
};

/// The unique automorphism of G sending generators()[i] to images[i].
///
/// Images are propagated along the Cayley graph of G; a conflict at any
/// vertex raises NotWellDefined, a non-injective result NotBijective.
AutoMap extend_automorphism(const PermGroup& g, const std::vector<Perm>& generator_images);

/// True iff φ(xy) = φ(x)φ(y) on the full multiplication table.
bool is_multiplicative(const PermGroup& g, const std::vector<std::size_t>& map);

}  // namespace qgm
