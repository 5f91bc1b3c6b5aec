#pragma once

#include <vector>

#include "qgm/algebra/perm_group.hpp"
#include "qgm/error.hpp"
#include "qgm/exact/matrix.hpp"

namespace qgm {

/// Extends generator images to ρ(x) for every element x of G, following the
/// Cayley graph. Throws NotRepresentation if two paths give different
/// matrices.
template <class S>
std::vector<Matrix<S>> extend_representation(const PermGroup& g, const std::vector<Matrix<S>>& generator_images,
                                             double tol = kDefaultTolerance) {
  if (generator_images.size() != g.generators().size()) {
    throw Error(Errc::InvalidArgument, "need one matrix per generator");
  }
  if (generator_images.empty() && g.order() > 1) throw Error(Errc::InvalidArgument, "no generators");
  const auto dim = generator_images.empty() ? 1 : generator_images[0].rows();
  for (const auto& m : generator_images) {
    if (m.rows() != dim || m.cols() != dim) throw Error(Errc::ShapeMismatch, "generator matrices differ in shape");
  }
  std::vector<Matrix<S>> rho(g.order());
  rho[0] = Matrix<S>::identity(dim);
  cayley_walk(
      g.order(), g.generators().size(), [&](std::size_t i, std::size_t x) { return g.left_step(i, x); },
      [&](std::size_t x, std::size_t i, std::size_t y) { rho[y] = generator_images[i] * rho[x]; },
      [&](std::size_t x, std::size_t i, std::size_t y) {
        if (!(generator_images[i] * rho[x]).near(rho[y], tol)) {
          throw Error(Errc::NotRepresentation, "generator matrices violate a relation at " + g.element(y).to_string());
        }
      });
  return rho;
}

/// Left-regular representation: ρ(h) e_y = e_{hy} on the enumeration of G.
inline ExactMatrix regular_representation(const PermGroup& g, const Perm& h) {
  auto hi = g.index_of(h);
  if (!hi) throw Error(Errc::NotInGroup, h.to_string() + " is not in the group");
  ExactMatrix m(g.order(), g.order());
  for (std::size_t y = 0; y < g.order(); ++y) m(*g.index_of(h * g.element(y)), y) = Cyc(1);
  return m;
}

}  // namespace qgm
