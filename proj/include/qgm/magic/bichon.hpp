#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qgm/magic/model.hpp"
#include "qgm/magic/words.hpp"

namespace qgm {

/// Single-fiber block-diagonal magic model; block i has entry
/// (r,c) = (1/K_i) Σ_a ζ_{K_i}^{(c-r)a} U_i^a.
template <class S>
MatrixModel<S> bichon_build(const std::vector<std::size_t>& sizes, const std::vector<Matrix<S>>& generators,
                            double tol = kDefaultTolerance);

/// True iff every diagonal block depends only on (c - r) mod K_i and the
/// off-block entries vanish.
template <class S>
bool is_block_circulant(const MatrixModel<S>& model, const std::vector<std::size_t>& sizes,
                        double tol = kDefaultTolerance);

template <class S>
struct DualElementCheck {
  bool pass = true;
  std::vector<S> values;  // ntrace ρ(g), enumeration order of Γ
  std::optional<std::size_t> first_failure;
};

/// ntrace ρ(g) = δ_{g,e} for every g ∈ Γ, ρ extended from the generator
/// images.
template <class S>
DualElementCheck<S> dual_element_check(const DualReference& ref, const std::vector<Matrix<S>>& generators,
                                       double tol = kDefaultTolerance);

}  // namespace qgm
