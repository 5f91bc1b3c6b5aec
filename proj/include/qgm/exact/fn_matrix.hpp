#pragma once

#include <vector>

#include "qgm/exact/matrix.hpp"

namespace qgm {

/// A matrix-valued function on a finite weighted point set X; integration
/// over X is the weighted sum of the fibers.
template <class S>
struct FnMatrix {
  std::vector<Rational> weights;
  std::vector<Matrix<S>> fibers;

  std::size_t points() const { return fibers.size(); }

  /// Weights positive and summing to 1, fibers of one shape.
  void validate() const {
    if (weights.size() != fibers.size() || fibers.empty()) {
      throw Error(Errc::ShapeMismatch, "need one weight per fiber and at least one fiber");
    }
    Rational total = 0;
    for (const auto& w : weights) {
      if (w <= 0) throw Error(Errc::InvalidArgument, "fiber weights must be positive");
      total += w;
    }
    if (total != 1) throw Error(Errc::InvalidArgument, "fiber weights must sum to 1");
    for (const auto& f : fibers) {
      if (f.rows() != fibers[0].rows() || f.cols() != fibers[0].cols()) {
        throw Error(Errc::ShapeMismatch, "fibers differ in shape");
      }
    }
  }

  /// Σ_x w_x · ntrace(M_x).
  S integrated_ntrace() const {
    S total = ScalarTraits<S>::zero();
    for (std::size_t x = 0; x < fibers.size(); ++x) {
      total += ScalarTraits<S>::from_rational(weights[x]) * ntrace(fibers[x]);
    }
    return total;
  }

  static FnMatrix uniform(std::vector<Matrix<S>> fibers) {
    FnMatrix f;
    Rational w(1, static_cast<long>(fibers.size()));
    f.weights.assign(fibers.size(), w);
    f.fibers = std::move(fibers);
    return f;
  }
};

}  // namespace qgm
