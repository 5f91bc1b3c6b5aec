#pragma once

#include <cstddef>
#include <vector>

#include "qgm/exact/fn_matrix.hpp"
#include "qgm/exact/matrix.hpp"

namespace qgm {

/// An N×N family of K×K matrices over a finite weighted point set X, i.e.
/// the images P_ij^x of the coordinates u_ij under a matrix model
/// C(G) → M_K(C(X)). Stored fiber-major: fibers[x][i * size + j].
template <class S>
struct MatrixModel {
  std::size_t size = 0;  // N
  std::size_t dim = 0;   // K
  std::vector<Rational> weights;
  std::vector<std::vector<Matrix<S>>> fibers;

  std::size_t points() const { return fibers.size(); }
  const Matrix<S>& entry(std::size_t x, std::size_t i, std::size_t j) const { return fibers[x][i * size + j]; }
  Matrix<S>& entry(std::size_t x, std::size_t i, std::size_t j) { return fibers[x][i * size + j]; }

  /// The coordinate u_ij as a matrix-valued function on X.
  FnMatrix<S> function(std::size_t i, std::size_t j) const {
    FnMatrix<S> f;
    f.weights = weights;
    for (const auto& fiber : fibers) f.fibers.push_back(fiber[i * size + j]);
    return f;
  }

  void validate() const {
    if (fibers.empty() || weights.size() != fibers.size()) {
      throw Error(Errc::ShapeMismatch, "model needs one weight per fiber and at least one fiber");
    }
    Rational total = 0;
    for (const auto& w : weights) {
      if (w <= 0) throw Error(Errc::InvalidArgument, "fiber weights must be positive");
      total += w;
    }
    if (total != 1) throw Error(Errc::InvalidArgument, "fiber weights must sum to 1");
    for (const auto& fiber : fibers) {
      if (fiber.size() != size * size) throw Error(Errc::ShapeMismatch, "fiber does not hold N² entries");
      for (const auto& m : fiber) {
        if (m.rows() != dim || m.cols() != dim) throw Error(Errc::ShapeMismatch, "entry is not K×K");
      }
    }
  }

  static MatrixModel single_fiber(std::size_t size, std::size_t dim, std::vector<Matrix<S>> entries) {
    MatrixModel m;
    m.size = size;
    m.dim = dim;
    m.weights = {Rational(1)};
    m.fibers = {std::move(entries)};
    return m;
  }
};

inline MatrixModel<Complex> to_float(const MatrixModel<Cyc>& m) {
  MatrixModel<Complex> f;
  f.size = m.size;
  f.dim = m.dim;
  f.weights = m.weights;
  for (const auto& fiber : m.fibers) {
    std::vector<FloatMatrix> out;
    out.reserve(fiber.size());
    for (const auto& e : fiber) out.push_back(to_float(e));
    f.fibers.push_back(std::move(out));
  }
  return f;
}

inline const MatrixModel<Complex>& to_float(const MatrixModel<Complex>& m) { return m; }

}  // namespace qgm
