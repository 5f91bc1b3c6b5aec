#pragma once

#include <cstddef>
#include <vector>

#include "qgm/exact/matrix.hpp"

namespace qgm {

/// M = M* and M² = M; exact, or entrywise within `tol` in float mode.
template <class S>
bool is_projection(const Matrix<S>& m, double tol = kDefaultTolerance);

/// U U* = U* U = 1.
template <class S>
bool is_unitary(const Matrix<S>& u, double tol = kDefaultTolerance);

/// Rank by Gaussian elimination (exact), or pivoted elimination with the
/// threshold tol · rows · max|entry| (float). When `m` is a projection the
/// rank is cross-checked against its trace; a mismatch throws Inconsistent.
template <class S>
std::size_t rank(const Matrix<S>& m, double tol = kDefaultTolerance);

/// P_a = (1/K) Σ_b ζ_K^{−ab} U^b, a = 0..K−1: the projection onto the
/// ζ_K^a-eigenspace of U. Throws NotUnitary or NotFiniteOrder.
template <class S>
std::vector<Matrix<S>> spectral_idempotents(const Matrix<S>& u, std::size_t k, double tol = kDefaultTolerance);

/// m_a = trace(P_a), the multiplicity of the eigenvalue ζ_K^a.
template <class S>
std::vector<std::size_t> spectral_multiplicities(const Matrix<S>& u, std::size_t k,
                                                 double tol = kDefaultTolerance);

/// Round a trace that must be a nonnegative integer; throws Inconsistent.
template <class S>
std::size_t integral_trace(const S& t, double tol = kDefaultTolerance);
template <>
std::size_t integral_trace<Cyc>(const Cyc& t, double tol);
template <>
std::size_t integral_trace<Complex>(const Complex& t, double tol);

}  // namespace qgm
