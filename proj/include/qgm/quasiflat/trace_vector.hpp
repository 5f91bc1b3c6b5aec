#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qgm/exact/matrix.hpp"

namespace qgm {

template <class S>
struct TraceVectorResult {
  std::vector<S> t;                         // Tr(U^a), a = 0..K-1
  bool flat = false;                        // t == (K, 0, ..., 0)
  std::vector<std::size_t> multiplicities;  // eigenvalue ζ_K^a multiplicities
  bool spectral_flat = false;               // all multiplicities equal 1
  bool agrees() const { return flat == spectral_flat; }
};

/// Throws NotFiniteOrder if U^K != 1, NotUnitary if U is not unitary.
template <class S>
TraceVectorResult<S> trace_vector_check(const Matrix<S>& u, std::size_t k, double tol = kDefaultTolerance);

struct DualFlatWitness {
  std::size_t generator = 0;
  std::size_t point = 0;
  std::vector<std::size_t> multiplicities;
};

template <class S>
struct DualFlatCertificate {
  bool pass = true;
  std::vector<DualFlatWitness> witnesses;
  std::optional<bool> model_quasi_flat;  // Bichon model check, when dimensions allow it
};

/// fibers[x][i] = U_i(x). Per-fiber trace-vector check, cross-validated
/// against quasi-flatness of the Bichon magic model built from the same data.
template <class S>
DualFlatCertificate<S> quasiflat_dual_check(const std::vector<std::vector<Matrix<S>>>& fibers, std::size_t k,
                                            double tol = kDefaultTolerance);

}  // namespace qgm
