#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qgm/algebra/automorphism.hpp"
#include "qgm/algebra/perm_group.hpp"
#include "qgm/magic/model.hpp"

namespace qgm {

/// A finite group L with a unitary representation v: L → U_N and an
/// automorphism σ of order dividing K.
struct CyclicModelData {
  PermGroup l;
  std::vector<ExactMatrix> v;  // v(g) in the enumeration order of l
  AutoMap sigma;
  std::size_t k = 1;

  std::size_t size() const { return v.empty() ? 0 : v[0].rows(); }
};

/// Validates and assembles the data. The representation is given on the
/// generators of L, σ by the images of the generators.
CyclicModelData make_cyclic_data(PermGroup l, const std::vector<ExactMatrix>& generator_images,
                                 const std::vector<Perm>& sigma_images, std::size_t k);

/// σ(g) = the element whose image is the entrywise conjugate of v(g).
/// Throws InvalidAutomorphism if v(L) is not self-conjugate or v is not
/// faithful.
std::vector<Perm> conjugation_automorphism(const PermGroup& l, const std::vector<ExactMatrix>& generator_images);

/// K×K matrix; 0-based row r holds x[r] in column (r - 1) mod K.
template <class S>
Matrix<S> cycle_fill(const std::vector<S>& x);
/// Block version: each x[r] is a d×d matrix, result is Kd×Kd.
template <class S>
Matrix<S> cycle_fill(const std::vector<Matrix<S>>& x);

/// Model over X = L, uniform weights; U_ij at g is cycle_fill of
/// v_ij(σ(g)), ..., v_ij(σ^K(g)).
MatrixModel<Cyc> build_cyclic_model(const CyclicModelData& data);

struct HalfLiberationReport {
  bool unitary = true;
  bool conjugate_unitary = true;
  bool diagonal_products = true;
  bool commuting = true;
  bool self_adjoint = true;
  std::optional<bool> abc_cba;         // only when every entry is self-adjoint
  std::optional<bool> k1_commutation;  // K = 1: ab = ba
  std::optional<bool> k2_relation;     // K = 2: ab·cd = cd·ab
  std::vector<std::string> failures;

  bool pass() const {
    return unitary && conjugate_unitary && diagonal_products && commuting && abc_cba.value_or(true) &&
           k1_commutation.value_or(true) && k2_relation.value_or(true);
  }
};

template <class S>
HalfLiberationReport verify_half_liberation(const MatrixModel<S>& model, double tol = kDefaultTolerance);

struct SemidirectCertificate {
  std::size_t basis_size = 0;
  bool homomorphism = true;
  bool star = true;
  bool stationary = true;
  bool matches_model = true;
  std::vector<std::string> basis;   // δ_g ⊗ τ^i labels
  std::vector<Cyc> model_values;    // (ntrace ⊗ ∫_L) ρ(f)
  std::vector<Cyc> haar_values;     // ∫_{L ⋊ Z_K} f
  std::optional<std::string> first_failure;

  bool pass() const { return homomorphism && star && stationary && matches_model; }
};

/// ρ(δ_g ⊗ τ^i) on the crossed product C(L) ⋊ Z_K, checked for
/// multiplicativity, *-preservation, Haar compatibility and agreement with
/// the cyclic model on v_ij ⊗ τ.
SemidirectCertificate semidirect_stationarity(const CyclicModelData& data);

/// D U_ij D^{-1} = ζ_K U_ij with D = diag(1, ζ_K, ..., ζ_K^{K-1}), every fiber.
template <class S>
bool verify_k_symmetry(const MatrixModel<S>& model, double tol = kDefaultTolerance);

}  // namespace qgm
