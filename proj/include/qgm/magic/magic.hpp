#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qgm/algebra/perm_group.hpp"
#include "qgm/magic/model.hpp"

namespace qgm {

struct MagicViolation {
  std::size_t point = 0;
  std::string kind;  // "not-projection", "row-sum", "column-sum"
  std::size_t i = 0;
  std::size_t j = 0;  // unused for sums
};

struct MagicReport {
  bool pass = true;
  std::vector<MagicViolation> violations;
};

template <class S>
MagicReport verify_magic(const MatrixModel<S>& model, double tol = kDefaultTolerance);

enum class OrbitSource { Classical, Dual, Model };
const char* orbit_source_name(OrbitSource s);

struct OrbitStructure {
  std::vector<std::vector<std::size_t>> blocks;  // 0-based, each sorted, ordered by minimum
  std::vector<std::size_t> block_of;
  OrbitSource source = OrbitSource::Classical;
  bool quasi_transitive = false;
  std::size_t common_size = 0;  // 0 unless quasi-transitive
  bool lower_bound = false;     // model-derived orbits may be finer than the true ones

  static OrbitStructure from_blocks(std::vector<std::vector<std::size_t>> blocks, std::size_t n, OrbitSource src);
  bool same(std::size_t i, std::size_t j) const { return block_of[i] == block_of[j]; }
};

OrbitStructure orbits_from_source(const PermGroup& g);
/// Orbits of a dual reference: consecutive blocks of the given sizes.
OrbitStructure orbits_from_dual(const std::vector<std::size_t>& sizes);
template <class S>
OrbitStructure orbits_from_model(const MatrixModel<S>& model, double tol = kDefaultTolerance);

struct RankWitness {
  std::size_t point = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t rank = 0;
};

struct QuasiFlatReport {
  bool quasi_flat = true;
  std::size_t common_size = 0;
  std::vector<RankWitness> witnesses;  // every (x,i,j) with i ~ j and rank != 1
};

/// Checks rank P_ij^x == 1 for all x and all i ~ j. Requires quasi-transitive
/// orbits whose common size equals the model dimension.
template <class S>
QuasiFlatReport quasi_flat_check(const MatrixModel<S>& model, const OrbitStructure& orbits,
                                 double tol = kDefaultTolerance);

using IndexWord = std::vector<std::pair<std::size_t, std::size_t>>;  // 0-based (i,j) letters
std::string word_to_string(const IndexWord& w);                      // 1-based, "u12 u21"

/// ∫_G u_{i1 j1} ... u_{ik jk} for a classical permutation group.
Rational haar_word_classical(const PermGroup& g, const IndexWord& word);

template <class S>
struct FixedPointResult {
  Matrix<S> q;
  bool is_projection = false;
  bool fixes_ones = false;
  bool matches_orbits = false;
  bool pass() const { return is_projection && fixes_ones && matches_orbits; }
};

FixedPointResult<Cyc> fixed_point_matrix(const PermGroup& g);
template <class S>
FixedPointResult<S> fixed_point_matrix(const MatrixModel<S>& model, const OrbitStructure& orbits,
                                       double tol = kDefaultTolerance);

}  // namespace qgm
