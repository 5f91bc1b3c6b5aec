#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qgm/algebra/perm_group.hpp"
#include "qgm/magic/model.hpp"

namespace qgm {

/// σ_1, ..., σ_K with σ_1(m), ..., σ_K(m) pairwise distinct for every m.
struct LatinFamily {
  std::vector<std::size_t> indices;  // positions in the group enumeration
  std::vector<Perm> members;
};

struct LatinSearchResult {
  std::size_t k = 0;
  std::optional<LatinFamily> family;  // empty means no family exists
  std::size_t nodes = 0;              // partial families explored
  bool exhaustive = false;            // set when the whole tree was searched
  std::optional<bool> derangement_crosscheck;  // K = 2: no family iff no derangement
};

bool is_latin_family(const std::vector<Perm>& members);

/// Backtracking with σ_1 = identity and strictly increasing enumeration
/// indices, so the first hit is the lexicographic minimum. K is taken from
/// the (required) quasi-transitive orbit structure.
LatinSearchResult latin_family_search(const PermGroup& g);

std::vector<Perm> derangement_scan(const PermGroup& g);

/// Classical quasi-flat model over X = G: P_ij(x) = E_kk for the unique k
/// with σ_k(x(j)) = i. Verifies magic, quasi-flat and stationary (ℓ = 2).
MatrixModel<Cyc> classical_model_from_family(const PermGroup& g, const std::vector<Perm>& family);

/// N×N array over {0 = ∗, 1..K}: cell (i,j) = k iff σ_k(j) = i.
struct SparseLatinSquare {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<std::size_t> cells;
  std::size_t operator()(std::size_t i, std::size_t j) const { return cells[i * n + j]; }
};

SparseLatinSquare latin_square_from_family(const std::vector<Perm>& family);
std::vector<Perm> family_from_latin_square(const SparseLatinSquare& sq);

}  // namespace qgm
