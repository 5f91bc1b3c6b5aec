#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qgm/algebra/perm_group.hpp"

namespace qgm {

struct UniformCertificate {
  bool generates = false;             // (1)
  bool common_order = false;          // (2)
  std::size_t k = 0;                  // common order, 0 if none
  std::size_t m = 0;                  // number of generators
  std::vector<std::int64_t> abelianization;  // invariant factors of Γ/[Γ,Γ]
  bool quotient_onto_zkm = false;     // (3)
  bool symmetric = false;             // (4)
  std::vector<int> failing;           // conditions that fail, ascending
  std::vector<std::string> notes;

  bool uniform() const { return failing.empty(); }
};

/// Conditions: (1) the generators generate Γ, (2) common order K, (3) g_i ↦ e_i
/// extends to a homomorphism Γ → Z_K^M (tested on the abelianization),
/// (4) every transposition of generators extends to an automorphism.
UniformCertificate uniform_check(const PermGroup& gamma, const std::vector<Perm>& generators);

}  // namespace qgm
