#pragma once

#include <map>

#include "qgm/algebra/abelian.hpp"
#include "qgm/exact/rational.hpp"

namespace qgm {

/// A finitely supported element Σ c_λ [λ] of the group algebra of an abelian
/// group Λ (free coordinates allowed).
///
/// Through Fourier duality this stands for the function χ ↦ Σ c_λ χ(λ) on
/// the dual group, so integrating over the dual is reading the coefficient
/// of the identity.
class LaurentElement {
 public:
  explicit LaurentElement(FinAbelian group = FinAbelian()) : group_(std::move(group)) {}
  static LaurentElement monomial(const FinAbelian& group, const Coords& lambda, const Rational& c = 1);

  const FinAbelian& group() const { return group_; }
  const std::map<Coords, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1 && terms_.begin()->second == 1; }

  Rational identity_coefficient() const;
  /// Σ c_λ χ(λ); throws FreePartPresent for groups with a free coordinate.
  Cyc evaluate(const Character& chi) const;

  LaurentElement& operator+=(const LaurentElement& b);
  friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) { return a += b; }
  friend LaurentElement operator*(const LaurentElement& a, const LaurentElement& b);
  friend bool operator==(const LaurentElement& a, const LaurentElement& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  FinAbelian group_;
  std::map<Coords, Rational> terms_;
};

}  // namespace qgm
