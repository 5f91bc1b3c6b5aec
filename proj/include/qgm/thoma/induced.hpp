#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qgm/algebra/abelian.hpp"
#include "qgm/algebra/perm_group.hpp"
#include "qgm/exact/matrix.hpp"
#include "qgm/thoma/laurent.hpp"

namespace qgm {

/// The value of g ↦ Ind_Λ^Γ(·)(g) as a |Φ|×|Φ| matrix over the group algebra
/// of Λ: entry (x, y) is the monomial [x⁻¹ g y] when x⁻¹ g y ∈ Λ, else 0.
class InducedMatrix {
 public:
  InducedMatrix(std::size_t dim, const FinAbelian& lambda);

  std::size_t dim() const { return dim_; }
  LaurentElement& operator()(std::size_t x, std::size_t y) { return entries_[x * dim_ + y]; }
  const LaurentElement& operator()(std::size_t x, std::size_t y) const { return entries_[x * dim_ + y]; }

  /// Exactly one nonzero entry per row and column, each a single monomial.
  bool is_monomial() const;
  /// (1/dim) Σ_x [identity coefficient of entry (x, x)].
  Rational integrated_ntrace() const;

  friend InducedMatrix operator*(const InducedMatrix& a, const InducedMatrix& b);
  friend bool operator==(const InducedMatrix& a, const InducedMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t dim_;
  std::vector<LaurentElement> entries_;
};

/// χ applied entrywise: the matrix Ind_Λ^Γ(χ)(g).
ExactMatrix evaluate_at_character(const InducedMatrix& m, const Character& chi);

/// Finite Γ with a user-supplied abelian normal subgroup Λ.
class FiniteExtension {
 public:
  /// Throws NotSubgroup, NotNormal or NotAbelian.
  FiniteExtension(PermGroup gamma, PermGroup lambda);

  const PermGroup& gamma() const { return gamma_; }
  const PermGroup& lambda() const { return lambda_; }
  const std::vector<Perm>& representatives() const { return quotient_.representatives; }
  std::size_t index() const { return quotient_.representatives.size(); }
  const FinAbelian& lambda_type() const { return structure_.type; }
  std::optional<Coords> lambda_coords(const Perm& g) const;
  std::vector<Character> characters() const { return abelian_dual(structure_.type); }

  /// Throws NotInGroup.
  InducedMatrix induce(const Perm& g) const;

 private:
  PermGroup gamma_;
  PermGroup lambda_;
  QuotientData quotient_;
  AbelianStructure structure_;
};

/// Λ ⋊ Φ for Λ = Z^d × finite part, Φ a finite permutation group acting on Λ
/// through integer matrices (one per generator of Φ, acting on columns).
class SplitExtension {
 public:
  using IntMatrix = std::vector<std::vector<std::int64_t>>;
  struct Element {
    Coords lambda;
    std::size_t phi = 0;  // index into phi().elements()
    friend auto operator<=>(const Element&, const Element&) = default;
  };

  /// Throws NotWellDefined if the matrices do not define an action.
  SplitExtension(FinAbelian lambda, PermGroup phi, std::vector<IntMatrix> generator_actions);

  const FinAbelian& lambda_type() const { return lambda_; }
  const PermGroup& phi() const { return phi_; }
  std::size_t index() const { return phi_.order(); }

  Element identity() const { return {lambda_.identity(), 0}; }
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  Coords act(std::size_t phi, const Coords& v) const;
  /// Λ basis vectors, then the generators of Φ.
  std::vector<Element> generators() const;
  /// Distinct elements of word length ≤ max_len in the generators and their
  /// inverses, in breadth-first order.
  std::vector<Element> ball(std::size_t max_len) const;
  std::string describe(const Element& g) const;

  InducedMatrix induce(const Element& g) const;

 private:
  FinAbelian lambda_;
  PermGroup phi_;
  std::vector<IntMatrix> actions_;  // one per element of Φ
};

/// Σ_{x ∈ reps} δ_{x⁻¹gx ∈ Λ} χ(x⁻¹gx), cross-checked against the trace of the
/// induced matrix at χ (throws Inconsistent on disagreement).
Cyc frobenius_trace(const FiniteExtension& ext, const Character& chi, const Perm& g);

struct ThomaValue {
  std::string element;
  Rational value;       // (1/|Φ|) Σ_x ∫ π(g)_{xx}
  bool identity = false;
  bool ok = false;
};

struct ThomaCertificate {
  bool stationary = false;
  std::size_t index = 0;                   // |Φ|
  std::size_t lambda_order = 0;            // 0 when Λ has a free part
  std::vector<ThomaValue> values;
  std::optional<std::size_t> first_failure;  // index into values
  /// Finite case only: (1/|Λ|) Σ_χ Tr Ind(χ)(g) = |Φ| δ_{g,e} and the
  /// Frobenius formula matched the induced trace for every (g, χ).
  std::optional<bool> character_average_agrees;
  std::optional<bool> frobenius_agrees;
  std::size_t frobenius_pairs = 0;
};

ThomaCertificate check_stationarity(const FiniteExtension& ext);
ThomaCertificate check_stationarity(const SplitExtension& ext, std::size_t max_word_len = 4);

}  // namespace qgm
