#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qgm/algebra/perm_group.hpp"
#include "qgm/algebra/table_group.hpp"
#include "qgm/exact/cyclotomic.hpp"

namespace qgm {

/// Exponent tuple of an element of a finitely generated abelian group.
using Coords = std::vector<std::int64_t>;

/// Z_{d_1} × … × Z_{d_r}; a factor 0 stands for a free coordinate Z.
class FinAbelian {
 public:
  FinAbelian() = default;
  explicit FinAbelian(std::vector<std::int64_t> factors);

  const std::vector<std::int64_t>& factors() const { return factors_; }
  std::size_t rank() const { return factors_.size(); }
  bool has_free_part() const;
  /// Π d_i; throws FreePartPresent when a coordinate is free.
  std::size_t order() const;

  Coords identity() const { return Coords(factors_.size(), 0); }
  Coords reduce(Coords c) const;
  Coords add(const Coords& a, const Coords& b) const;
  Coords negate(const Coords& a) const;
  bool is_identity(const Coords& c) const;
  /// All elements, lexicographic in the exponent tuple.
  std::vector<Coords> elements() const;

  friend bool operator==(const FinAbelian&, const FinAbelian&) = default;

 private:
  std::vector<std::int64_t> factors_;
};

/// χ_a(λ) = Π_i ζ_{d_i}^{a_i λ_i}, evaluated in Q(ζ_n) with n = lcm(d_i).
class Character {
 public:
  Character(FinAbelian group, Coords exponents);

  const Coords& exponents() const { return exponents_; }
  std::size_t value_order() const { return order_; }
  Cyc operator()(const Coords& lambda) const;
  bool is_trivial() const;

 private:
  FinAbelian group_;
  Coords exponents_;
  std::size_t order_ = 1;
};

/// All |Λ| characters, in lexicographic order of their exponent tuples.
/// Throws FreePartPresent for infinite Λ.
std::vector<Character> abelian_dual(const FinAbelian& lambda);

/// An explicit isomorphism of a concrete finite abelian group with its
/// invariant-factor form, found by Smith normal form of the relations
/// between the given generators.
struct AbelianStructure {
  FinAbelian type;            // invariant factors d_1 | d_2 | …, all > 1
  std::vector<Coords> coords;  // coordinates of each element, by index
};

/// `left_step(i, x)` gives the index of g_i * x.
AbelianStructure abelian_structure(const TableGroup& g, const std::vector<std::size_t>& generators);
/// Throws NotAbelian.
AbelianStructure abelian_structure(const PermGroup& g);

/// Smith normal form of an integer matrix; returns the diagonal (with zeros
/// for the free rank) and fills `col_ops` with a unimodular Q such that
/// P·m·Q = diag for some unimodular P.
std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> m, std::size_t cols,
                                         std::vector<std::vector<std::int64_t>>& col_ops);

}  // namespace qgm
