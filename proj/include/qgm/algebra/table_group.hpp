#pragma once

#include <cstddef>
#include <vector>

namespace qgm {

/// A finite group given by its multiplication table; element 0 is the identity.
class TableGroup {
 public:
  TableGroup() = default;
  /// `table[a][b]` is the index of a*b. Throws if the table is not a Latin
  /// square with identity 0.
  explicit TableGroup(const std::vector<std::vector<std::size_t>>& table);

  std::size_t order() const { return order_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return mul_[a * order_ + b]; }
  std::size_t inverse(std::size_t a) const { return inv_[a]; }
  std::size_t power(std::size_t a, long long e) const;
  std::size_t element_order(std::size_t a) const;
  bool is_abelian() const;
  /// Exhaustive associativity check, O(n^3).
  bool is_associative() const;

 private:
  std::size_t order_ = 0;
  std::vector<std::size_t> mul_;
  std::vector<std::size_t> inv_;
};

/// L ⋊ Z_K with (x, t)(y, s) = (x σ^t(y), t + s).
///
/// `sigma[x]` is the image of element x. The pair (x, t) is stored at index
/// x * k + t, so the identity stays at 0. Throws OrderMismatch if σ^k ≠ id.
TableGroup semidirect(const TableGroup& l, const std::vector<std::size_t>& sigma, std::size_t k);

}  // namespace qgm
