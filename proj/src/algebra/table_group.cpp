#include "qgm/algebra/table_group.hpp"

#include "qgm/error.hpp"

namespace qgm {

TableGroup::TableGroup(const std::vector<std::vector<std::size_t>>& table) : order_(table.size()) {
  if (order_ == 0) throw Error(Errc::InvalidArgument, "empty group table");
  mul_.resize(order_ * order_);
  inv_.assign(order_, order_);
  for (std::size_t a = 0; a < order_; ++a) {
    if (table[a].size() != order_) throw Error(Errc::ShapeMismatch, "group table is not square");
    std::vector<bool> seen(order_, false);
    for (std::size_t b = 0; b < order_; ++b) {
      auto c = table[a][b];
      if (c >= order_ || seen[c]) throw Error(Errc::InvalidArgument, "group table row is not a permutation");
      seen[c] = true;
      mul_[a * order_ + b] = c;
      if (c == 0) inv_[a] = b;
    }
  }
  for (std::size_t a = 0; a < order_; ++a) {
    if (mul_[a] != a || mul_[a * order_] != a) throw Error(Errc::InvalidArgument, "element 0 is not the identity");
  }
}

std::size_t TableGroup::power(std::size_t a, long long e) const {
  if (e < 0) {
    a = inverse(a);
    e = -e;
  }
  std::size_t r = 0;
  for (long long i = 0; i < e; ++i) r = multiply(r, a);
  return r;
}

std::size_t TableGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != 0; x = multiply(x, a)) ++k;
  return k;
}

bool TableGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = a + 1; b < order_; ++b) {
      if (multiply(a, b) != multiply(b, a)) return false;
    }
  }
  return true;
}

bool TableGroup::is_associative() const {
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      auto ab = multiply(a, b);
      for (std::size_t c = 0; c < order_; ++c) {
        if (multiply(ab, c) != multiply(a, multiply(b, c))) return false;
      }
    }
  }
  return true;
}

TableGroup semidirect(const TableGroup& l, const std::vector<std::size_t>& sigma, std::size_t k) {
  const auto n = l.order();
  if (k == 0) throw Error(Errc::InvalidArgument, "semidirect: K must be positive");
  if (sigma.size() != n) throw Error(Errc::ShapeMismatch, "semidirect: automorphism map has wrong size");
  // powers[t][y] = σ^t(y)
  std::vector<std::vector<std::size_t>> powers(k + 1, std::vector<std::size_t>(n));
  for (std::size_t y = 0; y < n; ++y) powers[0][y] = y;
  for (std::size_t t = 1; t <= k; ++t) {
    for (std::size_t y = 0; y < n; ++y) powers[t][y] = sigma[powers[t - 1][y]];
  }
  for (std::size_t y = 0; y < n; ++y) {
    if (powers[k][y] != y) throw Error(Errc::OrderMismatch, "sigma^K is not the identity");
  }
  std::vector<std::vector<std::size_t>> table(n * k, std::vector<std::size_t>(n * k));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t t = 0; t < k; ++t) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t s = 0; s < k; ++s) {
          table[x * k + t][y * k + s] = l.multiply(x, powers[t][y]) * k + (t + s) % k;
        }
      }
    }
  }
  return TableGroup(table);
}

}  // namespace qgm
