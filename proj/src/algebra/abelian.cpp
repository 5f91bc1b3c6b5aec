#include "qgm/algebra/abelian.hpp"

#include <cstdlib>
#include <numeric>

#include "qgm/error.hpp"

namespace qgm {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t d) {
  auto r = a % d;
  return r < 0 ? r + d : r;
}

}  // namespace

FinAbelian::FinAbelian(std::vector<std::int64_t> factors) : factors_(std::move(factors)) {
  for (auto d : factors_) {
    if (d < 0) throw Error(Errc::InvalidArgument, "negative invariant factor");
  }
}

bool FinAbelian::has_free_part() const {
  for (auto d : factors_) {
    if (d == 0) return true;
  }
  return false;
}

std::size_t FinAbelian::order() const {
  if (has_free_part()) throw Error(Errc::FreePartPresent, "group has a free part");
  std::size_t n = 1;
  for (auto d : factors_) n *= static_cast<std::size_t>(d);
  return n;
}

Coords FinAbelian::reduce(Coords c) const {
  if (c.size() != factors_.size()) throw Error(Errc::ShapeMismatch, "coordinate tuple has wrong length");
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (factors_[i] != 0) c[i] = mod_floor(c[i], factors_[i]);
  }
  return c;
}

Coords FinAbelian::add(const Coords& a, const Coords& b) const {
  Coords c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return reduce(std::move(c));
}

Coords FinAbelian::negate(const Coords& a) const {
  Coords c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
  return reduce(std::move(c));
}

bool FinAbelian::is_identity(const Coords& c) const {
  auto r = reduce(c);
  for (auto v : r) {
    if (v != 0) return false;
  }
  return true;
}

std::vector<Coords> FinAbelian::elements() const {
  const auto n = order();
  std::vector<Coords> out;
  out.reserve(n);
  Coords cur = identity();
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(cur);
    for (std::size_t i = cur.size(); i-- > 0;) {
      if (++cur[i] < factors_[i]) break;
      cur[i] = 0;
    }
  }
  return out;
}

Character::Character(FinAbelian group, Coords exponents)
    : group_(std::move(group)), exponents_(std::move(exponents)) {
  if (group_.has_free_part()) throw Error(Errc::FreePartPresent, "characters of a group with free part");
  exponents_ = group_.reduce(exponents_);
  for (auto d : group_.factors()) order_ = std::lcm(order_, static_cast<std::size_t>(d));
}

Cyc Character::operator()(const Coords& lambda) const {
  auto l = group_.reduce(lambda);
  const auto n = static_cast<std::int64_t>(order_);
  std::int64_t e = 0;
  for (std::size_t i = 0; i < l.size(); ++i) {
    auto d = group_.factors()[i];
    e = mod_floor(e + exponents_[i] * l[i] % d * (n / d), n);
  }
  return Cyc::zeta(order_, e);
}

bool Character::is_trivial() const {
  for (auto a : exponents_) {
    if (a != 0) return false;
  }
  return true;
}

std::vector<Character> abelian_dual(const FinAbelian& lambda) {
  std::vector<Character> out;
  for (auto& e : lambda.elements()) out.emplace_back(lambda, e);
  return out;
}

std::vector<std::int64_t> smith_diagonal(std::vector<std::vector<std::int64_t>> m, std::size_t cols,
                                         std::vector<std::vector<std::int64_t>>& q) {
  const auto rows = m.size();
  q.assign(cols, std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) q[i][i] = 1;
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (auto& r : m) std::swap(r[a], r[b]);
    for (auto& r : q) std::swap(r[a], r[b]);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, std::int64_t f) {  // col_dst += f col_src
    for (auto& r : m) r[dst] += f * r[src];
    for (auto& r : q) r[dst] += f * r[src];
  };
  auto add_row = [&](std::size_t dst, std::size_t src, std::int64_t f) {
    for (std::size_t j = 0; j < cols; ++j) m[dst][j] += f * m[src][j];
  };

  std::vector<std::int64_t> diag(cols, 0);
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // smallest nonzero entry of the remaining block becomes the pivot
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (m[i][j] != 0 && (pi == rows || std::llabs(m[i][j]) < std::llabs(m[pi][pj]))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) return diag;
      std::swap(m[t], m[pi]);
      if (pj != t) swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        add_row(i, t, -(m[i][t] / m[t][t]));
        clean = clean && m[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        add_col(j, t, -(m[t][j] / m[t][t]));
        clean = clean && m[t][j] == 0;
      }
      if (!clean) continue;

      // divisibility: fold a non-divisible row into the pivot row and retry
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            add_row(t, i, 1);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    diag[t] = std::llabs(m[t][t]);
  }
  return diag;
}

namespace {

template <class Step>
AbelianStructure structure_from_cayley(std::size_t order, std::size_t gens, Step step) {
  std::vector<Coords> vec(order);
  vec[0] = Coords(gens, 0);
  std::vector<std::vector<std::int64_t>> relations;
  std::size_t reached = 1;
  cayley_walk(
      order, gens, step,
      [&](std::size_t x, std::size_t i, std::size_t y) {
        vec[y] = vec[x];
        vec[y][i] += 1;
        ++reached;
      },
      [&](std::size_t x, std::size_t i, std::size_t y) {
        auto rel = vec[x];
        rel[i] += 1;
        for (std::size_t k = 0; k < gens; ++k) rel[k] -= vec[y][k];
        relations.push_back(std::move(rel));
      });
  if (reached != order) throw Error(Errc::InvalidArgument, "generators do not generate the group");

  std::vector<std::vector<std::int64_t>> q;
  auto diag = smith_diagonal(relations, gens, q);
  std::vector<std::size_t> kept;
  std::vector<std::int64_t> factors;
  for (std::size_t i = 0; i < gens; ++i) {
    if (diag[i] == 0) throw Error(Errc::Inconsistent, "finite group produced a free coordinate");
    if (diag[i] != 1) {
      kept.push_back(i);
      factors.push_back(diag[i]);
    }
  }
  AbelianStructure s{FinAbelian(factors), std::vector<Coords>(order)};
  for (std::size_t x = 0; x < order; ++x) {
    Coords w(kept.size(), 0);
    for (std::size_t k = 0; k < kept.size(); ++k) {
      for (std::size_t j = 0; j < gens; ++j) w[k] += vec[x][j] * q[j][kept[k]];
    }
    s.coords[x] = s.type.reduce(std::move(w));
  }
  if (s.type.order() != order) throw Error(Errc::Inconsistent, "invariant factors do not multiply to the group order");
  return s;
}

}  // namespace

AbelianStructure abelian_structure(const TableGroup& g, const std::vector<std::size_t>& generators) {
  if (!g.is_abelian()) throw Error(Errc::NotAbelian, "group table is not commutative");
  return structure_from_cayley(g.order(), generators.size(),
                               [&](std::size_t i, std::size_t x) { return g.multiply(generators[i], x); });
}

AbelianStructure abelian_structure(const PermGroup& g) {
  if (!g.is_abelian()) throw Error(Errc::NotAbelian, "generators do not commute");
  return structure_from_cayley(g.order(), g.generators().size(),
                               [&](std::size_t i, std::size_t x) { return g.left_step(i, x); });
}

}  // namespace qgm
