#include "qgm/quasiflat/latin.hpp"

#include <functional>

#include "qgm/magic/magic.hpp"
#include "qgm/magic/words.hpp"

namespace qgm {

bool is_latin_family(const std::vector<Perm>& members) {
  if (members.empty()) return false;
  const auto n = members[0].degree();
  for (std::size_t m = 0; m < n; ++m) {
    std::vector<bool> hit(n, false);
    for (const auto& s : members) {
      if (s.degree() != n || hit[s(m)]) return false;
      hit[s(m)] = true;
    }
  }
  return true;
}

std::vector<Perm> derangement_scan(const PermGroup& g) {
  std::vector<Perm> out;
  for (const auto& s : g.elements()) {
    if (s.is_derangement()) out.push_back(s);
  }
  return out;
}

LatinSearchResult latin_family_search(const PermGroup& g) {
  auto orbits = orbits_from_source(g);
  if (!orbits.quasi_transitive) throw Error(Errc::NotQuasiTransitive, "group orbits have different sizes");
  LatinSearchResult res;
  res.k = orbits.common_size;
  const auto n = g.degree();
  std::vector<std::size_t> chosen{0};
  // used[m] marks the values σ(m) already taken by the chosen members
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  for (std::size_t m = 0; m < n; ++m) used[m][m] = true;
  res.nodes = 1;

  std::function<bool()> extend = [&]() {
    if (chosen.size() == res.k) return true;
    for (std::size_t c = chosen.back() + 1; c < g.order(); ++c) {
      const auto& s = g.element(c);
      bool ok = true;
      for (std::size_t m = 0; m < n && ok; ++m) ok = !used[m][s(m)];
      if (!ok) continue;
      ++res.nodes;
      for (std::size_t m = 0; m < n; ++m) used[m][s(m)] = true;
      chosen.push_back(c);
      if (extend()) return true;
      chosen.pop_back();
      for (std::size_t m = 0; m < n; ++m) used[m][s(m)] = false;
    }
    return false;
  };

  if (extend()) {
    LatinFamily fam;
    fam.indices = chosen;
    for (auto c : chosen) fam.members.push_back(g.element(c));
    res.family = std::move(fam);
  } else {
    res.exhaustive = true;
  }
  if (res.k == 2) {
    bool none = derangement_scan(g).empty();
    res.derangement_crosscheck = none == !res.family.has_value();
    if (!*res.derangement_crosscheck) throw Error(Errc::Inconsistent, "search disagrees with the derangement scan");
  }
  return res;
}

MatrixModel<Cyc> classical_model_from_family(const PermGroup& g, const std::vector<Perm>& family) {
  for (const auto& s : family) {
    if (!g.contains(s)) throw Error(Errc::InvalidFamily, s.to_string() + " is not in the group");
  }
  if (!is_latin_family(family)) throw Error(Errc::InvalidFamily, "family values are not pointwise distinct");
  auto orbits = orbits_from_source(g);
  if (!orbits.quasi_transitive || orbits.common_size != family.size()) {
    throw Error(Errc::InvalidFamily, "family size differs from the common orbit size");
  }
  const auto n = g.degree();
  const auto k = family.size();
  MatrixModel<Cyc> model;
  model.size = n;
  model.dim = k;
  for (const auto& x : g.elements()) {
    model.weights.emplace_back(1, static_cast<long>(g.order()));
    std::vector<ExactMatrix> fiber(n * n, ExactMatrix(k, k));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t c = 0; c < k; ++c) fiber[family[c](x(j)) * n + j](c, c) = Cyc(1);
    }
    model.fibers.push_back(std::move(fiber));
  }
  if (!verify_magic(model).pass) throw Error(Errc::Inconsistent, "family model is not magic");
  if (!quasi_flat_check(model, orbits).quasi_flat) throw Error(Errc::Inconsistent, "family model is not quasi-flat");
  if (!stationarity_check(g, model, 2).pass) throw Error(Errc::Inconsistent, "family model is not stationary");
  return model;
}

SparseLatinSquare latin_square_from_family(const std::vector<Perm>& family) {
  if (!is_latin_family(family)) throw Error(Errc::InvalidFamily, "family values are not pointwise distinct");
  SparseLatinSquare sq;
  sq.n = family[0].degree();
  sq.k = family.size();
  sq.cells.assign(sq.n * sq.n, 0);
  for (std::size_t c = 0; c < sq.k; ++c) {
    for (std::size_t j = 0; j < sq.n; ++j) sq.cells[family[c](j) * sq.n + j] = c + 1;
  }
  return sq;
}

std::vector<Perm> family_from_latin_square(const SparseLatinSquare& sq) {
  if (sq.cells.size() != sq.n * sq.n) throw Error(Errc::ShapeMismatch, "latin square has the wrong size");
  std::vector<std::vector<std::uint32_t>> img(sq.k, std::vector<std::uint32_t>(sq.n, sq.n));
  for (std::size_t i = 0; i < sq.n; ++i) {
    for (std::size_t j = 0; j < sq.n; ++j) {
      auto c = sq(i, j);
      if (c == 0) continue;
      if (c > sq.k || img[c - 1][j] != sq.n) throw Error(Errc::InvalidFamily, "symbol repeated in a column");
      img[c - 1][j] = static_cast<std::uint32_t>(i);
    }
  }
  std::vector<Perm> family;
  for (auto& v : img) {
    try {
      family.emplace_back(v);
    } catch (const Error&) {
      throw Error(Errc::InvalidFamily, "symbol does not define a permutation");
    }
  }
  return family;
}

}  // namespace qgm
