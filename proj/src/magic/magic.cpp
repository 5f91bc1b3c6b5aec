#include "qgm/magic/magic.hpp"

#include <algorithm>
#include <numeric>

#include "qgm/exact/linalg.hpp"

namespace qgm {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

template <class S>
bool entry_nonzero(const Matrix<S>& m, double tol) {
  return !m.is_zero(tol);
}

}  // namespace

const char* orbit_source_name(OrbitSource s) {
  switch (s) {
    case OrbitSource::Classical: return "classical";
    case OrbitSource::Dual: return "dual";
    case OrbitSource::Model: return "model";
  }
  return "?";
}

OrbitStructure OrbitStructure::from_blocks(std::vector<std::vector<std::size_t>> blocks, std::size_t n,
                                           OrbitSource src) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  OrbitStructure o;
  o.block_of.assign(n, n);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    for (auto i : blocks[k]) {
      if (i >= n || o.block_of[i] != n) throw Error(Errc::InvalidArgument, "blocks do not partition the index set");
      o.block_of[i] = k;
    }
  }
  if (std::find(o.block_of.begin(), o.block_of.end(), n) != o.block_of.end()) {
    throw Error(Errc::InvalidArgument, "blocks do not cover the index set");
  }
  o.blocks = std::move(blocks);
  o.source = src;
  o.quasi_transitive = !o.blocks.empty() && std::all_of(o.blocks.begin(), o.blocks.end(), [&](const auto& b) {
    return b.size() == o.blocks.front().size();
  });
  o.common_size = o.quasi_transitive ? o.blocks.front().size() : 0;
  o.lower_bound = src == OrbitSource::Model;
  return o;
}

OrbitStructure orbits_from_source(const PermGroup& g) {
  return OrbitStructure::from_blocks(orbits_classical(g), g.degree(), OrbitSource::Classical);
}

OrbitStructure orbits_from_dual(const std::vector<std::size_t>& sizes) {
  std::vector<std::vector<std::size_t>> blocks;
  std::size_t next = 0;
  for (auto s : sizes) {
    if (s == 0) throw Error(Errc::InvalidArgument, "empty block");
    std::vector<std::size_t> b(s);
    std::iota(b.begin(), b.end(), next);
    next += s;
    blocks.push_back(std::move(b));
  }
  return OrbitStructure::from_blocks(std::move(blocks), next, OrbitSource::Dual);
}

template <class S>
OrbitStructure orbits_from_model(const MatrixModel<S>& model, double tol) {
  model.validate();
  UnionFind uf(model.size);
  for (std::size_t x = 0; x < model.points(); ++x) {
    for (std::size_t i = 0; i < model.size; ++i) {
      for (std::size_t j = 0; j < model.size; ++j) {
        if (uf.find(i) != uf.find(j) && entry_nonzero(model.entry(x, i, j), tol)) uf.unite(i, j);
      }
    }
  }
  std::vector<std::vector<std::size_t>> blocks(model.size);
  for (std::size_t i = 0; i < model.size; ++i) blocks[uf.find(i)].push_back(i);
  std::erase_if(blocks, [](const auto& b) { return b.empty(); });
  return OrbitStructure::from_blocks(std::move(blocks), model.size, OrbitSource::Model);
}

template <class S>
MagicReport verify_magic(const MatrixModel<S>& model, double tol) {
  model.validate();
  MagicReport rep;
  const auto n = model.size;
  const auto id = Matrix<S>::identity(model.dim);
  for (std::size_t x = 0; x < model.points(); ++x) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!is_projection(model.entry(x, i, j), tol)) rep.violations.push_back({x, "not-projection", i, j});
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      Matrix<S> row(model.dim, model.dim), col(model.dim, model.dim);
      for (std::size_t j = 0; j < n; ++j) {
        row += model.entry(x, i, j);
        col += model.entry(x, j, i);
      }
      if (!row.near(id, tol)) rep.violations.push_back({x, "row-sum", i, 0});
      if (!col.near(id, tol)) rep.violations.push_back({x, "column-sum", i, 0});
    }
  }
  rep.pass = rep.violations.empty();
  return rep;
}

template <class S>
QuasiFlatReport quasi_flat_check(const MatrixModel<S>& model, const OrbitStructure& orbits, double tol) {
  model.validate();
  if (orbits.block_of.size() != model.size) throw Error(Errc::ShapeMismatch, "orbit structure has the wrong size");
  if (!orbits.quasi_transitive) throw Error(Errc::NotQuasiTransitive, "orbits have different sizes");
  if (orbits.common_size != model.dim) {
    throw Error(Errc::NotQuasiTransitive, "orbit size " + std::to_string(orbits.common_size) +
                                              " differs from model dimension " + std::to_string(model.dim));
  }
  QuasiFlatReport rep;
  rep.common_size = orbits.common_size;
  for (std::size_t x = 0; x < model.points(); ++x) {
    for (std::size_t i = 0; i < model.size; ++i) {
      for (std::size_t j = 0; j < model.size; ++j) {
        if (!orbits.same(i, j)) continue;
        auto r = rank(model.entry(x, i, j), tol);
        if (r != 1) rep.witnesses.push_back({x, i, j, r});
      }
    }
  }
  rep.quasi_flat = rep.witnesses.empty();
  return rep;
}

std::string word_to_string(const IndexWord& w) {
  if (w.empty()) return "1";
  std::string s;
  for (const auto& [i, j] : w) {
    if (!s.empty()) s += ' ';
    s += "u" + std::to_string(i + 1) + "," + std::to_string(j + 1);
  }
  return s;
}

Rational haar_word_classical(const PermGroup& g, const IndexWord& word) {
  for (const auto& [i, j] : word) {
    if (i >= g.degree() || j >= g.degree()) throw Error(Errc::InvalidArgument, "word index out of range");
  }
  std::size_t count = 0;
  for (const auto& s : g.elements()) {
    bool all = std::all_of(word.begin(), word.end(), [&](const auto& l) { return s(l.second) == l.first; });
    if (all) ++count;
  }
  return make_rational(static_cast<long>(count), static_cast<long>(g.order()));
}

namespace {

template <class S>
void finish_fixed_point(FixedPointResult<S>& r, const OrbitStructure& orbits, double tol) {
  using T = ScalarTraits<S>;
  const auto n = r.q.rows();
  r.is_projection = is_projection(r.q, tol);
  r.fixes_ones = true;
  for (std::size_t i = 0; i < n && r.fixes_ones; ++i) {
    S s = T::zero();
    for (std::size_t j = 0; j < n; ++j) s += r.q(i, j);
    if (!T::near(s, T::one(), tol)) r.fixes_ones = false;
  }
  r.matches_orbits = true;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      S want = orbits.same(i, j)
                   ? T::from_rational(Rational(1, static_cast<long>(orbits.blocks[orbits.block_of[i]].size())))
                   : T::zero();
      if (!T::near(r.q(i, j), want, tol)) r.matches_orbits = false;
    }
  }
}

}  // namespace

FixedPointResult<Cyc> fixed_point_matrix(const PermGroup& g) {
  const auto n = g.degree();
  std::vector<long> counts(n * n, 0);
  for (const auto& s : g.elements()) {
    for (std::size_t j = 0; j < n; ++j) ++counts[s(j) * n + j];
  }
  FixedPointResult<Cyc> r;
  r.q = ExactMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) r.q(i, j) = Cyc(make_rational(static_cast<long>(counts[i * n + j]), static_cast<long>(g.order())));
  }
  finish_fixed_point(r, orbits_from_source(g), kDefaultTolerance);
  return r;
}

template <class S>
FixedPointResult<S> fixed_point_matrix(const MatrixModel<S>& model, const OrbitStructure& orbits, double tol) {
  model.validate();
  if (orbits.block_of.size() != model.size) throw Error(Errc::ShapeMismatch, "orbit structure has the wrong size");
  FixedPointResult<S> r;
  r.q = Matrix<S>(model.size, model.size);
  for (std::size_t i = 0; i < model.size; ++i) {
    for (std::size_t j = 0; j < model.size; ++j) r.q(i, j) = model.function(i, j).integrated_ntrace();
  }
  finish_fixed_point(r, orbits, tol);
  return r;
}

#define QGM_INSTANTIATE(S)                                                                            \
  template MagicReport verify_magic<S>(const MatrixModel<S>&, double);                              \
  template OrbitStructure orbits_from_model<S>(const MatrixModel<S>&, double);                      \
  template QuasiFlatReport quasi_flat_check<S>(const MatrixModel<S>&, const OrbitStructure&, double); \
  template FixedPointResult<S> fixed_point_matrix<S>(const MatrixModel<S>&, const OrbitStructure&, double);
QGM_INSTANTIATE(Cyc)
QGM_INSTANTIATE(Complex)
#undef QGM_INSTANTIATE

}  // namespace qgm
