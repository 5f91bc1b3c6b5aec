#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qgm/algebra/perm.hpp"
#include "qgm/algebra/table_group.hpp"

namespace qgm {

/// |S_8|; every algorithm here assumes the group is fully enumerated.
inline constexpr std::size_t kDefaultCap = 20160;

/// A finite permutation group with all of its elements enumerated.
///
/// Elements are listed breadth-first from the identity, extending each
/// element x by g * x for the generators g in their given order. The
/// identity is always element 0.
class PermGroup {
 public:
  static PermGroup generate(std::size_t degree, std::vector<Perm> generators,
                            std::size_t cap = kDefaultCap);

  std::size_t degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p).has_value(); }
  /// Index of generators()[gen] * element(x).
  std::size_t left_step(std::size_t gen, std::size_t x) const { return steps_[gen][x]; }

  bool is_abelian() const;
  bool same_elements(const PermGroup& other) const;
  TableGroup table() const;

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, std::size_t, PermHash> index_;
  std::vector<std::vector<std::size_t>> steps_;
};

/// True iff g H g^{-1} = H for every generator g of `g`. Throws NotSubgroup.
bool is_normal(const PermGroup& h, const PermGroup& g);

struct QuotientData {
  /// One per coset: the first element of the coset in G's enumeration order.
  std::vector<Perm> representatives;
  /// Coset index of each element of G.
  std::vector<std::size_t> coset_of;
  TableGroup table;
};

/// G / Λ. Throws NotNormal.
QuotientData quotient_data(const PermGroup& g, const PermGroup& lambda);

/// Orbits of G on {0..N-1}, each block sorted, blocks ordered by minimum.
std::vector<std::vector<std::size_t>> orbits_classical(const PermGroup& g);

/// Smallest normal subgroup of G containing `seeds`.
PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seeds);
/// [G, G], as the normal closure of the generator commutators.
PermGroup derived_subgroup(const PermGroup& g);

/// Breadth-first walk of a Cayley graph given by `step(gen, x)`.
///
/// `on_new(x, gen, y)` fires the first time y is reached (a spanning-tree
/// edge), `on_seen(x, gen, y)` for every other edge. Vertices are visited in
/// index order when the indices are the BFS order of the same generators.
template <class Step, class OnNew, class OnSeen>
void cayley_walk(std::size_t order, std::size_t gens, Step step, OnNew on_new, OnSeen on_seen) {
  std::vector<bool> seen(order, false);
  std::vector<std::size_t> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto x = queue[head];
    for (std::size_t i = 0; i < gens; ++i) {
      auto y = step(i, x);
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
        on_new(x, i, y);
      } else {
        on_seen(x, i, y);
      }
    }
  }
}

}  // namespace qgm
