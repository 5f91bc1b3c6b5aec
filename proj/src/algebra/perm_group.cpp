#include "qgm/algebra/perm_group.hpp"

#include <algorithm>
#include <numeric>

#include "qgm/error.hpp"

namespace qgm {

PermGroup PermGroup::generate(std::size_t degree, std::vector<Perm> generators, std::size_t cap) {
  if (cap == 0) throw Error(Errc::InvalidArgument, "cap must be at least 1");
  for (const auto& g : generators) {
    if (g.degree() != degree) throw Error(Errc::DegreeMismatch, "generator " + g.to_string() + " has wrong degree");
  }
  PermGroup group;
  group.degree_ = degree;
  group.generators_ = std::move(generators);
  group.elements_.push_back(Perm::identity(degree));
  group.index_.emplace(group.elements_[0], 0);
  group.steps_.assign(group.generators_.size(), {});
  for (std::size_t head = 0; head < group.elements_.size(); ++head) {
    for (std::size_t i = 0; i < group.generators_.size(); ++i) {
      Perm y = group.generators_[i] * group.elements_[head];
      auto [it, inserted] = group.index_.emplace(y, group.elements_.size());
      if (inserted) {
        if (group.elements_.size() >= cap) {
          throw Error(Errc::CapExceeded, "closure exceeds cap of " + std::to_string(cap) + " elements");
        }
        group.elements_.push_back(std::move(y));
      }
      group.steps_[i].push_back(it->second);
    }
  }
  return group;
}

std::optional<std::size_t> PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool PermGroup::is_abelian() const {
  for (std::size_t a = 0; a < generators_.size(); ++a) {
    for (std::size_t b = a + 1; b < generators_.size(); ++b) {
      if (generators_[a] * generators_[b] != generators_[b] * generators_[a]) return false;
    }
  }
  return true;
}

bool PermGroup::same_elements(const PermGroup& other) const {
  if (order() != other.order() || degree_ != other.degree_) return false;
  return std::all_of(elements_.begin(), elements_.end(), [&](const Perm& p) { return other.contains(p); });
}

TableGroup PermGroup::table() const {
  std::vector<std::vector<std::size_t>> t(order(), std::vector<std::size_t>(order()));
  for (std::size_t a = 0; a < order(); ++a) {
    for (std::size_t b = 0; b < order(); ++b) t[a][b] = *index_of(elements_[a] * elements_[b]);
  }
  return TableGroup(t);
}

bool is_normal(const PermGroup& h, const PermGroup& g) {
  if (h.degree() != g.degree()) throw Error(Errc::DegreeMismatch, "subgroup degree differs");
  for (const auto& x : h.generators()) {
    if (!g.contains(x)) throw Error(Errc::NotSubgroup, x.to_string() + " is not in the ambient group");
  }
  for (const auto& s : g.generators()) {
    auto s_inv = s.inverse();
    for (const auto& x : h.generators()) {
      if (!h.contains(s * x * s_inv)) return false;
    }
  }
  return true;
}

QuotientData quotient_data(const PermGroup& g, const PermGroup& lambda) {
  if (!is_normal(lambda, g)) throw Error(Errc::NotNormal, "subgroup is not normal");
  QuotientData q;
  constexpr auto unset = static_cast<std::size_t>(-1);
  q.coset_of.assign(g.order(), unset);
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (q.coset_of[x] != unset) continue;
    auto c = q.representatives.size();
    q.representatives.push_back(g.element(x));
    for (const auto& l : lambda.elements()) q.coset_of[*g.index_of(g.element(x) * l)] = c;
  }
  const auto n = q.representatives.size();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a][b] = q.coset_of[*g.index_of(q.representatives[a] * q.representatives[b])];
    }
  }
  q.table = TableGroup(table);
  return q;
}

std::vector<std::vector<std::size_t>> orbits_classical(const PermGroup& g) {
  const auto n = g.degree();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& s : g.generators()) {
    for (std::size_t i = 0; i < n; ++i) {
      auto a = find(i);
      auto b = find(s(i));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> block_of_root(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto r = find(i);
    if (block_of_root[r] == n) {
      block_of_root[r] = blocks.size();
      blocks.emplace_back();
    }
    blocks[block_of_root[r]].push_back(i);
  }
  return blocks;
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seeds) {
  std::vector<Perm> gens;
  for (const auto& s : seeds) {
    if (!s.is_identity()) gens.push_back(s);
  }
  auto h = PermGroup::generate(g.degree(), gens, g.order());
  while (true) {
    std::vector<Perm> extra;
    for (const auto& s : g.generators()) {
      auto s_inv = s.inverse();
      for (const auto& x : h.generators()) {
        auto c = s * x * s_inv;
        if (!h.contains(c)) extra.push_back(c);
      }
    }
    if (extra.empty()) return h;
    auto next = h.generators();
    next.insert(next.end(), extra.begin(), extra.end());
    h = PermGroup::generate(g.degree(), std::move(next), g.order());
  }
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Perm> commutators;
  const auto& gens = g.generators();
  for (std::size_t a = 0; a < gens.size(); ++a) {
    for (std::size_t b = a + 1; b < gens.size(); ++b) {
      commutators.push_back(gens[a] * gens[b] * gens[a].inverse() * gens[b].inverse());
    }
  }
  return normal_closure(g, commutators);
}

}  // namespace qgm
