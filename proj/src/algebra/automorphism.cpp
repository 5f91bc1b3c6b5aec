#include "qgm/algebra/automorphism.hpp"

#include <numeric>

#include "qgm/error.hpp"

namespace qgm {

AutoMap AutoMap::identity(const PermGroup& g) {
  std::vector<std::size_t> map(g.order());
  std::iota(map.begin(), map.end(), 0);
  return AutoMap(g.generators(), std::move(map));
}

AutoMap AutoMap::then(const AutoMap& next) const {
  std::vector<std::size_t> m(map_.size());
  for (std::size_t x = 0; x < map_.size(); ++x) m[x] = next.map_[map_[x]];
  return AutoMap({}, std::move(m));
}

AutoMap AutoMap::inverse() const {
  std::vector<std::size_t> m(map_.size());
  for (std::size_t x = 0; x < map_.size(); ++x) m[map_[x]] = x;
  return AutoMap({}, std::move(m));
}

AutoMap AutoMap::power(long long k) const {
  if (k < 0) return inverse().power(-k);
  std::vector<std::size_t> m(map_.size());
  std::iota(m.begin(), m.end(), 0);
  AutoMap r({}, std::move(m));
  for (long long i = 0; i < k; ++i) r = r.then(*this);
  return r;
}

bool AutoMap::is_identity() const {
  for (std::size_t x = 0; x < map_.size(); ++x) {
    if (map_[x] != x) return false;
  }
  return true;
}

std::size_t AutoMap::order() const {
  std::size_t k = 1;
  for (AutoMap p = *this; !p.is_identity(); p = p.then(*this)) ++k;
  return k;
}

AutoMap extend_automorphism(const PermGroup& g, const std::vector<Perm>& generator_images) {
  const auto& gens = g.generators();
  if (generator_images.size() != gens.size()) {
    throw Error(Errc::InvalidArgument, "need one image per generator");
  }
  std::vector<std::size_t> image_index;
  for (const auto& h : generator_images) {
    auto idx = g.index_of(h);
    if (!idx) throw Error(Errc::NotInGroup, "image " + h.to_string() + " is not in the group");
    image_index.push_back(*idx);
  }
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> map(g.order(), unset);
  map[0] = 0;
  auto image_of_step = [&](std::size_t x, std::size_t i) {
    return *g.index_of(generator_images[i] * g.element(map[x]));
  };
  cayley_walk(
      g.order(), gens.size(), [&](std::size_t i, std::size_t x) { return g.left_step(i, x); },
      [&](std::size_t x, std::size_t i, std::size_t y) { map[y] = image_of_step(x, i); },
      [&](std::size_t x, std::size_t i, std::size_t y) {
        if (map[y] != image_of_step(x, i)) {
          throw Error(Errc::NotWellDefined, "conflicting images for " + g.element(y).to_string());
        }
      });
  std::vector<bool> hit(g.order(), false);
  for (auto v : map) {
    if (hit[v]) throw Error(Errc::NotBijective, "generator images do not extend to a bijection");
    hit[v] = true;
  }
  return AutoMap(generator_images, std::move(map));
}

bool is_multiplicative(const PermGroup& g, const std::vector<std::size_t>& map) {
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      auto ab = *g.index_of(g.element(a) * g.element(b));
      if (map[ab] != *g.index_of(g.element(map[a]) * g.element(map[b]))) return false;
    }
  }
  return true;
}

}  // namespace qgm
