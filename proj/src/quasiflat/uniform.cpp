#include "qgm/quasiflat/uniform.hpp"

#include "qgm/algebra/abelian.hpp"
#include "qgm/algebra/automorphism.hpp"
#include "qgm/error.hpp"

namespace qgm {

UniformCertificate uniform_check(const PermGroup& gamma, const std::vector<Perm>& generators) {
  UniformCertificate cert;
  cert.m = generators.size();
  if (generators.empty()) {
    cert.failing = {1, 2, 3, 4};
    cert.notes.push_back("no generators");
    return cert;
  }
  auto sub = PermGroup::generate(gamma.degree(), generators, gamma.order() + 1);
  cert.generates = sub.same_elements(gamma);
  if (!cert.generates) cert.notes.push_back("generators span a subgroup of order " + std::to_string(sub.order()));

  const auto k = generators[0].order();
  cert.common_order = true;
  for (const auto& g : generators) cert.common_order = cert.common_order && g.order() == k;
  cert.k = cert.common_order ? k : 0;

  // (3) on the abelianization of the generated group
  auto derived = derived_subgroup(sub);
  auto q = quotient_data(sub, derived);
  std::vector<std::size_t> gen_cosets;
  for (const auto& g : generators) gen_cosets.push_back(q.coset_of[*sub.index_of(g)]);
  cert.abelianization = abelian_structure(q.table, gen_cosets).type.factors();
  if (cert.common_order) {
    const auto kk = static_cast<std::int64_t>(k);
    std::vector<std::vector<std::int64_t>> image(q.table.order());
    image[0].assign(cert.m, 0);
    cert.quotient_onto_zkm = true;
    auto shifted = [&](std::size_t i, const std::vector<std::int64_t>& v) {
      auto w = v;
      w[i] = (w[i] + 1) % kk;
      return w;
    };
    cayley_walk(
        q.table.order(), cert.m, [&](std::size_t i, std::size_t x) { return q.table.multiply(gen_cosets[i], x); },
        [&](std::size_t x, std::size_t i, std::size_t y) { image[y] = shifted(i, image[x]); },
        [&](std::size_t x, std::size_t i, std::size_t y) {
          if (image[y] != shifted(i, image[x])) cert.quotient_onto_zkm = false;
        });
    if (!cert.quotient_onto_zkm) cert.notes.push_back("g_i -> e_i does not define a map onto Z_K^M");
  } else {
    cert.notes.push_back("generators do not share one order");
  }

  cert.symmetric = true;
  for (std::size_t i = 0; i < cert.m && cert.symmetric; ++i) {
    for (std::size_t j = i + 1; j < cert.m; ++j) {
      auto images = generators;
      std::swap(images[i], images[j]);
      try {
        extend_automorphism(sub, images);
      } catch (const Error& e) {
        cert.symmetric = false;
        cert.notes.push_back("swapping g" + std::to_string(i + 1) + " and g" + std::to_string(j + 1) +
                             " does not extend: " + e.what());
        break;
      }
    }
  }

  if (!cert.generates) cert.failing.push_back(1);
  if (!cert.common_order) cert.failing.push_back(2);
  if (!cert.quotient_onto_zkm) cert.failing.push_back(3);
  if (!cert.symmetric) cert.failing.push_back(4);
  return cert;
}

}  // namespace qgm
