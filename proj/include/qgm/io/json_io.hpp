#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qgm/algebra/abelian.hpp"
#include "qgm/algebra/perm_group.hpp"
#include "qgm/magic/model.hpp"
#include "qgm/thoma/induced.hpp"

namespace qgm::io {

using json = nlohmann::json;

json load_file(const std::string& path);

// Scalars: rationals as "p/q" strings (plain integers accepted), other
// cyclotomics as {"order": n, "coeffs": ["p/q", ...]}; floats as [re, im].
Rational rational_from_json(const json& j);
json to_json(const Rational& q);
Cyc cyc_from_json(const json& j);
json to_json(const Cyc& c);
json to_json(const Complex& z);

ExactMatrix matrix_from_json(const json& j);
template <class S>
json to_json(const Matrix<S>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(i, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Permutations as 1-based image lists.
Perm perm_from_json(const json& j, std::size_t degree);
json to_json(const Perm& p);
PermGroup group_from_json(const json& j, std::size_t cap = kDefaultCap);
json to_json(const PermGroup& g);  // {"degree", "generators"}
std::vector<Perm> perms_from_json(const json& j, std::size_t degree);

FinAbelian abelian_from_json(const json& j);  // {"factors": [...]}, 0 = free
json to_json(const FinAbelian& a);

/// {"lambda": {"factors"}, "phi": group, "action": [integer matrix per Φ generator]}
SplitExtension split_from_json(const json& j, std::size_t cap = kDefaultCap);

/// {"size": N, "dim": K, "points": [{"weight": "p/q", "entries": [[matrix]]}]}
MatrixModel<Cyc> model_from_json(const json& j);
template <class S>
json to_json(const MatrixModel<S>& m) {
  json pts = json::array();
  for (std::size_t x = 0; x < m.points(); ++x) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size; ++i) {
      json row = json::array();
      for (std::size_t c = 0; c < m.size; ++c) row.push_back(to_json(m.entry(x, i, c)));
      rows.push_back(std::move(row));
    }
    pts.push_back({{"weight", to_json(m.weights[x])}, {"entries", std::move(rows)}});
  }
  return {{"size", m.size}, {"dim", m.dim}, {"points", std::move(pts)}};
}

/// {"generators": [matrix, ...]}
std::vector<ExactMatrix> rep_from_json(const json& j);
json rep_to_json(const std::vector<ExactMatrix>& gens);

}  // namespace qgm::io
