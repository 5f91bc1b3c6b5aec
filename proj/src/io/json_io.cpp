#include "qgm/io/json_io.hpp"

#include <fstream>

namespace qgm::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Errc::Parse, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t size_field(const json& j, const char* key) {
  const auto& v = field(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    bad(std::string("field \"") + key + "\" must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    bad(path + ": " + e.what());
  }
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad("expected a rational \"p/q\"");
}

json to_json(const Rational& q) { return format_rational(q); }

Cyc cyc_from_json(const json& j) {
  if (j.is_object()) {
    auto n = size_field(j, "order");
    if (n == 0) bad("cyclotomic order must be positive");
    const auto& c = field(j, "coeffs");
    if (!c.is_array() || c.size() > n) bad("coeffs must be an array of at most order entries");
    std::vector<Rational> coeffs;
    for (const auto& x : c) coeffs.push_back(rational_from_json(x));
    return Cyc::from_coeffs(n, std::move(coeffs));
  }
  return Cyc(rational_from_json(j));
}

json to_json(const Cyc& c) {
  auto r = c.canonical();
  if (auto q = r.as_rational()) return to_json(*q);
  json coeffs = json::array();
  for (const auto& q : r.coeffs()) coeffs.push_back(to_json(q));
  return {{"order", r.order()}, {"coeffs", std::move(coeffs)}};
}

json to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

ExactMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  std::vector<std::vector<Cyc>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) bad("matrix row must be an array");
    std::vector<Cyc> row;
    for (const auto& x : r) row.push_back(cyc_from_json(x));
    rows.push_back(std::move(row));
  }
  try {
    return ExactMatrix::from_rows(rows);
  } catch (const Error& e) {
    bad(e.what());
  }
}

Perm perm_from_json(const json& j, std::size_t degree) {
  if (!j.is_array()) bad("permutation must be a list of 1-based images");
  std::vector<std::uint32_t> img;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long long>() < 1) bad("permutation images must be positive integers");
    img.push_back(static_cast<std::uint32_t>(x.get<long long>() - 1));
  }
  if (img.size() != degree) bad("permutation length differs from the degree");
  try {
    return Perm(std::move(img));
  } catch (const Error& e) {
    bad(e.what());
  }
}

json to_json(const Perm& p) {
  json a = json::array();
  for (auto x : p.one_based()) a.push_back(x);
  return a;
}

std::vector<Perm> perms_from_json(const json& j, std::size_t degree) {
  if (!j.is_array()) bad("expected a list of permutations");
  std::vector<Perm> out;
  for (const auto& p : j) out.push_back(perm_from_json(p, degree));
  return out;
}

PermGroup group_from_json(const json& j, std::size_t cap) {
  auto degree = size_field(j, "degree");
  return PermGroup::generate(degree, perms_from_json(field(j, "generators"), degree), cap);
}

json to_json(const PermGroup& g) {
  json gens = json::array();
  for (const auto& p : g.generators()) gens.push_back(to_json(p));
  return {{"degree", g.degree()}, {"generators", std::move(gens)}};
}

FinAbelian abelian_from_json(const json& j) {
  const auto& f = field(j, "factors");
  if (!f.is_array()) bad("factors must be an array");
  std::vector<std::int64_t> factors;
  for (const auto& x : f) {
    if (!x.is_number_integer() || x.get<long long>() < 0) bad("factors must be nonnegative integers");
    factors.push_back(x.get<std::int64_t>());
  }
  return FinAbelian(std::move(factors));
}

json to_json(const FinAbelian& a) { return {{"factors", a.factors()}}; }

SplitExtension split_from_json(const json& j, std::size_t cap) {
  auto lambda = abelian_from_json(field(j, "lambda"));
  auto phi = group_from_json(field(j, "phi"), cap);
  const auto& act = field(j, "action");
  if (!act.is_array()) bad("action must be a list of integer matrices");
  std::vector<SplitExtension::IntMatrix> mats;
  for (const auto& m : act) {
    try {
      mats.push_back(m.get<SplitExtension::IntMatrix>());
    } catch (const json::exception&) {
      bad("action matrices must hold integers");
    }
  }
  return SplitExtension(std::move(lambda), std::move(phi), std::move(mats));
}

MatrixModel<Cyc> model_from_json(const json& j) {
  MatrixModel<Cyc> m;
  m.size = size_field(j, "size");
  m.dim = size_field(j, "dim");
  const auto& pts = field(j, "points");
  if (!pts.is_array()) bad("points must be an array");
  for (const auto& p : pts) {
    m.weights.push_back(rational_from_json(field(p, "weight")));
    const auto& rows = field(p, "entries");
    if (!rows.is_array() || rows.size() != m.size) bad("entries must be an N×N array of matrices");
    std::vector<ExactMatrix> fiber;
    for (const auto& r : rows) {
      if (!r.is_array() || r.size() != m.size) bad("entries must be an N×N array of matrices");
      for (const auto& e : r) fiber.push_back(matrix_from_json(e));
    }
    m.fibers.push_back(std::move(fiber));
  }
  try {
    m.validate();
  } catch (const Error& e) {
    bad(e.what());
  }
  return m;
}

std::vector<ExactMatrix> rep_from_json(const json& j) {
  const auto& g = field(j, "generators");
  if (!g.is_array()) bad("generators must be an array of matrices");
  std::vector<ExactMatrix> out;
  for (const auto& m : g) out.push_back(matrix_from_json(m));
  return out;
}

json rep_to_json(const std::vector<ExactMatrix>& gens) {
  json a = json::array();
  for (const auto& m : gens) a.push_back(to_json(m));
  return {{"generators", std::move(a)}};
}

}  // namespace qgm::io
