#include "qgm/thoma/induced.hpp"

#include <set>

#include "qgm/error.hpp"

namespace qgm {

InducedMatrix::InducedMatrix(std::size_t dim, const FinAbelian& lambda)
    : dim_(dim), entries_(dim * dim, LaurentElement(lambda)) {}

bool InducedMatrix::is_monomial() const {
  std::vector<std::size_t> row_count(dim_, 0), col_count(dim_, 0);
  for (std::size_t x = 0; x < dim_; ++x) {
    for (std::size_t y = 0; y < dim_; ++y) {
      const auto& e = (*this)(x, y);
      if (e.is_zero()) continue;
      if (!e.is_monomial()) return false;
      ++row_count[x];
      ++col_count[y];
    }
  }
  for (std::size_t k = 0; k < dim_; ++k) {
    if (row_count[k] != 1 || col_count[k] != 1) return false;
  }
  return true;
}

Rational InducedMatrix::integrated_ntrace() const {
  Rational total = 0;
  for (std::size_t x = 0; x < dim_; ++x) total += (*this)(x, x).identity_coefficient();
  return total / static_cast<long>(dim_);
}

InducedMatrix operator*(const InducedMatrix& a, const InducedMatrix& b) {
  if (a.dim_ != b.dim_) throw Error(Errc::ShapeMismatch, "induced matrices differ in size");
  InducedMatrix c(a.dim_, a.entries_.empty() ? FinAbelian() : a.entries_[0].group());
  for (std::size_t x = 0; x < a.dim_; ++x) {
    for (std::size_t k = 0; k < a.dim_; ++k) {
      if (a(x, k).is_zero()) continue;
      for (std::size_t y = 0; y < a.dim_; ++y) {
        if (b(k, y).is_zero()) continue;
        c(x, y) += a(x, k) * b(k, y);
      }
    }
  }
  return c;
}

ExactMatrix evaluate_at_character(const InducedMatrix& m, const Character& chi) {
  ExactMatrix out(m.dim(), m.dim());
  for (std::size_t x = 0; x < m.dim(); ++x) {
    for (std::size_t y = 0; y < m.dim(); ++y) {
      if (!m(x, y).is_zero()) out(x, y) = m(x, y).evaluate(chi);
    }
  }
  return out;
}

// ---- finite extensions ------------------------------------------------------

FiniteExtension::FiniteExtension(PermGroup gamma, PermGroup lambda)
    : gamma_(std::move(gamma)), lambda_(std::move(lambda)) {
  if (!is_normal(lambda_, gamma_)) throw Error(Errc::NotNormal, "Λ is not normal in Γ");
  if (!lambda_.is_abelian()) throw Error(Errc::NotAbelian, "Λ is not abelian");
  quotient_ = quotient_data(gamma_, lambda_);
  structure_ = abelian_structure(lambda_);
}

std::optional<Coords> FiniteExtension::lambda_coords(const Perm& g) const {
  auto idx = lambda_.index_of(g);
  if (!idx) return std::nullopt;
  return structure_.coords[*idx];
}

InducedMatrix FiniteExtension::induce(const Perm& g) const {
  if (!gamma_.contains(g)) throw Error(Errc::NotInGroup, g.to_string() + " is not in Γ");
  const auto& reps = representatives();
  InducedMatrix m(reps.size(), lambda_type());
  for (std::size_t x = 0; x < reps.size(); ++x) {
    auto xg = reps[x].inverse() * g;
    for (std::size_t y = 0; y < reps.size(); ++y) {
      if (auto c = lambda_coords(xg * reps[y])) m(x, y) = LaurentElement::monomial(lambda_type(), *c);
    }
  }
  return m;
}

Cyc frobenius_trace(const FiniteExtension& ext, const Character& chi, const Perm& g) {
  Cyc total;
  for (const auto& x : ext.representatives()) {
    if (auto c = ext.lambda_coords(x.inverse() * g * x)) total += chi(*c);
  }
  auto induced_trace = evaluate_at_character(ext.induce(g), chi).trace();
  if (!(total == induced_trace)) {
    throw Error(Errc::Inconsistent, "Frobenius formula disagrees with the induced trace at " + g.to_string());
  }
  return total;
}

ThomaCertificate check_stationarity(const FiniteExtension& ext) {
  ThomaCertificate cert;
  cert.index = ext.index();
  cert.lambda_order = ext.lambda().order();
  const auto chars = ext.characters();
  bool average_ok = true;
  bool frobenius_ok = true;
  for (const auto& g : ext.gamma().elements()) {
    auto pi = ext.induce(g);
    ThomaValue v{g.to_string(), pi.integrated_ntrace(), g.is_identity(), false};
    v.ok = v.value == (v.identity ? 1 : 0);
    if (!v.ok && !cert.first_failure) cert.first_failure = cert.values.size();
    cert.values.push_back(std::move(v));

    Cyc sum;
    for (const auto& chi : chars) {
      sum += evaluate_at_character(pi, chi).trace();
      try {
        frobenius_trace(ext, chi, g);
      } catch (const Error& e) {
        if (e.code() != Errc::Inconsistent) throw;
        frobenius_ok = false;
      }
      ++cert.frobenius_pairs;
    }
    Cyc expected = g.is_identity() ? Cyc(static_cast<long>(ext.index() * chars.size())) : Cyc();
    average_ok = average_ok && sum == expected;
  }
  cert.character_average_agrees = average_ok;
  cert.frobenius_agrees = frobenius_ok;
  cert.stationary = !cert.first_failure && average_ok && frobenius_ok;
  return cert;
}

// ---- split extensions -------------------------------------------------------

namespace {

using IntMatrix = SplitExtension::IntMatrix;

IntMatrix canonical_action(const FinAbelian& lambda, IntMatrix a) {
  const auto& d = lambda.factors();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (d[i] == 0) continue;
    for (auto& v : a[i]) v = ((v % d[i]) + d[i]) % d[i];
  }
  return a;
}

IntMatrix compose(const FinAbelian& lambda, const IntMatrix& a, const IntMatrix& b) {
  const auto r = a.size();
  IntMatrix c(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t j = 0; j < r; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return canonical_action(lambda, std::move(c));
}

}  // namespace

SplitExtension::SplitExtension(FinAbelian lambda, PermGroup phi, std::vector<IntMatrix> generator_actions)
    : lambda_(std::move(lambda)), phi_(std::move(phi)) {
  const auto r = lambda_.rank();
  const auto& d = lambda_.factors();
  if (generator_actions.size() != phi_.generators().size()) {
    throw Error(Errc::InvalidArgument, "need one action matrix per generator of Φ");
  }
  for (auto& a : generator_actions) {
    if (a.size() != r) throw Error(Errc::ShapeMismatch, "action matrix has wrong size");
    for (const auto& row : a) {
      if (row.size() != r) throw Error(Errc::ShapeMismatch, "action matrix has wrong size");
    }
    // the image of d_j e_j must vanish
    for (std::size_t j = 0; j < r; ++j) {
      if (d[j] == 0) continue;
      for (std::size_t i = 0; i < r; ++i) {
        auto v = d[j] * a[i][j];
        bool vanishes = d[i] == 0 ? v == 0 : v % d[i] == 0;
        if (!vanishes) throw Error(Errc::NotWellDefined, "action does not respect the torsion of Λ");
      }
    }
    a = canonical_action(lambda_, std::move(a));
  }
  IntMatrix id(r, std::vector<std::int64_t>(r, 0));
  for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;
  actions_.assign(phi_.order(), {});
  actions_[0] = canonical_action(lambda_, id);
  cayley_walk(
      phi_.order(), phi_.generators().size(), [&](std::size_t i, std::size_t x) { return phi_.left_step(i, x); },
      [&](std::size_t x, std::size_t i, std::size_t y) {
        actions_[y] = compose(lambda_, generator_actions[i], actions_[x]);
      },
      [&](std::size_t x, std::size_t i, std::size_t y) {
        if (actions_[y] != compose(lambda_, generator_actions[i], actions_[x])) {
          throw Error(Errc::NotWellDefined, "matrices do not define an action of Φ on Λ");
        }
      });
}

Coords SplitExtension::act(std::size_t phi, const Coords& v) const {
  const auto& a = actions_[phi];
  Coords out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  }
  return lambda_.reduce(std::move(out));
}

SplitExtension::Element SplitExtension::multiply(const Element& a, const Element& b) const {
  return {lambda_.add(a.lambda, act(a.phi, b.lambda)), *phi_.index_of(phi_.element(a.phi) * phi_.element(b.phi))};
}

SplitExtension::Element SplitExtension::inverse(const Element& a) const {
  auto phi_inv = *phi_.index_of(phi_.element(a.phi).inverse());
  return {lambda_.negate(act(phi_inv, a.lambda)), phi_inv};
}

std::vector<SplitExtension::Element> SplitExtension::generators() const {
  std::vector<Element> gens;
  for (std::size_t j = 0; j < lambda_.rank(); ++j) {
    Coords e = lambda_.identity();
    e[j] = 1;
    gens.push_back({lambda_.reduce(e), 0});
  }
  for (const auto& g : phi_.generators()) gens.push_back({lambda_.identity(), *phi_.index_of(g)});
  return gens;
}

std::vector<SplitExtension::Element> SplitExtension::ball(std::size_t max_len) const {
  auto gens = generators();
  const auto n = gens.size();
  for (std::size_t i = 0; i < n; ++i) gens.push_back(inverse(gens[i]));
  std::vector<Element> out{identity()};
  std::set<Element> seen{identity()};
  std::size_t layer_begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const auto layer_end = out.size();
    for (std::size_t k = layer_begin; k < layer_end; ++k) {
      for (const auto& s : gens) {
        auto y = multiply(s, out[k]);
        if (seen.insert(y).second) out.push_back(std::move(y));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

std::string SplitExtension::describe(const Element& g) const {
  std::string s = "(λ=[";
  for (std::size_t i = 0; i < g.lambda.size(); ++i) s += (i ? "," : "") + std::to_string(g.lambda[i]);
  return s + "], φ=" + phi_.element(g.phi).to_string() + ")";
}

InducedMatrix SplitExtension::induce(const Element& g) const {
  const auto n = phi_.order();
  InducedMatrix m(n, lambda_);
  for (std::size_t a = 0; a < n; ++a) {
    auto a_inv = phi_.element(a).inverse();
    auto lead = a_inv * phi_.element(g.phi);
    auto a_inv_idx = *phi_.index_of(a_inv);
    for (std::size_t b = 0; b < n; ++b) {
      if ((lead * phi_.element(b)).is_identity()) {
        m(a, b) = LaurentElement::monomial(lambda_, act(a_inv_idx, g.lambda));
      }
    }
  }
  return m;
}

ThomaCertificate check_stationarity(const SplitExtension& ext, std::size_t max_word_len) {
  ThomaCertificate cert;
  cert.index = ext.index();
  cert.lambda_order = ext.lambda_type().has_free_part() ? 0 : ext.lambda_type().order();
  for (const auto& g : ext.ball(max_word_len)) {
    bool identity = g.phi == 0 && ext.lambda_type().is_identity(g.lambda);
    ThomaValue v{ext.describe(g), ext.induce(g).integrated_ntrace(), identity, false};
    v.ok = v.value == (identity ? 1 : 0);
    if (!v.ok && !cert.first_failure) cert.first_failure = cert.values.size();
    cert.values.push_back(std::move(v));
  }
  cert.stationary = !cert.first_failure;
  return cert;
}

}  // namespace qgm
