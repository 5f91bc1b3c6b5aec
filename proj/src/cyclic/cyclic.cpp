#include "qgm/cyclic/cyclic.hpp"

#include <algorithm>

#include "qgm/algebra/representation.hpp"
#include "qgm/exact/linalg.hpp"

namespace qgm {

CyclicModelData make_cyclic_data(PermGroup l, const std::vector<ExactMatrix>& generator_images,
                                 const std::vector<Perm>& sigma_images, std::size_t k) {
  if (k == 0) throw Error(Errc::InvalidArgument, "K must be at least 1");
  CyclicModelData d{std::move(l), {}, {}, k};
  d.v = extend_representation(d.l, generator_images);
  for (const auto& m : generator_images) {
    if (!is_unitary(m)) throw Error(Errc::NotRepresentation, "generator image is not unitary");
  }
  try {
    d.sigma = extend_automorphism(d.l, sigma_images);
  } catch (const Error& e) {
    throw Error(Errc::InvalidAutomorphism, e.what());
  }
  if (!d.sigma.power(static_cast<long long>(k)).is_identity()) {
    throw Error(Errc::InvalidAutomorphism, "σ^K is not the identity for K = " + std::to_string(k));
  }
  return d;
}

std::vector<Perm> conjugation_automorphism(const PermGroup& l, const std::vector<ExactMatrix>& generator_images) {
  auto v = extend_representation(l, generator_images);
  std::vector<Perm> images;
  for (const auto& g : l.generators()) {
    auto target = v[*l.index_of(g)].conjugate();
    std::optional<std::size_t> found;
    for (std::size_t h = 0; h < l.order(); ++h) {
      if (v[h].near(target)) {
        if (found) throw Error(Errc::InvalidAutomorphism, "representation is not faithful");
        found = h;
      }
    }
    if (!found) throw Error(Errc::InvalidAutomorphism, "image of L is not self-conjugate");
    images.push_back(l.element(*found));
  }
  return images;
}

template <class S>
Matrix<S> cycle_fill(const std::vector<S>& x) {
  const auto k = x.size();
  if (k == 0) throw Error(Errc::InvalidArgument, "cycle_fill needs K >= 1");
  Matrix<S> m(k, k);
  for (std::size_t r = 0; r < k; ++r) m(r, (r + k - 1) % k) = x[r];
  return m;
}

template <class S>
Matrix<S> cycle_fill(const std::vector<Matrix<S>>& x) {
  const auto k = x.size();
  if (k == 0) throw Error(Errc::InvalidArgument, "cycle_fill needs K >= 1");
  const auto d = x[0].rows();
  Matrix<S> m(k * d, k * d);
  for (std::size_t r = 0; r < k; ++r) {
    if (x[r].rows() != d || x[r].cols() != d) throw Error(Errc::ShapeMismatch, "cycle_fill blocks differ in shape");
    const auto c = (r + k - 1) % k;
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) m(r * d + a, c * d + b) = x[r](a, b);
    }
  }
  return m;
}

MatrixModel<Cyc> build_cyclic_model(const CyclicModelData& data) {
  const auto n = data.size();
  const auto k = data.k;
  std::vector<AutoMap> pw;
  for (std::size_t r = 1; r <= k; ++r) pw.push_back(data.sigma.power(static_cast<long long>(r)));
  MatrixModel<Cyc> model;
  model.size = n;
  model.dim = k;
  for (std::size_t h = 0; h < data.l.order(); ++h) {
    model.weights.emplace_back(1, static_cast<long>(data.l.order()));
    std::vector<ExactMatrix> fiber;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Cyc> x;
        for (std::size_t r = 0; r < k; ++r) x.push_back(data.v[pw[r](h)](i, j));
        fiber.push_back(cycle_fill(x));
      }
    }
    model.fibers.push_back(std::move(fiber));
  }
  return model;
}

namespace {

template <class S>
Matrix<S> assemble(const std::vector<Matrix<S>>& entries, std::size_t n, std::size_t k, bool adjoint_blocks) {
  Matrix<S> big(n * k, n * k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto block = adjoint_blocks ? entries[i * n + j].adjoint() : entries[i * n + j];
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) big(i * k + a, j * k + b) = block(a, b);
      }
    }
  }
  return big;
}

std::string entry_name(std::size_t n, std::size_t l) {
  return "U" + std::to_string(l / n + 1) + std::to_string(l % n + 1);
}

}  // namespace

template <class S>
HalfLiberationReport verify_half_liberation(const MatrixModel<S>& model, double tol) {
  model.validate();
  HalfLiberationReport rep;
  const auto n = model.size;
  const auto k = model.dim;
  auto fail = [&](bool& flag, const std::string& what) {
    if (flag) rep.failures.push_back(what);
    flag = false;
  };
  bool abc = true, k1 = true, k2 = true;
  for (std::size_t x = 0; x < model.points(); ++x) {
    const auto& e = model.fibers[x];
    const auto at = " at point " + std::to_string(x + 1);
    if (!is_unitary(assemble(e, n, k, false), tol)) fail(rep.unitary, "U is not unitary" + at);
    if (!is_unitary(assemble(e, n, k, true), tol)) fail(rep.conjugate_unitary, "conjugate of U is not unitary" + at);
    std::vector<Matrix<S>> adj;
    for (const auto& m : e) adj.push_back(m.adjoint());
    std::vector<Matrix<S>> family;
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = 0; b < e.size(); ++b) {
        for (auto p : {e[a] * adj[b], adj[a] * e[b]}) {
          if (rep.diagonal_products && !p.is_diagonal(tol)) {
            fail(rep.diagonal_products,
                 "product of " + entry_name(n, a) + " and " + entry_name(n, b) + " is not diagonal" + at);
          }
          if (std::none_of(family.begin(), family.end(), [&](const auto& f) { return f.near(p, tol); })) {
            family.push_back(std::move(p));
          }
        }
      }
    }
    for (std::size_t a = 0; a < family.size() && rep.commuting; ++a) {
      for (std::size_t b = a + 1; b < family.size(); ++b) {
        if (!(family[a] * family[b]).near(family[b] * family[a], tol)) {
          fail(rep.commuting, "products ab*, a*b do not commute" + at);
          break;
        }
      }
    }
    for (std::size_t a = 0; a < e.size(); ++a) {
      if (rep.self_adjoint && !e[a].near(adj[a], tol)) rep.self_adjoint = false;
    }
    if (k == 1) {
      for (std::size_t a = 0; a < e.size() && k1; ++a) {
        for (std::size_t b = 0; b < e.size(); ++b) {
          if (!(e[a] * e[b]).near(e[b] * e[a], tol)) {
            fail(k1, "ab != ba for " + entry_name(n, a) + ", " + entry_name(n, b) + at);
            break;
          }
        }
      }
    }
    if (k == 2) {
      std::vector<Matrix<S>> letters = e;
      letters.insert(letters.end(), adj.begin(), adj.end());
      std::vector<Matrix<S>> pairs;
      for (const auto& a : letters) {
        for (const auto& b : letters) pairs.push_back(a * b);
      }
      for (std::size_t p = 0; p < pairs.size() && k2; ++p) {
        for (std::size_t q = p + 1; q < pairs.size(); ++q) {
          if (!(pairs[p] * pairs[q]).near(pairs[q] * pairs[p], tol)) {
            fail(k2, "ab·cd != cd·ab" + at);
            break;
          }
        }
      }
    }
  }
  if (rep.self_adjoint) {
    for (std::size_t x = 0; x < model.points() && abc; ++x) {
      const auto& e = model.fibers[x];
      for (std::size_t a = 0; a < e.size() && abc; ++a) {
        for (std::size_t b = 0; b < e.size() && abc; ++b) {
          auto ab = e[a] * e[b];
          for (std::size_t c = 0; c < e.size(); ++c) {
            if (!(ab * e[c]).near(e[c] * e[b] * e[a], tol)) {
              fail(abc, "abc != cba for " + entry_name(n, a) + ", " + entry_name(n, b) + ", " + entry_name(n, c) +
                            " at point " + std::to_string(x + 1));
              break;
            }
          }
        }
      }
    }
    rep.abc_cba = abc;
  }
  if (k == 1) rep.k1_commutation = k1;
  if (k == 2) rep.k2_relation = k2;
  return rep;
}

SemidirectCertificate semidirect_stationarity(const CyclicModelData& data) {
  const auto& l = data.l;
  const auto order = l.order();
  const auto k = data.k;
  std::vector<AutoMap> pw;  // σ^0 .. σ^K
  for (std::size_t r = 0; r <= k; ++r) pw.push_back(data.sigma.power(static_cast<long long>(r)));
  auto index = [&](std::size_t g, std::size_t i) { return g * k + i; };

  // ρ(δ_g ⊗ τ^i) at h: entry (r, (r - i) mod K) = δ_g(σ^{r+1}(h))
  std::vector<std::vector<ExactMatrix>> rho(order * k, std::vector<ExactMatrix>(order, ExactMatrix(k, k)));
  for (std::size_t g = 0; g < order; ++g) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t h = 0; h < order; ++h) {
        for (std::size_t r = 0; r < k; ++r) {
          if (pw[r + 1](h) == g) rho[index(g, i)][h](r, (r + k - i) % k) = Cyc(1);
        }
      }
    }
  }

  SemidirectCertificate cert;
  cert.basis_size = order * k;
  auto label = [&](std::size_t g, std::size_t i) {
    return "delta_" + l.element(g).to_string() + " tau^" + std::to_string(i);
  };
  auto fail = [&](bool& flag, const std::string& what) {
    if (flag && !cert.first_failure) cert.first_failure = what;
    flag = false;
  };

  const Rational w(1, static_cast<long>(order));
  for (std::size_t g = 0; g < order; ++g) {
    for (std::size_t i = 0; i < k; ++i) {
      const auto& f = rho[index(g, i)];
      cert.basis.push_back(label(g, i));
      Cyc value;
      for (std::size_t h = 0; h < order; ++h) value += Cyc(w) * ntrace(f[h]);
      Cyc haar = i == 0 ? Cyc(w) : Cyc();
      if (!(value == haar)) fail(cert.stationary, "stationarity fails on " + label(g, i));
      cert.model_values.push_back(value.canonical());
      cert.haar_values.push_back(haar);

      // (δ_g τ^i)* = δ_{σ^{-i}(g)} τ^{-i}
      const auto gs = data.sigma.power(-static_cast<long long>(i))(g);
      const auto& fs = rho[index(gs, (k - i) % k)];
      for (std::size_t h = 0; h < order; ++h) {
        if (!f[h].adjoint().near(fs[h])) {
          fail(cert.star, "star fails on " + label(g, i));
          break;
        }
      }

      // (δ_g τ^i)(δ_h τ^j) = [g == σ^i(h)] δ_g τ^{i+j}
      for (std::size_t h2 = 0; h2 < order && cert.homomorphism; ++h2) {
        for (std::size_t j = 0; j < k; ++j) {
          const auto& f2 = rho[index(h2, j)];
          const bool nonzero = g == pw[i](h2);
          const auto& prod = rho[index(g, (i + j) % k)];
          for (std::size_t p = 0; p < order; ++p) {
            auto lhs = f[p] * f2[p];
            bool ok = nonzero ? lhs.near(prod[p]) : lhs.is_zero();
            if (!ok) {
              fail(cert.homomorphism, "multiplicativity fails on " + label(g, i) + " * " + label(h2, j));
              break;
            }
          }
          if (!cert.homomorphism) break;
        }
      }
    }
  }

  // ρ(v_ij ⊗ τ) reproduces the cyclic model
  auto model = build_cyclic_model(data);
  const auto n = data.size();
  for (std::size_t i = 0; i < n && cert.matches_model; ++i) {
    for (std::size_t j = 0; j < n && cert.matches_model; ++j) {
      for (std::size_t h = 0; h < order; ++h) {
        ExactMatrix m(k, k);
        for (std::size_t g = 0; g < order; ++g) m += data.v[g](i, j) * rho[index(g, 1 % k)][h];
        if (!m.near(model.entry(h, i, j))) {
          fail(cert.matches_model, "rho(v" + std::to_string(i + 1) + std::to_string(j + 1) +
                                       " tau) differs from the model at point " + std::to_string(h + 1));
          break;
        }
      }
    }
  }
  return cert;
}

template <class S>
bool verify_k_symmetry(const MatrixModel<S>& model, double tol) {
  model.validate();
  using T = ScalarTraits<S>;
  const auto k = model.dim;
  std::vector<S> d, dinv;
  for (std::size_t r = 0; r < k; ++r) {
    d.push_back(T::root_of_unity(k, static_cast<long long>(r)));
    dinv.push_back(T::root_of_unity(k, -static_cast<long long>(r)));
  }
  const auto dm = Matrix<S>::diagonal(d);
  const auto dinvm = Matrix<S>::diagonal(dinv);
  const auto z = T::root_of_unity(k, 1);
  for (const auto& fiber : model.fibers) {
    for (const auto& e : fiber) {
      if (!(dm * e * dinvm).near(z * e, tol)) return false;
    }
  }
  return true;
}

template Matrix<Cyc> cycle_fill<Cyc>(const std::vector<Cyc>&);
template Matrix<Complex> cycle_fill<Complex>(const std::vector<Complex>&);
template Matrix<Cyc> cycle_fill<Cyc>(const std::vector<Matrix<Cyc>>&);
template Matrix<Complex> cycle_fill<Complex>(const std::vector<Matrix<Complex>>&);
template HalfLiberationReport verify_half_liberation<Cyc>(const MatrixModel<Cyc>&, double);
template HalfLiberationReport verify_half_liberation<Complex>(const MatrixModel<Complex>&, double);
template bool verify_k_symmetry<Cyc>(const MatrixModel<Cyc>&, double);
template bool verify_k_symmetry<Complex>(const MatrixModel<Complex>&, double);

}  // namespace qgm
