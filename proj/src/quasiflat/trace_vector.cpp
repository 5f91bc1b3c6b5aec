#include "qgm/quasiflat/trace_vector.hpp"

#include <algorithm>

#include "qgm/exact/linalg.hpp"
#include "qgm/magic/bichon.hpp"
#include "qgm/magic/magic.hpp"

namespace qgm {

template <class S>
TraceVectorResult<S> trace_vector_check(const Matrix<S>& u, std::size_t k, double tol) {
  using T = ScalarTraits<S>;
  if (!u.is_square()) throw Error(Errc::ShapeMismatch, "trace vector needs a square matrix");
  TraceVectorResult<S> r;
  r.multiplicities = spectral_multiplicities(u, k, tol);
  r.spectral_flat = std::all_of(r.multiplicities.begin(), r.multiplicities.end(), [](auto m) { return m == 1; });
  auto p = Matrix<S>::identity(u.rows());
  r.flat = true;
  const double slack = tol * static_cast<double>(std::max<std::size_t>(1, u.rows()));
  for (std::size_t a = 0; a < k; ++a) {
    r.t.push_back(p.rows() == 0 ? T::zero() : p.trace());
    const S want = a == 0 ? T::from_rational(Rational(static_cast<long>(k))) : T::zero();
    if (!T::near(r.t.back(), want, slack)) r.flat = false;
    p = p * u;
  }
  return r;
}

template <class S>
DualFlatCertificate<S> quasiflat_dual_check(const std::vector<std::vector<Matrix<S>>>& fibers, std::size_t k,
                                            double tol) {
  if (fibers.empty() || fibers[0].empty()) throw Error(Errc::InvalidArgument, "need at least one fiber and generator");
  const auto m = fibers[0].size();
  const auto d = fibers[0][0].rows();
  DualFlatCertificate<S> cert;
  for (std::size_t x = 0; x < fibers.size(); ++x) {
    if (fibers[x].size() != m) throw Error(Errc::ShapeMismatch, "fibers carry different numbers of generators");
    for (std::size_t i = 0; i < m; ++i) {
      auto r = trace_vector_check(fibers[x][i], k, tol);
      if (!r.agrees()) throw Error(Errc::Inconsistent, "trace vector and spectral multiplicities disagree");
      if (!r.flat) {
        cert.pass = false;
        cert.witnesses.push_back({i, x, r.multiplicities});
      }
    }
  }
  if (d == k) {
    const std::vector<std::size_t> sizes(m, k);
    MatrixModel<S> model;
    model.size = m * k;
    model.dim = d;
    for (const auto& f : fibers) {
      auto b = bichon_build(sizes, f, tol);
      model.weights.emplace_back(1, static_cast<long>(fibers.size()));
      model.fibers.push_back(std::move(b.fibers[0]));
    }
    cert.model_quasi_flat = quasi_flat_check(model, orbits_from_dual(sizes), tol).quasi_flat;
    if (*cert.model_quasi_flat != cert.pass) {
      throw Error(Errc::Inconsistent, "trace vectors disagree with quasi-flatness of the magic model");
    }
  }
  return cert;
}

template TraceVectorResult<Cyc> trace_vector_check<Cyc>(const Matrix<Cyc>&, std::size_t, double);
template TraceVectorResult<Complex> trace_vector_check<Complex>(const Matrix<Complex>&, std::size_t, double);
template DualFlatCertificate<Cyc> quasiflat_dual_check<Cyc>(const std::vector<std::vector<Matrix<Cyc>>>&,
                                                            std::size_t, double);
template DualFlatCertificate<Complex> quasiflat_dual_check<Complex>(
    const std::vector<std::vector<Matrix<Complex>>>&, std::size_t, double);

}  // namespace qgm
