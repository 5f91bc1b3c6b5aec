#include "qgm/exact/linalg.hpp"

#include <cmath>

namespace qgm {

template <class S>
bool is_projection(const Matrix<S>& m, double tol) {
  if (!m.is_square()) return false;
  return m.near(m.adjoint(), tol) && (m * m).near(m, tol);
}

template <class S>
bool is_unitary(const Matrix<S>& u, double tol) {
  if (!u.is_square()) return false;
  auto id = Matrix<S>::identity(u.rows());
  auto ua = u.adjoint();
  return (u * ua).near(id, tol) && (ua * u).near(id, tol);
}

namespace {

std::size_t elimination_rank(Matrix<Cyc> a, double /*tol*/) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = a.rows();
    for (std::size_t i = r; i < a.rows(); ++i) {
      if (!ScalarTraits<Cyc>::trivially_zero(a(i, c)) && !a(i, c).is_zero()) {
        p = i;
        break;
      }
    }
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    Cyc pivot_inv = a(r, c).inv();
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (ScalarTraits<Cyc>::trivially_zero(a(i, c))) continue;
      Cyc f = a(i, c) * pivot_inv;
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
      a(i, c) = Cyc();
    }
    ++r;
  }
  return r;
}

std::size_t elimination_rank(Matrix<Complex> a, double tol) {
  const double threshold = tol * static_cast<double>(a.rows()) * a.max_abs();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (std::abs(a(i, c)) > std::abs(a(p, c))) p = i;
    }
    if (std::abs(a(p, c)) <= threshold) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(p, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      Complex f = a(i, c) / a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace

template <>
std::size_t integral_trace<Cyc>(const Cyc& t, double /*tol*/) {
  auto q = t.as_rational();
  if (!q || q->get_den() != 1 || *q < 0) throw Error(Errc::Inconsistent, "trace is not a nonnegative integer");
  return q->get_num().get_ui();
}

template <>
std::size_t integral_trace<Complex>(const Complex& t, double tol) {
  double rounded = std::round(t.real());
  double slack = std::max(tol, 1e-6);
  if (rounded < 0 || std::abs(t - Complex(rounded, 0.0)) > slack) {
    throw Error(Errc::Inconsistent, "trace is not a nonnegative integer");
  }
  return static_cast<std::size_t>(rounded);
}

template <class S>
std::size_t rank(const Matrix<S>& m, double tol) {
  auto r = elimination_rank(m, tol);
  if (m.is_square() && m.rows() > 0 && is_projection(m, tol)) {
    std::size_t t = 0;
    try {
      t = integral_trace(m.trace(), tol);
    } catch (const Error&) {
      throw Error(Errc::Inconsistent, "projection with non-integral trace");
    }
    if (t != r) {
      throw Error(Errc::Inconsistent, "projection trace " + std::to_string(t) + " differs from elimination rank " +
                                          std::to_string(r));
    }
  }
  return r;
}

template <class S>
std::vector<Matrix<S>> spectral_idempotents(const Matrix<S>& u, std::size_t k, double tol) {
  using T = ScalarTraits<S>;
  if (k == 0) throw Error(Errc::InvalidArgument, "order K must be positive");
  if (!is_unitary(u, tol)) throw Error(Errc::NotUnitary, "matrix is not unitary");
  std::vector<Matrix<S>> powers{Matrix<S>::identity(u.rows())};
  for (std::size_t b = 1; b <= k; ++b) powers.push_back(powers.back() * u);
  if (!powers[k].near(powers[0], tol)) {
    throw Error(Errc::NotFiniteOrder, "U^" + std::to_string(k) + " is not the identity");
  }
  const S scale = T::from_rational(Rational(1, static_cast<long>(k)));
  std::vector<Matrix<S>> out;
  for (std::size_t a = 0; a < k; ++a) {
    Matrix<S> p(u.rows(), u.cols());
    for (std::size_t b = 0; b < k; ++b) {
      auto e = -static_cast<long long>((a * b) % k);
      p += T::root_of_unity(k, e) * powers[b];
    }
    out.push_back(scale * p);
  }
  return out;
}

template <class S>
std::vector<std::size_t> spectral_multiplicities(const Matrix<S>& u, std::size_t k, double tol) {
  std::vector<std::size_t> m;
  for (const auto& p : spectral_idempotents(u, k, tol)) m.push_back(integral_trace(p.trace(), tol));
  return m;
}

template bool is_projection(const Matrix<Cyc>&, double);
template bool is_projection(const Matrix<Complex>&, double);
template bool is_unitary(const Matrix<Cyc>&, double);
template bool is_unitary(const Matrix<Complex>&, double);
template std::size_t rank(const Matrix<Cyc>&, double);
template std::size_t rank(const Matrix<Complex>&, double);
template std::vector<Matrix<Cyc>> spectral_idempotents(const Matrix<Cyc>&, std::size_t, double);
template std::vector<Matrix<Complex>> spectral_idempotents(const Matrix<Complex>&, std::size_t, double);
template std::vector<std::size_t> spectral_multiplicities(const Matrix<Cyc>&, std::size_t, double);
template std::vector<std::size_t> spectral_multiplicities(const Matrix<Complex>&, std::size_t, double);

}  // namespace qgm
