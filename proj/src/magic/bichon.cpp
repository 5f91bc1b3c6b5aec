#include "qgm/magic/bichon.hpp"

#include "qgm/algebra/representation.hpp"
#include "qgm/exact/linalg.hpp"

namespace qgm {

template <class S>
MatrixModel<S> bichon_build(const std::vector<std::size_t>& sizes, const std::vector<Matrix<S>>& generators,
                            double tol) {
  using T = ScalarTraits<S>;
  if (sizes.empty() || sizes.size() != generators.size()) {
    throw Error(Errc::InvalidArgument, "need one generator per block size");
  }
  const auto d = generators[0].rows();
  std::size_t n = 0;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    if (sizes[b] == 0) throw Error(Errc::InvalidArgument, "block size must be positive");
    if (generators[b].rows() != d || generators[b].cols() != d) {
      throw Error(Errc::ShapeMismatch, "generators must share one square shape");
    }
    if (!power(generators[b], sizes[b]).near(Matrix<S>::identity(d), tol)) {
      throw Error(Errc::NotFiniteOrder, "generator " + std::to_string(b + 1) + " does not satisfy U^K = 1");
    }
    n += sizes[b];
  }
  std::vector<Matrix<S>> entries(n * n, Matrix<S>(d, d));
  std::size_t offset = 0;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    const auto k = sizes[b];
    std::vector<Matrix<S>> pw{Matrix<S>::identity(d)};
    for (std::size_t a = 1; a < k; ++a) pw.push_back(pw.back() * generators[b]);
    const S inv_k = T::from_rational(Rational(1, static_cast<long>(k)));
    // entries depend only on (c - r) mod k
    std::vector<Matrix<S>> shift(k, Matrix<S>(d, d));
    for (std::size_t s = 0; s < k; ++s) {
      for (std::size_t a = 0; a < k; ++a) shift[s] += T::root_of_unity(k, static_cast<long long>(s * a)) * pw[a];
      shift[s] = inv_k * shift[s];
    }
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) entries[(offset + r) * n + offset + c] = shift[(c + k - r) % k];
    }
    offset += k;
  }
  return MatrixModel<S>::single_fiber(n, d, std::move(entries));
}

template <class S>
bool is_block_circulant(const MatrixModel<S>& model, const std::vector<std::size_t>& sizes, double tol) {
  std::size_t n = 0;
  for (auto k : sizes) n += k;
  if (n != model.size) return false;
  std::vector<std::size_t> block(n);
  std::vector<std::size_t> start(n);
  std::size_t offset = 0;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    for (std::size_t r = 0; r < sizes[b]; ++r) {
      block[offset + r] = b;
      start[offset + r] = offset;
    }
    offset += sizes[b];
  }
  for (std::size_t x = 0; x < model.points(); ++x) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto& e = model.entry(x, i, j);
        if (block[i] != block[j]) {
          if (!e.is_zero(tol)) return false;
          continue;
        }
        const auto k = sizes[block[i]];
        const auto o = start[i];
        const auto s = (j - o + k - (i - o)) % k;
        if (!e.near(model.entry(x, o, o + s), tol)) return false;
      }
    }
  }
  return true;
}

template <class S>
DualElementCheck<S> dual_element_check(const DualReference& ref, const std::vector<Matrix<S>>& generators,
                                       double tol) {
  using T = ScalarTraits<S>;
  auto rho = extend_representation(ref.gamma, generators, tol);
  DualElementCheck<S> res;
  for (std::size_t g = 0; g < rho.size(); ++g) {
    res.values.push_back(ntrace(rho[g]));
    const S want = g == 0 ? T::one() : T::zero();
    if (!T::near(res.values.back(), want, tol) && !res.first_failure) {
      res.pass = false;
      res.first_failure = g;
    }
  }
  return res;
}

#define QGM_INSTANTIATE(S)                                                                                      \
  template MatrixModel<S> bichon_build<S>(const std::vector<std::size_t>&, const std::vector<Matrix<S>>&, double); \
  template bool is_block_circulant<S>(const MatrixModel<S>&, const std::vector<std::size_t>&, double);          \
  template DualElementCheck<S> dual_element_check<S>(const DualReference&, const std::vector<Matrix<S>>&, double);
QGM_INSTANTIATE(Cyc)
QGM_INSTANTIATE(Complex)
#undef QGM_INSTANTIATE

}  // namespace qgm
