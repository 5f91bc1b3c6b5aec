#include "qgm/magic/words.hpp"

#include <functional>
#include <map>

namespace qgm {

namespace {

template <class S>
bool all_trivially_zero(const Matrix<S>& m) {
  for (const auto& x : m.data()) {
    if (!ScalarTraits<S>::trivially_zero(x)) return false;
  }
  return true;
}

std::size_t pow_size(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= b;
  return r;
}

using GroupAlgebraElement = std::map<std::size_t, Cyc>;

GroupAlgebraElement ga_multiply(const TableGroup& t, const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  GroupAlgebraElement c;
  for (const auto& [x, cx] : a) {
    for (const auto& [y, cy] : b) c[t.multiply(x, y)] += cx * cy;
  }
  std::erase_if(c, [](const auto& kv) { return kv.second.is_zero(); });
  return c;
}

}  // namespace

StateOnWords<Complex> to_float(const StateOnWords<Cyc>& s) {
  StateOnWords<Complex> f(s.size(), s.max_len());
  for (std::size_t k = 0; k <= s.max_len(); ++k) {
    for (std::size_t c = 0; c < s.count(k); ++c) f.at(k, c) = s.at(k, c).to_complex();
  }
  return f;
}

DualReference::DualReference(PermGroup g) : gamma(std::move(g)) {
  if (gamma.generators().empty()) throw Error(Errc::InvalidArgument, "dual reference needs generators");
  for (const auto& x : gamma.generators()) sizes.push_back(x.order());
}

std::size_t DualReference::size() const {
  std::size_t n = 0;
  for (auto k : sizes) n += k;
  return n;
}

StateOnWords<Cyc> haar_state_classical(const PermGroup& g, std::size_t max_len) {
  const auto n = g.degree();
  std::vector<std::vector<unsigned long>> counts;
  for (std::size_t k = 0; k <= max_len; ++k) counts.emplace_back(pow_size(n * n, k), 0);
  for (const auto& s : g.elements()) {
    // the words with every letter of the form (σ(j), j)
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t len, std::size_t code) {
      ++counts[len][code];
      if (len == max_len) return;
      for (std::size_t j = 0; j < n; ++j) rec(len + 1, code * n * n + s(j) * n + j);
    };
    rec(0, 0);
  }
  StateOnWords<Cyc> st(n, max_len);
  const auto order = static_cast<long>(g.order());
  for (std::size_t k = 0; k <= max_len; ++k) {
    for (std::size_t c = 0; c < counts[k].size(); ++c) {
      if (counts[k][c] != 0) st.at(k, c) = Cyc(make_rational(static_cast<long>(counts[k][c]), order));
    }
  }
  return st;
}

StateOnWords<Cyc> haar_state_dual(const DualReference& ref, std::size_t max_len) {
  const auto table = ref.gamma.table();
  const auto n = ref.size();
  std::vector<GroupAlgebraElement> entry(n * n);
  std::size_t offset = 0;
  for (std::size_t b = 0; b < ref.sizes.size(); ++b) {
    const auto k = ref.sizes[b];
    const auto g = *ref.gamma.index_of(ref.gamma.generators()[b]);
    std::vector<std::size_t> pw(k);
    for (std::size_t a = 0; a < k; ++a) pw[a] = table.power(g, static_cast<long long>(a));
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) {
        GroupAlgebraElement e;
        for (std::size_t a = 0; a < k; ++a) {
          auto exp = static_cast<long long>(((c + k - r) % k) * a);
          e[pw[a]] += Cyc(Rational(1, static_cast<long>(k))) * Cyc::zeta(k, exp);
        }
        std::erase_if(e, [](const auto& kv) { return kv.second.is_zero(); });
        entry[(offset + r) * n + offset + c] = std::move(e);
      }
    }
    offset += k;
  }
  StateOnWords<Cyc> st(n, max_len);
  std::function<void(const GroupAlgebraElement&, std::size_t, std::size_t)> rec =
      [&](const GroupAlgebraElement& prefix, std::size_t len, std::size_t code) {
        for (std::size_t l = 0; l < n * n; ++l) {
          if (entry[l].empty()) continue;
          auto p = ga_multiply(table, prefix, entry[l]);
          if (p.empty()) continue;
          auto next = code * n * n + l;
          if (auto it = p.find(0); it != p.end()) st.at(len + 1, next) = it->second.canonical();
          if (len + 1 < max_len) rec(p, len + 1, next);
        }
      };
  if (max_len > 0) rec(GroupAlgebraElement{{0, Cyc(1)}}, 0, 0);
  return st;
}

template <class S>
StateOnWords<S> model_state(const MatrixModel<S>& model, std::size_t max_len) {
  model.validate();
  const auto n = model.size;
  StateOnWords<S> st(n, max_len);
  for (std::size_t x = 0; x < model.points(); ++x) {
    const S w = ScalarTraits<S>::from_rational(model.weights[x]);
    std::function<void(const Matrix<S>&, std::size_t, std::size_t)> rec = [&](const Matrix<S>& prefix,
                                                                              std::size_t len, std::size_t code) {
      for (std::size_t l = 0; l < n * n; ++l) {
        const auto& e = model.fibers[x][l];
        if (all_trivially_zero(e)) continue;
        auto p = prefix * e;
        if (all_trivially_zero(p)) continue;
        auto next = code * n * n + l;
        st.at(len + 1, next) += w * ntrace(p);
        if (len + 1 < max_len) rec(p, len + 1, next);
      }
    };
    if (max_len > 0) rec(Matrix<S>::identity(model.dim), 0, 0);
  }
  return st;
}

template <class S>
StationarityCertificate<S> compare_states(const StateOnWords<S>& model, const StateOnWords<S>& reference,
                                          double tol) {
  if (model.size() != reference.size()) throw Error(Errc::ShapeMismatch, "states on different index sets");
  StationarityCertificate<S> cert;
  cert.max_len = std::min(model.max_len(), reference.max_len());
  for (std::size_t k = 0; k <= cert.max_len; ++k) {
    for (std::size_t c = 0; c < model.count(k); ++c) {
      ++cert.words_checked;
      if (!ScalarTraits<S>::near(model.at(k, c), reference.at(k, c), tol)) {
        cert.pass = false;
        cert.first_mismatch = StateOnWords<S>::decode(model.size(), k, c);
        cert.model_value = model.at(k, c);
        cert.reference_value = reference.at(k, c);
        return cert;
      }
    }
  }
  return cert;
}

namespace {

template <class S>
StateOnWords<S> as_scalar(const StateOnWords<Cyc>& s) {
  if constexpr (ScalarTraits<S>::exact) {
    return s;
  } else {
    return to_float(s);
  }
}

template <class S>
void quasi_flat_crosscheck(StationarityCertificate<S>& cert, const OrbitStructure& orbits,
                           const MatrixModel<S>& model, double tol) {
  if (!cert.pass || cert.max_len < 2 || model.points() != 1) return;
  if (!orbits.quasi_transitive || orbits.common_size != model.dim) return;
  if (!verify_magic(model, tol).pass) return;
  cert.quasi_flat_crosscheck = quasi_flat_check(model, orbits, tol).quasi_flat;
  if (!*cert.quasi_flat_crosscheck) {
    throw Error(Errc::Inconsistent, "stationary single-fiber model is not quasi-flat");
  }
}

}  // namespace

template <class S>
StationarityCertificate<S> stationarity_check(const PermGroup& reference, const MatrixModel<S>& model,
                                              std::size_t max_len, double tol) {
  model.validate();
  if (model.size != reference.degree()) throw Error(Errc::ShapeMismatch, "model size differs from group degree");
  auto cert = compare_states(model_state(model, max_len), as_scalar<S>(haar_state_classical(reference, max_len)), tol);
  quasi_flat_crosscheck(cert, orbits_from_source(reference), model, tol);
  return cert;
}

template <class S>
StationarityCertificate<S> stationarity_check(const DualReference& reference, const MatrixModel<S>& model,
                                              std::size_t max_len, double tol) {
  model.validate();
  if (model.size != reference.size()) throw Error(Errc::ShapeMismatch, "model size differs from ΣK_i");
  auto cert = compare_states(model_state(model, max_len), as_scalar<S>(haar_state_dual(reference, max_len)), tol);
  quasi_flat_crosscheck(cert, orbits_from_dual(reference.sizes), model, tol);
  return cert;
}

template <class S>
IdempotencyResult<S> convolution_idempotency(const StateOnWords<S>& phi, std::size_t max_len, double tol) {
  if (max_len > phi.max_len()) throw Error(Errc::InvalidArgument, "state table is shorter than the requested bound");
  const auto n = phi.size();
  IdempotencyResult<S> res;
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (std::size_t code = 0; code < phi.count(len); ++code) {
      auto w = StateOnWords<S>::decode(n, len, code);
      S total = ScalarTraits<S>::zero();
      std::vector<std::size_t> mid(len, 0);
      while (true) {
        std::size_t left = 0, right = 0;
        for (std::size_t a = 0; a < len; ++a) {
          left = left * n * n + w[a].first * n + mid[a];
          right = right * n * n + mid[a] * n + w[a].second;
        }
        const auto& l = phi.at(len, left);
        if (!ScalarTraits<S>::trivially_zero(l)) {
          const auto& r = phi.at(len, right);
          if (!ScalarTraits<S>::trivially_zero(r)) total += l * r;
        }
        std::size_t a = len;
        while (a > 0 && ++mid[a - 1] == n) mid[--a] = 0;
        if (a == 0) break;
      }
      if (!ScalarTraits<S>::near(total, phi.at(len, code), tol)) {
        res.idempotent = false;
        res.first_failure = w;
        res.value = phi.at(len, code);
        res.convolved = total;
        return res;
      }
    }
  }
  return res;
}

#define QGM_INSTANTIATE(S)                                                                                        \
  template StateOnWords<S> model_state<S>(const MatrixModel<S>&, std::size_t);                                    \
  template StationarityCertificate<S> compare_states<S>(const StateOnWords<S>&, const StateOnWords<S>&, double);  \
  template StationarityCertificate<S> stationarity_check<S>(const PermGroup&, const MatrixModel<S>&, std::size_t,  \
                                                            double);                                              \
  template StationarityCertificate<S> stationarity_check<S>(const DualReference&, const MatrixModel<S>&,          \
                                                            std::size_t, double);                                 \
  template IdempotencyResult<S> convolution_idempotency<S>(const StateOnWords<S>&, std::size_t, double);
QGM_INSTANTIATE(Cyc)
QGM_INSTANTIATE(Complex)
#undef QGM_INSTANTIATE

}  // namespace qgm
