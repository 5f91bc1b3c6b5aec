#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qgm/algebra/perm_group.hpp"
#include "qgm/magic/magic.hpp"
#include "qgm/magic/model.hpp"

namespace qgm {

/// Values of a functional on all coordinate words of length <= max_len.
/// Words of length k are coded in base N² with the first letter most
/// significant, so ascending codes enumerate words lexicographically.
template <class S>
class StateOnWords {
 public:
  StateOnWords() = default;
  StateOnWords(std::size_t size, std::size_t max_len) : size_(size), max_len_(max_len) {
    std::size_t count = 1;
    for (std::size_t k = 0; k <= max_len; ++k) {
      values_.emplace_back(count, ScalarTraits<S>::zero());
      count *= size * size;
    }
    values_[0][0] = ScalarTraits<S>::one();
  }

  std::size_t size() const { return size_; }
  std::size_t max_len() const { return max_len_; }
  std::size_t count(std::size_t len) const { return values_[len].size(); }
  S& at(std::size_t len, std::size_t code) { return values_[len][code]; }
  const S& at(std::size_t len, std::size_t code) const { return values_[len][code]; }

  S value(const IndexWord& w) const {
    if (w.size() > max_len_) throw Error(Errc::InvalidArgument, "word longer than the table bound");
    return at(w.size(), encode(size_, w));
  }

  static std::size_t encode(std::size_t n, const IndexWord& w) {
    std::size_t code = 0;
    for (const auto& [i, j] : w) code = code * n * n + i * n + j;
    return code;
  }
  static IndexWord decode(std::size_t n, std::size_t len, std::size_t code) {
    IndexWord w(len);
    for (std::size_t a = len; a-- > 0;) {
      auto letter = code % (n * n);
      code /= n * n;
      w[a] = {letter / n, letter % n};
    }
    return w;
  }

 private:
  std::size_t size_ = 0;
  std::size_t max_len_ = 0;
  std::vector<std::vector<S>> values_;
};

StateOnWords<Complex> to_float(const StateOnWords<Cyc>& s);
inline const StateOnWords<Complex>& to_float(const StateOnWords<Complex>& s) { return s; }

/// A finite group Γ presented by generators g_1..g_M of orders K_1..K_M; the
/// dual Γ̂ sits in S_N^+ with N = ΣK_i through the Bichon magic unitary.
struct DualReference {
  PermGroup gamma;
  std::vector<std::size_t> sizes;  // element orders of the generators

  explicit DualReference(PermGroup g);
  std::size_t size() const;
};

/// Haar word values ∫_G u_{i1 j1}...u_{ik jk} of a classical group.
StateOnWords<Cyc> haar_state_classical(const PermGroup& g, std::size_t max_len);
/// Haar word values on the dual: coefficient of the identity in C[Γ].
StateOnWords<Cyc> haar_state_dual(const DualReference& ref, std::size_t max_len);
/// φ = (ntrace ⊗ ∫_X)π on words.
template <class S>
StateOnWords<S> model_state(const MatrixModel<S>& model, std::size_t max_len);

template <class S>
struct StationarityCertificate {
  bool pass = true;
  std::size_t max_len = 0;
  std::size_t words_checked = 0;
  std::optional<IndexWord> first_mismatch;
  S model_value{};
  S reference_value{};
  std::optional<bool> quasi_flat_crosscheck;  // single fiber, quasi-transitive reference
};

template <class S>
StationarityCertificate<S> compare_states(const StateOnWords<S>& model, const StateOnWords<S>& reference,
                                          double tol = kDefaultTolerance);

template <class S>
StationarityCertificate<S> stationarity_check(const PermGroup& reference, const MatrixModel<S>& model,
                                              std::size_t max_len = 3, double tol = kDefaultTolerance);
template <class S>
StationarityCertificate<S> stationarity_check(const DualReference& reference, const MatrixModel<S>& model,
                                              std::size_t max_len = 3, double tol = kDefaultTolerance);

template <class S>
struct IdempotencyResult {
  bool idempotent = true;
  std::optional<IndexWord> first_failure;
  S value{};
  S convolved{};
};

/// Necessary condition for stationarity on the image: φ * φ = φ on words of
/// length <= max_len, with convolution summing over middle indices.
template <class S>
IdempotencyResult<S> convolution_idempotency(const StateOnWords<S>& phi, std::size_t max_len,
                                             double tol = kDefaultTolerance);

}  // namespace qgm
