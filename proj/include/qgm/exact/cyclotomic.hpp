#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "qgm/exact/rational.hpp"

namespace qgm {

/// An element of the cyclotomic field Q(ζ_n), written Σ c_a ζ_n^a.
///
/// Coefficients are kept modulo ζ^n − 1 (length n), which makes sums and
/// products plain cyclic convolutions. The representation is not unique;
/// equality, zero tests and inversion reduce modulo the n-th cyclotomic
/// polynomial Φ_n, whose powers 1, ζ, …, ζ^{φ(n)−1} form a Q-basis.
/// Mixed orders are lifted to the lcm.
class Cyc {
 public:
  Cyc() : order_(1), coeffs_(1) {}
  Cyc(const Rational& q) : order_(1), coeffs_{q} {}  // NOLINT: implicit by design of scalar code
  Cyc(long v) : order_(1), coeffs_{Rational(v)} {}    // NOLINT

  /// ζ_n^k, k taken modulo n.
  static Cyc zeta(std::size_t n, long long k = 1);
  static Cyc from_coeffs(std::size_t n, std::vector<Rational> coeffs);

  std::size_t order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Same value written in Q(ζ_m); m must be a multiple of order().
  Cyc lifted(std::size_t m) const;
  /// Coefficients reduced modulo Φ_n, length φ(n); unique per value at fixed n.
  std::vector<Rational> reduced() const;
  /// Same value with coefficients replaced by their reduced form, and order 1
  /// when the value is rational.
  Cyc canonical() const;

  bool is_zero() const;
  std::optional<Rational> as_rational() const;
  std::complex<double> to_complex() const;

  /// ζ_n ↦ ζ_n^{n−1}.
  Cyc conj() const;
  /// Multiplicative inverse. Throws DivisionByZero.
  Cyc inv() const;

  Cyc& operator+=(const Cyc& b);
  Cyc& operator-=(const Cyc& b);
  Cyc& operator*=(const Cyc& b);
  Cyc operator-() const;
  friend Cyc operator+(Cyc a, const Cyc& b) { return a += b; }
  friend Cyc operator-(Cyc a, const Cyc& b) { return a -= b; }
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  friend bool operator==(const Cyc& a, const Cyc& b);

 private:
  Cyc(std::size_t n, std::vector<Rational> coeffs) : order_(n), coeffs_(std::move(coeffs)) {}

  std::size_t order_;
  std::vector<Rational> coeffs_;
};

/// Coefficients of Φ_n, lowest degree first (monic, integer).
const std::vector<long>& cyclotomic_polynomial(std::size_t n);

}  // namespace qgm
