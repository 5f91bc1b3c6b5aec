#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "qgm/exact/cyclotomic.hpp"

namespace qgm {

using Complex = std::complex<double>;

/// Float-mode default tolerance.
inline constexpr double kDefaultTolerance = 1e-9;

template <class S>
struct ScalarTraits;

/// Exact mode: tolerances are ignored, equality is decided in Q(ζ_n).
template <>
struct ScalarTraits<Cyc> {
  static constexpr bool exact = true;
  static Cyc zero() { return Cyc(); }
  static Cyc one() { return Cyc(1); }
  static Cyc from_rational(const Rational& q) { return Cyc(q); }
  static Cyc root_of_unity(std::size_t n, long long k) { return Cyc::zeta(n, k); }
  static Cyc conj(const Cyc& a) { return a.conj(); }
  static Cyc inv(const Cyc& a) { return a.inv(); }
  /// Cheap test on stored coefficients; may miss zeros that need reduction.
  static bool trivially_zero(const Cyc& a) {
    for (const auto& c : a.coeffs()) {
      if (c != 0) return false;
    }
    return true;
  }
  static bool is_zero(const Cyc& a, double /*tol*/) { return a.is_zero(); }
  static bool near(const Cyc& a, const Cyc& b, double /*tol*/) { return a == b; }
  static double abs(const Cyc& a) { return std::abs(a.to_complex()); }
  static Complex to_complex(const Cyc& a) { return a.to_complex(); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex from_rational(const Rational& q) { return {q.get_d(), 0.0}; }
  static Complex root_of_unity(std::size_t n, long long k) {
    auto nn = static_cast<long long>(n);
    auto r = ((k % nn) + nn) % nn;
    if (r == 0) return {1.0, 0.0};
    if (2 * r == nn) return {-1.0, 0.0};
    if (4 * r == nn) return {0.0, 1.0};
    if (4 * r == 3 * nn) return {0.0, -1.0};
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(n));
  }
  static Complex conj(const Complex& a) { return std::conj(a); }
  static Complex inv(const Complex& a) { return 1.0 / a; }
  static bool trivially_zero(const Complex& a) { return a == Complex(0.0, 0.0); }
  static bool is_zero(const Complex& a, double tol) { return std::abs(a) <= tol; }
  static bool near(const Complex& a, const Complex& b, double tol) { return std::abs(a - b) <= tol; }
  static double abs(const Complex& a) { return std::abs(a); }
  static Complex to_complex(const Complex& a) { return a; }
};

}  // namespace qgm
