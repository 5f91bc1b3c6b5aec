#include "qgm/exact/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>

#include "qgm/error.hpp"

namespace qgm {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo the monic integer polynomial m.
Poly poly_mod_monic(Poly p, const std::vector<long>& m) {
  const auto deg = m.size() - 1;
  for (std::size_t d = p.size(); d-- > deg;) {
    if (p[d] == 0) continue;
    Rational c = p[d];
    for (std::size_t t = 0; t <= deg; ++t) p[d - deg + t] -= c * m[t];
  }
  if (p.size() > deg) p.resize(deg);
  return p;
}

// Quotient and remainder over Q; b must be trimmed and nonzero.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {Poly{}, a};
  Poly q(a.size() - b.size() + 1);
  const Rational& lead = b.back();
  for (std::size_t d = a.size(); d-- >= b.size();) {
    if (a[d] == 0) continue;
    Rational c = a[d] / lead;
    q[d - (b.size() - 1)] = c;
    for (std::size_t t = 0; t < b.size(); ++t) a[d - (b.size() - 1) + t] -= c * b[t];
  }
  trim(a);
  trim(q);
  return {q, a};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

std::vector<long> compute_cyclotomic(std::size_t n) {
  // x^n - 1 divided exactly by Φ_d for every proper divisor d.
  std::vector<long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    const auto dd = den.size() - 1;
    std::vector<long> q(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
      long c = num[k];  // den is monic
      q[k - dd] = c;
      for (std::size_t t = 0; t <= dd; ++t) num[k - dd + t] -= c * den[t];
    }
    num = std::move(q);
  }
  return num;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "cyclotomic order must be positive");
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<long>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  auto poly = compute_cyclotomic(n);
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(poly)).first->second;
}

Cyc Cyc::zeta(std::size_t n, long long k) {
  if (n == 0) throw Error(Errc::InvalidArgument, "zeta: order must be positive");
  std::vector<Rational> c(n);
  auto nn = static_cast<long long>(n);
  c[static_cast<std::size_t>(((k % nn) + nn) % nn)] = 1;
  return Cyc(n, std::move(c));
}

Cyc Cyc::from_coeffs(std::size_t n, std::vector<Rational> coeffs) {
  if (n == 0) throw Error(Errc::InvalidArgument, "cyclotomic order must be positive");
  if (coeffs.size() > n) {
    // fold higher powers back using ζ^n = 1
    for (std::size_t a = n; a < coeffs.size(); ++a) coeffs[a % n] += coeffs[a];
  }
  coeffs.resize(n);
  return Cyc(n, std::move(coeffs));
}

Cyc Cyc::lifted(std::size_t m) const {
  if (m == order_) return *this;
  if (m % order_ != 0) throw Error(Errc::InvalidArgument, "lift target is not a multiple of the order");
  std::vector<Rational> c(m);
  const auto step = m / order_;
  for (std::size_t a = 0; a < order_; ++a) c[a * step] = coeffs_[a];
  return Cyc(m, std::move(c));
}

std::vector<Rational> Cyc::reduced() const {
  return poly_mod_monic(coeffs_, cyclotomic_polynomial(order_));
}

Cyc Cyc::canonical() const {
  auto r = reduced();
  bool rational = true;
  for (std::size_t a = 1; a < r.size(); ++a) rational = rational && r[a] == 0;
  if (rational) return Cyc(r.empty() ? Rational(0) : r[0]);
  r.resize(order_);
  return Cyc(order_, std::move(r));
}

bool Cyc::is_zero() const {
  bool all_zero = true;
  for (const auto& c : coeffs_) all_zero = all_zero && c == 0;
  if (all_zero) return true;
  if (order_ == 1) return false;
  for (const auto& c : reduced()) {
    if (c != 0) return false;
  }
  return true;
}

std::optional<Rational> Cyc::as_rational() const {
  if (order_ == 1) return coeffs_[0];
  auto r = reduced();
  for (std::size_t a = 1; a < r.size(); ++a) {
    if (r[a] != 0) return std::nullopt;
  }
  return r.empty() ? Rational(0) : r[0];
}

std::complex<double> Cyc::to_complex() const {
  std::complex<double> z = 0;
  for (std::size_t a = 0; a < order_; ++a) {
    if (coeffs_[a] == 0) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(a) / static_cast<double>(order_);
    z += coeffs_[a].get_d() * std::polar(1.0, angle);
  }
  return z;
}

Cyc Cyc::conj() const {
  std::vector<Rational> c(order_);
  for (std::size_t a = 0; a < order_; ++a) c[(order_ - a) % order_] = coeffs_[a];
  return Cyc(order_, std::move(c));
}

Cyc Cyc::inv() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (order_ == 1) return Cyc(Rational(1) / coeffs_[0]);
  const auto& phi = cyclotomic_polynomial(order_);
  Poly r0(phi.begin(), phi.end());
  Poly r1 = reduced();
  trim(r1);
  Poly s0{};
  Poly s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s = poly_sub(s0, poly_mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant since Φ_n is irreducible.
  Rational g = r0[0];
  for (auto& c : s0) c /= g;
  s0 = poly_mod_monic(std::move(s0), phi);
  s0.resize(order_);
  return Cyc(order_, std::move(s0));
}

Cyc& Cyc::operator+=(const Cyc& b) {
  if (b.order_ == order_) {
    for (std::size_t a = 0; a < order_; ++a) coeffs_[a] += b.coeffs_[a];
    return *this;
  }
  auto n = std::lcm(order_, b.order_);
  *this = lifted(n);
  auto bl = b.lifted(n);
  for (std::size_t a = 0; a < n; ++a) coeffs_[a] += bl.coeffs_[a];
  return *this;
}

Cyc& Cyc::operator-=(const Cyc& b) {
  return *this += -b;
}

Cyc Cyc::operator-() const {
  Cyc r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyc& Cyc::operator*=(const Cyc& b) {
  *this = *this * b;
  return *this;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
  if (a.order_ == 1 && b.order_ == 1) return Cyc(a.coeffs_[0] * b.coeffs_[0]);
  if (a.order_ == 1 || b.order_ == 1) {
    const Cyc& scalar = a.order_ == 1 ? a : b;
    Cyc r = a.order_ == 1 ? b : a;
    const Rational& s = scalar.coeffs_[0];
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }
  auto n = std::lcm(a.order_, b.order_);
  auto al = a.lifted(n);
  auto bl = b.lifted(n);
  std::vector<Rational> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (al.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (bl.coeffs_[j] == 0) continue;
      c[(i + j) % n] += al.coeffs_[i] * bl.coeffs_[j];
    }
  }
  return Cyc(n, std::move(c));
}

bool operator==(const Cyc& a, const Cyc& b) {
  return (a - b).is_zero();
}

}  // namespace qgm
