#include <doctest.h>

#include <random>

#include "qgm/cyclic/cyclic.hpp"
#include "qgm/error.hpp"
#include "qgm/exact/linalg.hpp"
#include "qgm/magic/magic.hpp"

using namespace qgm;

namespace {
Perm cyc(std::size_t n, std::vector<std::vector<std::uint32_t>> c) { return Perm::from_cycles(n, c); }

PermGroup zn(std::uint32_t n) {
  std::vector<std::uint32_t> c;
  for (std::uint32_t i = 1; i <= n; ++i) c.push_back(i);
  return PermGroup::generate(n, {Perm::from_cycles(n, {c})});
}

ExactMatrix dz(std::size_t n) { return ExactMatrix::diagonal({Cyc::zeta(n, 1), Cyc::zeta(n, -1)}); }

// exponent a with g = r^a, found by applying g to point 0
long exponent(const Perm& g) { return static_cast<long>(g(0)); }

Perm inverse_of(const Perm& g) {
  std::vector<std::uint32_t> inv(g.degree());
  for (std::size_t i = 0; i < g.degree(); ++i) inv[g(i)] = static_cast<std::uint32_t>(i);
  return Perm(inv);
}

Cyc rand_cyc(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-3, 3);
  return Cyc(d(rng)) + Cyc(d(rng)) * Cyc::zeta(3, 1);
}
}  // namespace

TEST_SUITE("cyclic") {
  TEST_CASE("cycle_fill layout") {
    auto one = cycle_fill<Cyc>({Cyc(7)});
    CHECK(one(0, 0) == Cyc(7));
    auto two = cycle_fill<Cyc>({Cyc(2), Cyc(3)});
    CHECK(two.near(ExactMatrix::from_rows({{Cyc(0), Cyc(2)}, {Cyc(3), Cyc(0)}})));
    auto three = cycle_fill<Cyc>({Cyc(1), Cyc(2), Cyc(3)});
    CHECK(three(0, 2) == Cyc(1));
    CHECK(three(1, 0) == Cyc(2));
    CHECK(three(2, 1) == Cyc(3));
    auto blocks = cycle_fill<Cyc>(std::vector<ExactMatrix>{ExactMatrix::identity(2), dz(3)});
    CHECK(blocks.rows() == 4);
    CHECK(blocks(0, 2) == Cyc(1));
    CHECK(blocks(2, 0) == Cyc::zeta(3, 1));
    CHECK_THROWS_AS(cycle_fill<Cyc>(std::vector<Cyc>{}), Error);
  }

  TEST_CASE("products of cycle-filled matrices are diagonal") {
    std::mt19937_64 rng(7);
    for (std::size_t k = 1; k <= 5; ++k) {
      for (int t = 0; t < 10; ++t) {
        std::vector<Cyc> x, y;
        for (std::size_t r = 0; r < k; ++r) {
          x.push_back(rand_cyc(rng));
          y.push_back(rand_cyc(rng));
        }
        auto a = cycle_fill(x), b = cycle_fill(y);
        CHECK((a * b.adjoint()).is_diagonal());
        CHECK((a.adjoint() * b).is_diagonal());
      }
    }
  }

  TEST_CASE("Z5 with inversion, K = 2") {
    auto l = zn(5);
    auto inv = inverse_of(l.generators()[0]);
    auto data = make_cyclic_data(l, {dz(5)}, {inv}, 2);
    CHECK(data.size() == 2);
    auto m = build_cyclic_model(data);
    CHECK(m.points() == 5);
    CHECK(m.dim == 2);
    // U_ij(g) = [[0, v_ij(g^-1)], [v_ij(g), 0]], computed straight from the exponents
    for (std::size_t x = 0; x < l.order(); ++x) {
      long a = exponent(l.element(x));
      for (std::size_t i = 0; i < 2; ++i) {
        long sign = i == 0 ? 1 : -1;
        auto expect = ExactMatrix::from_rows(
            {{Cyc(0), Cyc::zeta(5, -sign * a)}, {Cyc::zeta(5, sign * a), Cyc(0)}});
        CHECK(m.entry(x, i, i).near(expect));
        CHECK(m.entry(x, i, 1 - i).is_zero());
      }
    }
    auto hl = verify_half_liberation(m);
    CHECK(hl.pass());
    CHECK(hl.k2_relation.value_or(false));
    CHECK(hl.self_adjoint);
    CHECK(hl.abc_cba.value_or(false));
    CHECK(verify_k_symmetry(m));

    auto cert = semidirect_stationarity(data);
    CHECK(cert.basis_size == 10);
    CHECK(cert.pass());
    CHECK(cert.model_values == cert.haar_values);
  }

  TEST_CASE("Z3 with inversion is stationary, K = 1 is commutative") {
    auto l = zn(3);
    auto d2 = make_cyclic_data(l, {dz(3)}, {inverse_of(l.generators()[0])}, 2);
    CHECK(semidirect_stationarity(d2).pass());
    auto d1 = make_cyclic_data(l, {dz(3)}, {l.generators()[0]}, 1);
    auto m1 = build_cyclic_model(d1);
    auto hl = verify_half_liberation(m1);
    CHECK(hl.pass());
    CHECK(hl.k1_commutation.value_or(false));
    CHECK(semidirect_stationarity(d1).pass());
    CHECK(semidirect_stationarity(d1).basis_size == 3);
  }

  TEST_CASE("Z7 with squaring, K = 3") {
    auto l = zn(7);
    auto g = l.generators()[0];
    auto data = make_cyclic_data(
        l, {ExactMatrix::diagonal({Cyc::zeta(7, 1), Cyc::zeta(7, 2), Cyc::zeta(7, 4)})}, {g * g}, 3);
    auto m = build_cyclic_model(data);
    CHECK(verify_half_liberation(m).pass());
    CHECK(verify_k_symmetry(m));
    CHECK(semidirect_stationarity(data).pass());
  }

  TEST_CASE("invalid automorphism data") {
    auto l = zn(5);
    auto g = l.generators()[0];
    auto code_of = [](auto&& f) {
      try {
        f();
      } catch (const Error& e) {
        return e.code();
      }
      return Errc::Parse;
    };
    CHECK(code_of([&] { make_cyclic_data(l, {dz(5)}, {Perm::identity(5)}, 2); }) == Errc::InvalidAutomorphism);
    // g -> g^2 has order 4, so K = 2 is not a multiple of it
    CHECK(code_of([&] { make_cyclic_data(l, {dz(5)}, {g * g}, 2); }) == Errc::InvalidAutomorphism);
    CHECK(code_of([&] { make_cyclic_data(l, {ExactMatrix::diagonal({Cyc(2), Cyc(1)})}, {g}, 1); }) ==
          Errc::NotRepresentation);
    CHECK(code_of([&] { make_cyclic_data(l, {dz(5)}, {inverse_of(g)}, 0); }) == Errc::InvalidArgument);
  }

  TEST_CASE("conjugation automorphism") {
    auto l = zn(5);
    auto imgs = conjugation_automorphism(l, {dz(5)});
    REQUIRE(imgs.size() == 1);
    CHECK(imgs[0] == inverse_of(l.generators()[0]));
    auto data = make_cyclic_data(l, {dz(5)}, imgs, 2);
    CHECK(semidirect_stationarity(data).pass());
    CHECK(conjugation_automorphism(l, {ExactMatrix::diagonal({Cyc::zeta(5, 1)})})[0] == imgs[0]);
    CHECK_THROWS_AS(conjugation_automorphism(l, {ExactMatrix::identity(1)}), Error);
  }

  TEST_CASE("k-symmetry fails off cyclic models") {
    auto p = ExactMatrix::from_rows({{Cyc(Rational(1, 2)), Cyc(Rational(1, 2))}, {Cyc(Rational(1, 2)), Cyc(Rational(1, 2))}});
    auto q = ExactMatrix::identity(2) - p;
    auto m = MatrixModel<Cyc>::single_fiber(2, 2, {p, q, q, p});
    CHECK_FALSE(verify_k_symmetry(m));
  }

  TEST_CASE("a non-cycle entry breaks diagonal products") {
    auto l = zn(5);
    auto m = build_cyclic_model(make_cyclic_data(l, {dz(5)}, {inverse_of(l.generators()[0])}, 2));
    m.entry(0, 0, 0) = ExactMatrix::from_rows({{Cyc(Rational(1, 2)), Cyc(Rational(1, 2))}, {Cyc(Rational(1, 2)), Cyc(Rational(-1, 2))}});
    auto hl = verify_half_liberation(m);
    CHECK_FALSE(hl.diagonal_products);
    CHECK_FALSE(hl.pass());
    CHECK_FALSE(hl.failures.empty());
    CHECK_FALSE(verify_k_symmetry(m));
  }
}
