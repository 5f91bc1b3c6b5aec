#include <doctest.h>

#include "oracles.hpp"
#include "qgm/algebra/representation.hpp"
#include "qgm/error.hpp"
#include "qgm/exact/linalg.hpp"
#include "qgm/magic/bichon.hpp"
#include "qgm/magic/magic.hpp"
#include "qgm/magic/words.hpp"
#include "qgm/quasiflat/latin.hpp"

using namespace qgm;

namespace {
Perm cyc(std::size_t n, std::vector<std::vector<std::uint32_t>> c) { return Perm::from_cycles(n, c); }

Cyc half() { return Cyc(Rational(1, 2)); }

// u = [[p, 1-p], [1-p, p]], p = (1 + U)/2 with U the swap
MatrixModel<Cyc> dual_z2() {
  auto p = ExactMatrix::from_rows({{half(), half()}, {half(), half()}});
  auto q = ExactMatrix::identity(2) - p;
  return MatrixModel<Cyc>::single_fiber(2, 2, {p, q, q, p});
}

std::vector<Perm> rotations() {
  auto r = cyc(4, {{1, 2, 3, 4}});
  return {Perm::identity(4), r, r * r, r * r * r};
}

PermGroup d4() { return PermGroup::generate(4, {cyc(4, {{1, 2, 3, 4}}), cyc(4, {{1, 3}})}); }
PermGroup klein4() { return PermGroup::generate(4, {cyc(4, {{1, 2}, {3, 4}}), cyc(4, {{1, 3}, {2, 4}})}); }

MatrixModel<Cyc> d4_single_fiber() {
  auto full = classical_model_from_family(d4(), rotations());
  return MatrixModel<Cyc>::single_fiber(4, 4, full.fibers[0]);
}
}  // namespace

TEST_SUITE("magic") {
  TEST_CASE("verify_magic") {
    CHECK(verify_magic(dual_z2()).pass);
    auto broken = dual_z2();
    broken.entry(0, 0, 0) = Cyc(Rational(1, 2)) * ExactMatrix::identity(2);
    auto rep = verify_magic(broken);
    CHECK_FALSE(rep.pass);
    REQUIRE_FALSE(rep.violations.empty());
    CHECK(rep.violations[0].kind == "not-projection");
    auto lat = classical_model_from_family(klein4(), klein4().elements());
    CHECK(verify_magic(lat).pass);
    CHECK(verify_magic(to_float(lat)).pass);
  }

  TEST_CASE("row sums of normalized traces are one") {
    for (const auto& m : {dual_z2(), classical_model_from_family(klein4(), klein4().elements()), d4_single_fiber()}) {
      REQUIRE(verify_magic(m).pass);
      for (std::size_t x = 0; x < m.points(); ++x) {
        for (std::size_t i = 0; i < m.size; ++i) {
          Cyc s;
          for (std::size_t j = 0; j < m.size; ++j) s += ntrace(m.entry(x, i, j));
          CHECK(s == Cyc(1));
        }
      }
    }
  }

  TEST_CASE("orbit structures") {
    auto k6 = PermGroup::generate(6, {cyc(6, {{1, 2}, {3, 4}}), cyc(6, {{1, 2}, {5, 6}})});
    auto o = orbits_from_source(k6);
    CHECK(o.blocks.size() == 3);
    CHECK(o.quasi_transitive);
    CHECK(o.common_size == 2);
    auto d = orbits_from_dual({2, 2});
    CHECK(d.blocks == std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}});
    CHECK(orbits_from_model(dual_z2()).blocks.size() == 1);
    CHECK(orbits_from_model(dual_z2()).lower_bound);
    auto mixed = orbits_from_dual({1, 2});
    CHECK_FALSE(mixed.quasi_transitive);
  }

  TEST_CASE("quasi-flatness") {
    auto z3 = PermGroup::generate(3, {cyc(3, {{1, 2, 3}})});
    auto m = classical_model_from_family(z3, z3.elements());
    CHECK(quasi_flat_check(m, orbits_from_source(z3)).quasi_flat);
    CHECK(quasi_flat_check(dual_z2(), orbits_from_model(dual_z2())).quasi_flat);
    auto bad = m;
    bad.entry(0, 0, 0) = ExactMatrix::identity(3);
    auto rep = quasi_flat_check(bad, orbits_from_source(z3));
    CHECK_FALSE(rep.quasi_flat);
    CHECK(rep.witnesses[0].rank == 3);
    try {
      quasi_flat_check(m, orbits_from_dual({1, 2}));
      FAIL("expected NotQuasiTransitive");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotQuasiTransitive);
    }
  }

  TEST_CASE("Haar words of classical groups") {
    auto s3 = PermGroup::generate(3, {cyc(3, {{1, 2}}), cyc(3, {{1, 2, 3}})});
    CHECK(haar_word_classical(s3, {{0, 0}}) == Rational(1, 3));
    CHECK(haar_word_classical(s3, {{0, 0}, {1, 1}}) == Rational(1, 6));
    CHECK(haar_word_classical(d4(), {{0, 0}, {1, 0}}) == 0);
    auto o = oracle::closure({d4().generators()[0].images(), d4().generators()[1].images()});
    auto st = haar_state_classical(d4(), 2);
    for (std::size_t k = 0; k <= 2; ++k) {
      for (std::size_t c = 0; c < st.count(k); ++c) {
        auto w = StateOnWords<Cyc>::decode(4, k, c);
        CHECK(st.at(k, c) == Cyc(oracle::haar(o, w)));
      }
    }
  }

  TEST_CASE("fixed-point matrices") {
    auto s4 = PermGroup::generate(4, {cyc(4, {{1, 2}}), cyc(4, {{1, 2, 3, 4}})});
    auto fp = fixed_point_matrix(s4);
    CHECK(fp.pass());
    CHECK(fp.q(0, 3) == Cyc(Rational(1, 4)));
    auto triv = fixed_point_matrix(PermGroup::generate(3, {Perm::identity(3)}));
    CHECK(triv.q.near(ExactMatrix::identity(3)));
    CHECK(triv.pass());
    auto k6 = PermGroup::generate(6, {cyc(6, {{1, 2}, {3, 4}}), cyc(6, {{1, 2}, {5, 6}})});
    auto q = fixed_point_matrix(k6).q;
    CHECK((q * q).near(q));
    CHECK(q(0, 1) == half());
    CHECK(q(0, 2) == Cyc(0));
    auto lat = classical_model_from_family(klein4(), klein4().elements());
    CHECK(fixed_point_matrix(lat, orbits_from_source(klein4())).pass());
  }

  TEST_CASE("stationarity certificates") {
    auto k = klein4();
    auto lat = classical_model_from_family(k, k.elements());
    auto cert = stationarity_check(k, lat, 2);
    CHECK(cert.pass);
    CHECK(cert.words_checked == 1 + 16 + 256);

    auto bad = stationarity_check(d4(), d4_single_fiber(), 2);
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.first_mismatch);
    CHECK(*bad.first_mismatch == IndexWord{{0, 0}, {1, 1}});
    CHECK(bad.model_value == Cyc(Rational(1, 4)));
    CHECK(bad.reference_value == Cyc(Rational(1, 8)));

    auto z2 = PermGroup::generate(2, {cyc(2, {{1, 2}})});
    DualReference ref(z2);
    auto dual = stationarity_check(ref, dual_z2(), 3);
    CHECK(dual.pass);
    CHECK(dual.quasi_flat_crosscheck.value_or(false));
    CHECK(haar_state_dual(ref, 1).value({{0, 0}}) == half());
  }

  TEST_CASE("convolution idempotency") {
    auto k = klein4();
    CHECK(convolution_idempotency(haar_state_classical(d4(), 2), 2).idempotent);
    auto lat = classical_model_from_family(k, k.elements());
    CHECK(convolution_idempotency(model_state(lat, 2), 2).idempotent);
    // middle-index oracle on the single-fiber rotation model
    auto phi = model_state(d4_single_fiber(), 2);
    for (std::size_t code = 0; code < phi.count(2); ++code) {
      auto w = StateOnWords<Cyc>::decode(4, 2, code);
      Cyc conv;
      for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) {
          conv += phi.value({{w[0].first, a}, {w[1].first, b}}) * phi.value({{a, w[0].second}, {b, w[1].second}});
        }
      }
      CHECK(conv == phi.at(2, code));
    }
    // a non-idempotent functional: the counit-like state φ(u_ij) = δ_ij/2 + 1/4
    StateOnWords<Cyc> eps(2, 1);
    eps.at(1, 0) = Cyc(Rational(3, 4));
    eps.at(1, 3) = Cyc(Rational(3, 4));
    eps.at(1, 1) = Cyc(Rational(1, 4));
    eps.at(1, 2) = Cyc(Rational(1, 4));
    auto res = convolution_idempotency(eps, 1);
    CHECK_FALSE(res.idempotent);
    CHECK(res.convolved == Cyc(Rational(10, 16)));
  }

  TEST_CASE("stationary single-fiber models are quasi-flat") {
    for (std::size_t n : {2u, 3u, 4u}) {
      std::vector<std::vector<std::uint32_t>> c{{}};
      for (std::uint32_t i = 1; i <= n; ++i) c[0].push_back(i);
      auto g = PermGroup::generate(n, {Perm::from_cycles(n, c)});
      auto m = bichon_build<Cyc>({n}, {regular_representation(g, g.generators()[0])});
      auto cert = stationarity_check(DualReference(g), m, 2);
      CHECK(cert.pass);
      CHECK(cert.quasi_flat_crosscheck.value_or(false));
      CHECK(convolution_idempotency(model_state(m, 2), 2).idempotent);
    }
  }

  TEST_CASE("Bichon construction") {
    auto z2 = PermGroup::generate(2, {cyc(2, {{1, 2}})});
    auto m = bichon_build<Cyc>({2}, {regular_representation(z2, z2.generators()[0])});
    auto expect = dual_z2();
    for (std::size_t l = 0; l < 4; ++l) CHECK(m.fibers[0][l].near(expect.fibers[0][l]));

    auto z3 = PermGroup::generate(3, {cyc(3, {{1, 2, 3}})});
    auto m3 = bichon_build<Cyc>({3}, {regular_representation(z3, z3.generators()[0])});
    CHECK(verify_magic(m3).pass);
    for (const auto& e : m3.fibers[0]) CHECK(rank(e) == 1);
    CHECK(is_block_circulant(m3, {3}));

    auto v4 = PermGroup::generate(4, {cyc(4, {{1, 2}}), cyc(4, {{3, 4}})});
    std::vector<ExactMatrix> gens;
    for (const auto& g : v4.generators()) gens.push_back(regular_representation(v4, g));
    auto m4 = bichon_build<Cyc>({2, 2}, gens);
    CHECK(verify_magic(m4).pass);
    CHECK(orbits_from_model(m4).blocks == std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}});
    CHECK(is_block_circulant(m4, {2, 2}));
    CHECK(dual_element_check(DualReference(v4), gens).pass);
    CHECK_FALSE(dual_element_check(DualReference(v4), std::vector<ExactMatrix>{ExactMatrix::identity(1), ExactMatrix::identity(1)}).pass);

    try {
      bichon_build<Cyc>({2}, {ExactMatrix::diagonal({Cyc::zeta(3, 1)})});
      FAIL("expected NotFiniteOrder");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotFiniteOrder);
    }
  }

  TEST_CASE("float and exact states agree") {
    auto k = klein4();
    auto lat = classical_model_from_family(k, k.elements());
    auto e = model_state(lat, 2);
    auto f = model_state(to_float(lat), 2);
    for (std::size_t len = 0; len <= 2; ++len) {
      for (std::size_t c = 0; c < e.count(len); ++c) CHECK(std::abs(e.at(len, c).to_complex() - f.at(len, c)) < 1e-12);
    }
    CHECK(stationarity_check(k, to_float(lat), 2, 1e-9).pass);
  }
}
