#include <doctest.h>

#include "qgm/error.hpp"
#include "qgm/thoma/induced.hpp"
#include "qgm/thoma/laurent.hpp"

using namespace qgm;

namespace {
Perm cyc(std::size_t n, std::vector<std::vector<std::uint32_t>> c) { return Perm::from_cycles(n, c); }

// (1/|Λ|) Σ_χ Σ_x χ(x⁻¹gx) [x⁻¹gx ∈ Λ], computed from scratch
Cyc averaged_character(const FiniteExtension& ext, const Perm& g) {
  Cyc total;
  auto chars = ext.characters();
  for (const auto& chi : chars) {
    for (const auto& x : ext.representatives()) {
      auto c = x.inverse() * g * x;
      if (auto coords = ext.lambda_coords(c)) total += chi(*coords);
    }
  }
  return Cyc(Rational(1, static_cast<long>(chars.size()))) * total;
}
}  // namespace

TEST_SUITE("thoma") {
  TEST_CASE("Laurent elements") {
    FinAbelian z({0});
    auto a = LaurentElement::monomial(z, {1});
    auto b = LaurentElement::monomial(z, {-1});
    CHECK((a * b).identity_coefficient() == 1);
    CHECK(a.identity_coefficient() == 0);
    auto s = a + b;
    CHECK((s * s).identity_coefficient() == 2);  // (t + t⁻¹)² = t² + 2 + t⁻²
    FinAbelian z3({3});
    auto g = LaurentElement::monomial(z3, {2});
    CHECK((g * g * g).identity_coefficient() == 1);
    CHECK(g.evaluate(Character(z3, {1})) == Cyc::zeta(3, 2));
    CHECK_THROWS_AS(a.evaluate(Character(FinAbelian({3}), {1})), Error);
  }

  TEST_CASE("finite pairs are stationary with Frobenius agreement") {
    struct Case {
      PermGroup gamma, lambda;
      std::size_t index;
    };
    auto s3 = PermGroup::generate(3, {cyc(3, {{1, 2}}), cyc(3, {{1, 2, 3}})});
    auto a3 = PermGroup::generate(3, {cyc(3, {{1, 2, 3}})});
    auto d4 = PermGroup::generate(4, {cyc(4, {{1, 2, 3, 4}}), cyc(4, {{1, 3}})});
    auto z4 = PermGroup::generate(4, {cyc(4, {{1, 2, 3, 4}})});
    auto z6 = PermGroup::generate(6, {cyc(6, {{1, 2, 3, 4, 5, 6}})});
    auto k4 = PermGroup::generate(4, {cyc(4, {{1, 2}, {3, 4}}), cyc(4, {{1, 3}, {2, 4}})});
    auto s4 = PermGroup::generate(4, {cyc(4, {{1, 2}}), cyc(4, {{1, 2, 3, 4}})});
    for (auto& c : std::vector<Case>{{s3, a3, 2}, {d4, z4, 2}, {z6, z6, 1}, {s4, k4, 6}}) {
      FiniteExtension ext(c.gamma, c.lambda);
      CHECK(ext.index() == c.index);
      auto cert = check_stationarity(ext);
      CHECK(cert.stationary);
      CHECK(cert.frobenius_agrees.value_or(false));
      CHECK(cert.character_average_agrees.value_or(false));
      CHECK(cert.values.size() == c.gamma.order());
      for (const auto& g : c.gamma.elements()) {
        // oracle: averaged Frobenius character = |Φ| δ_{g,e}
        CHECK(averaged_character(ext, g) == Cyc(g.is_identity() ? static_cast<long>(c.index) : 0L));
        auto m = ext.induce(g);
        CHECK(m.is_monomial());
        CHECK(m.integrated_ntrace() == (g.is_identity() ? 1 : 0));
      }
    }
  }

  TEST_CASE("induction is multiplicative") {
    auto s3 = PermGroup::generate(3, {cyc(3, {{1, 2}}), cyc(3, {{1, 2, 3}})});
    auto a3 = PermGroup::generate(3, {cyc(3, {{1, 2, 3}})});
    FiniteExtension ext(s3, a3);
    for (const auto& g : s3.elements()) {
      for (const auto& h : s3.elements()) CHECK(ext.induce(g) * ext.induce(h) == ext.induce(g * h));
    }
    auto a4 = PermGroup::generate(4, {cyc(4, {{1, 2, 3}}), cyc(4, {{1, 2}, {3, 4}})});
    FiniteExtension ext4(a4, PermGroup::generate(4, {cyc(4, {{1, 2}, {3, 4}}), cyc(4, {{1, 3}, {2, 4}})}));
    CHECK_THROWS_AS(ext4.induce(cyc(4, {{1, 2}})), Error);
  }

  TEST_CASE("invalid pairs") {
    auto s3 = PermGroup::generate(3, {cyc(3, {{1, 2}}), cyc(3, {{1, 2, 3}})});
    auto c2 = PermGroup::generate(3, {cyc(3, {{1, 2}})});
    try {
      FiniteExtension(s3, c2);
      FAIL("expected NotNormal");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotNormal);
    }
    auto s4 = PermGroup::generate(4, {cyc(4, {{1, 2}}), cyc(4, {{1, 2, 3, 4}})});
    auto a4 = PermGroup::generate(4, {cyc(4, {{1, 2, 3}}), cyc(4, {{1, 2}, {3, 4}})});
    try {
      FiniteExtension(s4, a4);
      FAIL("expected NotAbelian");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotAbelian);
    }
  }

  TEST_CASE("split extensions with a free part") {
    // infinite dihedral group Z ⋊ Z_2
    auto phi = PermGroup::generate(2, {cyc(2, {{1, 2}})});
    SplitExtension dinf(FinAbelian({0}), phi, {{{-1}}});
    auto cert = check_stationarity(dinf, 4);
    CHECK(cert.stationary);
    CHECK(cert.index == 2);
    CHECK(cert.lambda_order == 0);
    CHECK(cert.values.size() == dinf.ball(4).size());
    // Z² ⋊ Z_4 with rotation by 90 degrees
    auto z4 = PermGroup::generate(4, {cyc(4, {{1, 2, 3, 4}})});
    SplitExtension p4(FinAbelian({0, 0}), z4, {{{0, -1}, {1, 0}}});
    CHECK(check_stationarity(p4, 3).stationary);
    auto r = p4.generators().back();
    auto e = p4.identity();
    auto x = e;
    for (int i = 0; i < 4; ++i) x = p4.multiply(x, r);
    CHECK(x == e);
    // a matrix that is not an action of Z_2
    CHECK_THROWS_AS(SplitExtension(FinAbelian({0}), phi, {{{2}}}), Error);
  }
}
