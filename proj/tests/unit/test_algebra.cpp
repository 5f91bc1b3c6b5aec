#include <doctest.h>

#include "oracles.hpp"
#include "qgm/algebra/abelian.hpp"
#include "qgm/algebra/automorphism.hpp"
#include "qgm/algebra/perm_group.hpp"
#include "qgm/algebra/representation.hpp"
#include "qgm/algebra/table_group.hpp"
#include "qgm/error.hpp"

using namespace qgm;

namespace {
Perm cyc(std::size_t n, std::vector<std::vector<std::uint32_t>> c) { return Perm::from_cycles(n, c); }
}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("permutation basics") {
    auto a = cyc(4, {{1, 2, 3}});
    auto b = cyc(4, {{3, 4}});
    CHECK((a * b)(3) == a(b(3)));
    CHECK(a.order() == 3);
    CHECK((a * a.inverse()).is_identity());
    CHECK(a.to_string() == "(1 2 3)");
    CHECK(Perm::identity(3).to_string() == "()");
    CHECK(cyc(4, {{1, 2}, {3, 4}}).is_derangement());
    CHECK(a.fixed_point_count() == 1);
    CHECK_THROWS_AS(Perm(std::vector<std::uint32_t>{0, 0}), Error);
    CHECK_THROWS_AS(a * Perm::identity(3), Error);
  }

  TEST_CASE("group generation matches a brute-force closure") {
    std::vector<std::vector<Perm>> cases = {
        {cyc(4, {{1, 2, 3, 4}}), cyc(4, {{1, 3}})},
        {cyc(5, {{1, 2}}), cyc(5, {{1, 2, 3, 4, 5}})},
        {cyc(6, {{1, 2}, {3, 4}}), cyc(6, {{1, 2}, {5, 6}})},
    };
    for (const auto& gens : cases) {
      auto g = PermGroup::generate(gens[0].degree(), gens);
      std::vector<oracle::Images> gi;
      for (const auto& p : gens) gi.push_back(p.images());
      auto o = oracle::closure(gi);
      CHECK(g.order() == o.size());
      for (const auto& x : g.elements()) CHECK(o.count(x.images()) == 1);
      CHECK(g.element(0).is_identity());
    }
  }

  TEST_CASE("cap and degree errors") {
    auto gens = std::vector<Perm>{cyc(5, {{1, 2}}), cyc(5, {{1, 2, 3, 4, 5}})};
    try {
      PermGroup::generate(5, gens, 100);
      FAIL("expected CapExceeded");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::CapExceeded);
    }
    CHECK(PermGroup::generate(5, gens, 120).order() == 120);
    CHECK_THROWS_AS(PermGroup::generate(4, gens), Error);
  }

  TEST_CASE("classical orbits") {
    auto g = PermGroup::generate(6, {cyc(6, {{1, 2}, {3, 4}}), cyc(6, {{1, 2}, {5, 6}})});
    auto o = orbits_classical(g);
    REQUIRE(o.size() == 3);
    CHECK(o[0] == std::vector<std::size_t>{0, 1});
    CHECK(o[1] == std::vector<std::size_t>{2, 3});
    CHECK(o[2] == std::vector<std::size_t>{4, 5});
    auto trivial = PermGroup::generate(3, {Perm::identity(3)});
    CHECK(orbits_classical(trivial).size() == 3);
  }

  TEST_CASE("normality, quotients and derived subgroups") {
    auto s3 = PermGroup::generate(3, {cyc(3, {{1, 2}}), cyc(3, {{1, 2, 3}})});
    auto a3 = PermGroup::generate(3, {cyc(3, {{1, 2, 3}})});
    auto c2 = PermGroup::generate(3, {cyc(3, {{1, 2}})});
    CHECK(is_normal(a3, s3));
    CHECK_FALSE(is_normal(c2, s3));
    auto q = quotient_data(s3, a3);
    CHECK(q.representatives.size() == 2);
    CHECK(q.table.order() == 2);
    CHECK_THROWS_AS(quotient_data(s3, c2), Error);
    CHECK(derived_subgroup(s3).order() == 3);
    auto s4 = PermGroup::generate(4, {cyc(4, {{1, 2}}), cyc(4, {{1, 2, 3, 4}})});
    CHECK(derived_subgroup(s4).order() == 12);
    auto d = PermGroup::generate(3, {cyc(3, {{1, 2}})});
    auto not_sub = PermGroup::generate(3, {cyc(3, {{1, 3}})});
    CHECK_THROWS_AS(is_normal(not_sub, c2), Error);
    (void)d;
  }

  TEST_CASE("semidirect product of tables") {
    // Z_5 ⋊ Z_2 with inversion is D_5
    std::vector<std::vector<std::size_t>> z5(5, std::vector<std::size_t>(5));
    for (std::size_t a = 0; a < 5; ++a) {
      for (std::size_t b = 0; b < 5; ++b) z5[a][b] = (a + b) % 5;
    }
    TableGroup l(z5);
    std::vector<std::size_t> inv{0, 4, 3, 2, 1};
    auto d5 = semidirect(l, inv, 2);
    CHECK(d5.order() == 10);
    CHECK(d5.is_associative());
    CHECK_FALSE(d5.is_abelian());
    std::size_t involutions = 0;
    for (std::size_t x = 0; x < 10; ++x) involutions += d5.element_order(x) == 2;
    CHECK(involutions == 5);
    std::vector<std::size_t> doubling{0, 2, 4, 1, 3};  // order 4
    CHECK_THROWS_AS(semidirect(l, doubling, 2), Error);
  }

  TEST_CASE("abelian dual: closure and orthogonality") {
    for (auto factors : std::vector<std::vector<std::int64_t>>{{3}, {2, 2}, {2, 4}, {6}}) {
      FinAbelian a(factors);
      auto dual = abelian_dual(a);
      CHECK(dual.size() == a.order());
      auto elems = a.elements();
      for (const auto& chi : dual) {
        Cyc sum;
        for (const auto& x : elems) sum += chi(x);
        CHECK(sum == Cyc(chi.is_trivial() ? static_cast<long>(a.order()) : 0L));
      }
      // pointwise product of two characters is a character
      for (const auto& c1 : dual) {
        for (const auto& c2 : dual) {
          bool found = false;
          for (const auto& c3 : dual) {
            bool same = true;
            for (const auto& x : elems) same = same && c1(x) * c2(x) == c3(x);
            found = found || same;
          }
          CHECK(found);
        }
      }
    }
  }

  TEST_CASE("Z3 characters are cube roots of unity") {
    auto dual = abelian_dual(FinAbelian({3}));
    for (long a = 0; a < 3; ++a) {
      for (long b = 0; b < 3; ++b) CHECK(dual[a]({b}) == Cyc::zeta(3, a * b));
    }
  }

  TEST_CASE("abelian structure of permutation groups") {
    auto k = PermGroup::generate(4, {cyc(4, {{1, 2}, {3, 4}}), cyc(4, {{1, 3}, {2, 4}})});
    auto s = abelian_structure(k);
    CHECK(s.type.factors() == std::vector<std::int64_t>{2, 2});
    auto z6 = PermGroup::generate(5, {cyc(5, {{1, 2, 3}}), cyc(5, {{4, 5}})});
    CHECK(abelian_structure(z6).type.factors() == std::vector<std::int64_t>{6});
    auto s3 = PermGroup::generate(3, {cyc(3, {{1, 2}}), cyc(3, {{1, 3}})});
    CHECK_THROWS_AS(abelian_structure(s3), Error);
    // coordinates form an isomorphism
    for (std::size_t x = 0; x < z6.order(); ++x) {
      for (std::size_t y = 0; y < z6.order(); ++y) {
        auto xy = *z6.index_of(z6.element(x) * z6.element(y));
        CHECK(abelian_structure(z6).type.add(abelian_structure(z6).coords[x], abelian_structure(z6).coords[y]) ==
              abelian_structure(z6).coords[xy]);
      }
    }
  }

  TEST_CASE("automorphism extension") {
    auto z5 = PermGroup::generate(5, {cyc(5, {{1, 2, 3, 4, 5}})});
    auto g = z5.generators()[0];
    auto inv = extend_automorphism(z5, {g.inverse()});
    CHECK(inv.order() == 2);
    CHECK(is_multiplicative(z5, inv.map()));
    auto sq = extend_automorphism(z5, {g * g});
    CHECK(sq.order() == 4);
    CHECK(sq.power(4).is_identity());
    CHECK(sq.then(sq.inverse()).is_identity());
    try {
      extend_automorphism(z5, {Perm::identity(5)});
      FAIL("expected NotBijective");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotBijective);
    }
    auto s3 = PermGroup::generate(3, {cyc(3, {{1, 2}}), cyc(3, {{1, 2, 3}})});
    // (12) ↦ (123) does not respect orders
    CHECK_THROWS_AS(extend_automorphism(s3, {cyc(3, {{1, 2, 3}}), cyc(3, {{1, 2, 3}})}), Error);
    CHECK_THROWS_AS(extend_automorphism(z5, {cyc(5, {{1, 2}})}), Error);
  }

  TEST_CASE("representations extend along the Cayley graph") {
    auto z3 = PermGroup::generate(3, {cyc(3, {{1, 2, 3}})});
    auto rho = extend_representation(z3, std::vector<ExactMatrix>{ExactMatrix::diagonal({Cyc::zeta(3, 1)})});
    CHECK(rho.size() == 3);
    auto bad = ExactMatrix::diagonal({Cyc::zeta(4, 1)});
    try {
      extend_representation(z3, std::vector<ExactMatrix>{bad});
      FAIL("expected NotRepresentation");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotRepresentation);
    }
    auto reg = regular_representation(z3, z3.generators()[0]);
    CHECK(reg.trace() == Cyc(0));
    CHECK(power(reg, 3).near(ExactMatrix::identity(3)));
  }
}
