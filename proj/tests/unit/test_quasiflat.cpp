#include <doctest.h>

#include <algorithm>
#include <functional>

#include "oracles.hpp"
#include "qgm/algebra/representation.hpp"
#include "qgm/error.hpp"
#include "qgm/magic/magic.hpp"
#include "qgm/magic/words.hpp"
#include "qgm/quasiflat/latin.hpp"
#include "qgm/quasiflat/trace_vector.hpp"
#include "qgm/quasiflat/uniform.hpp"

using namespace qgm;

namespace {
Perm cyc(std::size_t n, std::vector<std::vector<std::uint32_t>> c) { return Perm::from_cycles(n, c); }

PermGroup zn(std::uint32_t n) {
  std::vector<std::uint32_t> c;
  for (std::uint32_t i = 1; i <= n; ++i) c.push_back(i);
  return PermGroup::generate(n, {Perm::from_cycles(n, {c})});
}

PermGroup klein6() { return PermGroup::generate(6, {cyc(6, {{1, 2}, {3, 4}}), cyc(6, {{1, 2}, {5, 6}})}); }
PermGroup klein4() { return PermGroup::generate(4, {cyc(4, {{1, 2}, {3, 4}}), cyc(4, {{1, 3}, {2, 4}})}); }
PermGroup s3() { return PermGroup::generate(3, {cyc(3, {{1, 2}}), cyc(3, {{1, 3}})}); }

bool oracle_latin(const std::vector<oracle::Images>& fam) {
  for (std::size_t m = 0; m < fam[0].size(); ++m) {
    std::vector<std::uint32_t> v;
    for (const auto& s : fam) v.push_back(s[m]);
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) return false;
  }
  return true;
}

ExactMatrix naive_power_trace_check(const ExactMatrix& u, std::size_t a) {
  auto p = ExactMatrix::identity(u.rows());
  for (std::size_t b = 0; b < a; ++b) p = p * u;
  return p;
}
}  // namespace

TEST_SUITE("quasiflat") {
  TEST_CASE("Latin family search") {
    auto none = latin_family_search(klein6());
    CHECK(none.k == 2);
    CHECK_FALSE(none.family);
    CHECK(none.exhaustive);
    CHECK(none.nodes > 0);
    CHECK(none.derangement_crosscheck.value_or(false));

    auto k4 = latin_family_search(klein4());
    REQUIRE(k4.family);
    CHECK(k4.family->members.size() == 4);
    CHECK(k4.family->members[0] == Perm::identity(4));
    CHECK(is_latin_family(k4.family->members));

    for (std::uint32_t n : {2u, 3u, 5u}) {
      auto g = zn(n);
      auto r = latin_family_search(g);
      REQUIRE(r.family);
      CHECK(r.family->members.size() == n);
      std::vector<Perm> all = g.elements();
      for (const auto& m : r.family->members) CHECK(std::find(all.begin(), all.end(), m) != all.end());
    }
    CHECK_THROWS_AS(latin_family_search(PermGroup::generate(3, {cyc(3, {{1, 2}})})), Error);
  }

  TEST_CASE("derangements against brute force") {
    for (const auto& g : {klein6(), klein4(), s3(), zn(4)}) {
      std::vector<oracle::Images> gens;
      for (const auto& s : g.generators()) gens.push_back(s.images());
      std::size_t expect = 0;
      for (const auto& s : oracle::closure(gens)) {
        bool fixed = false;
        for (std::size_t i = 0; i < s.size(); ++i) fixed |= s[i] == i;
        if (!fixed) ++expect;
      }
      CHECK(derangement_scan(g).size() == expect);
    }
    CHECK(derangement_scan(klein6()).empty());
    CHECK(derangement_scan(klein4()).size() == 3);
  }

  TEST_CASE("left-translation invariance of the Latin condition") {
    for (const auto& g : {klein4(), s3(), zn(4)}) {
      const auto& el = g.elements();
      // every pair when the orbit size is 2, otherwise every triple
      std::size_t k = orbits_from_source(g).common_size;
      std::vector<std::size_t> idx(k);
      std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
        if (pos == k) {
          std::vector<Perm> fam;
          for (auto i : idx) fam.push_back(el[i]);
          bool valid = is_latin_family(fam);
          std::vector<oracle::Images> raw;
          for (const auto& f : fam) raw.push_back(f.images());
          CHECK(valid == oracle_latin(raw));
          for (const auto& h : el) {
            std::vector<Perm> moved;
            for (const auto& f : fam) moved.push_back(h * f);
            CHECK(is_latin_family(moved) == valid);
          }
          return;
        }
        for (std::size_t i = start; i < el.size(); ++i) {
          idx[pos] = i;
          rec(pos + 1, i + 1);
        }
      };
      rec(0, 0);
    }
  }

  TEST_CASE("classical models from families") {
    auto g = s3();
    auto r = latin_family_search(g);
    REQUIRE(r.family);
    auto m = classical_model_from_family(g, r.family->members);
    CHECK(m.points() == 6);
    CHECK(verify_magic(m).pass);
    CHECK(quasi_flat_check(m, orbits_from_source(g)).quasi_flat);
    CHECK(stationarity_check(g, m, 2).pass);
    try {
      classical_model_from_family(g, {Perm::identity(3), Perm::identity(3), Perm::identity(3)});
      FAIL("expected InvalidFamily");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::InvalidFamily);
    }
  }

  TEST_CASE("sparse Latin square round trip") {
    for (const auto& g : {klein4(), s3(), zn(5)}) {
      auto r = latin_family_search(g);
      REQUIRE(r.family);
      auto sq = latin_square_from_family(r.family->members);
      CHECK(family_from_latin_square(sq) == r.family->members);
      for (std::size_t i = 0; i < sq.n; ++i) {
        std::vector<std::size_t> row;
        for (std::size_t j = 0; j < sq.n; ++j) {
          if (sq(i, j) != 0) row.push_back(sq(i, j));
        }
        std::sort(row.begin(), row.end());
        CHECK(std::adjacent_find(row.begin(), row.end()) == row.end());
      }
    }
  }

  TEST_CASE("uniform groups") {
    auto v = PermGroup::generate(4, {cyc(4, {{1, 2}}), cyc(4, {{3, 4}})});
    auto ok = uniform_check(v, v.generators());
    CHECK(ok.uniform());
    CHECK(ok.k == 2);
    CHECK(ok.m == 2);

    auto z3 = zn(3);
    CHECK(uniform_check(z3, z3.generators()).uniform());

    // S3 on two reflections: abelianization is Z2, not Z2^2
    auto s = uniform_check(s3(), s3().generators());
    CHECK_FALSE(s.uniform());
    CHECK(s.abelianization == std::vector<std::int64_t>{2});
    CHECK(s.failing == std::vector<int>{3});
    CHECK(s.symmetric);

    auto mixed = uniform_check(s3(), {cyc(3, {{1, 2}}), cyc(3, {{1, 2, 3}})});
    CHECK(std::find(mixed.failing.begin(), mixed.failing.end(), 2) != mixed.failing.end());

    auto short_gens = uniform_check(v, {cyc(4, {{1, 2}})});
    CHECK(std::find(short_gens.failing.begin(), short_gens.failing.end(), 1) != short_gens.failing.end());
  }

  TEST_CASE("trace vectors") {
    auto flat = ExactMatrix::diagonal({Cyc(1), Cyc::zeta(3, 1), Cyc::zeta(3, 2)});
    auto r = trace_vector_check(flat, 3);
    CHECK(r.flat);
    CHECK(r.spectral_flat);
    for (std::size_t a = 0; a < 3; ++a) CHECK(r.t[a] == naive_power_trace_check(flat, a).trace());

    auto id = trace_vector_check(ExactMatrix::identity(3), 3);
    CHECK_FALSE(id.flat);
    CHECK_FALSE(id.spectral_flat);
    CHECK(id.multiplicities == std::vector<std::size_t>{3, 0, 0});

    auto swap = ExactMatrix::from_rows({{Cyc(0), Cyc(1)}, {Cyc(1), Cyc(0)}});
    CHECK(trace_vector_check(swap, 2).flat);
    CHECK(trace_vector_check(to_float(swap), 2).flat);

    try {
      trace_vector_check(ExactMatrix::diagonal({Cyc::zeta(3, 1)}), 2);
      FAIL("expected NotFiniteOrder");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::NotFiniteOrder);
    }
    CHECK_THROWS_AS(trace_vector_check(ExactMatrix::diagonal({Cyc(2)}), 1), Error);
  }

  TEST_CASE("diagonal 0/1 patterns, exhaustive") {
    for (std::size_t k = 2; k <= 4; ++k) {
      for (std::size_t mask = 1; mask < (1u << k); ++mask) {
        std::vector<Cyc> d;
        for (std::size_t a = 0; a < k; ++a) {
          if (mask & (1u << a)) d.push_back(Cyc::zeta(k, static_cast<long long>(a)));
        }
        auto r = trace_vector_check(ExactMatrix::diagonal(d), k);
        CHECK(r.agrees());
        CHECK(r.flat == (mask == (1u << k) - 1));
      }
    }
  }

  TEST_CASE("dual flatness") {
    auto z2 = zn(2);
    auto reg = regular_representation(z2, z2.generators()[0]);
    auto c = quasiflat_dual_check<Cyc>({{reg}}, 2);
    CHECK(c.pass);
    CHECK(c.model_quasi_flat.value_or(false));

    auto bad = quasiflat_dual_check<Cyc>({{ExactMatrix::identity(2)}}, 2);
    CHECK_FALSE(bad.pass);
    REQUIRE(bad.witnesses.size() == 1);
    CHECK(bad.witnesses[0].generator == 0);
    CHECK(bad.witnesses[0].multiplicities == std::vector<std::size_t>{2, 0});

    // standard representation of S3 on two reflections
    auto r1 = ExactMatrix::from_rows({{Cyc(0), Cyc(1)}, {Cyc(1), Cyc(0)}});
    auto r2 = ExactMatrix::from_rows({{Cyc(0), Cyc::zeta(3, 1)}, {Cyc::zeta(3, 2), Cyc(0)}});
    auto s = quasiflat_dual_check<Cyc>({{r1, r2}}, 2);
    CHECK(s.pass);
    CHECK(s.model_quasi_flat.value_or(false));
  }
}
