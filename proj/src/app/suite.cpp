#include "qgm/app/suite.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>

#include "qgm/algebra/representation.hpp"
#include "qgm/cyclic/cyclic.hpp"
#include "qgm/exact/linalg.hpp"
#include "qgm/io/json_io.hpp"
#include "qgm/magic/bichon.hpp"
#include "qgm/magic/magic.hpp"
#include "qgm/magic/words.hpp"
#include "qgm/quasiflat/latin.hpp"
#include "qgm/quasiflat/trace_vector.hpp"
#include "qgm/quasiflat/uniform.hpp"
#include "qgm/thoma/induced.hpp"

namespace qgm::app {

namespace {

using Clock = std::chrono::steady_clock;
using io::to_json;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

Perm cyc(std::size_t n, std::vector<std::vector<std::uint32_t>> cycles) { return Perm::from_cycles(n, cycles); }

// The groups used throughout.
struct Catalog {
  std::size_t cap;
  PermGroup group(std::size_t n, std::vector<Perm> gens) const { return PermGroup::generate(n, std::move(gens), cap); }

  PermGroup klein_s6() const { return group(6, {cyc(6, {{1, 2}, {3, 4}}), cyc(6, {{1, 2}, {5, 6}})}); }
  PermGroup klein_s4() const { return group(4, {cyc(4, {{1, 2}, {3, 4}}), cyc(4, {{1, 3}, {2, 4}})}); }
  PermGroup z3_s3() const { return group(3, {cyc(3, {{1, 2, 3}})}); }
  PermGroup z4_s4() const { return group(4, {cyc(4, {{1, 2, 3, 4}})}); }
  PermGroup d4_s4() const { return group(4, {cyc(4, {{1, 2, 3, 4}}), cyc(4, {{1, 3}})}); }
  PermGroup s4() const { return group(4, {cyc(4, {{1, 2, 3, 4}}), cyc(4, {{1, 2}})}); }
  PermGroup s3() const { return group(3, {cyc(3, {{1, 2}}), cyc(3, {{1, 3}})}); }
  PermGroup z5() const { return group(5, {cyc(5, {{1, 2, 3, 4, 5}})}); }
  PermGroup z7() const { return group(7, {cyc(7, {{1, 2, 3, 4, 5, 6, 7}})}); }

  MatrixModel<Cyc> d4_rotation_fiber() const {
    auto g = d4_s4();
    auto r = cyc(4, {{1, 2, 3, 4}});
    std::vector<Perm> rot{Perm::identity(4), r, r * r, r * r * r};
    auto full = classical_model_from_family(g, rot);
    return MatrixModel<Cyc>::single_fiber(4, 4, full.fibers[*g.index_of(Perm::identity(4))]);
  }

  CyclicModelData cyclic_z5(std::size_t k) const {
    auto l = z5();
    auto v = ExactMatrix::diagonal({Cyc::zeta(5, 1), Cyc::zeta(5, -1)});
    auto g = l.generators()[0];
    return make_cyclic_data(l, {v}, {k == 1 ? g : g.inverse()}, k);
  }
  CyclicModelData cyclic_z7() const {
    auto l = z7();
    auto v = ExactMatrix::diagonal({Cyc::zeta(7, 1), Cyc::zeta(7, 2), Cyc::zeta(7, 4)});
    auto g = l.generators()[0];
    return make_cyclic_data(l, {v}, {g * g}, 3);
  }

  MatrixModel<Cyc> dual_z2_model() const {
    auto g = group(2, {cyc(2, {{1, 2}})});
    return bichon_build<Cyc>({2}, {regular_representation(g, g.generators()[0])});
  }
};

template <class F>
CriterionResult timed(int id, std::string name, F body) {
  CriterionResult r;
  r.id = id;
  r.name = std::move(name);
  auto t0 = Clock::now();
  body(r);
  r.timing_ms = ms_since(t0);
  return r;
}

CriterionResult criterion1(const Catalog& cat) {
  return timed(1, "Latin family counterexample in S6", [&](CriterionResult& r) {
    auto t0 = Clock::now();
    auto g = cat.klein_s6();
    auto orbits = orbits_from_source(g);
    auto der = derangement_scan(g);
    auto res = latin_family_search(g);
    bool blocks = orbits.blocks.size() == 3 && orbits.quasi_transitive && orbits.common_size == 2;
    bool fast = ms_since(t0) < 1000.0;
    r.pass = blocks && der.empty() && !res.family && res.exhaustive && fast;
    r.detail = {{"orbits", orbits.blocks.size()},
                {"orbit_size", orbits.common_size},
                {"derangements", der.size()},
                {"family_found", res.family.has_value()},
                {"exhaustive", res.exhaustive},
                {"nodes", res.nodes}};
  });
}

CriterionResult criterion2(const Catalog& cat) {
  return timed(2, "Thoma stationarity and Frobenius formula", [&](CriterionResult& r) {
    struct Case {
      const char* name;
      PermGroup gamma;
      PermGroup lambda;
    };
    std::vector<Case> cases;
    cases.push_back({"S3/A3", cat.s3(), cat.z3_s3()});
    cases.push_back({"D4/Z4", cat.d4_s4(), cat.z4_s4()});
    auto z6 = cat.group(6, {cyc(6, {{1, 2, 3, 4, 5, 6}})});
    cases.push_back({"Z6/Z6", z6, z6});
    r.pass = true;
    r.detail = json::array();
    for (auto& c : cases) {
      auto t0 = Clock::now();
      auto cert = check_stationarity(FiniteExtension(c.gamma, c.lambda));
      bool all_ok = std::all_of(cert.values.begin(), cert.values.end(), [](const auto& v) { return v.ok; });
      bool ok = cert.stationary && all_ok && cert.frobenius_agrees.value_or(false) &&
                cert.character_average_agrees.value_or(false) && ms_since(t0) < 1000.0;
      r.pass = r.pass && ok;
      r.detail.push_back({{"pair", c.name},
                          {"stationary", cert.stationary},
                          {"elements", cert.values.size()},
                          {"frobenius_pairs", cert.frobenius_pairs},
                          {"frobenius_agrees", cert.frobenius_agrees.value_or(false)},
                          {"pass", ok}});
    }
  });
}

CriterionResult criterion3(const Catalog& cat) {
  return timed(3, "Classical quasi-flat models from Latin families", [&](CriterionResult& r) {
    std::vector<std::pair<const char*, PermGroup>> cases = {
        {"Z3<S3", cat.z3_s3()}, {"Klein<S4", cat.klein_s4()}, {"D4<S4", cat.d4_s4()}};
    r.pass = true;
    r.detail = json::array();
    for (auto& [name, g] : cases) {
      auto t0 = Clock::now();
      auto res = latin_family_search(g);
      json d = {{"group", name}, {"family_found", res.family.has_value()}};
      bool ok = res.family.has_value();
      if (ok) {
        auto m = classical_model_from_family(g, res.family->members);
        bool magic = verify_magic(m).pass;
        bool flat = quasi_flat_check(m, orbits_from_source(g)).quasi_flat;
        auto st = stationarity_check(g, m, 2);
        ok = magic && flat && st.pass && ms_since(t0) < 5000.0;
        d["magic"] = magic;
        d["quasi_flat"] = flat;
        d["stationary"] = st.pass;
        d["words_checked"] = st.words_checked;
        d["family"] = json::array();
        for (const auto& p : res.family->members) d["family"].push_back(p.to_string());
      }
      d["pass"] = ok;
      r.pass = r.pass && ok;
      r.detail.push_back(std::move(d));
    }
  });
}

CriterionResult criterion4(const Catalog& cat) {
  return timed(4, "Negative stationarity control (single-fiber D4)", [&](CriterionResult& r) {
    auto g = cat.d4_s4();
    auto m = cat.d4_rotation_fiber();
    auto st = stationarity_check(g, m, 2);
    auto idem = convolution_idempotency(model_state(m, 2), 2);
    const IndexWord expected{{0, 0}, {1, 1}};
    bool at_word = !st.pass && st.first_mismatch && *st.first_mismatch == expected;
    bool values = at_word && st.model_value == Cyc(Rational(1, 4)) && st.reference_value == Cyc(Rational(1, 8));
    r.pass = values && !idem.idempotent;
    r.detail = {{"stationary", st.pass},
                {"first_mismatch", st.first_mismatch ? word_to_string(*st.first_mismatch) : "none"},
                {"model_value", to_json(st.model_value)},
                {"haar_value", to_json(st.reference_value)},
                {"idempotent", idem.idempotent}};
    if (idem.first_failure) r.detail["idempotency_failure"] = word_to_string(*idem.first_failure);
  });
}

CriterionResult criterion5(const Catalog& cat) {
  return timed(5, "Bichon construction for group duals", [&](CriterionResult& r) {
    std::vector<std::pair<const char*, PermGroup>> cases = {{"Z2", cat.group(2, {cyc(2, {{1, 2}})})},
                                                            {"Z3", cat.z3_s3()},
                                                            {"Z2xZ2", cat.group(4, {cyc(4, {{1, 2}}), cyc(4, {{3, 4}})})}};
    r.pass = true;
    r.detail = json::array();
    auto t0 = Clock::now();
    for (auto& [name, g] : cases) {
      DualReference ref(g);
      std::vector<ExactMatrix> gens;
      for (const auto& x : g.generators()) gens.push_back(regular_representation(g, x));
      auto m = bichon_build(ref.sizes, gens);
      bool magic = verify_magic(m).pass;
      bool circ = is_block_circulant(m, ref.sizes);
      auto dual = dual_element_check(ref, gens);
      auto st = stationarity_check(ref, m, 2);
      bool ok = magic && circ && dual.pass && st.pass;
      r.pass = r.pass && ok;
      r.detail.push_back({{"group", name},
                          {"size", m.size},
                          {"magic", magic},
                          {"circulant", circ},
                          {"dual_delta", dual.pass},
                          {"stationary_len2", st.pass},
                          {"pass", ok}});
    }
    r.pass = r.pass && ms_since(t0) < 1000.0;
  });
}

CriterionResult criterion6(const Catalog& cat) {
  return timed(6, "Cyclic half-liberated model over D5", [&](CriterionResult& r) {
    auto t0 = Clock::now();
    auto data = cat.cyclic_z5(2);
    auto m = build_cyclic_model(data);
    auto hl = verify_half_liberation(m);
    auto sd = semidirect_stationarity(data);
    r.pass = hl.pass() && hl.abc_cba.value_or(false) && sd.pass() && sd.basis_size == 10 && ms_since(t0) < 1000.0;
    r.detail = {{"half_liberation", hl.pass()},
                {"abc_cba", hl.abc_cba.value_or(false)},
                {"basis_size", sd.basis_size},
                {"homomorphism", sd.homomorphism},
                {"star", sd.star},
                {"stationary", sd.stationary},
                {"matches_model", sd.matches_model}};
  });
}

FloatMatrix random_unitary(std::size_t k, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::vector<Complex>> cols(k, std::vector<Complex>(k));
  for (auto& c : cols) {
    for (auto& x : c) {
      double re = normal(rng);
      double im = normal(rng);
      x = {re, im};
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      Complex dot = 0.0;
      for (std::size_t i = 0; i < k; ++i) dot += std::conj(cols[b][i]) * cols[a][i];
      for (std::size_t i = 0; i < k; ++i) cols[a][i] -= dot * cols[b][i];
    }
    double norm = 0.0;
    for (const auto& x : cols[a]) norm += std::norm(x);
    norm = std::sqrt(norm);
    for (auto& x : cols[a]) x /= norm;
  }
  FloatMatrix v(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) v(i, j) = cols[j][i];
  }
  return v;
}

CriterionResult criterion7(const RunConfig& cfg) {
  return timed(7, "Trace vectors versus spectral multiplicities", [&](CriterionResult& r) {
    std::size_t exact_cases = 0, exact_bad = 0;
    for (std::size_t k = 1; k <= 6; ++k) {
      for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::vector<Cyc> diag;
        for (std::size_t a = 0; a < k; ++a) {
          if (mask & (std::size_t{1} << a)) diag.push_back(Cyc::zeta(k, static_cast<long long>(a)));
        }
        auto t = trace_vector_check(ExactMatrix::diagonal(diag), k);
        bool want = mask + 1 == (std::size_t{1} << k);
        ++exact_cases;
        if (!t.agrees() || t.flat != want) ++exact_bad;
      }
    }
    std::mt19937_64 rng(cfg.seed);
    std::size_t float_cases = 0, float_bad = 0, flat_count = 0;
    const double tol = 1e-8;
    for (std::size_t k = 2; k <= 6; ++k) {
      for (std::size_t trial = 0; trial < 200; ++trial) {
        std::vector<std::size_t> exps(k);
        if (trial % 2 == 0) {
          std::iota(exps.begin(), exps.end(), 0);
          std::shuffle(exps.begin(), exps.end(), rng);
        } else {
          std::uniform_int_distribution<std::size_t> pick(0, k - 1);
          for (auto& e : exps) e = pick(rng);
        }
        std::vector<Complex> diag;
        for (auto e : exps) diag.push_back(ScalarTraits<Complex>::root_of_unity(k, static_cast<long long>(e)));
        auto v = random_unitary(k, rng);
        auto u = v * FloatMatrix::diagonal(diag) * v.adjoint();
        auto t = trace_vector_check(u, k, tol);
        auto sorted = exps;
        std::sort(sorted.begin(), sorted.end());
        bool want = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
        ++float_cases;
        if (want) ++flat_count;
        if (!t.agrees() || t.flat != want) ++float_bad;
      }
    }
    r.pass = exact_bad == 0 && float_bad == 0;
    r.detail = {{"exact_patterns", exact_cases},
                {"exact_disagreements", exact_bad},
                {"float_trials", float_cases},
                {"float_flat_trials", flat_count},
                {"float_disagreements", float_bad}};
  });
}

CriterionResult criterion8(const Catalog& cat) {
  return timed(8, "Fixed-point projections", [&](CriterionResult& r) {
    r.pass = true;
    r.detail = json::array();
    auto check = [&](const char* name, const PermGroup& g, const ExactMatrix& want) {
      auto fp = fixed_point_matrix(g);
      bool proj = (fp.q * fp.q).near(fp.q) && fp.q.adjoint().near(fp.q);
      bool ok = fp.q.near(want) && proj && fp.pass();
      r.pass = r.pass && ok;
      r.detail.push_back({{"group", name}, {"matches", fp.q.near(want)}, {"projection", proj}, {"pass", ok}});
    };
    ExactMatrix quarter(4, 4);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) quarter(i, j) = Cyc(Rational(1, 4));
    }
    check("Z4", cat.z4_s4(), quarter);
    check("D4", cat.d4_s4(), quarter);
    check("S4", cat.s4(), quarter);
    ExactMatrix halves(6, 6);
    for (std::size_t b = 0; b < 3; ++b) {
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) halves(2 * b + i, 2 * b + j) = Cyc(Rational(1, 2));
      }
    }
    check("Klein<S6", cat.klein_s6(), halves);
  });
}

CriterionResult criterion9(const Catalog& cat) {
  return timed(9, "K-symmetry of cyclic models", [&](CriterionResult& r) {
    bool k1 = verify_k_symmetry(build_cyclic_model(cat.cyclic_z5(1)));
    bool k2 = verify_k_symmetry(build_cyclic_model(cat.cyclic_z5(2)));
    bool k3 = verify_k_symmetry(build_cyclic_model(cat.cyclic_z7()));
    bool dual = verify_k_symmetry(cat.dual_z2_model());
    r.pass = k1 && k2 && k3 && !dual;
    r.detail = {{"K1_Z5", k1}, {"K2_D5", k2}, {"K3_Z7", k3}, {"dual_Z2_magic", dual}};
  });
}

CriterionResult criterion10(const Catalog& cat) {
  return timed(10, "Uniformity certification", [&](CriterionResult& r) {
    auto z2z2 = cat.group(4, {cyc(4, {{1, 2}}), cyc(4, {{3, 4}})});
    auto c1 = uniform_check(z2z2, z2z2.generators());
    auto s3 = cat.s3();
    auto c2 = uniform_check(s3, s3.generators());
    auto s3z2 = cat.group(5, {cyc(5, {{1, 2}}), cyc(5, {{1, 3}}), cyc(5, {{4, 5}})});
    auto c3 = uniform_check(s3z2, s3z2.generators());
    bool third = !c3.uniform() && std::find(c3.failing.begin(), c3.failing.end(), 4) != c3.failing.end();
    r.pass = c1.uniform() && c2.uniform() && third;
    auto j = [](const UniformCertificate& c) {
      return json{{"uniform", c.uniform()}, {"failing", c.failing}, {"abelianization", c.abelianization}};
    };
    r.detail = {{"Z2xZ2", j(c1)}, {"S3", j(c2)}, {"S3xZ2", j(c3)}};
  });
}

// Float re-verification of the exact passes.
json float_agreement(const Catalog& cat, double tol) {
  std::size_t checks = 0, bad = 0;
  json fails = json::array();
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
      ++bad;
      fails.push_back(what);
    }
  };
  auto same_states = [&](const StateOnWords<Cyc>& e, const StateOnWords<Complex>& f) {
    for (std::size_t k = 0; k <= e.max_len(); ++k) {
      for (std::size_t c = 0; c < e.count(k); ++c) {
        if (std::abs(e.at(k, c).to_complex() - f.at(k, c)) > tol) return false;
      }
    }
    return true;
  };
  for (auto g : {cat.z3_s3(), cat.klein_s4(), cat.d4_s4()}) {
    auto res = latin_family_search(g);
    auto m = classical_model_from_family(g, res.family->members);
    auto f = to_float(m);
    auto orbits = orbits_from_source(g);
    expect(verify_magic(f, tol).pass, "magic (float)");
    expect(quasi_flat_check(f, orbits, tol).quasi_flat, "quasi-flat (float)");
    expect(stationarity_check(g, f, 2, tol).pass, "stationary (float)");
    expect(same_states(model_state(m, 2), model_state(f, 2)), "word values (float)");
    expect(fixed_point_matrix(f, orbits, tol).pass(), "fixed point (float)");
  }
  {
    auto m = cat.d4_rotation_fiber();
    auto st = stationarity_check(cat.d4_s4(), to_float(m), 2, tol);
    expect(!st.pass && std::abs(st.model_value - 0.25) <= tol && std::abs(st.reference_value - 0.125) <= tol,
           "D4 negative control (float)");
  }
  for (auto g : {cat.group(2, {cyc(2, {{1, 2}})}), cat.z3_s3(), cat.group(4, {cyc(4, {{1, 2}}), cyc(4, {{3, 4}})})}) {
    DualReference ref(g);
    std::vector<ExactMatrix> gens;
    std::vector<FloatMatrix> fgens;
    for (const auto& x : g.generators()) {
      gens.push_back(regular_representation(g, x));
      fgens.push_back(to_float(gens.back()));
    }
    auto e = bichon_build(ref.sizes, gens);
    auto f = bichon_build(ref.sizes, fgens, tol);
    bool near = true;
    for (std::size_t l = 0; l < e.fibers[0].size(); ++l) near = near && to_float(e.fibers[0][l]).near(f.fibers[0][l], tol);
    expect(near && verify_magic(f, tol).pass, "Bichon model (float)");
    expect(stationarity_check(ref, f, 2, tol).pass, "dual stationarity (float)");
  }
  {
    auto m = to_float(build_cyclic_model(cat.cyclic_z5(2)));
    auto hl = verify_half_liberation(m, tol);
    expect(hl.pass() && hl.abc_cba.value_or(false), "half-liberation (float)");
    expect(verify_k_symmetry(m, tol), "K-symmetry (float)");
    expect(verify_k_symmetry(to_float(build_cyclic_model(cat.cyclic_z7())), tol), "K-symmetry K=3 (float)");
    expect(!verify_k_symmetry(to_float(cat.dual_z2_model()), tol), "dual-Z2 K-symmetry (float)");
  }
  return {{"checks", checks}, {"disagreements", bad}, {"failures", fails}};
}

}  // namespace

std::vector<CriterionResult> run_core_criteria(const RunConfig& cfg) {
  Catalog cat{cfg.cap};
  return {criterion1(cat), criterion2(cat), criterion3(cat), criterion4(cat), criterion5(cat),
          criterion6(cat), criterion7(cfg), criterion8(cat), criterion9(cat), criterion10(cat)};
}

json criteria_json(const std::vector<CriterionResult>& results) {
  json a = json::array();
  for (const auto& r : results) {
    a.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}, {"timing_ms", r.timing_ms}});
  }
  return a;
}

std::vector<CriterionResult> run_criteria(const RunConfig& cfg) {
  auto results = run_core_criteria(cfg);
  results.push_back(timed(11, "Determinism and float agreement", [&](CriterionResult& r) {
    auto again = run_core_criteria(cfg);
    bool same = strip_timing(criteria_json(results)).dump() == strip_timing(criteria_json(again)).dump();
    auto fl = float_agreement(Catalog{cfg.cap}, cfg.tol);
    r.pass = same && fl["disagreements"] == 0;
    r.detail = {{"identical_rerun", same}, {"float", fl}};
  }));
  return results;
}

Report run_suite(const RunConfig& cfg) {
  auto t0 = Clock::now();
  Report rep;
  try {
    cfg.validate();
    auto results = run_criteria(cfg);
    json failed = json::array();
    for (const auto& r : results) {
      if (!r.pass) {
        failed.push_back(r.id);
        rep.witnesses.push_back({{"criterion", r.id}, {"name", r.name}, {"detail", r.detail}});
      }
    }
    rep.result = {{"criteria", criteria_json(results)}, {"passed", results.size() - failed.size()}, {"failed", failed}};
    rep.status = failed.empty() ? Status::Pass : Status::Fail;
    rep.summary = std::to_string(results.size() - failed.size()) + "/" + std::to_string(results.size()) +
                  " criteria pass";
  } catch (const Error& e) {
    rep = error_report("suite", cfg, e.what());
  }
  rep.command = "suite";
  rep.config = cfg;
  rep.timing_ms = ms_since(t0);
  rep.finalize();
  return rep;
}

Report run_experiment(const RunConfig& cfg) {
  auto t0 = Clock::now();
  Report rep;
  try {
    cfg.validate();
    Catalog cat{cfg.cap};
    struct Entry {
      std::string name;
      PermGroup g;
    };
    std::vector<Entry> entries{
        {"Z2", cat.group(2, {cyc(2, {{1, 2}})})},
        {"Z3", cat.z3_s3()},
        {"Z4", cat.z4_s4()},
        {"Z2xZ2", cat.group(4, {cyc(4, {{1, 2}}), cyc(4, {{3, 4}})})},
        {"Z3xZ3", cat.group(6, {cyc(6, {{1, 2, 3}}), cyc(6, {{4, 5, 6}})})},
        {"Z2xZ2xZ2", cat.group(6, {cyc(6, {{1, 2}}), cyc(6, {{3, 4}}), cyc(6, {{5, 6}})})},
        {"S3", cat.s3()},
        {"D4", cat.group(4, {cyc(4, {{1, 2}, {3, 4}}), cyc(4, {{1, 3}})})},
    };
    const std::size_t len = cfg.word_len_or(2);
    json rows = json::array();
    for (const auto& e : entries) {
      auto u = uniform_check(e.g, e.g.generators());
      std::vector<ExactMatrix> gens;
      for (const auto& s : e.g.generators()) gens.push_back(regular_representation(e.g, s));
      DualReference ref(e.g);
      auto m = bichon_build<Cyc>(ref.sizes, gens);
      auto orbits = orbits_from_dual(ref.sizes);
      json row = {{"group", e.name},
                  {"order", e.g.order()},
                  {"uniform", u.uniform()},
                  {"failing", u.failing},
                  {"model_size", m.size},
                  {"model_dim", m.dim},
                  {"magic", verify_magic(m).pass},
                  {"stationary", stationarity_check(ref, m, len).pass}};
      if (orbits.quasi_transitive && orbits.common_size == m.dim) {
        row["quasi_flat"] = quasi_flat_check(m, orbits).quasi_flat;
      } else {
        row["quasi_flat"] = nullptr;
      }
      rows.push_back(std::move(row));
    }
    rep.result = {{"max_word_len", len}, {"models", rows}};
    rep.status = Status::Pass;
    rep.summary = std::to_string(rows.size()) + " models tabulated";
  } catch (const Error& e) {
    rep = error_report("experiment", cfg, e.what());
  }
  rep.command = "experiment";
  rep.config = cfg;
  rep.timing_ms = ms_since(t0);
  rep.finalize();
  return rep;
}

}  // namespace qgm::app
