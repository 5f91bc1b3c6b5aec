#include "qgm/app/commands.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "qgm/app/suite.hpp"
#include "qgm/cyclic/cyclic.hpp"
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

using io::to_json;

void need(const std::string& value, const char* flag) {
  if (value.empty()) throw Error(Errc::InvalidArgument, std::string("missing ") + flag);
}

json blocks_json(const OrbitStructure& o) {
  json blocks = json::array();
  for (const auto& b : o.blocks) {
    json a = json::array();
    for (auto i : b) a.push_back(i + 1);
    blocks.push_back(std::move(a));
  }
  return blocks;
}

json orbit_json(const OrbitStructure& o) {
  json sizes = json::array();
  for (const auto& b : o.blocks) sizes.push_back(b.size());
  return {{"source", orbit_source_name(o.source)},
          {"blocks", blocks_json(o)},
          {"sizes", sizes},
          {"quasi_transitive", o.quasi_transitive},
          {"K", o.common_size},
          {"lower_bound", o.lower_bound}};
}

json thoma_json(const ThomaCertificate& c) {
  json values = json::array();
  for (const auto& v : c.values) {
    values.push_back({{"element", v.element}, {"value", to_json(v.value)}, {"identity", v.identity}, {"ok", v.ok}});
  }
  json j = {{"stationary", c.stationary},
            {"index", c.index},
            {"lambda_order", c.lambda_order},
            {"values", values},
            {"frobenius_pairs", c.frobenius_pairs}};
  if (c.character_average_agrees) j["character_average_agrees"] = *c.character_average_agrees;
  if (c.frobenius_agrees) j["frobenius_agrees"] = *c.frobenius_agrees;
  return j;
}

Report thoma_check(const CommandArgs& a, const RunConfig& cfg) {
  Report r;
  ThomaCertificate cert;
  if (!a.split.empty()) {
    auto ext = io::split_from_json(io::load_file(a.split), cfg.cap);
    cert = check_stationarity(ext, cfg.word_len_or(4));
  } else {
    need(a.group, "--group");
    need(a.lambda, "--lambda");
    auto gamma = io::group_from_json(io::load_file(a.group), cfg.cap);
    auto lambda = io::group_from_json(io::load_file(a.lambda), cfg.cap);
    cert = check_stationarity(FiniteExtension(gamma, lambda));
  }
  r.result = thoma_json(cert);
  bool ok = cert.stationary && cert.frobenius_agrees.value_or(true) && cert.character_average_agrees.value_or(true);
  r.status = ok ? Status::Pass : Status::Fail;
  if (cert.first_failure) {
    const auto& v = cert.values[*cert.first_failure];
    r.witnesses.push_back({{"element", v.element}, {"value", to_json(v.value)}});
  }
  r.summary = std::string("Thoma model ") + (cert.stationary ? "stationary" : "not stationary") + " on " +
              std::to_string(cert.values.size()) + " elements";
  return r;
}

template <class S>
Report magic_verify_as(const MatrixModel<S>& m, const RunConfig& cfg) {
  Report r;
  auto rep = verify_magic(m, cfg.tol);
  for (const auto& v : rep.violations) {
    json w = {{"point", v.point + 1}, {"kind", v.kind}, {"i", v.i + 1}};
    if (v.kind == "not-projection") w["j"] = v.j + 1;
    r.witnesses.push_back(std::move(w));
  }
  r.result = {{"magic", rep.pass}, {"size", m.size}, {"dim", m.dim}, {"points", m.points()}};
  r.status = rep.pass ? Status::Pass : Status::Fail;
  r.summary = rep.pass ? "magic unitary" : std::to_string(rep.violations.size()) + " violations";
  return r;
}

Report magic_verify(const CommandArgs& a, const RunConfig& cfg) {
  need(a.model, "--model");
  auto m = io::model_from_json(io::load_file(a.model));
  return cfg.exact ? magic_verify_as(m, cfg) : magic_verify_as(to_float(m), cfg);
}

bool is_dual(const json& j) { return j.is_object() && j.value("kind", std::string()) == "dual"; }

Report orbits(const CommandArgs& a, const RunConfig& cfg) {
  need(a.source, "--source");
  auto j = io::load_file(a.source);
  OrbitStructure o;
  if (is_dual(j)) {
    o = orbits_from_dual(DualReference(io::group_from_json(j, cfg.cap)).sizes);
  } else if (j.contains("points")) {
    auto m = io::model_from_json(j);
    o = cfg.exact ? orbits_from_model(m, cfg.tol) : orbits_from_model(to_float(m), cfg.tol);
  } else {
    o = orbits_from_source(io::group_from_json(j, cfg.cap));
  }
  Report r;
  r.result = orbit_json(o);
  r.summary = std::to_string(o.blocks.size()) + " orbits" + (o.quasi_transitive ? ", quasi-transitive" : "");
  return r;
}

template <class S>
Report stationarity_as(const std::function<StationarityCertificate<S>(const MatrixModel<S>&)>& check,
                       const MatrixModel<S>& m, std::size_t len, const RunConfig& cfg) {
  Report r;
  auto cert = check(m);
  auto idem = convolution_idempotency(model_state(m, len), len, cfg.tol);
  r.result = {{"stationary", cert.pass},
              {"max_word_len", cert.max_len},
              {"words_checked", cert.words_checked},
              {"convolution_idempotent", idem.idempotent}};
  if (cert.quasi_flat_crosscheck) r.result["quasi_flat_crosscheck"] = *cert.quasi_flat_crosscheck;
  if (cert.first_mismatch) {
    r.witnesses.push_back({{"word", word_to_string(*cert.first_mismatch)},
                           {"model", to_json(cert.model_value)},
                           {"reference", to_json(cert.reference_value)}});
  }
  if (idem.first_failure) {
    r.result["idempotency_witness"] = {{"word", word_to_string(*idem.first_failure)},
                                       {"value", to_json(idem.value)},
                                       {"convolved", to_json(idem.convolved)}};
  }
  r.status = cert.pass ? Status::Pass : Status::Fail;
  r.summary = cert.pass ? "stationary on " + std::to_string(cert.words_checked) + " words"
                        : "mismatch at " + word_to_string(*cert.first_mismatch);
  return r;
}

Report stationarity(const CommandArgs& a, const RunConfig& cfg) {
  need(a.reference, "--reference");
  need(a.model, "--model");
  auto ref = io::load_file(a.reference);
  auto m = io::model_from_json(io::load_file(a.model));
  const auto len = cfg.word_len_or(3);
  if (is_dual(ref)) {
    DualReference d(io::group_from_json(ref, cfg.cap));
    if (cfg.exact) {
      return stationarity_as<Cyc>([&](const auto& mm) { return stationarity_check(d, mm, len, cfg.tol); }, m, len,
                                  cfg);
    }
    return stationarity_as<Complex>([&](const auto& mm) { return stationarity_check(d, mm, len, cfg.tol); },
                                    to_float(m), len, cfg);
  }
  auto g = io::group_from_json(ref, cfg.cap);
  if (cfg.exact) {
    return stationarity_as<Cyc>([&](const auto& mm) { return stationarity_check(g, mm, len, cfg.tol); }, m, len, cfg);
  }
  return stationarity_as<Complex>([&](const auto& mm) { return stationarity_check(g, mm, len, cfg.tol); },
                                  to_float(m), len, cfg);
}

template <class S>
Report dual_build_as(const std::vector<std::size_t>& sizes, const std::vector<Matrix<S>>& gens,
                     const RunConfig& cfg) {
  Report r;
  auto m = bichon_build(sizes, gens, cfg.tol);
  auto magic = verify_magic(m, cfg.tol);
  bool circ = is_block_circulant(m, sizes, cfg.tol);
  r.result = {{"magic", magic.pass},
              {"circulant", circ},
              {"orbits", orbit_json(orbits_from_dual(sizes))},
              {"model", to_json(m)}};
  r.status = magic.pass && circ ? Status::Pass : Status::Fail;
  for (const auto& v : magic.violations) r.witnesses.push_back({{"point", v.point + 1}, {"kind", v.kind}});
  r.summary = "Bichon model of size " + std::to_string(m.size) + (magic.pass ? ", magic" : ", not magic");
  return r;
}

Report dual_build(const CommandArgs& a, const RunConfig& cfg) {
  need(a.rep, "--rep");
  if (a.sizes.empty()) throw Error(Errc::InvalidArgument, "missing --sizes");
  auto gens = io::rep_from_json(io::load_file(a.rep));
  if (cfg.exact) return dual_build_as(a.sizes, gens, cfg);
  std::vector<FloatMatrix> f;
  for (const auto& g : gens) f.push_back(to_float(g));
  return dual_build_as(a.sizes, f, cfg);
}

CyclicModelData cyclic_data(const CommandArgs& a, const RunConfig& cfg) {
  need(a.group, "--group");
  need(a.rep, "--rep");
  need(a.automorphism, "--auto");
  if (a.k == 0) throw Error(Errc::InvalidArgument, "missing --k");
  auto l = io::group_from_json(io::load_file(a.group), cfg.cap);
  auto rep = io::rep_from_json(io::load_file(a.rep));
  auto aut = io::load_file(a.automorphism);
  if (!aut.contains("images")) throw Error(Errc::Parse, "automorphism needs \"images\"");
  auto images = io::perms_from_json(aut.at("images"), l.degree());
  return make_cyclic_data(l, rep, images, a.k);
}

Report cyclic_build(const CommandArgs& a, const RunConfig& cfg) {
  auto data = cyclic_data(a, cfg);
  auto m = build_cyclic_model(data);
  Report r;
  r.result = {{"size", m.size}, {"dim", m.dim}, {"points", m.points()}, {"model", to_json(m)}};
  r.summary = "cyclic model over " + std::to_string(m.points()) + " points";
  return r;
}

json half_liberation_json(const HalfLiberationReport& h) {
  json j = {{"pass", h.pass()},
            {"unitary", h.unitary},
            {"conjugate_unitary", h.conjugate_unitary},
            {"diagonal_products", h.diagonal_products},
            {"commuting", h.commuting},
            {"self_adjoint", h.self_adjoint}};
  if (h.abc_cba) j["abc_cba"] = *h.abc_cba;
  if (h.k1_commutation) j["k1_commutation"] = *h.k1_commutation;
  if (h.k2_relation) j["k2_relation"] = *h.k2_relation;
  return j;
}

json semidirect_json(const SemidirectCertificate& c) {
  json basis = json::array();
  for (std::size_t b = 0; b < c.basis.size(); ++b) {
    basis.push_back({{"element", c.basis[b]}, {"model", to_json(c.model_values[b])}, {"haar", to_json(c.haar_values[b])}});
  }
  return {{"pass", c.pass()},
          {"basis_size", c.basis_size},
          {"homomorphism", c.homomorphism},
          {"star", c.star},
          {"stationary", c.stationary},
          {"matches_model", c.matches_model},
          {"basis", basis}};
}

Report cyclic_verify(const CommandArgs& a, const RunConfig& cfg) {
  auto data = cyclic_data(a, cfg);
  auto m = build_cyclic_model(data);
  auto hl = cfg.exact ? verify_half_liberation(m, cfg.tol) : verify_half_liberation(to_float(m), cfg.tol);
  bool ks = cfg.exact ? verify_k_symmetry(m, cfg.tol) : verify_k_symmetry(to_float(m), cfg.tol);
  auto sd = semidirect_stationarity(data);
  Report r;
  r.result = {{"half_liberation", half_liberation_json(hl)},
              {"semidirect_stationarity", semidirect_json(sd)},
              {"k_symmetry", ks}};
  for (const auto& f : hl.failures) r.witnesses.push_back({{"half_liberation", f}});
  if (sd.first_failure) r.witnesses.push_back({{"semidirect", *sd.first_failure}});
  if (!ks) r.witnesses.push_back({{"k_symmetry", "conjugation by D does not scale every entry by zeta_K"}});
  r.status = hl.pass() && sd.pass() && ks ? Status::Pass : Status::Fail;
  r.summary = r.status == Status::Pass ? "cyclic model verified" : "cyclic model checks failed";
  return r;
}

json perms_json(const std::vector<Perm>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(to_json(p));
  return a;
}

Report latin_search(const CommandArgs& a, const RunConfig& cfg) {
  need(a.group, "--group");
  auto g = io::group_from_json(io::load_file(a.group), cfg.cap);
  auto res = latin_family_search(g);
  auto der = derangement_scan(g);
  Report r;
  r.result = {{"K", res.k},
              {"found", res.family.has_value()},
              {"nodes", res.nodes},
              {"exhaustive", res.exhaustive},
              {"derangements", perms_json(der)},
              {"orbits", orbit_json(orbits_from_source(g))}};
  if (res.derangement_crosscheck) r.result["derangement_crosscheck"] = *res.derangement_crosscheck;
  if (res.family) {
    r.result["family"] = perms_json(res.family->members);
    auto sq = latin_square_from_family(res.family->members);
    json rows = json::array();
    for (std::size_t i = 0; i < sq.n; ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < sq.n; ++j) row.push_back(sq(i, j) == 0 ? json("*") : json(sq(i, j)));
      rows.push_back(std::move(row));
    }
    r.result["latin_square"] = std::move(rows);
    // throws if any of magic / quasi-flat / stationary fails
    auto model = classical_model_from_family(g, res.family->members);
    r.result["model_checks"] = {{"magic", true}, {"quasi_flat", true}, {"stationary_len2", true},
                                {"points", model.points()}};
    r.status = Status::Pass;
    r.summary = "Latin family of size " + std::to_string(res.k) + " found";
  } else {
    r.status = Status::NoFamily;
    r.witnesses.push_back({{"exhaustive", res.exhaustive}, {"nodes", res.nodes}, {"derangements", der.size()}});
    r.summary = "no Latin family (exhaustive, " + std::to_string(res.nodes) + " nodes)";
  }
  return r;
}

Report uniform(const CommandArgs& a, const RunConfig& cfg) {
  need(a.group, "--group");
  auto gj = io::load_file(a.group);
  auto g = io::group_from_json(gj, cfg.cap);
  auto gens = g.generators();
  if (!a.gens.empty()) {
    auto j = io::load_file(a.gens);
    if (!j.contains("generators")) throw Error(Errc::Parse, "generator file needs \"generators\"");
    gens = io::perms_from_json(j.at("generators"), g.degree());
  }
  auto c = uniform_check(g, gens);
  Report r;
  r.result = {{"uniform", c.uniform()},
              {"conditions",
               {{"generation", c.generates},
                {"common_order", c.common_order},
                {"quotient_onto_ZK^M", c.quotient_onto_zkm},
                {"symmetric", c.symmetric}}},
              {"K", c.k},
              {"M", c.m},
              {"abelianization", c.abelianization},
              {"failing", c.failing},
              {"notes", c.notes}};
  for (auto f : c.failing) r.witnesses.push_back({{"condition", f}});
  r.status = c.uniform() ? Status::Pass : Status::Fail;
  r.summary = c.uniform() ? "uniform" : "not uniform";
  return r;
}

template <class S>
Report dual_flat_as(const std::vector<std::vector<Matrix<S>>>& fibers, std::size_t k, const RunConfig& cfg) {
  auto c = quasiflat_dual_check(fibers, k, cfg.tol);
  Report r;
  r.result = {{"pass", c.pass}, {"fibers", fibers.size()}, {"generators", fibers[0].size()}};
  if (c.model_quasi_flat) r.result["magic_model_quasi_flat"] = *c.model_quasi_flat;
  for (const auto& w : c.witnesses) {
    r.witnesses.push_back({{"generator", w.generator + 1}, {"point", w.point + 1}, {"multiplicities", w.multiplicities}});
  }
  r.status = c.pass ? Status::Pass : Status::Fail;
  r.summary = c.pass ? "quasi-flat fibers" : std::to_string(c.witnesses.size()) + " non-flat fibers";
  return r;
}

Report dual_flat(const CommandArgs& a, const RunConfig& cfg) {
  need(a.rep, "--rep");
  if (a.k == 0) throw Error(Errc::InvalidArgument, "missing --k");
  auto j = io::load_file(a.rep);
  std::vector<std::vector<ExactMatrix>> fibers;
  if (j.contains("points")) {
    for (const auto& p : j.at("points")) fibers.push_back(io::rep_from_json(p));
  } else {
    fibers.push_back(io::rep_from_json(j));
  }
  if (cfg.exact) return dual_flat_as(fibers, a.k, cfg);
  std::vector<std::vector<FloatMatrix>> f;
  for (const auto& x : fibers) {
    std::vector<FloatMatrix> row;
    for (const auto& m : x) row.push_back(to_float(m));
    f.push_back(std::move(row));
  }
  return dual_flat_as(f, a.k, cfg);
}

Report suite(const CommandArgs&, const RunConfig& cfg) { return run_suite(cfg); }
Report experiment(const CommandArgs&, const RunConfig& cfg) { return run_experiment(cfg); }

using Handler = Report (*)(const CommandArgs&, const RunConfig&);

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h = {
      {"thoma-check", thoma_check},   {"magic-verify", magic_verify},     {"orbits", orbits},
      {"stationarity", stationarity}, {"dual-build", dual_build},         {"cyclic-build", cyclic_build},
      {"cyclic-verify", cyclic_verify}, {"latin-search", latin_search},   {"uniform-check", uniform},
      {"dual-flat-check", dual_flat}, {"suite", suite}, {"experiment", experiment}};
  return h;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, v] : handlers()) n.push_back(k);
    return n;
  }();
  return names;
}

Report run_command(const std::string& name, const CommandArgs& args, const RunConfig& cfg) {
  auto it = handlers().find(name);
  if (it == handlers().end()) return error_report(name, cfg, "unknown command");
  auto start = std::chrono::steady_clock::now();
  Report r;
  try {
    cfg.validate();
    r = it->second(args, cfg);
  } catch (const Error& e) {
    r = error_report(name, cfg, e.what());
  }
  r.command = name;
  r.config = cfg;
  r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  r.finalize();
  return r;
}

}  // namespace qgm::app
