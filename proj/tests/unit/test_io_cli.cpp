#include <doctest.h>

#include <string>

#include "qgm/app/commands.hpp"
#include "qgm/app/report.hpp"
#include "qgm/app/suite.hpp"
#include "qgm/error.hpp"
#include "qgm/io/json_io.hpp"

using namespace qgm;
using qgm::app::CommandArgs;
using qgm::app::RunConfig;
using qgm::app::Status;
using io::json;

namespace {
std::string data(const std::string& name) { return std::string(QGM_DATA_DIR) + "/" + name + ".json"; }

app::Report run(const std::string& cmd, const CommandArgs& a, RunConfig cfg = {}) {
  return app::run_command(cmd, a, cfg);
}
}  // namespace

TEST_SUITE("io") {
  TEST_CASE("scalars round-trip") {
    for (const char* s : {"0", "7", "-3/4", "123456789012345678901234567890/7"}) {
      auto q = io::rational_from_json(s);
      CHECK(io::rational_from_json(io::to_json(q)) == q);
    }
    CHECK(io::rational_from_json("6/8") == Rational(3, 4));
    CHECK(io::cyc_from_json(5) == Cyc(5));
    auto z = Cyc::zeta(12, 5) + Cyc(Rational(1, 3)) * Cyc::zeta(12, 2);
    CHECK(io::cyc_from_json(io::to_json(z)) == z);
    auto c = io::to_json(Complex(1.5, -2));
    CHECK(c == json::array({1.5, -2.0}));
    CHECK_THROWS_AS(io::rational_from_json("1/0"), Error);
    CHECK_THROWS_AS(io::rational_from_json("x"), Error);
    CHECK_THROWS_AS(io::cyc_from_json(json{{"order", 3}}), Error);
  }

  TEST_CASE("groups and perms round-trip") {
    auto g = io::group_from_json(io::load_file(data("klein_s6")));
    CHECK(g.order() == 4);
    auto again = io::group_from_json(io::to_json(g));
    CHECK(again.same_elements(g));
    CHECK(io::to_json(again) == io::to_json(g));
    auto p = io::perm_from_json(json::array({2, 3, 1}), 3);
    CHECK(io::perm_from_json(io::to_json(p), 3) == p);
    CHECK_THROWS_AS(io::perm_from_json(json::array({1, 1, 2}), 3), Error);
    CHECK_THROWS_AS(io::perm_from_json(json::array({1, 2}), 3), Error);
    auto a = io::abelian_from_json(json{{"factors", {2, 0, 3}}});
    CHECK(io::abelian_from_json(io::to_json(a)) == a);
  }

  TEST_CASE("models and representations round-trip") {
    auto m = io::model_from_json(io::load_file(data("dual_z2_model")));
    auto j = io::to_json(m);
    auto back = io::model_from_json(j);
    CHECK(io::to_json(back) == j);
    REQUIRE(back.points() == m.points());
    for (std::size_t l = 0; l < m.fibers[0].size(); ++l) CHECK(back.fibers[0][l].near(m.fibers[0][l]));

    auto rep = io::rep_from_json(io::load_file(data("s3_standard_rep")));
    CHECK(rep.size() == 2);
    CHECK(io::rep_to_json(io::rep_from_json(io::rep_to_json(rep))) == io::rep_to_json(rep));

    auto split = io::split_from_json(io::load_file(data("z2_split")));
    (void)split;
    CHECK_THROWS_AS(io::load_file(data("does_not_exist")), Error);
    CHECK_THROWS_AS(io::model_from_json(json{{"size", 2}}), Error);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("command statuses and exit codes") {
    CommandArgs a;
    a.group = data("s3");
    a.lambda = data("a3");
    auto r = run("thoma-check", a);
    CHECK(r.status == Status::Pass);
    CHECK(r.exit_code() == 0);

    CommandArgs s;
    s.split = data("z2_split");
    CHECK(run("thoma-check", s).status == Status::Pass);

    CommandArgs m;
    m.model = data("broken");
    auto b = run("magic-verify", m);
    CHECK(b.status == Status::Fail);
    CHECK(b.exit_code() == 1);
    CHECK_FALSE(b.witnesses.empty());

    m.model = data("dual_z2_model");
    CHECK(run("magic-verify", m).exit_code() == 0);
    RunConfig fl;
    fl.exact = false;
    CHECK(run("magic-verify", m, fl).exit_code() == 0);

    CommandArgs o;
    o.source = data("klein_s6");
    auto orb = run("orbits", o);
    CHECK(orb.result["blocks"].size() == 3);
    o.source = data("z2_dual");
    CHECK(run("orbits", o).result["blocks"].size() == 1);

    CommandArgs st;
    st.reference = data("z2_dual");
    st.model = data("dual_z2_model");
    CHECK(run("stationarity", st).status == Status::Pass);

    CommandArgs l;
    l.group = data("klein_s6");
    auto ls = run("latin-search", l);
    CHECK(ls.status == Status::NoFamily);
    CHECK(ls.exit_code() == 1);
    l.group = data("klein_s4");
    CHECK(run("latin-search", l).status == Status::Pass);

    CommandArgs u;
    u.group = data("s3xz2");
    auto uc = run("uniform-check", u);
    CHECK(uc.status == Status::Fail);

    CommandArgs d;
    d.sizes = {2};
    d.rep = data("z2_regular");
    CHECK(run("dual-build", d).status == Status::Pass);
    d.sizes = {2, 2};
    d.rep = data("z2xz2_regular");
    CHECK(run("dual-build", d).status == Status::Pass);

    CommandArgs c;
    c.group = data("z5");
    c.rep = data("z5_rep");
    c.automorphism = data("z5_inversion");
    c.k = 2;
    CHECK(run("cyclic-build", c).result["points"] == 5);
    CHECK(run("cyclic-verify", c).status == Status::Pass);

    CommandArgs f;
    f.rep = data("s3_standard_rep");
    f.k = 2;
    CHECK(run("dual-flat-check", f).status == Status::Pass);
  }

  TEST_CASE("errors map to exit code 2") {
    CommandArgs a;
    auto r = run("magic-verify", a);
    CHECK(r.status == Status::Error);
    CHECK(r.exit_code() == 2);
    a.model = data("does_not_exist");
    CHECK(run("magic-verify", a).exit_code() == 2);
    CHECK(run("no-such-command", a).exit_code() == 2);
    RunConfig small;
    small.cap = 1;
    CommandArgs g;
    g.group = data("klein_s6");
    CHECK(run("latin-search", g, small).exit_code() == 2);
    CHECK(app::run_suite(small).exit_code() == 2);
  }

  TEST_CASE("reports are deterministic and well-formed") {
    RunConfig cfg;
    auto a = app::run_suite(cfg).to_json();
    auto b = app::run_suite(cfg).to_json();
    CHECK(app::strip_timing(a).dump() == app::strip_timing(b).dump());
    for (const char* key : {"command", "config", "status", "witnesses", "result", "timing_ms"}) CHECK(a.contains(key));
    CHECK(a["config"]["max_word_len"] == "default");
    CHECK_FALSE(app::strip_timing(a).dump().find("timing_ms") != std::string::npos);
  }

  TEST_CASE("float suite at loose tolerance") {
    RunConfig cfg;
    cfg.exact = false;
    cfg.tol = 1e-2;
    auto r = app::run_suite(cfg);
    CHECK(r.status != Status::Error);
    auto crit = app::run_core_criteria(cfg);
    CHECK(crit.size() == 10);
  }

  TEST_CASE("config validation") {
    RunConfig cfg;
    cfg.tol = -1;
    CHECK_THROWS_AS(cfg.validate(), Error);
    RunConfig zero;
    zero.max_word_len = 0;
    CHECK_THROWS_AS(zero.validate(), Error);
    CHECK(app::command_names().size() >= 11);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("experiment tabulates without verdicts") {
    auto r = app::run_command("experiment", {}, {});
    CHECK(r.status == Status::Pass);
    const auto& rows = r.result["models"];
    REQUIRE(rows.size() == 8);
    for (const auto& row : rows) {
      CHECK(row["magic"] == true);
      CHECK(row["stationary"] == true);
    }
    CHECK(rows[0]["quasi_flat"] == true);
    CHECK(rows[6]["uniform"] == false);
  }
}
