#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qgm/app/commands.hpp"

namespace {

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    auto v = std::stoull(item, &pos);
    if (pos != item.size() || v == 0) throw std::invalid_argument("bad size " + item);
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using qgm::app::CommandArgs;
  using qgm::app::RunConfig;

  CLI::App app{"qgm: exact certification of matrix models of quantum permutation groups"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  bool exact = false, flt = false;
  std::size_t word_len = 0;
  std::string sizes;
  CommandArgs args;

  app.add_flag("--exact", exact, "exact cyclotomic arithmetic (default)");
  app.add_flag("--float", flt, "double-precision complex arithmetic");
  app.add_option("--tol", cfg.tol, "float tolerance")->check(CLI::PositiveNumber);
  app.add_option("--max-word-len", word_len, "word length bound")->check(CLI::PositiveNumber);
  app.add_option("--cap", cfg.cap, "group enumeration cap")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for randomized checks");
  app.add_option("--out", cfg.out, "also write the JSON report to this file");

  auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };
  auto* thoma = sub("thoma-check", "stationarity of the induced-representation model");
  thoma->add_option("--group", args.group, "ambient group Γ");
  thoma->add_option("--lambda", args.lambda, "abelian normal subgroup Λ");
  thoma->add_option("--split", args.split, "split extension Λ ⋊ Φ");
  sub("magic-verify", "check a magic unitary model")->add_option("--model", args.model)->required();
  sub("orbits", "orbit structure of a group, dual or model")->add_option("--source", args.source)->required();
  auto* st = sub("stationarity", "compare model word values with the Haar state");
  st->add_option("--reference", args.reference)->required();
  st->add_option("--model", args.model)->required();
  auto* db = sub("dual-build", "Bichon magic unitary for a group dual");
  db->add_option("--sizes", sizes, "block sizes, e.g. 2,2")->required();
  db->add_option("--rep", args.rep)->required();
  for (const char* name : {"cyclic-build", "cyclic-verify"}) {
    auto* c = sub(name, std::string(name) == "cyclic-build" ? "build a cyclic model" : "verify a cyclic model");
    c->add_option("--group", args.group)->required();
    c->add_option("--rep", args.rep)->required();
    c->add_option("--auto", args.automorphism)->required();
    c->add_option("--k", args.k)->required()->check(CLI::PositiveNumber);
  }
  sub("latin-search", "search a sparse Latin family")->add_option("--group", args.group)->required();
  auto* uc = sub("uniform-check", "uniform group conditions");
  uc->add_option("--group", args.group)->required();
  uc->add_option("--gens", args.gens, "generator list (defaults to the group's generators)");
  auto* df = sub("dual-flat-check", "quasi-flatness of a representation via trace vectors");
  df->add_option("--rep", args.rep)->required();
  df->add_option("--k", args.k)->required()->check(CLI::PositiveNumber);
  sub("suite", "run the acceptance suite");
  sub("experiment", "tabulate certified dual models of small groups");

  try {
    app.parse(argc, argv);
    if (exact && flt) throw CLI::ValidationError("--exact and --float are exclusive");
    if (!sizes.empty()) args.sizes = parse_sizes(sizes);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  cfg.exact = !flt;
  if (word_len > 0) cfg.max_word_len = word_len;

  const auto name = app.get_subcommands().front()->get_name();
  auto report = qgm::app::run_command(name, args, cfg);
  auto text = report.to_json().dump(2);
  std::cout << text << "\n";
  if (!cfg.out.empty()) {
    std::ofstream out(cfg.out);
    if (!out) {
      std::cerr << "error: cannot write " << cfg.out << "\n";
      return 2;
    }
    out << text << "\n";
  }
  std::cerr << name << ": " << qgm::app::status_name(report.status) << " - " << report.summary << "\n";
  return report.exit_code();
}
