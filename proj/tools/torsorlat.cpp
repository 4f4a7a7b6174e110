// Command-line front-end. Exit codes: 0 all checks pass, 1 a check failed,
// 2 input error, 3 resource cap hit.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "torsorlat/commands.hpp"

using namespace torsorlat;

namespace {

cli::Input load(const std::string& path) { return {path, io::read_file(path)}; }

void emit(const io::Report& report, const std::string& path) {
  std::cout << cli::render_text(report);
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadInput, "cannot write " + path);
  out << io::to_json(report).dump(2) << '\n';
}

delpezzo::H1Method parse_method(const std::string& s) {
  if (s == "auto") return delpezzo::H1Method::Auto;
  if (s == "constraints") return delpezzo::H1Method::Constraints;
  return delpezzo::H1Method::Saturation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois-lattice invariants of universal torsors on rational surfaces", "torsorlat"};
  app.set_version_flag("--version", cli::kVersion);
  app.require_subcommand(1);
  // Global flags may also follow the subcommand.
  app.fallthrough();

  cli::Options opt;
  std::string report_path;
  app.add_option("--cap", opt.cap, "Maximal group order to enumerate")->envname("TORSORLAT_CAP")->check(CLI::PositiveNumber);
  app.add_option("--seed", opt.seed, "Seed for Sylow searches and random samples")->envname("TORSORLAT_SEED");
  app.add_flag("--deterministic", opt.deterministic, "Zero all timings in reports");
  app.add_option("--report", report_path, "Write the JSON report here");

  auto* snf = app.add_subcommand("snf", "Smith normal form of a JSON matrix");
  std::string matrix_path;
  snf->add_option("--matrix", matrix_path, "Matrix JSON file")->required();

  auto* h1 = app.add_subcommand("h1", "H^1 of a finite group acting on a lattice");
  std::string lattice_path;
  std::optional<unsigned long> h1_sylow;
  h1->add_option("--lattice", lattice_path, "Group/lattice JSON file")->required();
  h1->add_option("--sylow", h1_sylow, "Restrict to a Sylow p-subgroup");

  auto* dp = app.add_subcommand("delpezzo", "Obstruction report for a del Pezzo surface");
  int degree = 0;
  std::string galois_path;
  std::optional<unsigned long> dp_sylow;
  std::string method = "auto";
  dp->add_option("--degree", degree, "Degree 1..9")->required();
  dp->add_option("--galois", galois_path, "JSON file with generators of the Galois image");
  dp->add_option("--sylow", dp_sylow, "Sylow comparison and Sylow p-subgroup mode");
  dp->add_option("--method", method, "H^1 route")->check(CLI::IsMember({"auto", "constraints", "saturation"}));

  auto* ch = app.add_subcommand("chatelet", "Vanishing check for a generalized Chatelet surface");
  std::string spec_path;
  bool filtration = false;
  ch->add_option("--spec", spec_path, "Chatelet spec JSON file")->required();
  ch->add_flag("--filtration", filtration, "Also build the six-step filtration");

  auto* vp = app.add_subcommand("verify-paper", "Run the full verification battery");
  std::string only;
  std::string matrix_a_path;
  vp->add_option("--only", only, "Run one tag only")->check(CLI::IsMember(cli::battery_tags()));
  vp->add_option("--matrix-a", matrix_a_path, "Replacement for the printed 28x28 matrix");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    io::Report report;
    if (*snf) {
      report = cli::cmd_snf(load(matrix_path), opt);
    } else if (*h1) {
      report = cli::cmd_h1(load(lattice_path), h1_sylow, opt);
    } else if (*dp) {
      std::optional<cli::Input> galois;
      if (!galois_path.empty()) galois = load(galois_path);
      report = cli::cmd_delpezzo(degree, galois, dp_sylow, parse_method(method), opt);
    } else if (*ch) {
      report = cli::cmd_chatelet(load(spec_path), filtration, opt);
    } else {
      cli::VerifyOptions verify;
      if (!only.empty()) verify.only = only;
      if (!matrix_a_path.empty()) verify.matrix_a = load(matrix_a_path);
      report = cli::cmd_verify_paper(verify, opt);
    }
    emit(report, report_path);
    return cli::exit_code(report);
  } catch (const Error& e) {
    std::cerr << "torsorlat: " << e.what() << '\n';
    return cli::exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "torsorlat: " << e.what() << '\n';
    return 2;
  }
}
