#include <doctest.h>

#include "torsorlat/commands.hpp"
#include "torsorlat/json_io.hpp"

using namespace torsorlat;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::BadInput;
}

std::string data(const std::string& name) { return io::read_file(std::string(TORSORLAT_DATA_DIR) + "/" + name); }

cli::Input input(const std::string& name) { return {name, data(name)}; }

cli::Options deterministic() {
  cli::Options o;
  o.deterministic = true;
  return o;
}

}  // namespace

TEST_CASE("matrix round trip with big entries") {
  IntMat m = IntMat::from_rows({{1, -2}, {3, 4}});
  m(0, 0) = Integer("123456789012345678901234567890");
  auto j = io::to_json(m);
  CHECK(j["entries"][0][0] == "123456789012345678901234567890");
  CHECK(io::matrix_from_json(j) == m);
  auto plain = io::parse(R"({"rows": 1, "cols": 2, "entries": [[5, "-7"]]})");
  CHECK(io::matrix_from_json(plain) == IntMat::from_rows({{5, -7}}));
}

TEST_CASE("matrix parse errors") {
  CHECK(code_of([] { io::matrix_from_json(io::parse(R"({"rows": 1, "cols": 2, "entries": [[1]]})")); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { io::matrix_from_json(io::parse(R"({"rows": 1, "cols": 1, "entries": [["x"]]})")); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { io::matrix_from_json(io::parse(R"({"cols": 1})")); }) == ErrorCode::ParseError);
}

TEST_CASE("malformed JSON reports line and column") {
  try {
    io::parse("{\n  \"rank\": 1,\n  oops\n}", "spec.json");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("spec.json:3:") != std::string::npos);
  }
  CHECK(code_of([] { io::read_file("/nonexistent/file.json"); }) == ErrorCode::BadInput);
}

TEST_CASE("lattice specs") {
  auto sign = io::lattice_from_json(io::parse(data("sign_action.json")));
  CHECK(h1(sign).group.to_string() == "Z/2");
  auto perm = io::lattice_from_json(io::parse(data("permutation_s3.json")));
  CHECK(perm.group()->order() == 6);
  CHECK(h1(perm).group.is_trivial());
  auto with_action = io::parse(R"({"rank": 2,
    "generators": [{"rows": 1, "cols": 1, "entries": [["-1"]]}],
    "action": [{"rows": 2, "cols": 2, "entries": [["0","1"],["1","0"]]}]})");
  CHECK(io::lattice_from_json(with_action).rank() == 2);
  auto bad_action = io::parse(R"({"rank": 2,
    "generators": [{"rows": 1, "cols": 1, "entries": [["-1"]]}],
    "action": [{"rows": 2, "cols": 2, "entries": [["0","1"],["-1","0"]]}]})");
  CHECK(code_of([&] { io::lattice_from_json(bad_action); }) == ErrorCode::BadInput);
}

TEST_CASE("chatelet spec round trip") {
  auto spec = io::chatelet_spec_from_json(io::parse(data("two_quadratics.json")));
  CHECK(spec.factors.size() == 2);
  auto again = io::chatelet_spec_from_json(io::to_json(spec));
  CHECK(again.gamma_generators == spec.gamma_generators);
  CHECK(again.sigma_root_perm == spec.sigma_root_perm);
}

TEST_CASE("digest") {
  CHECK(io::fnv1a_hex("") == "cbf29ce484222325");
  CHECK(io::fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("report round trip") {
  io::Report r;
  r.version = "x";
  r.command = "test";
  r.input_digest = "0";
  r.checks.push_back({"a", "t", io::Status::Pass, "1", "1", "reference", 0.25});
  r.checks.push_back({"b", "t", io::Status::Skip, "", "", "identity", 0});
  r.results["k"] = "v";
  auto j = io::to_json(r);
  CHECK(j["summary"]["passed"] == 1);
  CHECK(j["summary"]["skipped"] == 1);
  CHECK(io::report_from_json(j) == r);
  j["summary"]["failed"] = 3;
  CHECK(code_of([&] { io::report_from_json(j); }) == ErrorCode::ParseError);
}

TEST_CASE("snf command") {
  auto r = cli::cmd_snf(input("matrix_example.json"), deterministic());
  CHECK(r.all_passed());
  CHECK(r.results["invariant_factors"] == io::Json::array({"2", "6", "12"}));
  CHECK(io::report_from_json(io::to_json(r)) == r);
}

TEST_CASE("h1 command") {
  auto sign = cli::cmd_h1(input("sign_action.json"), std::nullopt, deterministic());
  CHECK(sign.results["h1"]["text"] == "Z/2");
  CHECK(cli::exit_code(sign) == 0);
  auto perm = cli::cmd_h1(input("permutation_s3.json"), 3, deterministic());
  CHECK(perm.results["h1"]["text"] == "0");
  CHECK(code_of([] { cli::cmd_h1({"bad.json", "{"}, std::nullopt, deterministic()); }) == ErrorCode::ParseError);
}

TEST_CASE("delpezzo command") {
  auto r = cli::cmd_delpezzo(6, input("weyl_r3.json"), std::nullopt, delpezzo::H1Method::Auto, deterministic());
  CHECK(r.results["obstruction"]["cup_index"] == "1");
  CHECK(r.all_passed());
  try {
    cli::cmd_delpezzo(2, std::nullopt, std::nullopt, delpezzo::H1Method::Auto, deterministic());
    FAIL("expected a refusal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLargeForEnumeration);
    CHECK(cli::exit_code(e) == 3);
  }
  auto sylow = cli::cmd_delpezzo(2, std::nullopt, 5, delpezzo::H1Method::Auto, deterministic());
  CHECK(sylow.all_passed());
}

TEST_CASE("chatelet command") {
  auto r = cli::cmd_chatelet(input("two_quadratics.json"), true, deterministic());
  CHECK(r.all_passed());
  auto split = cli::cmd_chatelet(input("split_quadratic.json"), false, deterministic());
  CHECK(split.count(io::Status::Skip) >= 1);
  CHECK(cli::exit_code(split) == 0);
}

TEST_CASE("exit codes") {
  CHECK(cli::exit_code(Error(ErrorCode::GroupTooLarge, "")) == 3);
  CHECK(cli::exit_code(Error(ErrorCode::ParseError, "")) == 2);
  io::Report r;
  r.checks.push_back({"a", "t", io::Status::Fail, "", "", "oracle", 0});
  CHECK(cli::exit_code(r) == 1);
}

TEST_CASE("verify-paper filter and determinism") {
  cli::VerifyOptions v;
  v.only = "cup";
  auto a = cli::cmd_verify_paper(v, deterministic());
  auto b = cli::cmd_verify_paper(v, deterministic());
  CHECK(a.all_passed());
  CHECK(!a.checks.empty());
  for (const auto& c : a.checks) CHECK(c.tag == "cup");
  CHECK(io::to_json(a).dump() == io::to_json(b).dump());
  v.only = "nonsense";
  CHECK(code_of([&] { cli::cmd_verify_paper(v, deterministic()); }) == ErrorCode::BadInput);
}

TEST_CASE("tampered matrix fails the determinant check") {
  cli::VerifyOptions v;
  v.only = "delpezzo3";
  const std::string path = std::string(TORSORLAT_TEST_DATA_DIR) + "/tampered_matrix_a.json";
  v.matrix_a = cli::Input{path, io::read_file(path)};
  auto r = cli::cmd_verify_paper(v, deterministic());
  CHECK(!r.all_passed());
  CHECK(cli::exit_code(r) == 1);
}
