#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "../tools/cli.hpp"
#include "fss/io.hpp"
#include "support.hpp"

using namespace fss;
using namespace fss::testsupport;

namespace {

std::string temp_path(const std::string& name) {
  return std::string("/tmp/fss_io_test_") + name;
}

}  // namespace

TEST_CASE("input round trip") {
  auto fx = oracle::perm_group_fixture({oracle::Perm::from_cycles("(1,2,3,4)", 4),
                                        oracle::Perm::from_cycles("(1,3)", 4)});
  io::InputDocument doc = io::fixture_to_input(fx);
  std::string text = io::serialize_input(doc);
  io::InputDocument back = io::parse_input(text);
  CHECK(back.field == doc.field);
  CHECK(back.names == doc.names);
  CHECK(back.faithful == doc.faithful);
  CHECK(back.module == doc.module);
  CHECK(back.metadata.at("group_order") == 8);
}

TEST_CASE("malformed inputs raise ParseError") {
  auto expect_parse_error = [](const std::string& text) {
    try {
      io::parse_input(text);
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ParseError);
    }
  };
  expect_parse_error("not json at all");
  expect_parse_error("{}");
  expect_parse_error(R"({"field": "real", "generators": []})");
  expect_parse_error(R"({"field": "rational", "generators": []})");
  expect_parse_error(R"({"field": "rational", "generators": [{"name": "a"}]})");
  expect_parse_error(
      R"({"field": "rational", "generators": [{"name": "a", "faithful": [["1","0"]], "module": [["1"]]}]})");
  expect_parse_error(
      R"({"field": {"prime": 4}, "generators": [{"name": "a", "faithful": [["1"]], "module": [["1"]]}]})");
  expect_parse_error(
      R"({"field": "rational", "generators": [{"name": "a", "faithful": [[1]], "module": [["1"]]}]})");
}

TEST_CASE("the parse-only Hecke module asset loads") {
  io::InputDocument doc = io::load_input(std::string(FSS_SOURCE_DIR) + "/assets/hecke_v224_parse_only.json");
  CHECK(doc.field == FieldSpec::rationals());
  CHECK(doc.names == std::vector<std::string>{"s1", "s2", "x1", "x2", "x3"});
  REQUIRE(doc.module.size() == 5);
  for (const Matrix& m : doc.module) {
    CHECK(m.rows() == 6);
    CHECK(m.cols() == 6);
  }
  // the displayed relations hold inside the module matrices:
  // s1^2 = 1 and s1 x1 = x2 s1 - 1
  const Matrix& s1 = doc.module[0];
  const Matrix& x1m = doc.module[2];
  const Matrix& x2m = doc.module[3];
  CHECK((s1 * s1).is_identity());
  CHECK(s1 * x1m == x2m * s1 - Matrix::identity(6, doc.field));
}

TEST_CASE("report builds, round-trips, and verifies") {
  BlackBoxAlgebra a = oracle::d8_algebra_2dim_module();
  auto fx = oracle::perm_group_fixture({oracle::Perm::from_cycles("(1,2,3,4)", 4),
                                        oracle::Perm::from_cycles("(1,3)", 4)});
  io::InputDocument doc = io::fixture_to_input(fx);
  doc.module = {d8_v_r(), d8_v_s()};

  DecomposeConfig cfg;
  Decomposition d = decompose(a, cfg);
  io::ReportConfig rc;
  io::Json report = io::build_report(a, doc, d, rc, oracle::oracle_dim(doc.faithful),
                                     io::Json::object());
  CHECK(report.at("bound") == 8);
  CHECK(report.at("oracle_dim") == 8);
  CHECK(report.at("cyclic_dims") == io::Json::array({2}));
  CHECK(report.at("levels").size() == 1);
  CHECK(report.at("levels")[0].at("u").at("algebra_dim") == 4);

  // verification passes on the honest report
  io::verify_report(report, doc);

  // a tampered bound is caught
  io::Json tampered = report;
  tampered["bound"] = 12;
  try {
    io::verify_report(tampered, doc);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Mismatch);
  }
}

TEST_CASE("reports are byte-stable modulo timings") {
  BlackBoxAlgebra a = oracle::d8_algebra_2dim_module();
  auto fx = oracle::perm_group_fixture({oracle::Perm::from_cycles("(1,2,3,4)", 4),
                                        oracle::Perm::from_cycles("(1,3)", 4)});
  io::InputDocument doc = io::fixture_to_input(fx);
  doc.module = {d8_v_r(), d8_v_s()};

  auto render = [&]() {
    DecomposeConfig cfg;
    Decomposition d = decompose(a, cfg);
    io::Json r = io::build_report(a, doc, d, io::ReportConfig{},
                                  oracle::oracle_dim(doc.faithful), io::Json::object());
    r.erase("timings_ms");
    return r.dump(2);
  };
  CHECK(render() == render());
}

TEST_CASE("cli end to end: from-perm, decompose, verify") {
  std::string fixture = temp_path("d8.json");
  std::string report = temp_path("d8.report.json");

  CHECK(cli::run({"from-perm", "(1,2,3,4)(1,3)", "-o", fixture}) == 0);
  io::InputDocument doc = io::load_input(fixture);
  CHECK(doc.faithful.size() == 2);
  CHECK(doc.faithful[0].rows() == 8);
  CHECK(doc.module[0].rows() == 4);

  CHECK(cli::run({"decompose", fixture, "--report", report}) == 0);
  io::Json rj = io::Json::parse(io::read_file(report));
  CHECK(rj.at("oracle_dim") == 8);
  CHECK(rj.at("bound").get<long long>() >= 8);

  CHECK(cli::run({"verify", report, fixture}) == 0);

  // corrupt input file
  std::string bad = temp_path("bad.json");
  io::write_file(bad, "{broken");
  CHECK(cli::run({"decompose", bad}) == 2);

  // max level zero on a non-scalar algebra is a pipeline error
  CHECK(cli::run({"decompose", fixture, "--max-levels", "0", "--report", report}) == 3);

  // missing files
  CHECK(cli::run({"verify", temp_path("nope.json"), fixture}) == 2);
  CHECK(cli::run({"decompose", temp_path("nope.json")}) == 2);

  // tampering with the report file is caught
  CHECK(cli::run({"decompose", fixture, "--report", report}) == 0);
  io::Json rj2 = io::Json::parse(io::read_file(report));
  rj2["cyclic_dims"] = io::Json::array({3});
  io::write_file(report, rj2.dump(2));
  CHECK(cli::run({"verify", report, fixture}) == 3);

  std::remove(fixture.c_str());
  std::remove(report.c_str());
  std::remove(bad.c_str());
}

TEST_CASE("cli cycle syntax variants") {
  std::string fixture = temp_path("syntax.json");
  // trivial group
  CHECK(cli::run({"from-perm", "()", "-o", fixture}) == 0);
  io::InputDocument triv = io::load_input(fixture);
  CHECK(triv.faithful[0].rows() == 1);

  // one generator as a '*'-joined product of disjoint cycles
  CHECK(cli::run({"from-perm", "(1,2)*(3,4)", "-o", fixture}) == 0);
  io::InputDocument prod = io::load_input(fixture);
  CHECK(prod.faithful.size() == 1);
  CHECK(prod.faithful[0].rows() == 2);  // order-2 group

  // malformed syntax
  CHECK(cli::run({"from-perm", "(1,2", "-o", fixture}) == 2);
  CHECK(cli::run({"from-perm", "1,2)", "-o", fixture}) == 2);
  CHECK(cli::run({"from-perm", "(1,2)*", "-o", fixture}) == 2);
  std::remove(fixture.c_str());
}

TEST_CASE("cli fast verification and skipped terminal dimension") {
  std::string fixture = temp_path("modes.json");
  std::string report = temp_path("modes.report.json");
  CHECK(cli::run({"from-perm", "(1,2,3) (1,2)", "-o", fixture}) == 0);

  CHECK(cli::run({"decompose", fixture, "--verify", "fast", "--report", report}) == 0);
  io::Json rj = io::Json::parse(io::read_file(report));
  CHECK(rj.at("config").at("verify") == "fast");
  CHECK(rj.at("levels")[0].at("verification").at("gamma_surjective").is_null());
  CHECK(!rj.at("levels")[0].at("verification").at("sigma_st_annihilates").is_null());
  CHECK(cli::run({"verify", report, fixture}) == 0);

  CHECK(cli::run({"decompose", fixture, "--terminal-dim", "skip", "--report", report}) == 0);
  rj = io::Json::parse(io::read_file(report));
  CHECK(rj.at("terminal_dim").is_null());
  CHECK(rj.at("bound").is_null());
  CHECK(cli::run({"verify", report, fixture}) == 0);

  CHECK(cli::run({"from-perm", "", "-o", fixture}) == 2);

  std::remove(fixture.c_str());
  std::remove(report.c_str());
}

TEST_CASE("cli input validation failures exit with code 2") {
  std::string path = temp_path("invalid.json");
  // module matrices that violate the faithful relations
  io::write_file(path, R"({
    "field": "rational",
    "generators": [
      {"name": "r",
       "faithful": [["0","0","0","1"],["1","0","0","0"],["0","1","0","0"],["0","0","1","0"]],
       "module": [["1","1"],["0","1"]]}
    ]
  })");
  CHECK(cli::run({"decompose", path}) == 2);

  // GF(4) is not a prime field
  io::write_file(path, R"({
    "field": {"prime": 4},
    "generators": [{"name": "e", "faithful": [["1"]], "module": [["1"]]}]
  })");
  CHECK(cli::run({"decompose", path}) == 2);
  std::remove(path.c_str());
}
