#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "fss/io.hpp"

namespace fss::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Generator syntax: each parenthesized cycle is one generator unless
// cycles are joined with '*', which composes them (rightmost first).
// Generators may also be separated by whitespace or ';'.
std::vector<std::string> split_generator_tokens(const std::string& text) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == ';')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') fail(ErrorCode::SyntaxError, "expected '(' in generator list");
    std::size_t close = text.find(')', i);
    if (close == std::string::npos) fail(ErrorCode::SyntaxError, "unterminated cycle");
    current += text.substr(i, close - i + 1);
    i = close + 1;
    skip_ws();
    if (i < text.size() && text[i] == '*') {
      current += '*';
      ++i;
      skip_ws();
      continue;
    }
    tokens.push_back(current);
    current.clear();
  }
  if (!current.empty()) fail(ErrorCode::SyntaxError, "dangling '*' in generator list");
  if (tokens.empty()) fail(ErrorCode::SyntaxError, "no generators given");
  return tokens;
}

int cmd_decompose(const std::string& input_path, std::uint64_t seed, int max_levels, int budget,
                  const std::string& verify_mode, std::string report_path,
                  const std::string& terminal_dim_mode) {
  io::InputDocument doc = io::load_input(input_path);
  auto t_total = Clock::now();
  BlackBoxAlgebra algebra = io::build_algebra(doc);

  DecomposeConfig cfg;
  cfg.seed = seed;
  cfg.max_levels = max_levels;
  cfg.budget = budget;
  cfg.full_verify = verify_mode == "full";
  cfg.oracle_terminal_dim = terminal_dim_mode == "oracle";

  auto t_dec = Clock::now();
  Decomposition d = decompose(algebra, cfg);
  double dec_ms = ms_since(t_dec);

  auto t_oracle = Clock::now();
  std::optional<long long> odim = oracle::oracle_dim(doc.faithful);
  double oracle_ms = ms_since(t_oracle);

  io::ReportConfig rc;
  rc.seed = cfg.seed;
  rc.max_levels = cfg.max_levels;
  rc.budget = cfg.budget;
  rc.full_verify = cfg.full_verify;
  rc.oracle_terminal_dim = cfg.oracle_terminal_dim;

  io::Json timings = io::Json::object();
  timings["decompose"] = dec_ms;
  timings["oracle_dim"] = oracle_ms;
  timings["total"] = ms_since(t_total);

  io::Json report = io::build_report(algebra, doc, d, rc, odim, timings);
  if (report_path.empty()) report_path = input_path + ".report.json";
  io::write_file(report_path, report.dump(2) + "\n");

  std::cout << "field:        " << algebra.field().str() << "\n";
  std::cout << "dim A:        " << algebra.dim() << " (faithful " << algebra.faithful_dim()
            << "x" << algebra.faithful_dim() << ", module " << algebra.module_dim() << "x"
            << algebra.module_dim() << ")\n";
  bool checks_ok = true;
  for (const FSSLevel& level : d.levels) {
    std::cout << "level " << level.index << ":      dim M = " << level.cyclic_dim() << ", |U| "
              << level.u_raw_count << " -> " << level.u.size()
              << ", dim K<U> = " << level.u_algebra_dim() << ", sections inv/comp = "
              << level.sec.inverted_count << "/" << level.sec.completion_count << "\n";
    checks_ok = checks_ok && level.flags.all_true();
  }
  std::cout << "stopped:      " << stop_reason_name(d.reason) << " after " << d.levels.size()
            << " level(s)\n";
  if (d.terminal_dim.has_value()) {
    std::cout << "terminal dim: " << *d.terminal_dim << "\n";
  } else {
    std::cout << "terminal dim: skipped (bound is parameterized by dim A_ell)\n";
  }
  if (d.bound.has_value()) {
    std::cout << "bound:        " << *d.bound << "\n";
  }
  std::cout << "oracle dim:   " << *odim << "\n";
  std::cout << "report:       " << report_path << "\n";

  if (!checks_ok) {
    std::cerr << "verification flags failed; see the report\n";
    return 3;
  }
  if (d.bound.has_value() && *d.bound < *odim) {
    std::cerr << "bound " << *d.bound << " fell below the certified dimension " << *odim << "\n";
    return 3;
  }
  std::cout << "checks:       ok\n";
  return 0;
}

int cmd_from_perm(const std::string& gens_text, const std::string& out_path, int points) {
  std::vector<std::string> tokens = split_generator_tokens(gens_text);
  int n = points;
  if (n <= 0) {
    n = 1;
    for (const std::string& t : tokens) n = std::max(n, oracle::points_needed(t));
  }
  std::vector<oracle::Perm> gens;
  for (const std::string& t : tokens) gens.push_back(oracle::Perm::from_cycles(t, n));
  oracle::AlgebraFixture fx = oracle::perm_group_fixture(gens);
  io::InputDocument doc = io::fixture_to_input(fx);
  io::write_file(out_path, io::serialize_input(doc));
  std::cout << "group order:  " << fx.group_order << "\n";
  std::cout << "faithful dim: " << fx.group_order << " (regular representation)\n";
  std::cout << "module dim:   " << n << " (point permutation)\n";
  std::cout << "input:        " << out_path << "\n";
  return 0;
}

int cmd_verify(const std::string& report_path, const std::string& input_path) {
  io::Json report;
  try {
    report = io::Json::parse(io::read_file(report_path));
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail(ErrorCode::ParseError, std::string("invalid report JSON: ") + e.what());
  }
  io::InputDocument doc = io::load_input(input_path);
  io::verify_report(report, doc);
  std::cout << "report matches a fresh decomposition\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"exact Frobenius-Schreier-Sims decomposition of matrix algebras"};
  app.require_subcommand(1);

  std::string input_path, report_path, verify_mode = "full", terminal_mode = "oracle";
  std::uint64_t seed = 0;
  int max_levels = 16, budget = 32;
  auto* dec = app.add_subcommand("decompose", "decompose an algebra input file");
  dec->add_option("input", input_path, "input JSON")->required();
  dec->add_option("--seed", seed, "random seed (default 0)");
  dec->add_option("--max-levels", max_levels, "level cap (default 16)");
  dec->add_option("--budget", budget, "random elements per level (default 32)");
  dec->add_option("--verify", verify_mode, "full|fast (default full)")
      ->check(CLI::IsMember({"full", "fast"}));
  dec->add_option("--report", report_path, "report path (default <input>.report.json)");
  dec->add_option("--terminal-dim", terminal_mode, "oracle|skip (default oracle)")
      ->check(CLI::IsMember({"oracle", "skip"}));

  std::string gens_text, out_path = "fixture.json";
  int points = 0;
  auto* fp = app.add_subcommand("from-perm", "emit a group-algebra input from permutations");
  fp->add_option("generators", gens_text,
                 "cycle notation; each (..) is one generator, join cycles with '*'")
      ->required();
  fp->add_option("-o,--out", out_path, "output path (default fixture.json)");
  fp->add_option("--points", points, "number of points (default: largest label)");

  std::string v_report, v_input;
  auto* ver = app.add_subcommand("verify", "re-run and compare a recorded report");
  ver->add_option("report", v_report, "report JSON")->required();
  ver->add_option("input", v_input, "input JSON")->required();

  std::vector<const char*> argv{"fss"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (dec->parsed()) {
      return cmd_decompose(input_path, seed, max_levels, budget, verify_mode, report_path,
                           terminal_mode);
    }
    if (fp->parsed()) return cmd_from_perm(gens_text, out_path, points);
    if (ver->parsed()) return cmd_verify(v_report, v_input);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace fss::cli
