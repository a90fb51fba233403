#include "fss/io.hpp"

#include <fstream>
#include <sstream>

namespace fss::io {

namespace {

FieldSpec field_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "rational") return FieldSpec::rationals();
  if (j.is_object() && j.contains("prime")) {
    const Json& p = j.at("prime");
    if (p.is_number_unsigned() || p.is_number_integer()) {
      long long v = p.get<long long>();
      if (v < 2) fail(ErrorCode::ParseError, "field prime must be at least 2");
      return FieldSpec::gf(static_cast<std::uint64_t>(v));
    }
    if (p.is_string()) {
      const std::string s = p.get<std::string>();
      for (char c : s) {
        if (c < '0' || c > '9') fail(ErrorCode::ParseError, "bad prime literal '" + s + "'");
      }
      return FieldSpec::gf(std::stoull(s));
    }
  }
  fail(ErrorCode::ParseError, "field must be \"rational\" or {\"prime\": p}");
}

Json field_to_json(const FieldSpec& spec) {
  if (spec.kind == FieldKind::rational) return Json("rational");
  Json j = Json::object();
  j["prime"] = spec.p;
  return j;
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const FieldSpec& spec, const Json& j) {
  if (!j.is_array() || j.empty()) fail(ErrorCode::ParseError, "matrix must be a non-empty array");
  int rows = static_cast<int>(j.size());
  if (!j[0].is_array() || j[0].empty()) fail(ErrorCode::ParseError, "matrix rows must be arrays");
  int cols = static_cast<int>(j[0].size());
  Matrix m(rows, cols, spec);
  for (int i = 0; i < rows; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      fail(ErrorCode::ParseError, "ragged matrix rows");
    }
    for (int c = 0; c < cols; ++c) {
      const Json& cell = row[static_cast<std::size_t>(c)];
      if (!cell.is_string()) fail(ErrorCode::ParseError, "matrix entries must be strings");
      m.at(i, c) = Scalar::parse(spec, cell.get<std::string>());
    }
  }
  return m;
}

InputDocument parse_input(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("field") || !j.contains("generators")) {
    fail(ErrorCode::ParseError, "input needs \"field\" and \"generators\"");
  }
  InputDocument doc;
  doc.field = field_from_json(j.at("field"));
  const Json& gens = j.at("generators");
  if (!gens.is_array() || gens.empty()) {
    fail(ErrorCode::ParseError, "generators must be a non-empty array");
  }
  for (const Json& g : gens) {
    if (!g.is_object() || !g.contains("name") || !g.contains("faithful") || !g.contains("module")) {
      fail(ErrorCode::ParseError, "each generator needs name, faithful, module");
    }
    doc.names.push_back(g.at("name").get<std::string>());
    doc.faithful.push_back(matrix_from_json(doc.field, g.at("faithful")));
    doc.module.push_back(matrix_from_json(doc.field, g.at("module")));
  }
  for (std::size_t i = 0; i < doc.faithful.size(); ++i) {
    if (doc.faithful[i].rows() != doc.faithful[i].cols() ||
        doc.module[i].rows() != doc.module[i].cols() ||
        doc.faithful[i].rows() != doc.faithful[0].rows() ||
        doc.module[i].rows() != doc.module[0].rows()) {
      fail(ErrorCode::ParseError, "generator matrices must be square with consistent sizes");
    }
  }
  if (j.contains("metadata")) doc.metadata = j.at("metadata");
  return doc;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << text;
}

InputDocument load_input(const std::string& path) { return parse_input(read_file(path)); }

std::string serialize_input(const InputDocument& doc) {
  Json j = Json::object();
  j["field"] = field_to_json(doc.field);
  Json gens = Json::array();
  for (std::size_t i = 0; i < doc.names.size(); ++i) {
    Json g = Json::object();
    g["name"] = doc.names[i];
    g["faithful"] = matrix_to_json(doc.faithful[i]);
    g["module"] = matrix_to_json(doc.module[i]);
    gens.push_back(std::move(g));
  }
  j["generators"] = std::move(gens);
  if (!doc.metadata.is_null()) j["metadata"] = doc.metadata;
  return j.dump(2) + "\n";
}

InputDocument fixture_to_input(const oracle::AlgebraFixture& fx) {
  InputDocument doc;
  doc.field = fx.field;
  doc.names = fx.names;
  doc.faithful = fx.faithful;
  doc.module = fx.module;
  Json meta = Json::object();
  meta["group_order"] = fx.group_order;
  doc.metadata = std::move(meta);
  return doc;
}

BlackBoxAlgebra build_algebra(const InputDocument& doc) {
  return BlackBoxAlgebra(doc.field, doc.names, doc.faithful, doc.module);
}

namespace {

Json flags_to_json(const VerificationFlags& f) {
  Json j = Json::object();
  auto put = [&](const char* key, const std::optional<bool>& v) {
    if (v.has_value()) {
      j[key] = *v;
    } else {
      j[key] = nullptr;
    }
  };
  put("gamma_surjective", f.gamma_surjective);
  put("u_membership", f.u_membership);
  put("sigma_st_annihilates", f.sigma_st_annihilates);
  put("chain_contained", f.chain_contained);
  return j;
}

Json level_to_json(const FSSLevel& level) {
  Json j = Json::object();
  j["index"] = level.index;
  j["algebra_dim"] = level.algebra.dim();
  j["cyclic_dim"] = level.cyclic_dim();
  Json simple = Json::object();
  simple["dim"] = level.simple.dim();
  simple["endo_dim"] = level.endo_dim;
  Json nbasis = Json::array();
  for (const Vec& row : level.simple.subspace.basis()) {
    Json r = Json::array();
    for (const Scalar& c : row) r.push_back(c.str());
    nbasis.push_back(std::move(r));
  }
  simple["basis"] = std::move(nbasis);
  j["simple"] = std::move(simple);

  Json x = Json::array();
  for (const Scalar& c : level.tr.x) x.push_back(c.str());
  j["x"] = std::move(x);

  Json tr = Json::object();
  Json upgraded = Json::array();
  for (bool b : level.tr.upgraded) upgraded.push_back(b);
  tr["upgraded"] = std::move(upgraded);
  Json images = Json::array();
  for (const Elem& t : level.tr.t_elems) images.push_back(matrix_to_json(t.fa));
  tr["images"] = std::move(images);
  j["transversal"] = std::move(tr);

  Json sec = Json::object();
  Json counts = Json::object();
  counts["inverted-transversal"] = level.sec.inverted_count;
  counts["idempotent-completion"] = level.sec.completion_count;
  sec["strategy_counts"] = std::move(counts);
  Json entries = Json::array();
  for (const SectionEntry& e : level.sec.entries) {
    Json je = Json::object();
    je["s"] = e.s;
    je["t"] = e.t;
    je["annihilating"] = e.annihilating;
    if (!e.annihilating) {
      je["strategy"] = e.strategy == SectionStrategy::inverted_transversal
                           ? "inverted-transversal"
                           : "idempotent-completion";
      je["sigma"] = matrix_to_json(e.sigma.fa);
      je["sigma_inv"] = matrix_to_json(e.sigma_inv.fa);
      je["defect_zero"] = e.defect.is_zero();
    }
    entries.push_back(std::move(je));
  }
  sec["entries"] = std::move(entries);
  j["section"] = std::move(sec);

  Json u = Json::object();
  u["raw_count"] = level.u_raw_count;
  u["count"] = static_cast<int>(level.u.size());
  u["algebra_dim"] = level.u_algebra_dim();
  Json tags = Json::array();
  Json lambdas = Json::array();
  for (const UGen& g : level.u) {
    tags.push_back(u_tag_name(g.tag));
    lambdas.push_back(g.lambda.str());
  }
  u["tags"] = std::move(tags);
  u["lambdas"] = std::move(lambdas);
  j["u"] = std::move(u);

  j["verification"] = flags_to_json(level.flags);
  return j;
}

}  // namespace

Json build_report(const BlackBoxAlgebra& algebra, const InputDocument& doc,
                  const Decomposition& d, const ReportConfig& config,
                  std::optional<long long> oracle_dim, const Json& timings_ms) {
  Json j = Json::object();
  j["format"] = "fss-report";
  j["version"] = 1;

  Json input = Json::object();
  input["field"] = field_to_json(doc.field);
  Json names = Json::array();
  for (const std::string& n : doc.names) names.push_back(n);
  input["generators"] = std::move(names);
  input["faithful_dim"] = algebra.faithful_dim();
  input["module_dim"] = algebra.module_dim();
  input["algebra_dim"] = algebra.dim();
  j["input"] = std::move(input);

  Json cfg = Json::object();
  cfg["seed"] = config.seed;
  cfg["max_levels"] = config.max_levels;
  cfg["budget"] = config.budget;
  cfg["verify"] = config.full_verify ? "full" : "fast";
  cfg["terminal_dim"] = config.oracle_terminal_dim ? "oracle" : "skip";
  j["config"] = std::move(cfg);

  Json levels = Json::array();
  for (const FSSLevel& level : d.levels) levels.push_back(level_to_json(level));
  j["levels"] = std::move(levels);

  Json terminal = Json::object();
  terminal["reason"] = stop_reason_name(d.reason);
  terminal["generator_count"] = static_cast<int>(d.terminal_gens.size());
  terminal["algebra_dim"] = d.terminal_level_dim;
  j["terminal"] = std::move(terminal);

  Json cyclic = Json::array();
  for (int c : d.cyclic_dims) cyclic.push_back(c);
  j["cyclic_dims"] = std::move(cyclic);
  j["terminal_dim"] = d.terminal_dim.has_value() ? Json(*d.terminal_dim) : Json(nullptr);
  j["bound"] = d.bound.has_value() ? Json(*d.bound) : Json(nullptr);
  j["oracle_dim"] = oracle_dim.has_value() ? Json(*oracle_dim) : Json(nullptr);
  j["timings_ms"] = timings_ms.is_null() ? Json::object() : timings_ms;
  return j;
}

void verify_report(const Json& report, const InputDocument& doc) {
  if (!report.is_object() || report.value("format", "") != "fss-report") {
    fail(ErrorCode::ParseError, "not an fss report");
  }
  if (!report.contains("config")) fail(ErrorCode::ParseError, "report has no config");
  const Json& cfg = report.at("config");
  ReportConfig config;
  config.seed = cfg.value("seed", 0ULL);
  config.max_levels = cfg.value("max_levels", 16);
  config.budget = cfg.value("budget", 32);
  config.full_verify = cfg.value("verify", "full") == std::string("full");
  config.oracle_terminal_dim = cfg.value("terminal_dim", "oracle") == std::string("oracle");

  BlackBoxAlgebra algebra = build_algebra(doc);
  DecomposeConfig dc;
  dc.seed = config.seed;
  dc.max_levels = config.max_levels;
  dc.budget = config.budget;
  dc.full_verify = config.full_verify;
  dc.oracle_terminal_dim = config.oracle_terminal_dim;
  Decomposition d = decompose(algebra, dc);

  std::optional<long long> odim;
  if (!report.at("oracle_dim").is_null()) {
    odim = oracle::oracle_dim(doc.faithful);
  }
  Json rebuilt = build_report(algebra, doc, d, config, odim, Json::object());

  Json given = report;
  given.erase("timings_ms");
  rebuilt.erase("timings_ms");
  if (given != rebuilt) {
    fail(ErrorCode::Mismatch, "report does not match a fresh decomposition of the input");
  }
}

}  // namespace fss::io
