#pragma once

#include <json.hpp>

#include "fss/fss.hpp"
#include "fss/oracle.hpp"

namespace fss::io {

using Json = nlohmann::ordered_json;

// Input schema:
//   { "field": "rational" | {"prime": p},
//     "generators": [ {"name": str, "faithful": [[str]], "module": [[str]]} ],
//     "metadata": { ... }  (optional, carried through) }
// All scalars are strings: "a/b" or "a" over the rationals, canonical
// decimal residues over GF(p).
struct InputDocument {
  FieldSpec field;
  std::vector<std::string> names;
  std::vector<Matrix> faithful;
  std::vector<Matrix> module;
  Json metadata;  // null when absent
};

InputDocument parse_input(const std::string& text);
InputDocument load_input(const std::string& path);
std::string serialize_input(const InputDocument& doc);
InputDocument fixture_to_input(const oracle::AlgebraFixture& fx);

BlackBoxAlgebra build_algebra(const InputDocument& doc);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const FieldSpec& spec, const Json& j);

struct ReportConfig {
  std::uint64_t seed = 0;
  int max_levels = 16;
  int budget = 32;
  bool full_verify = true;
  bool oracle_terminal_dim = true;
};

// Machine-readable record of one decomposition.  Deterministic except
// for the timings_ms object, which verification strips before
// comparing.
Json build_report(const BlackBoxAlgebra& algebra, const InputDocument& doc,
                  const Decomposition& d, const ReportConfig& config,
                  std::optional<long long> oracle_dim, const Json& timings_ms);

// re-run the decomposition recorded in a report against the input and
// compare; raises Mismatch on any difference
void verify_report(const Json& report, const InputDocument& doc);

std::string read_file(const std::string& path);   // ParseError on failure
void write_file(const std::string& path, const std::string& text);

}  // namespace fss::io
