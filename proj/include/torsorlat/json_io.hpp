#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "torsorlat/chatelet.hpp"
#include "torsorlat/group_lattice.hpp"

namespace torsorlat::io {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become ParseError with "source:line:col".
Json parse(const std::string& text, const std::string& source = "<input>");
std::string read_file(const std::string& path);
Json read_json_file(const std::string& path);

/// {"rows": n, "cols": m, "entries": [["1", "-2"], ...]}. Entries are
/// written as decimal strings; on input, JSON integers are accepted too.
Json to_json(const IntMat& m);
IntMat matrix_from_json(const Json& j);

Json to_json(const FinAbGroup& g);

/// {"rank": n, "generators": [...], "action": [...]}; without "action" the
/// group acts on Z^rank through its generators.
GLattice lattice_from_json(const Json& j, std::size_t cap = kDefaultGroupCap);

/// Either a bare array of matrices or an object with "generators".
std::vector<IntMat> generators_from_json(const Json& j);

chatelet::ChateletSpec chatelet_spec_from_json(const Json& j);
Json to_json(const chatelet::ChateletSpec& spec);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& data);

// ---------------------------------------------------------------------------
// Reports

enum class Status { Pass, Fail, Skip };
std::string to_string(Status s);

struct Check {
  std::string name;
  std::string tag;
  Status status = Status::Skip;
  std::string computed;
  std::string expected;
  /// "reference" (published value), "oracle" (independent computation) or
  /// "identity" (holds by construction).
  std::string source;
  double seconds = 0;

  friend bool operator==(const Check&, const Check&) = default;
};

struct Report {
  std::string tool = "torsorlat";
  std::string version;
  std::string command;
  std::string input_digest;
  std::vector<Check> checks;
  Json results = Json::object();

  std::size_t count(Status s) const;
  bool all_passed() const { return count(Status::Fail) == 0; }

  friend bool operator==(const Report&, const Report&) = default;
};

Json to_json(const Report& r);
/// Strict inverse of to_json; throws ParseError on a malformed report.
Report report_from_json(const Json& j);

}  // namespace torsorlat::io
