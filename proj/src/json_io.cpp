#include "torsorlat/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace torsorlat::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where + ": missing \"" + key + "\"");
  return *it;
}

std::size_t as_size(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(where + ": expected a nonnegative integer");
  return j.get<std::size_t>();
}

Integer as_integer(const Json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    return Integer(std::to_string(j.get<long long>()));
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos)
      bad(where + ": \"" + s + "\" is not a decimal integer");
    return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  bad(where + ": expected an integer or a decimal string");
}

std::vector<IntMat> matrix_list(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where + ": expected an array of matrices");
  std::vector<IntMat> out;
  for (const auto& m : j) out.push_back(matrix_from_json(m));
  return out;
}

std::string status_name(Status s) { return to_string(s); }

}  // namespace

Json parse(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    bad(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": malformed JSON");
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::BadInput, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json_file(const std::string& path) { return parse(read_file(path), path); }

Json to_json(const IntMat& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

IntMat matrix_from_json(const Json& j) {
  const std::size_t rows = as_size(field(j, "rows", "matrix"), "matrix rows");
  const std::size_t cols = as_size(field(j, "cols", "matrix"), "matrix cols");
  const Json& entries = field(j, "entries", "matrix");
  if (!entries.is_array() || entries.size() != rows) bad("matrix: \"entries\" must hold " + std::to_string(rows) + " rows");
  IntMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = entries[i];
    if (!row.is_array() || row.size() != cols)
      bad("matrix: row " + std::to_string(i) + " must hold " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = as_integer(row[c], "matrix entry");
  }
  return m;
}

Json to_json(const FinAbGroup& g) {
  Json factors = Json::array();
  for (const auto& f : g.invariant_factors()) factors.push_back(f.get_str());
  return Json{{"invariant_factors", std::move(factors)}, {"free_rank", g.free_rank()}, {"text", g.to_string()}};
}

GLattice lattice_from_json(const Json& j, std::size_t cap) {
  const std::size_t rank = as_size(field(j, "rank", "lattice"), "lattice rank");
  auto gens = matrix_list(field(j, "generators", "lattice"), "lattice generators");
  if (gens.empty()) bad("lattice: at least one generator is required");
  const std::size_t group_rank = gens.front().rows();
  auto group = make_group(group_rank, gens, cap);
  if (j.contains("action")) {
    auto action = matrix_list(j["action"], "lattice action");
    for (const auto& a : action)
      if (a.rows() != rank) throw Error(ErrorCode::DimensionMismatch, "action matrices must be rank x rank");
    GLattice lattice(group, std::move(action), rank);
    if (!lattice.verify_relations()) throw Error(ErrorCode::BadInput, "action does not respect the group relations");
    return lattice;
  }
  if (group_rank != rank) throw Error(ErrorCode::DimensionMismatch, "generators must be rank x rank");
  return GLattice::standard(group);
}

std::vector<IntMat> generators_from_json(const Json& j) {
  if (j.is_array()) return matrix_list(j, "generators");
  return matrix_list(field(j, "generators", "generator file"), "generators");
}

chatelet::ChateletSpec chatelet_spec_from_json(const Json& j) {
  chatelet::ChateletSpec spec;
  const Json& factors = field(j, "factors", "chatelet spec");
  if (!factors.is_array()) bad("chatelet spec: \"factors\" must be an array");
  for (const auto& f : factors) {
    const Json& id = field(f, "id", "factor");
    if (!id.is_number_integer()) bad("factor: \"id\" must be an integer");
    spec.factors.push_back({id.get<long>(), as_size(field(f, "degree", "factor"), "factor degree")});
  }
  auto perm = [](const Json& p, const std::string& where) {
    if (!p.is_array()) bad(where + ": expected an image array");
    chatelet::Perm out;
    for (const auto& x : p) out.push_back(as_size(x, where));
    return out;
  };
  const Json& gens = field(j, "gamma_generators", "chatelet spec");
  if (!gens.is_array()) bad("chatelet spec: \"gamma_generators\" must be an array");
  for (const auto& g : gens) spec.gamma_generators.push_back(perm(g, "gamma generator"));
  spec.sigma_root_perm = perm(field(j, "sigma_root_perm", "chatelet spec"), "sigma_root_perm");
  return spec;
}

Json to_json(const chatelet::ChateletSpec& spec) {
  Json factors = Json::array();
  for (const auto& f : spec.factors) factors.push_back({{"id", f.id}, {"degree", f.degree}});
  return Json{{"factors", factors}, {"gamma_generators", spec.gamma_generators}, {"sigma_root_perm", spec.sigma_root_perm}};
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "skip";
}

std::size_t Report::count(Status s) const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.status == s;
  return n;
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"tag", c.tag},
                      {"status", status_name(c.status)},
                      {"computed", c.computed},
                      {"expected", c.expected},
                      {"source", c.source},
                      {"seconds", c.seconds}});
  return Json{{"tool", r.tool},
              {"version", r.version},
              {"command", r.command},
              {"input_digest", r.input_digest},
              {"summary",
               {{"passed", r.count(Status::Pass)}, {"failed", r.count(Status::Fail)}, {"skipped", r.count(Status::Skip)}}},
              {"checks", std::move(checks)},
              {"results", r.results}};
}

Report report_from_json(const Json& j) {
  auto str = [](const Json& obj, const char* key, const std::string& where) {
    const Json& v = field(obj, key, where);
    if (!v.is_string()) bad(where + ": \"" + key + "\" must be a string");
    return v.get<std::string>();
  };
  Report r;
  r.tool = str(j, "tool", "report");
  r.version = str(j, "version", "report");
  r.command = str(j, "command", "report");
  r.input_digest = str(j, "input_digest", "report");
  const Json& checks = field(j, "checks", "report");
  if (!checks.is_array()) bad("report: \"checks\" must be an array");
  for (const auto& c : checks) {
    Check k;
    k.name = str(c, "name", "check");
    k.tag = str(c, "tag", "check");
    const std::string st = str(c, "status", "check");
    if (st == "pass") k.status = Status::Pass;
    else if (st == "fail") k.status = Status::Fail;
    else if (st == "skip") k.status = Status::Skip;
    else bad("check: unknown status \"" + st + "\"");
    k.computed = str(c, "computed", "check");
    k.expected = str(c, "expected", "check");
    k.source = str(c, "source", "check");
    const Json& secs = field(c, "seconds", "check");
    if (!secs.is_number()) bad("check: \"seconds\" must be a number");
    k.seconds = secs.get<double>();
    r.checks.push_back(std::move(k));
  }
  const Json& summary = field(j, "summary", "report");
  if (as_size(field(summary, "passed", "summary"), "summary") != r.count(Status::Pass) ||
      as_size(field(summary, "failed", "summary"), "summary") != r.count(Status::Fail) ||
      as_size(field(summary, "skipped", "summary"), "summary") != r.count(Status::Skip))
    bad("report: summary does not match the checks");
  r.results = field(j, "results", "report");
  if (!r.results.is_object()) bad("report: \"results\" must be an object");
  return r;
}

}  // namespace torsorlat::io
