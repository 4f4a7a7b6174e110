#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torsorlat/chatelet.hpp"
#include "torsorlat/delpezzo.hpp"
#include "torsorlat/json_io.hpp"

namespace torsorlat::cli {

inline constexpr const char* kVersion = "0.1.0";

struct Options {
  std::size_t cap = kDefaultGroupCap;
  std::uint64_t seed = 0;
  /// Zero every timing so that reports are byte-identical across runs.
  bool deterministic = false;
};

/// Input files are passed as (path, contents) so the digest covers the
/// bytes actually read.
struct Input {
  std::string source;
  std::string text;
};

io::Report cmd_snf(const Input& matrix, const Options& opt);
io::Report cmd_h1(const Input& lattice, std::optional<unsigned long> sylow, const Options& opt);
io::Report cmd_delpezzo(int degree, const std::optional<Input>& galois, std::optional<unsigned long> sylow,
                        delpezzo::H1Method method, const Options& opt);
io::Report cmd_chatelet(const Input& spec, bool filtration, const Options& opt);

struct VerifyOptions {
  std::optional<std::string> only;
  /// Replaces the built-in printed matrix A (negative controls).
  std::optional<Input> matrix_a;
};
io::Report cmd_verify_paper(const VerifyOptions& verify, const Options& opt);

/// Tags of the verify-paper battery in manifest order.
const std::vector<std::string>& battery_tags();

/// Named Chatelet data satisfying the vanishing hypotheses.
std::vector<std::pair<std::string, chatelet::ChateletSpec>> sample_chatelet_specs();

/// One line per check plus a summary line.
std::string render_text(const io::Report& report);

/// 0 when no check failed, 1 otherwise.
int exit_code(const io::Report& report);
/// 3 for resource caps, 2 for every other input or library error.
int exit_code(const Error& error);

}  // namespace torsorlat::cli
