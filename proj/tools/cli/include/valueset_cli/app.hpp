#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "valueset/counting.hpp"
#include "valueset/error.hpp"
#include "valueset/ffield.hpp"
#include "valueset/polyrep.hpp"
#include "valueset/sat.hpp"

namespace valueset::cli {

using Json = nlohmann::ordered_json;

enum class Format { Json, Text };

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::string mode;  // char: coverage|onto, reduce: ssp-decide|ssp-count|sat3, verify: suite
  CountMethod method = CountMethod::Direct;
  NkSource nk_source = NkSource::Histogram;
  std::uint64_t p = 0;
  unsigned t = 0;
  std::string prime = "smallest";
  std::uint64_t seed = 0;
  unsigned workers = 1;
  Format format = Format::Json;
  std::optional<std::string> output;
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kInput = 2;
inline constexpr int kScale = 3;
inline constexpr int kInternal = 4;
}  // namespace exit_code

int exit_code_for(ErrorKind kind);

struct CommandResult {
  int code = exit_code::kOk;
  Json report;
};

CommandResult cmd_count(const RunConfig& cfg);
CommandResult cmd_permtest(const RunConfig& cfg);
CommandResult cmd_char(const RunConfig& cfg);
CommandResult cmd_reduce(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);

// Dispatches on cfg.subcommand, writes the report to `out` and diagnostics to `err`.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

std::string render(const Json& report, Format format);

Json field_json(const Field& field);

struct PropertyResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
  bool pass() const { return failed == 0; }
};

std::vector<PropertyResult> verify_suite(const std::string& suite, std::uint64_t seed,
                                         unsigned workers);

// Random polynomial of exact degree d over `field` (dense, leading coefficient nonzero).
DensePoly random_dense(const FieldPtr& field, unsigned d, std::mt19937_64& rng);

}  // namespace valueset::cli
