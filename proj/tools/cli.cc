// Copyright 2026 The pascal11 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <optional>
#include <sstream>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pascal/bignat.h"
#include "pascal/oracle.h"
#include "pascal/row.h"
#include "pascal/rowgen.h"
#include "pascal/verify_bench.h"

namespace pascal::cli {
namespace {

constexpr const char* kThresholdEnv = "PASCAL_KARATSUBA_THRESHOLD";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::optional<std::size_t> karatsuba_threshold;

  std::uint64_t n = 0;
  std::string method = "power";
  std::string row_format = "plain";
  bool annotate = false;

  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::string checks;
  std::size_t samples = 1;
  bool all_blocks = false;
  std::uint64_t seed = 0x5eed;
  std::string report_format;
  std::string out_path;
  unsigned jobs = 1;
  int width_offset = 0;

  std::uint64_t step = 1;
  std::size_t reps = 1;
};

std::size_t ParseThreshold(std::string_view text, std::string_view source) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < 2) {
    throw UsageError(std::string(source) + ": expected an integer >= 2, got '" +
                     std::string(text) + "'");
  }
  return value;
}

void ApplyThreshold(const Config& cfg) {
  if (cfg.karatsuba_threshold) {
    SetKaratsubaThreshold(*cfg.karatsuba_threshold);
  } else if (const char* env = std::getenv(kThresholdEnv)) {
    SetKaratsubaThreshold(ParseThreshold(env, kThresholdEnv));
  }
}

std::vector<Check> ParseCheckList(const std::string& list) {
  std::vector<Check> checks;
  std::stringstream ss(list);
  std::string name;
  while (std::getline(ss, name, ',')) {
    if (name.empty()) continue;
    auto check = ParseCheck(name);
    if (!check) throw UsageError("--checks: unknown check '" + name + "'");
    checks.push_back(*check);
  }
  if (checks.empty()) throw UsageError("--checks: no check names given");
  return checks;
}

ReportFormat ParseReportFormat(const std::string& name, ReportFormat fallback) {
  if (name.empty()) return fallback;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "jsonl") return ReportFormat::kJsonLines;
  throw UsageError("--format: expected csv or jsonl, got '" + name + "'");
}

int DoRow(const Config& cfg, std::ostream& out) {
  Row row;
  switch (*ParseRowMethod(cfg.method)) {
    case RowMethod::kPowerPartition:
      row = RowViaPower(cfg.n);
      break;
    case RowMethod::kMultiplicative:
      row = oracle::RowMultiplicative(cfg.n);
      break;
    case RowMethod::kRecurrence:
      row = oracle::RowRecurrence(cfg.n);
      break;
  }
  if (cfg.row_format == "plain") {
    out << FormatRowPlain(row) << '\n';
  } else if (cfg.row_format == "csv") {
    out << "n,k,coefficient\n";
    for (std::size_t k = 0; k < row.coefficients.size(); ++k) {
      out << row.n << ',' << k << ',' << row.coefficients[k].ToDecimal()
          << '\n';
    }
  } else {
    nlohmann::ordered_json j;
    j["n"] = row.n;
    j["method"] = RowMethodName(row.method);
    auto coeffs = nlohmann::ordered_json::array();
    for (const BigNat& c : row.coefficients) coeffs.push_back(c.ToDecimal());
    j["coefficients"] = std::move(coeffs);
    out << j.dump() << '\n';
  }
  return kExitOk;
}

int DoPower(const Config& cfg, std::ostream& out) {
  const ThetaResult t = Theta(cfg.n);
  const BigNat power = BigNat::Pow(ElevenVariant(t), cfg.n);
  out << (cfg.annotate ? AnnotateBlocks(power, t.block_width)
                       : power.ToDecimal())
      << '\n';
  return kExitOk;
}

int DoTheta(const Config& cfg, std::ostream& out) {
  const ThetaResult t = Theta(cfg.n);
  out << "n=" << t.n << " central_digits=" << t.central_digits
      << " theta=" << t.theta << " block_width=" << t.block_width
      << " base=" << ElevenVariant(t).ToDecimal() << '\n';
  return kExitOk;
}

template <typename Report>
void WriteReport(const Report& report, ReportFormat format,
                 const std::string& path, std::ostream& out) {
  if (path.empty()) {
    EmitReport(report, format, out);
  } else {
    EmitReport(report, format, std::filesystem::path(path));
  }
}

int DoVerify(const Config& cfg, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.n_from = cfg.from;
  options.n_to = cfg.to;
  if (!cfg.checks.empty()) options.checks = ParseCheckList(cfg.checks);
  options.residue_samples = cfg.samples;
  options.all_block_indices = cfg.all_blocks;
  options.seed = cfg.seed;
  options.workers = cfg.jobs;
  options.block_width_offset = cfg.width_offset;
  const ReportFormat format =
      ParseReportFormat(cfg.report_format, ReportFormat::kJsonLines);

  const VerifyReport report = VerifyRange(options);
  WriteReport(report, format, cfg.out_path, out);
  if (!report.passed()) {
    std::size_t failed = 0;
    for (const RowVerdict& row : report.rows) failed += !row.passed();
    err << "verify: " << failed << " of " << report.rows.size()
        << " rows failed\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

int DoBench(const Config& cfg, std::ostream& out, std::ostream& err) {
  const ReportFormat format =
      ParseReportFormat(cfg.report_format, ReportFormat::kCsv);
  const auto records =
      BenchMethods(BenchOptions{cfg.from, cfg.to, cfg.step, cfg.reps});
  WriteReport(std::span<const BenchRecord>(records), format, cfg.out_path, out);
  if (!RowsAgree(records)) {
    err << "bench: row generators disagree\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace

int RunCli(std::span<const std::string> args, std::ostream& out,
           std::ostream& err) {
  Config cfg;
  CLI::App app{"Pascal's triangle rows from powers of 11, 101, 1001, ..."};
  app.name(args.empty() ? "pascal11" : args[0]);
  app.require_subcommand(1);
  app.add_option("--karatsuba-threshold", cfg.karatsuba_threshold,
                 "Limb count at which multiplication switches to Karatsuba "
                 "(>= 2; overrides " + std::string(kThresholdEnv) + ")")
      ->check(CLI::Range(std::size_t{2}, SIZE_MAX));

  auto* row = app.add_subcommand("row", "Print row n of Pascal's triangle");
  row->add_option("n", cfg.n, "Row index")->required();
  row->add_option("--method", cfg.method, "power | mult | rec")
      ->check(CLI::IsMember({"power", "mult", "rec"}));
  row->add_option("--format", cfg.row_format, "plain | csv | json")
      ->check(CLI::IsMember({"plain", "csv", "json"}));

  auto* power = app.add_subcommand("power", "Print (1 theta 1)^n");
  power->add_option("n", cfg.n, "Row index")->required();
  power->add_flag("--annotate", cfg.annotate,
                  "Separate (theta+1)-digit blocks with '|'");

  auto* theta = app.add_subcommand("theta", "Show theta and the base for row n");
  theta->add_option("n", cfg.n, "Row index")->required();

  auto* verify = app.add_subcommand("verify", "Check rows against the oracles");
  verify->add_option("--from", cfg.from, "First row index")->required();
  verify->add_option("--to", cfg.to, "Last row index")->required();
  verify->add_option("--checks", cfg.checks,
                     "Comma-separated subset of checks (default: all)");
  verify->add_option("--samples", cfg.samples,
                     "Random block indices per row, besides 1 and n+1")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--all-blocks", cfg.all_blocks,
                   "Check every block index instead of sampling");
  verify->add_option("--seed", cfg.seed, "Seed for block index sampling");
  verify->add_option("--format", cfg.report_format, "csv | jsonl");
  verify->add_option("--out", cfg.out_path, "Write the report to FILE");
  verify->add_option("--jobs", cfg.jobs, "Worker threads")
      ->check(CLI::PositiveNumber);
  verify->add_option("--block-width-offset", cfg.width_offset,
                     "Skew the block width (fault injection)");

  auto* bench = app.add_subcommand("bench", "Time the three row generators");
  bench->add_option("--from", cfg.from, "First row index")->required();
  bench->add_option("--to", cfg.to, "Last row index")->required();
  bench->add_option("--step", cfg.step, "Stride between sampled n")
      ->check(CLI::PositiveNumber);
  bench->add_option("--reps", cfg.reps, "Repetitions per (method, n)")
      ->check(CLI::PositiveNumber);
  bench->add_option("--format", cfg.report_format, "csv | jsonl");
  bench->add_option("--out", cfg.out_path, "Write the report to FILE");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("pascal11");
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    ApplyThreshold(cfg);
    if ((*verify || *bench) && cfg.from > cfg.to) {
      throw UsageError("--from must not exceed --to");
    }
    if (*verify && !cfg.checks.empty()) ParseCheckList(cfg.checks);
    if (*verify || *bench) ParseReportFormat(cfg.report_format, {});

    if (*row) return DoRow(cfg, out);
    if (*power) return DoPower(cfg, out);
    if (*theta) return DoTheta(cfg, out);
    if (*verify) return DoVerify(cfg, out, err);
    return DoBench(cfg, out, err);
  } catch (const UsageError& e) {
    err << app.get_name() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << app.get_name() << ": error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace pascal::cli
