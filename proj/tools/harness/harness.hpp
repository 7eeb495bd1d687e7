// Copyright 2026 The dynmatch Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef DYNMATCH_HARNESS_HPP
#define DYNMATCH_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynmatch/dynmatch.h"

namespace dmh {

struct StreamUpdate {
  bool insert = true;
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  std::size_t line = 0;  // 1-based source line, 0 when generated
};

struct StreamFile {
  std::uint32_t n = 0;
  std::vector<StreamUpdate> updates;
};

/// Syntax errors carry the offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Header "n <count>", then one "+ u v" or "- u v" per line. Blank lines and
/// lines starting with '#' are skipped.
StreamFile parse_stream(std::istream& in);
StreamFile read_stream(const std::string& path);
void write_stream(std::ostream& out, const StreamFile& stream);

/// 64-bit Mersenne Twister (mt19937_64, standard constants) with a
/// rejection-sampled bounded draw, so streams are identical on every
/// platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t bound);
  bool chance(std::uint32_t per_mille) { return below(1000) < per_mille; }

 private:
  std::mt19937_64 engine_;
};

enum class StreamKind { Random, StarAdversary, Forest, DeleteHeavy };

std::optional<StreamKind> parse_kind(const std::string& name);
const char* kind_name(StreamKind kind);

struct GenerateOptions {
  StreamKind kind = StreamKind::Random;
  std::uint32_t n = 16;
  std::size_t length = 160;
  std::uint64_t seed = 1;
  /// Random kind: edge count the stream hovers around; 0 = n * ceil(sqrt(n)).
  std::size_t target_m = 0;
};

/// Deterministic in all options. Every stream is legal for a simple graph.
StreamFile generate(const GenerateOptions& options);

struct ReportRow {
  std::size_t index;
  bool insert;
  std::uint64_t ops;
  std::size_t m;
  std::size_t matching;
};

struct RunReport {
  std::string engine;
  std::uint32_t n = 0;
  std::vector<ReportRow> rows;
  std::uint64_t max_ops = 0;
  std::uint64_t total_ops = 0;
  std::vector<std::string> violations;
  /// Set when the run stopped early on an illegal update or engine error.
  std::optional<std::string> error;
  dm_status error_status = DM_OK;

  double amortized_ops() const {
    return rows.empty() ? 0.0 : static_cast<double>(total_ops) / static_cast<double>(rows.size());
  }
};

dm_config default_config();

struct ReplayOptions {
  dm_engine_kind engine = DM_ENGINE_SQRT;
  dm_config config = default_config();
  /// 0 picks the default: 1 when n <= 64, else 32.
  std::size_t check_every = 0;
  /// Drops a matched edge without repair right after this update (testing).
  std::optional<std::size_t> inject_fault_after;
};

std::size_t default_check_every(std::uint32_t n);

RunReport replay(const StreamFile& stream, const ReplayOptions& options);

/// Replays one stream on several engines in lockstep: every update goes to
/// all engines before the next one, and any disagreement on legality is a
/// violation. Reports come back in engine order.
std::vector<RunReport> replay_lockstep(const StreamFile& stream,
                                       const std::vector<dm_engine_kind>& engines,
                                       const dm_config& config, std::size_t check_every = 0);

/// Fixed, byte-stable text rendering of a report.
void write_report(std::ostream& out, const RunReport& report);

struct BenchRow {
  std::string engine;
  std::uint32_t n = 0;
  std::size_t updates = 0;
  std::uint64_t max_ops = 0;
  double amortized_ops = 0;
  double wall_ms = 0;
  std::size_t final_matching = 0;
  std::optional<std::string> error;
};

/// One worker thread per engine, results in engine order. No oracle checks.
std::vector<BenchRow> bench(const StreamFile& stream, const std::vector<dm_engine_kind>& engines,
                            const dm_config& config, bool parallel = true);
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows);

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitIllegalUpdate = 2,
  kExitViolation = 3,
  kExitInternal = 4,
};

int exit_code_for(const RunReport& report);

}  // namespace dmh

#endif  // DYNMATCH_HARNESS_HPP
