// Monte Carlo driver: runs independent sessions and aggregates statistics.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ghzqdc/adversary.hpp"
#include "ghzqdc/bits.hpp"
#include "ghzqdc/protocol.hpp"

namespace ghzqdc {

enum class OutputFormat : std::uint8_t { Json, Csv };

struct RunSpec {
  SessionConfig session{};
  AttackModel attack{};
  std::size_t trials = 100;
  // Fixed message for every trial; when empty each trial draws a fresh
  // random message of `random_message_bits` bits.
  std::optional<Bits> message;
  std::size_t random_message_bits = 64;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string output_path;
  OutputFormat format = OutputFormat::Json;

  // Throws ConfigError / InvalidAttackError before any trial runs.
  void validate() const;
  std::size_t message_bits() const { return message ? message->size() : random_message_bits; }
};

// Per-trial session seed and adversary seed.
std::uint64_t trial_session_seed(std::uint64_t seed, std::size_t trial);
std::uint64_t trial_adversary_seed(std::uint64_t seed, std::size_t trial);
std::uint64_t trial_message_seed(std::uint64_t seed, std::size_t trial);

struct TrialSummary {
  Verdict verdict = Verdict::AuthAborted;
  std::size_t auth_checks = 0;
  std::size_t auth_errors = 0;
  // Indexed 2 * key_bit_a + key_bit_b.
  std::array<std::size_t, 4> auth_checks_by_keys{};
  std::array<std::size_t, 4> auth_errors_by_keys{};
  bool reached_message_phase = false;
  std::size_t msg_checks = 0;
  std::size_t msg_check_errors = 0;
  std::size_t frame_bit_errors = 0;
  bool delivered = false;
  bool delivered_correct = false;
  // Eve's message-phase observations, [message bit][outcome].
  std::array<std::array<std::size_t, 2>, 2> eve_counts{};
};

struct Ratio {
  std::size_t numerator = 0;
  std::size_t denominator = 0;
  std::optional<double> value() const {
    if (denominator == 0) return std::nullopt;
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
};

struct AnalyticReference {
  double auth_error_rate = 0.0;
  std::array<double, 2> auth_error_rate_given_key_a{};
  double detection_probability = 0.0;
  // 1 - (3/4)^m.
  double detection_formula = 0.0;
  std::optional<double> message_error_rate;
  std::optional<double> eve_view_total_variation;
};

struct RunReport {
  RunSpec spec;
  std::vector<Verdict> verdicts;
  std::array<std::size_t, 4> verdict_counts{};
  Ratio auth_check_errors;
  std::array<Ratio, 2> auth_check_errors_given_key_a;
  std::array<Ratio, 4> auth_check_errors_given_keys;
  Ratio auth_detection;
  Ratio msg_check_errors;
  Ratio delivery_fidelity;
  std::size_t frame_bit_errors = 0;
  std::array<std::array<std::size_t, 2>, 2> eve_counts{};
  AnalyticReference analytic;
  std::string timestamp;

  // Normalized Eve outcome histogram given message bit, or empty if Eve
  // made no message-phase observation for that bit.
  std::optional<std::array<double, 2>> eve_histogram(int bit) const;
};

// One trial with its derived message, counters and adversary seed. `run`
// and the CLI transcript dump both go through this.
struct TrialRun {
  Bits message;
  SessionResult result;
  std::optional<EveRecord> eve;
};
TrialRun execute_trial(const RunSpec& spec, std::size_t trial);

TrialSummary run_trial(const RunSpec& spec, std::size_t trial);

// Aggregation only counts, so the result does not depend on `spec.threads`.
RunReport run(const RunSpec& spec);

AnalyticReference analytic_reference(const RunSpec& spec);

struct SweepRow {
  std::size_t m;
  std::size_t n_ghz;
  std::size_t trials;
  double empirical_detection;
  double detection_formula;
  double analytic_detection;
  double empirical_auth_error_rate;
};

struct SweepTable {
  RunSpec base;
  std::vector<SweepRow> rows;
  std::string timestamp;
};

// One run per m; n_ghz is raised to the minimum that fits when needed.
SweepTable sweep_detection_curve(const RunSpec& base, const std::vector<std::size_t>& m_values);

}  // namespace ghzqdc
