#include "ghzqdc/harness.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <thread>

#include "ghzqdc/analytic.hpp"

namespace ghzqdc {

std::uint64_t trial_session_seed(std::uint64_t seed, std::size_t trial) { return mix_seed(seed, trial, 0); }
std::uint64_t trial_adversary_seed(std::uint64_t seed, std::size_t trial) { return mix_seed(seed, trial, 1); }
std::uint64_t trial_message_seed(std::uint64_t seed, std::size_t trial) { return mix_seed(seed, trial, 2); }

void RunSpec::validate() const {
  if (trials < 1) throw ConfigError("trials must be at least 1");
  if (threads < 1) throw ConfigError("threads must be at least 1");
  if (!message && random_message_bits < 1) throw ConfigError("message must have at least one bit");
  session.validate(message_bits());
  attack.validate();
  const Channel unused = session.variant == ProtocolVariant::Qdc1 ? Channel::AliceToTrent : Channel::AliceToBob;
  if (attack.targets(unused)) {
    throw ConfigError("attack channel " + std::string(to_string(unused)) + " carries no qubits in " +
                      std::string(to_string(session.variant)));
  }
}

std::optional<std::array<double, 2>> RunReport::eve_histogram(int bit) const {
  const auto& c = eve_counts[static_cast<std::size_t>(bit)];
  const std::size_t total = c[0] + c[1];
  if (total == 0) return std::nullopt;
  return std::array<double, 2>{static_cast<double>(c[0]) / static_cast<double>(total),
                               static_cast<double>(c[1]) / static_cast<double>(total)};
}

TrialRun execute_trial(const RunSpec& spec, std::size_t trial) {
  SessionConfig config = spec.session;
  config.rng_seed = trial_session_seed(spec.seed, trial);

  TrialRun out;
  if (spec.message) {
    out.message = *spec.message;
  } else {
    Rng mrng(trial_message_seed(spec.seed, trial));
    out.message.resize(spec.random_message_bits);
    for (auto& b : out.message) b = static_cast<std::uint8_t>(mrng() & 1U);
  }

  const Participants parties = Participants::standard();
  // Each trial consumes its own counter range so keys never repeat.
  const auto blocks_a = blocks_needed(*parties.alice_hash, config.n_ghz);
  const auto blocks_b = blocks_needed(*parties.bob_hash, config.n_ghz);
  const SessionCounters counters{Counter{trial * blocks_a}, Counter{trial * blocks_b}};

  std::optional<Eavesdropper> eve;
  if (spec.attack.variant != AttackVariant::None) {
    eve.emplace(spec.attack, trial_adversary_seed(spec.seed, trial));
  }
  out.result = run_session(config, parties, out.message, eve ? &*eve : nullptr, counters);
  if (eve) out.eve = eve->record();
  return out;
}

TrialSummary run_trial(const RunSpec& spec, std::size_t trial) {
  const TrialRun tr = execute_trial(spec, trial);
  const SessionResult& r = tr.result;
  const Bits& message = tr.message;

  TrialSummary s;
  s.verdict = r.verdict;
  s.auth_checks = r.auth_checks.size();
  for (const auto& c : r.auth_checks) {
    const auto cell = static_cast<std::size_t>(2 * c.key_bit_a + c.key_bit_b);
    ++s.auth_checks_by_keys[cell];
    if (c.error()) {
      ++s.auth_errors;
      ++s.auth_errors_by_keys[cell];
    }
  }
  s.reached_message_phase = r.verdict != Verdict::AuthAborted;
  if (s.reached_message_phase) {
    s.msg_checks = r.msg_check_count;
    s.msg_check_errors = r.msg_check_errors;
    for (const auto& m : r.message_records) {
      if (!m.is_check && m.bit != m.decoded) ++s.frame_bit_errors;
    }
    s.delivered = r.verdict == Verdict::MessageDelivered;
    s.delivered_correct = s.delivered && r.delivered && *r.delivered == message;
  }

  if (tr.eve && s.reached_message_phase) {
    std::map<std::size_t, int> bit_at;
    for (const auto& m : r.message_records) bit_at.emplace(m.position, m.bit);
    for (const auto& o : tr.eve->observations) {
      if (o.phase != Phase::Message) continue;
      const auto it = bit_at.find(o.position);
      if (it == bit_at.end()) continue;
      ++s.eve_counts[static_cast<std::size_t>(it->second)][static_cast<std::size_t>(o.outcome)];
    }
  }
  return s;
}

AnalyticReference analytic_reference(const RunSpec& spec) {
  AnalyticReference a;
  a.auth_error_rate = analytic::auth_error_rate(spec.attack);
  a.auth_error_rate_given_key_a = {analytic::auth_error_rate_given_key_a(spec.attack, 0),
                                   analytic::auth_error_rate_given_key_a(spec.attack, 1)};
  const std::size_t m = spec.session.m_auth_check;
  a.detection_probability =
      analytic::detection_probability(a.auth_error_rate, m, spec.session.error_threshold_auth);
  a.detection_formula = 1.0 - std::pow(0.75, static_cast<double>(m));
  a.message_error_rate = analytic::message_error_rate(spec.attack, spec.session.variant);
  const Channel msg = spec.session.variant == ProtocolVariant::Qdc1 ? Channel::AliceToBob : Channel::AliceToTrent;
  if (spec.attack.targets(msg)) {
    const auto v0 = analytic::eve_view(spec.attack, spec.session.variant, 0, spec.attack.ancilla_basis);
    const auto v1 = analytic::eve_view(spec.attack, spec.session.variant, 1, spec.attack.ancilla_basis);
    a.eve_view_total_variation = analytic::total_variation(v0, v1);
  }
  return a;
}

RunReport run(const RunSpec& spec) {
  spec.validate();
  std::vector<TrialSummary> summaries(spec.trials);
  const unsigned workers = std::min<unsigned>(spec.threads, static_cast<unsigned>(spec.trials));
  if (workers <= 1) {
    for (std::size_t t = 0; t < spec.trials; ++t) summaries[t] = run_trial(spec, t);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t t = w; t < spec.trials; t += workers) summaries[t] = run_trial(spec, t);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  RunReport report;
  report.spec = spec;
  report.verdicts.reserve(spec.trials);
  for (const auto& s : summaries) {
    report.verdicts.push_back(s.verdict);
    ++report.verdict_counts[static_cast<std::size_t>(s.verdict)];
    report.auth_check_errors.numerator += s.auth_errors;
    report.auth_check_errors.denominator += s.auth_checks;
    for (std::size_t cell = 0; cell < 4; ++cell) {
      report.auth_check_errors_given_keys[cell].numerator += s.auth_errors_by_keys[cell];
      report.auth_check_errors_given_keys[cell].denominator += s.auth_checks_by_keys[cell];
      report.auth_check_errors_given_key_a[cell / 2].numerator += s.auth_errors_by_keys[cell];
      report.auth_check_errors_given_key_a[cell / 2].denominator += s.auth_checks_by_keys[cell];
    }
    report.auth_detection.numerator += s.verdict == Verdict::AuthAborted ? 1 : 0;
    report.auth_detection.denominator += 1;
    report.msg_check_errors.numerator += s.msg_check_errors;
    report.msg_check_errors.denominator += s.msg_checks;
    if (s.delivered) {
      report.delivery_fidelity.numerator += s.delivered_correct ? 1 : 0;
      report.delivery_fidelity.denominator += 1;
    }
    report.frame_bit_errors += s.frame_bit_errors;
    for (std::size_t b = 0; b < 2; ++b) {
      for (std::size_t o = 0; o < 2; ++o) report.eve_counts[b][o] += s.eve_counts[b][o];
    }
  }
  report.analytic = analytic_reference(spec);
  return report;
}

SweepTable sweep_detection_curve(const RunSpec& base, const std::vector<std::size_t>& m_values) {
  SweepTable table;
  table.base = base;
  for (std::size_t m : m_values) {
    if (m < 1) throw ConfigError("sweep m values must be positive");
    RunSpec spec = base;
    spec.session.m_auth_check = m;
    spec.session.n_ghz = std::max(base.session.n_ghz, required_ghz(spec.session, spec.message_bits()));
    const RunReport r = run(spec);
    table.rows.push_back({m, spec.session.n_ghz, spec.trials, r.auth_detection.value().value_or(0.0),
                          r.analytic.detection_formula, r.analytic.detection_probability,
                          r.auth_check_errors.value().value_or(0.0)});
  }
  return table;
}

}  // namespace ghzqdc
