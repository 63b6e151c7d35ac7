#include "ghzqdc/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

namespace ghzqdc {

using nlohmann::json;

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json complex_pair(const std::complex<double>& c) { return json::array({c.real(), c.imag()}); }

std::string message_description(const RunSpec& spec) {
  if (!spec.message) return "random:" + std::to_string(spec.random_message_bits);
  return spec.message->size() % 4 == 0 ? to_hex(*spec.message) : "0b" + to_bit_string(*spec.message);
}

json config_json(const RunSpec& spec) {
  const auto& s = spec.session;
  return json{{"protocol", std::string(to_string(s.variant))},
              {"n_ghz", s.n_ghz},
              {"auth_check_bits", s.m_auth_check},
              {"msg_check_fraction", s.check_fraction_msg},
              {"threshold_auth", s.error_threshold_auth},
              {"threshold_msg", s.error_threshold_msg},
              {"ecc", s.codec.name()},
              {"message", message_description(spec)},
              {"measurement_order", describe(s.order, s.variant)},
              {"bob_measures_first", s.bob_measures_first}};
}

json attack_json(const AttackModel& a) {
  json channels = json::array();
  for (Channel c : a.channels) channels.push_back(std::string(to_string(c)));
  json out{{"variant", std::string(to_string(a.variant))},
           {"channels", a.variant == AttackVariant::None ? json::array() : channels},
           {"coverage", a.coverage}};
  if (a.variant == AttackVariant::InterceptResendZ) {
    out["intercept_basis"] = a.intercept_basis == Basis::Z ? "z" : "x";
  }
  if (a.variant == AttackVariant::EntangleCNOT || a.variant == AttackVariant::EntangleGeneral) {
    out["ancilla_basis"] = a.ancilla_basis == Basis::Z ? "z" : "x";
  }
  if (a.variant == AttackVariant::EntangleGeneral) {
    out["alpha"] = complex_pair(a.general.alpha);
    out["beta"] = complex_pair(a.general.beta);
    out["alpha_p"] = complex_pair(a.general.alpha_p);
    out["beta_p"] = complex_pair(a.general.beta_p);
  }
  return out;
}

json ratio_json(const Ratio& r) {
  return json{{"count", r.numerator}, {"total", r.denominator}, {"rate", optional_number(r.value())}};
}

constexpr std::array<Verdict, 4> kVerdicts{Verdict::Authenticated, Verdict::AuthAborted,
                                           Verdict::MessageDelivered, Verdict::MessageDiscarded};

}  // namespace

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json to_json(const RunReport& r) {
  json verdict_counts = json::object();
  for (Verdict v : kVerdicts) {
    verdict_counts[std::string(to_string(v))] = r.verdict_counts[static_cast<std::size_t>(v)];
  }
  json per_trial = json::array();
  for (Verdict v : r.verdicts) per_trial.push_back(std::string(to_string(v)));

  json by_keys = json::object();
  for (std::size_t cell = 0; cell < 4; ++cell) {
    by_keys[std::to_string(cell / 2) + std::to_string(cell % 2)] = ratio_json(r.auth_check_errors_given_keys[cell]);
  }
  json eve = json::object();
  for (int bit : {0, 1}) {
    const auto& c = r.eve_counts[static_cast<std::size_t>(bit)];
    const auto h = r.eve_histogram(bit);
    eve["bit" + std::to_string(bit)] =
        json{{"counts", json::array({c[0], c[1]})},
             {"distribution", h ? json::array({(*h)[0], (*h)[1]}) : json(nullptr)}};
  }

  json out{
      {"schema", "ghzqdc.run-report"},
      {"schema_version", kReportSchemaVersion},
      {"seed", r.spec.seed},
      {"trials", r.spec.trials},
      {"config", config_json(r.spec)},
      {"attack", attack_json(r.spec.attack)},
      {"verdict_counts", verdict_counts},
      {"verdicts", per_trial},
      {"aggregate",
       {{"auth_check_errors", ratio_json(r.auth_check_errors)},
        {"auth_check_errors_given_key_a",
         {{"0", ratio_json(r.auth_check_errors_given_key_a[0])},
          {"1", ratio_json(r.auth_check_errors_given_key_a[1])}}},
        {"auth_check_errors_given_keys", by_keys},
        {"auth_detection", ratio_json(r.auth_detection)},
        {"msg_check_errors", ratio_json(r.msg_check_errors)},
        {"delivery_fidelity", ratio_json(r.delivery_fidelity)},
        {"frame_bit_errors", r.frame_bit_errors},
        {"eve_histogram", eve}}},
      {"analytic",
       {{"auth_error_rate", r.analytic.auth_error_rate},
        {"auth_error_rate_given_key_a",
         json::array({r.analytic.auth_error_rate_given_key_a[0], r.analytic.auth_error_rate_given_key_a[1]})},
        {"detection_probability", r.analytic.detection_probability},
        {"detection_formula", r.analytic.detection_formula},
        {"message_error_rate", optional_number(r.analytic.message_error_rate)},
        {"eve_view_total_variation", optional_number(r.analytic.eve_view_total_variation)}}},
  };
  if (!r.timestamp.empty()) out["generated_at"] = r.timestamp;
  return out;
}

json to_json(const SweepTable& t) {
  json rows = json::array();
  for (const auto& row : t.rows) {
    rows.push_back({{"m", row.m},
                    {"n_ghz", row.n_ghz},
                    {"trials", row.trials},
                    {"empirical_detection", row.empirical_detection},
                    {"detection_formula", row.detection_formula},
                    {"analytic_detection", row.analytic_detection},
                    {"empirical_auth_error_rate", row.empirical_auth_error_rate}});
  }
  json out{{"schema", "ghzqdc.sweep-report"},
           {"schema_version", kReportSchemaVersion},
           {"seed", t.base.seed},
           {"config", config_json(t.base)},
           {"attack", attack_json(t.base.attack)},
           {"rows", rows}};
  if (!t.timestamp.empty()) out["generated_at"] = t.timestamp;
  return out;
}

namespace {

std::string csv_number(const std::optional<double>& v) {
  if (!v) return "";
  return json(*v).dump();
}

}  // namespace

std::string to_csv(const RunReport& r) {
  std::ostringstream os;
  os << "metric,value\n";
  os << "seed," << r.spec.seed << "\n";
  os << "trials," << r.spec.trials << "\n";
  os << "protocol," << to_string(r.spec.session.variant) << "\n";
  os << "attack," << to_string(r.spec.attack.variant) << "\n";
  for (Verdict v : kVerdicts) os << "verdict_" << to_string(v) << "," << r.verdict_counts[static_cast<std::size_t>(v)] << "\n";
  os << "auth_check_bits," << r.auth_check_errors.denominator << "\n";
  os << "auth_check_errors," << r.auth_check_errors.numerator << "\n";
  os << "auth_error_rate," << csv_number(r.auth_check_errors.value()) << "\n";
  os << "auth_error_rate_key_a0," << csv_number(r.auth_check_errors_given_key_a[0].value()) << "\n";
  os << "auth_error_rate_key_a1," << csv_number(r.auth_check_errors_given_key_a[1].value()) << "\n";
  os << "auth_detection_rate," << csv_number(r.auth_detection.value()) << "\n";
  os << "msg_check_bits," << r.msg_check_errors.denominator << "\n";
  os << "msg_check_errors," << r.msg_check_errors.numerator << "\n";
  os << "msg_check_error_rate," << csv_number(r.msg_check_errors.value()) << "\n";
  os << "delivered," << r.delivery_fidelity.denominator << "\n";
  os << "delivery_fidelity," << csv_number(r.delivery_fidelity.value()) << "\n";
  os << "frame_bit_errors," << r.frame_bit_errors << "\n";
  for (int bit : {0, 1}) {
    const auto h = r.eve_histogram(bit);
    for (int o : {0, 1}) {
      os << "eve_bit" << bit << "_outcome" << o << ","
         << csv_number(h ? std::optional<double>((*h)[static_cast<std::size_t>(o)]) : std::nullopt) << "\n";
    }
  }
  os << "analytic_auth_error_rate," << csv_number(r.analytic.auth_error_rate) << "\n";
  os << "analytic_detection_probability," << csv_number(r.analytic.detection_probability) << "\n";
  os << "analytic_detection_formula," << csv_number(r.analytic.detection_formula) << "\n";
  os << "analytic_message_error_rate," << csv_number(r.analytic.message_error_rate) << "\n";
  os << "analytic_eve_view_total_variation," << csv_number(r.analytic.eve_view_total_variation) << "\n";
  return os.str();
}

std::string to_csv(const SweepTable& t) {
  std::ostringstream os;
  os << "m,n_ghz,trials,empirical_detection,detection_formula,analytic_detection,empirical_auth_error_rate\n";
  for (const auto& row : t.rows) {
    os << row.m << "," << row.n_ghz << "," << row.trials << "," << csv_number(row.empirical_detection) << ","
       << csv_number(row.detection_formula) << "," << csv_number(row.analytic_detection) << ","
       << csv_number(row.empirical_auth_error_rate) << "\n";
  }
  return os.str();
}

std::string render(const RunReport& report, OutputFormat format) {
  return format == OutputFormat::Json ? to_json(report).dump(2) + "\n" : to_csv(report);
}

std::string render(const SweepTable& table, OutputFormat format) {
  return format == OutputFormat::Json ? to_json(table).dump(2) + "\n" : to_csv(table);
}

}  // namespace ghzqdc
