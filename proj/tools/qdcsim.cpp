// qdcsim: Monte Carlo driver for the GHZ-based authenticated direct
// communication protocols.
//
//   qdcsim run   [options]   one batch of trials, prints a report
//   qdcsim sweep [options]   detection rate versus number of auth checks

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ghzqdc/harness.hpp"
#include "ghzqdc/report.hpp"

namespace {

using namespace ghzqdc;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::complex<double> parse_complex(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.empty() || parts.size() > 2) throw ConfigError("complex values are written \"re,im\": " + s);
  try {
    const double re = std::stod(parts[0]);
    const double im = parts.size() == 2 ? std::stod(parts[1]) : 0.0;
    return {re, im};
  } catch (const std::logic_error&) {
    throw ConfigError("cannot parse complex value \"" + s + "\"");
  }
}

MeasurementOrder parse_order(const std::string& s) {
  const auto parts = split(s, ',');
  if (parts.size() != 3) throw ConfigError("--measure-order takes three of bell,x,eve");
  MeasurementOrder order{};
  for (std::size_t i = 0; i < 3; ++i) {
    if (parts[i] == "bell") order[i] = MessageActor::BellMeasurer;
    else if (parts[i] == "x") order[i] = MessageActor::XMeasurer;
    else if (parts[i] == "eve") order[i] = MessageActor::Eve;
    else throw ConfigError("unknown measurement actor \"" + parts[i] + "\"");
  }
  return order;
}

struct Options {
  std::string protocol = "qdc1";
  std::size_t n_ghz = 256;
  std::size_t auth_check_bits = 32;
  double msg_check_fraction = 0.25;
  std::string message;
  std::size_t message_bits = 64;
  std::string ecc = "none";
  std::string attack = "none";
  std::string attack_channels;
  double attack_coverage = 1.0;
  std::string alpha = "1,0", beta = "0,0", alpha_p = "1,0", beta_p = "0,0";
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  double threshold_auth = 0.0;
  double threshold_msg = 0.0;
  std::string out;
  std::string format = "json";
  std::string measure_order = "bell,x,eve";
  bool bob_first = false;
  unsigned threads = 1;
  bool no_timestamp = false;
  std::string transcript;
  std::string m_values = "1,2,5,10,20";
};

void add_common(CLI::App& app, Options& o) {
  app.add_option("--protocol", o.protocol, "qdc1 | qdc2")->check(CLI::IsMember({"qdc1", "qdc2"}));
  app.add_option("--n-ghz", o.n_ghz, "GHZ triples per session");
  app.add_option("--auth-check-bits", o.auth_check_bits, "authentication check positions m");
  app.add_option("--msg-check-fraction", o.msg_check_fraction, "fraction of post-auth triples used as check bits");
  app.add_option("--message", o.message, "message as 0x<hex> or a bit string; random per trial if omitted");
  app.add_option("--message-bits", o.message_bits, "length of the random message");
  app.add_option("--ecc", o.ecc, "none | rep3 | rep5 | hamming74");
  app.add_option("--attack", o.attack, "none | intercept | entangle-cnot | entangle-general")
      ->check(CLI::IsMember({"none", "intercept", "entangle-cnot", "entangle-general"}));
  app.add_option("--attack-channels", o.attack_channels,
                 "comma list of trent-alice, trent-bob, alice-bob, alice-trent (default trent-alice)");
  app.add_option("--attack-coverage", o.attack_coverage, "fraction of qubits attacked");
  app.add_option("--alpha", o.alpha, "general attack alpha as re,im");
  app.add_option("--beta", o.beta, "general attack beta as re,im");
  app.add_option("--alpha-p", o.alpha_p, "general attack alpha' as re,im");
  app.add_option("--beta-p", o.beta_p, "general attack beta' as re,im");
  app.add_option("--trials", o.trials, "number of independent sessions");
  app.add_option("--seed", o.seed, "base seed");
  app.add_option("--threshold-auth", o.threshold_auth, "abort authentication above this error rate");
  app.add_option("--threshold-msg", o.threshold_msg, "discard the message above this check error rate");
  app.add_option("--out", o.out, "output file (stdout if omitted)");
  app.add_option("--format", o.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--measure-order", o.measure_order, "message-phase order, permutation of bell,x,eve");
  app.add_flag("--bob-first", o.bob_first, "qdc2: Bob measures before Alice encodes");
  app.add_option("--threads", o.threads, "worker threads");
  app.add_flag("--no-timestamp", o.no_timestamp, "omit generated_at from JSON output");
}

RunSpec build_spec(const Options& o) {
  RunSpec spec;
  auto& s = spec.session;
  s.variant = *parse_protocol_variant(o.protocol);
  s.n_ghz = o.n_ghz;
  s.m_auth_check = o.auth_check_bits;
  s.check_fraction_msg = o.msg_check_fraction;
  s.error_threshold_auth = o.threshold_auth;
  s.error_threshold_msg = o.threshold_msg;
  try {
    s.codec = ecc::Codec::parse(o.ecc);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  s.order = parse_order(o.measure_order);
  s.bob_measures_first = o.bob_first;

  if (!o.message.empty()) {
    try {
      spec.message = parse_bits(o.message);
    } catch (const BitParseError& e) {
      throw ConfigError(std::string("--message: ") + e.what());
    }
  }
  spec.random_message_bits = o.message_bits;

  auto& a = spec.attack;
  a.variant = *parse_attack_variant(o.attack);
  a.channels.clear();
  for (const auto& name : split(o.attack_channels.empty() ? "trent-alice" : o.attack_channels, ',')) {
    const auto c = parse_channel(name);
    if (!c) throw ConfigError("unknown channel \"" + name + "\"");
    a.channels.push_back(*c);
  }
  a.coverage = o.attack_coverage;
  a.general.alpha = parse_complex(o.alpha);
  a.general.beta = parse_complex(o.beta);
  a.general.alpha_p = parse_complex(o.alpha_p);
  a.general.beta_p = parse_complex(o.beta_p);

  spec.trials = o.trials;
  spec.seed = o.seed;
  spec.threads = o.threads;
  spec.output_path = o.out;
  spec.format = o.format == "csv" ? OutputFormat::Csv : OutputFormat::Json;
  return spec;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulator for GHZ-based authenticated quantum direct communication"};
  app.require_subcommand(1);
  Options o;

  auto* run_cmd = app.add_subcommand("run", "run a batch of independent sessions");
  add_common(*run_cmd, o);
  run_cmd->add_option("--transcript", o.transcript, "write the event log of trial 0 to this file");

  auto* sweep_cmd = app.add_subcommand("sweep", "detection rate versus auth check count");
  add_common(*sweep_cmd, o);
  sweep_cmd->add_option("--m-values", o.m_values, "comma list of m values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    const RunSpec spec = build_spec(o);
    if (run_cmd->parsed()) {
      RunReport report = run(spec);
      if (!o.no_timestamp) report.timestamp = utc_timestamp();
      emit(render(report, spec.format), spec.output_path);
      if (!o.transcript.empty()) {
        const auto r = execute_trial(spec, 0).result;
        emit(r.transcript.to_text(), o.transcript);
      }
    } else {
      std::vector<std::size_t> ms;
      for (const auto& v : split(o.m_values, ',')) {
        try {
          ms.push_back(static_cast<std::size_t>(std::stoull(v)));
        } catch (const std::logic_error&) {
          throw ConfigError("bad m value \"" + v + "\"");
        }
      }
      SweepTable table = sweep_detection_curve(spec, ms);
      if (!o.no_timestamp) table.timestamp = utc_timestamp();
      emit(render(table, spec.format), spec.output_path);
    }
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidAttackError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
