#include "ghzqdc/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

namespace ghzqdc {

std::string_view to_string(ProtocolVariant v) { return v == ProtocolVariant::Qdc1 ? "qdc1" : "qdc2"; }

std::optional<ProtocolVariant> parse_protocol_variant(std::string_view s) {
  if (s == "qdc1") return ProtocolVariant::Qdc1;
  if (s == "qdc2") return ProtocolVariant::Qdc2;
  return std::nullopt;
}

std::array<MeasurementOrder, 6> all_measurement_orders() {
  std::array<MessageActor, 3> order = kDefaultOrder;
  std::sort(order.begin(), order.end());
  std::array<MeasurementOrder, 6> out{};
  std::size_t k = 0;
  do {
    out[k++] = order;
  } while (std::next_permutation(order.begin(), order.end()));
  std::stable_partition(out.begin(), out.end(), [](const auto& o) { return o == kDefaultOrder; });
  return out;
}

namespace {

std::string_view bell_actor(ProtocolVariant v) { return v == ProtocolVariant::Qdc1 ? "Bob" : "Trent"; }
std::string_view x_actor(ProtocolVariant v) { return v == ProtocolVariant::Qdc1 ? "Trent" : "Bob"; }

std::string format_rate(double r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", r);
  return buf;
}

std::string bits_csv(const Bits& bits) {
  return join_mapped(bits, [](std::uint8_t b) { return std::string(1, b ? '1' : '0'); });
}

std::vector<std::size_t> sample_without_replacement(std::vector<std::size_t> pool, std::size_t k,
                                                    Rng& rng) {
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

GhzTriple& triple_at(std::vector<GhzTriple>& triples, std::size_t position) {
  auto it = std::lower_bound(triples.begin(), triples.end(), position,
                             [](const GhzTriple& t, std::size_t p) { return t.position < p; });
  if (it == triples.end() || it->position != position) {
    throw ProtocolError("no GHZ triple at position " + std::to_string(position));
  }
  return *it;
}

// Planned positions with their bits, ascending by position.
std::vector<std::pair<std::size_t, int>> planned_bits(const MessagePlan& plan) {
  std::vector<std::pair<std::size_t, int>> out;
  out.reserve(plan.check_positions.size() + plan.message_positions.size());
  for (std::size_t i = 0; i < plan.check_positions.size(); ++i) {
    out.emplace_back(plan.check_positions[i], plan.check_bits[i]);
  }
  for (std::size_t i = 0; i < plan.message_positions.size(); ++i) {
    out.emplace_back(plan.message_positions[i], plan.frame[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void encode_and_send(ProtocolVariant variant, std::vector<GhzTriple>& triples,
                     const MessagePlan& plan, ChannelTap* tap, SessionTranscript& transcript) {
  const auto bits = planned_bits(plan);
  const Gate1Q h = make_gate(GateName::H);
  const Gate1Q hx = make_gate(GateName::HX);
  std::size_t ones = 0;
  for (const auto& [pos, bit] : bits) {
    auto& t = triple_at(triples, pos);
    t.state.apply_local(bit ? hx.matrix : h.matrix, kQubitA);
    ones += static_cast<std::size_t>(bit);
  }
  transcript.append("Alice", "encode",
                    "qubits=" + std::to_string(bits.size()) + " gates=H:" +
                        std::to_string(bits.size() - ones) + ",HX:" + std::to_string(ones) +
                        " check=" + std::to_string(plan.check_positions.size()) +
                        " message=" + std::to_string(plan.message_positions.size()));

  const Channel channel = variant == ProtocolVariant::Qdc1 ? Channel::AliceToBob : Channel::AliceToTrent;
  for (const auto& [pos, bit] : bits) {
    auto& t = triple_at(triples, pos);
    if (tap) tap->on_transit(channel, Phase::Message, pos, t.state, kQubitA);
  }
  transcript.append("Alice", "transmit",
                    "channel=" + std::string(to_string(channel)) + " qubits=" + std::to_string(bits.size()));
}

}  // namespace

std::string describe(const MeasurementOrder& order, ProtocolVariant variant) {
  std::string out;
  for (auto a : order) {
    if (!out.empty()) out += ">";
    switch (a) {
      case MessageActor::BellMeasurer: out += std::string(bell_actor(variant)) + ":bell"; break;
      case MessageActor::XMeasurer: out += std::string(x_actor(variant)) + ":x"; break;
      case MessageActor::Eve: out += "Eve"; break;
    }
  }
  return out;
}

std::size_t SessionConfig::message_check_count() const {
  const auto surviving = static_cast<double>(surviving_after_auth());
  return static_cast<std::size_t>(std::ceil(check_fraction_msg * surviving - 1e-9));
}

void SessionConfig::validate(std::size_t message_bits) const {
  if (n_ghz < 2) throw ConfigError("n_ghz must be at least 2");
  if (m_auth_check < 1 || m_auth_check >= n_ghz) {
    throw ConfigError("auth check count must satisfy 1 <= m < n_ghz");
  }
  for (double t : {error_threshold_auth, error_threshold_msg}) {
    if (!(t >= 0.0 && t <= 1.0)) throw ConfigError("error thresholds must lie in [0, 1]");
  }
  if (!(check_fraction_msg >= 0.0 && check_fraction_msg < 1.0)) {
    throw ConfigError("message check fraction must lie in [0, 1)");
  }
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ConfigError("measurement order must be a permutation of the three actors");
    }
  }
  if (bob_measures_first && variant != ProtocolVariant::Qdc2) {
    throw ConfigError("early Bob measurement only applies to qdc2");
  }
  const std::size_t needed = ecc::framed_length(codec, message_bits);
  const std::size_t available = surviving_after_auth() - message_check_count();
  if (available < needed) {
    throw ConfigError("not enough GHZ triples: message frame needs " + std::to_string(needed) +
                      " positions, " + std::to_string(available) + " remain after checks (n_ghz >= " +
                      std::to_string(required_ghz(*this, message_bits)) + " required)");
  }
}

std::size_t required_ghz(const SessionConfig& config, std::size_t message_bits) {
  const std::size_t frame = ecc::framed_length(config.codec, message_bits);
  SessionConfig probe = config;
  probe.n_ghz = config.m_auth_check + frame;
  while (probe.surviving_after_auth() - probe.message_check_count() < frame) ++probe.n_ghz;
  return probe.n_ghz;
}

AuthOutcome auth_phase(const SessionConfig& config, const KeyMaterial& keys, ChannelTap* tap,
                       Rng& rng, SessionTranscript& transcript) {
  const std::size_t n = config.n_ghz;
  if (config.m_auth_check < 1 || config.m_auth_check >= n) {
    throw ConfigError("auth check count must satisfy 1 <= m < n_ghz");
  }
  for (const AuthKey* k : {&keys.trent_a, &keys.trent_b, &keys.alice, &keys.bob}) {
    if (k->size() < n) {
      throw ProtocolError("authentication key covers " + std::to_string(k->size()) + " bits, " +
                          std::to_string(n) + " needed");
    }
  }

  std::vector<GhzTriple> triples;
  triples.reserve(n);
  for (std::size_t i = 0; i < n; ++i) triples.push_back({i, new_ghz3()});
  transcript.append("Trent", "prepare", "count=" + std::to_string(n) + " state=ghz3");

  auto encode_with = [&](std::string_view actor, const AuthKey& key, int qubit, std::string_view verb,
                         std::string_view party) {
    std::size_t hadamards = 0;
    for (auto& t : triples) {
      const int bit = key[t.position];
      t.state.apply_local(unitary_for_key_bit(bit).matrix, qubit);
      hadamards += static_cast<std::size_t>(bit);
    }
    const auto first = key.provenance.empty() ? 0 : key.provenance.front().counter;
    transcript.append(std::string(actor), std::string(verb),
                      "party=" + std::string(party) + " gates=I:" + std::to_string(n - hadamards) +
                          ",H:" + std::to_string(hadamards) + " counters=" + std::to_string(first) +
                          ".." + std::to_string(key.next_counter()));
  };

  encode_with("Trent", keys.trent_a, kQubitA, "encode", "Alice");
  encode_with("Trent", keys.trent_b, kQubitB, "encode", "Bob");

  for (auto [channel, qubit] : {std::pair{Channel::TrentToAlice, kQubitA}, std::pair{Channel::TrentToBob, kQubitB}}) {
    if (tap) {
      for (auto& t : triples) tap->on_transit(channel, Phase::Auth, t.position, t.state, qubit);
    }
    transcript.append("Trent", "transmit",
                      "channel=" + std::string(to_string(channel)) + " qubits=" + std::to_string(n));
  }

  encode_with("Alice", keys.alice, kQubitA, "decode", "Alice");
  encode_with("Bob", keys.bob, kQubitB, "decode", "Bob");

  std::vector<std::size_t> all(n);
  std::iota(all.begin(), all.end(), std::size_t{0});
  const auto check_positions = sample_without_replacement(all, config.m_auth_check, rng);
  transcript.append("Alice", "announce_auth_check_positions", "positions=" + join_indices(check_positions));

  AuthOutcome out{};
  std::vector<bool> is_check(n, false);
  for (std::size_t pos : check_positions) {
    is_check[pos] = true;
    auto& t = triples[pos];
    AuthCheck check{pos, {}, keys.trent_a[pos], keys.trent_b[pos]};
    // Alice, Trent, Bob each measure their own qubit.
    for (int q : {kQubitA, kQubitT, kQubitB}) {
      auto m = measure_z(t.state, q, rng);
      check.outcomes[static_cast<std::size_t>(q)] = to_bit(m.outcome);
      t.state = std::move(m.state);
    }
    if (tap) tap->on_measure_turn(Phase::Auth, pos, t.state);
    out.errors += check.error() ? 1 : 0;
    out.checks.push_back(check);
  }
  for (auto [actor, q] : {std::pair{"Alice", kQubitA}, std::pair{"Trent", kQubitT}, std::pair{"Bob", kQubitB}}) {
    transcript.append(actor, "announce_z_outcomes",
                      "positions=" + join_indices(check_positions) + " values=" +
                          join_mapped(out.checks, [q = q](const AuthCheck& c) {
                            return std::to_string(c.outcomes[static_cast<std::size_t>(q)]);
                          }));
  }

  out.error_rate = static_cast<double>(out.errors) / static_cast<double>(check_positions.size());
  out.verdict = out.error_rate > config.error_threshold_auth ? Verdict::AuthAborted : Verdict::Authenticated;
  transcript.record_verdict(out.verdict, "error_rate=" + format_rate(out.error_rate) +
                                             " errors=" + std::to_string(out.errors) +
                                             " checks=" + std::to_string(check_positions.size()) +
                                             " threshold=" + format_rate(config.error_threshold_auth));

  for (auto& t : triples) {
    if (!is_check[t.position]) out.surviving.push_back(std::move(t));
  }
  return out;
}

MessagePlan plan_message(const SessionConfig& config, const std::vector<GhzTriple>& surviving,
                         const Bits& frame, Rng& rng) {
  std::vector<std::size_t> pool;
  pool.reserve(surviving.size());
  for (const auto& t : surviving) pool.push_back(t.position);

  const auto n_check = static_cast<std::size_t>(
      std::ceil(config.check_fraction_msg * static_cast<double>(pool.size()) - 1e-9));
  if (n_check + frame.size() > pool.size()) {
    throw ProtocolError("capacity exceeded: " + std::to_string(frame.size()) + " message bits and " +
                        std::to_string(n_check) + " check bits exceed " + std::to_string(pool.size()) +
                        " surviving triples");
  }

  MessagePlan plan;
  plan.check_positions = sample_without_replacement(pool, n_check, rng);
  plan.check_bits.resize(n_check);
  for (auto& b : plan.check_bits) b = static_cast<std::uint8_t>(rng() & 1U);

  std::size_t c = 0;
  for (std::size_t pos : pool) {
    if (plan.message_positions.size() == frame.size()) break;
    if (c < plan.check_positions.size() && plan.check_positions[c] == pos) {
      ++c;
      continue;
    }
    plan.message_positions.push_back(pos);
  }
  plan.frame = frame;
  return plan;
}

void qdc1_encode_and_send(std::vector<GhzTriple>& triples, const MessagePlan& plan, ChannelTap* tap,
                          SessionTranscript& transcript) {
  encode_and_send(ProtocolVariant::Qdc1, triples, plan, tap, transcript);
}

void qdc2_encode_and_send(std::vector<GhzTriple>& triples, const MessagePlan& plan, ChannelTap* tap,
                          SessionTranscript& transcript) {
  encode_and_send(ProtocolVariant::Qdc2, triples, plan, tap, transcript);
}

namespace {

int bell_class(BellOutcome b) {
  return (b == BellOutcome::PhiPlus || b == BellOutcome::PsiMinus) ? 0 : 1;
}

}  // namespace

int qdc1_decode(BellOutcome bell, XOutcome trent_x) { return 1 ^ bell_class(bell) ^ to_bit(trent_x); }

int trent_publish(BellOutcome bell) { return bell_class(bell); }

int qdc2_decode(int trent_bit, XOutcome bob_x) {
  if (trent_bit != 0 && trent_bit != 1) throw std::invalid_argument("Trent's bit must be 0 or 1");
  return 1 ^ trent_bit ^ to_bit(bob_x);
}

std::map<std::size_t, XOutcome> bob_measure_early(std::vector<GhzTriple>& triples,
                                                  const MessagePlan& plan, Rng& rng,
                                                  SessionTranscript& transcript) {
  std::map<std::size_t, XOutcome> out;
  for (const auto& [pos, bit] : planned_bits(plan)) {
    auto& t = triple_at(triples, pos);
    auto m = measure_x(t.state, kQubitB, rng);
    t.state = std::move(m.state);
    out.emplace(pos, m.outcome);
  }
  transcript.append("Bob", "measure", "basis=x qubit=B qubits=" + std::to_string(out.size()) +
                                          " timing=before_encoding");
  return out;
}

std::vector<PositionReadout> receive_and_decode(const SessionConfig& config,
                                                std::vector<GhzTriple>& triples,
                                                const MessagePlan& plan, ChannelTap* tap, Rng& rng,
                                                SessionTranscript& transcript,
                                                const std::map<std::size_t, XOutcome>& pre_measured) {
  const bool qdc1 = config.variant == ProtocolVariant::Qdc1;
  const int bell_partner = qdc1 ? kQubitB : kQubitT;
  const int x_qubit = qdc1 ? kQubitT : kQubitB;
  const auto bits = planned_bits(plan);

  std::vector<PositionReadout> readouts;
  readouts.reserve(bits.size());
  for (const auto& [pos, bit] : bits) {
    auto& t = triple_at(triples, pos);
    PositionReadout r{pos, BellOutcome::PhiPlus, XOutcome::Plus, -1, 0};
    for (MessageActor actor : config.order) {
      switch (actor) {
        case MessageActor::BellMeasurer: {
          auto m = measure_bell(t.state, kQubitA, bell_partner, rng);
          r.bell = m.outcome;
          t.state = std::move(m.state);
          break;
        }
        case MessageActor::XMeasurer: {
          if (auto it = pre_measured.find(pos); it != pre_measured.end()) {
            r.x = it->second;
            break;
          }
          auto m = measure_x(t.state, x_qubit, rng);
          r.x = m.outcome;
          t.state = std::move(m.state);
          break;
        }
        case MessageActor::Eve:
          if (tap) tap->on_measure_turn(Phase::Message, pos, t.state);
          break;
      }
    }
    readouts.push_back(r);
  }

  const std::string count = std::to_string(readouts.size());
  for (MessageActor actor : config.order) {
    if (actor == MessageActor::BellMeasurer) {
      transcript.append(std::string(bell_actor(config.variant)), "measure",
                        std::string("basis=bell pair=A,") + (qdc1 ? "B" : "T") + " qubits=" + count);
    } else if (actor == MessageActor::XMeasurer && pre_measured.empty()) {
      transcript.append(std::string(x_actor(config.variant)), "measure",
                        std::string("basis=x qubit=") + (qdc1 ? "T" : "B") + " qubits=" + count);
    }
  }

  std::vector<std::size_t> positions;
  positions.reserve(readouts.size());
  for (const auto& r : readouts) positions.push_back(r.position);
  if (qdc1) {
    transcript.append("Trent", "announce_x_outcomes",
                      "positions=" + join_indices(positions) + " values=" +
                          join_mapped(readouts, [](const PositionReadout& r) { return std::string(to_string(r.x)); }));
    for (auto& r : readouts) r.decoded = qdc1_decode(r.bell, r.x);
  } else {
    for (auto& r : readouts) {
      r.trent_bit = trent_publish(r.bell);
      r.decoded = qdc2_decode(r.trent_bit, r.x);
    }
    transcript.append("Trent", "announce_trent_bits",
                      "positions=" + join_indices(positions) + " values=" +
                          join_mapped(readouts, [](const PositionReadout& r) { return std::to_string(r.trent_bit); }));
  }
  transcript.append("Bob", "decode", "qubits=" + count);
  transcript.append("Bob", "announce_received", "qubits=" + count);
  return readouts;
}

DeliveryOutcome message_check_and_deliver(const std::vector<PositionReadout>& readouts,
                                          const MessagePlan& plan, double threshold,
                                          const ecc::Codec& codec, SessionTranscript& transcript) {
  std::map<std::size_t, int> decoded;
  for (const auto& r : readouts) decoded.emplace(r.position, r.decoded);
  auto decoded_at = [&](std::size_t pos) {
    const auto it = decoded.find(pos);
    if (it == decoded.end()) throw ProtocolError("no decoded bit at position " + std::to_string(pos));
    return it->second;
  };
  for (std::size_t pos : plan.check_positions) {
    if (std::binary_search(plan.message_positions.begin(), plan.message_positions.end(), pos)) {
      throw ProtocolError("check and message positions overlap");
    }
  }

  transcript.append("Alice", "announce_check_positions", "positions=" + join_indices(plan.check_positions));
  transcript.append("Alice", "announce_check_values", "values=" + bits_csv(plan.check_bits));

  DeliveryOutcome out{};
  for (std::size_t i = 0; i < plan.check_positions.size(); ++i) {
    out.check_errors += decoded_at(plan.check_positions[i]) != plan.check_bits[i] ? 1 : 0;
  }
  out.check_error_rate = plan.check_positions.empty()
                             ? 0.0
                             : static_cast<double>(out.check_errors) /
                                   static_cast<double>(plan.check_positions.size());
  transcript.append("Bob", "announce_check_result",
                    "errors=" + std::to_string(out.check_errors) + " checks=" +
                        std::to_string(plan.check_positions.size()) + " error_rate=" +
                        format_rate(out.check_error_rate));

  if (out.check_error_rate > threshold) {
    out.verdict = Verdict::MessageDiscarded;
    out.diagnostic = "check error rate above threshold";
    transcript.record_verdict(out.verdict, "reason=check_error_rate error_rate=" +
                                               format_rate(out.check_error_rate) +
                                               " threshold=" + format_rate(threshold));
    return out;
  }

  Bits received;
  received.reserve(plan.message_positions.size());
  for (std::size_t pos : plan.message_positions) {
    received.push_back(static_cast<std::uint8_t>(decoded_at(pos)));
  }
  try {
    auto result = ecc::decode(codec, received);
    out.corrected_errors = result.corrected_errors;
    out.message = std::move(result.data);
  } catch (const ecc::FrameError& e) {
    out.verdict = Verdict::MessageDiscarded;
    out.diagnostic = e.what();
    transcript.record_verdict(out.verdict, "reason=frame_error codec=" + codec.name());
    return out;
  }
  out.verdict = Verdict::MessageDelivered;
  transcript.record_verdict(out.verdict, "bits=" + std::to_string(out.message->size()) + " codec=" +
                                             codec.name() + " corrected=" +
                                             std::to_string(out.corrected_errors));
  return out;
}

void CounterLedger::claim(Party party, std::uint64_t first, std::size_t count) {
  auto& next = next_[static_cast<std::size_t>(party)];
  if (first < next) {
    throw CounterReplayError(std::string(to_string(party)) + " counter " + std::to_string(first) +
                             " was already consumed");
  }
  next = first + count;
}

std::uint64_t CounterLedger::next(Party party) const { return next_[static_cast<std::size_t>(party)]; }

Participants Participants::standard() {
  return Participants{UserIdentity(parse_bits("0xa11ce0c0ffee2006"), Party::Alice),
                      UserIdentity(parse_bits("0xb0b0deadbeef2006"), Party::Bob),
                      std::make_shared<Sha256CounterHash>(kDefaultHashOutputBits, "alice"),
                      std::make_shared<Sha256CounterHash>(kDefaultHashOutputBits, "bob")};
}

namespace {

SessionResult run_with_keys(const SessionConfig& config, const KeyMaterial& keys, const Bits& message,
                            ChannelTap* tap, SessionTranscript transcript) {
  config.validate(message.size());
  Rng rng(config.rng_seed);
  SessionResult result{};
  result.sent = message;

  auto auth = auth_phase(config, keys, tap, rng, transcript);
  result.auth_error_rate = auth.error_rate;
  result.auth_checks = auth.checks;
  if (auth.verdict == Verdict::AuthAborted) {
    result.verdict = auth.verdict;
    result.transcript = std::move(transcript);
    return result;
  }

  result.frame = ecc::encode(config.codec, message);
  const MessagePlan plan = plan_message(config, auth.surviving, result.frame, rng);

  std::map<std::size_t, XOutcome> early;
  if (config.bob_measures_first) early = bob_measure_early(auth.surviving, plan, rng, transcript);
  if (config.variant == ProtocolVariant::Qdc1) {
    qdc1_encode_and_send(auth.surviving, plan, tap, transcript);
  } else {
    qdc2_encode_and_send(auth.surviving, plan, tap, transcript);
  }
  const auto readouts = receive_and_decode(config, auth.surviving, plan, tap, rng, transcript, early);
  auto delivery = message_check_and_deliver(readouts, plan, config.error_threshold_msg, config.codec,
                                            transcript);

  std::map<std::size_t, int> decoded;
  for (const auto& r : readouts) decoded.emplace(r.position, r.decoded);
  for (std::size_t i = 0; i < plan.check_positions.size(); ++i) {
    const auto pos = plan.check_positions[i];
    result.message_records.push_back({pos, plan.check_bits[i], true, decoded.at(pos)});
  }
  for (std::size_t i = 0; i < plan.message_positions.size(); ++i) {
    const auto pos = plan.message_positions[i];
    result.message_records.push_back({pos, plan.frame[i], false, decoded.at(pos)});
  }
  std::sort(result.message_records.begin(), result.message_records.end(),
            [](const MessageRecord& a, const MessageRecord& b) { return a.position < b.position; });

  result.verdict = delivery.verdict;
  result.msg_check_error_rate = delivery.check_error_rate;
  result.msg_check_errors = delivery.check_errors;
  result.msg_check_count = plan.check_positions.size();
  result.delivered = std::move(delivery.message);
  result.corrected_errors = delivery.corrected_errors;
  result.diagnostic = std::move(delivery.diagnostic);
  result.transcript = std::move(transcript);
  return result;
}

SessionTranscript opening(const SessionConfig& config) {
  SessionTranscript t;
  t.append("Alice", "request", "to=Bob via=Trent variant=" + std::string(to_string(config.variant)));
  return t;
}

}  // namespace

SessionResult run_session(const SessionConfig& config, const Participants& parties,
                          const Bits& message, ChannelTap* tap, const SessionCounters& counters,
                          CounterLedger* ledger) {
  config.validate(message.size());
  const std::size_t n = config.n_ghz;
  if (ledger) {
    ledger->claim(Party::Alice, counters.alice.value, blocks_needed(*parties.alice_hash, n));
    ledger->claim(Party::Bob, counters.bob.value, blocks_needed(*parties.bob_hash, n));
  }
  // Trent and each user derive the same key independently from the
  // registered identity, hash and counter.
  KeyMaterial keys{derive_key(parties.alice, *parties.alice_hash, counters.alice, n),
                   derive_key(parties.bob, *parties.bob_hash, counters.bob, n),
                   derive_key(parties.alice, *parties.alice_hash, counters.alice, n),
                   derive_key(parties.bob, *parties.bob_hash, counters.bob, n)};
  return run_with_keys(config, keys, message, tap, opening(config));
}

SessionResult run_session_with_keys(const SessionConfig& config, const KeyMaterial& keys,
                                    const Bits& message, ChannelTap* tap) {
  return run_with_keys(config, keys, message, tap, opening(config));
}

}  // namespace ghzqdc
