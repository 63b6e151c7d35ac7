// Three-party state machines: authentication, then message transfer by
// either direct-communication variant.
//
// Each GHZ triple is simulated as its own register with qubits (A, T, B)
// at indices 0, 1, 2; eavesdropper ancillas are appended after them.
// Sending a qubit is a hand-off of ownership plus a ChannelTap call.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghzqdc/authkeys.hpp"
#include "ghzqdc/bits.hpp"
#include "ghzqdc/channel.hpp"
#include "ghzqdc/ecc.hpp"
#include "ghzqdc/random.hpp"
#include "ghzqdc/statevector.hpp"
#include "ghzqdc/transcript.hpp"

namespace ghzqdc {

inline constexpr int kQubitA = 0;
inline constexpr int kQubitT = 1;
inline constexpr int kQubitB = 2;

enum class ProtocolVariant : std::uint8_t { Qdc1, Qdc2 };

std::string_view to_string(ProtocolVariant v);
std::optional<ProtocolVariant> parse_protocol_variant(std::string_view s);

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CounterReplayError : public ProtocolError {
 public:
  using ProtocolError::ProtocolError;
};

// Who measures in the message phase. BellMeasurer is Bob in QDC1 and Trent
// in QDC2; XMeasurer is the other of the two.
enum class MessageActor : std::uint8_t { BellMeasurer, XMeasurer, Eve };
using MeasurementOrder = std::array<MessageActor, 3>;

inline constexpr MeasurementOrder kDefaultOrder{MessageActor::BellMeasurer,
                                                MessageActor::XMeasurer, MessageActor::Eve};

// All six permutations, default order first.
std::array<MeasurementOrder, 6> all_measurement_orders();
std::string describe(const MeasurementOrder& order, ProtocolVariant variant);

struct SessionConfig {
  std::size_t n_ghz = 256;
  std::size_t m_auth_check = 32;
  double check_fraction_msg = 0.25;
  double error_threshold_auth = 0.0;
  double error_threshold_msg = 0.0;
  ecc::Codec codec = ecc::Codec::none();
  ProtocolVariant variant = ProtocolVariant::Qdc1;
  std::uint64_t rng_seed = 1;
  MeasurementOrder order = kDefaultOrder;
  // QDC2 only: Bob measures his qubits before Alice encodes.
  bool bob_measures_first = false;

  // Throws ConfigError.
  void validate(std::size_t message_bits) const;
  std::size_t surviving_after_auth() const { return n_ghz - m_auth_check; }
  std::size_t message_check_count() const;
};

// Smallest n_ghz that fits `message_bits` under `config`'s other settings.
std::size_t required_ghz(const SessionConfig& config, std::size_t message_bits);

struct GhzTriple {
  std::size_t position;
  PureState state;
};

// Key bits each party uses. Trent holds copies of both users' keys; in an
// honest deployment trent_a == alice and trent_b == bob.
struct KeyMaterial {
  AuthKey trent_a;
  AuthKey trent_b;
  AuthKey alice;
  AuthKey bob;

  static KeyMaterial shared(AuthKey a, AuthKey b) { return {a, b, a, b}; }
};

struct AuthCheck {
  std::size_t position;
  std::array<int, 3> outcomes;  // A, T, B
  int key_bit_a;
  int key_bit_b;
  bool error() const { return !(outcomes[0] == outcomes[1] && outcomes[1] == outcomes[2]); }
};

struct AuthOutcome {
  Verdict verdict = Verdict::AuthAborted;
  double error_rate;
  std::size_t errors;
  std::vector<AuthCheck> checks;
  std::vector<GhzTriple> surviving;
};

AuthOutcome auth_phase(const SessionConfig& config, const KeyMaterial& keys, ChannelTap* tap,
                       Rng& rng, SessionTranscript& transcript);

// Alice's secret layout of the message phase.
struct MessagePlan {
  std::vector<std::size_t> check_positions;  // sorted
  Bits check_bits;                           // aligned with check_positions
  std::vector<std::size_t> message_positions;
  Bits frame;                                // aligned with message_positions
};

MessagePlan plan_message(const SessionConfig& config, const std::vector<GhzTriple>& surviving,
                         const Bits& frame, Rng& rng);

// Applies H (bit 0) or H.X (bit 1) to Alice's qubit at every planned
// position, then sends it to Bob (QDC1) or Trent (QDC2).
void qdc1_encode_and_send(std::vector<GhzTriple>& triples, const MessagePlan& plan,
                          ChannelTap* tap, SessionTranscript& transcript);
void qdc2_encode_and_send(std::vector<GhzTriple>& triples, const MessagePlan& plan,
                          ChannelTap* tap, SessionTranscript& transcript);

int qdc1_decode(BellOutcome bell, XOutcome trent_x);
int trent_publish(BellOutcome bell);
int qdc2_decode(int trent_bit, XOutcome bob_x);

struct PositionReadout {
  std::size_t position;
  BellOutcome bell;
  XOutcome x;
  int trent_bit;  // QDC2 only, -1 otherwise
  int decoded;
};

// Runs the measurements of one variant in `order`, the public announcements
// that follow, and Bob's decoding. `pre_measured` carries Bob's early x
// outcomes (QDC2 with bob_measures_first).
std::vector<PositionReadout> receive_and_decode(
    const SessionConfig& config, std::vector<GhzTriple>& triples, const MessagePlan& plan,
    ChannelTap* tap, Rng& rng, SessionTranscript& transcript,
    const std::map<std::size_t, XOutcome>& pre_measured = {});

// Bob's early x measurements for QDC2; call before encoding.
std::map<std::size_t, XOutcome> bob_measure_early(std::vector<GhzTriple>& triples,
                                                  const MessagePlan& plan, Rng& rng,
                                                  SessionTranscript& transcript);

struct DeliveryOutcome {
  Verdict verdict = Verdict::AuthAborted;
  double check_error_rate;
  std::size_t check_errors;
  std::optional<Bits> message;
  std::size_t corrected_errors = 0;
  std::string diagnostic;
};

DeliveryOutcome message_check_and_deliver(const std::vector<PositionReadout>& readouts,
                                          const MessagePlan& plan, double threshold,
                                          const ecc::Codec& codec, SessionTranscript& transcript);

// Tracks counters consumed per user; reusing one is an error.
class CounterLedger {
 public:
  void claim(Party party, std::uint64_t first, std::size_t count);
  std::uint64_t next(Party party) const;

 private:
  std::array<std::uint64_t, 2> next_{0, 0};
};

struct Participants {
  UserIdentity alice;
  UserIdentity bob;
  std::shared_ptr<const HashContract> alice_hash;
  std::shared_ptr<const HashContract> bob_hash;

  // Fixed demo identities with domain-separated SHA-256 hashes.
  static Participants standard();
};

struct SessionCounters {
  Counter alice{};
  Counter bob{};
};

struct MessageRecord {
  std::size_t position;
  int bit;
  bool is_check;
  int decoded;
};

struct SessionResult {
  Verdict verdict = Verdict::AuthAborted;
  double auth_error_rate = 0.0;
  std::vector<AuthCheck> auth_checks;
  std::vector<MessageRecord> message_records;
  double msg_check_error_rate = 0.0;
  std::size_t msg_check_errors = 0;
  std::size_t msg_check_count = 0;
  Bits sent;
  Bits frame;
  std::optional<Bits> delivered;
  std::size_t corrected_errors = 0;
  std::string diagnostic;
  SessionTranscript transcript;
};

SessionResult run_session(const SessionConfig& config, const Participants& parties,
                          const Bits& message, ChannelTap* tap,
                          const SessionCounters& counters = {}, CounterLedger* ledger = nullptr);

// Session with keys supplied directly (skips derivation).
SessionResult run_session_with_keys(const SessionConfig& config, const KeyMaterial& keys,
                                    const Bits& message, ChannelTap* tap);

}  // namespace ghzqdc
