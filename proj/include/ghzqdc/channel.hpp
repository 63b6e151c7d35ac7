// Quantum channel hook points shared by the protocol and the adversary.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "ghzqdc/statevector.hpp"

namespace ghzqdc {

enum class Channel : std::uint8_t { TrentToAlice, TrentToBob, AliceToBob, AliceToTrent };
enum class Phase : std::uint8_t { Auth, Message };

inline constexpr Channel kAllChannels[] = {Channel::TrentToAlice, Channel::TrentToBob,
                                           Channel::AliceToBob, Channel::AliceToTrent};

constexpr std::string_view to_string(Channel c) {
  switch (c) {
    case Channel::TrentToAlice: return "trent-alice";
    case Channel::TrentToBob: return "trent-bob";
    case Channel::AliceToBob: return "alice-bob";
    case Channel::AliceToTrent: return "alice-trent";
  }
  return "?";
}

constexpr std::optional<Channel> parse_channel(std::string_view s) {
  for (Channel c : kAllChannels) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

constexpr std::string_view to_string(Phase p) { return p == Phase::Auth ? "auth" : "message"; }

// Transit hooks. The protocol calls on_transit for every qubit it sends and
// gives the tap one measurement turn per position after the honest parties
// are done with the qubits they hold.
class ChannelTap {
 public:
  virtual ~ChannelTap() = default;
  // Returns true if the qubit was touched.
  virtual bool on_transit(Channel channel, Phase phase, std::size_t position, PureState& state,
                          int qubit) = 0;
  virtual void on_measure_turn(Phase phase, std::size_t position, PureState& state) = 0;
};

}  // namespace ghzqdc
