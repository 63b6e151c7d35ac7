// Authentication keys h(ID, c) and the I/H encodings they drive.
#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghzqdc/bits.hpp"
#include "ghzqdc/statevector.hpp"

namespace ghzqdc {

enum class Party : std::uint8_t { Alice, Bob };

inline const char* to_string(Party p) { return p == Party::Alice ? "Alice" : "Bob"; }

struct UserIdentity {
  Bits id_bits;
  Party role;

  UserIdentity(Bits bits, Party who) : id_bits(std::move(bits)), role(who) {
    if (id_bits.empty()) throw std::invalid_argument("identity bit string must be non-empty");
  }
};

inline constexpr int kDefaultCounterWidth = 32;
inline constexpr int kDefaultHashOutputBits = 128;

class CounterOverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

struct Counter {
  std::uint64_t value = 0;
  int width = kDefaultCounterWidth;

  std::uint64_t max_value() const {
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
  }
  void validate() const {
    if (width < 1 || width > 64) throw std::invalid_argument("counter width must be in [1, 64]");
    if (value > max_value()) throw CounterOverflowError("counter exceeds 2^c - 1");
  }
  Bits to_bits() const { return bits_of(value, width); }
};

// h : {0,1}^* x {0,1}^c -> {0,1}^l. Implementations must be deterministic
// and always return exactly output_bits() bits.
class HashContract {
 public:
  virtual ~HashContract() = default;
  virtual int output_bits() const = 0;
  virtual Bits evaluate(const Bits& id_bits, const Counter& counter) const = 0;
  virtual std::string name() const = 0;
};

// SHA-256 in counter mode. `domain` separates per-user hash functions
// (h_A vs h_B) that share the same construction.
class Sha256CounterHash final : public HashContract {
 public:
  explicit Sha256CounterHash(int output_bits = kDefaultHashOutputBits, std::string domain = {});
  int output_bits() const override { return output_bits_; }
  Bits evaluate(const Bits& id_bits, const Counter& counter) const override;
  std::string name() const override { return "sha256-ctr"; }

 private:
  int output_bits_;
  std::string domain_;
};

// Test stub: bit j of h(ID, c) is ID[(c + j) mod |ID|].
class PatternStubHash final : public HashContract {
 public:
  explicit PatternStubHash(int output_bits) : output_bits_(output_bits) {
    if (output_bits < 1) throw std::invalid_argument("output_bits must be positive");
  }
  int output_bits() const override { return output_bits_; }
  Bits evaluate(const Bits& id_bits, const Counter& counter) const override;
  std::string name() const override { return "pattern-stub"; }

 private:
  int output_bits_;
};

struct KeySegment {
  std::uint64_t counter;
  std::size_t offset;
  std::size_t length;
};

struct AuthKey {
  Bits bits;
  std::vector<KeySegment> provenance;

  std::size_t size() const { return bits.size(); }
  std::uint8_t operator[](std::size_t i) const { return bits[i]; }
  // First counter value not consumed by this key.
  std::uint64_t next_counter() const {
    return provenance.empty() ? 0 : provenance.back().counter + 1;
  }
};

// Concatenates h(ID, c), h(ID, c+1), ... until at least `needed` bits exist.
AuthKey derive_key(const UserIdentity& identity, const HashContract& h, Counter start,
                   std::size_t needed);

// Number of hash calls derive_key makes for `needed` bits.
std::size_t blocks_needed(const HashContract& h, std::size_t needed);

// 0 -> I, 1 -> H.
Gate1Q unitary_for_key_bit(int bit);

}  // namespace ghzqdc
