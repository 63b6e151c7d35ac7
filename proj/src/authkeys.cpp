#include "ghzqdc/authkeys.hpp"

#include <openssl/evp.h>

#include <array>

namespace ghzqdc {

namespace {

void append_u64(std::vector<unsigned char>& out, std::uint64_t v) {
  for (int i = 7; i >= 0; --i) out.push_back(static_cast<unsigned char>((v >> (8 * i)) & 0xFF));
}

std::array<unsigned char, 32> sha256(const std::vector<unsigned char>& message) {
  std::array<unsigned char, 32> digest{};
  unsigned int len = 0;
  if (EVP_Digest(message.data(), message.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1 ||
      len != digest.size()) {
    throw std::runtime_error("SHA-256 evaluation failed");
  }
  return digest;
}

}  // namespace

Sha256CounterHash::Sha256CounterHash(int output_bits, std::string domain)
    : output_bits_(output_bits), domain_(std::move(domain)) {
  if (output_bits < 1) throw std::invalid_argument("output_bits must be positive");
}

Bits Sha256CounterHash::evaluate(const Bits& id_bits, const Counter& counter) const {
  counter.validate();
  // Message: domain | 0x00 | |ID| | packed ID bits | c | width | block.
  std::vector<unsigned char> prefix(domain_.begin(), domain_.end());
  prefix.push_back(0);
  append_u64(prefix, id_bits.size());
  unsigned char acc = 0;
  for (std::size_t i = 0; i < id_bits.size(); ++i) {
    acc = static_cast<unsigned char>((acc << 1) | (id_bits[i] & 1U));
    if (i % 8 == 7) {
      prefix.push_back(acc);
      acc = 0;
    }
  }
  if (id_bits.size() % 8 != 0) {
    prefix.push_back(static_cast<unsigned char>(acc << (8 - id_bits.size() % 8)));
  }
  append_u64(prefix, counter.value);
  prefix.push_back(static_cast<unsigned char>(counter.width));

  Bits out;
  out.reserve(static_cast<std::size_t>(output_bits_));
  for (std::uint32_t block = 0; out.size() < static_cast<std::size_t>(output_bits_); ++block) {
    std::vector<unsigned char> message = prefix;
    for (int i = 3; i >= 0; --i) message.push_back(static_cast<unsigned char>((block >> (8 * i)) & 0xFF));
    const auto digest = sha256(message);
    for (unsigned char byte : digest) {
      for (int b = 7; b >= 0 && out.size() < static_cast<std::size_t>(output_bits_); --b) {
        out.push_back(static_cast<std::uint8_t>((byte >> b) & 1U));
      }
    }
  }
  return out;
}

Bits PatternStubHash::evaluate(const Bits& id_bits, const Counter& counter) const {
  counter.validate();
  if (id_bits.empty()) throw std::invalid_argument("identity must be non-empty");
  Bits out(static_cast<std::size_t>(output_bits_));
  const std::size_t n = id_bits.size();
  const std::size_t shift = static_cast<std::size_t>(counter.value % n);
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = id_bits[(shift + j) % n];
  return out;
}

std::size_t blocks_needed(const HashContract& h, std::size_t needed) {
  const auto l = static_cast<std::size_t>(h.output_bits());
  return (needed + l - 1) / l;
}

AuthKey derive_key(const UserIdentity& identity, const HashContract& h, Counter start,
                   std::size_t needed) {
  if (needed < 1) throw std::invalid_argument("derive_key: needed must be >= 1");
  start.validate();
  const std::size_t blocks = blocks_needed(h, needed);
  const std::uint64_t room = start.max_value() - start.value;
  if (blocks - 1 > room) {
    throw CounterOverflowError("authentication key would need counter past 2^c - 1");
  }

  AuthKey key;
  for (std::size_t b = 0; b < blocks; ++b) {
    const Counter c{start.value + b, start.width};
    Bits segment = h.evaluate(identity.id_bits, c);
    if (segment.size() != static_cast<std::size_t>(h.output_bits())) {
      throw std::logic_error("hash returned " + std::to_string(segment.size()) + " bits, expected " +
                             std::to_string(h.output_bits()));
    }
    key.provenance.push_back({c.value, key.bits.size(), segment.size()});
    key.bits.insert(key.bits.end(), segment.begin(), segment.end());
  }
  return key;
}

Gate1Q unitary_for_key_bit(int bit) {
  if (bit == 0) return make_gate(GateName::I);
  if (bit == 1) return make_gate(GateName::H);
  throw std::invalid_argument("key bit must be 0 or 1");
}

}  // namespace ghzqdc
