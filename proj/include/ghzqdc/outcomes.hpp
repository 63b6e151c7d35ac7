#pragma once

#include <array>
#include <cstdint>
#include <string_view>

namespace ghzqdc {

enum class ZOutcome : std::uint8_t { Zero = 0, One = 1 };
enum class XOutcome : std::uint8_t { Plus = 0, Minus = 1 };
enum class BellOutcome : std::uint8_t { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

inline constexpr std::array<BellOutcome, 4> kBellOutcomes{
    BellOutcome::PhiPlus, BellOutcome::PhiMinus, BellOutcome::PsiPlus, BellOutcome::PsiMinus};
inline constexpr std::array<XOutcome, 2> kXOutcomes{XOutcome::Plus, XOutcome::Minus};
inline constexpr std::array<ZOutcome, 2> kZOutcomes{ZOutcome::Zero, ZOutcome::One};

constexpr int to_bit(ZOutcome z) { return z == ZOutcome::One ? 1 : 0; }
constexpr int to_bit(XOutcome x) { return x == XOutcome::Minus ? 1 : 0; }

constexpr std::string_view to_string(ZOutcome z) { return z == ZOutcome::One ? "1" : "0"; }
constexpr std::string_view to_string(XOutcome x) { return x == XOutcome::Plus ? "+" : "-"; }
constexpr std::string_view to_string(BellOutcome b) {
  switch (b) {
    case BellOutcome::PhiPlus: return "Phi+";
    case BellOutcome::PhiMinus: return "Phi-";
    case BellOutcome::PsiPlus: return "Psi+";
    case BellOutcome::PsiMinus: return "Psi-";
  }
  return "?";
}

}  // namespace ghzqdc
