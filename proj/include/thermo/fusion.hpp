#pragma once

#include <span>
#include <vector>

#include "thermo/error.hpp"

namespace thermo {

// Deep-then-handcrafted concatenation. Lengths are checked exactly; the
// deep length is a parameter so ablation variants stay expressible.
inline std::vector<double> fuse(std::span<const double> deep, std::span<const double> hand,
                                size_t deep_len = 2048, size_t hand_len = 4) {
  if (deep.size() != deep_len)
    fail(errc::length_mismatch, "deep vector has " + std::to_string(deep.size()) +
                                    " entries, expected " + std::to_string(deep_len));
  if (hand.size() != hand_len)
    fail(errc::length_mismatch, "hand vector has " + std::to_string(hand.size()) +
                                    " entries, expected " + std::to_string(hand_len));
  std::vector<double> fused;
  fused.reserve(deep.size() + hand.size());
  fused.insert(fused.end(), deep.begin(), deep.end());
  fused.insert(fused.end(), hand.begin(), hand.end());
  return fused;
}

}  // namespace thermo
