#pragma once

#include <string>
#include <string_view>

namespace tetra {

/// Deliberate defects used to check that the law suite notices sign and
/// range mistakes. kNone in every real computation.
enum class Canary {
  kNone,
  kCupSignFlip,      // cup carries an extra factor -1
  kDropKoszulSign,   // compositions omit their insertion/reordering sign
  kGRangeOffByOne,   // the G region starts one index early
};

std::string to_string(Canary canary);
/// kBadConfig on unknown names. Accepts "none", "cup-sign", "drop-koszul", "g-range".
Canary parse_canary(std::string_view name);

}  // namespace tetra
