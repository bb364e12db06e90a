#pragma once

#include <vector>

#include "qvote/profiles.hpp"
#include "qvote/rules.hpp"

namespace qvote {

// One margin-agreement check: build the family profile and confirm the
// exhaustive redistribution search reproduces the designed margin under the
// paired rule.
struct MovCase {
  ProfileFamilySpec profile;
  RuleId rule;
};

// Instances small enough for the exhaustive search, chosen so every family and
// every rule appears and the designed margin is the true one (for the Borda
// family that pins mov = 1; larger margins there fall to mixed ballot swaps
// that shift two Borda scores at once, see the margin tests).
inline const std::vector<MovCase>& standard_mov_cases() {
  using F = ProfileFamily;
  static const std::vector<MovCase> cases = {
      // Two-candidate margins: all rules coincide with majority.
      {{F::TwoCandidate, 40, 2, 4}, RuleId::Plurality},
      {{F::TwoCandidate, 40, 2, 4}, RuleId::Borda},
      {{F::TwoCandidate, 40, 2, 4}, RuleId::Copeland},
      {{F::TwoCandidate, 40, 2, 4}, RuleId::Stv},
      {{F::TwoCandidate, 8, 2, 1}, RuleId::Plurality},
      {{F::TwoCandidate, 8, 2, 2}, RuleId::Borda},
      {{F::TwoCandidate, 9, 2, 1}, RuleId::Copeland},
      {{F::TwoCandidate, 41, 2, 3}, RuleId::Stv},
      {{F::TwoCandidate, 12, 2, 3}, RuleId::Plurality},
      {{F::TwoCandidate, 60, 2, 6}, RuleId::Borda},
      {{F::TwoCandidate, 8, 2, 4}, RuleId::Copeland},
      // One boosted ranking; first-place gap closes by 2 per moved vote.
      {{F::Plurality, 8, 3, 1}, RuleId::Plurality},
      {{F::Plurality, 10, 3, 2}, RuleId::Plurality},
      {{F::Plurality, 12, 3, 3}, RuleId::Plurality},
      {{F::Plurality, 24, 3, 6}, RuleId::Plurality},
      {{F::Plurality, 26, 4, 1}, RuleId::Plurality},
      {{F::Plurality, 52, 4, 2}, RuleId::Plurality},
      // Borda family at unit margin (entries fractional, moves integral).
      {{F::Borda, 24, 3, 1}, RuleId::Borda},
      {{F::Borda, 36, 3, 1}, RuleId::Borda},
      {{F::Borda, 60, 3, 1}, RuleId::Borda},
      {{F::Borda, 36, 4, 1}, RuleId::Borda},
      {{F::Borda, 48, 4, 1}, RuleId::Borda},
      // Dominant pair: flipping any head-to-head against c0 costs mov moves.
      {{F::DominantPair, 8, 3, 1}, RuleId::Copeland},
      {{F::DominantPair, 16, 3, 2}, RuleId::Copeland},
      {{F::DominantPair, 24, 3, 3}, RuleId::Copeland},
      {{F::DominantPair, 26, 4, 1}, RuleId::Copeland},
      {{F::DominantPair, 52, 4, 2}, RuleId::Copeland},
      {{F::DominantPair, 8, 3, 1}, RuleId::Stv},
      {{F::DominantPair, 16, 3, 2}, RuleId::Stv},
      {{F::DominantPair, 26, 4, 1}, RuleId::Stv},
  };
  return cases;
}

}  // namespace qvote
