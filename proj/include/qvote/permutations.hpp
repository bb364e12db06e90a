#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace qvote {

inline constexpr int kMinCandidates = 2;
inline constexpr int kMaxCandidates = 6;

constexpr int factorial(int m) {
  int f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

// All rankings of m candidates, in lexicographic order of the candidate
// sequence. Index 0 is c0 > c1 > ... > c(m-1); the last index is the full
// reversal. The enumeration is the canonical meaning of a histogram index
// everywhere in the library.
struct RankingTable {
  int m = 0;
  // order[j][pos]: candidate ranked at position pos (0 = top) by ranking j.
  std::vector<std::array<std::uint8_t, kMaxCandidates>> order;
  // position[j][c]: position candidate c holds in ranking j.
  std::vector<std::array<std::uint8_t, kMaxCandidates>> position;

  int size() const { return static_cast<int>(order.size()); }
  int top(int j) const { return order[static_cast<std::size_t>(j)][0]; }
};

inline const RankingTable& rankings_of(int m) {
  if (m < kMinCandidates || m > kMaxCandidates)
    throw std::invalid_argument("rankings_of: candidate count must be in [2, 6]");
  static const auto tables = [] {
    std::array<RankingTable, kMaxCandidates + 1> all{};
    for (int mm = kMinCandidates; mm <= kMaxCandidates; ++mm) {
      RankingTable& t = all[static_cast<std::size_t>(mm)];
      t.m = mm;
      std::array<std::uint8_t, kMaxCandidates> perm{};
      std::iota(perm.begin(), perm.begin() + mm, std::uint8_t{0});
      do {
        std::array<std::uint8_t, kMaxCandidates> pos{};
        for (int p = 0; p < mm; ++p) pos[perm[static_cast<std::size_t>(p)]] = static_cast<std::uint8_t>(p);
        t.order.push_back(perm);
        t.position.push_back(pos);
      } while (std::next_permutation(perm.begin(), perm.begin() + mm));
    }
    return all;
  }();
  return tables[static_cast<std::size_t>(m)];
}

}  // namespace qvote
