#include <cmath>
#include <optional>

#include <catch2/catch_amalgamated.hpp>

#include "qvote/mov.hpp"
#include "qvote/mov_cases.hpp"
#include "qvote/profiles.hpp"
#include "qvote/rules.hpp"

using namespace qvote;

namespace {

double l1_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) d += std::fabs(a[j] - b[j]);
  return d;
}

}  // namespace

TEST_CASE("margin search on hand-checked two-candidate profiles") {
  const auto one = brute_force_mov(RuleId::Plurality, Histogram(2, {3, 1}), 3);
  REQUIRE(one.has_value());
  CHECK(one->moved_votes == 1);

  const auto two = brute_force_mov(RuleId::Plurality, Histogram(2, {4, 0}), 3);
  REQUIRE(two.has_value());
  CHECK(two->moved_votes == 2);

  for (RuleId rule : {RuleId::Plurality, RuleId::Borda, RuleId::Copeland, RuleId::Stv}) {
    const auto four = brute_force_mov(rule, two_candidate_profile(40, 4), 6);
    REQUIRE(four.has_value());
    CHECK(four->moved_votes == 4);
  }
}

TEST_CASE("margins count voters, not weight: scaling does not scale the margin") {
  const Histogram h = scale_histogram(two_candidate_profile(8, 1), 3.0);
  const auto w = brute_force_mov(RuleId::Plurality, h, 5);
  REQUIRE(w.has_value());
  CHECK(w->moved_votes == 3);
}

TEST_CASE("designed margins match the exhaustive search on every standard case") {
  for (const MovCase& c : standard_mov_cases()) {
    INFO(family_label(c.profile.family) << " " << rule_label(c.rule) << " n=" << c.profile.n
                                        << " m=" << c.profile.m << " mov=" << c.profile.mov);
    const Histogram h = make_profile(c.profile);
    const int designed = static_cast<int>(analytic_mov(c.profile));
    const auto found = brute_force_mov(c.rule, h, designed + 2);
    REQUIRE(found.has_value());
    CHECK(found->moved_votes == designed);
  }
}

TEST_CASE("margin witnesses move exactly k votes and break the win") {
  for (const MovCase& c : standard_mov_cases()) {
    const Histogram h = make_profile(c.profile);
    const auto found = brute_force_mov(c.rule, h, static_cast<int>(c.profile.mov) + 2);
    REQUIRE(found.has_value());
    const Histogram moved(h.m, found->histogram);
    CHECK(l1_distance(h.weight, found->histogram) ==
          Catch::Approx(2.0 * found->moved_votes).epsilon(1e-9));
    CHECK(moved.total() == Catch::Approx(h.total()).epsilon(1e-9));
    CHECK(winner_set(c.rule, moved) != WinnerSet{0});
  }
}

TEST_CASE("borda family margins above one collapse to mixed ballot swaps") {
  // A single moved ballot (leader-first to leader-last swapped with a rival)
  // swings the score gap by 2(m-1), so the designed margin of 3 here is
  // actually achievable with 2 moves. The construction is only margin-exact at
  // mov = 1; the standard case list respects that.
  const Histogram h = borda_profile(40, 3, 3);
  REQUIRE(borda_winner_set(h) == WinnerSet{0});
  const auto found = brute_force_mov(RuleId::Borda, h, 4);
  REQUIRE(found.has_value());
  CHECK(found->moved_votes == 2);
}

TEST_CASE("fractional histogram entries admit integer redistribution") {
  const Histogram h = borda_profile(24, 3, 1);
  REQUIRE_FALSE(h.integral());
  const auto found = brute_force_mov(RuleId::Borda, h, 3);
  REQUIRE(found.has_value());
  CHECK(found->moved_votes == 1);
}

TEST_CASE("margin search rejects tied starting profiles") {
  CHECK_THROWS_AS(brute_force_mov(RuleId::Plurality, Histogram(2, {2, 2}), 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(brute_force_mov(RuleId::Plurality, Histogram(2, {3, 1}), 0),
                  std::invalid_argument);
}

TEST_CASE("margin search reports exhaustion instead of guessing") {
  CHECK_FALSE(brute_force_mov(RuleId::Plurality, two_candidate_profile(40, 4), 3).has_value());
}
