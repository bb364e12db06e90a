#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "qvote/profiles.hpp"
#include "qvote/rules.hpp"

using namespace qvote;

TEST_CASE("two-candidate profile splits n with the designed lead") {
  const Histogram big = two_candidate_profile(1048576, 1024);
  CHECK(big.weight == std::vector<double>{525312, 523264});

  CHECK(two_candidate_profile(4, 2).weight == std::vector<double>{4, 0});

  const Histogram odd = two_candidate_profile(5, 1);
  CHECK(odd.weight == std::vector<double>{3, 2});

  CHECK_THROWS_AS(two_candidate_profile(4, 3), std::domain_error);
  CHECK_THROWS_AS(two_candidate_profile(0, 0), std::domain_error);
  CHECK_THROWS_AS(two_candidate_profile(4, -1), std::domain_error);
}

TEST_CASE("plurality family boosts a single ranking") {
  const Histogram h = plurality_profile(24, 3, 2);
  CHECK(h.weight[0] == Catch::Approx(44.0 / 6.0).epsilon(1e-12));
  for (int j = 1; j < 6; ++j)
    CHECK(h.weight[static_cast<std::size_t>(j)] == Catch::Approx(20.0 / 6.0).epsilon(1e-12));

  // m = 2 degenerates to the two-candidate split (for even n).
  const Histogram two = plurality_profile(1048576, 2, 1024);
  CHECK(two.weight == std::vector<double>{525312, 523264});

  const Histogram flat = plurality_profile(12, 3, 0);
  for (double w : flat.weight) CHECK(w == Catch::Approx(2.0).epsilon(1e-12));

  CHECK_THROWS_AS(plurality_profile(24, 3, 13), std::domain_error);
}

TEST_CASE("borda family lifts every ranking topped by the leader") {
  const Histogram h = borda_profile(240, 4, 6);
  const RankingTable& rt = rankings_of(4);
  for (int j = 0; j < rt.size(); ++j) {
    const double expected = rt.top(j) == 0 ? 249.0 / 24.0 : 237.0 / 24.0;
    CHECK(h.weight[static_cast<std::size_t>(j)] == Catch::Approx(expected).epsilon(1e-12));
  }

  CHECK_THROWS_AS(borda_profile(240, 2, 6), std::invalid_argument);
  CHECK_THROWS_AS(borda_profile(3, 3, 10), std::domain_error);
}

TEST_CASE("dominant-pair family boosts the rankings starting c0 > c1") {
  const Histogram h = dominant_pair_profile(240, 4, 6);
  const RankingTable& rt = rankings_of(4);
  int boosted = 0;
  for (int j = 0; j < rt.size(); ++j) {
    const auto& ord = rt.order[static_cast<std::size_t>(j)];
    if (ord[0] == 0 && ord[1] == 1) {
      CHECK(h.weight[static_cast<std::size_t>(j)] == Catch::Approx(15.5).epsilon(1e-12));
      ++boosted;
    } else {
      CHECK(h.weight[static_cast<std::size_t>(j)] == Catch::Approx(9.5).epsilon(1e-12));
    }
  }
  CHECK(boosted == 2);  // (m-2)! rankings start c0 > c1

  CHECK_THROWS_AS(dominant_pair_profile(240, 2, 6), std::invalid_argument);
  CHECK_THROWS_AS(dominant_pair_profile(20, 3, 11), std::domain_error);
}

TEST_CASE("every family conserves total weight and elects candidate 0") {
  const struct {
    ProfileFamilySpec spec;
    std::vector<RuleId> target_rules;
  } cases[] = {
      {{ProfileFamily::TwoCandidate, 1048576, 2, 1024},
       {RuleId::Plurality, RuleId::Borda, RuleId::Copeland, RuleId::Stv}},
      {{ProfileFamily::TwoCandidate, 41, 2, 3},
       {RuleId::Plurality, RuleId::Borda, RuleId::Copeland, RuleId::Stv}},
      {{ProfileFamily::Plurality, 24, 3, 2}, {RuleId::Plurality}},
      {{ProfileFamily::Plurality, 1048576, 4, 4096}, {RuleId::Plurality}},
      {{ProfileFamily::Borda, 240, 4, 6}, {RuleId::Borda}},
      {{ProfileFamily::Borda, 36, 3, 1}, {RuleId::Borda}},
      {{ProfileFamily::DominantPair, 240, 4, 6}, {RuleId::Copeland, RuleId::Stv}},
      {{ProfileFamily::DominantPair, 24, 3, 3}, {RuleId::Copeland, RuleId::Stv}},
  };
  for (const auto& c : cases) {
    const Histogram h = make_profile(c.spec);
    CHECK(h.total() == Catch::Approx(c.spec.n).epsilon(1e-9));
    for (RuleId rule : c.target_rules) CHECK(winner_set(rule, h) == WinnerSet{0});
  }
}

TEST_CASE("zero margin degenerates to a full tie") {
  const ProfileFamilySpec specs[] = {
      {ProfileFamily::TwoCandidate, 16, 2, 0},
      {ProfileFamily::Plurality, 24, 3, 0},
      {ProfileFamily::Borda, 240, 4, 0},
      {ProfileFamily::DominantPair, 60, 3, 0},
  };
  for (const auto& spec : specs) {
    const Histogram h = make_profile(spec);
    for (RuleId rule : {RuleId::Plurality, RuleId::Borda, RuleId::Copeland, RuleId::Stv}) {
      WinnerSet all(static_cast<std::size_t>(spec.m));
      for (int c = 0; c < spec.m; ++c) all[static_cast<std::size_t>(c)] = c;
      CHECK(winner_set(rule, h) == all);
    }
  }
}

TEST_CASE("family_for picks the family whose margin targets the rule") {
  for (RuleId rule : {RuleId::Plurality, RuleId::Borda, RuleId::Copeland, RuleId::Stv})
    CHECK(family_for(rule, 2) == ProfileFamily::TwoCandidate);
  CHECK(family_for(RuleId::Plurality, 4) == ProfileFamily::Plurality);
  CHECK(family_for(RuleId::Borda, 4) == ProfileFamily::Borda);
  CHECK(family_for(RuleId::Copeland, 4) == ProfileFamily::DominantPair);
  CHECK(family_for(RuleId::Stv, 3) == ProfileFamily::DominantPair);
}

TEST_CASE("make_profile validation") {
  CHECK_THROWS_AS(make_profile({ProfileFamily::TwoCandidate, 16, 3, 1}), std::invalid_argument);
  CHECK(make_profile({ProfileFamily::Plurality, 24, 3, 2}).m == 3);
}

TEST_CASE("family labels are stable strings") {
  CHECK(std::string_view(family_label(ProfileFamily::TwoCandidate)) == "two-candidate");
  CHECK(std::string_view(family_label(ProfileFamily::Plurality)) == "plurality-family");
  CHECK(std::string_view(family_label(ProfileFamily::Borda)) == "borda-family");
  CHECK(std::string_view(family_label(ProfileFamily::DominantPair)) == "dominant-pair");
}
