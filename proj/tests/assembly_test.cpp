#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "Fixtures.h"
#include "RandomInstance.h"
#include "lecq/Assembly.h"
#include "lecq/CentralizedMatcher.h"
#include "lecq/LocalMatcher.h"

using namespace lecq;

namespace {

std::vector<LocalPartialMatch> exampleSurvivors(const test::Dataset& d) {
  std::vector<LocalPartialMatch> out;
  for (const auto& n : test::exampleLpmNames()) {
    if (n != "PM32") out.push_back(test::exampleLpm(d, n));
  }
  return out;
}

std::set<Match> crossingOracle(const test::Dataset& d) {
  std::set<Match> out;
  for (const auto& m : findMatchesCentralized(d.graph, *d.query)) {
    std::set<FragmentId> homes;
    for (auto v : m.assignment) homes.insert(d.dist->home(v));
    if (homes.size() > 1) out.insert(m);
  }
  return out;
}

std::vector<LocalPartialMatch> allLpms(const test::Dataset& d) {
  std::vector<LocalPartialMatch> out;
  for (const auto& f : d.dist->fragments()) {
    auto l = findLocalPartialMatches(f, *d.query);
    out.insert(out.end(), l.begin(), l.end());
  }
  return out;
}

std::set<Match> asSet(const std::vector<Match>& v) { return {v.begin(), v.end()}; }

}  // namespace

// ____________________________________________________________________________
TEST(LpmJoin, ExamplePairs) {
  auto d = test::runningExample();
  auto v = [&](const char* n) { return test::exampleVertex(d, n); };
  auto pm = [&](const char* n) { return test::exampleLpm(d, n); };
  auto joined = lpmJoin(pm("PM11"), pm("PM21"), *d.query);
  ASSERT_TRUE(joined.has_value());
  EXPECT_TRUE(joined->isComplete());
  EXPECT_EQ(joined->toMatch().assignment,
            (std::vector<TermId>{v("006"), v("008"), v("001"), v("009"), v("003")}));
  EXPECT_LT(joined->fragment, 0);
  EXPECT_EQ(joined->sourceFragments, (std::vector<FragmentId>{0, 1}));
  EXPECT_TRUE(lpmJoin(pm("PM11"), pm("PM22"), *d.query).has_value());
  EXPECT_FALSE(lpmJoin(pm("PM11"), pm("PM11"), *d.query).has_value());
  EXPECT_FALSE(lpmJoin(pm("PM11"), pm("PM31"), *d.query).has_value());
  EXPECT_FALSE(lpmJoin(pm("PM13"), pm("PM32"), *d.query).has_value());
}

TEST(LpmGroups, ExampleSurvivorGroups) {
  auto d = test::runningExample();
  auto pm = [&](const char* n) { return test::exampleLpm(d, n); };
  auto groups = groupLpms(exampleSurvivors(d), *d.query);
  ASSERT_EQ(groups.size(), 4u);
  auto sorted = [](std::vector<LocalPartialMatch> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  EXPECT_EQ(groups[0].members, sorted({pm("PM11"), pm("PM12")}));
  EXPECT_EQ(groups[1].members, sorted({pm("PM13")}));
  EXPECT_EQ(groups[2].members, sorted({pm("PM23")}));
  EXPECT_EQ(groups[3].members, sorted({pm("PM21"), pm("PM22"), pm("PM31")}));
  EXPECT_TRUE(groupLpms({}, *d.query).empty());
}

TEST(AssembleLec, ExampleMatches) {
  auto d = test::runningExample();
  auto groups = groupLpms(exampleSurvivors(d), *d.query);
  auto matches = assembleLec(groups, buildLpmJoinGraph(groups, *d.query), *d.query);
  EXPECT_EQ(asSet(matches), crossingOracle(d));
  EXPECT_EQ(matches.size(), 4u);
  EXPECT_TRUE(assembleLec({}, {}, *d.query).empty());
}

TEST(AssembleBasic, ExampleMatches) {
  auto d = test::runningExample();
  auto all = allLpms(d);
  EXPECT_EQ(asSet(assembleBasic(all, *d.query)), crossingOracle(d));
  EXPECT_TRUE(assembleBasic({}, *d.query).empty());
}

// ____________________________________________________________________________
TEST(Assembly, RandomInstancesMatchCentralizedCrossingMatches) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto d = test::randomInstance(seed);
    if (d.query->starCenter()) continue;
    auto lpms = allLpms(d);
    auto want = crossingOracle(d);
    EXPECT_EQ(asSet(assembleBasic(lpms, *d.query)), want) << "seed " << seed;
    auto groups = groupLpms(lpms, *d.query);
    auto graph = buildLpmJoinGraph(groups, *d.query);
    EXPECT_EQ(asSet(assembleLec(groups, graph, *d.query)), want)
        << "seed " << seed;
    for (const auto& g : groups) {
      for (const auto& a : g.members) {
        for (const auto& b : g.members) {
          EXPECT_FALSE(lpmJoin(a, b, *d.query).has_value());
        }
      }
    }
  }
}

TEST(Assembly, PickOrderDoesNotChangeResult) {
  std::mt19937_64 rng(7);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto d = test::randomInstance(seed);
    if (d.query->starCenter()) continue;
    auto lpms = allLpms(d);
    auto groups = groupLpms(lpms, *d.query);
    auto graph = buildLpmJoinGraph(groups, *d.query);
    auto base = asSet(assembleLec(groups, graph, *d.query));
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<std::size_t> rank(groups.size());
      std::iota(rank.begin(), rank.end(), 0);
      std::shuffle(rank.begin(), rank.end(), rng);
      AssemblyOptions o{rank};
      EXPECT_EQ(asSet(assembleLec(groups, graph, *d.query, o)), base)
          << "seed " << seed;
    }
  }
}
