#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "acausal/compose.hpp"
#include "acausal/errors.hpp"
#include "acausal/polytope.hpp"
#include "helpers.hpp"

using namespace acausal;
namespace tst = acausal::testing;

namespace {

PartyProgram random_program(std::mt19937_64& rng, int d, int a_size,
                            int x_size) {
  PartyProgram p = PartyProgram::zeroed(d, a_size, x_size);
  for (int a = 0; a < a_size; ++a)
    for (int i = 0; i < d; ++i) {
      Rat sum = 0;
      while (sum == 0) {
        sum = 0;
        for (int x = 0; x < x_size; ++x)
          for (int o = 0; o < d; ++o) {
            p.at(x, o, a, i) = tst::random_rational(rng);
            sum += p.at(x, o, a, i);
          }
      }
      for (int x = 0; x < x_size; ++x)
        for (int o = 0; o < d; ++o) p.at(x, o, a, i) /= sum;
    }
  return p;
}

}  // namespace

TEST_CASE("deterministic programs and validation") {
  PartyProgram fwd = PartyProgram::deterministic(
      2, 2, 2, [](int a, int i) { return std::pair<int, int>{i, a}; });
  CHECK_NOTHROW(fwd.validate());
  CHECK(fwd.at(1, 0, 0, 1) == 1);
  CHECK(fwd.at(0, 0, 0, 1) == 0);
  PartyProgram broken = PartyProgram::zeroed(2, 2, 2);
  CHECK_THROWS_AS(broken.validate(), InvalidInputError);
}

TEST_CASE("joint distribution normalizes exactly for consistent envs") {
  std::mt19937_64 rng(21);
  Scenario sc(2, 2);
  auto dets = enumerate_deterministic_vertices(sc);
  for (int trial = 0; trial < 50; ++trial) {
    EnvironmentProcess env = tst::random_consistent_env(rng, dets);
    std::vector<PartyProgram> programs{random_program(rng, 2, 3, 2),
                                       random_program(rng, 2, 3, 2)};
    JointDistribution dist = joint_distribution(env, programs, {1, 2});
    Rat total = 0;
    for (const Rat& v : dist.table) {
      CHECK(v >= 0);
      total += v;
    }
    CHECK(total == 1);
  }
}

TEST_CASE("inconsistent environments surface a normalization failure") {
  EnvironmentProcess env =
      det_function_to_process(tst::circular_channel(false));
  // With identity operations the total probability is 2, not 1.
  std::vector<PartyProgram> ids;
  for (int j = 0; j < 3; ++j)
    ids.push_back(PartyProgram::deterministic(
        2, 1, 1, [](int, int i) { return std::pair<int, int>{0, i}; }));
  CHECK_THROWS_AS(joint_distribution(env, ids, {0, 0, 0}),
                  InconsistencyError);
}

TEST_CASE("marginals are exact and consistent with each other") {
  std::mt19937_64 rng(22);
  Scenario sc(2, 2);
  auto dets = enumerate_deterministic_vertices(sc);
  EnvironmentProcess env = tst::random_consistent_env(rng, dets);
  std::vector<PartyProgram> programs{random_program(rng, 2, 2, 2),
                                     random_program(rng, 2, 2, 2)};
  JointDistribution dist = joint_distribution(env, programs, {0, 1});

  // Marginal over everything is the total mass 1.
  MarginalTable nothing = marginal(dist, std::vector<bool>(6, false));
  REQUIRE(nothing.values.size() == 1);
  CHECK(nothing.values[0] == 1);

  // Keeping (x_0, x_1) then dropping x_1 equals keeping x_0 directly.
  std::vector<bool> both(6, false);
  both[0] = both[1] = true;
  MarginalTable xs = marginal(dist, both);
  std::vector<bool> first(6, false);
  first[0] = true;
  MarginalTable x0 = marginal(dist, first);
  REQUIRE(x0.values.size() == 2);
  CHECK(x0.values[0] == xs.values[0] + xs.values[1]);
  CHECK(x0.values[1] == xs.values[2] + xs.values[3]);
}

TEST_CASE("dimension mismatches are rejected") {
  Scenario sc(2, 2);
  EnvironmentProcess env(
      sc, det_function_to_process(
              DeterministicFunction{sc, {0, 0, 0, 0}})
              .matrix);
  std::vector<PartyProgram> one{PartyProgram::deterministic(
      2, 1, 1, [](int, int) { return std::pair<int, int>{0, 0}; })};
  CHECK_THROWS_AS(joint_distribution(env, one, {0}), DimensionMismatchError);
}
