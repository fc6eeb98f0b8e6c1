#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "acausal/consistency.hpp"
#include "acausal/errors.hpp"
#include "helpers.hpp"

using namespace acausal;
namespace tst = acausal::testing;

TEST_CASE("fixed-point count equals the trace of E composed with ops") {
  DeterministicFunction circ = tst::circular_channel(false);
  DeterministicLocalOp id{2, {0, 1}}, flip{2, {1, 0}}, c0{2, {0, 0}};
  CHECK(fixed_point_count(circ, {id, id, id}) == 2);
  CHECK(fixed_point_count(circ, {flip, flip, flip}) == 0);
  CHECK(fixed_point_count(circ, {c0, id, id}) == 1);
  DeterministicFunction circ_flip = tst::circular_channel(true);
  CHECK(fixed_point_count(circ_flip, {id, id, id}) == 0);
  CHECK(fixed_point_count(circ_flip, {flip, flip, flip}) == 2);
  // Cross-check against the matrix trace for every sufficient tuple.
  EnvironmentProcess env = det_function_to_process(circ);
  for (const auto& a : sufficient_family(2))
    for (const auto& b : sufficient_family(2))
      for (const auto& c : sufficient_family(2)) {
        RatMatrix d = kron(det_local_matrix(a).matrix,
                           kron(det_local_matrix(b).matrix,
                                det_local_matrix(c).matrix));
        CHECK(trace(env.matrix * d) ==
              Rat(Int(fixed_point_count(circ, {a, b, c}))));
      }
}

TEST_CASE("the circular channels are inconsistent with trace witnesses") {
  auto check_circ = [](bool flip, int expected_trace) {
    EnvironmentProcess env =
        det_function_to_process(tst::circular_channel(flip));
    ConsistencyVerdict v = is_consistent(env);
    REQUIRE_FALSE(v.consistent);
    REQUIRE(v.trace_witness.has_value());
    CHECK(v.trace_witness->trace == expected_trace);
    // The reported witness tuple is all-identity.
    for (const auto& op : v.trace_witness->ops)
      CHECK(op.table == std::vector<int>{0, 1});
  };
  check_circ(false, 2);
  check_circ(true, 0);
}

TEST_CASE("deterministic noncausal processes can still be consistent") {
  CHECK(is_consistent_deterministic(tst::det1_function()));
  CHECK(is_consistent(det_function_to_process(tst::det1_function()),
                      CheckMode::kAllOps)
            .consistent);
  CHECK_FALSE(is_consistent_deterministic(tst::circular_channel(false)));
}

TEST_CASE("uniform environment is consistent") {
  Scenario sc(2, 2);
  RatMatrix m(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = Rat(1, 4);
  CHECK(is_consistent(EnvironmentProcess(sc, m)).consistent);
}

TEST_CASE("nonnegativity check reports the first bad entry") {
  RatMatrix m(2, 2, {Rat(1, 2), Rat(-1, 2), Rat(1, 2), Rat(3, 2)});
  ConsistencyVerdict v = check_nonnegativity(m);
  REQUIRE_FALSE(v.consistent);
  REQUIRE(v.negative_witness.has_value());
  CHECK(v.negative_witness->row == 0);
  CHECK(v.negative_witness->col == 1);
  CHECK(v.negative_witness->value == Rat(-1, 2));
}

TEST_CASE("sufficient-family verdict agrees with all-ops on random envs") {
  std::mt19937_64 rng(99);
  Scenario sc(2, 2);
  int consistent_seen = 0, inconsistent_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    EnvironmentProcess env(sc, tst::random_stochastic(rng, 4));
    bool fast = is_consistent(env, CheckMode::kSufficientFamily).consistent;
    bool full = is_consistent(env, CheckMode::kAllOps).consistent;
    CHECK(fast == full);
    (fast ? consistent_seen : inconsistent_seen)++;
  }
  // The sample must exercise both outcomes to be meaningful.
  CHECK(inconsistent_seen > 0);
}
