#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "acausal/errors.hpp"
#include "acausal/scenario.hpp"
#include "helpers.hpp"

using namespace acausal;
namespace tst = acausal::testing;

TEST_CASE("joint indexing is most-significant-party-first") {
  Scenario sc(3, 2);
  CHECK(sc.joint_dim() == 8);
  CHECK(joint_encode(sc, {1, 0, 1}) == 5);
  CHECK(joint_decode(sc, 5) == std::vector<int>{1, 0, 1});
  Scenario sc32(2, 3);
  CHECK(joint_encode(sc32, {2, 1}) == 7);
  CHECK(joint_decode(sc32, 7) == std::vector<int>{2, 1});
  CHECK_THROWS_AS(Scenario(0, 2), InvalidInputError);
  CHECK_THROWS_AS(Scenario(1, 1), InvalidInputError);
}

TEST_CASE("deterministic local matrices are 0-1 column-stochastic") {
  LocalOperation id = det_local_matrix({2, {0, 1}});
  CHECK(id.matrix == RatMatrix::identity(2));
  LocalOperation flip = det_local_matrix({2, {1, 0}});
  CHECK(flip.matrix(1, 0) == 1);
  CHECK(flip.matrix(0, 1) == 1);
  CHECK(flip.matrix(0, 0) == 0);
  LocalOperation c0 = det_local_matrix({2, {0, 0}});
  CHECK(c0.matrix(0, 0) == 1);
  CHECK(c0.matrix(0, 1) == 1);
  CHECK(c0.matrix(1, 1) == 0);
}

TEST_CASE("sufficient family has d(d-1)+1 members, constant-0 first") {
  for (int d = 2; d <= 4; ++d) {
    auto family = sufficient_family(d);
    CHECK(family.size() == std::size_t(d) * (d - 1) + 1);
    CHECK(family[0].table == std::vector<int>(d, 0));
    // No duplicates.
    for (std::size_t a = 0; a < family.size(); ++a)
      for (std::size_t b = a + 1; b < family.size(); ++b)
        CHECK(family[a].table != family[b].table);
  }
  // d = 2: the family is {const0, id, flip}, in that order.
  auto f2 = sufficient_family(2);
  CHECK(f2[1].table == std::vector<int>{0, 1});
  CHECK(f2[2].table == std::vector<int>{1, 0});
}

TEST_CASE("all deterministic local operations") {
  CHECK(all_det_local_ops(2).size() == 4);
  CHECK(all_det_local_ops(3).size() == 27);
}

TEST_CASE("environment constructor validates stochasticity") {
  Scenario sc(1, 2);
  RatMatrix good(2, 2, {Rat(1, 3), Rat(1), Rat(2, 3), Rat(0)});
  CHECK_NOTHROW(EnvironmentProcess(sc, good));
  RatMatrix bad_sum(2, 2, {Rat(1, 3), Rat(1), Rat(1, 3), Rat(0)});
  CHECK_THROWS_AS(EnvironmentProcess(sc, bad_sum), InvalidInputError);
  RatMatrix negative(2, 2, {Rat(-1, 2), Rat(1), Rat(3, 2), Rat(0)});
  CHECK_THROWS_AS(EnvironmentProcess(sc, negative), InvalidInputError);
  CHECK_THROWS_AS(EnvironmentProcess(sc, RatMatrix(3, 3)),
                  DimensionMismatchError);
}

TEST_CASE("det_function_to_process places 1 at (f(o), o)") {
  DeterministicFunction g = tst::circular_channel(false);
  EnvironmentProcess env = det_function_to_process(g);
  for (std::size_t o = 0; o < 8; ++o)
    for (std::size_t i = 0; i < 8; ++i)
      CHECK(env.matrix(i, o) == (g.table[o] == i ? 1 : 0));
  // Spot value: O = (1,0) of the circular channel feeds I_A = O_C etc.
  DeterministicFunction two{Scenario(2, 2), {0, 0, 0, 0}};
  two.table = {0, 2, 1, 3};
  CHECK(det_function_to_process(two).matrix(2, 1) == 1);
}

TEST_CASE("process files round-trip bit-exactly") {
  EnvironmentProcess env = read_process_file(tst::fixture("ex1.process"));
  std::ostringstream out;
  write_process(out, env);
  std::istringstream in(out.str());
  EnvironmentProcess again = read_process(in);
  CHECK(again.matrix == env.matrix);
  CHECK(again.scenario == env.scenario);
}

TEST_CASE("process reader rejects malformed input") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_process(in);
  };
  CHECK_THROWS_AS(parse(""), InvalidInputError);
  CHECK_THROWS_AS(parse("1 2\n1 1\n"), InvalidInputError);          // short
  CHECK_THROWS_AS(parse("1 2\n1 1 0\n0 0\n"), InvalidInputError);   // long row
  CHECK_THROWS_AS(parse("1 2\n1 1\n0 1\n"), InvalidInputError);     // col sum
  CHECK_NOTHROW(parse("# comment\n1 2\n1 1/2\n0 1/2\n"));
  // Raw candidate reading skips validation but keeps the format checks.
  std::istringstream neg("1 2\n-1 1\n2 0\n");
  auto [sc, m] = read_candidate(neg);
  CHECK(m(0, 0) == -1);
  CHECK(sc == Scenario(1, 2));
}
