#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "acausal/errors.hpp"
#include "acausal/lp.hpp"
#include "helpers.hpp"

using namespace acausal;
namespace tst = acausal::testing;

namespace {

Rat dot(const RatVector& a, const RatVector& b) {
  Rat s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

RatVector random_objective(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  RatVector c(len);
  for (Rat& v : c) v = Rat(num(rng)) / Rat(den(rng));
  return c;
}

}  // namespace

TEST_CASE("coordinate objective over the single-party segment") {
  HPolytope p = build_hrep(Scenario(1, 2));
  RatVector c(4, Rat(0));
  c[0] = 1;  // coordinate (O=0, I=0): fed 0, receive 0
  auto [value, vertex] = maximize(LinearProgram{c, p});
  CHECK(value == 1);
  CHECK(vertex.deterministic);
  CHECK(vertex.point == RatVector{Rat(1), Rat(0), Rat(1), Rat(0)});
  // Zero objective: value 0 at some vertex.
  auto [zero, zvertex] = maximize(LinearProgram{RatVector(4, Rat(0)), p});
  CHECK(zero == 0);
  CHECK(is_vertex(p, zvertex.point));
}

TEST_CASE("LP optimum equals the vertex-enumeration maximum") {
  std::mt19937_64 rng(31);
  for (int n : {1, 2}) {
    HPolytope p = build_hrep(Scenario(n, 2));
    auto vertices = enumerate_vertices_dd(p);
    for (int trial = 0; trial < 25; ++trial) {
      RatVector c = random_objective(rng, p.nonneg_count);
      auto [value, vertex] = maximize(LinearProgram{c, p});
      Rat best = dot(c, vertices[0].point);
      for (const auto& v : vertices) {
        Rat candidate = dot(c, v.point);
        if (candidate > best) best = candidate;
      }
      CHECK(value == best);
      CHECK(dot(c, vertex.point) == value);
      CHECK(is_vertex(p, vertex.point));
    }
  }
}

TEST_CASE("simplex terminates on 200 random objectives at (2,2)") {
  std::mt19937_64 rng(32);
  HPolytope p = build_hrep(Scenario(2, 2));
  for (int trial = 0; trial < 200; ++trial)
    CHECK_NOTHROW(maximize(LinearProgram{random_objective(rng, 16), p}));
}

TEST_CASE("positive scaling scales the value and keeps the argmax") {
  std::mt19937_64 rng(33);
  HPolytope p = build_hrep(Scenario(2, 2));
  for (int trial = 0; trial < 10; ++trial) {
    RatVector c = random_objective(rng, 16);
    auto [value, vertex] = maximize(LinearProgram{c, p});
    RatVector scaled = c;
    for (Rat& v : scaled) v *= Rat(7, 3);
    auto [svalue, svertex] = maximize(LinearProgram{scaled, p});
    CHECK(svalue == value * Rat(7, 3));
    CHECK(svertex.point == vertex.point);
  }
}

TEST_CASE("game objectives are exact linearizations of the success") {
  std::mt19937_64 rng(34);
  Game ex1 = builtin_ex1();
  RatVector c = game_objective(ex1, ex1_noncausal_programs());
  EnvironmentProcess env_ex1 = read_process_file(tst::fixture("ex1.process"));
  CHECK(dot(c, vectorize(env_ex1)) == 1);
  // Agreement with eval_noncausal on random consistent environments,
  // and probability bounds.
  auto dets = enumerate_deterministic_vertices(Scenario(3, 2));
  for (int trial = 0; trial < 30; ++trial) {
    EnvironmentProcess env = tst::random_consistent_env(rng, dets);
    Rat via_c = dot(c, vectorize(env));
    CHECK(via_c == eval_noncausal(ex1, env, ex1_noncausal_programs()));
    CHECK(via_c >= 0);
    CHECK(via_c <= 1);
  }
  // The trivial always-win game has <c, vec(E)> = 1 for consistent E.
  Game trivial = builtin_ex2();
  trivial.predicate.assign(trivial.predicate.size(), 1);
  RatVector ones = game_objective(trivial, forward_programs(3, 2));
  for (int trial = 0; trial < 5; ++trial)
    CHECK(dot(ones, vectorize(tst::random_consistent_env(rng, dets))) == 1);
}

TEST_CASE("ex1 objective maximizes to 1 over the (3,2) polytope") {
  LinearProgram lp{game_objective(builtin_ex1(), ex1_noncausal_programs()),
                   build_hrep(Scenario(3, 2))};
  auto [value, vertex] = maximize(lp);
  CHECK(value == 1);
  CHECK(is_vertex(lp.polytope, vertex.point));
}

TEST_CASE("validation rejects mismatched shapes") {
  HPolytope p = build_hrep(Scenario(1, 2));
  CHECK_THROWS_AS(maximize(LinearProgram{RatVector(3, Rat(0)), p}),
                  DimensionMismatchError);
}
