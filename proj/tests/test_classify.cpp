#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acausal/classify.hpp"
#include "acausal/errors.hpp"
#include "acausal/polytope.hpp"
#include "helpers.hpp"

using namespace acausal;
namespace tst = acausal::testing;

namespace {

// A chain A -> B -> C: A receives the constant 0, B receives A's value,
// C receives B's value.
DeterministicFunction chain_function() {
  Scenario sc(3, 2);
  DeterministicFunction g{sc, std::vector<JointIndex>(8)};
  for (JointIndex o = 0; o < 8; ++o) {
    int oa = int(o >> 2) & 1, ob = int(o >> 1) & 1;
    g.table[o] = JointIndex(0 << 2 | oa << 1 | ob);
  }
  return g;
}

}  // namespace

TEST_CASE("conjugation by flips is an involution preserving consistency") {
  DeterministicFunction g = tst::det1_function();
  for (int mask = 0; mask < 8; ++mask) {
    FlipPattern l{{(mask >> 2) & 1, (mask >> 1) & 1, mask & 1}};
    DeterministicFunction h = conjugate_by_flips(g, l);
    CHECK(conjugate_by_flips(h, l) == g);
    for (JointIndex o = 0; o < 8; ++o)
      CHECK(h.table[o] == (g.table[o ^ JointIndex(mask)] ^ JointIndex(mask)));
    // Conjugation preserves the consistency census membership.
    CHECK(canonical_fixed_point(h) == (canonical_fixed_point(g) ^
                                       JointIndex(mask)));
  }
}

TEST_CASE("canonical fixed point") {
  CHECK(canonical_fixed_point(tst::det1_function()) == 0);
  CHECK_THROWS_AS(canonical_fixed_point(tst::circular_channel(false)),
                  InconsistencyError);
  CHECK_THROWS_AS(canonical_fixed_point(tst::circular_channel(true)),
                  InconsistencyError);
}

TEST_CASE("signaling digraph of the worked examples") {
  SignalingDigraph det1 = signaling_digraph(tst::det1_function());
  CHECK(det1.constant_receivers.empty());
  CHECK(det1.edges.size() == 6);  // complete: everyone signals to everyone

  SignalingDigraph chain = signaling_digraph(chain_function());
  CHECK(chain.constant_receivers == std::set<int>{0});
  CHECK(chain.edges == std::set<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("taxonomy classes of known functions") {
  CHECK(taxonomy_class(tst::det1_function()) == 'g');
  CHECK(taxonomy_class(chain_function()) == 'd');
  // All three parties constant: class a.
  DeterministicFunction constant{Scenario(3, 2),
                                 std::vector<JointIndex>(8, 0)};
  CHECK(taxonomy_class(constant) == 'a');
}

TEST_CASE("full census: 744 functions, 93 orbits of size 8, Fig-7 counts") {
  auto dets = enumerate_deterministic_vertices(Scenario(3, 2));
  REQUIRE(dets.size() == 744);
  OrbitDecomposition orbits = orbit_decompose(dets);
  CHECK(orbits.orbits.size() == 93);
  for (const auto& orbit : orbits.orbits) CHECK(orbit.size() == 8);
  for (const auto& g : orbits.canonical) CHECK(g.table[0] == 0);

  TaxonomyReport report = taxonomy_census(orbits.canonical);
  CHECK(report.class_counts.at('a') == 1);
  CHECK(report.class_counts.at('b') == 21);
  CHECK(report.class_counts.at('c') == 3);
  CHECK(report.class_counts.at('d') == 6);
  CHECK(report.class_counts.at('e') == 30);
  CHECK(report.class_counts.at('f') == 24);
  CHECK(report.class_counts.at('g') == 8);
  CHECK(format_census(report) ==
        "a:1 b:21 c:3 d:6 e:30 f:24 g:8 orbits:93 total:744");
}

TEST_CASE("orbit decomposition rejects non-closed sets") {
  std::vector<DeterministicFunction> just_one{tst::det1_function()};
  CHECK_THROWS_AS(orbit_decompose(just_one), InvalidInputError);
}
