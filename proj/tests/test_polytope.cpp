#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "acausal/consistency.hpp"
#include "acausal/errors.hpp"
#include "acausal/polytope.hpp"
#include "helpers.hpp"

using namespace acausal;
namespace tst = acausal::testing;

TEST_CASE("dimension and facet counts at small sizes") {
  struct Row {
    int n, d;
    std::size_t dim, facets;
  };
  for (Row row : {Row{1, 2, 1, 4}, Row{2, 2, 7, 16}, Row{3, 2, 37, 64},
                  Row{1, 3, 2, 9}, Row{2, 3, 81 - 49, 81}}) {
    HPolytope p = build_hrep(Scenario(row.n, row.d));
    CHECK(polytope_dimension(p) == row.dim);
    CHECK(p.nonneg_count == row.facets);
    CHECK(p.eq_lhs.rows() ==
          std::vector<Rat>(p.eq_rhs.begin(), p.eq_rhs.end()).size());
    for (const Rat& r : p.eq_rhs) CHECK(r == 1);
  }
}

TEST_CASE("single-party polytope is the segment between the two constants") {
  auto vs = enumerate_vertices_dd(build_hrep(Scenario(1, 2)));
  REQUIRE(vs.size() == 2);
  for (const auto& v : vs) CHECK(v.deterministic);
  // Constant-1 and constant-0 preparations (lexicographic output order),
  // x[o*2+i] = E(i,o).
  CHECK(vs[0].point == RatVector{Rat(0), Rat(1), Rat(0), Rat(1)});
  CHECK(vs[1].point == RatVector{Rat(1), Rat(0), Rat(1), Rat(0)});
}

TEST_CASE("two-party vertices are exactly the 12 printed processes") {
  auto vs = enumerate_vertices_dd(build_hrep(Scenario(2, 2)));
  REQUIRE(vs.size() == 12);
  std::vector<RatVector> expected;
  for (int k = 0; k < 12; ++k)
    expected.push_back(vectorize(
        read_process_file(tst::fixture("e" + std::to_string(k) + ".process"))));
  std::sort(expected.begin(), expected.end());
  std::vector<RatVector> actual;
  for (const auto& v : vs) {
    CHECK(v.deterministic);
    actual.push_back(v.point);
  }
  std::sort(actual.begin(), actual.end());
  CHECK(actual == expected);
}

TEST_CASE("deterministic enumeration matches the 0-1 DD vertices at (2,2)") {
  Scenario sc(2, 2);
  auto dets = enumerate_deterministic_vertices(sc);
  CHECK(dets.size() == 12);
  for (const auto& g : dets) CHECK(is_consistent_deterministic(g));
  // Threaded run must produce byte-identical output order.
  EnumOptions opts;
  opts.threads = 4;
  CHECK(enumerate_deterministic_vertices(sc, opts) == dets);
}

TEST_CASE("three-party deterministic census has 744 members") {
  auto dets = enumerate_deterministic_vertices(Scenario(3, 2));
  CHECK(dets.size() == 744);
}

TEST_CASE("membership and vertex certificates") {
  Scenario sc(2, 2);
  HPolytope p = build_hrep(sc);
  auto vs = enumerate_vertices_dd(p);
  for (const auto& v : vs) {
    CHECK(contains(p, v.point));
    CHECK(is_vertex(p, v.point));
  }
  // The barycenter of two vertices is inside but not a vertex.
  RatVector mid(vs[0].point.size());
  for (std::size_t j = 0; j < mid.size(); ++j)
    mid[j] = (vs[0].point[j] + vs[1].point[j]) / 2;
  CHECK(contains(p, mid));
  CHECK_FALSE(is_vertex(p, mid));
  // A point violating nonnegativity is outside.
  RatVector out = vs[0].point;
  out[0] -= 2;
  CHECK_FALSE(contains(p, out));
}

TEST_CASE("ex1 is inside the (3,2) polytope, circular channels are not") {
  HPolytope p = build_hrep(Scenario(3, 2));
  CHECK(contains(p, vectorize(read_process_file(tst::fixture("ex1.process")))));
  CHECK(is_vertex(p, vectorize(read_process_file(tst::fixture("ex1.process")))));
  RatVector circ =
      vectorize(det_function_to_process(tst::circular_channel(false)));
  CHECK_FALSE(contains(p, circ));
}

TEST_CASE("vertex output formats") {
  auto vs = enumerate_vertices_dd(build_hrep(Scenario(1, 2)));
  std::ostringstream native;
  write_vertices(native, vs);
  CHECK(native.str().find("1 0 1 0") != std::string::npos);
  std::ostringstream vrep;
  write_cdd_vrep(vrep, vs);
  CHECK(vrep.str().find("V-representation") != std::string::npos);
  CHECK(vrep.str().find("begin") != std::string::npos);
  std::ostringstream hrep;
  write_cdd_hrep(hrep, build_hrep(Scenario(1, 2)));
  CHECK(hrep.str().find("H-representation") != std::string::npos);
  CHECK(hrep.str().find("linearity") != std::string::npos);
}

TEST_CASE("budget stops the double description without partial output") {
  EnumOptions opts;
  opts.budget_seconds = 0.0;
  CHECK_THROWS_AS(enumerate_vertices_dd(build_hrep(Scenario(2, 2)), opts),
                  BudgetExceededError);
}
