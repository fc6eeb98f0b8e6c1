#include "acausal/classify.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

#include "acausal/errors.hpp"

namespace acausal {

DeterministicFunction conjugate_by_flips(const DeterministicFunction& g,
                                         const FlipPattern& l) {
  const Scenario& sc = g.scenario;
  if (sc.d != 2)
    throw InvalidInputError("flip conjugation is defined for d = 2 only");
  if (l.bits.size() != std::size_t(sc.n))
    throw DimensionMismatchError("flip pattern length must equal n");
  JointIndex mask = joint_encode(sc, l.bits);
  DeterministicFunction out{sc, std::vector<JointIndex>(g.table.size())};
  for (JointIndex o = 0; o < g.table.size(); ++o)
    out.table[o ^ mask] = g.table[o] ^ mask;
  return out;
}

JointIndex canonical_fixed_point(const DeterministicFunction& g) {
  JointIndex fixed = 0;
  std::size_t count = 0;
  for (JointIndex i = 0; i < g.table.size(); ++i)
    if (g.table[i] == i) {
      fixed = i;
      ++count;
    }
  if (count != 1)
    throw InconsistencyError("function has " + std::to_string(count) +
                             " fixed points under all-identity operations");
  return fixed;
}

OrbitDecomposition orbit_decompose(
    const std::vector<DeterministicFunction>& gs) {
  if (gs.empty()) return {};
  const Scenario& sc = gs[0].scenario;
  if (sc.d != 2)
    throw InvalidInputError("orbit decomposition is defined for d = 2 only");
  const std::size_t orbit_size = std::size_t(1) << sc.n;

  std::set<std::vector<JointIndex>> members;
  for (const auto& g : gs) members.insert(g.table);

  OrbitDecomposition result;
  std::set<std::vector<JointIndex>> visited;
  for (const auto& g : gs) {
    if (visited.count(g.table)) continue;
    std::vector<DeterministicFunction> orbit;
    std::optional<DeterministicFunction> canonical;
    for (std::size_t pattern = 0; pattern < orbit_size; ++pattern) {
      FlipPattern l{std::vector<int>(sc.n)};
      for (int j = 0; j < sc.n; ++j) l.bits[j] = int(pattern >> (sc.n - 1 - j)) & 1;
      DeterministicFunction conj = conjugate_by_flips(g, l);
      if (!members.count(conj.table))
        throw InvalidInputError(
            "input set is not closed under flip conjugation");
      if (visited.insert(conj.table).second) orbit.push_back(conj);
      if (conj.table[0] == 0) canonical = conj;
    }
    if (sc.n == 3 && orbit.size() != orbit_size)
      throw InternalCheckError("orbit of size " +
                               std::to_string(orbit.size()) +
                               " violates the full 2^n orbit structure");
    if (!canonical)
      throw InternalCheckError("orbit has no member fixing joint index 0");
    result.orbits.push_back(std::move(orbit));
    result.canonical.push_back(std::move(*canonical));
  }
  return result;
}

SignalingDigraph signaling_digraph(const DeterministicFunction& g) {
  const Scenario& sc = g.scenario;
  const std::size_t dim = sc.joint_dim();
  SignalingDigraph graph;
  graph.n = sc.n;
  // digit j of a joint index
  auto digit = [&](JointIndex v, int j) {
    std::size_t scale = 1;
    for (int t = sc.n - 1; t > j; --t) scale *= std::size_t(sc.d);
    return int(v / scale) % sc.d;
  };
  for (int k = 0; k < sc.n; ++k) {
    std::size_t stride = 1;
    for (int t = sc.n - 1; t > k; --t) stride *= std::size_t(sc.d);
    for (int j = 0; j < sc.n; ++j) {
      if (j == k) continue;
      bool depends = false;
      for (JointIndex o = 0; o < dim && !depends; ++o) {
        if (digit(o, k) != 0) continue;
        for (int v = 1; v < sc.d && !depends; ++v)
          if (digit(g.table[o], j) != digit(g.table[o + stride * v], j))
            depends = true;
      }
      if (depends) graph.edges.insert({k, j});
    }
  }
  for (int j = 0; j < sc.n; ++j) {
    bool incoming = false;
    for (const auto& [from, to] : graph.edges)
      if (to == j) incoming = true;
    if (!incoming) graph.constant_receivers.insert(j);
  }
  return graph;
}

char taxonomy_class(const DeterministicFunction& g) {
  const Scenario& sc = g.scenario;
  if (sc.n != 3 || sc.d != 2)
    throw InvalidInputError(
        "the taxonomy census is defined for three binary parties");
  SignalingDigraph graph = signaling_digraph(g);
  std::size_t nconst = graph.constant_receivers.size();
  if (nconst == 3) return 'a';
  if (nconst == 2) return 'b';
  if (nconst == 0) return 'g';

  // Exactly one constant receiver: split on how the other two depend on
  // each other.
  std::vector<int> others;
  for (int j = 0; j < 3; ++j)
    if (!graph.constant_receivers.count(j)) others.push_back(j);
  int p = others[0], q = others[1];
  bool pq = graph.edges.count({p, q}) > 0;
  bool qp = graph.edges.count({q, p}) > 0;
  if (pq && qp) return 'f';
  auto indegree = [&](int j) {
    std::size_t deg = 0;
    for (const auto& [from, to] : graph.edges)
      if (to == j) ++deg;
    return deg;
  };
  if (indegree(p) == 2 || indegree(q) == 2) return 'e';
  if (pq || qp) return 'd';
  return 'c';
}

TaxonomyReport taxonomy_census(
    const std::vector<DeterministicFunction>& canonical) {
  TaxonomyReport report;
  for (const auto& g : canonical) {
    if (canonical_fixed_point(g) != 0)
      throw InvalidInputError(
          "census input must fix joint index 0; found a representative that "
          "does not");
    ++report.class_counts[taxonomy_class(g)];
  }
  report.canonical_count = canonical.size();
  report.orbit_count = canonical.size();
  return report;
}

std::string format_census(const TaxonomyReport& report) {
  std::ostringstream out;
  for (char label = 'a'; label <= 'g'; ++label) {
    auto it = report.class_counts.find(label);
    std::size_t count = it == report.class_counts.end() ? 0 : it->second;
    out << label << ":" << count << " ";
  }
  out << "orbits:" << report.orbit_count;
  out << " total:" << report.orbit_count * 8;
  return out.str();
}

}  // namespace acausal
