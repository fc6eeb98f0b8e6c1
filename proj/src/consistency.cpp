#include "acausal/consistency.hpp"

#include "acausal/errors.hpp"

namespace acausal {

namespace {

// Joint lookup table of a tuple of local maps: i -> (f_0(i_0),...,f_{n-1}(i_{n-1})).
std::vector<JointIndex> joint_table(const Scenario& sc,
                                    const std::vector<const std::vector<int>*>& tables) {
  std::size_t dim = sc.joint_dim();
  std::vector<JointIndex> jf(dim);
  for (JointIndex i = 0; i < dim; ++i) {
    JointIndex rest = i;
    JointIndex mapped = 0;
    std::size_t scale = dim / std::size_t(sc.d);
    // walk digits most significant first
    for (int j = 0; j < sc.n; ++j) {
      int digit = int(rest / scale);
      rest %= scale;
      mapped = mapped * std::size_t(sc.d) + std::size_t((*tables[j])[digit]);
      if (j + 1 < sc.n) scale /= std::size_t(sc.d);
    }
    jf[i] = mapped;
  }
  return jf;
}

// Calls visit(tuple) for every n-tuple over the family, in odometer order.
template <typename Visit>
bool for_each_tuple(int n, std::size_t family_size, Visit visit) {
  std::vector<std::size_t> idx(n, 0);
  while (true) {
    if (!visit(idx)) return false;
    int j = n - 1;
    while (j >= 0 && ++idx[j] == family_size) idx[j--] = 0;
    if (j < 0) return true;
  }
}

}  // namespace

ConsistencyVerdict check_total_probability(
    const EnvironmentProcess& env,
    const std::vector<DeterministicLocalOp>& family) {
  if (family.empty()) throw InvalidInputError("empty operation family");
  for (const auto& op : family)
    if (op.d != env.scenario.d)
      throw DimensionMismatchError(
          "operation alphabet does not match the scenario");
  const Scenario& sc = env.scenario;
  std::size_t dim = sc.joint_dim();
  ConsistencyVerdict verdict;
  for_each_tuple(sc.n, family.size(), [&](const std::vector<std::size_t>& idx) {
    std::vector<const std::vector<int>*> tables(sc.n);
    for (int j = 0; j < sc.n; ++j) tables[j] = &family[idx[j]].table;
    std::vector<JointIndex> jf = joint_table(sc, tables);
    // Tr(E (D_0 x ... x D_{n-1})) = sum_i E[i, f(i)]
    Rat t = 0;
    for (JointIndex i = 0; i < dim; ++i) t += env.matrix(i, jf[i]);
    if (t != 1) {
      verdict.consistent = false;
      ConsistencyVerdict::TraceWitness w;
      for (int j = 0; j < sc.n; ++j) w.ops.push_back(family[idx[j]]);
      w.trace = t;
      verdict.trace_witness = std::move(w);
      return false;
    }
    return true;
  });
  return verdict;
}

ConsistencyVerdict check_nonnegativity(const RatMatrix& candidate) {
  if (candidate.rows() != candidate.cols())
    throw DimensionMismatchError("environment candidate must be square");
  ConsistencyVerdict verdict;
  for (std::size_t i = 0; i < candidate.rows(); ++i)
    for (std::size_t j = 0; j < candidate.cols(); ++j)
      if (candidate(i, j) < 0) {
        verdict.consistent = false;
        verdict.negative_witness = {i, j, candidate(i, j)};
        return verdict;
      }
  return verdict;
}

ConsistencyVerdict is_consistent(const EnvironmentProcess& env,
                                 CheckMode mode) {
  ConsistencyVerdict nn = check_nonnegativity(env.matrix);
  if (!nn.consistent) return nn;
  auto family = mode == CheckMode::kSufficientFamily
                    ? sufficient_family(env.scenario.d)
                    : all_det_local_ops(env.scenario.d);
  return check_total_probability(env, family);
}

std::size_t fixed_point_count(const DeterministicFunction& g,
                              const std::vector<DeterministicLocalOp>& ops) {
  const Scenario& sc = g.scenario;
  if (ops.size() != std::size_t(sc.n))
    throw DimensionMismatchError("need one local operation per party");
  for (const auto& op : ops)
    if (op.d != sc.d)
      throw DimensionMismatchError(
          "operation alphabet does not match the scenario");
  std::vector<const std::vector<int>*> tables(sc.n);
  for (int j = 0; j < sc.n; ++j) tables[j] = &ops[j].table;
  std::vector<JointIndex> jf = joint_table(sc, tables);
  std::size_t count = 0;
  for (JointIndex i = 0; i < sc.joint_dim(); ++i)
    if (g.table[jf[i]] == i) ++count;
  return count;
}

bool is_consistent_deterministic(const DeterministicFunction& g,
                                 CheckMode mode) {
  const Scenario& sc = g.scenario;
  auto family = mode == CheckMode::kSufficientFamily
                    ? sufficient_family(sc.d)
                    : all_det_local_ops(sc.d);
  std::vector<DeterministicLocalOp> ops(sc.n, family[0]);
  return for_each_tuple(sc.n, family.size(),
                        [&](const std::vector<std::size_t>& idx) {
                          for (int j = 0; j < sc.n; ++j) ops[j] = family[idx[j]];
                          return fixed_point_count(g, ops) == 1;
                        });
}

}  // namespace acausal
