#include "acausal/compose.hpp"

#include "acausal/errors.hpp"

namespace acausal {

PartyProgram PartyProgram::zeroed(int d, int a_size, int x_size) {
  PartyProgram p;
  p.d = d;
  p.a_size = a_size;
  p.x_size = x_size;
  p.kernel.assign(std::size_t(x_size) * d * a_size * d, Rat(0));
  return p;
}

PartyProgram PartyProgram::deterministic(
    int d, int a_size, int x_size,
    const std::function<std::pair<int, int>(int, int)>& map) {
  PartyProgram p = zeroed(d, a_size, x_size);
  for (int a = 0; a < a_size; ++a)
    for (int i = 0; i < d; ++i) {
      auto [x, o] = map(a, i);
      if (x < 0 || x >= x_size || o < 0 || o >= d)
        throw InvalidInputError("deterministic program maps out of range");
      p.at(x, o, a, i) = 1;
    }
  return p;
}

void PartyProgram::validate() const {
  if (kernel.size() != std::size_t(x_size) * d * a_size * d)
    throw DimensionMismatchError("program kernel has the wrong size");
  for (int a = 0; a < a_size; ++a)
    for (int i = 0; i < d; ++i) {
      Rat sum = 0;
      for (int x = 0; x < x_size; ++x)
        for (int o = 0; o < d; ++o) {
          const Rat& v = at(x, o, a, i);
          if (v < 0) throw InvalidInputError("negative kernel entry");
          sum += v;
        }
      if (sum != 1)
        throw InvalidInputError("program kernel column (a=" +
                                std::to_string(a) + ", i=" +
                                std::to_string(i) + ") sums to " +
                                to_string(sum));
    }
}

std::size_t JointDistribution::x_dim() const {
  std::size_t dim = 1;
  for (int s : x_sizes) dim *= std::size_t(s);
  return dim;
}

std::size_t JointDistribution::env_dim() const {
  std::size_t dim = 1;
  for (int j = 0; j < n; ++j) dim *= std::size_t(d);
  return dim;
}

JointDistribution joint_distribution(const EnvironmentProcess& env,
                                     const std::vector<PartyProgram>& programs,
                                     const std::vector<int>& settings) {
  const Scenario& sc = env.scenario;
  if (programs.size() != std::size_t(sc.n))
    throw DimensionMismatchError("need one program per party");
  if (settings.size() != std::size_t(sc.n))
    throw DimensionMismatchError("need one setting per party");
  for (int j = 0; j < sc.n; ++j) {
    if (programs[j].d != sc.d)
      throw DimensionMismatchError("program alphabet does not match scenario");
    if (settings[j] < 0 || settings[j] >= programs[j].a_size)
      throw InvalidInputError("setting out of range for party " +
                              std::to_string(j));
  }

  JointDistribution dist;
  dist.n = sc.n;
  dist.d = sc.d;
  for (const auto& p : programs) dist.x_sizes.push_back(p.x_size);
  const std::size_t env_dim = sc.joint_dim();
  const std::size_t x_dim = dist.x_dim();
  dist.table.assign(x_dim * env_dim * env_dim, Rat(0));

  std::vector<int> xd(sc.n), id(sc.n), od(sc.n);
  Rat total = 0;
  for (std::size_t x = 0; x < x_dim; ++x) {
    std::size_t rest = x;
    for (int j = sc.n - 1; j >= 0; --j) {
      xd[j] = int(rest % std::size_t(dist.x_sizes[j]));
      rest /= std::size_t(dist.x_sizes[j]);
    }
    for (std::size_t i = 0; i < env_dim; ++i) {
      std::size_t ri = i;
      for (int j = sc.n - 1; j >= 0; --j) {
        id[j] = int(ri % std::size_t(sc.d));
        ri /= std::size_t(sc.d);
      }
      for (std::size_t o = 0; o < env_dim; ++o) {
        const Rat& e = env.matrix(i, o);
        if (e == 0) continue;
        std::size_t ro = o;
        for (int j = sc.n - 1; j >= 0; --j) {
          od[j] = int(ro % std::size_t(sc.d));
          ro /= std::size_t(sc.d);
        }
        Rat value = e;
        for (int j = 0; j < sc.n && value != 0; ++j)
          value *= programs[j].at(xd[j], od[j], settings[j], id[j]);
        if (value == 0) continue;
        dist.table[(x * env_dim + i) * env_dim + o] = value;
        total += value;
      }
    }
  }
  if (total != 1)
    throw InconsistencyError(
        "composed distribution sums to " + to_string(total) +
        ", not 1: the environment is inconsistent for these operations");
  return dist;
}

MarginalTable marginal(const JointDistribution& dist,
                       const std::vector<bool>& keep) {
  if (keep.size() != std::size_t(3 * dist.n))
    throw DimensionMismatchError("keep mask must have 3n flags");
  std::vector<int> all_sizes;
  for (int s : dist.x_sizes) all_sizes.push_back(s);
  for (int j = 0; j < 2 * dist.n; ++j) all_sizes.push_back(dist.d);

  MarginalTable out;
  std::size_t out_dim = 1;
  for (std::size_t v = 0; v < keep.size(); ++v)
    if (keep[v]) {
      out.sizes.push_back(all_sizes[v]);
      out_dim *= std::size_t(all_sizes[v]);
    }
  out.values.assign(out_dim, Rat(0));

  const std::size_t env_dim = dist.env_dim();
  std::vector<int> digits(keep.size());
  for (std::size_t x = 0; x < dist.x_dim(); ++x)
    for (std::size_t i = 0; i < env_dim; ++i)
      for (std::size_t o = 0; o < env_dim; ++o) {
        const Rat& v = dist.at(x, i, o);
        if (v == 0) continue;
        std::size_t rx = x, ri = i, ro = o;
        for (int j = dist.n - 1; j >= 0; --j) {
          digits[j] = int(rx % std::size_t(dist.x_sizes[j]));
          rx /= std::size_t(dist.x_sizes[j]);
          digits[dist.n + j] = int(ri % std::size_t(dist.d));
          ri /= std::size_t(dist.d);
          digits[2 * dist.n + j] = int(ro % std::size_t(dist.d));
          ro /= std::size_t(dist.d);
        }
        std::size_t slot = 0;
        for (std::size_t var = 0; var < keep.size(); ++var)
          if (keep[var])
            slot = slot * std::size_t(all_sizes[var]) +
                   std::size_t(digits[var]);
        out.values[slot] += v;
      }
  return out;
}

}  // namespace acausal
