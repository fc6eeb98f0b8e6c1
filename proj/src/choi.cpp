#include "acausal/choi.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "acausal/errors.hpp"

namespace acausal {

void DiagonalProcessMatrix::validate() const {
  std::size_t dim = scenario.joint_dim();
  if (diag.size() != dim * dim)
    throw DimensionMismatchError("diagonal table has the wrong size");
  for (std::size_t k = 0; k < dim; ++k) {
    Rat sum = 0;
    for (std::size_t m = 0; m < dim; ++m) {
      const Rat& v = at(k, m);
      if (v < 0)
        throw InconsistencyError("negative diagonal entry at (" +
                                 std::to_string(k) + ", " + std::to_string(m) +
                                 ")");
      sum += v;
    }
    if (sum != 1)
      throw InconsistencyError("row " + std::to_string(k) +
                               " of the diagonal sums to " + to_string(sum));
  }
}

void DiagonalLocalMap::validate() const {
  if (d < 2 || diag.size() != std::size_t(d) * d)
    throw DimensionMismatchError("diagonal local map has the wrong size");
  for (int kp = 0; kp < d; ++kp) {
    Rat sum = 0;
    for (int mp = 0; mp < d; ++mp) {
      if (at(mp, kp) < 0)
        throw InconsistencyError("negative local-map entry");
      sum += at(mp, kp);
    }
    if (sum != 1)
      throw InconsistencyError("local-map column " + std::to_string(kp) +
                               " sums to " + to_string(sum));
  }
}

DiagonalProcessMatrix env_to_process_matrix(const EnvironmentProcess& env) {
  std::size_t dim = env.scenario.joint_dim();
  DiagonalProcessMatrix w;
  w.scenario = env.scenario;
  w.diag.assign(dim * dim, Rat(0));
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t m = 0; m < dim; ++m)
      w.diag[k * dim + m] = env.matrix(m, k);
  return w;
}

EnvironmentProcess process_matrix_to_env(const DiagonalProcessMatrix& w) {
  w.validate();
  std::size_t dim = w.scenario.joint_dim();
  RatMatrix m(dim, dim);
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t i = 0; i < dim; ++i) m(i, k) = w.at(k, i);
  return EnvironmentProcess(w.scenario, std::move(m));
}

DiagonalLocalMap local_to_diagonal_map(const LocalOperation& op) {
  DiagonalLocalMap a;
  a.d = op.d;
  a.diag.assign(std::size_t(op.d) * op.d, Rat(0));
  for (int mp = 0; mp < op.d; ++mp)
    for (int kp = 0; kp < op.d; ++kp)
      a.diag[std::size_t(mp) * op.d + kp] = op.matrix(mp, kp);
  a.validate();
  return a;
}

Rat pairing_trace(const DiagonalProcessMatrix& w,
                  const std::vector<DiagonalLocalMap>& a) {
  const Scenario& sc = w.scenario;
  if (a.size() != std::size_t(sc.n))
    throw DimensionMismatchError("need one local map per party");
  for (const auto& map : a)
    if (map.d != sc.d)
      throw DimensionMismatchError("local map alphabet mismatch");
  std::size_t dim = sc.joint_dim();
  Rat total = 0;
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t m = 0; m < dim; ++m) {
      const Rat& wv = w.at(k, m);
      if (wv == 0) continue;
      // The party-j factor pairs its incoming leg k'_j = m_j with its
      // outgoing leg m'_j = k_j.
      Rat prod = wv;
      std::size_t kr = k, mr = m;
      for (int j = sc.n - 1; j >= 0 && prod != 0; --j) {
        int kj = int(kr % std::size_t(sc.d));
        int mj = int(mr % std::size_t(sc.d));
        kr /= std::size_t(sc.d);
        mr /= std::size_t(sc.d);
        prod *= a[std::size_t(j)].at(kj, mj);
      }
      total += prod;
    }
  return total;
}

void write_triples(std::ostream& out, const DiagonalProcessMatrix& w) {
  std::size_t dim = w.scenario.joint_dim();
  for (std::size_t k = 0; k < dim; ++k)
    for (std::size_t m = 0; m < dim; ++m)
      if (w.at(k, m) != 0)
        out << k << " " << m << " " << to_string(w.at(k, m)) << "\n";
}

DiagonalProcessMatrix read_triples(std::istream& in, const Scenario& sc) {
  std::size_t dim = sc.joint_dim();
  DiagonalProcessMatrix w;
  w.scenario = sc;
  w.diag.assign(dim * dim, Rat(0));
  std::string line;
  while (std::getline(in, line)) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    std::istringstream row(line);
    std::size_t k, m;
    std::string value;
    if (!(row >> k)) continue;
    if (!(row >> m >> value))
      throw InvalidInputError("malformed triple line: " + line);
    if (k >= dim || m >= dim)
      throw InvalidInputError("triple index out of range: " + line);
    w.diag[k * dim + m] = parse_rational(value);
  }
  w.validate();
  return w;
}

}  // namespace acausal
