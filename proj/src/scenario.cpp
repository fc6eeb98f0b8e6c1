#include "acausal/scenario.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "acausal/errors.hpp"

namespace acausal {

Scenario::Scenario(int parties, int alphabet) : n(parties), d(alphabet) {
  if (n < 1) throw InvalidInputError("need at least one party");
  if (d < 2) throw InvalidInputError("local alphabet size must be >= 2");
  // joint_dim() validates that d^n is addressable
  (void)joint_dim();
}

std::size_t Scenario::joint_dim() const {
  std::size_t dim = 1;
  for (int j = 0; j < n; ++j) {
    if (dim > std::numeric_limits<std::size_t>::max() / std::size_t(d))
      throw InvalidInputError("joint dimension d^n overflows");
    dim *= std::size_t(d);
  }
  return dim;
}

JointIndex joint_encode(const Scenario& sc, const std::vector<int>& digits) {
  if (digits.size() != std::size_t(sc.n))
    throw InvalidInputError("expected " + std::to_string(sc.n) + " digits");
  JointIndex value = 0;
  for (int digit : digits) {
    if (digit < 0 || digit >= sc.d)
      throw InvalidInputError("digit " + std::to_string(digit) +
                              " out of range [0," + std::to_string(sc.d) +
                              ")");
    value = value * std::size_t(sc.d) + std::size_t(digit);
  }
  return value;
}

std::vector<int> joint_decode(const Scenario& sc, JointIndex idx) {
  if (idx >= sc.joint_dim())
    throw InvalidInputError("joint index " + std::to_string(idx) +
                            " out of range");
  std::vector<int> digits(sc.n);
  for (int j = sc.n - 1; j >= 0; --j) {
    digits[j] = int(idx % std::size_t(sc.d));
    idx /= std::size_t(sc.d);
  }
  return digits;
}

EnvironmentProcess::EnvironmentProcess(Scenario sc, RatMatrix m)
    : scenario(sc), matrix(std::move(m)) {
  std::size_t dim = scenario.joint_dim();
  if (matrix.rows() != dim || matrix.cols() != dim)
    throw DimensionMismatchError("environment matrix must be " +
                                 std::to_string(dim) + "x" +
                                 std::to_string(dim));
  for (std::size_t o = 0; o < dim; ++o) {
    Rat sum = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      if (matrix(i, o) < 0)
        throw InvalidInputError("negative entry at (" + std::to_string(i) +
                                "," + std::to_string(o) + ")");
      sum += matrix(i, o);
    }
    if (sum != 1)
      throw InvalidInputError("column " + std::to_string(o) + " sums to " +
                              to_string(sum) + ", not 1");
  }
}

LocalOperation det_local_matrix(const DeterministicLocalOp& op) {
  if (op.table.size() != std::size_t(op.d))
    throw InvalidInputError("deterministic op table must have d entries");
  RatMatrix m(op.d, op.d);
  for (int i = 0; i < op.d; ++i) {
    int out = op.table[i];
    if (out < 0 || out >= op.d)
      throw InvalidInputError("deterministic op value out of range");
    m(out, i) = 1;
  }
  return LocalOperation{op.d, std::move(m)};
}

std::vector<DeterministicLocalOp> sufficient_family(int d) {
  if (d < 2) throw InvalidInputError("alphabet size must be >= 2");
  std::vector<DeterministicLocalOp> family;
  // D_{i,0} collapses to the constant-0 map for every i; emit it once.
  family.push_back({d, std::vector<int>(d, 0)});
  // Descending i puts D_{d-1,d-1} (the identity when d = 2) ahead of the
  // others, so violation witnesses prefer identity-heavy tuples.
  for (int i = d - 1; i >= 0; --i)
    for (int j = 1; j < d; ++j) {
      std::vector<int> table(d, 0);
      table[i] = j;
      family.push_back({d, std::move(table)});
    }
  return family;
}

std::vector<DeterministicLocalOp> all_det_local_ops(int d) {
  if (d < 2) throw InvalidInputError("alphabet size must be >= 2");
  if (d > 6)
    throw BudgetExceededError(
        "enumerating all d^d deterministic operations is capped at d <= 6");
  std::size_t count = 1;
  for (int i = 0; i < d; ++i) count *= std::size_t(d);
  std::vector<DeterministicLocalOp> ops;
  ops.reserve(count);
  std::vector<int> table(d, 0);
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t rest = k;
    for (int i = d - 1; i >= 0; --i) {
      table[i] = int(rest % std::size_t(d));
      rest /= std::size_t(d);
    }
    ops.push_back({d, table});
  }
  return ops;
}

EnvironmentProcess det_function_to_process(const DeterministicFunction& f) {
  std::size_t dim = f.scenario.joint_dim();
  if (f.table.size() != dim)
    throw InvalidInputError("function table must have d^n entries");
  RatMatrix m(dim, dim);
  for (std::size_t o = 0; o < dim; ++o) {
    if (f.table[o] >= dim)
      throw InvalidInputError("function value out of range");
    m(f.table[o], o) = 1;
  }
  return EnvironmentProcess(f.scenario, std::move(m));
}

namespace {

// Reads the next non-comment, non-blank line.
bool next_data_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto pos = line.find('#');
    if (pos != std::string::npos) line.erase(pos);
    std::istringstream probe(line);
    std::string word;
    if (probe >> word) return true;
  }
  return false;
}

}  // namespace

std::pair<Scenario, RatMatrix> read_candidate(std::istream& in) {
  std::string line;
  if (!next_data_line(in, line))
    throw InvalidInputError("process file is empty");
  std::istringstream header(line);
  int n = 0, d = 0;
  if (!(header >> n >> d))
    throw InvalidInputError("process file header must be 'n d'");
  Scenario sc(n, d);
  std::size_t dim = sc.joint_dim();
  RatMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!next_data_line(in, line))
      throw InvalidInputError("process file ends after " + std::to_string(i) +
                              " of " + std::to_string(dim) + " rows");
    std::istringstream row(line);
    std::string word;
    for (std::size_t o = 0; o < dim; ++o) {
      if (!(row >> word))
        throw InvalidInputError("row " + std::to_string(i) + " has fewer than " +
                                std::to_string(dim) + " entries");
      m(i, o) = parse_rational(word);
    }
    if (row >> word)
      throw InvalidInputError("row " + std::to_string(i) +
                              " has trailing entries");
  }
  return {sc, std::move(m)};
}

EnvironmentProcess read_process(std::istream& in) {
  auto [sc, m] = read_candidate(in);
  return EnvironmentProcess(sc, std::move(m));
}

void write_process(std::ostream& out, const EnvironmentProcess& env) {
  out << env.scenario.n << " " << env.scenario.d << "\n";
  std::size_t dim = env.scenario.joint_dim();
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t o = 0; o < dim; ++o) {
      if (o) out << " ";
      out << to_string(env.matrix(i, o));
    }
    out << "\n";
  }
}

EnvironmentProcess read_process_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open process file: " + path);
  return read_process(in);
}

std::pair<Scenario, RatMatrix> read_candidate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open process file: " + path);
  return read_candidate(in);
}

}  // namespace acausal
