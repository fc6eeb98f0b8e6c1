#pragma once

#include <random>
#include <string>
#include <vector>

#include "acausal/scenario.hpp"

namespace acausal::testing {

inline std::string fixture(const std::string& name) {
  return std::string(FIXTURES_DIR) + "/" + name;
}

// The three-party circular channel: party A receives what C fed in, B
// receives A's value, C receives B's value; `flip` negates every bit.
inline DeterministicFunction circular_channel(bool flip) {
  Scenario sc(3, 2);
  DeterministicFunction g{sc, std::vector<JointIndex>(8)};
  for (JointIndex o = 0; o < 8; ++o) {
    int oa = int(o >> 2) & 1, ob = int(o >> 1) & 1, oc = int(o) & 1;
    if (flip) {
      oa = 1 - oa;
      ob = 1 - ob;
      oc = 1 - oc;
    }
    g.table[o] = JointIndex(oc << 2 | oa << 1 | ob);
  }
  return g;
}

// The deterministic noncausal three-party process: each party receives
// the AND of one neighbour's value with the negation of the other's.
inline DeterministicFunction det1_function() {
  Scenario sc(3, 2);
  DeterministicFunction g{sc, std::vector<JointIndex>(8)};
  for (JointIndex o = 0; o < 8; ++o) {
    int oa = int(o >> 2) & 1, ob = int(o >> 1) & 1, oc = int(o) & 1;
    int ia = (1 - ob) & oc, ib = oa & (1 - oc), ic = (1 - oa) & ob;
    g.table[o] = JointIndex(ia << 2 | ib << 1 | ic);
  }
  return g;
}

inline Rat random_rational(std::mt19937_64& rng, int max_num = 8,
                           int max_den = 8) {
  std::uniform_int_distribution<int> num(0, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  return Rat(num(rng)) / Rat(den(rng));
}

// A random column-stochastic matrix: nonnegative rational columns
// normalized to sum 1.
inline RatMatrix random_stochastic(std::mt19937_64& rng, std::size_t dim) {
  RatMatrix m(dim, dim);
  for (std::size_t o = 0; o < dim; ++o) {
    Rat sum = 0;
    while (sum == 0) {
      sum = 0;
      for (std::size_t i = 0; i < dim; ++i) {
        m(i, o) = random_rational(rng);
        sum += m(i, o);
      }
    }
    for (std::size_t i = 0; i < dim; ++i) m(i, o) /= sum;
  }
  return m;
}

// A random convex mixture of logically consistent deterministic
// processes; always consistent by convexity.
inline EnvironmentProcess random_consistent_env(
    std::mt19937_64& rng, const std::vector<DeterministicFunction>& dets) {
  std::size_t dim = dets.front().scenario.joint_dim();
  std::uniform_int_distribution<std::size_t> pick(0, dets.size() - 1);
  std::uniform_int_distribution<int> weight(1, 9);
  RatMatrix m(dim, dim);
  Rat total = 0;
  std::vector<std::pair<std::size_t, Rat>> parts;
  for (int k = 0; k < 3; ++k) {
    Rat w(weight(rng));
    parts.emplace_back(pick(rng), w);
    total += w;
  }
  for (auto& [idx, w] : parts) {
    RatMatrix dm = det_function_to_process(dets[idx]).matrix;
    Rat coeff = w / total;
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c) m(r, c) += coeff * dm(r, c);
  }
  return EnvironmentProcess(dets.front().scenario, std::move(m));
}

}  // namespace acausal::testing
