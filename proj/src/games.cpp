#include "acausal/games.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "acausal/classify.hpp"
#include "acausal/errors.hpp"

namespace acausal {

std::size_t Game::joint_dim() const {
  std::size_t dim = 1;
  for (int j = 0; j < n; ++j) dim *= std::size_t(d);
  return dim;
}

void Game::validate() const {
  if (n < 1 || d < 2 || m_size < 1) throw InvalidInputError("malformed game");
  std::size_t dim = joint_dim();
  if (predicate.size() != dim * std::size_t(m_size) * dim)
    throw DimensionMismatchError("predicate table has the wrong size");
  if (input_distribution.size() != dim * std::size_t(m_size))
    throw DimensionMismatchError("input distribution has the wrong size");
  Rat sum = 0;
  for (const Rat& p : input_distribution) {
    if (p < 0) throw InvalidInputError("negative input probability");
    sum += p;
  }
  if (sum != 1)
    throw InvalidInputError("input distribution sums to " + to_string(sum));
}

Game game_from_process(const DeterministicFunction& g) {
  const Scenario& sc = g.scenario;
  SignalingDigraph graph = signaling_digraph(g);
  for (int i = 0; i < sc.n; ++i)
    for (int j = 0; j < sc.n; ++j)
      if (i != j && !graph.edges.count({j, i}))
        throw InvalidInputError(
            "party " + std::to_string(i) +
            "'s target does not depend on party " + std::to_string(j) +
            "'s input; the game construction requires full dependence");
  std::size_t dim = sc.joint_dim();
  Game game;
  game.n = sc.n;
  game.d = sc.d;
  game.m_size = 1;
  game.predicate.assign(dim * dim, 0);
  for (std::size_t a = 0; a < dim; ++a)
    game.predicate[a * dim + g.table[a]] = 1;
  game.input_distribution.assign(dim, Rat(1) / Rat(Int(dim)));
  game.validate();
  return game;
}

Rat eval_noncausal(const Game& game, const EnvironmentProcess& env,
                   const std::vector<PartyProgram>& programs) {
  game.validate();
  if (env.scenario.n != game.n || env.scenario.d != game.d)
    throw DimensionMismatchError("environment does not match the game");
  if (programs.size() != std::size_t(game.n))
    throw DimensionMismatchError("need one program per party");
  for (const auto& p : programs) {
    if (p.x_size != game.d)
      throw DimensionMismatchError("guess alphabet must equal d");
    if (p.a_size != game.d * game.m_size)
      throw DimensionMismatchError(
          "program setting alphabet must be d * m_size (composite setting)");
  }
  std::size_t dim = game.joint_dim();
  std::vector<bool> keep(std::size_t(3 * game.n), false);
  for (int j = 0; j < game.n; ++j) keep[j] = true;

  Rat success = 0;
  std::vector<int> settings(game.n);
  for (std::size_t a = 0; a < dim; ++a)
    for (int m = 0; m < game.m_size; ++m) {
      const Rat& weight = game.input_distribution[a * game.m_size + m];
      if (weight == 0) continue;
      std::size_t rest = a;
      for (int j = game.n - 1; j >= 0; --j) {
        settings[j] = int(rest % std::size_t(game.d)) * game.m_size + m;
        rest /= std::size_t(game.d);
      }
      JointDistribution dist = joint_distribution(env, programs, settings);
      MarginalTable guesses = marginal(dist, keep);
      Rat win = 0;
      for (std::size_t x = 0; x < guesses.values.size(); ++x)
        if (game.wins(a, m, x)) win += guesses.values[x];
      success += weight * win;
    }
  return success;
}

namespace {

// Exact optimization of deterministic full-information strategies along a
// party order, by recursion over the tree of setting prefixes. At depth p
// the next party sees its own setting and everything upstream, so the
// value is sum over its setting of the max over its guess.
class OrderSearch {
 public:
  OrderSearch(const Game& game, int m) : game_(game), m_(m) {}

  // Value of the subtree where parties order[0..p) have settings apre and
  // committed guesses xpre.
  Rat value(const std::vector<int>& order, std::size_t p,
            std::vector<int>& apre, std::vector<int>& xpre) const {
    if (p == std::size_t(game_.n)) return leaf(order, apre, xpre);
    Rat total = 0;
    for (int v = 0; v < game_.d; ++v) {
      apre.push_back(v);
      Rat best = 0;
      bool first = true;
      for (int x = 0; x < game_.d; ++x) {
        xpre.push_back(x);
        Rat candidate = value(order, p + 1, apre, xpre);
        xpre.pop_back();
        if (first || candidate > best) {
          best = candidate;
          first = false;
        }
      }
      apre.pop_back();
      total += best;
    }
    return total;
  }

  // First maximizing guess for the party at depth p, whose setting is
  // already the last entry of apre.
  int best_guess(const std::vector<int>& order, std::size_t p,
                 std::vector<int>& apre, std::vector<int>& xpre) const {
    Rat best = 0;
    int best_x = 0;
    bool first = true;
    for (int x = 0; x < game_.d; ++x) {
      xpre.push_back(x);
      Rat candidate = value(order, p, apre, xpre);
      xpre.pop_back();
      if (first || candidate > best) {
        best = candidate;
        best_x = x;
        first = false;
      }
    }
    return best_x;
  }

 private:
  Rat leaf(const std::vector<int>& order, const std::vector<int>& apre,
           const std::vector<int>& xpre) const {
    std::vector<int> a(game_.n), x(game_.n);
    for (int p = 0; p < game_.n; ++p) {
      a[order[p]] = apre[p];
      x[order[p]] = xpre[p];
    }
    std::size_t a_joint = 0, x_joint = 0;
    for (int j = 0; j < game_.n; ++j) {
      a_joint = a_joint * std::size_t(game_.d) + std::size_t(a[j]);
      x_joint = x_joint * std::size_t(game_.d) + std::size_t(x[j]);
    }
    if (!game_.wins(a_joint, m_, x_joint)) return 0;
    return game_.input_distribution[a_joint * game_.m_size + m_];
  }

  const Game& game_;
  int m_;
};

// Realized guess profile for one (a, m) under a given order, assuming
// every upstream party plays the DP-optimal guess.
std::size_t replay_guesses(const Game& game, int m,
                           const std::vector<int>& order, std::size_t a_joint,
                           std::vector<int>& apre, std::vector<int>& xpre) {
  OrderSearch search(game, m);
  std::vector<int> a_digits(game.n);
  std::size_t rest = a_joint;
  for (int j = game.n - 1; j >= 0; --j) {
    a_digits[j] = int(rest % std::size_t(game.d));
    rest /= std::size_t(game.d);
  }
  for (std::size_t p = apre.size(); p < std::size_t(game.n); ++p) {
    apre.push_back(a_digits[order[p]]);
    xpre.push_back(search.best_guess(order, p + 1, apre, xpre));
  }
  std::vector<int> x(game.n);
  for (int p = 0; p < game.n; ++p) x[order[p]] = xpre[p];
  std::size_t x_joint = 0;
  for (int j = 0; j < game.n; ++j)
    x_joint = x_joint * std::size_t(game.d) + std::size_t(x[j]);
  return x_joint;
}

}  // namespace

Rat strategy_value(const Game& game, const CausalStrategy& strategy) {
  std::size_t dim = game.joint_dim();
  Rat total = 0;
  for (std::size_t a = 0; a < dim; ++a)
    for (int m = 0; m < game.m_size; ++m)
      if (game.wins(a, m, strategy.guesses[a * game.m_size + m]))
        total += game.input_distribution[a * game.m_size + m];
  return total;
}

std::pair<Rat, CausalStrategy> causal_max(const Game& game, OrderModel model) {
  game.validate();
  if (game.n > 5)
    throw BudgetExceededError(
        "causal strategy search is budgeted for at most 5 parties");
  std::size_t dim = game.joint_dim();

  if (model == OrderModel::kFixed) {
    std::vector<int> order(game.n);
    std::iota(order.begin(), order.end(), 0);
    Rat best = -1;
    std::vector<int> best_order;
    do {
      Rat total = 0;
      for (int m = 0; m < game.m_size; ++m) {
        OrderSearch search(game, m);
        std::vector<int> apre, xpre;
        total += search.value(order, 0, apre, xpre);
      }
      if (total > best) {
        best = total;
        best_order = order;
      }
    } while (std::next_permutation(order.begin(), order.end()));

    CausalStrategy strategy;
    strategy.model = OrderModel::kFixed;
    strategy.fixed_order = best_order;
    strategy.guesses.assign(dim * std::size_t(game.m_size), 0);
    for (std::size_t a = 0; a < dim; ++a)
      for (int m = 0; m < game.m_size; ++m) {
        std::vector<int> apre, xpre;
        strategy.guesses[a * game.m_size + m] =
            replay_guesses(game, m, best_order, a, apre, xpre);
      }
    return {best, strategy};
  }

  // Adaptive: the first party never learns anything before acting, but the
  // order of the remaining parties may depend on its setting and on m.
  Rat best = -1;
  CausalStrategy strategy;
  strategy.model = OrderModel::kAdaptive;
  for (int k = 0; k < game.n; ++k) {
    Rat total = 0;
    std::vector<std::vector<int>> orders(std::size_t(game.m_size) * game.d);
    std::vector<int> first_guess(std::size_t(game.m_size) * game.d, 0);
    for (int m = 0; m < game.m_size; ++m)
      for (int v = 0; v < game.d; ++v) {
        std::vector<int> rest;
        for (int j = 0; j < game.n; ++j)
          if (j != k) rest.push_back(j);
        Rat branch_best = -1;
        std::vector<int> branch_order;
        int branch_x = 0;
        do {
          std::vector<int> order{k};
          order.insert(order.end(), rest.begin(), rest.end());
          OrderSearch search(game, m);
          for (int x = 0; x < game.d; ++x) {
            std::vector<int> apre{v}, xpre{x};
            Rat candidate = search.value(order, 1, apre, xpre);
            if (candidate > branch_best) {
              branch_best = candidate;
              branch_order = order;
              branch_x = x;
            }
          }
        } while (std::next_permutation(rest.begin(), rest.end()));
        orders[std::size_t(m) * game.d + v] = branch_order;
        first_guess[std::size_t(m) * game.d + v] = branch_x;
        total += branch_best;
      }
    if (total > best) {
      best = total;
      strategy.first_party = k;
      strategy.adaptive_orders.assign(std::size_t(game.m_size) * game.d, {});
      strategy.guesses.assign(dim * std::size_t(game.m_size), 0);
      for (int m = 0; m < game.m_size; ++m)
        for (int v = 0; v < game.d; ++v)
          strategy.adaptive_orders[std::size_t(m) * game.d + v] =
              std::vector<int>(orders[std::size_t(m) * game.d + v].begin() + 1,
                               orders[std::size_t(m) * game.d + v].end());
      for (std::size_t a = 0; a < dim; ++a)
        for (int m = 0; m < game.m_size; ++m) {
          std::vector<int> a_digits(game.n);
          std::size_t restv = a;
          for (int j = game.n - 1; j >= 0; --j) {
            a_digits[j] = int(restv % std::size_t(game.d));
            restv /= std::size_t(game.d);
          }
          int v = a_digits[k];
          const auto& order = orders[std::size_t(m) * game.d + v];
          std::vector<int> apre{v},
              xpre{first_guess[std::size_t(m) * game.d + v]};
          strategy.guesses[a * game.m_size + m] =
              replay_guesses(game, m, order, a, apre, xpre);
        }
    }
  }
  return {best, strategy};
}

Rat generic_causal_bound(const Game& game) {
  return Rat(1) - Rat(1) / Rat(Int(game.joint_dim()));
}

Game builtin_ex1() {
  Game game;
  game.n = 3;
  game.d = 2;
  game.m_size = 3;
  std::size_t dim = 8;
  game.predicate.assign(dim * 3 * dim, 0);
  for (std::size_t a = 0; a < dim; ++a) {
    int bits[3] = {int(a >> 2) & 1, int(a >> 1) & 1, int(a) & 1};
    for (int m = 0; m < 3; ++m) {
      int target = bits[(m + 1) % 3] ^ bits[(m + 2) % 3];
      for (std::size_t x = 0; x < dim; ++x) {
        int guess = int(x >> (2 - m)) & 1;
        if (guess == target) game.predicate[(a * 3 + m) * dim + x] = 1;
      }
    }
  }
  game.input_distribution.assign(dim * 3, Rat(1, 24));
  game.validate();
  return game;
}

Game builtin_ex2() {
  Game game;
  game.n = 3;
  game.d = 2;
  game.m_size = 1;
  std::size_t dim = 8;
  game.predicate.assign(dim * dim, 0);
  for (std::size_t a = 0; a < dim; ++a) {
    int av = int(a >> 2) & 1, bv = int(a >> 1) & 1, cv = int(a) & 1;
    int maj = (av + bv + cv >= 2) ? 1 : 0;
    int x, y, z;
    if (maj == 0) {
      x = cv;
      y = av;
      z = bv;
    } else {
      x = 1 - bv;
      y = 1 - cv;
      z = 1 - av;
    }
    std::size_t target = std::size_t(x << 2 | y << 1 | z);
    game.predicate[a * dim + target] = 1;
  }
  game.input_distribution.assign(dim, Rat(1, 8));
  game.validate();
  return game;
}

std::vector<PartyProgram> forward_programs(int n, int d, int m_size) {
  std::vector<PartyProgram> programs;
  for (int j = 0; j < n; ++j)
    programs.push_back(PartyProgram::deterministic(
        d, d * m_size, d, [m_size](int setting, int i) {
          return std::pair<int, int>{i, setting / m_size};
        }));
  return programs;
}

std::vector<PartyProgram> ex1_noncausal_programs() {
  std::vector<PartyProgram> programs;
  for (int j = 0; j < 3; ++j)
    programs.push_back(PartyProgram::deterministic(
        2, 6, 2, [j](int setting, int i) -> std::pair<int, int> {
          int a = setting / 3;
          int m = setting % 3;  // m selects the guessing party
          if (j == m) return {i, a};               // guess the received bit
          if (j == (m + 1) % 3) return {0, a};      // forward the setting
          return {0, a ^ i};                        // forward the parity
        }));
  return programs;
}

Game read_game(std::istream& in) {
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      auto pos = out.find('#');
      if (pos != std::string::npos) out.erase(pos);
      std::istringstream probe(out);
      std::string word;
      if (probe >> word) return true;
    }
    return false;
  };
  if (!next_line(line)) throw InvalidInputError("game file is empty");
  Game game;
  {
    std::istringstream header(line);
    if (!(header >> game.n >> game.d >> game.m_size))
      throw InvalidInputError("game file header must be 'n d m_size'");
    if (game.n < 1 || game.d < 2 || game.m_size < 1)
      throw InvalidInputError("bad game header values");
  }
  std::size_t dim = game.joint_dim();
  game.predicate.assign(dim * std::size_t(game.m_size) * dim, 0);
  game.input_distribution.assign(dim * std::size_t(game.m_size), Rat(0));

  bool in_distribution = false;
  bool any_distribution = false;
  while (next_line(line)) {
    std::istringstream row(line);
    std::string word;
    row >> word;
    if (word == "distribution") {
      in_distribution = true;
      continue;
    }
    std::vector<int> a_digits(game.n);
    a_digits[0] = std::stoi(word);
    for (int j = 1; j < game.n; ++j)
      if (!(row >> a_digits[j]))
        throw InvalidInputError("short game line: " + line);
    int m = 0;
    std::string sep;
    if (!(row >> m >> sep) || sep != ":")
      throw InvalidInputError("expected 'a_0 ... a_{n-1} m :' in: " + line);
    std::size_t a_joint = 0;
    for (int digit : a_digits) {
      if (digit < 0 || digit >= game.d)
        throw InvalidInputError("setting digit out of range in: " + line);
      a_joint = a_joint * std::size_t(game.d) + std::size_t(digit);
    }
    if (m < 0 || m >= game.m_size)
      throw InvalidInputError("shared input out of range in: " + line);
    if (in_distribution) {
      if (!(row >> word))
        throw InvalidInputError("missing probability in: " + line);
      game.input_distribution[a_joint * game.m_size + m] =
          parse_rational(word);
      any_distribution = true;
    } else {
      std::vector<int> x_digits(game.n);
      for (int j = 0; j < game.n; ++j)
        if (!(row >> x_digits[j]))
          throw InvalidInputError("short winning tuple in: " + line);
      std::size_t x_joint = 0;
      for (int digit : x_digits) {
        if (digit < 0 || digit >= game.d)
          throw InvalidInputError("guess digit out of range in: " + line);
        x_joint = x_joint * std::size_t(game.d) + std::size_t(digit);
      }
      game.predicate[(a_joint * game.m_size + m) * dim + x_joint] = 1;
    }
  }
  if (!any_distribution)
    game.input_distribution.assign(dim * std::size_t(game.m_size),
                                   Rat(1) / Rat(Int(dim * game.m_size)));
  game.validate();
  return game;
}

void write_game(std::ostream& out, const Game& game) {
  out << game.n << " " << game.d << " " << game.m_size << "\n";
  std::size_t dim = game.joint_dim();
  auto digits_of = [&](std::size_t joint) {
    std::vector<int> digits(game.n);
    for (int j = game.n - 1; j >= 0; --j) {
      digits[j] = int(joint % std::size_t(game.d));
      joint /= std::size_t(game.d);
    }
    return digits;
  };
  for (std::size_t a = 0; a < dim; ++a)
    for (int m = 0; m < game.m_size; ++m)
      for (std::size_t x = 0; x < dim; ++x) {
        if (!game.wins(a, m, x)) continue;
        for (int digit : digits_of(a)) out << digit << " ";
        out << m << " :";
        for (int digit : digits_of(x)) out << " " << digit;
        out << "\n";
      }
  out << "distribution\n";
  for (std::size_t a = 0; a < dim; ++a)
    for (int m = 0; m < game.m_size; ++m) {
      for (int digit : digits_of(a)) out << digit << " ";
      out << m << " : "
          << to_string(game.input_distribution[a * game.m_size + m]) << "\n";
    }
}

Game read_game_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open game file: " + path);
  return read_game(in);
}

}  // namespace acausal
