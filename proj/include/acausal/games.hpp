#pragma once

#include <iosfwd>
#include <vector>

#include "acausal/compose.hpp"
#include "acausal/scenario.hpp"

namespace acausal {

// A multiparty guessing game: per-party random settings a, an optional
// shared input m, a winning predicate on (a, m, x), and an exact input
// distribution over (a, m). Guesses live in the same alphabet d.
struct Game {
  int n = 1;
  int d = 2;
  int m_size = 1;
  // predicate[(a_joint * m_size + m) * d^n + x_joint]
  std::vector<char> predicate;
  // input_distribution[a_joint * m_size + m], sums to 1
  std::vector<Rat> input_distribution;

  std::size_t joint_dim() const;
  bool wins(std::size_t a_joint, int m, std::size_t x_joint) const {
    return predicate[(a_joint * m_size + m) * joint_dim() + x_joint] != 0;
  }
  void validate() const;
};

enum class OrderModel { kFixed, kAdaptive };

// A deterministic communication strategy with a predefined causal order
// and full-information forwarding. `guesses` records the realized guess
// profile per (a, m); it is measurable w.r.t. the schedule by
// construction and certifies the reported value.
struct CausalStrategy {
  OrderModel model = OrderModel::kFixed;
  std::vector<int> fixed_order;                  // kFixed
  int first_party = 0;                           // kAdaptive
  std::vector<std::vector<int>> adaptive_orders;  // [m * d + a_first] -> rest
  std::vector<std::size_t> guesses;               // [a_joint * m_size + m] -> x
};

// The game induced by a deterministic process where every party's target
// depends on all other parties: win iff x equals g(a) read digit-wise.
// Errors when some party's target is constant in another party's input.
Game game_from_process(const DeterministicFunction& g);

// Success probability of playing `game` through the environment with the
// given programs. Program settings are composite: setting = a_j * m_size + m.
Rat eval_noncausal(const Game& game, const EnvironmentProcess& env,
                   const std::vector<PartyProgram>& programs);

// Exact maximum over all deterministic strategies of the chosen order
// model with unrestricted forward communication. In the fixed model one
// permutation serves every (a, m); in the adaptive model the first party
// is fixed and the order of the rest may depend on its setting and m.
std::pair<Rat, CausalStrategy> causal_max(const Game& game, OrderModel model);

// Recomputes the value certified by a strategy's guess profile.
Rat strategy_value(const Game& game, const CausalStrategy& strategy);

// 1 - 1/d^n, the generic bound for games produced by game_from_process.
Rat generic_causal_bound(const Game& game);

// The two worked examples: ex1 (parity of the other two parties' settings,
// selected by a shared trit) and ex2 (guess-your-neighbours-input with a
// majority-selected direction). Three binary parties each.
Game builtin_ex1();
Game builtin_ex2();

// Canonical winning programs without predefined order.
std::vector<PartyProgram> forward_programs(int n, int d, int m_size = 1);
std::vector<PartyProgram> ex1_noncausal_programs();

// Game description file: header "n d m_size", winning tuples
// "a_0 ... a_{n-1} m : x_0 ... x_{n-1}", then an optional section
// starting with the word "distribution" listing "a_0 ... a_{n-1} m : p/q"
// (uniform if omitted). '#' starts a comment.
Game read_game(std::istream& in);
void write_game(std::ostream& out, const Game& game);
Game read_game_file(const std::string& path);

}  // namespace acausal
