#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "ordrep/params.hpp"
#include "ordrep/poset.hpp"

namespace ordrep {

// A position in the two-player game: the challenger repeatedly proposes
// elements forced by the order structure, the defender grows u while trying
// to keep it disjoint from the fixed forbidden set v.
struct GamePosition {
  ElementSet u;
  ElementSet v;
};

// One challenger move:
//   up b     -- b above some member of u; the defender must add b.
//   meet A   -- A a nonempty subset of u, |A| < alpha, with a defined meet;
//               the defender must add the meet.
//   join B   -- B nonempty, |B| < beta, with a defined join lying in u;
//               the defender picks some member of B to add.
struct Move {
  enum class Kind : std::uint8_t { up, meet, join };
  Kind kind;
  int element = -1;   // up
  ElementSet set;     // meet / join

  bool operator==(const Move&) const = default;
};

// "up b", "meet {a,c}", "join {b,c}".
std::string format_move(const Poset& p, const Move& m);

// All legal challenger moves, deduplicated, in canonical order: up moves by
// element index, then meet moves by mask, then join moves by mask.
std::vector<Move> legal_moves(const Poset& p, const GamePosition& pos, Params prm);

// The positions reachable by the defender's admissible responses to mv.
// Throws std::invalid_argument if mv is not legal at pos.
std::vector<GamePosition> respond(const Poset& p, const GamePosition& pos, const Move& mv);

// How long the defender can hold out from a position.
class SurvivalDepth {
 public:
  static SurvivalDepth lost_at_0() { return SurvivalDepth(kLost); }
  static SurvivalDepth omega() { return SurvivalDepth(kOmega); }
  static SurvivalDepth rounds(int n) { return SurvivalDepth(n); }

  bool is_lost() const { return v_ == kLost; }
  bool is_omega() const { return v_ == kOmega; }
  bool is_finite() const { return v_ >= 0 && v_ != kOmega; }
  int rounds() const { return v_; }

  std::string to_string() const {
    if (is_lost()) return "lost-at-0";
    if (is_omega()) return "omega";
    return std::to_string(v_);
  }

  bool operator==(const SurvivalDepth&) const = default;

  static constexpr int kLost = -1;
  static constexpr int kOmega = 1 << 28;

 private:
  explicit SurvivalDepth(int v) : v_(v) {}
  int v_;
};

struct TraceStep {
  Move move;
  int added;  // the element the defender put into u
};

// Decides bounded and unbounded survival for games over one poset with fixed
// bounds. Caches move tables (shared across forbidden sets) and per-(u,v)
// results, so it may be reused across many queries. All queries are pure.
class GameSolver {
 public:
  GameSolver(const Poset& p, Params prm);

  // Whether the defender survives the first n rounds: u and v disjoint now
  // and, recursively, every challenger move admits a response surviving n-1.
  bool has_n_strategy(const GamePosition& pos, int n);

  // Whether the defender survives forever: the greatest fixpoint of the
  // safety operator over the positions reachable from pos.
  bool has_omega_strategy(const GamePosition& pos);

  // omega if has_omega_strategy; lost-at-0 if u meets v; otherwise the
  // largest n with an n-strategy.
  SurvivalDepth survival_depth(const GamePosition& pos);

  // Smallest d with has_n_strategy constant in n from d on. Never exceeds
  // the number of reachable u-sets.
  int stabilization_depth(const GamePosition& pos);

  // Number of u-sets reachable from u (independent of v).
  int reachable_count(ElementSet u);

  // Optimal play-out from a position of finite depth d: d+1 challenger moves
  // ending with the response that lands in v. Challenger moves minimize the
  // defender's best value; ties go to canonical move order.
  std::vector<TraceStep> forcing_trace(const GamePosition& pos);

  const Poset& poset() const { return poset_; }
  Params params() const { return params_; }

 private:
  // Moves the solver must answer: responses equal to u are never worse for
  // the defender than any alternative, so moves admitting one are dropped
  // and all kept successors grow u strictly.
  struct Obligation {
    Move move;
    std::vector<ElementSet> successors;
  };

  const std::vector<Obligation>& obligations(ElementSet u);
  int value(ElementSet u, ElementSet v);  // kLost / rounds / kOmega

  struct PerV {
    std::unordered_map<std::uint64_t, std::vector<char>> n_memo;  // u -> per-n tristate
    std::unordered_map<std::uint64_t, bool> omega;
    std::unordered_map<std::uint64_t, int> value;
  };
  PerV& for_v(ElementSet v) { return per_v_[v.bits()]; }

  const Poset& poset_;
  Params params_;
  std::unordered_map<std::uint64_t, std::vector<Obligation>> obligations_;
  std::unordered_map<std::uint64_t, PerV> per_v_;
};

// One-shot wrappers.
bool has_n_strategy(const Poset& p, const GamePosition& pos, Params prm, int n);
bool has_omega_strategy(const Poset& p, const GamePosition& pos, Params prm);
SurvivalDepth survival_depth(const Poset& p, const GamePosition& pos, Params prm);

// Whether the defender survives n rounds from ({a},{b}) for every a !<= b.
bool all_pairs_n_strategy(const Poset& p, Params prm, int n);

// Whether the defender survives forever from ({a},{b}) for every a !<= b.
// On finite posets this coincides with is_representable.
bool game_representable(const Poset& p, Params prm);

// Max over pairs a !<= b of the per-position stabilization depth.
int stabilization_depth(const Poset& p, Params prm);

}  // namespace ordrep
