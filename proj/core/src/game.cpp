#include "ordrep/game.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ordrep {

std::string format_move(const Poset& p, const Move& m) {
  switch (m.kind) {
    case Move::Kind::up:   return "up " + p.name(m.element);
    case Move::Kind::meet: return "meet " + format_set(p, m.set, ",");
    case Move::Kind::join: return "join " + format_set(p, m.set, ",");
  }
  return {};
}

std::vector<Move> legal_moves(const Poset& p, const GamePosition& pos, Params prm) {
  std::vector<Move> moves;
  const int n = p.size();
  const ElementSet u = pos.u;
  if (u.empty()) return moves;  // every move needs a member of u

  ElementSet above;
  for (int a : u) above |= p.up_set(a);
  for (int b : above) moves.push_back({Move::Kind::up, b, {}});

  const int alim = prm.alpha.size_limit(n);
  for (ElementSet a; ; a = a.next_subset_within(u)) {
    if (!a.empty() && a.count() < alim && p.meet_of(a))
      moves.push_back({Move::Kind::meet, -1, a});
    if (a == u) break;
  }

  const int blim = prm.beta.size_limit(n);
  const ElementSet all = p.carrier();
  for (ElementSet b; ; b = b.next_subset_within(all)) {
    if (!b.empty() && b.count() < blim) {
      if (auto j = p.join_of(b); j && u.contains(*j))
        moves.push_back({Move::Kind::join, -1, b});
    }
    if (b == all) break;
  }
  return moves;
}

std::vector<GamePosition> respond(const Poset& p, const GamePosition& pos, const Move& mv) {
  bool legal = false;
  switch (mv.kind) {
    case Move::Kind::up:
      legal = mv.element >= 0 && mv.element < p.size() &&
              (p.down_set(mv.element) & pos.u) != ElementSet{};
      break;
    case Move::Kind::meet:
      legal = !mv.set.empty() && mv.set.subset_of(pos.u) && p.meet_of(mv.set).has_value();
      break;
    case Move::Kind::join:
      if (!mv.set.empty() && mv.set.subset_of(p.carrier())) {
        auto j = p.join_of(mv.set);
        legal = j && pos.u.contains(*j);
      }
      break;
  }
  if (!legal) throw std::invalid_argument("illegal move");

  std::vector<GamePosition> out;
  switch (mv.kind) {
    case Move::Kind::up:
      out.push_back({pos.u.with(mv.element), pos.v});
      break;
    case Move::Kind::meet:
      out.push_back({pos.u.with(*p.meet_of(mv.set)), pos.v});
      break;
    case Move::Kind::join:
      for (int b : mv.set) out.push_back({pos.u.with(b), pos.v});
      break;
  }
  return out;
}

GameSolver::GameSolver(const Poset& p, Params prm) : poset_(p), params_(prm) {}

const std::vector<GameSolver::Obligation>& GameSolver::obligations(ElementSet u) {
  auto it = obligations_.find(u.bits());
  if (it != obligations_.end()) return it->second;

  std::vector<Obligation> obls;
  std::set<std::vector<std::uint64_t>> seen;
  for (const Move& mv : legal_moves(poset_, {u, {}}, params_)) {
    std::vector<ElementSet> succs;
    bool can_stay = false;
    switch (mv.kind) {
      case Move::Kind::up:
        if (u.contains(mv.element)) can_stay = true;
        else succs.push_back(u.with(mv.element));
        break;
      case Move::Kind::meet: {
        int m = *poset_.meet_of(mv.set);
        if (u.contains(m)) can_stay = true;
        else succs.push_back(u.with(m));
        break;
      }
      case Move::Kind::join:
        for (int b : mv.set) {
          if (u.contains(b)) { can_stay = true; break; }
          succs.push_back(u.with(b));
        }
        break;
    }
    if (can_stay) continue;  // the defender repeats u; no new constraint
    std::vector<std::uint64_t> key;
    for (ElementSet s : succs) key.push_back(s.bits());
    if (seen.insert(key).second) obls.push_back({mv, std::move(succs)});
  }
  return obligations_.emplace(u.bits(), std::move(obls)).first->second;
}

bool GameSolver::has_n_strategy(const GamePosition& pos, int n) {
  if (n < 0) throw std::invalid_argument("round count must be >= 0");
  if (pos.u.intersects(pos.v)) return false;
  if (n == 0) return true;

  {
    auto& memo = for_v(pos.v).n_memo[pos.u.bits()];
    if (static_cast<int>(memo.size()) > n && memo[n]) return memo[n] == 2;
  }

  bool ok = true;
  for (const Obligation& obl : obligations(pos.u)) {
    bool answered = false;
    for (ElementSet succ : obl.successors)
      if (has_n_strategy({succ, pos.v}, n - 1)) { answered = true; break; }
    if (!answered) { ok = false; break; }
  }
  auto& memo = for_v(pos.v).n_memo[pos.u.bits()];
  if (static_cast<int>(memo.size()) <= n) memo.resize(n + 1, 0);
  memo[n] = ok ? 2 : 1;
  return ok;
}

bool GameSolver::has_omega_strategy(const GamePosition& pos) {
  if (pos.u.intersects(pos.v)) return false;
  auto& cache = for_v(pos.v).omega;
  if (auto it = cache.find(pos.u.bits()); it != cache.end()) return it->second;

  // positions reachable through safe play
  std::set<std::uint64_t> region;
  std::vector<ElementSet> frontier{pos.u};
  region.insert(pos.u.bits());
  while (!frontier.empty()) {
    ElementSet u = frontier.back();
    frontier.pop_back();
    for (const Obligation& obl : obligations(u))
      for (ElementSet succ : obl.successors)
        if (!succ.intersects(pos.v) && region.insert(succ.bits()).second)
          frontier.push_back(succ);
  }

  // greatest fixpoint: drop positions where some move has no safe answer
  std::set<std::uint64_t> win = region;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = win.begin(); it != win.end();) {
      ElementSet u{*it};
      bool safe = true;
      for (const Obligation& obl : obligations(u)) {
        bool answered = false;
        for (ElementSet succ : obl.successors)
          if (win.count(succ.bits())) { answered = true; break; }
        if (!answered) { safe = false; break; }
      }
      if (!safe) { it = win.erase(it); changed = true; }
      else ++it;
    }
  }

  for (std::uint64_t u : region) cache[u] = win.count(u) > 0;
  return cache[pos.u.bits()];
}

int GameSolver::value(ElementSet u, ElementSet v) {
  if (u.intersects(v)) return SurvivalDepth::kLost;
  auto& cache = for_v(v).value;
  if (auto it = cache.find(u.bits()); it != cache.end()) return it->second;

  // successors grow u strictly, so the recursion is on a finite dag
  int best = SurvivalDepth::kOmega;
  for (const Obligation& obl : obligations(u)) {
    int response = SurvivalDepth::kLost;
    for (ElementSet succ : obl.successors)
      response = std::max(response, value(succ, v));
    int forced = response == SurvivalDepth::kOmega ? SurvivalDepth::kOmega : response + 1;
    best = std::min(best, forced);
  }
  cache[u.bits()] = best;
  return best;
}

SurvivalDepth GameSolver::survival_depth(const GamePosition& pos) {
  if (pos.u.intersects(pos.v)) return SurvivalDepth::lost_at_0();
  if (has_omega_strategy(pos)) return SurvivalDepth::omega();
  return SurvivalDepth::rounds(value(pos.u, pos.v));
}

int GameSolver::stabilization_depth(const GamePosition& pos) {
  SurvivalDepth d = survival_depth(pos);
  if (d.is_lost() || d.is_omega()) return 0;
  return d.rounds() + 1;
}

int GameSolver::reachable_count(ElementSet u) {
  std::set<std::uint64_t> seen{u.bits()};
  std::vector<ElementSet> frontier{u};
  while (!frontier.empty()) {
    ElementSet x = frontier.back();
    frontier.pop_back();
    for (const Obligation& obl : obligations(x))
      for (ElementSet succ : obl.successors)
        if (seen.insert(succ.bits()).second) frontier.push_back(succ);
  }
  return static_cast<int>(seen.size());
}

std::vector<TraceStep> GameSolver::forcing_trace(const GamePosition& pos) {
  if (!survival_depth(pos).is_finite())
    throw std::invalid_argument("forcing_trace needs a position of finite depth");
  std::vector<TraceStep> steps;
  ElementSet u = pos.u;
  while (!u.intersects(pos.v)) {
    const Obligation* pick = nullptr;
    int pick_val = SurvivalDepth::kOmega;
    for (const Obligation& obl : obligations(u)) {
      int response = SurvivalDepth::kLost;
      for (ElementSet succ : obl.successors)
        response = std::max(response, value(succ, pos.v));
      if (pick == nullptr || response < pick_val) { pick = &obl; pick_val = response; }
    }
    ElementSet next = pick->successors.front();
    for (ElementSet succ : pick->successors)
      if (value(succ, pos.v) > value(next, pos.v)) next = succ;
    steps.push_back({pick->move, (next - u).min()});
    u = next;
  }
  return steps;
}

bool has_n_strategy(const Poset& p, const GamePosition& pos, Params prm, int n) {
  return GameSolver(p, prm).has_n_strategy(pos, n);
}

bool has_omega_strategy(const Poset& p, const GamePosition& pos, Params prm) {
  return GameSolver(p, prm).has_omega_strategy(pos);
}

SurvivalDepth survival_depth(const Poset& p, const GamePosition& pos, Params prm) {
  return GameSolver(p, prm).survival_depth(pos);
}

bool all_pairs_n_strategy(const Poset& p, Params prm, int n) {
  GameSolver solver(p, prm);
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (!p.leq(a, b) &&
          !solver.has_n_strategy({ElementSet::single(a), ElementSet::single(b)}, n))
        return false;
  return true;
}

bool game_representable(const Poset& p, Params prm) {
  GameSolver solver(p, prm);
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (!p.leq(a, b) &&
          !solver.has_omega_strategy({ElementSet::single(a), ElementSet::single(b)}))
        return false;
  return true;
}

int stabilization_depth(const Poset& p, Params prm) {
  GameSolver solver(p, prm);
  int depth = 0;
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (!p.leq(a, b))
        depth = std::max(depth, solver.stabilization_depth(
                                    {ElementSet::single(a), ElementSet::single(b)}));
  return depth;
}

}  // namespace ordrep
