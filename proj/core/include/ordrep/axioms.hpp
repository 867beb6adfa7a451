#pragma once

#include <string>
#include <vector>

#include "ordrep/formula.hpp"

namespace ordrep {

// Source of fresh bound-variable names (z0, z1, ...). Each top-level build
// uses its own generator, so output is deterministic.
class VarGen {
 public:
  std::string fresh() { return "z" + std::to_string(next_++); }
 private:
  int next_ = 0;
};

// y equals the meet of xs: y below every x, and every common lower bound
// below y.
FormulaPtr meet_formula(const std::vector<std::string>& xs, const std::string& y, VarGen& g);
FormulaPtr meet_formula(const std::vector<std::string>& xs, const std::string& y);

// y equals the join of xs.
FormulaPtr join_formula(const std::vector<std::string>& xs, const std::string& y, VarGen& g);
FormulaPtr join_formula(const std::vector<std::string>& xs, const std::string& y);

// Every y equals some x.
FormulaPtr membership_formula(const std::vector<std::string>& xs,
                              const std::vector<std::string>& ys);

// No y equals any x.
FormulaPtr disjoint_formula(const std::vector<std::string>& xs,
                            const std::vector<std::string>& ys);

// Guards matching the three challenger moves, with xs playing the
// accumulated set:
//   up:   c dominates some member of xs.
//   meet: as all lie in xs and c is their meet.
//   join: the join of bs is defined and lies in xs.
FormulaPtr up_move_guard(const std::vector<std::string>& xs, const std::string& c, VarGen& g);
FormulaPtr meet_move_guard(const std::vector<std::string>& xs,
                           const std::vector<std::string>& as, const std::string& c,
                           VarGen& g);
FormulaPtr join_move_guard(const std::vector<std::string>& xs,
                           const std::vector<std::string>& bs, VarGen& g);

// phi_{k,r,s,n}: free variables x1..xk and y; true exactly when the defender
// survives n rounds from ({x1..xk},{y}) with meets of size <= r and joins of
// size <= s available to the challenger. Base case n=0 says y differs from
// every xi; the step universally quantifies one round of moves.
FormulaPtr build_phi(int k, int r, int s, int n);

// psi_{r,s,n}: the closed sentence "for all x !<= y, phi_{1,r,s,n}(x,y)".
FormulaPtr build_psi(int r, int s, int n);

std::string phi_name(int k, int r, int s, int n);  // "phi_k_r_s_n"
std::string psi_name(int r, int s, int n);         // "psi_r_s_n"

}  // namespace ordrep
