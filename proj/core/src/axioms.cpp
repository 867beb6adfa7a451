#include "ordrep/axioms.hpp"

#include <stdexcept>

namespace ordrep {

namespace {

using F = Formula;

void require_arity(size_t k, const char* what) {
  if (k == 0) throw std::invalid_argument(std::string(what) + " needs arity >= 1");
}

// z equals one of xs
FormulaPtr equals_one_of(const std::vector<std::string>& xs, const std::string& z) {
  std::vector<FormulaPtr> alts;
  for (const auto& x : xs) alts.push_back(F::make_eq(z, x));
  return F::make_or(std::move(alts));
}

}  // namespace

FormulaPtr meet_formula(const std::vector<std::string>& xs, const std::string& y, VarGen& g) {
  require_arity(xs.size(), "meet_formula");
  std::vector<FormulaPtr> kids;
  for (const auto& x : xs) kids.push_back(F::make_leq(y, x));
  std::string w = g.fresh();
  std::vector<FormulaPtr> below;
  for (const auto& x : xs) below.push_back(F::make_leq(w, x));
  kids.push_back(F::make_forall(
      w, F::make_implies(F::make_and(std::move(below)), F::make_leq(w, y))));
  return F::make_and(std::move(kids));
}

FormulaPtr join_formula(const std::vector<std::string>& xs, const std::string& y, VarGen& g) {
  require_arity(xs.size(), "join_formula");
  std::vector<FormulaPtr> kids;
  for (const auto& x : xs) kids.push_back(F::make_leq(x, y));
  std::string w = g.fresh();
  std::vector<FormulaPtr> above;
  for (const auto& x : xs) above.push_back(F::make_leq(x, w));
  kids.push_back(F::make_forall(
      w, F::make_implies(F::make_and(std::move(above)), F::make_leq(y, w))));
  return F::make_and(std::move(kids));
}

FormulaPtr meet_formula(const std::vector<std::string>& xs, const std::string& y) {
  VarGen g;
  return meet_formula(xs, y, g);
}

FormulaPtr join_formula(const std::vector<std::string>& xs, const std::string& y) {
  VarGen g;
  return join_formula(xs, y, g);
}

FormulaPtr membership_formula(const std::vector<std::string>& xs,
                              const std::vector<std::string>& ys) {
  require_arity(xs.size(), "membership_formula");
  require_arity(ys.size(), "membership_formula");
  std::vector<FormulaPtr> per_y;
  for (const auto& y : ys) per_y.push_back(equals_one_of(xs, y));
  return F::make_and(std::move(per_y));
}

FormulaPtr disjoint_formula(const std::vector<std::string>& xs,
                            const std::vector<std::string>& ys) {
  require_arity(xs.size(), "disjoint_formula");
  require_arity(ys.size(), "disjoint_formula");
  std::vector<FormulaPtr> per_y;
  for (const auto& y : ys) {
    std::vector<FormulaPtr> diffs;
    for (const auto& x : xs) diffs.push_back(F::make_not(F::make_eq(y, x)));
    per_y.push_back(F::make_and(std::move(diffs)));
  }
  return F::make_and(std::move(per_y));
}

FormulaPtr up_move_guard(const std::vector<std::string>& xs, const std::string& c,
                         VarGen& g) {
  require_arity(xs.size(), "up_move_guard");
  std::string z = g.fresh();
  return F::make_exists(
      z, F::make_and({equals_one_of(xs, z), F::make_leq(z, c)}));
}

FormulaPtr meet_move_guard(const std::vector<std::string>& xs,
                           const std::vector<std::string>& as, const std::string& c,
                           VarGen& g) {
  return F::make_and({membership_formula(xs, as), meet_formula(as, c, g)});
}

FormulaPtr join_move_guard(const std::vector<std::string>& xs,
                           const std::vector<std::string>& bs, VarGen& g) {
  require_arity(xs.size(), "join_move_guard");
  std::string z = g.fresh();
  return F::make_exists(
      z, F::make_and({equals_one_of(xs, z), join_formula(bs, z, g)}));
}

namespace {

FormulaPtr phi_rec(const std::vector<std::string>& xs, const std::string& y,
                   int r, int s, int n, VarGen& g) {
  if (n == 0) return mark_memo(disjoint_formula(xs, {y}));

  std::vector<std::string> as, bs;
  for (int i = 0; i < r; ++i) as.push_back(g.fresh());
  for (int i = 0; i < s; ++i) bs.push_back(g.fresh());
  std::string c = g.fresh();

  FormulaPtr sigma = mark_memo(up_move_guard(xs, c, g));
  FormulaPtr tau = mark_memo(meet_move_guard(xs, as, c, g));
  FormulaPtr rho = mark_memo(join_move_guard(xs, bs, g));

  auto extended = [&](const std::string& fresh_element) {
    auto e = xs;
    e.push_back(fresh_element);
    return e;
  };
  FormulaPtr after_c = phi_rec(extended(c), y, r, s, n - 1, g);
  std::vector<FormulaPtr> after_b;
  for (const auto& b : bs) after_b.push_back(phi_rec(extended(b), y, r, s, n - 1, g));

  FormulaPtr body = F::make_and({
      F::make_implies(sigma, after_c),
      F::make_implies(tau, after_c),
      F::make_implies(rho, F::make_or(std::move(after_b))),
  });

  FormulaPtr f = F::make_forall(c, std::move(body));
  for (auto it = bs.rbegin(); it != bs.rend(); ++it) f = F::make_forall(*it, std::move(f));
  for (auto it = as.rbegin(); it != as.rend(); ++it) f = F::make_forall(*it, std::move(f));
  return mark_memo(f);
}

void require_indices(int k, int r, int s, int n) {
  if (k < 1 || r < 1 || s < 1 || n < 0)
    throw std::invalid_argument("need k,r,s >= 1 and n >= 0");
}

}  // namespace

FormulaPtr build_phi(int k, int r, int s, int n) {
  require_indices(k, r, s, n);
  std::vector<std::string> xs;
  for (int i = 1; i <= k; ++i) xs.push_back("x" + std::to_string(i));
  VarGen g;
  return phi_rec(xs, "y", r, s, n, g);
}

FormulaPtr build_psi(int r, int s, int n) {
  require_indices(1, r, s, n);
  VarGen g;
  FormulaPtr phi = phi_rec({"x"}, "y", r, s, n, g);
  return F::make_forall(
      "x", F::make_forall(
               "y", F::make_implies(F::make_not(F::make_leq("x", "y")), std::move(phi))));
}

std::string phi_name(int k, int r, int s, int n) {
  return "phi_" + std::to_string(k) + "_" + std::to_string(r) + "_" +
         std::to_string(s) + "_" + std::to_string(n);
}

std::string psi_name(int r, int s, int n) {
  return "psi_" + std::to_string(r) + "_" + std::to_string(s) + "_" + std::to_string(n);
}

}  // namespace ordrep
