#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "ordrep/poset.hpp"

namespace ordrep {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable first-order formulas over the poset signature {leq, =}.
// Subtrees may be shared; evaluation depends only on the free variables.
class Formula {
 public:
  enum class Kind : std::uint8_t { leq, eq, neg, conj, disj, impl, forall, exists };

  static FormulaPtr make_leq(std::string a, std::string b);
  static FormulaPtr make_eq(std::string a, std::string b);
  static FormulaPtr make_not(FormulaPtr f);
  // Single-child conjunctions/disjunctions collapse to the child.
  static FormulaPtr make_and(std::vector<FormulaPtr> kids);
  static FormulaPtr make_or(std::vector<FormulaPtr> kids);
  static FormulaPtr make_implies(FormulaPtr a, FormulaPtr b);
  static FormulaPtr make_forall(std::string var, FormulaPtr body);
  static FormulaPtr make_exists(std::string var, FormulaPtr body);

  Kind kind() const { return kind_; }
  // Atoms: left operand. Quantifiers: bound variable.
  const std::string& var_a() const { return var_a_; }
  // Atoms: right operand.
  const std::string& var_b() const { return var_b_; }
  const std::vector<FormulaPtr>& children() const { return children_; }

  // Sorted, duplicate-free.
  const std::vector<std::string>& free_vars() const { return free_vars_; }
  bool closed() const { return free_vars_.empty(); }

  // Marks this node as a caching point for evaluators. Purely an
  // evaluation-strategy hint; never affects truth values.
  void enable_memo() const { memo_hint_ = true; }
  bool memo_hint() const { return memo_hint_; }

 private:
  Formula() = default;
  static FormulaPtr quantifier(Kind k, std::string var, FormulaPtr body);

  Kind kind_{};
  std::string var_a_, var_b_;
  std::vector<FormulaPtr> children_;
  std::vector<std::string> free_vars_;
  mutable bool memo_hint_ = false;
};

FormulaPtr mark_memo(FormulaPtr f);

// Partial map from variable names to element indices.
using Assignment = std::map<std::string, int>;

// Tarskian evaluation by structural recursion, quantifiers ranging over the
// carrier. Results are cached per (marked node, values of its free
// variables), so an evaluator reused across assignments and formulas over
// one poset amortizes shared subformulas.
class Evaluator {
 public:
  explicit Evaluator(const Poset& p);

  // Throws std::invalid_argument when a free variable of f is unassigned.
  bool evaluate(const FormulaPtr& f, const Assignment& v);

 private:
  struct NodeInfo {
    int slot_a = -1, slot_b = -1;  // atom operands / quantifier variable
    std::vector<int> free_slots;
    bool memoable = false;
    // results indexed by the mixed-radix key over the node's free variables;
    // -1 unknown
    std::vector<signed char> memo;
  };

  int slot(const std::string& name);
  NodeInfo& info(const Formula* f);
  bool eval(const Formula* f);

  const Poset& poset_;
  std::unordered_map<std::string, int> slot_of_;
  std::vector<int> env_;  // -1 = unbound
  std::unordered_map<const Formula*, NodeInfo> infos_;
  // caches are keyed by node address, so evaluated formulas must outlive them
  std::vector<FormulaPtr> retained_;
};

// One-shot evaluation.
bool evaluate(const Poset& p, const FormulaPtr& f, const Assignment& v);

struct FormulaStats {
  std::int64_t node_count = 0;  // tree size; shared subtrees counted per occurrence
  int quantifier_depth = 0;
  int variable_count = 0;       // distinct variable names
};
FormulaStats formula_stats(const FormulaPtr& f);

// Renders a closed formula as a single TPTP FOF annotated formula
// "fof(<name>, axiom, ...).", variables canonically renamed to X0, X1, ...
// in binding order. Throws std::invalid_argument on free variables.
std::string emit_tptp(const FormulaPtr& f, const std::string& name);

}  // namespace ordrep
