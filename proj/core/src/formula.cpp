#include "ordrep/formula.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ordrep {

namespace {

std::vector<std::string> merge_vars(std::vector<std::string> a,
                                    const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace

FormulaPtr Formula::make_leq(std::string a, std::string b) {
  std::shared_ptr<Formula> m(new Formula());
  m->kind_ = Kind::leq;
  m->var_a_ = std::move(a);
  m->var_b_ = std::move(b);
  m->free_vars_ = merge_vars({m->var_a_}, {m->var_b_});
  return m;
}

FormulaPtr Formula::make_eq(std::string a, std::string b) {
  std::shared_ptr<Formula> m(new Formula());
  m->kind_ = Kind::eq;
  m->var_a_ = std::move(a);
  m->var_b_ = std::move(b);
  m->free_vars_ = merge_vars({m->var_a_}, {m->var_b_});
  return m;
}

FormulaPtr Formula::make_not(FormulaPtr f) {
  std::shared_ptr<Formula> m(new Formula());
  m->kind_ = Kind::neg;
  m->free_vars_ = f->free_vars();
  m->children_ = {std::move(f)};
  return m;
}

FormulaPtr Formula::make_and(std::vector<FormulaPtr> kids) {
  if (kids.empty()) throw std::invalid_argument("empty conjunction");
  if (kids.size() == 1) return kids[0];
  std::shared_ptr<Formula> m(new Formula());
  m->kind_ = Kind::conj;
  for (const auto& k : kids)
    m->free_vars_ = merge_vars(std::move(m->free_vars_), k->free_vars());
  m->children_ = std::move(kids);
  return m;
}

FormulaPtr Formula::make_or(std::vector<FormulaPtr> kids) {
  if (kids.empty()) throw std::invalid_argument("empty disjunction");
  if (kids.size() == 1) return kids[0];
  std::shared_ptr<Formula> m(new Formula());
  m->kind_ = Kind::disj;
  for (const auto& k : kids)
    m->free_vars_ = merge_vars(std::move(m->free_vars_), k->free_vars());
  m->children_ = std::move(kids);
  return m;
}

FormulaPtr Formula::make_implies(FormulaPtr a, FormulaPtr b) {
  std::shared_ptr<Formula> m(new Formula());
  m->kind_ = Kind::impl;
  m->free_vars_ = merge_vars(a->free_vars(), b->free_vars());
  m->children_ = {std::move(a), std::move(b)};
  return m;
}

FormulaPtr Formula::quantifier(Kind k, std::string var, FormulaPtr body) {
  std::shared_ptr<Formula> m(new Formula());
  m->kind_ = k;
  auto fv = body->free_vars();
  fv.erase(std::remove(fv.begin(), fv.end(), var), fv.end());
  m->free_vars_ = std::move(fv);
  m->var_a_ = std::move(var);
  m->children_ = {std::move(body)};
  return m;
}

FormulaPtr Formula::make_forall(std::string var, FormulaPtr body) {
  return quantifier(Kind::forall, std::move(var), std::move(body));
}

FormulaPtr Formula::make_exists(std::string var, FormulaPtr body) {
  return quantifier(Kind::exists, std::move(var), std::move(body));
}

FormulaPtr mark_memo(FormulaPtr f) {
  f->enable_memo();
  return f;
}

Evaluator::Evaluator(const Poset& p) : poset_(p) {}

int Evaluator::slot(const std::string& name) {
  auto it = slot_of_.find(name);
  if (it != slot_of_.end()) return it->second;
  int s = static_cast<int>(env_.size());
  env_.push_back(-1);
  slot_of_.emplace(name, s);
  return s;
}

Evaluator::NodeInfo& Evaluator::info(const Formula* f) {
  auto it = infos_.find(f);
  if (it != infos_.end()) return it->second;
  NodeInfo ni;
  switch (f->kind()) {
    case Formula::Kind::leq:
    case Formula::Kind::eq:
      ni.slot_a = slot(f->var_a());
      ni.slot_b = slot(f->var_b());
      break;
    case Formula::Kind::forall:
    case Formula::Kind::exists:
      ni.slot_a = slot(f->var_a());
      break;
    default:
      break;
  }
  if (f->memo_hint()) {
    std::uint64_t keys = 1;
    const std::uint64_t cap = std::uint64_t{1} << 22;
    for (size_t i = 0; i < f->free_vars().size() && keys <= cap; ++i)
      keys *= static_cast<std::uint64_t>(poset_.size());
    if (keys <= cap) {
      ni.memoable = true;
      for (const auto& v : f->free_vars()) ni.free_slots.push_back(slot(v));
      ni.memo.assign(keys, -1);
    }
  }
  return infos_.emplace(f, std::move(ni)).first->second;
}

bool Evaluator::eval(const Formula* f) {
  NodeInfo& ni = info(f);

  std::uint64_t key = 0;
  if (ni.memoable) {
    for (int s : ni.free_slots)
      key = key * static_cast<std::uint64_t>(poset_.size()) +
            static_cast<std::uint64_t>(env_[s]);
    if (ni.memo[key] >= 0) return ni.memo[key] != 0;
  }

  bool result = false;
  switch (f->kind()) {
    case Formula::Kind::leq:
      result = poset_.leq(env_[ni.slot_a], env_[ni.slot_b]);
      break;
    case Formula::Kind::eq:
      result = env_[ni.slot_a] == env_[ni.slot_b];
      break;
    case Formula::Kind::neg:
      result = !eval(f->children()[0].get());
      break;
    case Formula::Kind::conj:
      result = true;
      for (const auto& k : f->children())
        if (!eval(k.get())) { result = false; break; }
      break;
    case Formula::Kind::disj:
      result = false;
      for (const auto& k : f->children())
        if (eval(k.get())) { result = true; break; }
      break;
    case Formula::Kind::impl:
      result = !eval(f->children()[0].get()) || eval(f->children()[1].get());
      break;
    case Formula::Kind::forall:
    case Formula::Kind::exists: {
      const bool is_all = f->kind() == Formula::Kind::forall;
      const int s = ni.slot_a;
      const int saved = env_[s];
      result = is_all;
      for (int x = 0; x < poset_.size(); ++x) {
        env_[s] = x;
        bool b = eval(f->children()[0].get());
        if (b != is_all) { result = b; break; }
      }
      env_[s] = saved;
      break;
    }
  }

  if (ni.memoable) ni.memo[key] = result ? 1 : 0;  // references stay valid across inserts
  return result;
}

bool Evaluator::evaluate(const FormulaPtr& f, const Assignment& v) {
  retained_.push_back(f);
  for (int& e : env_) e = -1;
  for (const auto& [name, val] : v) {
    if (val < 0 || val >= poset_.size())
      throw std::invalid_argument("assignment value out of range for '" + name + "'");
    env_[slot(name)] = val;
  }
  for (const auto& name : f->free_vars())
    if (env_[slot(name)] < 0)
      throw std::invalid_argument("unbound free variable '" + name + "'");
  return eval(f.get());
}

bool evaluate(const Poset& p, const FormulaPtr& f, const Assignment& v) {
  Evaluator ev(p);
  return ev.evaluate(f, v);
}

namespace {

void stats_walk(const Formula* f, std::int64_t& nodes, int depth, int& max_q,
                std::set<std::string>& vars) {
  ++nodes;
  switch (f->kind()) {
    case Formula::Kind::leq:
    case Formula::Kind::eq:
      vars.insert(f->var_a());
      vars.insert(f->var_b());
      return;
    case Formula::Kind::forall:
    case Formula::Kind::exists:
      vars.insert(f->var_a());
      max_q = std::max(max_q, depth + 1);
      stats_walk(f->children()[0].get(), nodes, depth + 1, max_q, vars);
      return;
    default:
      for (const auto& k : f->children())
        stats_walk(k.get(), nodes, depth, max_q, vars);
      return;
  }
}

}  // namespace

FormulaStats formula_stats(const FormulaPtr& f) {
  FormulaStats st;
  std::set<std::string> vars;
  stats_walk(f.get(), st.node_count, 0, st.quantifier_depth, vars);
  st.variable_count = static_cast<int>(vars.size());
  return st;
}

namespace {

// Canonical TPTP variable names X0, X1, ... assigned in binding order.
struct TptpEmitter {
  int next = 0;
  std::map<std::string, std::vector<std::string>> bound;  // name -> shadow stack

  const std::string& lookup(const std::string& v) {
    auto it = bound.find(v);
    if (it == bound.end() || it->second.empty())
      throw std::invalid_argument("cannot emit formula with free variable '" + v + "'");
    return it->second.back();
  }

  void emit(const Formula* f, std::ostream& out) {
    switch (f->kind()) {
      case Formula::Kind::leq:
        out << "leq(" << lookup(f->var_a()) << ',' << lookup(f->var_b()) << ')';
        return;
      case Formula::Kind::eq:
        out << lookup(f->var_a()) << " = " << lookup(f->var_b());
        return;
      case Formula::Kind::neg: {
        const Formula* inner = f->children()[0].get();
        if (inner->kind() == Formula::Kind::eq) {
          out << lookup(inner->var_a()) << " != " << lookup(inner->var_b());
          return;
        }
        out << "~";
        emit_unit(inner, out);
        return;
      }
      case Formula::Kind::conj:
      case Formula::Kind::disj: {
        const char* op = f->kind() == Formula::Kind::conj ? " & " : " | ";
        out << '(';
        for (size_t i = 0; i < f->children().size(); ++i) {
          if (i) out << op;
          emit(f->children()[i].get(), out);
        }
        out << ')';
        return;
      }
      case Formula::Kind::impl:
        out << '(';
        emit(f->children()[0].get(), out);
        out << " => ";
        emit(f->children()[1].get(), out);
        out << ')';
        return;
      case Formula::Kind::forall:
      case Formula::Kind::exists: {
        std::string fresh = "X" + std::to_string(next++);
        out << (f->kind() == Formula::Kind::forall ? "![" : "?[") << fresh << "]: ";
        bound[f->var_a()].push_back(fresh);
        emit_unit(f->children()[0].get(), out);
        bound[f->var_a()].pop_back();
        return;
      }
    }
  }

  // TPTP wants a unitary formula after '~' and 'quantifier:'; conj/disj/impl
  // already parenthesize themselves, bare atoms are fine.
  void emit_unit(const Formula* f, std::ostream& out) { emit(f, out); }
};

}  // namespace

std::string emit_tptp(const FormulaPtr& f, const std::string& name) {
  if (!f->closed())
    throw std::invalid_argument("emit_tptp requires a closed formula");
  std::ostringstream out;
  out << "fof(" << name << ", axiom, ";
  TptpEmitter em;
  em.emit(f.get(), out);
  out << ").";
  return out.str();
}

}  // namespace ordrep
