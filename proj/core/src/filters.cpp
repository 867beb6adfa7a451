#include "ordrep/filters.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ordrep {

bool is_ab_filter(const Poset& p, ElementSet g, Params prm) {
  const int n = p.size();
  if (!p.is_up_set(g)) return false;

  // closed under defined meets of size < alpha
  const int alim = prm.alpha.size_limit(n);
  for (ElementSet s; ; s = s.next_subset_within(g)) {
    if (s.count() >= 2 && s.count() < alim) {
      if (auto m = p.meet_of(s); m && !g.contains(*m)) return false;
    }
    if (s == g) break;
  }

  // prime for defined joins of size < beta: a join inside g needs a member
  // in g, so no subset of the complement may join into g
  const int blim = prm.beta.size_limit(n);
  const ElementSet comp = p.carrier() - g;
  for (ElementSet t; ; t = t.next_subset_within(comp)) {
    if (!t.empty() && t.count() < blim) {
      if (auto j = p.join_of(t); j && g.contains(*j)) return false;
    }
    if (t == comp) break;
  }
  return true;
}

std::vector<ElementSet> enumerate_filters(const Poset& p, Params prm, int max_elements) {
  if (p.size() > max_elements)
    throw std::invalid_argument("poset too large for exhaustive filter enumeration");
  std::vector<ElementSet> out;
  const ElementSet all = p.carrier();
  for (ElementSet g; ; g = g.next_subset_within(all)) {
    if (is_ab_filter(p, g, prm)) out.push_back(g);
    if (g == all) break;
  }
  return out;
}

std::optional<ElementSet> separating_filter(const Poset& p, int a, int b, Params prm,
                                            int max_elements) {
  if (p.leq(a, b))
    throw std::invalid_argument("separating_filter requires a !<= b");
  if (p.size() > max_elements)
    throw std::invalid_argument("poset too large for exhaustive filter enumeration");
  const ElementSet all = p.carrier();
  for (ElementSet g; ; g = g.next_subset_within(all)) {
    if (g.contains(a) && !g.contains(b) && is_ab_filter(p, g, prm)) return g;
    if (g == all) break;
  }
  return std::nullopt;
}

namespace {

std::vector<std::pair<int, int>> incomparable_pairs(const Poset& p) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (!p.leq(a, b)) pairs.emplace_back(a, b);
  return pairs;
}

}  // namespace

bool is_representable(const Poset& p, Params prm, int max_elements) {
  auto pairs = incomparable_pairs(p);
  if (pairs.empty()) return true;
  auto filters = enumerate_filters(p, prm, max_elements);
  for (auto [a, b] : pairs) {
    bool separated = false;
    for (ElementSet g : filters)
      if (g.contains(a) && !g.contains(b)) { separated = true; break; }
    if (!separated) return false;
  }
  return true;
}

std::optional<Representation> build_representation(const Poset& p, Params prm,
                                                   int max_elements) {
  auto pairs = incomparable_pairs(p);
  auto filters = enumerate_filters(p, prm, max_elements);

  Representation rep;
  std::vector<bool> covered(pairs.size(), false);
  size_t remaining = pairs.size();
  while (remaining > 0) {
    size_t best = filters.size();
    int best_gain = 0;
    for (size_t f = 0; f < filters.size(); ++f) {
      if (filters[f].empty()) continue;
      int gain = 0;
      for (size_t i = 0; i < pairs.size(); ++i)
        if (!covered[i] && filters[f].contains(pairs[i].first) &&
            !filters[f].contains(pairs[i].second))
          ++gain;
      if (gain > best_gain) { best_gain = gain; best = f; }
    }
    if (best == filters.size()) return std::nullopt;  // some pair inseparable
    rep.filters.push_back(filters[best]);
    for (size_t i = 0; i < pairs.size(); ++i)
      if (!covered[i] && filters[best].contains(pairs[i].first) &&
          !filters[best].contains(pairs[i].second)) {
        covered[i] = true;
        --remaining;
      }
  }

  rep.h.resize(p.size());
  for (int e = 0; e < p.size(); ++e)
    for (size_t f = 0; f < rep.filters.size(); ++f)
      if (rep.filters[f].contains(e)) rep.h[e].push_back(static_cast<int>(f));
  return rep;
}

namespace {

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> intersect_all(const Representation& rep, ElementSet s) {
  std::vector<int> acc;
  bool started = false;
  for (int e : s) {
    if (!started) { acc = rep.h[e]; started = true; continue; }
    std::vector<int> next;
    std::set_intersection(acc.begin(), acc.end(), rep.h[e].begin(), rep.h[e].end(),
                          std::back_inserter(next));
    acc = std::move(next);
  }
  return acc;
}

std::vector<int> union_all(const Representation& rep, ElementSet s) {
  std::vector<int> acc;
  for (int e : s) {
    std::vector<int> next;
    std::set_union(acc.begin(), acc.end(), rep.h[e].begin(), rep.h[e].end(),
                   std::back_inserter(next));
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

bool verify_embedding(const Poset& p, const Representation& rep, Params prm) {
  const int n = p.size();
  if (static_cast<int>(rep.h.size()) != n) return false;

  // order embedding: a <= b iff h(a) subseteq h(b)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p.leq(a, b) != subset(rep.h[a], rep.h[b])) return false;

  const ElementSet all = p.carrier();
  const int alim = prm.alpha.size_limit(n);
  const int blim = prm.beta.size_limit(n);
  for (ElementSet s; ; s = s.next_subset_within(all)) {
    if (!s.empty()) {
      if (s.count() < alim) {
        if (auto m = p.meet_of(s); m && rep.h[*m] != intersect_all(rep, s)) return false;
      }
      if (s.count() < blim) {
        if (auto j = p.join_of(s); j && rep.h[*j] != union_all(rep, s)) return false;
      }
    }
    if (s == all) break;
  }
  return true;
}

std::string format_representation(const Poset& p, const Representation& rep) {
  std::ostringstream out;
  for (size_t f = 0; f < rep.filters.size(); ++f)
    out << "filter " << f << ": " << format_set(p, rep.filters[f]) << '\n';
  for (int e = 0; e < p.size(); ++e) {
    out << "h " << p.name(e) << " = {";
    for (size_t i = 0; i < rep.h[e].size(); ++i) {
      if (i) out << ", ";
      out << rep.h[e][i];
    }
    out << "}\n";
  }
  return out.str();
}

}  // namespace ordrep
