#include "ordrep/analysis.hpp"

#include <stdexcept>

namespace ordrep {

bool is_meet_semilattice(const Poset& p) {
  for (int a = 0; a < p.size(); ++a)
    for (int b = a + 1; b < p.size(); ++b)
      if (!p.meet_of(ElementSet::of({a, b}))) return false;
  return true;
}

bool is_join_semilattice(const Poset& p) {
  for (int a = 0; a < p.size(); ++a)
    for (int b = a + 1; b < p.size(); ++b)
      if (!p.join_of(ElementSet::of({a, b}))) return false;
  return true;
}

bool is_lattice(const Poset& p) {
  return is_meet_semilattice(p) && is_join_semilattice(p);
}

bool is_k_distributive(const Poset& p, Card k) {
  if (!is_meet_semilattice(p))
    throw std::invalid_argument("k-distributivity is defined on meet semilattices");
  const int n = p.size();
  const int lim = k.size_limit(n);
  const ElementSet all = p.carrier();
  for (ElementSet ys; ; ys = ys.next_subset_within(all)) {
    if (!ys.empty() && ys.count() < lim) {
      if (auto j = p.join_of(ys)) {
        for (int x = 0; x < n; ++x) {
          int lhs = *p.meet_of(ElementSet::of({x}).with(*j));
          ElementSet meets;
          for (int y : ys) meets.add(*p.meet_of(ElementSet::of({x}).with(y)));
          auto rhs = p.join_of(meets);
          if (!rhs || *rhs != lhs) return false;
        }
      }
    }
    if (ys == all) break;
  }
  return true;
}

bool is_distributive_lattice(const Poset& p) {
  if (!is_lattice(p))
    throw std::invalid_argument("distributivity check needs a lattice");
  const int n = p.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int yz = *p.join_of(ElementSet::of({y}).with(z));
        int lhs = *p.meet_of(ElementSet::of({x}).with(yz));
        int xy = *p.meet_of(ElementSet::of({x}).with(y));
        int xz = *p.meet_of(ElementSet::of({x}).with(z));
        auto rhs = p.join_of(ElementSet::of({xy}).with(xz));
        if (!rhs || *rhs != lhs) return false;
      }
  return true;
}

ClassificationReport classify(const Poset& p) {
  ClassificationReport rep;
  rep.meet_semilattice = is_meet_semilattice(p);
  rep.join_semilattice = is_join_semilattice(p);
  rep.lattice = rep.meet_semilattice && rep.join_semilattice;
  rep.distributive_lattice = rep.lattice && is_distributive_lattice(p);
  if (rep.meet_semilattice)
    for (int k = 2; k <= p.size() + 1; ++k)
      rep.k_distributive.emplace_back(k, is_k_distributive(p, Card::finite(k)));
  return rep;
}

}  // namespace ordrep
