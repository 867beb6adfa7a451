#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordrep/params.hpp"
#include "ordrep/poset.hpp"

namespace ordrep {

// Exhaustive search over subsets is restricted to posets of at most this
// many elements by default; callers may raise it at their own risk.
inline constexpr int kDefaultEnumerationBound = 20;

// A family of filters together with the induced map h sending each element
// to the set of (indices of) filters containing it. When the family
// separates every pair p !<= q, h is an embedding into a powerset lattice
// preserving meets of size < alpha and joins of size < beta.
struct Representation {
  std::vector<ElementSet> filters;
  // h[i] = ascending indices of the filters containing element i.
  std::vector<std::vector<int>> h;
};

// Whether g is an up-set closed under defined meets of fewer than alpha
// elements and prime for defined joins of fewer than beta elements (a join
// landing in g must have a member in g).
bool is_ab_filter(const Poset& p, ElementSet g, Params prm);

// All filters in ascending mask order (the empty set qualifies vacuously).
// Throws std::invalid_argument when p exceeds max_elements.
std::vector<ElementSet> enumerate_filters(const Poset& p, Params prm,
                                          int max_elements = kDefaultEnumerationBound);

// First filter in ascending mask order containing a and not b, if any.
// Requires a !<= b; throws std::invalid_argument otherwise.
std::optional<ElementSet> separating_filter(const Poset& p, int a, int b, Params prm,
                                            int max_elements = kDefaultEnumerationBound);

// Whether every pair a !<= b admits a separating filter.
bool is_representable(const Poset& p, Params prm,
                      int max_elements = kDefaultEnumerationBound);

// Builds a separating family if one exists, greedily minimized: repeatedly
// take the filter covering the most unseparated pairs, ties broken by
// enumeration order. The empty filter is never used.
std::optional<Representation> build_representation(const Poset& p, Params prm,
                                                   int max_elements = kDefaultEnumerationBound);

// Whether rep's map h is an order embedding (a <= b iff h(a) subseteq h(b))
// that turns defined meets of size < alpha into intersections and defined
// joins of size < beta into unions.
bool verify_embedding(const Poset& p, const Representation& rep, Params prm);

// One "filter <i>: {names}" line per filter, then one "h <name> = {indices}"
// line per element.
std::string format_representation(const Poset& p, const Representation& rep);

}  // namespace ordrep
