#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordrep/element_set.hpp"

namespace ordrep {

// A finite poset over elements 0..n-1. The order is stored as one up-set
// mask per element: up(i) = { j : i <= j }. Values are immutable after
// construction and safe to share across threads.
class Poset {
 public:
  // Builds the reflexive-transitive closure of the given "a <= b" generator
  // pairs and validates the result. Throws std::invalid_argument on empty or
  // duplicate names, bad name characters, out-of-range indices, more than 64
  // elements, or an antisymmetry violation (a cycle in the generators).
  static Poset make(std::vector<std::string> names,
                    const std::vector<std::pair<int, int>>& le_pairs);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  // Index of the named element, or -1.
  int index_of(const std::string& name) const;

  bool leq(int a, int b) const { return up_[a].contains(b); }
  ElementSet up_set(int i) const { return up_[i]; }
  ElementSet down_set(int i) const;
  ElementSet carrier() const { return ElementSet::first(size()); }

  bool is_up_set(ElementSet s) const;

  ElementSet upper_bounds(ElementSet s) const;
  ElementSet lower_bounds(ElementSet s) const;

  // Member of s below (resp. above) every member of s, if one exists.
  std::optional<int> least(ElementSet s) const;
  std::optional<int> greatest(ElementSet s) const;

  // Greatest lower bound / least upper bound of a nonempty subset, if it
  // exists. Throws std::invalid_argument on the empty set.
  std::optional<int> meet_of(ElementSet s) const;
  std::optional<int> join_of(ElementSet s) const;

  // Same carrier with the order flipped.
  Poset reversed() const;

  bool operator==(const Poset&) const = default;

 private:
  Poset(std::vector<std::string> names, std::vector<ElementSet> up)
      : names_(std::move(names)), up_(std::move(up)) {}

  std::vector<std::string> names_;
  std::vector<ElementSet> up_;
};

// Parses the poset file format: optional '#' comment lines, one
// "elements: a b c" line, any number of "le: a b" lines.
// Throws std::invalid_argument with a descriptive message on bad input.
Poset parse_poset(const std::string& text);

// Renders a poset in the file format, with one "le:" line per covering pair.
std::string write_poset_file(const Poset& p);

// Named stock posets. k is used by chain/antichain/boolean.
//   chain(k), antichain(k), boolean(k): k-element total order, k incomparable
//     elements, subsets of a k-set under inclusion.
//   M3: {bot,a,b,c,top} with three atoms (the diamond).
//   N5: {bot,a,c,b,top} with bot<a<c<top and bot<b<top (the pentagon).
//   hexagon_witness: {bot,a,b,c,u,v,top} with three atoms below two
//     incomparable co-atoms u,v; joins of distinct atoms are undefined.
Poset standard_poset(const std::string& name, int k = 0);

// Componentwise order on pairs; element names joined with ','.
Poset product(const Poset& p, const Poset& q);

// "{a, top}" with elements in ascending index order and the given separator.
std::string format_set(const Poset& p, ElementSet s, const char* sep = ", ");

}  // namespace ordrep
