#pragma once

#include <vector>

#include "ordrep/params.hpp"
#include "ordrep/poset.hpp"

namespace ordrep {

struct ClassificationReport {
  bool meet_semilattice = false;
  bool join_semilattice = false;
  bool lattice = false;
  bool distributive_lattice = false;
  // (k, flag) for k = 2..n+1, the top entry standing in for omega.
  // Empty when the poset is not a meet semilattice.
  std::vector<std::pair<int, bool>> k_distributive;
};

// Every pair has a defined meet (resp. join).
bool is_meet_semilattice(const Poset& p);
bool is_join_semilattice(const Poset& p);
bool is_lattice(const Poset& p);

// Whether, for every nonempty set Y of fewer than k elements with a defined
// join, x meet (join Y) equals the join of { x meet y : y in Y } for all x
// (the latter join required to exist). Requires a meet semilattice; throws
// std::invalid_argument otherwise. k = omega acts as n+1.
bool is_k_distributive(const Poset& p, Card k);

// x meet (y join z) = (x meet y) join (x meet z) over all triples.
// Requires a lattice; throws std::invalid_argument otherwise.
bool is_distributive_lattice(const Poset& p);

ClassificationReport classify(const Poset& p);

}  // namespace ordrep
