#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "ordrep/axioms.hpp"
#include "ordrep/formula.hpp"
#include "ordrep/game.hpp"

using namespace ordrep;
using namespace ordrep::testing;

namespace {
const Params k33{Card::finite(3), Card::finite(3)};
}

TEST_CASE("primitive families: meets, joins, membership") {
  Poset m3 = standard_poset("M3");
  int a = m3.index_of("a"), b = m3.index_of("b"), bot = m3.index_of("bot");

  auto m2 = meet_formula({"x1", "x2"}, "y");
  CHECK(evaluate(m3, m2, {{"x1", a}, {"x2", b}, {"y", bot}}));
  CHECK_FALSE(evaluate(m3, m2, {{"x1", a}, {"x2", b}, {"y", a}}));

  Poset hex = standard_poset("hexagon_witness");
  auto j2 = join_formula({"x1", "x2"}, "y");
  for (int z = 0; z < hex.size(); ++z)
    CHECK_FALSE(evaluate(hex, j2,
                         {{"x1", hex.index_of("b")}, {"x2", hex.index_of("c")}, {"y", z}}));

  auto c21 = membership_formula({"x1", "x2"}, {"y"});
  CHECK(evaluate(m3, c21, {{"x1", a}, {"x2", b}, {"y", b}}));
  CHECK_FALSE(evaluate(m3, c21, {{"x1", a}, {"x2", b}, {"y", bot}}));

  CHECK_THROWS_AS(meet_formula({}, "y"), std::invalid_argument);
  CHECK_THROWS_AS(build_phi(0, 1, 1, 0), std::invalid_argument);
}

TEST_CASE("disjointness negates membership for a single tested element") {
  std::mt19937 rng(17);
  auto posets = all_posets_up_to_iso(4);
  for (int trial = 0; trial < 120; ++trial) {
    const Poset& p = posets[rng() % posets.size()];
    int k = 1 + static_cast<int>(rng() % 3), m = 1 + static_cast<int>(rng() % 2);
    std::vector<std::string> xs, ys;
    Assignment v;
    for (int i = 0; i < k; ++i) {
      xs.push_back("x" + std::to_string(i));
      v[xs.back()] = static_cast<int>(rng() % p.size());
    }
    for (int j = 0; j < m; ++j) {
      ys.push_back("u" + std::to_string(j));
      v[ys.back()] = static_cast<int>(rng() % p.size());
    }
    bool any_shared = false, all_shared = true;
    for (const auto& y : ys) {
      bool hit = false;
      for (const auto& x : xs)
        if (v[y] == v[x]) hit = true;
      any_shared |= hit;
      all_shared &= hit;
    }
    CHECK(evaluate(p, disjoint_formula(xs, ys), v) == !any_shared);
    CHECK(evaluate(p, membership_formula(xs, ys), v) == all_shared);
    // with one tested element the two are complementary
    if (m == 1)
      CHECK(evaluate(p, disjoint_formula(xs, ys), v) !=
            evaluate(p, membership_formula(xs, ys), v));
  }
}

TEST_CASE("phi base cases") {
  Poset two = standard_poset("chain", 2);
  auto phi0 = build_phi(1, 1, 1, 0);
  CHECK(evaluate(two, phi0, {{"x1", 1}, {"y", 0}}));
  CHECK_FALSE(evaluate(two, phi0, {{"x1", 1}, {"y", 1}}));
}

TEST_CASE("phi matches bounded game survival") {
  // every assignment, every k,r,s in {1,2}, n <= 2, posets up to 4 elements
  auto posets = all_posets_up_to_iso(3);
  posets.push_back(standard_poset("M3"));
  for (const Poset& p : posets) {
    Evaluator ev(p);
    for (int r = 1; r <= 2; ++r)
      for (int s = 1; s <= 2; ++s) {
        GameSolver solver(p, {Card::finite(r + 1), Card::finite(s + 1)});
        for (int n = 0; n <= 2; ++n) {
          for (int k = 1; k <= 2; ++k) {
            auto phi = build_phi(k, r, s, n);
            std::vector<int> vals(k + 1, 0);
            while (true) {
              Assignment v;
              ElementSet u;
              for (int i = 0; i < k; ++i) {
                v["x" + std::to_string(i + 1)] = vals[i];
                u.add(vals[i]);
              }
              v["y"] = vals[k];
              CHECK(ev.evaluate(phi, v) ==
                    solver.has_n_strategy({u, ElementSet::single(vals[k])}, n));
              int d = 0;
              while (d <= k && ++vals[d] == p.size()) vals[d++] = 0;
              if (d > k) break;
            }
          }
        }
      }
  }
}

TEST_CASE("phi at depth four matches the game on M3") {
  Poset m3 = standard_poset("M3");
  auto phi = build_phi(1, 2, 2, 4);
  Assignment v{{"x1", m3.index_of("a")}, {"y", m3.index_of("b")}};
  bool game = has_n_strategy(
      m3, {ElementSet::single(m3.index_of("a")), ElementSet::single(m3.index_of("b"))},
      k33, 4);
  CHECK_FALSE(game);
  CHECK(evaluate(m3, phi, v) == game);
}

TEST_CASE("psi sentences") {
  Poset m3 = standard_poset("M3");
  Evaluator ev(m3);
  // n-th sentence holds iff every incomparable pair survives n rounds
  for (int n = 0; n <= 2; ++n)
    CHECK(ev.evaluate(build_psi(2, 2, n), {}) == all_pairs_n_strategy(m3, k33, n));
  CHECK(ev.evaluate(build_psi(2, 2, 2), {}));
  CHECK(all_pairs_n_strategy(m3, k33, 2));
  CHECK_FALSE(all_pairs_n_strategy(m3, k33, 3));

  // reflexivity: x !<= y already forces x != y
  for (const Poset& p : all_posets_up_to_iso(4))
    CHECK(evaluate(p, build_psi(1, 1, 0), {}));

  Poset b2 = standard_poset("boolean", 2);
  Evaluator evb(b2);
  for (int n = 0; n <= 2; ++n) CHECK(evb.evaluate(build_psi(2, 2, n), {}));
  for (int n = 3; n <= 6; ++n) CHECK(all_pairs_n_strategy(b2, k33, n));
}

TEST_CASE("psi truth equals all-pairs survival across a corpus slice") {
  int seen = 0;
  for (const Poset& p : corpus()) {
    if (p.size() > 5) continue;
    if (++seen > 30) break;
    Evaluator ev(p);
    for (auto [r, s] : {std::pair{1, 1}, {1, 2}, {2, 1}})
      for (int n = 0; n <= 2; ++n)
        CHECK(ev.evaluate(build_psi(r, s, n), {}) ==
              all_pairs_n_strategy(p, {Card::finite(r + 1), Card::finite(s + 1)}, n));
  }
}

TEST_CASE("two-arity family coincides with the binary construction") {
  auto posets = all_posets_up_to_iso(4);
  std::mt19937 rng(23);
  for (int m = 1; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) {
      auto general = build_phi(m, 2, 2, n);
      auto binary = binary_phi(m, n);
      for (int trial = 0; trial < 40; ++trial) {
        const Poset& p = posets[rng() % posets.size()];
        Assignment v;
        for (int i = 1; i <= m; ++i)
          v["x" + std::to_string(i)] = static_cast<int>(rng() % p.size());
        v["y"] = static_cast<int>(rng() % p.size());
        CHECK(evaluate(p, general, v) == plain_evaluate(p, binary, v));
      }
    }
}

TEST_CASE("unbounded parameters: representability needs every finite arity") {
  // with alpha = beta = omega, the bounded families over all arities below
  // the carrier size decide representability through the game route
  for (const Poset& p : all_posets_up_to_iso(4)) {
    bool rep = game_representable(p, {Card::omega(), Card::omega()});
    bool all_axioms = true;
    for (int r = 1; r < p.size() && all_axioms; ++r)
      for (int s = 1; s < p.size() && all_axioms; ++s) {
        Params prm{Card::finite(r + 1), Card::finite(s + 1)};
        int depth = stabilization_depth(p, prm);
        for (int n = 0; n <= depth; ++n)
          if (!all_pairs_n_strategy(p, prm, n)) { all_axioms = false; break; }
      }
    CHECK(rep == all_axioms);
  }
}

TEST_CASE("node counts match the size recurrence") {
  for (int r = 1; r <= 2; ++r)
    for (int s = 1; s <= 2; ++s)
      for (int n = 0; n <= 3; ++n) {
        auto st = formula_stats(build_psi(r, s, n));
        CHECK(st.node_count == psi_node_count(r, s, n));
        CHECK(st.quantifier_depth == psi_quantifier_depth(r, s, n));
        CHECK(st.variable_count == psi_variable_count(r, s, n));
        auto stp = formula_stats(build_phi(2, r, s, n));
        CHECK(stp.node_count == phi_node_count(2, r, s, n));
      }
}

TEST_CASE("axiom names") {
  CHECK(phi_name(1, 2, 2, 0) == "phi_1_2_2_0");
  CHECK(psi_name(2, 2, 4) == "psi_2_2_4");
}
