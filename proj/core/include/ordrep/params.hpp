#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace ordrep {

// A size bound for meet/join arities: a finite cardinal >= 2, or omega.
// Subsets of size strictly below the bound are admitted. On an n-element
// poset omega acts exactly like n+1, since no subset exceeds n elements.
class Card {
 public:
  static Card finite(int k) {
    if (k < 2) throw std::invalid_argument("cardinal parameter must be >= 2");
    return Card(k);
  }
  static constexpr Card omega() { return Card(-1); }

  constexpr bool is_omega() const { return v_ < 0; }
  constexpr int value() const { return v_; }

  // Admitted subset sizes are < size_limit(n) on an n-element poset.
  constexpr int size_limit(int n) const { return is_omega() ? n + 1 : v_; }

  constexpr bool operator==(const Card&) const = default;
  // omega dominates every finite value.
  constexpr bool operator<=(Card o) const {
    if (o.is_omega()) return true;
    if (is_omega()) return false;
    return v_ <= o.v_;
  }

  std::string to_string() const { return is_omega() ? "omega" : std::to_string(v_); }

  // Accepts "omega" or an integer >= 2.
  static std::optional<Card> parse(const std::string& s) {
    if (s == "omega") return omega();
    try {
      size_t pos = 0;
      int k = std::stoi(s, &pos);
      if (pos != s.size() || k < 2) return std::nullopt;
      return finite(k);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }

 private:
  constexpr explicit Card(int v) : v_(v) {}
  int v_;
};

// The pair (alpha, beta) governing filters and games: meets of size < alpha,
// joins of size < beta.
struct Params {
  Card alpha = Card::finite(3);
  Card beta = Card::finite(3);

  bool operator==(const Params&) const = default;
};

}  // namespace ordrep
