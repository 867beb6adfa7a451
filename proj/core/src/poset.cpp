#include "ordrep/poset.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ordrep {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
              (c >= '0' && c <= '9') || c == '_' || c == ',';
    if (!ok) return false;
  }
  return true;
}

}  // namespace

Poset Poset::make(std::vector<std::string> names,
                  const std::vector<std::pair<int, int>>& le_pairs) {
  const int n = static_cast<int>(names.size());
  if (n == 0) throw std::invalid_argument("poset needs at least one element");
  if (n > 64) throw std::invalid_argument("posets are limited to 64 elements");
  std::map<std::string, int> seen;
  for (int i = 0; i < n; ++i) {
    if (!valid_name(names[i]))
      throw std::invalid_argument("bad element name '" + names[i] + "'");
    if (!seen.emplace(names[i], i).second)
      throw std::invalid_argument("duplicate element name '" + names[i] + "'");
  }

  std::vector<ElementSet> up(n);
  for (int i = 0; i < n; ++i) up[i].add(i);
  for (auto [a, b] : le_pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw std::invalid_argument("relation index out of range");
    up[a].add(b);
  }

  // Reflexive-transitive closure (Warshall over masks).
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (up[i].contains(k)) up[i] |= up[k];

  for (int i = 0; i < n; ++i)
    for (int j : up[i])
      if (j != i && up[j].contains(i))
        throw std::invalid_argument("antisymmetry violated: '" + names[i] +
                                    "' and '" + names[j] + "' lie on a cycle");

  return Poset(std::move(names), std::move(up));
}

int Poset::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

ElementSet Poset::down_set(int i) const {
  ElementSet d;
  for (int j = 0; j < size(); ++j)
    if (up_[j].contains(i)) d.add(j);
  return d;
}

bool Poset::is_up_set(ElementSet s) const {
  for (int i : s)
    if (!up_[i].subset_of(s)) return false;
  return true;
}

ElementSet Poset::upper_bounds(ElementSet s) const {
  ElementSet r = carrier();
  for (int i : s) r &= up_[i];
  return r;
}

ElementSet Poset::lower_bounds(ElementSet s) const {
  ElementSet r;
  for (int j = 0; j < size(); ++j)
    if (s.subset_of(up_[j])) r.add(j);
  return r;
}

std::optional<int> Poset::least(ElementSet s) const {
  for (int g : s)
    if (s.subset_of(up_[g])) return g;
  return std::nullopt;
}

std::optional<int> Poset::greatest(ElementSet s) const {
  for (int g : s) {
    bool above_all = true;
    for (int x : s)
      if (!up_[x].contains(g)) { above_all = false; break; }
    if (above_all) return g;
  }
  return std::nullopt;
}

std::optional<int> Poset::meet_of(ElementSet s) const {
  if (s.empty()) throw std::invalid_argument("meet of the empty set");
  return greatest(lower_bounds(s));
}

std::optional<int> Poset::join_of(ElementSet s) const {
  if (s.empty()) throw std::invalid_argument("join of the empty set");
  return least(upper_bounds(s));
}

Poset Poset::reversed() const {
  std::vector<ElementSet> up(size());
  for (int i = 0; i < size(); ++i) up[i] = down_set(i);
  return Poset(names_, std::move(up));
}

Poset parse_poset(const std::string& text) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> les;
  bool saw_elements = false;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;  // blank line
    if (key[0] == '#') continue;
    auto fail = [&](const std::string& msg) -> void {
      throw std::invalid_argument("line " + std::to_string(lineno) + ": " + msg);
    };
    if (key == "elements:") {
      if (saw_elements) fail("repeated 'elements:' line");
      saw_elements = true;
      std::string nm;
      while (ls >> nm) names.push_back(nm);
      if (names.empty()) fail("empty element list");
    } else if (key == "le:") {
      std::string a, b, extra;
      if (!(ls >> a >> b) || (ls >> extra)) fail("'le:' expects exactly two names");
      les.emplace_back(a, b);
    } else {
      fail("unknown key '" + key + "'");
    }
  }
  if (!saw_elements) throw std::invalid_argument("missing 'elements:' line");

  Poset::make(names, {});  // surface name problems before resolving relations
  std::vector<std::pair<int, int>> pairs;
  auto index = [&](const std::string& nm) {
    for (int i = 0; i < static_cast<int>(names.size()); ++i)
      if (names[i] == nm) return i;
    throw std::invalid_argument("'le:' references unknown element '" + nm + "'");
  };
  for (auto& [a, b] : les) pairs.emplace_back(index(a), index(b));
  return Poset::make(std::move(names), pairs);
}

std::string write_poset_file(const Poset& p) {
  std::ostringstream out;
  out << "elements:";
  for (int i = 0; i < p.size(); ++i) out << ' ' << p.name(i);
  out << '\n';
  for (int i = 0; i < p.size(); ++i) {
    for (int j : p.up_set(i)) {
      if (j == i) continue;
      // covering pair: nothing strictly between i and j
      bool cover = true;
      for (int z : p.up_set(i)) {
        if (z != i && z != j && p.leq(z, j)) { cover = false; break; }
      }
      if (cover) out << "le: " << p.name(i) << ' ' << p.name(j) << '\n';
    }
  }
  return out.str();
}

Poset standard_poset(const std::string& name, int k) {
  using Pairs = std::vector<std::pair<int, int>>;
  if (name == "chain") {
    if (k <= 0) throw std::invalid_argument("chain needs k >= 1");
    std::vector<std::string> names;
    Pairs rel;
    for (int i = 0; i < k; ++i) {
      names.push_back("c" + std::to_string(i));
      if (i + 1 < k) rel.emplace_back(i, i + 1);
    }
    return Poset::make(std::move(names), rel);
  }
  if (name == "antichain") {
    if (k <= 0) throw std::invalid_argument("antichain needs k >= 1");
    std::vector<std::string> names;
    for (int i = 0; i < k; ++i) names.push_back("a" + std::to_string(i));
    return Poset::make(std::move(names), {});
  }
  if (name == "boolean") {
    if (k < 0 || k > 6) throw std::invalid_argument("boolean needs 0 <= k <= 6");
    int n = 1 << k;
    std::vector<std::string> names;
    Pairs rel;
    for (int m = 0; m < n; ++m) names.push_back("s" + std::to_string(m));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if ((a & b) == a && a != b) rel.emplace_back(a, b);
    return Poset::make(std::move(names), rel);
  }
  if (name == "M3") {
    return Poset::make({"bot", "a", "b", "c", "top"},
                       {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  }
  if (name == "N5") {
    return Poset::make({"bot", "a", "c", "b", "top"},
                       {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}});
  }
  if (name == "hexagon_witness") {
    // bot < a,b,c < u,v < top with u,v incomparable
    return Poset::make({"bot", "a", "b", "c", "u", "v", "top"},
                       {{0, 1}, {0, 2}, {0, 3},
                        {1, 4}, {2, 4}, {3, 4},
                        {1, 5}, {2, 5}, {3, 5},
                        {4, 6}, {5, 6}});
  }
  throw std::invalid_argument("unknown standard poset '" + name + "'");
}

Poset product(const Poset& p, const Poset& q) {
  const int np = p.size(), nq = q.size();
  if (np * nq > 64) throw std::invalid_argument("product exceeds 64 elements");
  std::vector<std::string> names;
  names.reserve(static_cast<size_t>(np) * nq);
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j)
      names.push_back(p.name(i) + "," + q.name(j));
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j)
      for (int i2 : p.up_set(i))
        for (int j2 : q.up_set(j))
          if (i != i2 || j != j2) rel.emplace_back(i * nq + j, i2 * nq + j2);
  return Poset::make(std::move(names), rel);
}

std::string format_set(const Poset& p, ElementSet s, const char* sep) {
  std::string out = "{";
  bool firstone = true;
  for (int i : s) {
    if (!firstone) out += sep;
    out += p.name(i);
    firstone = false;
  }
  out += "}";
  return out;
}

}  // namespace ordrep
