// ordrep command line: representability checks, game play-outs, axiom
// emission, representation construction, order analysis, and products.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordrep/analysis.hpp"
#include "ordrep/axioms.hpp"
#include "ordrep/filters.hpp"
#include "ordrep/formula.hpp"
#include "ordrep/game.hpp"
#include "ordrep/poset.hpp"

namespace {

constexpr int kUsageError = 64;

using ordrep::Card;
using ordrep::Params;
using ordrep::Poset;

struct Output {
  std::vector<std::string> lines;
  nlohmann::ordered_json json = nlohmann::ordered_json::object();

  void add(const std::string& key, bool v) {
    lines.push_back(key + ": " + (v ? "true" : "false"));
    json[key] = v;
  }
  void add(const std::string& key, int v) {
    lines.push_back(key + ": " + std::to_string(v));
    json[key] = v;
  }
  void add(const std::string& key, const std::string& v) {
    lines.push_back(key + ": " + v);
    json[key] = v;
  }
  void add_card(const std::string& key, Card c) {
    lines.push_back(key + ": " + c.to_string());
    if (c.is_omega()) json[key] = "omega";
    else json[key] = c.value();
  }

  std::string text() const {
    std::string out;
    for (const auto& l : lines) { out += l; out += '\n'; }
    return out;
  }
};

struct CommonOpts {
  std::string format = "text";
  std::string out_path;
};

void write_output(const Output& rep, const CommonOpts& opts) {
  std::string payload =
      opts.format == "json" ? rep.json.dump(2) + "\n" : rep.text();
  if (opts.out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(opts.out_path);
    if (!f) throw std::runtime_error("cannot write '" + opts.out_path + "'");
    f << payload;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Poset load_poset(const std::string& path) { return ordrep::parse_poset(read_file(path)); }

Card parse_card_opt(const std::string& text, const char* flag) {
  auto c = Card::parse(text);
  if (!c) throw std::runtime_error(std::string(flag) + " needs an integer >= 2 or 'omega'");
  return *c;
}

int cmd_check(const std::string& path, const std::string& alpha, const std::string& beta,
              const CommonOpts& opts) {
  Poset p = load_poset(path);
  Params prm{parse_card_opt(alpha, "--alpha"), parse_card_opt(beta, "--beta")};
  bool rep = ordrep::is_representable(p, prm);
  bool via_game = ordrep::game_representable(p, prm);
  bool agrees = rep == via_game;
  Output out;
  out.add_card("alpha", prm.alpha);
  out.add_card("beta", prm.beta);
  out.add("representable", rep);
  out.add("game_agrees", agrees);
  write_output(out, opts);
  if (!agrees) return 2;
  return rep ? 0 : 1;
}

int cmd_game(const std::string& path, const std::string& pname, const std::string& qname,
             const std::string& alpha, const std::string& beta, std::optional<int> rounds,
             const CommonOpts& opts) {
  Poset p = load_poset(path);
  Params prm{parse_card_opt(alpha, "--alpha"), parse_card_opt(beta, "--beta")};
  int a = p.index_of(pname), b = p.index_of(qname);
  if (a < 0) throw std::runtime_error("unknown element '" + pname + "'");
  if (b < 0) throw std::runtime_error("unknown element '" + qname + "'");
  if (p.leq(a, b))
    throw std::runtime_error("'" + pname + " <= " + qname +
                             "' holds; the game needs an incomparable start");

  ordrep::GameSolver solver(p, prm);
  ordrep::GamePosition pos{ordrep::ElementSet::single(a), ordrep::ElementSet::single(b)};
  ordrep::SurvivalDepth depth = solver.survival_depth(pos);

  Output out;
  out.add_card("alpha", prm.alpha);
  out.add_card("beta", prm.beta);
  out.lines.push_back("depth: " + depth.to_string());
  if (depth.is_finite()) out.json["depth"] = depth.rounds();
  else out.json["depth"] = depth.to_string();
  if (rounds) out.add("n_strategy", solver.has_n_strategy(pos, *rounds));
  if (depth.is_finite()) {
    auto trace = solver.forcing_trace(pos);
    auto arr = nlohmann::ordered_json::array();
    for (const auto& step : trace) {
      out.lines.push_back("A: " + ordrep::format_move(p, step.move));
      out.lines.push_back("E: " + p.name(step.added));
      arr.push_back("A: " + ordrep::format_move(p, step.move));
      arr.push_back("E: " + p.name(step.added));
    }
    out.json["trace"] = arr;
  }
  write_output(out, opts);
  return 0;
}

int cmd_axioms(int r, int s, int n, const CommonOpts& opts) {
  Output out;
  for (int k = 0; k <= n; ++k) {
    std::string name = ordrep::psi_name(r, s, k);
    std::string fof = ordrep::emit_tptp(ordrep::build_psi(r, s, k), name);
    out.lines.push_back(fof);
    out.json[name] = fof;
  }
  write_output(out, opts);
  return 0;
}

int cmd_eval(const std::string& path, int r, int s, int n, bool via_game,
             const CommonOpts& opts) {
  Poset p = load_poset(path);
  if (!via_game && (n > 3 || p.size() > 6))
    throw std::runtime_error(
        "direct evaluation is limited to n <= 3 on posets of at most 6 elements; "
        "pass --via-game for larger inputs");
  Output out;
  ordrep::Evaluator ev(p);
  for (int k = 0; k <= n; ++k) {
    bool val;
    if (via_game) {
      Params prm{Card::finite(r + 1), Card::finite(s + 1)};
      val = ordrep::all_pairs_n_strategy(p, prm, k);
    } else {
      val = ev.evaluate(ordrep::build_psi(r, s, k), {});
    }
    out.add(ordrep::psi_name(r, s, k), val);
  }
  write_output(out, opts);
  return 0;
}

int cmd_represent(const std::string& path, const std::string& alpha, const std::string& beta,
                  const CommonOpts& opts) {
  Poset p = load_poset(path);
  Params prm{parse_card_opt(alpha, "--alpha"), parse_card_opt(beta, "--beta")};
  Output out;
  out.add_card("alpha", prm.alpha);
  out.add_card("beta", prm.beta);
  auto rep = ordrep::build_representation(p, prm);
  if (!rep) {
    std::string witness;
    for (int a = 0; a < p.size() && witness.empty(); ++a)
      for (int b = 0; b < p.size(); ++b)
        if (!p.leq(a, b) && !ordrep::separating_filter(p, a, b, prm)) {
          witness = p.name(a) + " !<= " + p.name(b);
          break;
        }
    out.lines.push_back("not representable; witness pair: " + witness);
    out.json["representable"] = false;
    out.json["witness_pair"] = witness;
    write_output(out, opts);
    return 1;
  }

  auto filters = nlohmann::ordered_json::array();
  for (size_t f = 0; f < rep->filters.size(); ++f) {
    out.lines.push_back("filter " + std::to_string(f) + ": " +
                        ordrep::format_set(p, rep->filters[f]));
    auto names = nlohmann::ordered_json::array();
    for (int e : rep->filters[f]) names.push_back(p.name(e));
    filters.push_back(names);
  }
  auto h = nlohmann::ordered_json::object();
  for (int e = 0; e < p.size(); ++e) {
    std::string ids;
    for (size_t i = 0; i < rep->h[e].size(); ++i) {
      if (i) ids += ", ";
      ids += std::to_string(rep->h[e][i]);
    }
    out.lines.push_back("h " + p.name(e) + " = {" + ids + "}");
    h[p.name(e)] = rep->h[e];
  }
  out.json["filters"] = filters;
  out.json["h"] = h;
  out.add("verified", ordrep::verify_embedding(p, *rep, prm));
  write_output(out, opts);
  return 0;
}

int cmd_analyze(const std::string& path, const CommonOpts& opts) {
  Poset p = load_poset(path);
  auto rep = ordrep::classify(p);
  Output out;
  out.add("is_meet_semilattice", rep.meet_semilattice);
  out.add("is_join_semilattice", rep.join_semilattice);
  out.add("is_lattice", rep.lattice);
  out.add("distributive", rep.distributive_lattice);
  for (auto [k, flag] : rep.k_distributive) {
    std::string key = k == p.size() + 1 ? "k_distributive_omega"
                                        : "k_distributive_" + std::to_string(k);
    out.add(key, flag);
  }
  write_output(out, opts);
  return 0;
}

int cmd_product(const std::string& path_a, const std::string& path_b,
                const std::string& out_path) {
  Poset prod = ordrep::product(load_poset(path_a), load_poset(path_b));
  std::string text = ordrep::write_poset_file(prod);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write '" + out_path + "'");
    f << text;
  }
  return 0;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", opts.out_path, "Write the report to a file");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite poset representability toolkit"};
  app.require_subcommand(1);

  std::string path, path_b, pname, qname;
  std::string alpha = "3", beta = "3";
  int r = 1, s = 1, n = 0;
  std::optional<int> game_rounds;
  bool via_game = false;
  CommonOpts opts;
  int rc = 0;

  auto* check = app.add_subcommand("check", "Decide representability two independent ways");
  check->add_option("path", path, "Poset file")->required();
  check->add_option("--alpha", alpha, "Meet-arity bound (>= 2 or 'omega')");
  check->add_option("--beta", beta, "Join-arity bound (>= 2 or 'omega')");
  add_common(check, opts);
  check->callback([&] { rc = cmd_check(path, alpha, beta, opts); });

  auto* game = app.add_subcommand("game", "Survival depth and forcing trace for one pair");
  game->add_option("path", path, "Poset file")->required();
  game->add_option("p", pname, "Defender's starting element")->required();
  game->add_option("q", qname, "Forbidden element")->required();
  game->add_option("--alpha", alpha, "Meet-arity bound (>= 2 or 'omega')");
  game->add_option("--beta", beta, "Join-arity bound (>= 2 or 'omega')");
  game->add_option("--n", game_rounds, "Also report whether an n-round strategy exists")
      ->check(CLI::NonNegativeNumber);
  add_common(game, opts);
  game->callback([&] { rc = cmd_game(path, pname, qname, alpha, beta, game_rounds, opts); });

  auto* axioms = app.add_subcommand("axioms", "Emit the axiom family psi_{r,s,0..n} as TPTP");
  axioms->add_option("--r", r, "Meet arity (>= 1)")->required()->check(CLI::PositiveNumber);
  axioms->add_option("--s", s, "Join arity (>= 1)")->required()->check(CLI::PositiveNumber);
  axioms->add_option("--n", n, "Largest round index")->required()->check(CLI::NonNegativeNumber);
  add_common(axioms, opts);
  axioms->callback([&] { rc = cmd_axioms(r, s, n, opts); });

  auto* eval = app.add_subcommand("eval", "Evaluate psi_{r,s,0..n} on a poset");
  eval->add_option("path", path, "Poset file")->required();
  eval->add_option("--r", r, "Meet arity (>= 1)")->required()->check(CLI::PositiveNumber);
  eval->add_option("--s", s, "Join arity (>= 1)")->required()->check(CLI::PositiveNumber);
  eval->add_option("--n", n, "Largest round index")->required()->check(CLI::NonNegativeNumber);
  eval->add_flag("--via-game", via_game, "Use the equivalent game computation");
  add_common(eval, opts);
  eval->callback([&] { rc = cmd_eval(path, r, s, n, via_game, opts); });

  auto* represent = app.add_subcommand("represent", "Build and verify a powerset representation");
  represent->add_option("path", path, "Poset file")->required();
  represent->add_option("--alpha", alpha, "Meet-arity bound (>= 2 or 'omega')");
  represent->add_option("--beta", beta, "Join-arity bound (>= 2 or 'omega')");
  add_common(represent, opts);
  represent->callback([&] { rc = cmd_represent(path, alpha, beta, opts); });

  auto* analyze = app.add_subcommand("analyze", "Semilattice/lattice/distributivity report");
  analyze->add_option("path", path, "Poset file")->required();
  add_common(analyze, opts);
  analyze->callback([&] { rc = cmd_analyze(path, opts); });

  auto* prod = app.add_subcommand("product", "Write the componentwise product of two posets");
  prod->add_option("path_a", path, "First poset file")->required();
  prod->add_option("path_b", path_b, "Second poset file")->required();
  prod->add_option("--out", opts.out_path, "Write the product poset to a file");
  prod->callback([&] { rc = cmd_product(path, path_b, opts.out_path); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return rc;
}
