#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "corpus.hpp"
#include "oracles.hpp"
#include "ordrep/filters.hpp"
#include "ordrep/poset.hpp"

using namespace ordrep;
using namespace ordrep::testing;
namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(ORDREP_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 512> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

fs::path write_temp(const std::string& name, const std::string& content) {
  fs::path dir = fs::temp_directory_path() / "ordrep_cli_tests";
  fs::create_directories(dir);
  fs::path path = dir / name;
  std::ofstream f(path);
  f << content;
  return path;
}

const std::string kM3 =
    "elements: bot a b c top\n"
    "le: bot a\nle: bot b\nle: bot c\n"
    "le: a top\nle: b top\nle: c top\n";

const std::string kHexagon =
    "elements: bot a b c u v top\n"
    "le: bot a\nle: bot b\nle: bot c\n"
    "le: a u\nle: b u\nle: c u\n"
    "le: a v\nle: b v\nle: c v\n"
    "le: u top\nle: v top\n";

const std::string kChain3 = "elements: c0 c1 c2\nle: c0 c1\nle: c1 c2\n";
const std::string kChain2 = "elements: c0 c1\nle: c0 c1\n";
const std::string kAntichain2 = "elements: a0 a1\n";

}  // namespace

TEST_CASE("check: report keys and exit codes") {
  auto m3 = write_temp("m3.poset", kM3);
  auto r = run_cli("check " + m3.string());
  CHECK(r.code == 1);
  CHECK(r.out ==
        "alpha: 3\n"
        "beta: 3\n"
        "representable: false\n"
        "game_agrees: true\n");

  auto hex = write_temp("hexagon.poset", kHexagon);
  r = run_cli("check " + hex.string());
  CHECK(r.code == 0);
  CHECK(r.out ==
        "alpha: 3\n"
        "beta: 3\n"
        "representable: true\n"
        "game_agrees: true\n");

  auto chain = write_temp("chain3.poset", kChain3);
  r = run_cli("check " + chain.string() + " --alpha 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("representable: true\n") != std::string::npos);

  r = run_cli("check " + m3.string() + " --alpha omega --beta omega --format json");
  CHECK(r.code == 1);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["alpha"] == "omega");
  CHECK(j["representable"] == false);
  CHECK(j["game_agrees"] == true);
}

TEST_CASE("check: parse and usage failures exit 64") {
  auto bad = write_temp("bad.poset", "elements: a b\nle: a z\n");
  CHECK(run_cli("check " + bad.string()).code == 64);
  CHECK(run_cli("check /nonexistent.poset").code == 64);
  CHECK(run_cli("check " + bad.string() + " --alpha 1").code == 64);
  CHECK(run_cli("frobnicate").code == 64);
}

TEST_CASE("game: depth, trace, usage errors") {
  auto m3 = write_temp("m3.poset", kM3);
  auto r = run_cli("game " + m3.string() + " a b");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "alpha: 3\n"
        "beta: 3\n"
        "depth: 3\n"
        "A: up top\n"
        "E: top\n"
        "A: join {b,c}\n"
        "E: c\n"
        "A: meet {a,c}\n"
        "E: bot\n"
        "A: up b\n"
        "E: b\n");

  auto hex = write_temp("hexagon.poset", kHexagon);
  r = run_cli("game " + hex.string() + " a b");
  CHECK(r.code == 0);
  CHECK(r.out.find("depth: omega\n") != std::string::npos);
  CHECK(r.out.find("A: ") == std::string::npos);

  CHECK(run_cli("game " + m3.string() + " a a").code == 64);
  CHECK(run_cli("game " + m3.string() + " a zz").code == 64);

  r = run_cli("game " + m3.string() + " a b --n 3");
  CHECK(r.out.find("n_strategy: true\n") != std::string::npos);

  r = run_cli("game " + m3.string() + " a b --format json");
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["depth"] == 3);
  CHECK(j["trace"].size() == 8);
  r = run_cli("game " + hex.string() + " a b --format json");
  j = nlohmann::json::parse(r.out);
  CHECK(j["depth"] == "omega");
}

TEST_CASE("axioms: naming and grammar") {
  auto r = run_cli("axioms --r 1 --s 1 --n 0");
  CHECK(r.code == 0);
  CHECK(r.out == "fof(psi_1_1_0, axiom, ![X0]: ![X1]: (~leq(X0,X1) => X1 != X0)).\n");

  r = run_cli("axioms --r 2 --s 2 --n 2");
  CHECK(r.code == 0);
  int lines = 0;
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line)) {
    CHECK(line.find("fof(psi_2_2_" + std::to_string(lines)) == 0);
    CHECK(tptp_check(line) == "");
    ++lines;
  }
  CHECK(lines == 3);
}

TEST_CASE("eval: direct and via-game routes") {
  auto m3 = write_temp("m3.poset", kM3);
  auto r = run_cli("eval " + m3.string() + " --r 2 --s 2 --n 2");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "psi_2_2_0: true\n"
        "psi_2_2_1: true\n"
        "psi_2_2_2: true\n");

  r = run_cli("eval " + m3.string() + " --r 2 --s 2 --n 4 --via-game");
  CHECK(r.code == 0);
  CHECK(r.out.find("psi_2_2_3: false\n") != std::string::npos);
  CHECK(r.out.find("psi_2_2_4: false\n") != std::string::npos);

  auto chain = write_temp("chain3.poset", kChain3);
  r = run_cli("eval " + chain.string() + " --r 2 --s 2 --n 2");
  CHECK(r.out ==
        "psi_2_2_0: true\n"
        "psi_2_2_1: true\n"
        "psi_2_2_2: true\n");

  // envelope: n above 3 needs --via-game
  CHECK(run_cli("eval " + m3.string() + " --r 2 --s 2 --n 4").code == 64);
}

TEST_CASE("represent: success, failure witness, and re-verification") {
  auto chain = write_temp("chain3.poset", kChain3);
  auto r = run_cli("represent " + chain.string());
  CHECK(r.code == 0);
  CHECK(r.out ==
        "alpha: 3\n"
        "beta: 3\n"
        "filter 0: {c2}\n"
        "filter 1: {c1, c2}\n"
        "h c0 = {}\n"
        "h c1 = {1}\n"
        "h c2 = {0, 1}\n"
        "verified: true\n");

  auto m3 = write_temp("m3.poset", kM3);
  r = run_cli("represent " + m3.string());
  CHECK(r.code == 1);
  CHECK(r.out.find("not representable; witness pair: a !<= bot\n") != std::string::npos);

  // the printed family re-parses, passes the filter check, and separates
  auto hex = write_temp("hexagon.poset", kHexagon);
  r = run_cli("represent " + hex.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("verified: true\n") != std::string::npos);
  Poset hexp = parse_poset(kHexagon);
  auto parsed = parse_representation(hexp, r.out);
  Params prm{Card::finite(3), Card::finite(3)};
  for (ElementSet g : parsed.filters) CHECK(is_ab_filter(hexp, g, prm));
  for (int a = 0; a < hexp.size(); ++a)
    for (int b = 0; b < hexp.size(); ++b) {
      if (hexp.leq(a, b)) continue;
      bool separated = false;
      for (ElementSet g : parsed.filters)
        if (g.contains(a) && !g.contains(b)) separated = true;
      CHECK(separated);
    }
}

TEST_CASE("analyze") {
  auto m3 = write_temp("m3.poset", kM3);
  auto r = run_cli("analyze " + m3.string());
  CHECK(r.code == 0);
  CHECK(r.out ==
        "is_meet_semilattice: true\n"
        "is_join_semilattice: true\n"
        "is_lattice: true\n"
        "distributive: false\n"
        "k_distributive_2: true\n"
        "k_distributive_3: false\n"
        "k_distributive_4: false\n"
        "k_distributive_5: false\n"
        "k_distributive_omega: false\n");

  auto anti = write_temp("antichain2.poset", kAntichain2);
  r = run_cli("analyze " + anti.string());
  CHECK(r.out.find("is_meet_semilattice: false\n") != std::string::npos);
  CHECK(r.out.find("k_distributive") == std::string::npos);

  r = run_cli("analyze " + m3.string() + " --format json");
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["is_lattice"] == true);
  CHECK(j["distributive"] == false);
  CHECK(j["k_distributive_omega"] == false);
}

TEST_CASE("product: written file is the boolean square") {
  auto chain = write_temp("chain2.poset", kChain2);
  fs::path out = fs::temp_directory_path() / "ordrep_cli_tests" / "square.poset";
  auto r = run_cli("product " + chain.string() + " " + chain.string() + " --out " +
                   out.string());
  CHECK(r.code == 0);
  std::ifstream f(out);
  std::stringstream ss;
  ss << f.rdbuf();
  Poset sq = parse_poset(ss.str());
  CHECK(sq.size() == 4);
  CHECK(order_isomorphic(sq, standard_poset("boolean", 2)));
}
