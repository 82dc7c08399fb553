#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <acp/report.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <sys/wait.h>

using acp::Json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(ACP_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("canonical subcommand") {
  RunResult r = run_cli("canonical --p 2 --group 2,2");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["module"] == "canonical-construction");
  CHECK(j["lattices"]["p2_rank"] == 8);
  CHECK(j["lattices"]["a2_rank"] == 5);
  CHECK(j["lattices"]["mstar_rank"] == 8);
  CHECK(j["checks"]["splitting_telescope"] == true);
  CHECK(j["checks"]["p_times_c2_trivial_over_mstar"] == true);
}

TEST_CASE("crossed-product subcommand") {
  RunResult r = run_cli("crossed-product --p 2 --group 2,2 --model a2");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["validation"]["ok"] == true);
  CHECK(j["derived_u_b_match"] == true);
  CHECK(j["brauer_class"]["order"] == 4);
  CHECK(j["brauer_class"]["h1_trivial_all_subgroups"] == true);
  CHECK(j["presentation"]["field"] == "F(A2)");
}

TEST_CASE("degeneracy subcommand, both answers") {
  // p = 2 canonical model: decided "no" at the monomial level (the field-level
  // degeneracy has no monomial witness; the system is rejected mod 2 at every
  // noncyclic pair), and a decided answer exits 0
  RunResult no2 = run_cli("degeneracy --p 2 --group 2,2 --model mstar");
  REQUIRE(no2.exit_code == 0);
  Json j2 = Json::parse(no2.out);
  CHECK(j2["kind"] == "degenerate");
  CHECK(j2["answer"] == "no_monomial_witness");
  CHECK(j2["pairs_examined"] == 3);
  CHECK(!j2.contains("witness"));

  RunResult no = run_cli("degeneracy --p 3 --group 3,3 --model mstar");
  REQUIRE(no.exit_code == 0);
  Json jn = Json::parse(no.out);
  CHECK(jn["answer"] == "no_monomial_witness");
  CHECK(jn["pairs_examined"] == 24);
  CHECK(!jn.contains("witness"));

  RunResult st = run_cli("degeneracy --strong --p 2 --group 2,4 --model mstar");
  REQUIRE(st.exit_code == 0);
  CHECK(Json::parse(st.out)["kind"] == "strongly_degenerate");
}

TEST_CASE("witness JSON shape on a planted yes-instance") {
  // the canonical models decide "no", so the yes-side rendering is exercised
  // against a twisted regular presentation
  acp::GroupSpec G = acp::make_group(2, {2, 2});
  acp::Presentation Z = acp::make_zero_presentation(G, acp::regular_lattice(G));
  acp::IntMatrix C = acp::IntMatrix::Zero(Z.rank(), G.rank());
  C(1, 0) = 1;
  C(2, 1) = -1;
  acp::Presentation T = acp::twist_presentation(Z, C);
  acp::DegeneracyVerdict v = acp::is_degenerate(T);
  REQUIRE(v.yes);
  Json j = acp::j_degeneracy(v);
  CHECK(j["kind"] == "degenerate");
  CHECK(j["answer"] == "yes");
  CHECK(j["witness"].contains("m"));
  CHECK(j["witness"].contains("n"));
  CHECK(j["witness"].contains("a"));
  CHECK(j["witness"].contains("b"));
  acp::CentralizerHint h = acp::centralizer_split_hint(T, *v.witness);
  CHECK(h.commute);
  CHECK(h.fixed_field_degree == 4);
}

TEST_CASE("valuation subcommand") {
  RunResult r = run_cli("valuation --p 2 --group 2,4 --model a2");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["semi_ramification"]["semi_ramified"] == true);
  CHECK(j["semi_ramification"]["separability"] == "satisfied-by-model");
  CHECK(j["value_data"]["quotient_factors"] == Json::array({2, 4}));
  CHECK(j["value_data"]["index"] == 8);
  CHECK(j["graded_search"]["candidates_examined"].get<long>() >= 1);
}

TEST_CASE("chow subcommand") {
  RunResult r = run_cli("chow --p 2 --n 3");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["transfer"]["identity_holds"] == true);
  CHECK(j["x"]["tadic_degree"] == 3);
  CHECK(j["y"]["coeffs"] == Json::array({0, 0, 0, -4, -1}));
  CHECK(j["verdict_table"].size() == 5);

  // odd p with the default n = 2
  RunResult odd = run_cli("chow --p 3");
  REQUIRE(odd.exit_code == 0);
  CHECK(Json::parse(odd.out)["transfer"]["scalar"] == 1);
}

TEST_CASE("invalid inputs exit with code 2") {
  CHECK(run_cli("chow --p 3 --p2").exit_code == 2);           // two-adic assertion on odd p
  CHECK(run_cli("chow --p 2 --n 2").exit_code == 2);          // out-of-regime truncation
  CHECK(run_cli("canonical --p 2 --group 3,3").exit_code == 2);
  CHECK(run_cli("canonical --p 2 --group 2,x").exit_code == 2);
  CHECK(run_cli("canonical --p 2").exit_code == 2);           // missing --group
  CHECK(run_cli("degeneracy --p 2 --group 2,2 --model bogus").exit_code == 2);
  CHECK(run_cli("verify --level bogus").exit_code == 2);
  CHECK(run_cli("").exit_code == 2);                          // a subcommand is required
}

TEST_CASE("analyze matches the reference reports byte for byte") {
  const std::string dir = GOLDEN_DIR;
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"analyze --p 2 --group 2,2 --model a2", "analyze_p2_2x2_a2.json"},
      {"analyze --p 2 --group 2,2 --model mstar", "analyze_p2_2x2_mstar.json"},
      {"analyze --p 3 --group 3,3 --model mstar", "analyze_p3_3x3_mstar.json"},
  };
  for (const auto& [args, golden] : cases) {
    RunResult r = run_cli(args);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == slurp(dir + "/" + golden));
  }
}

TEST_CASE("analyze output is deterministic across runs and thread counts") {
  RunResult a = run_cli("analyze --p 2 --group 2,2 --model mstar");
  RunResult b = run_cli("analyze --p 2 --group 2,2 --model mstar");
  RunResult c = run_cli("analyze --p 2 --group 2,2 --model mstar --threads 4");
  REQUIRE(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
}

TEST_CASE("analyze draws the cited conclusions") {
  RunResult r = run_cli("analyze --p 3 --group 3,3 --model mstar");
  REQUIRE(r.exit_code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["computed"]["equivalence_check"]["agree"] == true);
  CHECK(j["computed"]["degeneracy"]["answer"] == "no_monomial_witness");

  bool indecomposable = false, cited = true;
  for (const Json& c : j["conclusions"]) {
    const std::string s = c["statement"].get<std::string>();
    if (s.find("indecomposable of index 9") != std::string::npos) {
      indecomposable = true;
      CHECK(c["kind"] == "cited");
      CHECK(c["citation"] == "rule:indecomposable-odd");
    }
    if (!c.contains("citation") || !c.contains("kind")) cited = false;
  }
  CHECK(indecomposable);
  CHECK(cited);

  // the p = 2 side: semi-ramification plus the cited field-level degeneracy
  // statement, which must not be presented as computed
  Json k = Json::parse(run_cli("analyze --p 2 --group 2,2 --model mstar").out);
  bool semiramified = false, twoadic = false;
  for (const Json& c : k["conclusions"]) {
    if (c["statement"].get<std::string>().find("semi-ramified") != std::string::npos)
      semiramified = true;
    if (c["citation"] == "rule:two-adic-degenerate") {
      twoadic = true;
      CHECK(c["kind"] == "cited");
    }
  }
  CHECK(semiramified);
  CHECK(twoadic);
  CHECK(k["computed"]["degeneracy"]["answer"] == "no_monomial_witness");
}

TEST_CASE("plain-text rendering") {
  RunResult r = run_cli("canonical --p 2 --group 2,2 --text");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.rfind("module: canonical-construction", 0) == 0);
  CHECK(r.out.find('{') == std::string::npos);
}
