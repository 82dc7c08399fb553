// acp: construct abelian crossed products, compute their cohomology, and
// decide degeneracy / ramification / filtration questions about them.
//
// Exit codes: 0 = success (a "no" answer is still a decision), 1 = a
// verification failed (witness check, determinism check, golden mismatch),
// 2 = invalid input.

#include <acp/verify.hpp>

#include <CLI11.hpp>

#include <iostream>

namespace {

struct Options {
  long p = 0;
  std::string group;
  std::string model = "mstar";
  bool text = false;
  long bound = 4000000;
  unsigned long seed = 12345;
  int threads = 1;
};

void emit(const acp::Json& j, bool text) {
  if (text)
    std::cout << acp::render_text(j);
  else
    std::cout << j.dump(2) << "\n";
}

acp::GroupSpec group_of(const Options& o) {
  if (o.p == 0) throw acp::BadInput("this subcommand needs --p");
  if (o.group.empty()) throw acp::BadInput("this subcommand needs --group");
  return acp::parse_group(o.p, o.group);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"abelian crossed products: construction, cohomology, degeneracy"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--p", opt.p, "the prime");
  app.add_option("--group", opt.group, "cyclic orders, comma separated (e.g. 2,4)");
  app.add_option("--model", opt.model, "coefficient model: a2 or mstar")
      ->check(CLI::IsMember({"a2", "mstar"}));
  bool json_flag = false;
  app.add_flag("--json", json_flag, "JSON output (the default)");
  app.add_flag("--text", opt.text, "indented plain-text rendering");
  app.add_option("--bound", opt.bound, "size cap for cohomology enumerations");
  app.add_option("--seed", opt.seed, "seed for randomized verification");
  app.add_option("--threads", opt.threads, "worker threads for searches");

  CLI::App* canonical = app.add_subcommand("canonical", "canonical lattices, splitting map, cocycle");
  CLI::App* crossed = app.add_subcommand("crossed-product", "presentation, validation, Brauer class order");
  CLI::App* degeneracy = app.add_subcommand("degeneracy", "decide monomial degeneracy");
  bool strong = false;
  degeneracy->add_flag("--strong", strong, "decide strong degeneracy instead");
  CLI::App* valuation = app.add_subcommand("valuation", "value group data and the graded central search");
  CLI::App* chow = app.add_subcommand("chow", "filtration generators, transfer identity, torsion verdicts");
  long chow_n = 2;
  chow->add_option("--n", chow_n, "exponent in the index p^n");
  bool two_adic = false;
  chow->add_flag("--p2", two_adic, "assert the two-adic regime (requires --p 2)");
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "full pipeline report with cited conclusions");
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the acceptance criteria");
  std::string level = "fast";
  verify_cmd->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  std::string golden_dir;
  verify_cmd->add_option("--golden-dir", golden_dir, "directory of reference analyze reports");

  for (CLI::App* sub : {canonical, crossed, degeneracy, valuation, chow, analyze_cmd, verify_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*canonical) {
      emit(acp::canonical_report(group_of(opt)), opt.text);
    } else if (*crossed) {
      emit(acp::crossed_product_report(group_of(opt), opt.model, opt.bound), opt.text);
    } else if (*degeneracy) {
      emit(acp::degeneracy_report(group_of(opt), opt.model, strong, opt.threads), opt.text);
    } else if (*valuation) {
      emit(acp::valuation_report(group_of(opt), opt.model, opt.threads), opt.text);
    } else if (*chow) {
      if (opt.p == 0) throw acp::BadInput("chow needs --p");
      if (two_adic && opt.p != 2) throw acp::BadInput("--p2 asserts the two-adic regime; got odd --p");
      emit(acp::chow_report(opt.p, chow_n), opt.text);
    } else if (*analyze_cmd) {
      acp::AnalyzeOptions a;
      a.threads = opt.threads;
      a.size_bound = opt.bound;
      emit(acp::analyze(group_of(opt), opt.model, a), opt.text);
    } else if (*verify_cmd) {
      acp::VerifySummary s = acp::verify_suite(level, opt.threads, opt.seed, golden_dir);
      emit(acp::j_verify(s), opt.text);
      return s.accepted ? 0 : 1;
    }
  } catch (const acp::BadInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const acp::BoundExceeded& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const acp::InvalidRegime& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const acp::LengthMismatch& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  } catch (const acp::Error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
