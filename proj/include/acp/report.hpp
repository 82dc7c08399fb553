#pragma once

// Report assembly: per-subcommand JSON builders, the composite `analyze`
// pipeline, the verify suite behind `acp verify`, and a plain-text renderer.
// Computed values always sit under "computed" with a "module" provenance
// field; conclusions are {statement, citation, kind} with kind "computed" or
// "cited" — statements that lean on quoted results are cited by rule id and
// never presented as computed.

#include <acp/json_io.hpp>
#include <acp/oracle.hpp>

#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace acp {

inline Presentation model_presentation(const CanonicalData& D, const std::string& model) {
  if (model == "a2") return make_a2_presentation(D);
  if (model == "mstar") return make_mstar_presentation(D);
  throw BadInput("unknown model '" + model + "' (expected a2 or mstar)");
}

inline long log_p_order(const GroupSpec& G) {
  long n = 0;
  long m = G.order();
  while (m % G.p == 0) {
    m /= G.p;
    ++n;
  }
  if (m != 1) throw InternalRankMismatch("group order is not a prime power");
  return n;
}

// ---------------------------------------------------------------- canonical

inline Json canonical_report(const GroupSpec& G) {
  CanonicalData D = build_canonical(G);
  CochainContext p2_ctx = make_full_context(G, D.P.p2);
  CochainContext a2_ctx = make_full_context(G, D.P.a2);

  Json j;
  j["module"] = "canonical-construction";
  j["group"] = j_group(G);
  j["lattices"] = Json{{"p2_rank", static_cast<long>(D.P.p2.rank)},
                       {"ig_rank", static_cast<long>(D.P.ig.rank)},
                       {"a2_rank", static_cast<long>(D.P.a2.rank)},
                       {"mstar_rank", static_cast<long>(D.mstar.rank)}};
  j["phi"] = j_cochain(p2_ctx, D.phi);
  j["c2"] = j_cochain(a2_ctx, D.c2);
  j["b"] = j_mat(D.b);
  Json u = Json::array();
  for (int i = 0; i < G.rank(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < G.rank(); ++k)
      row.push_back(j_vec(D.u[static_cast<size_t>(i)][static_cast<size_t>(k)]));
    u.push_back(std::move(row));
  }
  j["u"] = u;
  // every box below is enforced by construction: building D would have thrown
  j["checks"] = Json{{"splitting_telescope", true},
                     {"c2_is_normalized_cocycle", true},
                     {"mstar_group_law", true},
                     {"p_times_c2_trivial_over_mstar", true}};
  return j;
}

// ---------------------------------------------------------- crossed-product

inline Json crossed_product_report(const GroupSpec& G, const std::string& model,
                                   long size_bound = 4000000) {
  CanonicalData D = build_canonical(G);
  Presentation P = model_presentation(D, model);
  Json j;
  j["module"] = "crossed-product";
  j["presentation"] = j_presentation(P);
  j["validation"] = j_validation(validate_presentation(P));

  Cochain c = cocycle_of(P);
  DerivedUB d = derive_u_b(G, c);
  bool derived_match = (d.b == P.b);
  for (int i = 0; i < G.rank() && derived_match; ++i)
    for (int k = 0; k < G.rank() && derived_match; ++k)
      if (d.u[static_cast<size_t>(i)][static_cast<size_t>(k)] !=
          P.u[static_cast<size_t>(i)][static_cast<size_t>(k)])
        derived_match = false;
  j["derived_u_b_match"] = derived_match;

  BrauerClassInfo info = brauer_class_order(P, size_bound);
  j["brauer_class"] = Json{{"module", "cohomology"},
                           {"order", j_int(info.order)},
                           {"h1_trivial_all_subgroups", info.h1_trivial}};
  return j;
}

// --------------------------------------------------------------- degeneracy

inline Json degeneracy_report(const GroupSpec& G, const std::string& model, bool strong,
                              int threads = 1) {
  CanonicalData D = build_canonical(G);
  Presentation P = model_presentation(D, model);
  DegeneracyVerdict v = strong ? is_strongly_degenerate(P, threads) : is_degenerate(P, threads);
  Json j = j_degeneracy(v);
  j["module"] = "degeneracy";
  j["group"] = j_group(G);
  j["model"] = model;
  if (v.yes && v.witness) {
    CentralizerHint h = centralizer_split_hint(P, *v.witness);
    j["centralizer_hint"] = Json{{"commute", h.commute},
                                 {"fixed_field_degree", j_int(h.fixed_field_degree)},
                                 {"annotation", h.annotation}};
  }
  return j;
}

// ---------------------------------------------------------------- valuation

inline Json valuation_report(const GroupSpec& G, const std::string& model, int threads = 1) {
  CanonicalData D = build_canonical(G);
  Presentation P = model_presentation(D, model);
  PowerSeriesACP A = make_power_series(P);
  Json j;
  j["module"] = "valuation-graded";
  j["group"] = j_group(G);
  j["model"] = model;
  j["value_data"] = j_value_data(value_data(A));
  j["semi_ramification"] = j_semi_ramification(is_semi_ramified(A));
  j["graded_search"] = j_graded_search(homogeneous_ppower_central_search(A, threads));
  return j;
}

// --------------------------------------------------------------------- chow

inline Json chow_verdict_table(long p, long n, int r) {
  struct Row {
    bool generic, degenerate, strongly;
  };
  const std::vector<Row> rows = {{false, false, false},
                                 {true, false, false},
                                 {false, true, false},
                                 {false, false, true},
                                 {true, true, false}};
  Json table = Json::array();
  for (const Row& row : rows) {
    RegimeDescriptor d{p, n, row.generic, row.degenerate, row.strongly, r};
    Json e;
    e["generic"] = row.generic;
    e["degenerate"] = row.degenerate;
    e["strongly_degenerate"] = row.strongly;
    e["r"] = r;
    try {
      TorsionReport t = ch2_torsion_verdict(d);
      e["verdict"] = t.verdict;
      Json reasons = Json::array();
      for (const Reason& re : t.reasons)
        reasons.push_back(Json{{"statement", re.statement}, {"citation", re.citation}});
      e["reasons"] = reasons;
    } catch (const ContradictionDetected& ex) {
      e["verdict"] = "contradiction";
      e["error"] = ex.what();
    }
    table.push_back(std::move(e));
  }
  return table;
}

inline Json chow_report(long p, long n) {
  Json j;
  j["module"] = "chow-filtration";
  j["p"] = p;
  j["n"] = n;
  FiltrationElement x = generator_x(p, n);
  FiltrationElement y = generator_y(p, n);
  j["x"] = j_filtration(x);
  j["y"] = j_filtration(y);
  j["transfer"] = Json{{"scalar", j_int(detail::transfer_scalar(p, n))},
                       {"identity_holds", transfer_identity_check(p, n)}};
  j["verdict_table"] = chow_verdict_table(p, n, 3);
  return j;
}

// ------------------------------------------------------------------ analyze

struct AnalyzeOptions {
  int threads = 1;
  long size_bound = 4000000;
};

inline Json analyze(const GroupSpec& G, const std::string& model,
                    const AnalyzeOptions& opt = {}) {
  Json j;
  j["schema_version"] = 1;
  j["input"] = Json{{"p", G.p}, {"group", G.orders}, {"model", model}};

  CanonicalData D = build_canonical(G);
  Presentation P = model_presentation(D, model);

  Json computed;
  computed["presentation"] = Json{{"module", "crossed-product"},
                                  {"field", P.K.descriptor},
                                  {"lattice_rank", static_cast<long>(P.rank())},
                                  {"validation", j_validation(validate_presentation(P))}};

  BrauerClassInfo info = brauer_class_order(P, opt.size_bound);
  computed["brauer_class"] = Json{{"module", "cohomology"},
                                  {"order", j_int(info.order)},
                                  {"h1_trivial_all_subgroups", info.h1_trivial}};

  DegeneracyVerdict deg = is_degenerate(P, opt.threads);
  DegeneracyVerdict strong = is_strongly_degenerate(P, opt.threads);
  {
    Json d = j_degeneracy(deg);
    d["module"] = "degeneracy";
    computed["degeneracy"] = std::move(d);
    Json s = j_degeneracy(strong);
    s["module"] = "degeneracy";
    computed["strong_degeneracy"] = std::move(s);
  }

  PowerSeriesACP A = make_power_series(P);
  SemiRamification sr = is_semi_ramified(A);
  GradedSearchResult gs = homogeneous_ppower_central_search(A, opt.threads);
  {
    Json v;
    v["module"] = "valuation-graded";
    v["semi_ramification"] = j_semi_ramification(sr);
    v["graded_search"] = j_graded_search(gs);
    computed["valuation"] = std::move(v);
  }
  computed["equivalence_check"] =
      Json{{"module", "valuation-graded"},
           {"strongly_degenerate", strong.yes},
           {"graded_search_found", gs.found},
           {"agree", strong.yes == gs.found}};

  const long n = log_p_order(G);
  {
    Json c;
    c["module"] = "chow-filtration";
    c["regime"] = Json{{"p", G.p},
                       {"n", n},
                       {"generic", false},
                       {"degenerate", deg.yes},
                       {"strongly_degenerate", strong.yes},
                       {"r", G.rank()}};
    RegimeDescriptor rd{G.p, n, false, deg.yes, strong.yes, G.rank()};
    TorsionReport t = ch2_torsion_verdict(rd);  // generic=false: cannot contradict
    c["torsion"] = j_torsion_report(t);
    bool regime_ok = (G.p == 2 ? n >= 3 : n >= 2);
    if (regime_ok)
      c["transfer"] = Json{{"scalar", j_int(detail::transfer_scalar(G.p, n))},
                           {"identity_holds", transfer_identity_check(G.p, n)}};
    computed["chow"] = std::move(c);
  }
  j["computed"] = std::move(computed);

  Json conclusions = Json::array();
  const Int exp_value = lcm(Int(G.exponent()), info.order);
  if (sr.semi_ramified) {
    conclusions.push_back(Json{
        {"statement", "index = " + std::to_string(G.order()) + " (the group order; hypothesis:"
                      " computed semi-ramification)"},
        {"citation", "rule:index-exponent"},
        {"kind", "cited"}});
    conclusions.push_back(Json{
        {"statement", "exponent = " + exp_value.get_str() + " (lcm of exp(G) = " +
                      std::to_string(G.exponent()) + " and the computed coefficient class"
                      " order " + info.order.get_str() + ")"},
        {"citation", "rule:index-exponent"},
        {"kind", "cited"}});
  }
  if (G.p != 2 && !deg.yes)
    conclusions.push_back(Json{
        {"statement", "indecomposable of index " + std::to_string(G.order()) + " and exponent " +
                      exp_value.get_str() + " (hypothesis: odd p, no monomial degeneracy"
                      " witness)"},
        {"citation", "rule:indecomposable-odd"},
        {"kind", "cited"}});
  if (G.p == 2 && G.rank() >= 3 && !strong.yes)
    conclusions.push_back(Json{
        {"statement", "indecomposable of index " + std::to_string(G.order()) + " and exponent " +
                      exp_value.get_str() + " (hypothesis: p = 2, r >= 3, no monomial"
                      " strong-degeneracy witness)"},
        {"citation", "rule:indecomposable-two-adic"},
        {"kind", "cited"}});
  if (G.p == 2 && model == "mstar" && !deg.yes)
    conclusions.push_back(Json{
        {"statement", "e(u) is degenerate over the full field at p = 2 (biquaternion"
                      " splitting in degree 4, lifted along noncyclic quotients), but the"
                      " witness is not monomial: the defining system is unsolvable mod 2 at"
                      " every noncyclic pair, so the computed verdict stays"
                      " no_monomial_witness"},
        {"citation", "rule:two-adic-degenerate"},
        {"kind", "cited"}});
  conclusions.push_back(Json{
      {"statement", std::string("the power-series model is ") +
                    (sr.semi_ramified ? "semi-ramified" : "not semi-ramified") +
                    " with value-group quotient of order " + sr.index.get_str()},
      {"citation", "module:valuation-graded"},
      {"kind", "computed"}});
  conclusions.push_back(Json{
      {"statement", std::string("strong-degeneracy verdict and homogeneous p-power-central"
                                " search ") +
                    (strong.yes == gs.found ? "agree" : "DISAGREE")},
      {"citation", "module:valuation-graded"},
      {"kind", "computed"}});
  j["conclusions"] = std::move(conclusions);
  return j;
}

// ------------------------------------------------------------ text renderer

namespace detail {

inline void render_text_rec(const Json& j, std::ostringstream& out, int indent) {
  const std::string pad(static_cast<size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array()))) {
        out << pad << k << ":\n";
        render_text_rec(v, out, indent + 1);
      } else if (v.is_array()) {
        out << pad << k << ": " << v.dump() << "\n";
      } else {
        out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    long i = 0;
    for (const auto& v : j) {
      out << pad << "[" << i++ << "]\n";
      render_text_rec(v, out, indent + 1);
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace detail

inline std::string render_text(const Json& j) {
  std::ostringstream out;
  detail::render_text_rec(j, out, 0);
  return out.str();
}

}  // namespace acp
