#pragma once

// JSON views of every domain type the CLI reports.  Integers become JSON
// numbers when they fit in 64 bits and decimal strings otherwise; rationals
// are always "num" or "num/den" strings; element tuples are arrays; cochain
// tables are keyed by "g" or "g1|g2" with elements rendered through
// element_key.  Insertion order is fixed, so serialized output is
// byte-deterministic.

#include <acp/canonical.hpp>
#include <acp/chow.hpp>
#include <acp/cohomology.hpp>
#include <acp/crossed_product.hpp>
#include <acp/degeneracy.hpp>
#include <acp/valuation.hpp>

#include <json.hpp>

#include <string>

namespace acp {

using Json = nlohmann::ordered_json;

inline Json j_int(const Int& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

inline Json j_rat(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Json j_vec(const IntVector& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(j_int(v(i)));
  return a;
}

inline Json j_vec(const RatVector& v) {
  Json a = Json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(j_rat(v(i)));
  return a;
}

inline Json j_mat(const IntMatrix& m) {  // row-major nested arrays
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(j_int(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json j_elem(const GroupElement& g) {
  Json a = Json::array();
  for (long x : g) a.push_back(x);
  return a;
}

inline Json j_ints(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const Int& x : v) a.push_back(j_int(x));
  return a;
}

inline Json j_group(const GroupSpec& G) {
  Json j;
  j["p"] = G.p;
  j["orders"] = G.orders;
  j["order"] = G.order();
  return j;
}

inline Json j_lattice(const GLattice& L) {
  Json j;
  j["label"] = L.label;
  j["rank"] = static_cast<long>(L.rank);
  Json acts = Json::array();
  for (const IntMatrix& A : L.actions) acts.push_back(j_mat(A));
  j["actions"] = acts;
  return j;
}

inline Json j_cochain(const CochainContext& ctx, const Cochain& c) {
  Json table;
  const long h = ctx.h;
  long tuples = 1;
  for (int d = 0; d < c.degree; ++d) tuples *= h;
  for (long t = 0; t < tuples; ++t) {
    std::string key;
    long rest = t;
    long stride = tuples;
    for (int d = 0; d < c.degree; ++d) {
      stride /= h;
      const long idx = rest / stride;
      rest %= stride;
      if (d) key += "|";
      key += element_key(ctx.elems[static_cast<size_t>(idx)]);
    }
    if (c.degree == 0) key = "()";
    table[key] = j_vec(IntVector(c.table.col(t)));
  }
  Json j;
  j["degree"] = c.degree;
  j["table"] = std::move(table);
  return j;
}

inline Json j_validation(const ValidationReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["pairs_checked"] = r.pairs_checked;
  if (!r.ok) j["first_failure"] = r.first_failure;
  return j;
}

inline Json j_presentation(const Presentation& P) {
  Json j;
  j["group"] = j_group(P.G);
  j["field"] = P.K.descriptor;
  j["lattice"] = j_lattice(P.K.lattice);
  j["b"] = j_mat(P.b);
  const int r = P.G.rank();
  Json u = Json::array();
  for (int i = 0; i < r; ++i) {
    Json row = Json::array();
    for (int k = 0; k < r; ++k) row.push_back(j_vec(P.u[static_cast<size_t>(i)][static_cast<size_t>(k)]));
    u.push_back(std::move(row));
  }
  j["u"] = u;
  return j;
}

inline Json j_cohomology(const CohomologyResult& r) {
  Json j;
  j["invariant_factors"] = j_ints(r.invariant_factors);
  j["free_rank"] = r.free_rank;
  j["order"] = j_int(r.order);
  return j;
}

inline Json j_degeneracy(const DegeneracyVerdict& v) {
  Json j;
  j["kind"] = v.kind;
  j["answer"] = v.yes ? "yes" : "no_monomial_witness";
  if (v.witness) {
    Json w;
    w["m"] = j_elem(v.witness->m);
    w["n"] = j_elem(v.witness->n);
    w["a"] = j_vec(v.witness->a);
    w["b"] = j_vec(v.witness->b);
    j["witness"] = std::move(w);
  }
  if (v.strong_witness) {
    Json w;
    w["m"] = j_elem(v.strong_witness->m);
    w["l"] = j_vec(v.strong_witness->l);
    Json ks = Json::array();
    for (const IntVector& k : v.strong_witness->k) ks.push_back(j_vec(k));
    w["k"] = std::move(ks);
    j["witness"] = std::move(w);
  }
  j["pairs_examined"] = v.pairs_examined;
  return j;
}

inline Json j_value_data(const ValueData& vd) {
  Json j;
  Json gens = Json::array();
  for (const ValueVector& g : vd.gammaD) gens.push_back(j_vec(g));
  j["gammaD_generators"] = gens;
  j["quotient_factors"] = j_ints(vd.quotient);
  j["index"] = j_int(vd.index);
  Json theta;
  for (const auto& [rep, g] : vd.theta) theta[element_key(rep)] = j_elem(g);
  j["theta"] = std::move(theta);
  j["theta_bijective"] = vd.theta_bijective;
  j["quotient_matches_group"] = vd.quotient_matches_group;
  return j;
}

inline Json j_semi_ramification(const SemiRamification& s) {
  Json j;
  j["semi_ramified"] = s.semi_ramified;
  j["index"] = j_int(s.index);
  j["residue_degree"] = j_int(s.residue_degree);
  j["quotient_factors"] = j_ints(s.quotient_factors);
  j["theta_bijective"] = s.theta_bijective;
  j["separability"] = s.separability;
  return j;
}

inline Json j_graded_search(const GradedSearchResult& r) {
  Json j;
  j["found"] = r.found;
  if (r.found) {
    j["m"] = j_elem(r.m);
    j["k"] = j_vec(r.k);
    j["lambda"] = j_vec(r.lambda);
    j["degree"] = j_vec(r.degree);
  }
  j["candidates_examined"] = r.candidates_examined;
  return j;
}

inline Json j_filtration(const FiltrationElement& e) {
  Json j;
  j["truncation"] = e.trunc;
  FiltrationElement c = e;
  c.normalize();
  Json coeffs = Json::array();
  for (const Int& x : c.coeffs) coeffs.push_back(j_int(x));
  j["coeffs"] = coeffs;
  auto d = tadic_degree(e);
  if (d)
    j["tadic_degree"] = *d;
  else
    j["tadic_degree"] = "infinity";
  return j;
}

inline Json j_torsion_report(const TorsionReport& r) {
  Json j;
  j["verdict"] = r.verdict;
  Json reasons = Json::array();
  for (const Reason& re : r.reasons) {
    Json e;
    e["statement"] = re.statement;
    e["citation"] = re.citation;
    reasons.push_back(std::move(e));
  }
  j["reasons"] = reasons;
  return j;
}

}  // namespace acp
