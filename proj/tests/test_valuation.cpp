#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <acp/degeneracy.hpp>
#include <acp/valuation.hpp>

#include <algorithm>
#include <random>
#include <vector>

using namespace acp;

namespace {

ValueVector vec2(const Rat& a, const Rat& b) {
  ValueVector v(2);
  v << a, b;
  return v;
}

IntMatrix random_twist(const Presentation& P, std::mt19937_64& rng, long amp) {
  IntMatrix C(P.rank(), P.G.rank());
  for (Index i = 0; i < C.rows(); ++i)
    for (Index j = 0; j < C.cols(); ++j)
      C(i, j) = static_cast<long>(rng() % (2 * amp + 1)) - amp;
  return C;
}

}  // namespace

TEST_CASE("right-to-left lexicographic comparison") {
  CHECK(compare_lex(vec2(1, 0), vec2(0, 1)) == -1);  // the last coordinate decides
  CHECK(compare_lex(vec2(5, 2), vec2(-3, 2)) == 1);
  CHECK(compare_lex(vec2(Rat(1, 2), Rat(3, 4)), vec2(Rat(1, 2), Rat(3, 4))) == 0);
  ValueVector three = ValueVector::Zero(3);
  CHECK_THROWS_AS(compare_lex(vec2(0, 0), three), LengthMismatch);

  // oracle: reverse the vectors and use std::lexicographical_compare
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const Index n = 1 + static_cast<Index>(rng() % 4);
    ValueVector a(n), b(n);
    for (Index i = 0; i < n; ++i) {
      a(i) = Rat(static_cast<long>(rng() % 5) - 2, 1 + static_cast<long>(rng() % 3));
      b(i) = Rat(static_cast<long>(rng() % 5) - 2, 1 + static_cast<long>(rng() % 3));
    }
    std::vector<Rat> ra(a.data(), a.data() + n), rb(b.data(), b.data() + n);
    std::reverse(ra.begin(), ra.end());
    std::reverse(rb.begin(), rb.end());
    const int c = compare_lex(a, b);
    CHECK((c < 0) == std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end()));
    CHECK((c > 0) == std::lexicographical_compare(rb.begin(), rb.end(), ra.begin(), ra.end()));
  }
}

TEST_CASE("power series extension and generator values") {
  GroupSpec G = make_group(2, {2, 4});
  CanonicalData D = build_canonical(G);
  Presentation P = make_mstar_presentation(D);
  PowerSeriesACP A = make_power_series(P);

  CHECK(A.ext.rank() == P.rank() + 2);
  CHECK(A.xoff == P.rank());
  CHECK(A.residue_degree == 8);
  for (int i = 0; i < 2; ++i) {
    // x-block acts trivially and b_i picks up the central variable x_i
    CHECK(IntMatrix(A.ext.K.lattice.actions[i].bottomRightCorner(2, 2)) ==
          IntMatrix(IntMatrix::Identity(2, 2)));
    CHECK(IntVector(A.ext.b.col(i).head(P.rank())) == IntVector(P.b.col(i)));
    CHECK(A.ext.b(P.rank() + i, i) == 1);
    // v(z_i) = e_i / n_i
    for (int j = 0; j < 2; ++j)
      CHECK(A.zvals[i](j) == (i == j ? Rat(1, G.orders[i]) : Rat(0)));
  }
  CHECK(monomial_value(A, GroupElement{1, 3}) == vec2(Rat(1, 2), Rat(3, 4)));
  // additive in the exponent before reduction
  ValueVector sum = monomial_value(A, GroupElement{1, 2});
  CHECK(ValueVector(monomial_value(A, GroupElement{1, 0}) +
                    monomial_value(A, GroupElement{0, 2})) == sum);
}

TEST_CASE("value group quotient, theta, and semi-ramification") {
  for (const auto& [p, orders] :
       std::vector<std::pair<long, std::vector<long>>>{{2, {2, 2}}, {2, {2, 4}}, {3, {3, 3}}}) {
    GroupSpec G = make_group(p, orders);
    CanonicalData D = build_canonical(G);
    for (const Presentation& P : {make_a2_presentation(D), make_mstar_presentation(D)}) {
      PowerSeriesACP A = make_power_series(P);
      ValueData vd = value_data(A);
      CHECK(vd.index == G.order());
      std::vector<Int> want;
      for (long n : orders) want.push_back(Int(n));
      std::sort(want.begin(), want.end());
      CHECK(vd.quotient == want);
      CHECK(vd.quotient_matches_group);
      CHECK(vd.theta_bijective);
      // theta sends the coset representative of v(z^m) back to m, and the
      // representative turns out to be m itself
      for (const GroupElement& m : enumerate_elements(G)) CHECK(vd.theta.at(m) == m);

      SemiRamification s = is_semi_ramified(A);
      CHECK(s.semi_ramified);
      CHECK(s.index == G.order());
      CHECK(s.residue_degree == G.order());
      CHECK(s.quotient_factors == want);
      CHECK(s.separability == "satisfied-by-model");
    }
  }
}

TEST_CASE("the central toy is not semi-ramified") {
  GroupSpec G = make_group(2, {2, 4});
  CanonicalData D = build_canonical(G);
  PowerSeriesACP A = make_power_series(make_mstar_presentation(D));
  CHECK_THROWS_AS(make_central_toy(A, -1), BadInput);
  CHECK_THROWS_AS(make_central_toy(A, 2), BadInput);

  for (int i0 = 0; i0 < 2; ++i0) {
    PowerSeriesACP T = make_central_toy(A, i0);
    CHECK(T.zvals[i0] == ValueVector(ValueVector::Unit(2, i0)));
    ValueData vd = value_data(T);
    CHECK(vd.index == G.order() / G.orders[i0]);
    CHECK(!vd.quotient_matches_group);
    CHECK(!vd.theta_bijective);
    SemiRamification s = is_semi_ramified(T);
    CHECK(!s.semi_ramified);
    CHECK(s.residue_degree == G.order());  // the model still declares full degree
  }
}

TEST_CASE("homogeneous p-th power central elements") {
  std::mt19937_64 rng(17);
  // planted: a twisted zero presentation admits one at the first candidate
  {
    GroupSpec G = make_group(2, {2, 4});
    Presentation Z = make_zero_presentation(G, regular_lattice(G));
    Presentation T = twist_presentation(Z, random_twist(Z, rng, 2));
    PowerSeriesACP A = make_power_series(T);
    GradedSearchResult r = homogeneous_ppower_central_search(A);
    REQUIRE(r.found);
    CHECK(r.candidates_examined == 1);
    CHECK(element_order(G, r.m) == 2);
    CHECK(r.k.size() == Z.rank());
    CHECK(r.lambda.size() == 2);
    bool fractional = false;
    for (Index j = 0; j < r.degree.size(); ++j)
      if (r.degree(j).get_den() != 1) fractional = true;
    CHECK(fractional);
    // determinism across thread counts
    GradedSearchResult r4 = homogeneous_ppower_central_search(A, 4);
    CHECK(r4.found);
    CHECK(r4.m == r.m);
    CHECK(r4.k == r.k);
    CHECK(r4.lambda == r.lambda);
  }
  // the graded search agrees with the strong-degeneracy verdict
  {
    GroupSpec G = make_group(2, {2, 2});
    CanonicalData D = build_canonical(G);
    Presentation P = make_mstar_presentation(D);
    GradedSearchResult r = homogeneous_ppower_central_search(make_power_series(P));
    CHECK(r.found == is_strongly_degenerate(P).yes);
  }
  {
    GroupSpec G = make_group(3, {3, 3});
    CanonicalData D = build_canonical(G);
    Presentation P = make_mstar_presentation(D);
    GradedSearchResult r = homogeneous_ppower_central_search(make_power_series(P));
    CHECK(!r.found);
    CHECK(r.candidates_examined == 8);  // every order-3 element was tried
    CHECK(!is_strongly_degenerate(P).yes);
  }
}
