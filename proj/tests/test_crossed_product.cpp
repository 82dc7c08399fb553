#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <acp/crossed_product.hpp>

#include <random>

using namespace acp;

namespace {

GroupElement gen(const GroupSpec& G, int i, long power = 1) {
  GroupElement g = identity_element(G);
  g[i] = power;
  return g;
}

ZMonomial random_monomial(const Presentation& P, std::mt19937_64& rng) {
  IntVector c(P.rank());
  for (Index i = 0; i < P.rank(); ++i) c(i) = static_cast<long>(rng() % 5) - 2;
  GroupElement e = identity_element(P.G);
  for (int i = 0; i < P.G.rank(); ++i) e[i] = static_cast<long>(rng() % P.G.orders[i]);
  return monomial(P, std::move(c), std::move(e));
}

IntMatrix random_twist(const Presentation& P, std::mt19937_64& rng, long amp = 2) {
  IntMatrix C(P.rank(), P.G.rank());
  for (Index i = 0; i < C.rows(); ++i)
    for (Index j = 0; j < C.cols(); ++j)
      C(i, j) = static_cast<long>(rng() % (2 * amp + 1)) - amp;
  return C;
}

}  // namespace

TEST_CASE("generator relations hold in the engine") {
  GroupSpec G = make_group(2, {2, 4});
  CanonicalData D = build_canonical(G);
  Presentation P = make_mstar_presentation(D);

  for (int i = 0; i < G.rank(); ++i) {
    ZMonomial zi = monomial(P, IntVector::Zero(P.rank()), gen(G, i));
    // z_i^{n_i} = b_i
    CHECK(pow(P, zi, G.orders[i]) == monomial(P, P.b.col(i), identity_element(G)));
    // z_i m = (s_i m) z_i for a pure coefficient m
    IntVector m = IntVector::Zero(P.rank());
    m(3) = 1;
    m(7) = -2;
    ZMonomial lhs = mul(P, zi, monomial(P, m, identity_element(G)));
    CHECK(lhs == monomial(P, IntVector(P.act(element_index(G, gen(G, i))) * m), gen(G, i)));
  }
  // z_i z_j = u_ij z_j z_i, read through the commutator helper
  for (int i = 0; i < G.rank(); ++i)
    for (int j = 0; j < G.rank(); ++j) {
      if (i == j) continue;
      CHECK(commutator_u(P, gen(G, i), gen(G, j)) == P.u[i][j]);
    }
  // in normal order the product of increasing generators carries no unit
  ZMonomial z0 = monomial(P, IntVector::Zero(P.rank()), gen(G, 0));
  ZMonomial z1 = monomial(P, IntVector::Zero(P.rank()), gen(G, 1));
  ZMonomial prod = mul(P, z0, z1);
  CHECK(prod.zexp == GroupElement{1, 1});
  CHECK(is_zero(prod.coeff));
  // the reversed product picks up exactly u_10
  ZMonomial rev = mul(P, z1, z0);
  CHECK(rev.zexp == GroupElement{1, 1});
  CHECK(rev.coeff == P.u[1][0]);
}

TEST_CASE("the normal form is associative and confluent") {
  std::mt19937_64 rng(271828);
  for (const auto& [p, orders] :
       std::vector<std::pair<long, std::vector<long>>>{{2, {2, 4}}, {3, {3, 3}}}) {
    GroupSpec G = make_group(p, orders);
    CanonicalData D = build_canonical(G);
    for (Presentation P :
         {make_mstar_presentation(D),
          twist_presentation(make_zero_presentation(G, regular_lattice(G)), [&] {
            IntMatrix C(static_cast<Index>(G.order()), G.rank());
            for (Index i = 0; i < C.rows(); ++i)
              for (Index j = 0; j < C.cols(); ++j) C(i, j) = static_cast<long>(rng() % 5) - 2;
            return C;
          }())}) {
      for (int trial = 0; trial < 20; ++trial) {
        ZMonomial x = random_monomial(P, rng);
        ZMonomial y = random_monomial(P, rng);
        ZMonomial z = random_monomial(P, rng);
        CHECK(mul(P, mul(P, x, y), z) == mul(P, x, mul(P, y, z)));
        CHECK(mul(P, x, inverse(P, x)) == one(P));
        CHECK(mul(P, inverse(P, x), x) == one(P));
      }
      // fold a long word in one pass, then again split at random cut points
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<WordToken> word;
        for (int t = 0; t < 12; ++t) {
          switch (rng() % 3) {
            case 0: word.push_back(WordToken::generator(static_cast<int>(rng() % G.rank()))); break;
            case 1:
              word.push_back(WordToken::generator_inverse(static_cast<int>(rng() % G.rank())));
              break;
            default: {
              IntVector v(P.rank());
              for (Index i = 0; i < P.rank(); ++i) v(i) = static_cast<long>(rng() % 3) - 1;
              word.push_back(WordToken::k_monomial(std::move(v)));
            }
          }
        }
        ZMonomial whole = normal_form(P, word);
        size_t cut1 = rng() % (word.size() + 1);
        size_t cut2 = cut1 + rng() % (word.size() - cut1 + 1);
        std::vector<WordToken> a(word.begin(), word.begin() + cut1);
        std::vector<WordToken> b(word.begin() + cut1, word.begin() + cut2);
        std::vector<WordToken> c(word.begin() + cut2, word.end());
        ZMonomial pieced = mul(P, mul(P, normal_form(P, a), normal_form(P, b)), normal_form(P, c));
        CHECK(whole == pieced);
      }
    }
  }
}

TEST_CASE("commutator coefficients are bimultiplicative up to an (A_n - 1) correction") {
  std::mt19937_64 rng(1618);
  GroupSpec G = make_group(3, {3, 3});
  CanonicalData D = build_canonical(G);
  Presentation P = make_mstar_presentation(D);
  auto random_element = [&] {
    GroupElement e = identity_element(G);
    for (int i = 0; i < G.rank(); ++i) e[i] = static_cast<long>(rng() % G.orders[i]);
    return e;
  };
  for (int trial = 0; trial < 25; ++trial) {
    GroupElement m = random_element(), mp = random_element(), n = random_element();
    IntVector diff = commutator_u(P, mul(G, m, mp), n) - commutator_u(P, m, n) -
                     P.act(element_index(G, m)) * commutator_u(P, mp, n);
    IntMatrix An1 = P.act(element_index(G, n)) - IntMatrix::Identity(P.rank(), P.rank());
    CHECK(solve_integer_system(An1, diff).has_value());
  }
}

TEST_CASE("the presentation cocycle reconstructs u and b") {
  for (const auto& [p, orders] :
       std::vector<std::pair<long, std::vector<long>>>{{2, {2, 2}}, {2, {2, 4}}, {3, {3, 3}}}) {
    GroupSpec G = make_group(p, orders);
    CanonicalData D = build_canonical(G);
    Presentation P = make_mstar_presentation(D);
    Cochain c = cocycle_of(P);
    DerivedUB d = derive_u_b(G, c);
    CHECK(d.b == P.b);
    for (int i = 0; i < G.rank(); ++i)
      for (int j = 0; j < G.rank(); ++j)
        CHECK(d.u[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
              P.u[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  }
  // the same round trip on a twisted presentation with nonzero u everywhere
  std::mt19937_64 rng(55);
  GroupSpec G = make_group(2, {2, 2});
  Presentation Z = make_zero_presentation(G, regular_lattice(G));
  Presentation T = twist_presentation(Z, random_twist(Z, rng));
  DerivedUB d = derive_u_b(G, cocycle_of(T));
  CHECK(d.b == T.b);
  for (int i = 0; i < G.rank(); ++i)
    for (int j = 0; j < G.rank(); ++j)
      CHECK(d.u[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
            T.u[static_cast<size_t>(i)][static_cast<size_t>(j)]);
}

TEST_CASE("the canonical presentation's cocycle is the canonical cocycle") {
  GroupSpec G = make_group(2, {2, 4});
  CanonicalData D = build_canonical(G);
  Presentation P = make_a2_presentation(D);
  Cochain c = cocycle_of(P);
  CHECK(c.table == D.c2.table);
}

TEST_CASE("validation catches corrupted presentations") {
  GroupSpec G = make_group(2, {2, 2});
  CanonicalData D = build_canonical(G);
  Presentation P = make_a2_presentation(D);
  REQUIRE(validate_presentation(P).ok);

  // corrupt u_10: the norm relation N_1(u_10) + (A_0 - 1) b_1 = 0 breaks
  {
    auto u = D.u;
    u[1][0](0) += 1;
    u[0][1] = -u[1][0];
    CHECK_THROWS_AS(
        make_presentation(G, MonomialFieldModel{D.P.a2, "corrupt"}, D.b, u), Inconsistent);
  }
  // corrupt b_0 by a basis vector not fixed by s_0
  {
    IntMatrix b = D.b;
    IntMatrix A0 = action_of(G, D.P.a2, gen(G, 0));
    Index moved = -1;
    for (Index k = 0; k < D.P.a2.rank && moved < 0; ++k)
      if (IntVector(A0.col(k)) != IntVector(IntVector::Unit(D.P.a2.rank, k))) moved = k;
    REQUIRE(moved >= 0);
    b.col(0) += IntVector::Unit(D.P.a2.rank, moved);
    CHECK_THROWS_AS(
        make_presentation(G, MonomialFieldModel{D.P.a2, "corrupt"}, b, D.u), Inconsistent);
  }
  // the report form pinpoints a failure without throwing
  {
    auto u = D.u;
    u[1][0](1) += 2;
    u[0][1] = -u[1][0];
    Presentation Q = make_presentation(G, MonomialFieldModel{D.P.a2, "corrupt"}, D.b, u, false);
    ValidationReport rep = validate_presentation(Q);
    CHECK(!rep.ok);
    CHECK(!rep.first_failure.empty());
  }
}

TEST_CASE("twisting is reversible and preserves the class") {
  std::mt19937_64 rng(808);
  GroupSpec G = make_group(2, {2, 4});
  Presentation Z = make_zero_presentation(G, regular_lattice(G));
  IntMatrix C = random_twist(Z, rng);
  Presentation T = twist_presentation(Z, C);
  // explicit formulas
  const IntMatrix I = IntMatrix::Identity(Z.rank(), Z.rank());
  for (int i = 0; i < G.rank(); ++i) {
    IntMatrix Ai = Z.act(element_index(G, gen(G, i)));
    IntMatrix Ni = IntMatrix::Zero(Z.rank(), Z.rank());
    IntMatrix pw = I;
    for (long t = 0; t < G.orders[i]; ++t) {
      Ni += pw;
      pw = (Ai * pw).eval();
    }
    CHECK(IntVector(T.b.col(i)) == IntVector(Ni * C.col(i)));
    for (int j = 0; j < G.rank(); ++j) {
      if (i == j) continue;
      IntMatrix Aj = Z.act(element_index(G, gen(G, j)));
      CHECK(T.u[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
            IntVector(IntMatrix(Ai - I) * C.col(j) - IntMatrix(Aj - I) * C.col(i)));
    }
  }
  // twisting back with -C restores the zero presentation
  Presentation back = twist_presentation(T, IntMatrix(-C));
  CHECK(back.b == Z.b);
  for (int i = 0; i < G.rank(); ++i)
    for (int j = 0; j < G.rank(); ++j)
      CHECK(back.u[static_cast<size_t>(i)][static_cast<size_t>(j)] ==
            Z.u[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  // and the Brauer class never moved
  CHECK(brauer_class_order(T).order == 1);
}

TEST_CASE("class orders of the two models") {
  GroupSpec G = make_group(2, {2, 2});
  CanonicalData D = build_canonical(G);
  BrauerClassInfo a2 = brauer_class_order(make_a2_presentation(D));
  CHECK(a2.order == 4);
  CHECK(a2.h1_trivial);  // H^1(H, A2) = 0 for every subgroup
  BrauerClassInfo ms = brauer_class_order(make_mstar_presentation(D));
  CHECK(ms.order == 2);
  CHECK_THROWS_AS(brauer_class_order(make_a2_presentation(D), 10), BoundExceeded);
}
