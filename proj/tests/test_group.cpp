#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <acp/group.hpp>

#include <algorithm>
#include <set>

using namespace acp;

TEST_CASE("make_group validates its input") {
  GroupSpec G = make_group(2, {2, 4});
  CHECK(G.order() == 8);
  CHECK(G.exponent() == 4);
  CHECK(G.rank() == 2);
  CHECK(G.noncyclic());
  CHECK(!make_group(2, {4}).noncyclic());

  CHECK_THROWS_AS(make_group(2, {3, 3}), BadInput);   // orders must be powers of p
  CHECK_THROWS_AS(make_group(2, {1, 2}), BadInput);   // trivial factor
  CHECK_THROWS_AS(make_group(4, {4}), BadInput);      // p must be prime
  CHECK_THROWS_AS(make_group(2, {}), BadInput);       // empty group
  CHECK_THROWS_AS(make_group(2, {1024, 1024}, 100), BoundExceeded);
}

TEST_CASE("parse_group mirrors make_group") {
  GroupSpec G = parse_group(3, "3,9");
  CHECK(G.orders == std::vector<long>{3, 9});
  CHECK(G.order() == 27);
  CHECK_THROWS_AS(parse_group(2, ""), BadInput);
  CHECK_THROWS_AS(parse_group(2, "2,x"), BadInput);
}

TEST_CASE("element arithmetic is the componentwise group law") {
  GroupSpec G = make_group(2, {2, 4});
  GroupElement a = {1, 3}, b = {1, 2};
  CHECK(mul(G, a, b) == GroupElement{0, 1});
  CHECK(mul(G, a, inv(G, a)) == identity_element(G));
  CHECK(reduce_element(G, GroupElement{3, -1}) == GroupElement{1, 3});

  // index <-> element round trip, first coordinate least significant block
  for (long i = 0; i < G.order(); ++i) CHECK(element_index(G, element_at(G, i)) == i);
  CHECK(enumerate_elements(G).size() == 8);
}

TEST_CASE("element orders") {
  GroupSpec G = make_group(2, {2, 4});
  CHECK(element_order(G, identity_element(G)) == 1);
  CHECK(element_order(G, {1, 0}) == 2);
  CHECK(element_order(G, {0, 1}) == 4);
  CHECK(element_order(G, {1, 1}) == 4);
  CHECK(element_order(G, {1, 2}) == 2);
  GroupSpec H = make_group(3, {3, 3});
  for (const GroupElement& g : enumerate_elements(H))
    CHECK(element_order(H, g) == (g == identity_element(H) ? 1 : 3));
}

TEST_CASE("subgroup_generated closes under the group law") {
  GroupSpec G = make_group(2, {2, 4});
  Subgroup S = subgroup_generated(G, {GroupElement{0, 2}, GroupElement{1, 0}});
  CHECK(S.order == 4);
  CHECK(!S.cyclic);
  std::set<GroupElement> members(S.elements.begin(), S.elements.end());
  for (const GroupElement& a : S.elements)
    for (const GroupElement& b : S.elements) CHECK(members.count(mul(G, a, b)) == 1);
  CHECK(S.elements.front() == identity_element(G));
  CHECK(std::is_sorted(S.elements.begin(), S.elements.end()));

  Subgroup whole = subgroup_generated(G, {GroupElement{1, 0}, GroupElement{0, 1}});
  CHECK(whole.order == 8);
  Subgroup cyc = subgroup_generated(G, {GroupElement{1, 1}});
  CHECK(cyc.order == 4);
  CHECK(cyc.cyclic);
  Subgroup triv = subgroup_generated(G, {});
  CHECK(triv.order == 1);
}

TEST_CASE("subgroup enumeration counts") {
  // classical counts: V_4 has 5, Z2 x Z4 has 8, (Z2)^3 has 16, (Z3)^2 has 6
  CHECK(enumerate_subgroups(make_group(2, {2, 2})).size() == 5);
  CHECK(enumerate_subgroups(make_group(2, {2, 4})).size() == 8);
  CHECK(enumerate_subgroups(make_group(2, {2, 2, 2})).size() == 16);
  CHECK(enumerate_subgroups(make_group(3, {3, 3})).size() == 6);
  CHECK(enumerate_subgroups(make_group(2, {4})).size() == 3);

  // each listed subgroup is genuinely a subgroup, listed once, ending with G
  GroupSpec G = make_group(2, {2, 4});
  auto subs = enumerate_subgroups(G);
  std::set<std::vector<GroupElement>> seen;
  for (const Subgroup& H : subs) {
    CHECK(seen.insert(H.elements).second);
    std::set<GroupElement> members(H.elements.begin(), H.elements.end());
    for (const GroupElement& a : H.elements)
      for (const GroupElement& b : H.elements) CHECK(members.count(mul(G, a, b)) == 1);
    CHECK(G.order() % H.order == 0);
  }
  CHECK(subs.back().order == G.order());
  CHECK(subs.front().order == 1);
}

TEST_CASE("element keys are comma joined exponent tuples") {
  CHECK(element_key(GroupElement{0, 0}) == "0,0");
  CHECK(element_key(GroupElement{1, 3}) == "1,3");
  CHECK(element_key(GroupElement{2}) == "2");
}
