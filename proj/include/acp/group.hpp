#pragma once

// Finite abelian p-groups presented as products of cyclic factors of
// p-power order, with a fixed generator list.  Elements are reduced exponent
// vectors; all enumerations are in lexicographic order (identity first,
// first coordinate most significant) so downstream searches are
// deterministic.

#include <acp/core.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace acp {

struct GroupSpec {
  long p = 0;
  std::vector<long> orders;  // n_i = p^{e_i}, each >= 2
  long bound = 4096;         // enumeration cap on |G|

  int rank() const { return static_cast<int>(orders.size()); }
  long order() const {
    long o = 1;
    for (long n : orders) o *= n;
    return o;
  }
  long exponent() const { return *std::max_element(orders.begin(), orders.end()); }
  bool noncyclic() const { return orders.size() >= 2; }
};

using GroupElement = std::vector<long>;

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline GroupSpec make_group(long p, std::vector<long> orders, long bound = 4096) {
  if (!is_prime(p)) throw BadInput("p must be prime");
  if (orders.empty()) throw BadInput("group needs at least one cyclic factor");
  Int total = 1;
  for (long n : orders) {
    if (n == 1) throw BadInput("cyclic factors of order 1 are not accepted");
    long m = n;
    while (m % p == 0) m /= p;
    if (m != 1 || n < 2) throw BadInput("every factor order must be a power of p");
    total *= n;
    if (total > bound)
      throw BoundExceeded("group order exceeds enumeration bound " + std::to_string(bound));
  }
  return GroupSpec{p, std::move(orders), bound};
}

// Parses the "n1,n2,...,nr" form used by the command line.
inline GroupSpec parse_group(long p, const std::string& csv, long bound = 4096) {
  std::vector<long> orders;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw BadInput("empty factor in group specification");
    try {
      size_t pos = 0;
      long n = std::stol(item, &pos);
      if (pos != item.size()) throw BadInput("bad factor '" + item + "'");
      orders.push_back(n);
    } catch (const std::logic_error&) {
      throw BadInput("bad factor '" + item + "' in group specification");
    }
  }
  if (orders.empty()) throw BadInput("empty group specification");
  return make_group(p, std::move(orders), bound);
}

inline GroupElement identity_element(const GroupSpec& G) {
  return GroupElement(G.orders.size(), 0);
}

inline void check_element(const GroupSpec& G, const GroupElement& g) {
  if (g.size() != G.orders.size()) throw LengthMismatch("element rank mismatch");
}

inline GroupElement reduce_element(const GroupSpec& G, const GroupElement& g) {
  check_element(G, g);
  GroupElement h(g.size());
  for (size_t i = 0; i < g.size(); ++i) {
    h[i] = g[i] % G.orders[i];
    if (h[i] < 0) h[i] += G.orders[i];
  }
  return h;
}

inline GroupElement mul(const GroupSpec& G, const GroupElement& a, const GroupElement& b) {
  check_element(G, a);
  check_element(G, b);
  GroupElement c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) % G.orders[i];
  return c;
}

inline GroupElement inv(const GroupSpec& G, const GroupElement& a) {
  check_element(G, a);
  GroupElement c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] == 0 ? 0 : G.orders[i] - a[i];
  return c;
}

inline GroupElement pow_element(const GroupSpec& G, const GroupElement& a, long k) {
  check_element(G, a);
  GroupElement c(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    long v = (a[i] * (k % G.orders[i])) % G.orders[i];
    if (v < 0) v += G.orders[i];
    c[i] = v;
  }
  return c;
}

inline long element_order(const GroupSpec& G, const GroupElement& g) {
  check_element(G, g);
  long ord = 1;
  for (size_t i = 0; i < g.size(); ++i) {
    long o = G.orders[i] / std::gcd(G.orders[i], g[i]);
    ord = std::lcm(ord, o);
  }
  return ord;
}

inline long element_index(const GroupSpec& G, const GroupElement& g) {
  check_element(G, g);
  long idx = 0;
  for (size_t i = 0; i < g.size(); ++i) idx = idx * G.orders[i] + g[i];
  return idx;
}

inline GroupElement element_at(const GroupSpec& G, long idx) {
  GroupElement g(G.orders.size());
  for (size_t i = G.orders.size(); i-- > 0;) {
    g[i] = idx % G.orders[i];
    idx /= G.orders[i];
  }
  return g;
}

inline std::vector<GroupElement> enumerate_elements(const GroupSpec& G) {
  const long n = G.order();
  if (n > G.bound) throw BoundExceeded("group order exceeds enumeration bound");
  std::vector<GroupElement> out;
  out.reserve(n);
  for (long i = 0; i < n; ++i) out.push_back(element_at(G, i));
  return out;
}

struct Subgroup {
  std::vector<GroupElement> elements;  // lex sorted, identity first
  std::vector<GroupElement> generators;
  long order = 0;
  bool cyclic = true;
};

inline Subgroup subgroup_generated(const GroupSpec& G, const std::vector<GroupElement>& gens) {
  std::set<GroupElement> seen;
  seen.insert(identity_element(G));
  std::vector<GroupElement> work{identity_element(G)};
  while (!work.empty()) {
    GroupElement g = std::move(work.back());
    work.pop_back();
    for (const auto& s : gens) {
      GroupElement h = mul(G, g, reduce_element(G, s));
      if (seen.insert(h).second) work.push_back(h);
    }
  }
  Subgroup S;
  S.elements.assign(seen.begin(), seen.end());
  S.generators = gens;
  S.order = static_cast<long>(S.elements.size());
  long maxord = 1;
  for (const auto& g : S.elements) maxord = std::max(maxord, element_order(G, g));
  S.cyclic = (maxord == S.order);  // p-group: cyclic iff some element has full order
  return S;
}

inline bool contains(const Subgroup& S, const GroupElement& g) {
  return std::binary_search(S.elements.begin(), S.elements.end(), g);
}

// All subgroups, found by closing under one-generator extensions; returned
// sorted by (order, element list) so the enumeration is canonical.
inline std::vector<Subgroup> enumerate_subgroups(const GroupSpec& G) {
  std::vector<GroupElement> elems = enumerate_elements(G);
  std::map<std::vector<GroupElement>, Subgroup> found;
  Subgroup triv = subgroup_generated(G, {});
  found.emplace(triv.elements, triv);
  std::vector<Subgroup> work{triv};
  while (!work.empty()) {
    Subgroup S = std::move(work.back());
    work.pop_back();
    for (const auto& g : elems) {
      if (contains(S, g)) continue;
      std::vector<GroupElement> gens = S.generators;
      gens.push_back(g);
      Subgroup T = subgroup_generated(G, gens);
      if (found.emplace(T.elements, T).second) work.push_back(T);
    }
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (auto& [k, v] : found) out.push_back(std::move(v));
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.elements < b.elements;
  });
  return out;
}

inline std::string element_key(const GroupElement& g) {
  std::string s;
  for (size_t i = 0; i < g.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(g[i]);
  }
  return s;
}

}  // namespace acp
