#include "doctest.h"
#include "mkw/bck.hpp"
#include "mkw/expression.hpp"
#include "mkw/growth.hpp"
#include "oracle.hpp"

using namespace mkw;

namespace {
const Alphabet ab{"a", "b"};
const Alphabet o = Alphabet::singleton();

using CutKey = std::pair<std::multiset<std::string>, std::string>;

std::map<CutKey, Rational> as_cuts(const BckTensor& t) {
  std::map<CutKey, Rational> out;
  for (const auto& [p, c] : t) {
    std::multiset<std::string> pruned;
    if (!p.first.empty())
      for (const auto& n : oracle::parse(p.first.text())) pruned.insert(oracle::canonical(n));
    const std::string trunk = p.second.empty() ? "1" : oracle::canonical(oracle::parse(p.second.text()).front());
    if ((out[{pruned, trunk}] += c) == 0) out.erase({pruned, trunk});
  }
  return out;
}

NonplanarForest N(const char* s) { return parse_nonplanar(s, o); }
}  // namespace

TEST_CASE("canonical form identifies mirror images") {
  CHECK(parse_nonplanar("[a[a][b]]", ab) == parse_nonplanar("[a[b][a]]", ab));
  CHECK(parse_nonplanar("[a][b[a]]", ab) == parse_nonplanar("[b[a]][a]", ab));
  CHECK_FALSE(parse_nonplanar("[a[b]]", ab) == parse_nonplanar("[b[a]]", ab));
  // non-planar trees with n vertices: 1, 1, 2, 4, 9
  const std::size_t rooted[] = {1, 1, 2, 4, 9};
  for (std::size_t n = 1; n <= 5; ++n) {
    std::size_t trees = 0;
    for (const auto& f : enumerate_nonplanar(n, o)) trees += f.canonical().size() == 1;
    CHECK(trees == rooted[n - 1]);
  }
}

TEST_CASE("coproduct on trees matches admissible cuts") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Tree& t : enumerate_trees(n, ab)) {
      const NonplanarForest w{Forest(t)};
      auto expected = oracle::bck_coproduct_tree(oracle::parse(t.text()).front());
      for (auto it = expected.begin(); it != expected.end();) it = it->second == 0 ? expected.erase(it) : std::next(it);
      CHECK(as_cuts(bck_coproduct(w)) == expected);
    }
}

TEST_CASE("coproduct is multiplicative") {
  const auto x = N("[[]]"), y = N("[][[]]");
  BckTensor rhs;
  for (const auto& [p, c] : bck_coproduct(x))
    for (const auto& [q, e] : bck_coproduct(y)) rhs.add({bck_product(p.first, q.first), bck_product(p.second, q.second)}, c * e);
  CHECK(bck_coproduct(bck_product(x, y)) == rhs);
}

TEST_CASE("projection values") {
  CHECK(bck_primitive_projection(N("[]")) == BckLinComb(N("[]")));
  CHECK(bck_primitive_projection(N("[[]]")).is_zero());
  CHECK(bck_primitive_projection(N("[[[]]]")).is_zero());
  CHECK(bck_primitive_projection(N("[[][]]")).is_zero());
  CHECK(bck_primitive_projection(N("[][[]]")).is_zero());
  CHECK(bck_primitive_projection(N("[][]")) == parse_bck_lincomb("[][] - 2*[[]]", o));
  CHECK(bck_primitive_projection(N("[][][]")) == parse_bck_lincomb("[][][] - 3*[][[]] + 3*[[[]]]", o));
}

TEST_CASE("projection is primitive and antipode inverts") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const auto& w : enumerate_nonplanar(n, o)) {
      CHECK(bck_reduced_coproduct(bck_primitive_projection(w)).is_zero());
      BckLinComb s;
      for (const auto& [p, c] : bck_coproduct(w)) s.add_scaled(bck_product(bck_antipode(p.first), BckLinComb(p.second)), c);
      CHECK(s.is_zero());
    }
}

TEST_CASE("planar projection does not descend to the non-planar one") {
  const Forest w = parse_forest("[][[]]", o);
  const BckLinComb forgotten = forget_planarity(primitive_projection(w));
  const BckLinComb direct = bck_primitive_projection(NonplanarForest(w));
  CHECK(direct.is_zero());
  CHECK_FALSE(forgotten == direct);
}
