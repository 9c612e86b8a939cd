#include "doctest.h"
#include "mkw/expression.hpp"
#include "mkw/postlie.hpp"
#include "oracle.hpp"

using namespace mkw;

namespace {
const Alphabet ab{"a", "b"};
Forest F(const char* s) { return parse_forest(s, ab); }

// A ∗ B = Σ over subsets S of the trees of A of A_S · (A_{not S} ⊲ B).
oracle::Sum gl_oracle(const oracle::Word& a, const oracle::Word& b) {
  oracle::Sum out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << a.size()); ++mask) {
    oracle::Word left, right;
    for (std::size_t i = 0; i < a.size(); ++i) (mask >> i & 1 ? left : right).push_back(a[i]);
    for (const auto& [w, c] : oracle::graft(right, b)) {
      const oracle::Word g = w == "1" ? oracle::Word{} : oracle::parse(w);
      oracle::Word joined = left;
      joined.insert(joined.end(), g.begin(), g.end());
      oracle::add(out, oracle::text(joined), c);
    }
  }
  return out;
}
}  // namespace

TEST_CASE("left grafting agrees with the brute-force oracle") {
  const auto all = enumerate_forests_upto(4, ab);
  for (const auto& x : all)
    for (const auto& y : all) {
      if (x.degree() + y.degree() > 5 || y.empty()) continue;
      CHECK(oracle::of(left_graft(x, y)) == oracle::graft(oracle::parse(x.text()), oracle::parse(y.text())));
    }
}

TEST_CASE("grafting units") {
  CHECK(left_graft(Forest{}, F("[a[b]]")) == LinComb(F("[a[b]]")));
  CHECK(left_graft(F("[a]"), Forest{}).is_zero());
  CHECK(left_graft(Forest{}, Forest{}) == unit());
}

TEST_CASE("Grossman-Larson product agrees with the subset oracle") {
  const auto all = enumerate_forests_upto(3, ab);
  for (const auto& x : all)
    for (const auto& y : all) {
      if (y.empty()) continue;
      CHECK(oracle::of(gl_product(x, y)) == gl_oracle(oracle::parse(x.text()), oracle::parse(y.text())));
    }
}

TEST_CASE("worked grafting displays") {
  const Alphabet af{"a", "b", "c", "d", "e", "f"};
  const LinComb g = left_graft(parse_forest("[a[b]]", af), parse_forest("[c[d][e[f]]]", af));
  CHECK(g == parse_lincomb("[c[a[b]][d][e[f]]] + [c[d[a[b]]][e[f]]] + [c[d][e[a[b]][f]]] + [c[d][e[f[a[b]]]]]", af));
  const LinComb h = left_graft(parse_forest("[a[b]][c]", af), parse_forest("[d[e]][f]", af));
  CHECK(h.size() == 9);
  CHECK(h.coeff(parse_forest("[d[e]][f[a[b]][c]]", af)) == 1);
  CHECK(h.coeff(parse_forest("[d[c][e[a[b]]]][f]", af)) == 1);
  // [c] may not sit left of [a[b]] on a shared vertex
  CHECK(h.coeff(parse_forest("[d[c][a[b]][e]][f]", af)) == 0);
}

TEST_CASE("antipode of the Grossman-Larson product") {
  CHECK(gl_antipode(F("[a]")) == -LinComb(F("[a]")));
  const LinComb expected = gl_product(F("[b]"), F("[a]")) + left_graft(F("[a]"), F("[b]"));
  CHECK(gl_antipode(F("[a][b]")) == expected);
  CHECK(concat_antipode(F("[a][b[a]]")) == LinComb(F("[b[a]][a]")));
}

TEST_CASE("the product can be inverted back to concatenation") {
  const auto all = enumerate_forests_upto(3, ab);
  for (const auto& x : all)
    for (const auto& y : all) CHECK(gl_inverse_product(LinComb(x), LinComb(y)) == LinComb(concat(x, y)));
}

TEST_CASE("jacobi bracket is antisymmetric") {
  const LinComb x = F("[a[b]]"), y = F("[b]");
  CHECK(jacobi_bracket(x, y) == -jacobi_bracket(y, x));
}

TEST_CASE("exponentials are group-like and truncation is respected") {
  const LinComb a = LinComb(F("[a]")) + Rational(1, 2) * LinComb(F("[b[a]]"));
  const LinComb e = gl_exp(a, 4);
  CHECK(max_degree(e) <= 4);
  CHECK(counit(e) == 1);
  CHECK(is_group_like(e, 4));
  CHECK_FALSE(is_group_like(unit() + 2 * LinComb(F("[a]")), 2));
  // exp(c[a]) has ⟨·,[a][a]⟩ = c²/2, from [a]∗[a] = [a][a] + [a[a]].
  const LinComb ea = gl_exp(Rational(3) * LinComb(F("[a]")), 2);
  CHECK(ea.coeff(F("[a][a]")) == Rational(9, 2));
  CHECK(ea.coeff(F("[a[a]]")) == Rational(9, 2));
}
