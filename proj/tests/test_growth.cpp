#include <random>

#include "doctest.h"
#include "mkw/expression.hpp"
#include "mkw/growth.hpp"
#include "mkw/mkw_hopf.hpp"
#include "oracle.hpp"

using namespace mkw;

namespace {
const Alphabet ab{"a", "b"};
const Alphabet o = Alphabet::singleton();
}  // namespace

TEST_CASE("natural growth matches the vertex-by-vertex oracle") {
  const auto all = enumerate_forests_upto(3, ab);
  for (const auto& x : all)
    for (const auto& y : all) {
      if (y.empty()) continue;
      CHECK(oracle::of(natural_growth(x, y)) == oracle::natural_growth(oracle::parse(x.text()), oracle::parse(y.text())));
    }
}

TEST_CASE("natural growth display carries the 1/|b| factor") {
  const Alphabet af{"a", "b", "c", "d", "e", "f"};
  const LinComb g = natural_growth(parse_forest("[a[b]][c]", af), parse_forest("[d[e][f]]", af));
  CHECK(g.size() == 8);
  for (const auto& [w, c] : g) CHECK(c == Rational(1, 3));
  CHECK(g.coeff(parse_forest("[d[e][a[b]][c][f]]", af)) == Rational(1, 3));
  CHECK_THROWS_AS(natural_growth(parse_forest("[a]", af), Forest{}), std::invalid_argument);
}

TEST_CASE("projection values on small forests") {
  CHECK(primitive_projection(parse_forest("[]", o)) == LinComb(parse_forest("[]", o)));
  CHECK(primitive_projection(parse_forest("[[]]", o)).is_zero());
  CHECK(primitive_projection(parse_forest("[[[]]]", o)).is_zero());
  CHECK(primitive_projection(parse_forest("[[][]]", o)).is_zero());
  CHECK(primitive_projection(parse_forest("[][[]]", o)) ==
        parse_lincomb("1/2*([][[]] - [[]][]) + 1/2*[[[]]] - [[][]]", o));
  CHECK(primitive_projection(Forest{}).is_zero());
}

TEST_CASE("projection lands in the primitives and is idempotent") {
  for (const auto& w : enumerate_forests_upto(4, ab)) {
    const LinComb p = primitive_projection(w);
    CHECK(is_primitive(p));
    CHECK(primitive_projection(p) == p);
  }
}

TEST_CASE("primitive dimensions") {
  // Primitives of a cofree coalgebra cogenerated by trees: the tree count in each degree.
  for (std::size_t n = 1; n <= 5; ++n) CHECK(primitive_basis(n, o).size() == oracle::catalan(n - 1));
  for (std::size_t n = 1; n <= 3; ++n) CHECK(primitive_basis(n, ab).size() == enumerate_trees(n, ab).size());
}

TEST_CASE("decomposition into growth words round-trips") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-3, 3);
  const auto all = enumerate_forests(4, ab);
  for (int trial = 0; trial < 20; ++trial) {
    LinComb x;
    for (int k = 0; k < 3; ++k) x.add(all[rng() % all.size()], coeff(rng));
    if (x.is_zero()) continue;
    const auto levels = f_decompose(x);
    CHECK(recompose(levels) == x);
    for (const auto& level : levels) CHECK((level.component.is_zero() || arity(level.component) == level.level));
  }
}

TEST_CASE("primitive elements reject non-primitives") {
  CHECK_NOTHROW(PrimitiveElement(LinComb(parse_forest("[a]", ab))));
  CHECK_THROWS_AS(PrimitiveElement(LinComb(parse_forest("[a[b]]", ab))), std::invalid_argument);
}

TEST_CASE("growth words deconcatenate like words") {
  const PrimitiveElement p(LinComb(parse_forest("[a]", ab)));
  const PrimitiveElement q(LinComb(parse_forest("[b]", ab)));
  const PrimitiveWord w{p, q, p};
  // Δ(evaluate w) = Σ evaluate(u) ⊗ evaluate(v) over deconcatenations w = uv
  TensorElem expected;
  for (const auto& [u, v] : gr_deconcat(w)) {
    const LinComb eu = u.empty() ? unit() : evaluate(u);
    const LinComb ev = v.empty() ? unit() : evaluate(v);
    expected += tensor(eu, ev);
  }
  CHECK(mkw_coproduct(evaluate(w)) == expected);
  CHECK(gr_deconcat(w).size() == 4);
}

TEST_CASE("the cocycle gives B+ its coproduct rule") {
  const PrimitiveElement p(LinComb(parse_forest("[a]", ab)));
  for (const auto& w : enumerate_forests_upto(3, ab)) {
    if (w.empty()) continue;
    const LinComb b = cocycle_bplus(LinComb(w), p);
    TensorElem expected = tensor(b, unit());
    for (const auto& [pair, c] : mkw_coproduct(w)) expected += c * tensor(LinComb(pair.first), cocycle_bplus(LinComb(pair.second), p));
    // the unit leg: 1 ⊤ p = p
    CHECK(mkw_coproduct(b) == expected);
  }
}
