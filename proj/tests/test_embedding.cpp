#include "doctest.h"
#include "mkw/embedding.hpp"
#include "mkw/expression.hpp"
#include "mkw/postlie.hpp"

using namespace mkw;

namespace {
const Alphabet ab{"a", "b"};
Forest F(const char* s) { return parse_forest(s, ab); }
}  // namespace

TEST_CASE("phi fixes trees and follows its recursion") {
  for (const Tree& t : enumerate_trees(3, ab)) CHECK(phi(Forest(t)) == LinComb(Forest(t)));
  for (const auto& w : enumerate_forests_upto(4, ab)) {
    if (w.size() < 2) continue;
    const Forest head(w[0]);
    const Forest rest = subword(w, 1, w.size() - 1);
    const LinComb expected = concat(LinComb(head), phi(rest)) - phi(left_graft(head, rest));
    CHECK(phi(w) == expected);
  }
}

TEST_CASE("phi inverse of a word of trees is their product") {
  for (const auto& w : enumerate_forests_upto(4, ab)) {
    if (w.empty()) continue;
    LinComb product = LinComb(Forest(w[0]));
    for (std::size_t i = 1; i < w.size(); ++i) product = gl_product(product, LinComb(Forest(w[i])));
    CHECK(phi_inverse(w) == product);
    CHECK(phi(product) == LinComb(w));
  }
}

TEST_CASE("phi turns the product into concatenation") {
  const auto all = enumerate_forests_upto(3, ab);
  for (const auto& x : all)
    for (const auto& y : all) CHECK(phi(gl_product(x, y)) == concat(phi(x), phi(y)));
}

TEST_CASE("phi is unitriangular") {
  for (std::size_t n = 1; n <= 4; ++n) CHECK(phi_unitriangular(n, ab));
  CHECK(phi(F("[a][b]")) == LinComb(F("[a][b]")) - LinComb(F("[b[a]]")));
}

TEST_CASE("canonical lift of one increment") {
  const Alphabet a{"a"};
  const TruncChar x = canonical_lift({{"a", Rational(3)}}, 3, a);
  CHECK(x.flavor() == CharFlavor::mkw);
  CHECK(x.is_character());
  CHECK(x.value(parse_forest("[a]", a)) == 3);
  CHECK(x.value(parse_forest("[a][a]", a)) == Rational(9, 2));
  CHECK(x.value(parse_forest("[a[a]]", a)) == Rational(9, 2));
  CHECK(x.value(Forest{}) == 1);
  const TruncChar y = canonical_lift({{"a", Rational(-1, 2)}}, 3, a);
  CHECK(char_convolve(x, y) == canonical_lift({{"a", Rational(5, 2)}}, 3, a));
  CHECK(char_convolve(x, char_inverse(x)) == TruncChar::counit(3, CharFlavor::mkw, a));
}

TEST_CASE("embedding maps rough paths to tensor characters") {
  const TruncChar x = canonical_lift({{"a", Rational(1, 2)}, {"b", Rational(1)}}, 3, ab);
  const TruncChar y = canonical_lift({{"a", Rational(-2)}, {"b", Rational(1, 3)}}, 3, ab);
  const TruncChar ex = embed_rough_path(x);
  CHECK(ex.flavor() == CharFlavor::tensor);
  CHECK(ex.is_character());
  CHECK(unembed_rough_path(ex) == x);
  CHECK(embed_rough_path(char_convolve(x, y)) == char_convolve(ex, embed_rough_path(y)));
}

TEST_CASE("pi scaling") {
  const PiScaling s(3, ab);
  CHECK(deg_pi(F("[a][b[a]]"), s) == 1);
  CHECK(deg_pi(F("[a]"), s) == Rational(1, 3));
  CHECK_THROWS_AS(deg_pi(F("[a[a[a[a]]]]"), s), std::invalid_argument);
}
