#include "doctest.h"
#include "mkw/expression.hpp"
#include "mkw/mkw_hopf.hpp"
#include "mkw/postlie.hpp"
#include "oracle.hpp"

using namespace mkw;

namespace {
const Alphabet ab{"a", "b"};
}

TEST_CASE("coproduct on trees matches the cut enumeration") {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Tree& t : enumerate_trees(n, ab))
      CHECK(oracle::of(mkw_coproduct(t)) == oracle::mkw_coproduct_tree(oracle::parse(t.text()).front()));
}

TEST_CASE("coproduct on forests matches the cut enumeration") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const Forest& w : enumerate_forests(n, ab))
      CHECK(oracle::of(mkw_coproduct(w)) == oracle::mkw_coproduct(oracle::parse(w.text())));
}

TEST_CASE("coproduct displays") {
  const Alphabet af{"a", "b", "c", "d", "f"};
  const TensorElem t = mkw_coproduct(parse_forest("[a[b][c[d]]]", af));
  CHECK(t == parse_tensor("1 ⊗ [a[b][c[d]]] + [b] ⊗ [a[c[d]]] + [d] ⊗ [a[b][c]] + [b]⧢[d] ⊗ [a[c]] + [b][c[d]] ⊗ [a] + "
                          "[a[b][c[d]]] ⊗ 1",
                          af));
  CHECK(t.size() == 7);  // [b]⧢[d] splits into two words
  const TensorElem f = mkw_coproduct(parse_forest("[a[b]][c[d]][f]", af));
  CHECK(f.coeff({parse_forest("[a[b]][d]", af), parse_forest("[c][f]", af)}) == 1);
  CHECK(f.coeff({parse_forest("[d][a[b]]", af), parse_forest("[c][f]", af)}) == 1);
  // cuts must respect the left-to-right order of the trees
  CHECK(f.coeff({parse_forest("[c[d]]", af), parse_forest("[a[b]][f]", af)}) == 0);
}

TEST_CASE("reduced coproduct drops the primitive part") {
  const Forest w = parse_forest("[a[b]]", ab);
  const TensorElem r = reduced_coproduct(w);
  CHECK(r == TensorElem({parse_forest("[b]", ab), parse_forest("[a]", ab)}));
  CHECK(reduced_coproduct(parse_forest("[a]", ab)).is_zero());
  CHECK(iterated_reduced_coproduct(LinComb(w), 2).is_zero());
  CHECK(arity(iterated_reduced_coproduct(LinComb(w), 1)) == 2);
}

TEST_CASE("antipode is convolution inverse to the identity") {
  for (const Forest& w : enumerate_forests_upto(4, ab)) {
    LinComb left, right;
    for (const auto& [p, c] : mkw_coproduct(w)) {
      left.add_scaled(shuffle(mkw_antipode(p.first), LinComb(p.second)), c);
      right.add_scaled(shuffle(LinComb(p.first), mkw_antipode(p.second)), c);
    }
    const LinComb expected = w.empty() ? unit() : LinComb{};
    CHECK(left == expected);
    CHECK(right == expected);
  }
}

TEST_CASE("duality with the Grossman-Larson product") {
  CHECK(gl_mkw_duality_check(4, ab).passed);
  // the deconcatenation coproduct is not dual to ∗
  const auto wrong = gl_mkw_duality_check(3, ab, [](const Forest& w) { return deconcatenation(w); });
  CHECK_FALSE(wrong.passed);
  CHECK(wrong.witness.has_value());
}
