#include "doctest.h"
#include "mkw/lincomb.hpp"
#include "oracle.hpp"

using namespace mkw;

namespace {
const Alphabet ab{"a", "b"};
Forest F(const char* s) { return parse_forest(s, ab); }
}  // namespace

TEST_CASE("coefficients cancel and stay canonical") {
  LinComb x = F("[a]");
  x.add(F("[b]"), Rational(1, 2));
  x.add(F("[a]"), -1);
  CHECK(x.size() == 1);
  CHECK(x.coeff(F("[b]")) == Rational(1, 2));
  x *= 0;
  CHECK(x.is_zero());
  CHECK(to_text(x) == "0");
}

TEST_CASE("shuffle agrees with brute-force interleaving") {
  const auto all = enumerate_forests_upto(3, ab);
  for (const auto& x : all)
    for (const auto& y : all) {
      const auto expect = x.empty() && y.empty() ? oracle::Sum{{"1", 1}}
                                                 : oracle::shuffle(oracle::parse(x.text()), oracle::parse(y.text()));
      CHECK(oracle::of(shuffle(x, y)) == expect);
    }
}

TEST_CASE("deshuffle is the transpose of shuffle") {
  const auto all = enumerate_forests_upto(4, ab);
  for (const auto& w : all) {
    const TensorElem d = deshuffle(w);
    for (const auto& x : all)
      for (const auto& y : all)
        if (x.degree() + y.degree() == w.degree()) CHECK(shuffle(x, y).coeff(w) == d.coeff({x, y}));
  }
}

TEST_CASE("deconcatenation splits words at every position") {
  const Forest w = F("[a][b[a]][b]");
  const TensorElem d = deconcatenation(w);
  CHECK(d.size() == 4);
  CHECK(d.coeff({Forest{}, w}) == 1);
  CHECK(d.coeff({F("[a]"), F("[b[a]][b]")}) == 1);
  CHECK(d.coeff({F("[a][b[a]]"), F("[b]")}) == 1);
  CHECK(d.coeff({w, Forest{}}) == 1);
}

TEST_CASE("text output is sorted and deterministic") {
  LinComb x;
  x.add(F("[b]"), 2);
  x.add(F("[a][a]"), Rational(-1, 3));
  x.add(F("[a]"), 1);
  x.add(Forest{}, 5);
  CHECK(to_text(x) == "5 + [a] + 2*[b] - 1/3*[a][a]");
  CHECK(to_text(tensor(LinComb(F("[a]")), LinComb(F("[b]")) - LinComb(F("[a]")))) == "-[a] ⊗ [a] + [a] ⊗ [b]");
}

TEST_CASE("json round trip") {
  LinComb x;
  x.add(F("[a[b]][b]"), Rational(7, 5));
  x.add(F("[b]"), -2);
  CHECK(lincomb_from_json(to_json(x), ab) == x);
}

TEST_CASE("multi-leg tensors") {
  const MultiTensor t = tensor(as_multi(LinComb(F("[a]"))), as_multi(LinComb(F("[b]"))));
  CHECK(arity(t) == 2);
  CHECK(as_pair(t) == tensor(LinComb(F("[a]")), LinComb(F("[b]"))));
  const MultiTensor s = split_leg(t, 1, [](const Forest& w) { return deshuffle(w); });
  CHECK(arity(s) == 3);
  CHECK(s.size() == 2);
  const MultiTensor m = merge_legs(s, 1, 2, [](const Forest& x, const Forest& y) { return LinComb(concat(x, y)); });
  CHECK(m == as_multi(tensor(LinComb(F("[a]")), 2 * LinComb(F("[b]")))));
}

TEST_CASE("pairing is the standard inner product on forests") {
  LinComb x = 2 * LinComb(F("[a]")) + LinComb(F("[b]"));
  LinComb y = LinComb(F("[a]")) - 3 * LinComb(F("[b]"));
  CHECK(pairing(x, y) == -1);
  CHECK(counit(x + unit()) == 1);
  CHECK(max_degree(x + LinComb(F("[a[b]]"))) == 2);
  CHECK(truncate(x + LinComb(F("[a[b]]")), 1) == x);
}
