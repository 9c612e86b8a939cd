#include "doctest.h"
#include "mkw/cointeraction.hpp"
#include "mkw/expression.hpp"
#include "mkw/postlie.hpp"
#include "oracle.hpp"

using namespace mkw;

namespace {
const Alphabet ab{"a", "b"};
Forest F(const char* s) { return parse_forest(s, ab); }
LinComb L(const char* s) { return parse_lincomb(s, ab); }
}  // namespace

TEST_CASE("coaction is the transpose of grafting") {
  constexpr std::size_t top = 4;
  // transpose the oracle product pair by pair
  std::map<std::string, oracle::PairSum> transposed;
  const auto all = enumerate_forests_upto(top, ab);
  for (const auto& a : all)
    for (const auto& b : all) {
      if (a.degree() + b.degree() > top) continue;
      const auto wa = a.empty() ? oracle::Word{} : oracle::parse(a.text());
      const auto wb = b.empty() ? oracle::Word{} : oracle::parse(b.text());
      for (const auto& [x, c] : oracle::graft(wa, wb)) oracle::add(transposed[x], {oracle::show(a), oracle::show(b)}, c);
    }
  for (const auto& x : all) CHECK(oracle::of(rho_graft(x)) == transposed[oracle::show(x)]);
}

TEST_CASE("coaction display on three trees") {
  const Alphabet ag{"a", "b", "c", "d", "e", "f", "g"};
  const TensorElem r = rho_graft(parse_forest("[a[b][c]][d[e]][f[g]]", ag));
  CHECK(r.coeff({Forest{}, parse_forest("[a[b][c]][d[e]][f[g]]", ag)}) == 1);
  CHECK(r.coeff({parse_forest("[e][b]", ag), parse_forest("[a[c]][d][f[g]]", ag)}) == 1);
  // a pruned [c] would need [b] pruned as well
  CHECK(r.coeff({parse_forest("[c]", ag), parse_forest("[a[b]][d[e]][f[g]]", ag)}) == 0);
}

TEST_CASE("duality and cointeraction checks pass, corrupted coaction fails") {
  CHECK(graft_duality_check(4, ab).passed);
  for (const auto& c : verify_cointeraction(3, ab)) CHECK_MESSAGE(c.passed, c.name);
  for (const auto& c : verify_cotranslation_cosubstitution(3, ab)) CHECK_MESSAGE(c.passed, c.name);
  const CoactionFn broken = [](const Forest& w) {
    TensorElem t = rho_graft(w);
    if (w.size() == 2) t.add({w, Forest{}}, 1);
    return t;
  };
  CHECK_FALSE(graft_duality_check(3, ab, broken).passed);
}

TEST_CASE("translation on letters, trees and words") {
  const Decoration a = F("[a]")[0].root();
  const Translation t({{a, L("[b]")}}, 4);
  CHECK(t(F("[a]")) == L("[a] + [b]"));
  CHECK(t(F("[b]")) == L("[b]"));
  CHECK(t(F("[a[b]]")) == L("[a[b]] + [b[b]]"));
  // on a word of trees the translation acts tree by tree
  for (const auto& w : enumerate_forests_upto(3, ab)) {
    if (w.size() < 2) continue;
    LinComb expected = unit();
    for (const Tree& tr : w) expected = concat(expected, t(Forest(tr)));
    CHECK(t(w) == expected);
  }
  CHECK_THROWS_AS(Translation({{a, L("[a][b]")}}, 3), std::invalid_argument);
}

TEST_CASE("translations compose") {
  const Decoration a = F("[a]")[0].root(), b = F("[b]")[0].root();
  const Translation u({{a, L("[b]")}}, 4);
  const Translation v({{b, L("1/2*[a[a]]")}}, 4);
  const Translation vu = v.after(u);
  for (const auto& w : enumerate_forests_upto(3, ab)) CHECK(vu(w) == v(u(LinComb(w))));
  const Translation id({}, 4);
  CHECK(id(F("[a[b]][a]")) == LinComb(F("[a[b]][a]")));
}

TEST_CASE("grafting by a non-trivial group-like element is not a translation") {
  const LinComb xi = gl_exp(L("[a]"), 4);
  const auto result = disjointness_witness(xi, ab, 4);
  CHECK_FALSE(result.equal);
  CHECK_FALSE(result.witness.empty());
  CHECK(result.grafted != result.translated);
  CHECK(disjointness_witness(unit(), ab, 4).equal);
}
