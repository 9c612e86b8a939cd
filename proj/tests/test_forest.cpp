#include "doctest.h"
#include "mkw/forest.hpp"
#include "oracle.hpp"

using namespace mkw;

TEST_CASE("forest counts follow the Catalan numbers") {
  const Alphabet o = Alphabet::singleton();
  for (std::size_t n = 1; n <= 7; ++n) {
    CHECK(enumerate_forests(n, o).size() == oracle::catalan(n));
    CHECK(enumerate_trees(n, o).size() == oracle::catalan(n - 1));
  }
  const Alphabet ab{"a", "b"};
  for (std::size_t n = 1; n <= 5; ++n) CHECK(enumerate_forests(n, ab).size() == (std::size_t{1} << n) * oracle::catalan(n));
}

TEST_CASE("enumeration has no repeats and every element has the right degree") {
  const Alphabet ab{"a", "b"};
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto all = enumerate_forests(n, ab);
    std::set<std::string> seen;
    for (const auto& w : all) {
      CHECK(w.degree() == n);
      CHECK(oracle::size(oracle::parse(w.text())) == n);
      seen.insert(w.text());
    }
    CHECK(seen.size() == all.size());
  }
}

TEST_CASE("parse and print round trip, with and without explicit tokens") {
  const Alphabet ab{"a", "b"};
  for (const auto& w : enumerate_forests(4, ab)) CHECK(parse_forest(w.text(), ab) == w);
  const Alphabet o = Alphabet::singleton();
  CHECK(parse_forest("[][[]]", o).text() == "[o][o[o]]");
  CHECK(parse_forest("[o][o[o]]", o) == parse_forest("[][[]]", o));
  CHECK(parse_forest(" [a [b] ] ", ab).text() == "[a[b]]");
}

TEST_CASE("trees are hash-consed: equal structure means equal handle") {
  const Alphabet ab{"a", "b"};
  const Forest x = parse_forest("[a[b][a]]", ab);
  const Forest y = parse_forest("[a[b][a]]", ab);
  CHECK(x == y);
  CHECK(x.hash() == y.hash());
  CHECK_FALSE(x == parse_forest("[a[a][b]]", ab));
}

TEST_CASE("parse errors report a position") {
  const Alphabet ab{"a", "b"};
  auto position_of = [&](const char* text) -> std::size_t {
    try {
      parse_forest(text, ab);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("no error for " << text);
    return 0;
  };
  CHECK(position_of("[a[b]") == 0);
  CHECK(position_of("[a]]") == 3);
  CHECK(position_of("[a][c]") == 4);  // c is not a letter
  CHECK_THROWS_AS(parse_forest("[]", ab), ParseError);  // token needed with two letters
}

TEST_CASE("B+ and B- are inverse") {
  const Alphabet ab{"a", "b"};
  const Forest w = parse_forest("[a[b]][b]", ab);
  const Tree t = b_plus(w, intern_token("a"));
  CHECK(t.text() == "[a[a[b]][b]]");
  CHECK(b_minus(t) == w);
}

TEST_CASE("compare is a strict total order consistent with equality") {
  const auto all = enumerate_forests_upto(4, Alphabet{"a", "b"});
  for (std::size_t i = 0; i < all.size(); i += 7)
    for (std::size_t j = 0; j < all.size(); j += 5) {
      const auto c = compare(all[i], all[j]);
      CHECK((c == 0) == (all[i] == all[j]));
      CHECK(compare(all[j], all[i]) == (0 <=> c));
    }
}
