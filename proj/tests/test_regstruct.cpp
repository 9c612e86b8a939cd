#include "doctest.h"
#include "mkw/expression.hpp"
#include "mkw/regstruct.hpp"

using namespace mkw;

namespace {
RegTree T(const char* s, std::size_t d = 1) { return parse_reg_tree(s, d); }
RegLinComb R(const char* s, std::size_t d = 1) { return parse_reg_lincomb(s, d); }
const MultiIndex e1 = MultiIndex::unit(1, 0);
}  // namespace

TEST_CASE("multi-indices") {
  const MultiIndex m({2, 1});
  CHECK(m.norm() == 3);
  CHECK(m.text() == "2,1");
  CHECK(m.unit_steps().size() == 3);
  CHECK_FALSE(m.minus(MultiIndex({0, 2})).has_value());
  CHECK(*m.minus(MultiIndex({1, 1})) == MultiIndex({1, 0}));
  CHECK(binomial(m, MultiIndex({1, 1})) == 2);
  CHECK(indices_below(m).size() == 6);
  CHECK(indices_of_norm(2, 2).size() == 3);
}

TEST_CASE("decorated tree text round-trips") {
  for (const char* s : {"[o{1}[o]{a=(1)}]", "[o[o[o]]{a=(2)}]", "[o{1}]"}) CHECK(T(s).text() == std::string(s));
  CHECK(T("1").is_unit());
  CHECK(T("[o{1,0}[o{0,1}]{a=(1,1)}]", 2).text() == "[o{1,0}[o{0,1}]{a=(1,1)}]");
  CHECK(T("[o[o]{a=(1)}]").degree() == 2);
  CHECK(T("[o{2}[o]]").letters() == 3);
  CHECK(T("[o[o]]").is_generator());
  CHECK_FALSE(T("[o[o][o]]").is_generator());
}

TEST_CASE("small enumerations") {
  // degree 1, d = 1: X and I_0(1)
  CHECK(enumerate_reg_trees(1, 1, 2).size() == 2);
  CHECK(enumerate_generators(1, 1, 2).size() == 2);
  CHECK(enumerate_generators(1, 2, 2).size() == 3);
  for (std::size_t n = 0; n <= 3; ++n)
    for (const auto& t : enumerate_reg_trees(n, 1, 2)) CHECK(t.degree() == n);
}

TEST_CASE("polynomial part multiplies like monomials") {
  CHECK(reg_gl_product(T("[o{1}]"), T("[o{1}]")) == R("[o{2}]"));
  CHECK(reg_gl_product(T("[o{1,0}]", 2), T("[o{0,1}]", 2)) == R("[o{1,1}]", 2));
  CHECK(reg_gl_product(T("[o{0,1}]", 2), T("[o{1,0}]", 2)) == R("[o{1,1}]", 2));
}

TEST_CASE("polynomial times planted tree raises every vertex") {
  const RegTree planted = T("[o[o[o]]{a=(1)}]");
  CHECK(reg_gl_product(T("[o{1}]"), planted) ==
        R("[o{1}[o[o]]{a=(1)}] + [o[o{1}[o]]{a=(1)}] + [o[o[o{1}]]{a=(1)}]"));
  // second powers carry binomial weights, as associativity forces
  const RegLinComb twice = reg_gl_product(R("[o{1}]"), reg_gl_product(R("[o{1}]"), RegLinComb(planted)));
  CHECK(reg_gl_product(T("[o{2}]"), planted) == twice);
  CHECK(twice.coeff(T("[o{1}[o{1}[o]]{a=(1)}]")) == 2);
  CHECK(twice.coeff(T("[o{2}[o[o]]{a=(1)}]")) == 1);
}

TEST_CASE("moving a polynomial left lowers the edge") {
  const RegTree tau = T("[o[o]{a=(1)}]");
  const RegTree x = T("[o{1}]");
  CHECK(lower_root_adjacent(tau, e1) == R("[o[o]]"));
  CHECK(reg_assoc_product(tau, x) == reg_assoc_product(x, tau) + R("[o[o]]"));
  CHECK(reg_assoc_product(x, tau) == R("[o{1}[o]{a=(1)}]"));
  CHECK(bracket0(RegLinComb(tau), RegLinComb(x)) == R("[o[o]]"));
  CHECK(bracket0(RegLinComb(x), RegLinComb(x)).is_zero());
}

TEST_CASE("generators are primitive for the deshuffle") {
  for (const auto& g : enumerate_generators(2, 1, 2)) {
    const RegTree u = RegTree::unit(1);
    CHECK(reg_deshuffle(g) == RegTensor({g, u}) + RegTensor({u, g}));
  }
}

TEST_CASE("truncated deformed coproduct is dual to the product") {
  const RegBasis basis{1, 1, 3};
  const DeformedCoproduct delta(basis);
  const auto trees = basis.trees();
  for (const auto& a : trees)
    for (const auto& b : trees) {
      if (a.degree() + b.degree() > basis.max_degree) continue;
      for (const auto& [x, c] : reg_gl_product(a, b)) {
        if (x.degree() > basis.max_degree) continue;
        CHECK(delta(x).coeff({a, b}) == c);
      }
    }
  CHECK_THROWS_AS(delta(T("[o{1}[o[o]]{a=(1)}]")), std::invalid_argument);
}

TEST_CASE("phi_reg is unitriangular and inverts") {
  const RegBasis basis{1, 2, 3};
  CHECK(phi_reg_unitriangular(basis));
  for (const auto& t : basis.trees()) CHECK(phi_reg_inverse(phi_reg(t, 3), 3) == RegLinComb(t));
  for (const auto& g : enumerate_generators(2, 1, 2)) CHECK(phi_reg(g, 3) == RegLinComb(g));
}

TEST_CASE("no map that fixes generators turns the deformed product into the enveloping one") {
  // X⊲I = ↑I is itself a generator, so I∗X − X∗I = ↓I − ↑I while I⊙X − X⊙I = ↓I;
  // identity on generators would force ↑I = 0.
  const RegTree i = T("[o[o]]");
  const RegTree x = T("[o{1}]");
  const RegLinComb lhs = phi_reg(reg_gl_product(i, x), 3);
  const RegLinComb rhs = reg_assoc_product(phi_reg(i, 3), phi_reg(x, 3));
  CHECK(lhs - rhs == -R("[o[o{1}]]"));
  CHECK(reg_gl_product(i, x) - reg_gl_product(x, i) == lower_root_adjacent(i, e1) - R("[o[o{1}]]"));
  CHECK(reg_assoc_product(i, x) - reg_assoc_product(x, i) == lower_root_adjacent(i, e1));
  // with a decorated edge the lowering term is present too
  const RegTree j = T("[o[o]{a=(1)}]");
  CHECK(reg_gl_product(j, x) - reg_gl_product(x, j) == R("[o[o]] - [o[o{1}]{a=(1)}]"));
}
