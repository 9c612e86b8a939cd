#pragma once

#include <functional>
#include <map>
#include <vector>

#include "mkw/lincomb.hpp"

namespace mkw {

// a ⊤ b = (1/|b|) Σ_v a ⊤_v b: the roots of a are grafted onto v and shuffled
// with v's existing children. b must not contain the empty forest.
LinComb natural_growth(const Forest& a, const Forest& b);
LinComb natural_growth(const LinComb& a, const LinComb& b);

bool is_primitive(const LinComb& x);

// π(x) = x − x^(1) ⊤ π(x^(2)) over the reduced coproduct; the unit maps to 0.
LinComb primitive_projection(const Forest& w);
LinComb primitive_projection(const LinComb& x);

// Smallest k with Δ̂^k(x) = 0. x must be nonzero and have no unit term.
std::size_t primitive_degree(const LinComb& x);

// F on a pure tensor: ((l1 ⊤ l2) ⊤ l3) ⊤ … ⊤ ln.
LinComb growth_word(const ForestTuple& legs);
LinComb growth_word(const MultiTensor& t);

struct DecompositionLevel {
  std::size_t level;      // number of legs
  MultiTensor component;  // lies in P^{⊗level}
};

// x = Σ F_j(t_j), computed top-down in primitive degree.
std::vector<DecompositionLevel> f_decompose(const LinComb& x);
LinComb recompose(const std::vector<DecompositionLevel>& levels);

class PrimitiveElement {
 public:
  explicit PrimitiveElement(LinComb value);  // throws std::invalid_argument unless Δ̂(value) = 0
  const LinComb& value() const { return value_; }
  friend bool operator==(const PrimitiveElement&, const PrimitiveElement&) = default;

 private:
  LinComb value_;
};

// Letters left to right are p_i, …, p_1; evaluation is (p_i ⊤ ⋯ ⊤ p_2) ⊤ p_1.
using PrimitiveWord = std::vector<PrimitiveElement>;
LinComb evaluate(const PrimitiveWord& word);

// B_+^p(x) = x ⊤ p.
LinComb cocycle_bplus(const LinComb& x, const PrimitiveElement& p);

struct WordTerm {
  Rational coeff;
  PrimitiveWord word;
};
std::vector<WordTerm> gr_shuffle(const PrimitiveWord& a, const PrimitiveWord& b);
std::vector<std::pair<PrimitiveWord, PrimitiveWord>> gr_deconcat(const PrimitiveWord& w);

// p_{i,j} for the interval {i, …, j}, 1 ≤ i ≤ j ≤ n.
using PrimitiveFamily = std::map<std::pair<std::size_t, std::size_t>, PrimitiveElement>;

struct CoactionTerm {
  LinComb coefficient;
  std::size_t target;  // index j of e_j
};
// Entry i holds Δ_C(e_i) = Σ_j coefficient ⊗ e_j, for i = 0..n.
using Coaction = std::vector<std::vector<CoactionTerm>>;
Coaction comodule_coaction(std::size_t n, const PrimitiveFamily& family);

// u_i acting on a pure i-leg tensor; only its values on primitive tensors matter.
using PrimitiveMap = std::function<LinComb(const ForestTuple&)>;

// Φ_(u)(x); u[i-1] is u_i.
LinComb coalgebra_endomorphism(const std::vector<PrimitiveMap>& u, const LinComb& x, std::size_t max_degree);
bool endomorphism_bijective(const std::vector<PrimitiveMap>& u, std::size_t max_degree, const Alphabet& alphabet);
bool first_component_bijective(const PrimitiveMap& u1, std::size_t max_degree, const Alphabet& alphabet);

// Basis of ker Δ̂ in degree n by exact row reduction.
std::vector<LinComb> primitive_basis(std::size_t degree, const Alphabet& alphabet);

}  // namespace mkw
