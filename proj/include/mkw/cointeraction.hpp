#pragma once

#include <functional>
#include <map>
#include <vector>

#include "mkw/lincomb.hpp"
#include "mkw/report.hpp"

namespace mkw {

// Coaction dual to left grafting: ⟨A⊗B, ρ(x)⟩ = ⟨A⊲B, x⟩.
// On a tree it is Δ_MKW(τ) − τ⊗1; on a forest it is the product over its trees
// with ⧢ on the left leg and concatenation on the right.
TensorElem rho_graft(const Forest& w);
TensorElem rho_graft(const LinComb& x);

using CoactionFn = std::function<TensorElem(const Forest&)>;
using ProductFn = std::function<LinComb(const Forest&, const Forest&)>;

// Coproduct dual to a degree-additive product, built by transposing the
// product on each graded piece over an alphabet.
class TransposedCoproduct {
 public:
  TransposedCoproduct(ProductFn product, Alphabet alphabet);
  const TensorElem& operator()(const Forest& x) const;

 private:
  void fill(std::size_t degree) const;

  ProductFn product_;
  Alphabet alphabet_;
  mutable std::unordered_map<Forest, TensorElem, ForestHash> table_;
  mutable std::vector<bool> filled_;
};

// ⟨A⊗B, ρ(x)⟩ = ⟨A⊲B, x⟩ for |A|+|B| = |x| ≤ max_degree.
CheckResult graft_duality_check(std::size_t max_degree, const Alphabet& alphabet, const CoactionFn& rho = nullptr);

// The four cointeraction axioms on basis elements of degree ≤ max_degree.
std::vector<CheckResult> verify_cointeraction(std::size_t max_degree, const Alphabet& alphabet,
                                              const CoactionFn& rho = nullptr);

// The co-translation and co-substitution identities.
std::vector<CheckResult> verify_cotranslation_cosubstitution(std::size_t max_degree, const Alphabet& alphabet,
                                                             const CoactionFn& rho = nullptr);

// Post-Lie translation T_v: [i] ↦ [i] + v_i, extended through ⊲ on trees and ∗ on forests.
// Every v_i must be primitive for the deshuffle coproduct.
class Translation {
 public:
  Translation(std::map<Decoration, LinComb> shifts, std::size_t max_degree);

  const LinComb& shift(Decoration letter) const;
  const std::map<Decoration, LinComb>& shifts() const { return shifts_; }
  std::size_t max_degree() const { return max_degree_; }

  LinComb operator()(const Forest& w) const;
  LinComb operator()(const LinComb& x) const;

  // The shifts of T_v ∘ T_u are v + T_v(u).
  Translation after(const Translation& u) const;

 private:
  std::map<Decoration, LinComb> shifts_;
  std::size_t max_degree_;
  mutable std::unordered_map<Forest, LinComb, ForestHash> cache_;
};

bool is_lie_primitive(const LinComb& x);

struct DisjointnessResult {
  bool equal = true;               // ξ ⊲ x = T_v(x) on the whole witness family
  std::map<Decoration, LinComb> forced_shifts;  // v_i = ξ ⊲ [i] − [i]
  std::string witness;             // first [i[j]] where they differ
  LinComb grafted;                 // ξ ⊲ [i[j]] at the witness
  LinComb translated;              // T_v([i[j]]) at the witness
};

// Follows the argument that grafting by a group-like ξ is a translation only
// when ξ = 1. ξ must be group-like up to max_degree.
DisjointnessResult disjointness_witness(const LinComb& xi, const Alphabet& alphabet, std::size_t max_degree);

}  // namespace mkw
