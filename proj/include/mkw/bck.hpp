#pragma once

#include "mkw/lincomb.hpp"

namespace mkw {

// A non-planar forest stored in canonical form: every child list and the
// top-level word sorted by `compare`. Two planar forests are the same
// non-planar forest exactly when their canonical forms agree.
class NonplanarForest {
 public:
  NonplanarForest() = default;
  explicit NonplanarForest(const Forest& any_planar);

  const Forest& canonical() const { return canonical_; }
  std::size_t degree() const { return canonical_.degree(); }
  bool empty() const { return canonical_.empty(); }
  std::string text() const { return canonical_.empty() ? std::string("1") : canonical_.text(); }

  friend bool operator==(const NonplanarForest&, const NonplanarForest&) = default;

 private:
  Forest canonical_;
};

Tree canonical_tree(Tree t);

template <>
struct BasisTraits<NonplanarForest> {
  struct Hash {
    std::size_t operator()(const NonplanarForest& f) const { return f.canonical().hash(); }
  };
  struct Less {
    bool operator()(const NonplanarForest& a, const NonplanarForest& b) const {
      return compare(a.canonical(), b.canonical()) < 0;
    }
  };
};

using NonplanarPair = std::pair<NonplanarForest, NonplanarForest>;

template <>
struct BasisTraits<NonplanarPair> {
  struct Hash {
    std::size_t operator()(const NonplanarPair& p) const {
      return hash_combine(p.first.canonical().hash(), p.second.canonical().hash());
    }
  };
  struct Less {
    bool operator()(const NonplanarPair& a, const NonplanarPair& b) const {
      if (auto c = compare(a.first.canonical(), b.first.canonical()); c != 0) return c < 0;
      return compare(a.second.canonical(), b.second.canonical()) < 0;
    }
  };
};

using BckLinComb = BasicLinComb<NonplanarForest>;
using BckTensor = BasicLinComb<NonplanarPair>;

NonplanarForest parse_nonplanar(std::string_view text, const Alphabet& alphabet);
std::vector<NonplanarForest> enumerate_nonplanar(std::size_t degree, const Alphabet& alphabet);

// Forgets the planar structure term by term.
BckLinComb forget_planarity(const LinComb& x);

// Disjoint union.
NonplanarForest bck_product(const NonplanarForest& a, const NonplanarForest& b);
BckLinComb bck_product(const BckLinComb& a, const BckLinComb& b);
Rational bck_counit(const BckLinComb& x);

// Fixed by Δ(B_+ ω) = B_+ω ⊗ 1 + (id ⊗ B_+)Δ(ω) and multiplicativity.
BckTensor bck_coproduct(const NonplanarForest& w);
BckTensor bck_coproduct(const BckLinComb& x);
BckTensor bck_reduced_coproduct(const NonplanarForest& w);
BckTensor bck_reduced_coproduct(const BckLinComb& x);
BckLinComb bck_antipode(const NonplanarForest& w);
BckLinComb bck_antipode(const BckLinComb& x);

// As in the planar case but without shuffling the new edges among the old ones.
BckLinComb bck_natural_growth(const NonplanarForest& a, const NonplanarForest& b);
BckLinComb bck_natural_growth(const BckLinComb& a, const BckLinComb& b);
BckLinComb bck_primitive_projection(const NonplanarForest& w);
BckLinComb bck_primitive_projection(const BckLinComb& x);

std::string to_text(const BckLinComb& x);
std::string to_text(const BckTensor& t);

}  // namespace mkw
