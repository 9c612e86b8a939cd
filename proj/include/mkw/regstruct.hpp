#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mkw/lincomb.hpp"

namespace mkw {

// Element of ℕ^d.
class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<unsigned> components) : c_(std::move(components)) {}
  static MultiIndex zero(std::size_t d) { return MultiIndex(std::vector<unsigned>(d, 0)); }
  static MultiIndex unit(std::size_t d, std::size_t i);

  std::size_t dimension() const { return c_.size(); }
  unsigned operator[](std::size_t i) const { return c_[i]; }
  const std::vector<unsigned>& components() const { return c_; }
  unsigned norm() const;
  bool is_zero() const { return norm() == 0; }
  bool is_unit() const { return norm() == 1; }
  bool fits_in(const MultiIndex& bound) const;  // componentwise ≤

  MultiIndex operator+(const MultiIndex& o) const;
  // Componentwise difference, or nothing when a component would go negative.
  std::optional<MultiIndex> minus(const MultiIndex& o) const;

  // Unit vectors summing to this index, lowest coordinate first.
  std::vector<MultiIndex> unit_steps() const;
  std::string text() const;  // "2" or "1,0"

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<unsigned> c_;
};

// Π_k binom(n_k, l_k).
Rational binomial(const MultiIndex& n, const MultiIndex& l);
// Every l with l ≤ bound componentwise.
std::vector<MultiIndex> indices_below(const MultiIndex& bound);
std::vector<MultiIndex> indices_of_norm(std::size_t d, unsigned norm);

namespace detail {
struct RegNode;
}

// Planar tree with a multi-index on every vertex and every edge. As an element
// of the enveloping algebra, root m with branches b1…bk stands for X^m I(b1)⋯I(bk).
class RegTree {
 public:
  using Branch = std::pair<MultiIndex, RegTree>;  // edge decoration, subtree

  RegTree(MultiIndex root, std::vector<Branch> branches);
  static RegTree unit(std::size_t d) { return RegTree(MultiIndex::zero(d), {}); }
  static RegTree monomial(MultiIndex m) { return RegTree(std::move(m), {}); }
  static RegTree planted(const MultiIndex& edge, const RegTree& child);

  const MultiIndex& root() const;
  const std::vector<Branch>& branches() const;
  std::size_t dimension() const { return root().dimension(); }

  // #edges plus the norms of every decoration.
  std::size_t degree() const;
  // |root| + number of root branches: the word length in the generators.
  std::size_t letters() const { return root().norm() + branches().size(); }
  std::size_t vertex_count() const;

  bool is_unit() const { return root().is_zero() && branches().empty(); }
  bool is_monomial() const { return branches().empty(); }
  bool is_planted() const { return root().is_zero() && branches().size() == 1; }
  bool is_generator() const { return is_planted() || (is_monomial() && root().is_unit()); }

  const std::string& text() const;  // "[o{1}[o]{a=(1)}]"; zero decorations omitted
  std::size_t hash() const;

  friend bool operator==(const RegTree& a, const RegTree& b);

 private:
  std::shared_ptr<const detail::RegNode> node_;
};

namespace detail {
struct RegNode {
  MultiIndex root;
  std::vector<RegTree::Branch> branches;
  std::size_t degree;
  std::size_t vertices;
  std::string text;
  std::size_t hash;
};
}  // namespace detail

inline const MultiIndex& RegTree::root() const { return node_->root; }
inline const std::vector<RegTree::Branch>& RegTree::branches() const { return node_->branches; }
inline std::size_t RegTree::degree() const { return node_->degree; }
inline std::size_t RegTree::vertex_count() const { return node_->vertices; }
inline const std::string& RegTree::text() const { return node_->text; }
inline std::size_t RegTree::hash() const { return node_->hash; }
inline bool operator==(const RegTree& a, const RegTree& b) { return a.node_ == b.node_ || a.text() == b.text(); }

template <>
struct BasisTraits<RegTree> {
  struct Hash {
    std::size_t operator()(const RegTree& t) const { return t.hash(); }
  };
  struct Less {
    bool operator()(const RegTree& a, const RegTree& b) const {
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      return a.text() < b.text();
    }
  };
};

using RegPair = std::pair<RegTree, RegTree>;

template <>
struct BasisTraits<RegPair> {
  struct Hash {
    std::size_t operator()(const RegPair& p) const { return hash_combine(p.first.hash(), p.second.hash()); }
  };
  struct Less {
    bool operator()(const RegPair& a, const RegPair& b) const {
      BasisTraits<RegTree>::Less less;
      if (less(a.first, b.first)) return true;
      if (less(b.first, a.first)) return false;
      return less(a.second, b.second);
    }
  };
};

using RegLinComb = BasicLinComb<RegTree>;
using RegTensor = BasicLinComb<RegPair>;

// Bracket text with decorations, e.g. "[o{1}[o]{a=(1)}]"; "1" is the unit.
RegTree parse_reg_tree(std::string_view text, std::size_t dimension);
std::string to_text(const RegLinComb& x);
std::string to_text(const RegTensor& t);
nlohmann::json to_json(const RegLinComb& x);

// Every tree of exactly this degree whose decorations all have norm ≤ max_norm.
std::vector<RegTree> enumerate_reg_trees(std::size_t degree, std::size_t dimension, unsigned max_norm);
// The generators of that degree: planted trees, plus X^{e_i} in degree 1.
std::vector<RegTree> enumerate_generators(std::size_t degree, std::size_t dimension, unsigned max_norm);

// ↑^l_v: adds l to the decoration of vertex v (preorder, root = 0).
RegTree raise_at(const RegTree& t, std::size_t vertex, const MultiIndex& l);
// ↑^l = ↑^{l_1} ∘ ⋯ ∘ ↑^{l_k} over unit steps, each summing over all vertices.
RegLinComb raise(const RegTree& t, const MultiIndex& l);
RegLinComb raise(const RegLinComb& x, const MultiIndex& l);

// ↓^i: one term per root-adjacent edge with i subtracted from its decoration.
RegLinComb lower_root_adjacent(const RegTree& y, const MultiIndex& i);
RegLinComb lower_root_adjacent(const RegLinComb& y, const MultiIndex& i);

// ⊲̂̂ on generators: X^i ⊲ y = ↑^i y (acting below the planted root), y ⊲ X^i = 0,
// and the binomially weighted deformed grafting between planted trees.
RegLinComb deformed_graft(const RegLinComb& x, const RegLinComb& y);

// [·,·]_0 on the Lie span: units commute, [y, X^i]_0 = ↓^i y, otherwise the ⊙-commutator.
RegLinComb bracket0(const RegLinComb& x, const RegLinComb& y);

// ⊙: root merge of branches, with τX^i = X^iτ + ↓^iτ when units move left.
RegLinComb reg_assoc_product(const RegTree& a, const RegTree& b);
RegLinComb reg_assoc_product(const RegLinComb& a, const RegLinComb& b);

// Δ⧢ with every generator primitive.
RegTensor reg_deshuffle(const RegTree& t);

// Guin–Oudom extension of ⊲̂̂ to the enveloping algebra, and A ∗ B = A_(1) ⊙ (A_(2) ⊲̂̂ B).
RegLinComb reg_graft(const RegTree& a, const RegTree& b);
RegLinComb reg_graft(const RegLinComb& a, const RegLinComb& b);
RegLinComb reg_gl_product(const RegTree& a, const RegTree& b);
RegLinComb reg_gl_product(const RegLinComb& a, const RegLinComb& b);

struct RegBasis {
  std::size_t dimension = 1;
  unsigned max_norm = 2;
  std::size_t max_degree = 3;

  std::vector<RegTree> trees() const;  // all degrees 0..max_degree
};

// Transpose of ∗ over pairs (A, B) from the basis with deg A + deg B ≤ max_degree.
// Lowering makes ∗ only degree-filtered, so the full dual would be an infinite
// sum; this is its truncation to the basis.
class DeformedCoproduct {
 public:
  explicit DeformedCoproduct(RegBasis basis);
  const RegBasis& basis() const { return basis_; }
  RegTensor operator()(const RegTree& x) const;  // throws std::invalid_argument above max_degree
  RegTensor operator()(const RegLinComb& x) const;

 private:
  RegBasis basis_;
  std::unordered_map<RegTree, RegTensor, BasisTraits<RegTree>::Hash> table_;
};

// φ: identity on generators, φ(ω1 ∗ ω2) = φ(ω1) ⊙ φ(ω2).
RegLinComb phi_reg(const RegTree& x, std::size_t max_degree);
RegLinComb phi_reg(const RegLinComb& x, std::size_t max_degree);
RegLinComb phi_reg_inverse(const RegLinComb& x, std::size_t max_degree);

// φ(x) = x + terms with fewer letters, for every basis tree.
bool phi_reg_unitriangular(const RegBasis& basis);

}  // namespace mkw
