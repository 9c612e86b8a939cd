#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mkw {

// Index into the process-wide token table. Tokens are interned once and never freed.
using Decoration = std::uint32_t;

Decoration intern_token(std::string_view token);
const std::string& token_name(Decoration d);

// Root label used internally by the forest coproduct; never appears in parsed input.
Decoration reserved_root();

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// The finite set of decorations a session works with, kept sorted by token text.
class Alphabet {
 public:
  Alphabet() = default;
  Alphabet(std::initializer_list<std::string_view> tokens);
  explicit Alphabet(const std::vector<std::string>& tokens);

  static Alphabet singleton() { return Alphabet{"o"}; }

  bool contains(Decoration d) const;
  const std::vector<Decoration>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  std::string describe() const;  // "{a,b}"

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<Decoration> letters_;
};

namespace detail {
struct TreeNode;
}

// Handle to an interned planar rooted tree; equal trees share one node, so
// equality and hashing are pointer operations.
class Tree {
 public:
  Tree(Decoration root, std::span<const Tree> children);
  explicit Tree(Decoration root) : Tree(root, std::span<const Tree>{}) {}

  Decoration root() const;
  std::span<const Tree> children() const;
  std::size_t degree() const;
  const std::string& text() const;
  std::size_t hash() const;

  friend bool operator==(Tree a, Tree b) { return a.node_ == b.node_; }

 private:
  const detail::TreeNode* node_;
};

namespace detail {
struct TreeNode {
  Decoration root;
  std::vector<Tree> children;
  std::size_t degree;
  std::size_t hash;
  std::string text;
};
}  // namespace detail

inline Decoration Tree::root() const { return node_->root; }
inline std::span<const Tree> Tree::children() const { return node_->children; }
inline std::size_t Tree::degree() const { return node_->degree; }
inline const std::string& Tree::text() const { return node_->text; }
inline std::size_t Tree::hash() const { return node_->hash; }

// Ordered word of trees; the empty word is the unit.
class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<Tree> trees);
  Forest(Tree t) : trees_{t}, degree_(t.degree()) {}  // NOLINT: a tree is a one-letter forest

  const std::vector<Tree>& trees() const { return trees_; }
  std::size_t size() const { return trees_.size(); }
  bool empty() const { return trees_.empty(); }
  std::size_t degree() const { return degree_; }
  const Tree& operator[](std::size_t i) const { return trees_[i]; }
  auto begin() const { return trees_.begin(); }
  auto end() const { return trees_.end(); }

  std::string text() const;
  std::size_t hash() const;

  friend bool operator==(const Forest&, const Forest&) = default;

 private:
  std::vector<Tree> trees_;
  std::size_t degree_ = 0;
};

Forest concat(const Forest& a, const Forest& b);
Forest subword(const Forest& f, std::size_t first, std::size_t count);

// Degree first, then lexicographic on the bracket encoding.
std::strong_ordering compare(const Forest& a, const Forest& b);
std::strong_ordering compare(Tree a, Tree b);

struct ForestHash {
  std::size_t operator()(const Forest& f) const { return f.hash(); }
};
struct TreeHash {
  std::size_t operator()(Tree t) const { return t.hash(); }
};
struct ForestLess {
  bool operator()(const Forest& a, const Forest& b) const { return compare(a, b) < 0; }
};

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

Tree b_plus(const Forest& f, Decoration root);
Forest b_minus(Tree t);

// Bracket text: "[a[b][c[d]]][e]". With a one-letter alphabet the token may be omitted.
Forest parse_forest(std::string_view text, const Alphabet& alphabet);
Tree parse_tree(std::string_view text, const Alphabet& alphabet);
std::string render(const Forest& f);

// Every distinct token mentioned in bracket text (used to infer a default alphabet).
std::vector<std::string> tokens_in(std::string_view text);

std::vector<Tree> enumerate_trees(std::size_t degree, const Alphabet& alphabet);
std::vector<Forest> enumerate_forests(std::size_t degree, const Alphabet& alphabet);
std::vector<Forest> enumerate_forests_upto(std::size_t max_degree, const Alphabet& alphabet);

// Vertices in preorder; index i of a forest refers to the i-th visited vertex.
std::size_t vertex_count(const Forest& f);

// Rebuilds the forest with the children of vertex `index` replaced.
Forest replace_children(const Forest& f, std::size_t index, const std::vector<Tree>& children);

}  // namespace mkw

template <>
struct std::hash<mkw::Forest> {
  std::size_t operator()(const mkw::Forest& f) const { return f.hash(); }
};
