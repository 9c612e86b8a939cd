#include "mkw/regstruct.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace mkw {

// ---- multi-indices ---------------------------------------------------------

MultiIndex MultiIndex::unit(std::size_t d, std::size_t i) {
  std::vector<unsigned> c(d, 0);
  c.at(i) = 1;
  return MultiIndex(std::move(c));
}

unsigned MultiIndex::norm() const {
  unsigned n = 0;
  for (unsigned x : c_) n += x;
  return n;
}

bool MultiIndex::fits_in(const MultiIndex& bound) const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] > bound.c_[i]) return false;
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  if (o.dimension() != dimension()) throw std::invalid_argument("multi-index dimensions differ");
  std::vector<unsigned> c = c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
  return MultiIndex(std::move(c));
}

std::optional<MultiIndex> MultiIndex::minus(const MultiIndex& o) const {
  if (o.dimension() != dimension()) throw std::invalid_argument("multi-index dimensions differ");
  if (!o.fits_in(*this)) return std::nullopt;
  std::vector<unsigned> c = c_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
  return MultiIndex(std::move(c));
}

std::vector<MultiIndex> MultiIndex::unit_steps() const {
  std::vector<MultiIndex> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (unsigned k = 0; k < c_[i]; ++k) out.push_back(unit(c_.size(), i));
  return out;
}

std::string MultiIndex::text() const {
  std::string s;
  for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + std::to_string(c_[i]);
  return s;
}

Rational binomial(const MultiIndex& n, const MultiIndex& l) {
  Rational b = 1;
  for (std::size_t i = 0; i < n.dimension(); ++i) {
    if (l[i] > n[i]) return 0;
    b *= binomial(n[i], l[i]);
  }
  return b;
}

std::vector<MultiIndex> indices_below(const MultiIndex& bound) {
  std::vector<MultiIndex> out{MultiIndex::zero(bound.dimension())};
  for (std::size_t i = 0; i < bound.dimension(); ++i) {
    std::vector<MultiIndex> next;
    for (const auto& m : out)
      for (unsigned k = 0; k <= bound[i]; ++k) {
        std::vector<unsigned> c = m.components();
        c[i] = k;
        next.emplace_back(std::move(c));
      }
    out = std::move(next);
  }
  return out;
}

std::vector<MultiIndex> indices_of_norm(std::size_t d, unsigned norm) {
  std::vector<unsigned> bound(d, norm);
  std::vector<MultiIndex> out;
  for (auto& m : indices_below(MultiIndex(bound)))
    if (m.norm() == norm) out.push_back(std::move(m));
  return out;
}

namespace {

MultiIndex componentwise_min(const MultiIndex& a, const MultiIndex& b) {
  std::vector<unsigned> c(a.dimension());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::min(a[i], b[i]);
  return MultiIndex(std::move(c));
}

}  // namespace

// ---- trees -----------------------------------------------------------------

RegTree::RegTree(MultiIndex root, std::vector<Branch> branches) {
  auto n = std::make_shared<detail::RegNode>();
  n->degree = root.norm();
  n->vertices = 1;
  n->text = "[o";
  if (!root.is_zero()) n->text += "{" + root.text() + "}";
  for (const auto& [edge, child] : branches) {
    if (edge.dimension() != root.dimension() || child.dimension() != root.dimension())
      throw std::invalid_argument("decorations of mixed dimension");
    n->degree += 1 + edge.norm() + child.degree();
    n->vertices += child.vertex_count();
    n->text += child.text();
    if (!edge.is_zero()) n->text += "{a=(" + edge.text() + ")}";
  }
  n->text += "]";
  n->hash = std::hash<std::string>{}(n->text);
  n->root = std::move(root);
  n->branches = std::move(branches);
  node_ = std::move(n);
}

RegTree RegTree::planted(const MultiIndex& edge, const RegTree& child) {
  return RegTree(MultiIndex::zero(edge.dimension()), {Branch{edge, child}});
}

namespace {

class RegParser {
 public:
  RegParser(std::string_view text, std::size_t d) : s_(text), d_(d) {}

  RegTree parse() {
    skip();
    if (peek() == '1') {
      ++pos_;
      finish();
      return RegTree::unit(d_);
    }
    RegTree t = tree();
    finish();
    return t;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void finish() {
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
  }

  MultiIndex numbers(char close) {
    std::vector<unsigned> c;
    for (;;) {
      skip();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
      unsigned v = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + static_cast<unsigned>(s_[pos_++] - '0');
      c.push_back(v);
      skip();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      if (peek() != close) fail(std::string("expected ',' or '") + close + "'");
      ++pos_;
      break;
    }
    if (c.size() != d_) fail("decoration has " + std::to_string(c.size()) + " components, expected " + std::to_string(d_));
    return MultiIndex(std::move(c));
  }

  RegTree tree() {
    expect('[');
    skip();
    if (peek() != 'o') fail("expected vertex token 'o'");
    ++pos_;
    MultiIndex root = MultiIndex::zero(d_);
    skip();
    if (peek() == '{') {
      ++pos_;
      root = numbers('}');
    }
    std::vector<RegTree::Branch> branches;
    for (;;) {
      skip();
      if (peek() == ']') {
        ++pos_;
        break;
      }
      if (peek() != '[') fail("expected '[' or ']'");
      RegTree child = tree();
      MultiIndex edge = MultiIndex::zero(d_);
      skip();
      if (peek() == '{') {
        ++pos_;
        expect('a');
        expect('=');
        expect('(');
        edge = numbers(')');
        expect('}');
      }
      branches.emplace_back(std::move(edge), std::move(child));
    }
    return RegTree(std::move(root), std::move(branches));
  }

  std::string_view s_;
  std::size_t d_;
  std::size_t pos_ = 0;
};

std::string show(const RegTree& t) { return t.is_unit() ? std::string("1") : t.text(); }

}  // namespace

RegTree parse_reg_tree(std::string_view text, std::size_t dimension) {
  if (dimension == 0) throw std::invalid_argument("dimension must be at least 1");
  return RegParser(text, dimension).parse();
}

std::string to_text(const RegLinComb& x) { return join_terms(x.sorted(), show); }

std::string to_text(const RegTensor& t) {
  return join_terms(t.sorted(), [](const RegPair& p) { return show(p.first) + " ⊗ " + show(p.second); });
}

nlohmann::json to_json(const RegLinComb& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [t, c] : x.sorted()) terms.push_back({{"coeff", to_string(c)}, {"tree", show(t)}});
  return {{"terms", terms}};
}

// ---- enumeration -----------------------------------------------------------

namespace {

struct Enumerator {
  std::size_t d;
  unsigned K;
  std::map<std::size_t, std::vector<RegTree>> trees_memo;
  std::map<std::size_t, std::vector<std::vector<RegTree::Branch>>> seq_memo;

  const std::vector<RegTree>& trees(std::size_t n) {
    if (auto it = trees_memo.find(n); it != trees_memo.end()) return it->second;
    std::vector<RegTree> out;
    for (unsigned r = 0; r <= std::min<std::size_t>(K, n); ++r)
      for (const auto& m : indices_of_norm(d, r))
        for (const auto& seq : sequences(n - r)) out.emplace_back(m, seq);
    return trees_memo[n] = std::move(out);
  }

  const std::vector<std::vector<RegTree::Branch>>& sequences(std::size_t r) {
    if (auto it = seq_memo.find(r); it != seq_memo.end()) return it->second;
    std::vector<std::vector<RegTree::Branch>> out;
    if (r == 0) out.emplace_back();
    for (std::size_t c = 1; c <= r; ++c)
      for (unsigned e = 0; e <= std::min<std::size_t>(K, c - 1); ++e)
        for (const auto& edge : indices_of_norm(d, e))
          for (const auto& child : std::vector<RegTree>(trees(c - 1 - e)))
            for (const auto& rest : std::vector<std::vector<RegTree::Branch>>(sequences(r - c))) {
              std::vector<RegTree::Branch> seq{{edge, child}};
              seq.insert(seq.end(), rest.begin(), rest.end());
              out.push_back(std::move(seq));
            }
    return seq_memo[r] = std::move(out);
  }
};

}  // namespace

std::vector<RegTree> enumerate_reg_trees(std::size_t degree, std::size_t dimension, unsigned max_norm) {
  Enumerator e{dimension, max_norm, {}, {}};
  auto out = e.trees(degree);
  std::sort(out.begin(), out.end(), BasisTraits<RegTree>::Less{});
  return out;
}

std::vector<RegTree> enumerate_generators(std::size_t degree, std::size_t dimension, unsigned max_norm) {
  std::vector<RegTree> out;
  if (degree == 1 && max_norm >= 1)
    for (std::size_t i = 0; i < dimension; ++i) out.push_back(RegTree::monomial(MultiIndex::unit(dimension, i)));
  for (const auto& t : enumerate_reg_trees(degree, dimension, max_norm))
    if (t.is_planted()) out.push_back(t);
  return out;
}

std::vector<RegTree> RegBasis::trees() const {
  std::vector<RegTree> out;
  for (std::size_t n = 0; n <= max_degree; ++n)
    for (auto& t : enumerate_reg_trees(n, dimension, max_norm)) out.push_back(std::move(t));
  return out;
}

// ---- raising and lowering --------------------------------------------------

namespace {

// Rebuilds t with the subtree at preorder vertex v replaced by f(subtree).
template <class F>
RegTree at_vertex(const RegTree& t, std::size_t v, F&& f) {
  if (v == 0) return f(t);
  std::size_t offset = 1;
  auto branches = t.branches();
  for (auto& [edge, child] : branches) {
    if (v < offset + child.vertex_count()) {
      child = at_vertex(child, v - offset, f);
      return RegTree(t.root(), std::move(branches));
    }
    offset += child.vertex_count();
  }
  throw std::out_of_range("vertex index out of range");
}

void vertex_decorations(const RegTree& t, std::vector<MultiIndex>& out) {
  out.push_back(t.root());
  for (const auto& [edge, child] : t.branches()) vertex_decorations(child, out);
}

}  // namespace

RegTree raise_at(const RegTree& t, std::size_t vertex, const MultiIndex& l) {
  return at_vertex(t, vertex, [&](const RegTree& s) { return RegTree(s.root() + l, s.branches()); });
}

RegLinComb raise(const RegTree& t, const MultiIndex& l) {
  RegLinComb current(t);
  for (const auto& step : l.unit_steps()) {
    RegLinComb next;
    for (const auto& [s, c] : current)
      for (std::size_t v = 0; v < s.vertex_count(); ++v) next.add(raise_at(s, v, step), c);
    current = std::move(next);
  }
  return current;
}

RegLinComb raise(const RegLinComb& x, const MultiIndex& l) {
  RegLinComb out;
  for (const auto& [t, c] : x) out.add_scaled(raise(t, l), c);
  return out;
}

RegLinComb lower_root_adjacent(const RegTree& y, const MultiIndex& i) {
  RegLinComb out;
  for (std::size_t j = 0; j < y.branches().size(); ++j) {
    auto lowered = y.branches()[j].first.minus(i);
    if (!lowered) continue;
    auto branches = y.branches();
    branches[j].first = *lowered;
    out.add(RegTree(y.root(), std::move(branches)), 1);
  }
  return out;
}

RegLinComb lower_root_adjacent(const RegLinComb& y, const MultiIndex& i) {
  RegLinComb out;
  for (const auto& [t, c] : y) out.add_scaled(lower_root_adjacent(t, i), c);
  return out;
}

// ---- deformed grafting -----------------------------------------------------

namespace {

// g ⊲̂̂ I_edge(child) for a generator g; every term is planted on the same edge,
// so only the new subtrees are returned.
RegLinComb graft_generator_below(const RegTree& g, const RegTree& child) {
  if (g.is_monomial()) return raise(child, g.root());
  const auto& [a, grafted] = g.branches().front();
  std::vector<MultiIndex> decorations;
  vertex_decorations(child, decorations);
  RegLinComb out;
  for (std::size_t v = 0; v < decorations.size(); ++v) {
    const MultiIndex& n_v = decorations[v];
    for (const auto& l : indices_below(componentwise_min(a, n_v))) {
      const MultiIndex edge = *a.minus(l);
      const MultiIndex lowered = *n_v.minus(l);
      RegTree t = at_vertex(child, v, [&](const RegTree& s) {
        std::vector<RegTree::Branch> branches{{edge, grafted}};
        branches.insert(branches.end(), s.branches().begin(), s.branches().end());
        return RegTree(lowered, std::move(branches));
      });
      out.add(t, binomial(n_v, l));
    }
  }
  return out;
}

// g ⊲̂̂ T for a generator g: a derivation over the planted factors of T; units are killed.
RegLinComb derive(const RegTree& g, const RegTree& t) {
  RegLinComb out;
  for (std::size_t j = 0; j < t.branches().size(); ++j)
    for (const auto& [child, c] : graft_generator_below(g, t.branches()[j].second)) {
      auto branches = t.branches();
      branches[j].second = child;
      out.add(RegTree(t.root(), std::move(branches)), c);
    }
  return out;
}

RegLinComb derive(const RegTree& g, const RegLinComb& x) {
  RegLinComb out;
  for (const auto& [t, c] : x) out.add_scaled(derive(g, t), c);
  return out;
}

void require_generator(const RegTree& t) {
  if (!t.is_generator()) throw std::invalid_argument("not a generator (planted tree or X^i): " + show(t));
}

bool in_lie_span(const RegTree& t) {
  return (t.root().is_zero() && !t.branches().empty()) || (t.is_monomial() && t.root().is_unit());
}

// Splits off the leftmost generator: X^{e} first when the root is decorated.
std::pair<RegTree, RegTree> peel(const RegTree& a) {
  if (!a.root().is_zero()) {
    const MultiIndex e = a.root().unit_steps().front();
    return {RegTree::monomial(e), RegTree(*a.root().minus(e), a.branches())};
  }
  std::vector<RegTree::Branch> rest(a.branches().begin() + 1, a.branches().end());
  return {RegTree::planted(a.branches().front().first, a.branches().front().second),
          RegTree(a.root(), std::move(rest))};
}

}  // namespace

RegLinComb deformed_graft(const RegLinComb& x, const RegLinComb& y) {
  RegLinComb out;
  for (const auto& [g, cg] : x) {
    require_generator(g);
    for (const auto& [t, ct] : y) {
      require_generator(t);
      out.add_scaled(derive(g, t), cg * ct);
    }
  }
  return out;
}

RegLinComb reg_assoc_product(const RegTree& a, const RegTree& b) {
  RegLinComb current(a);
  for (const auto& e : b.root().unit_steps()) {
    RegLinComb next;
    for (const auto& [s, c] : current) {
      next.add(RegTree(s.root() + e, s.branches()), c);
      next.add_scaled(lower_root_adjacent(s, e), c);
    }
    current = std::move(next);
  }
  RegLinComb out;
  for (const auto& [s, c] : current) {
    auto branches = s.branches();
    branches.insert(branches.end(), b.branches().begin(), b.branches().end());
    out.add(RegTree(s.root(), std::move(branches)), c);
  }
  return out;
}

RegLinComb reg_assoc_product(const RegLinComb& a, const RegLinComb& b) {
  RegLinComb out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add_scaled(reg_assoc_product(x, y), cx * cy);
  return out;
}

RegLinComb bracket0(const RegLinComb& x, const RegLinComb& y) {
  RegLinComb out;
  for (const auto& [s, cs] : x)
    for (const auto& [t, ct] : y) {
      if (!in_lie_span(s) || !in_lie_span(t))
        throw std::invalid_argument("bracket0: argument outside the Lie span: " + show(in_lie_span(s) ? t : s));
      const Rational c = cs * ct;
      if (s.is_monomial() && t.is_monomial()) continue;
      if (t.is_monomial()) {
        out.add_scaled(lower_root_adjacent(s, t.root()), c);
      } else if (s.is_monomial()) {
        out.add_scaled(lower_root_adjacent(t, s.root()), -c);
      } else {
        out.add_scaled(reg_assoc_product(s, t), c);
        out.add_scaled(reg_assoc_product(t, s), -c);
      }
    }
  return out;
}

RegTensor reg_deshuffle(const RegTree& t) {
  const auto& branches = t.branches();
  const std::size_t k = branches.size();
  RegTensor out;
  for (const auto& n : indices_below(t.root())) {
    const Rational weight = binomial(t.root(), n);
    const MultiIndex rest = *t.root().minus(n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      std::vector<RegTree::Branch> left, right;
      for (std::size_t j = 0; j < k; ++j) (mask >> j & 1 ? left : right).push_back(branches[j]);
      out.add({RegTree(n, std::move(left)), RegTree(rest, std::move(right))}, weight);
    }
  }
  return out;
}

RegLinComb reg_graft(const RegTree& a, const RegTree& b) {
  if (a.is_unit()) return RegLinComb(b);
  thread_local std::unordered_map<RegPair, RegLinComb, BasisTraits<RegPair>::Hash> cache;
  const RegPair key{a, b};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  // (g ⊙ A') ⊲ B = g ⊲ (A' ⊲ B) − (g ⊲ A') ⊲ B
  const auto [g, rest] = peel(a);
  RegLinComb out = derive(g, reg_graft(rest, b));
  for (const auto& [t, c] : derive(g, rest)) out.add_scaled(reg_graft(t, b), -c);
  cache.emplace(key, out);
  return out;
}

RegLinComb reg_graft(const RegLinComb& a, const RegLinComb& b) {
  RegLinComb out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add_scaled(reg_graft(x, y), cx * cy);
  return out;
}

RegLinComb reg_gl_product(const RegTree& a, const RegTree& b) {
  thread_local std::unordered_map<RegPair, RegLinComb, BasisTraits<RegPair>::Hash> cache;
  const RegPair key{a, b};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  RegLinComb out;
  for (const auto& [p, c] : reg_deshuffle(a))
    out.add_scaled(reg_assoc_product(RegLinComb(p.first), reg_graft(p.second, b)), c);
  cache.emplace(key, out);
  return out;
}

RegLinComb reg_gl_product(const RegLinComb& a, const RegLinComb& b) {
  RegLinComb out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add_scaled(reg_gl_product(x, y), cx * cy);
  return out;
}

// ---- deformed MKW coproduct ------------------------------------------------

DeformedCoproduct::DeformedCoproduct(RegBasis basis) : basis_(basis) {
  const auto trees = basis_.trees();
  for (const auto& A : trees)
    for (const auto& B : trees) {
      if (A.degree() + B.degree() > basis_.max_degree) continue;
      for (const auto& [x, c] : reg_gl_product(A, B)) table_[x].add({A, B}, c);
    }
}

RegTensor DeformedCoproduct::operator()(const RegTree& x) const {
  if (x.degree() > basis_.max_degree)
    throw std::invalid_argument("deformed coproduct: degree " + std::to_string(x.degree()) + " exceeds " +
                                std::to_string(basis_.max_degree));
  auto it = table_.find(x);
  return it == table_.end() ? RegTensor{} : it->second;
}

RegTensor DeformedCoproduct::operator()(const RegLinComb& x) const {
  RegTensor out;
  for (const auto& [t, c] : x) out.add_scaled((*this)(t), c);
  return out;
}

// ---- φ ---------------------------------------------------------------------

namespace {

RegLinComb phi_tree(const RegTree& x) {
  if (x.is_unit() || x.is_generator()) return RegLinComb(x);
  thread_local std::unordered_map<RegTree, RegLinComb, BasisTraits<RegTree>::Hash> cache;
  if (auto it = cache.find(x); it != cache.end()) return it->second;
  // x = g ⊙ x' exactly, and g ∗ x' = g ⊙ x' + g ⊲ x'.
  const auto [g, rest] = peel(x);
  RegLinComb out;
  for (const auto& [t, c] : phi_tree(rest)) out.add_scaled(reg_assoc_product(g, t), c);
  for (const auto& [t, c] : derive(g, rest)) out.add_scaled(phi_tree(t), -c);
  cache.emplace(x, out);
  return out;
}

RegLinComb phi_inverse_tree(const RegTree& x) {
  if (x.is_unit() || x.is_generator()) return RegLinComb(x);
  thread_local std::unordered_map<RegTree, RegLinComb, BasisTraits<RegTree>::Hash> cache;
  if (auto it = cache.find(x); it != cache.end()) return it->second;
  RegLinComb lower = phi_tree(x);
  if (lower.coeff(x) != 1) throw std::logic_error("phi_reg: not unitriangular at " + x.text());
  lower.add(x, -1);
  RegLinComb out(x);
  for (const auto& [t, c] : lower) {
    if (t.letters() >= x.letters()) throw std::logic_error("phi_reg: not unitriangular at " + x.text());
    out.add_scaled(phi_inverse_tree(t), -c);
  }
  cache.emplace(x, out);
  return out;
}

void require_degree(const RegTree& x, std::size_t max_degree) {
  if (x.degree() > max_degree)
    throw std::invalid_argument("phi_reg: degree " + std::to_string(x.degree()) + " exceeds " + std::to_string(max_degree));
}

}  // namespace

RegLinComb phi_reg(const RegTree& x, std::size_t max_degree) {
  require_degree(x, max_degree);
  return phi_tree(x);
}

RegLinComb phi_reg(const RegLinComb& x, std::size_t max_degree) {
  RegLinComb out;
  for (const auto& [t, c] : x) out.add_scaled(phi_reg(t, max_degree), c);
  return out;
}

RegLinComb phi_reg_inverse(const RegLinComb& x, std::size_t max_degree) {
  RegLinComb out;
  for (const auto& [t, c] : x) {
    require_degree(t, max_degree);
    out.add_scaled(phi_inverse_tree(t), c);
  }
  return out;
}

bool phi_reg_unitriangular(const RegBasis& basis) {
  for (const auto& x : basis.trees()) {
    const RegLinComb image = phi_tree(x);
    if (image.coeff(x) != 1) return false;
    for (const auto& [t, c] : image)
      if (!(t == x) && t.letters() >= x.letters()) return false;
  }
  return true;
}

}  // namespace mkw
