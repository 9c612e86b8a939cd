#include "mkw/expression.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

#include "mkw/growth.hpp"
#include "mkw/postlie.hpp"

namespace mkw {

namespace {

struct OpToken {
  std::string_view spelling;
  std::string_view name;
};

// Longest spellings first so "**" wins over "*" and "(x)" over "(".
constexpr OpToken kPlanarOps[] = {{"⧢", "sh"}, {"sh", "sh"},     {"⊲", "graft"}, {"|>", "graft"},
                                  {"∗", "gl"}, {"**", "gl"},     {"·", "concat"}, {".", "concat"},
                                  {"⊤", "grow"}, {"^", "grow"}};
constexpr OpToken kBckOps[] = {{"·", "concat"}, {".", "concat"}};
constexpr OpToken kRegOps[] = {{"⊙", "odot"}, {"@", "odot"}, {"∗", "gl"}, {"**", "gl"}, {"⊲", "graft"}, {"|>", "graft"}};

template <class Algebra>
class ExprParser {
  using V = typename Algebra::Value;

 public:
  ExprParser(std::string_view text, Algebra algebra) : s_(text), alg_(std::move(algebra)) {}

  V parse() {
    V v = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(s_.substr(pos_, 1)) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool at(std::string_view token) {
    skip();
    return s_.substr(pos_, token.size()) == token;
  }

  bool eat(std::string_view token) {
    if (!at(token)) return false;
    pos_ += token.size();
    return true;
  }

  V sum() {
    V v = term();
    for (;;) {
      if (eat("+")) {
        v = alg_.add(v, term(), 1);
      } else if (at("-") && !at("->")) {
        ++pos_;
        v = alg_.add(v, term(), -1);
      } else {
        return v;
      }
    }
  }

  V term() {
    Rational sign = 1;
    if (eat("-")) sign = -1;
    skip();
    const std::size_t mark = pos_;
    if (auto c = number()) {
      if (at("*") && !at("**")) {
        ++pos_;
        return alg_.scale(tensor(), sign * *c);
      }
      pos_ = mark;
    }
    return alg_.scale(tensor(), sign);
  }

  V tensor() {
    V v = product();
    while (eat("⊗") || eat("(x)")) v = checked(pos_, [&] { return alg_.tensor(v, product()); });
    return v;
  }

  V product() {
    V v = atom();
    for (;;) {
      const OpToken* op = nullptr;
      skip();
      for (const auto& candidate : Algebra::ops())
        if (s_.substr(pos_, candidate.spelling.size()) == candidate.spelling) {
          op = &candidate;
          break;
        }
      if (!op) return v;
      const std::size_t where = pos_;
      pos_ += op->spelling.size();
      V rhs = atom();
      v = checked(where, [&] { return alg_.apply(op->name, v, rhs); });
    }
  }

  V atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    if (s_[pos_] == '(') {
      ++pos_;
      V v = sum();
      if (!eat(")")) fail("expected ')'");
      return v;
    }
    if (s_[pos_] == '[') return literal();
    if (auto c = number()) return alg_.scale(alg_.unit(), *c);
    fail("expected a forest, a number or '('");
  }

  V literal() {
    const std::size_t start = pos_;
    std::size_t end = pos_;
    do {
      end = matching(end);
      pos_ = end;
      skip();
    } while (Algebra::adjacent_trees && pos_ < s_.size() && s_[pos_] == '[' && (end = pos_, true));
    pos_ = end;
    try {
      return alg_.literal(s_.substr(start, end - start));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), start + e.position());
    }
  }

  // Index one past the ']' closing the '[' at `open`.
  std::size_t matching(std::size_t open) const {
    int depth = 0;
    for (std::size_t i = open; i < s_.size(); ++i) {
      if (s_[i] == '[') ++depth;
      if (s_[i] == ']' && --depth == 0) return i + 1;
    }
    throw ParseError("unbalanced brackets: '[' never closed", open);
  }

  std::optional<Rational> number() {
    skip();
    std::size_t end = pos_;
    while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
    if (end == pos_) return std::nullopt;
    if (end + 1 < s_.size() && s_[end] == '/' && std::isdigit(static_cast<unsigned char>(s_[end + 1]))) {
      ++end;
      while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
    }
    try {
      Rational q = parse_rational(s_.substr(pos_, end - pos_));
      pos_ = end;
      return q;
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }

  template <class F>
  V checked(std::size_t where, F&& f) {
    try {
      return f();
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), where);
    }
  }

  std::string_view s_;
  Algebra alg_;
  std::size_t pos_ = 0;
};

// ---- planar forests ---------------------------------------------------------

struct PlanarAlgebra {
  using Value = MultiTensor;
  static constexpr bool adjacent_trees = true;
  static std::span<const OpToken> ops() { return kPlanarOps; }

  const Alphabet& alphabet;

  Value literal(std::string_view text) const { return as_multi(LinComb(parse_forest(text, alphabet))); }
  Value unit() const { return as_multi(mkw::unit()); }
  Value scale(Value v, const Rational& c) const { return v *= c; }

  Value add(Value a, const Value& b, const Rational& s) const {
    if (!a.is_zero() && !b.is_zero() && arity(a) != arity(b))
      throw std::invalid_argument("cannot add tensors of different arity");
    a.add_scaled(b, s);
    return a;
  }

  Value tensor(const Value& a, const Value& b) const { return mkw::tensor(a, b); }

  Value apply(std::string_view op, const Value& a, const Value& b) const {
    if ((!a.is_zero() && arity(a) != 1) || (!b.is_zero() && arity(b) != 1))
      throw std::invalid_argument("products apply to plain combinations, not tensors");
    const LinComb x = a.is_zero() ? LinComb{} : as_single(a);
    const LinComb y = b.is_zero() ? LinComb{} : as_single(b);
    if (op == "sh") return as_multi(shuffle(x, y));
    if (op == "graft") return as_multi(left_graft(x, y));
    if (op == "gl") return as_multi(gl_product(x, y));
    if (op == "concat") return as_multi(concat(x, y));
    if (counit(y) != 0) throw std::invalid_argument("natural growth needs a right factor without unit term");
    return as_multi(natural_growth(x, y));
  }
};

// ---- arity-1 or arity-2 values over another basis ---------------------------

template <class Key>
struct Graded {
  using Lin = BasicLinComb<Key>;
  using Ten = BasicLinComb<std::pair<Key, Key>>;
  int arity = 0;  // 0 marks the zero value
  Lin one;
  Ten two;
};

template <class Key>
Graded<Key> add_graded(Graded<Key> a, const Graded<Key>& b, const Rational& s) {
  if (a.arity && b.arity && a.arity != b.arity) throw std::invalid_argument("cannot add tensors of different arity");
  a.one.add_scaled(b.one, s);
  a.two.add_scaled(b.two, s);
  a.arity = a.one.is_zero() && a.two.is_zero() ? 0 : std::max(a.arity, b.arity);
  return a;
}

template <class Key>
Graded<Key> scale_graded(Graded<Key> v, const Rational& c) {
  v.one *= c;
  v.two *= c;
  if (v.one.is_zero() && v.two.is_zero()) v.arity = 0;
  return v;
}

template <class Key>
Graded<Key> tensor_graded(const Graded<Key>& a, const Graded<Key>& b) {
  if (a.arity > 1 || b.arity > 1) throw std::invalid_argument("only two tensor legs are supported here");
  Graded<Key> out;
  for (const auto& [x, cx] : a.one)
    for (const auto& [y, cy] : b.one) out.two.add({x, y}, cx * cy);
  out.arity = out.two.is_zero() ? 0 : 2;
  return out;
}

template <class Key>
Graded<Key> single(BasicLinComb<Key> x) {
  Graded<Key> g;
  g.arity = x.is_zero() ? 0 : 1;
  g.one = std::move(x);
  return g;
}

template <class Key>
const BasicLinComb<Key>& require_single(const Graded<Key>& v) {
  if (v.arity == 2) throw std::invalid_argument("products apply to plain combinations, not tensors");
  return v.one;
}

struct BckAlgebra {
  using Value = Graded<NonplanarForest>;
  static constexpr bool adjacent_trees = true;
  static std::span<const OpToken> ops() { return kBckOps; }

  const Alphabet& alphabet;

  Value literal(std::string_view text) const { return single(BckLinComb(parse_nonplanar(text, alphabet))); }
  Value unit() const { return single(BckLinComb(NonplanarForest{})); }
  Value scale(Value v, const Rational& c) const { return scale_graded(std::move(v), c); }
  Value add(Value a, const Value& b, const Rational& s) const { return add_graded(std::move(a), b, s); }
  Value tensor(const Value& a, const Value& b) const { return tensor_graded(a, b); }
  Value apply(std::string_view, const Value& a, const Value& b) const {
    return single(bck_product(require_single(a), require_single(b)));
  }
};

struct RegAlgebra {
  using Value = Graded<RegTree>;
  static constexpr bool adjacent_trees = false;
  static std::span<const OpToken> ops() { return kRegOps; }

  std::size_t dimension;

  Value literal(std::string_view text) const { return single(RegLinComb(parse_reg_tree(text, dimension))); }
  Value unit() const { return single(RegLinComb(RegTree::unit(dimension))); }
  Value scale(Value v, const Rational& c) const { return scale_graded(std::move(v), c); }
  Value add(Value a, const Value& b, const Rational& s) const { return add_graded(std::move(a), b, s); }
  Value tensor(const Value& a, const Value& b) const { return tensor_graded(a, b); }
  Value apply(std::string_view op, const Value& a, const Value& b) const {
    const auto& x = require_single(a);
    const auto& y = require_single(b);
    if (op == "odot") return single(reg_assoc_product(x, y));
    if (op == "gl") return single(reg_gl_product(x, y));
    return single(reg_graft(x, y));
  }
};

}  // namespace

MultiTensor parse_expression(std::string_view text, const Alphabet& alphabet) {
  return ExprParser<PlanarAlgebra>(text, PlanarAlgebra{alphabet}).parse();
}

LinComb parse_lincomb(std::string_view text, const Alphabet& alphabet) {
  const MultiTensor t = parse_expression(text, alphabet);
  if (t.is_zero()) return {};
  if (arity(t) != 1) throw ParseError("expected a combination of forests, got a tensor", 0);
  return as_single(t);
}

TensorElem parse_tensor(std::string_view text, const Alphabet& alphabet) {
  const MultiTensor t = parse_expression(text, alphabet);
  if (t.is_zero()) return {};
  if (arity(t) != 2) throw ParseError("expected a two-leg tensor", 0);
  return as_pair(t);
}

BckLinComb parse_bck_lincomb(std::string_view text, const Alphabet& alphabet) {
  auto v = ExprParser<BckAlgebra>(text, BckAlgebra{alphabet}).parse();
  if (v.arity == 2) throw ParseError("expected a combination of forests, got a tensor", 0);
  return v.one;
}

BckTensor parse_bck_tensor(std::string_view text, const Alphabet& alphabet) {
  auto v = ExprParser<BckAlgebra>(text, BckAlgebra{alphabet}).parse();
  if (v.arity == 1) throw ParseError("expected a two-leg tensor", 0);
  return v.two;
}

RegLinComb parse_reg_lincomb(std::string_view text, std::size_t dimension) {
  auto v = ExprParser<RegAlgebra>(text, RegAlgebra{dimension}).parse();
  if (v.arity == 2) throw ParseError("expected a combination of trees, got a tensor", 0);
  return v.one;
}

RegTensor parse_reg_tensor(std::string_view text, std::size_t dimension) {
  auto v = ExprParser<RegAlgebra>(text, RegAlgebra{dimension}).parse();
  if (v.arity == 1) throw ParseError("expected a two-leg tensor", 0);
  return v.two;
}

Alphabet infer_alphabet(const std::vector<std::string>& texts) {
  std::set<std::string> tokens;
  for (const auto& t : texts)
    for (auto& token : tokens_in(t)) tokens.insert(std::move(token));
  if (tokens.empty()) return Alphabet::singleton();
  return Alphabet(std::vector<std::string>(tokens.begin(), tokens.end()));
}

}  // namespace mkw
