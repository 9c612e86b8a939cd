#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"
#include "mkw/forest.hpp"
#include "mkw/rational.hpp"

namespace mkw {

// Hash and order for a basis key. Specialized for every basis kind in the library.
template <class Key>
struct BasisTraits;

// Finite formal sum over a basis with exact coefficients. Zero coefficients are
// never stored, so equality is plain map equality.
template <class Key>
class BasicLinComb {
  using Traits = BasisTraits<Key>;

 public:
  using key_type = Key;
  using Map = std::unordered_map<Key, Rational, typename Traits::Hash>;

  BasicLinComb() = default;
  BasicLinComb(const Key& k, const Rational& c = 1) {  // NOLINT: a basis element is a combination
    add(k, c);
  }

  void add(const Key& k, const Rational& c) {
    if (mkw::is_zero(c)) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (mkw::is_zero(it->second)) terms_.erase(it);
    }
  }

  Rational coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }
  const Map& terms() const { return terms_; }

  BasicLinComb& operator+=(const BasicLinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  BasicLinComb& operator-=(const BasicLinComb& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  BasicLinComb& operator*=(const Rational& s) {
    if (mkw::is_zero(s)) {
      terms_.clear();
    } else {
      for (auto& [k, c] : terms_) c *= s;
    }
    return *this;
  }
  // Adds s·o without building a temporary.
  void add_scaled(const BasicLinComb& o, const Rational& s) {
    if (mkw::is_zero(s)) return;
    for (const auto& [k, c] : o.terms_) add(k, c * s);
  }

  friend BasicLinComb operator+(BasicLinComb a, const BasicLinComb& b) { return a += b; }
  friend BasicLinComb operator-(BasicLinComb a, const BasicLinComb& b) { return a -= b; }
  friend BasicLinComb operator*(const Rational& s, BasicLinComb a) { return a *= s; }
  friend BasicLinComb operator*(BasicLinComb a, const Rational& s) { return a *= s; }
  friend BasicLinComb operator-(BasicLinComb a) { return a *= Rational(-1); }
  friend bool operator==(const BasicLinComb& a, const BasicLinComb& b) { return a.terms_ == b.terms_; }

  // Terms in basis order; all printing goes through this so output is deterministic.
  std::vector<std::pair<Key, Rational>> sorted() const {
    std::vector<std::pair<Key, Rational>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return typename Traits::Less{}(a.first, b.first); });
    return out;
  }

  template <class Pred>
  BasicLinComb filtered(Pred keep) const {
    BasicLinComb out;
    for (const auto& [k, c] : terms_)
      if (keep(k)) out.terms_.emplace(k, c);
    return out;
  }

 private:
  Map terms_;
};

using ForestPair = std::pair<Forest, Forest>;
using ForestTuple = std::vector<Forest>;

template <>
struct BasisTraits<Forest> {
  using Hash = ForestHash;
  using Less = ForestLess;
};

template <>
struct BasisTraits<ForestPair> {
  struct Hash {
    std::size_t operator()(const ForestPair& p) const { return hash_combine(p.first.hash(), p.second.hash()); }
  };
  struct Less {
    bool operator()(const ForestPair& a, const ForestPair& b) const {
      if (auto c = compare(a.first, b.first); c != 0) return c < 0;
      return compare(a.second, b.second) < 0;
    }
  };
};

template <>
struct BasisTraits<ForestTuple> {
  struct Hash {
    std::size_t operator()(const ForestTuple& t) const {
      std::size_t h = t.size();
      for (const auto& f : t) h = hash_combine(h, f.hash());
      return h;
    }
  };
  struct Less {
    bool operator()(const ForestTuple& a, const ForestTuple& b) const {
      if (a.size() != b.size()) return a.size() < b.size();
      for (std::size_t i = 0; i < a.size(); ++i)
        if (auto c = compare(a[i], b[i]); c != 0) return c < 0;
      return false;
    }
  };
};

using LinComb = BasicLinComb<Forest>;
using TensorElem = BasicLinComb<ForestPair>;
using MultiTensor = BasicLinComb<ForestTuple>;

inline LinComb unit() { return LinComb(Forest{}); }

LinComb combine(std::span<const Rational> coeffs, std::span<const LinComb> elems);

std::size_t max_degree(const LinComb& x);  // 0 for the zero element
LinComb homogeneous_part(const LinComb& x, std::size_t degree);
LinComb truncate(const LinComb& x, std::size_t max_degree);
Rational counit(const LinComb& x);  // coefficient of the empty forest
bool is_homogeneous(const LinComb& x);

// Lifts a basis-level map to a (bi)linear one.
template <class F>
LinComb linear_map(const LinComb& x, F&& f) {
  LinComb out;
  for (const auto& [w, c] : x) out.add_scaled(f(w), c);
  return out;
}

template <class F>
LinComb bilinear_map(const LinComb& x, const LinComb& y, F&& f) {
  LinComb out;
  for (const auto& [a, ca] : x)
    for (const auto& [b, cb] : y) out.add_scaled(f(a, b), ca * cb);
  return out;
}

template <class F>
TensorElem linear_to_tensor(const LinComb& x, F&& f) {
  TensorElem out;
  for (const auto& [w, c] : x) out.add_scaled(f(w), c);
  return out;
}

LinComb concat(const LinComb& a, const LinComb& b);
LinComb shuffle(const Forest& a, const Forest& b);
LinComb shuffle(const LinComb& a, const LinComb& b);
TensorElem deshuffle(const Forest& w);
TensorElem deshuffle(const LinComb& x);
TensorElem reduced_deshuffle(const Forest& w);  // drops the two terms with an empty leg
TensorElem deconcatenation(const Forest& w);
TensorElem deconcatenation(const LinComb& x);

Rational pairing(const LinComb& x, const LinComb& y);
Rational pairing(const TensorElem& x, const TensorElem& y);

TensorElem tensor(const LinComb& a, const LinComb& b);
MultiTensor as_multi(const LinComb& x);
MultiTensor as_multi(const TensorElem& t);
TensorElem as_pair(const MultiTensor& t);  // requires arity 2
LinComb as_single(const MultiTensor& t);   // requires arity 1
std::size_t arity(const MultiTensor& t);   // 0 for the zero tensor

MultiTensor tensor(const MultiTensor& a, const MultiTensor& b);

// Replaces leg `leg` of every term with the two legs of `split(leg value)`.
MultiTensor split_leg(const MultiTensor& t, std::size_t leg, const std::function<TensorElem(const Forest&)>& split);
// Replaces leg `leg` by a linear image.
MultiTensor map_leg(const MultiTensor& t, std::size_t leg, const std::function<LinComb(const Forest&)>& f);
// Merges legs i < j with a bilinear product; leg j disappears and the product lands at i.
MultiTensor merge_legs(const MultiTensor& t, std::size_t i, std::size_t j,
                       const std::function<LinComb(const Forest&, const Forest&)>& product);

// (f ⊗ g) applied to a pair tensor, both legs mapped linearly.
TensorElem map_pair(const TensorElem& t, const std::function<LinComb(const Forest&)>& left,
                    const std::function<LinComb(const Forest&)>& right);

// Legwise product of two pair tensors: (a⊗b)(c⊗d) = left(a,c) ⊗ right(b,d).
TensorElem legwise_product(const TensorElem& x, const TensorElem& y,
                           const std::function<LinComb(const Forest&, const Forest&)>& left,
                           const std::function<LinComb(const Forest&, const Forest&)>& right);

// Shared term formatter: "c*key" joined by signs, a bare coefficient when the key is "1".
template <class Terms, class Render>
std::string join_terms(const Terms& terms, Render render_key) {
  if (terms.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) s += "-";
    } else {
      s += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string key = render_key(k);
    if (key == "1") {
      s += to_string(mag);
    } else {
      if (mag != 1) s += to_string(mag) + "*";
      s += key;
    }
  }
  return s;
}

// Text: "3/2*[a][b] - [c]" in basis order; "0" for zero.
std::string to_text(const LinComb& x);
std::string to_text(const TensorElem& t);
std::string to_text(const MultiTensor& t);

nlohmann::json forest_to_json(const Forest& f);
Forest forest_from_json(const nlohmann::json& j, const Alphabet& alphabet);
nlohmann::json to_json(const LinComb& x);
LinComb lincomb_from_json(const nlohmann::json& j, const Alphabet& alphabet);
nlohmann::json to_json(const TensorElem& t);
nlohmann::json to_json(const MultiTensor& t);

}  // namespace mkw
