#include "mkw/lincomb.hpp"

#include <stdexcept>

namespace mkw {

LinComb combine(std::span<const Rational> coeffs, std::span<const LinComb> elems) {
  if (coeffs.size() != elems.size()) throw std::invalid_argument("combine: length mismatch");
  LinComb out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.add_scaled(elems[i], coeffs[i]);
  return out;
}

std::size_t max_degree(const LinComb& x) {
  std::size_t d = 0;
  for (const auto& [w, c] : x) d = std::max(d, w.degree());
  return d;
}

LinComb homogeneous_part(const LinComb& x, std::size_t degree) {
  return x.filtered([degree](const Forest& w) { return w.degree() == degree; });
}

LinComb truncate(const LinComb& x, std::size_t max_deg) {
  return x.filtered([max_deg](const Forest& w) { return w.degree() <= max_deg; });
}

Rational counit(const LinComb& x) { return x.coeff(Forest{}); }

bool is_homogeneous(const LinComb& x) {
  if (x.is_zero()) return true;
  std::size_t d = x.begin()->first.degree();
  for (const auto& [w, c] : x)
    if (w.degree() != d) return false;
  return true;
}

LinComb concat(const LinComb& a, const LinComb& b) {
  return bilinear_map(a, b, [](const Forest& x, const Forest& y) { return LinComb(concat(x, y)); });
}

namespace {

void shuffle_into(const Forest& a, const Forest& b, std::size_t i, std::size_t j, std::vector<Tree>& word,
                  LinComb& out) {
  if (i == a.size() && j == b.size()) {
    out.add(Forest(word), 1);
    return;
  }
  if (i < a.size()) {
    word.push_back(a[i]);
    shuffle_into(a, b, i + 1, j, word, out);
    word.pop_back();
  }
  if (j < b.size()) {
    word.push_back(b[j]);
    shuffle_into(a, b, i, j + 1, word, out);
    word.pop_back();
  }
}

}  // namespace

LinComb shuffle(const Forest& a, const Forest& b) {
  if (a.empty()) return LinComb(b);
  if (b.empty()) return LinComb(a);
  LinComb out;
  std::vector<Tree> word;
  word.reserve(a.size() + b.size());
  shuffle_into(a, b, 0, 0, word, out);
  return out;
}

LinComb shuffle(const LinComb& a, const LinComb& b) {
  return bilinear_map(a, b, [](const Forest& x, const Forest& y) { return shuffle(x, y); });
}

TensorElem deshuffle(const Forest& w) {
  const std::size_t n = w.size();
  if (n >= 63) throw std::length_error("deshuffle: word too long");
  TensorElem out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Tree> left, right;
    for (std::size_t k = 0; k < n; ++k) ((mask >> k) & 1 ? left : right).push_back(w[k]);
    out.add({Forest(std::move(left)), Forest(std::move(right))}, 1);
  }
  return out;
}

TensorElem deshuffle(const LinComb& x) {
  return linear_to_tensor(x, [](const Forest& w) { return deshuffle(w); });
}

TensorElem reduced_deshuffle(const Forest& w) {
  TensorElem d = deshuffle(w);
  return d.filtered([](const ForestPair& p) { return !p.first.empty() && !p.second.empty(); });
}

TensorElem deconcatenation(const Forest& w) {
  TensorElem out;
  for (std::size_t k = 0; k <= w.size(); ++k) out.add({subword(w, 0, k), subword(w, k, w.size() - k)}, 1);
  return out;
}

TensorElem deconcatenation(const LinComb& x) {
  return linear_to_tensor(x, [](const Forest& w) { return deconcatenation(w); });
}

Rational pairing(const LinComb& x, const LinComb& y) {
  const LinComb& small = x.size() <= y.size() ? x : y;
  const LinComb& large = x.size() <= y.size() ? y : x;
  Rational s = 0;
  for (const auto& [w, c] : small) s += c * large.coeff(w);
  return s;
}

Rational pairing(const TensorElem& x, const TensorElem& y) {
  Rational s = 0;
  for (const auto& [w, c] : x) s += c * y.coeff(w);
  return s;
}

TensorElem tensor(const LinComb& a, const LinComb& b) {
  TensorElem out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add({x, y}, cx * cy);
  return out;
}

MultiTensor as_multi(const LinComb& x) {
  MultiTensor out;
  for (const auto& [w, c] : x) out.add(ForestTuple{w}, c);
  return out;
}

MultiTensor as_multi(const TensorElem& t) {
  MultiTensor out;
  for (const auto& [p, c] : t) out.add(ForestTuple{p.first, p.second}, c);
  return out;
}

std::size_t arity(const MultiTensor& t) { return t.is_zero() ? 0 : t.begin()->first.size(); }

TensorElem as_pair(const MultiTensor& t) {
  TensorElem out;
  for (const auto& [k, c] : t) {
    if (k.size() != 2) throw std::invalid_argument("expected a two-leg tensor");
    out.add({k[0], k[1]}, c);
  }
  return out;
}

LinComb as_single(const MultiTensor& t) {
  LinComb out;
  for (const auto& [k, c] : t) {
    if (k.size() != 1) throw std::invalid_argument("expected a one-leg tensor");
    out.add(k[0], c);
  }
  return out;
}

MultiTensor tensor(const MultiTensor& a, const MultiTensor& b) {
  MultiTensor out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) {
      ForestTuple k(x);
      k.insert(k.end(), y.begin(), y.end());
      out.add(k, cx * cy);
    }
  return out;
}

MultiTensor split_leg(const MultiTensor& t, std::size_t leg,
                      const std::function<TensorElem(const Forest&)>& split) {
  MultiTensor out;
  for (const auto& [k, c] : t) {
    if (leg >= k.size()) throw std::out_of_range("split_leg: no such leg");
    for (const auto& [p, cp] : split(k[leg])) {
      ForestTuple nk;
      nk.reserve(k.size() + 1);
      nk.insert(nk.end(), k.begin(), k.begin() + static_cast<std::ptrdiff_t>(leg));
      nk.push_back(p.first);
      nk.push_back(p.second);
      nk.insert(nk.end(), k.begin() + static_cast<std::ptrdiff_t>(leg) + 1, k.end());
      out.add(nk, c * cp);
    }
  }
  return out;
}

MultiTensor map_leg(const MultiTensor& t, std::size_t leg, const std::function<LinComb(const Forest&)>& f) {
  MultiTensor out;
  for (const auto& [k, c] : t) {
    if (leg >= k.size()) throw std::out_of_range("map_leg: no such leg");
    for (const auto& [w, cw] : f(k[leg])) {
      ForestTuple nk(k);
      nk[leg] = w;
      out.add(nk, c * cw);
    }
  }
  return out;
}

MultiTensor merge_legs(const MultiTensor& t, std::size_t i, std::size_t j,
                       const std::function<LinComb(const Forest&, const Forest&)>& product) {
  if (i >= j) throw std::invalid_argument("merge_legs: need i < j");
  MultiTensor out;
  for (const auto& [k, c] : t) {
    if (j >= k.size()) throw std::out_of_range("merge_legs: no such leg");
    for (const auto& [w, cw] : product(k[i], k[j])) {
      ForestTuple nk(k);
      nk[i] = w;
      nk.erase(nk.begin() + static_cast<std::ptrdiff_t>(j));
      out.add(nk, c * cw);
    }
  }
  return out;
}

TensorElem map_pair(const TensorElem& t, const std::function<LinComb(const Forest&)>& left,
                    const std::function<LinComb(const Forest&)>& right) {
  TensorElem out;
  for (const auto& [p, c] : t) {
    LinComb l = left(p.first);
    if (l.is_zero()) continue;
    LinComb r = right(p.second);
    for (const auto& [a, ca] : l)
      for (const auto& [b, cb] : r) out.add({a, b}, c * ca * cb);
  }
  return out;
}

TensorElem legwise_product(const TensorElem& x, const TensorElem& y,
                           const std::function<LinComb(const Forest&, const Forest&)>& left,
                           const std::function<LinComb(const Forest&, const Forest&)>& right) {
  TensorElem out;
  for (const auto& [p, cp] : x)
    for (const auto& [q, cq] : y) {
      LinComb l = left(p.first, q.first);
      LinComb r = right(p.second, q.second);
      for (const auto& [a, ca] : l)
        for (const auto& [b, cb] : r) out.add({a, b}, cp * cq * ca * cb);
    }
  return out;
}

namespace {

std::string leg_text(const Forest& f) { return f.empty() ? "1" : f.text(); }

}  // namespace

std::string to_text(const LinComb& x) {
  return join_terms(x.sorted(), [](const Forest& f) { return leg_text(f); });
}

std::string to_text(const TensorElem& t) {
  return join_terms(t.sorted(), [](const ForestPair& p) { return leg_text(p.first) + " ⊗ " + leg_text(p.second); });
}

std::string to_text(const MultiTensor& t) {
  return join_terms(t.sorted(), [](const ForestTuple& k) {
    std::string s;
    for (std::size_t i = 0; i < k.size(); ++i) s += (i ? " ⊗ " : "") + leg_text(k[i]);
    return s;
  });
}

namespace {

nlohmann::json tree_to_json(Tree t) {
  nlohmann::json kids = nlohmann::json::array();
  for (const auto& c : t.children()) kids.push_back(tree_to_json(c));
  return {{"d", token_name(t.root())}, {"c", kids}};
}

Tree tree_from_json(const nlohmann::json& j, const Alphabet& alphabet) {
  if (!j.is_object() || !j.contains("d")) throw std::invalid_argument("tree JSON needs a \"d\" field");
  Decoration d = intern_token(j.at("d").get<std::string>());
  if (!alphabet.contains(d)) throw std::invalid_argument("unknown token in JSON: " + j.at("d").get<std::string>());
  std::vector<Tree> kids;
  if (j.contains("c"))
    for (const auto& c : j.at("c")) kids.push_back(tree_from_json(c, alphabet));
  return Tree(d, kids);
}

}  // namespace

nlohmann::json forest_to_json(const Forest& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : f) out.push_back(tree_to_json(t));
  return out;
}

Forest forest_from_json(const nlohmann::json& j, const Alphabet& alphabet) {
  if (!j.is_array()) throw std::invalid_argument("forest JSON must be a list of trees");
  std::vector<Tree> trees;
  for (const auto& t : j) trees.push_back(tree_from_json(t, alphabet));
  return Forest(std::move(trees));
}

nlohmann::json to_json(const LinComb& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : x.sorted()) terms.push_back({{"coeff", to_string(c)}, {"forest", forest_to_json(w)}});
  return {{"terms", terms}};
}

LinComb lincomb_from_json(const nlohmann::json& j, const Alphabet& alphabet) {
  LinComb out;
  for (const auto& t : j.at("terms"))
    out.add(forest_from_json(t.at("forest"), alphabet), parse_rational(t.at("coeff").get<std::string>()));
  return out;
}

nlohmann::json to_json(const TensorElem& t) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [p, c] : t.sorted())
    terms.push_back({{"coeff", to_string(c)}, {"legs", {forest_to_json(p.first), forest_to_json(p.second)}}});
  return {{"terms", terms}};
}

nlohmann::json to_json(const MultiTensor& t) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [k, c] : t.sorted()) {
    nlohmann::json legs = nlohmann::json::array();
    for (const auto& f : k) legs.push_back(forest_to_json(f));
    terms.push_back({{"coeff", to_string(c)}, {"legs", legs}});
  }
  return {{"terms", terms}};
}

}  // namespace mkw
