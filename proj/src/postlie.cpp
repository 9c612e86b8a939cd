#include "mkw/postlie.hpp"

#include <stdexcept>

namespace mkw {

namespace {

using PairCache = std::unordered_map<ForestPair, LinComb, BasisTraits<ForestPair>::Hash>;
using SingleCache = std::unordered_map<Forest, LinComb, ForestHash>;

Tree regraft(Tree t, std::size_t& counter, const std::vector<std::vector<Tree>>& incoming) {
  const std::size_t here = counter++;
  std::vector<Tree> kids = incoming[here];
  bool touched = !kids.empty();
  for (const auto& c : t.children()) {
    Tree nc = regraft(c, counter, incoming);
    touched = touched || !(nc == c);
    kids.push_back(nc);
  }
  return touched ? Tree(t.root(), kids) : t;
}

LinComb graft_direct(const Forest& a, const Forest& b) {
  if (a.empty()) return LinComb(b);
  if (b.empty()) return {};  // A ⊲ 1 = ε(A) 1
  const std::size_t roots = a.size();
  const std::size_t vertices = b.degree();
  std::vector<std::size_t> target(roots, 0);
  LinComb out;
  for (;;) {
    std::vector<std::vector<Tree>> incoming(vertices);
    for (std::size_t i = 0; i < roots; ++i) incoming[target[i]].push_back(a[i]);
    std::size_t counter = 0;
    std::vector<Tree> trees;
    trees.reserve(b.size());
    for (const auto& t : b) trees.push_back(regraft(t, counter, incoming));
    out.add(Forest(std::move(trees)), 1);

    std::size_t k = 0;
    while (k < roots && ++target[k] == vertices) target[k++] = 0;
    if (k == roots) break;
  }
  return out;
}

}  // namespace

LinComb left_graft(const Forest& a, const Forest& b) {
  thread_local PairCache cache;
  ForestPair key{a, b};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  LinComb r = graft_direct(a, b);
  cache.emplace(std::move(key), r);
  return r;
}

LinComb left_graft(const LinComb& a, const LinComb& b, std::size_t max_degree) {
  LinComb out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b)
      if (max_degree == kUntruncated || x.degree() + y.degree() <= max_degree)
        out.add_scaled(left_graft(x, y), cx * cy);
  return out;
}

LinComb gl_product(const Forest& a, const Forest& b) {
  if (a.empty()) return LinComb(b);
  if (b.empty()) return LinComb(a);
  thread_local PairCache cache;
  ForestPair key{a, b};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  LinComb out;
  for (const auto& [p, c] : deshuffle(a)) {
    for (const auto& [g, cg] : left_graft(p.second, b)) out.add(concat(p.first, g), c * cg);
  }
  cache.emplace(std::move(key), out);
  return out;
}

LinComb gl_product(const LinComb& a, const LinComb& b, std::size_t max_degree) {
  LinComb out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b)
      if (max_degree == kUntruncated || x.degree() + y.degree() <= max_degree)
        out.add_scaled(gl_product(x, y), cx * cy);
  return out;
}

LinComb concat_antipode(const Forest& w) {
  std::vector<Tree> rev(w.trees().rbegin(), w.trees().rend());
  return LinComb(Forest(std::move(rev)), w.size() % 2 ? -1 : 1);
}

LinComb concat_antipode(const LinComb& x) {
  return linear_map(x, [](const Forest& w) { return concat_antipode(w); });
}

LinComb gl_antipode(const Forest& w) {
  if (w.empty()) return unit();
  thread_local SingleCache cache;
  if (auto it = cache.find(w); it != cache.end()) return it->second;
  LinComb out = concat_antipode(w);
  for (const auto& [p, c] : reduced_deshuffle(w))
    out.add_scaled(left_graft(gl_antipode(p.first), concat_antipode(p.second)), c);
  cache.emplace(w, out);
  return out;
}

LinComb gl_antipode(const LinComb& x) {
  return linear_map(x, [](const Forest& w) { return gl_antipode(w); });
}

LinComb gl_inverse_product(const LinComb& a, const LinComb& b) {
  LinComb out;
  for (const auto& [w, c] : a)
    for (const auto& [p, cp] : deshuffle(w))
      out.add_scaled(gl_product(LinComb(p.first), left_graft(gl_antipode(p.second), b)), c * cp);
  return out;
}

LinComb jacobi_bracket(const LinComb& x, const LinComb& y) {
  return left_graft(x, y) - left_graft(y, x) + concat(x, y) - concat(y, x);
}

LinComb gl_exp(const LinComb& a, std::size_t max_degree) {
  if (!is_zero(counit(a))) throw std::invalid_argument("gl_exp: argument has a unit component");
  LinComb total = unit();
  LinComb power = unit();
  for (unsigned k = 1; k <= max_degree; ++k) {
    power = gl_product(power, a, max_degree);
    if (power.is_zero()) break;
    total.add_scaled(power, Rational(1) / factorial(k));
  }
  return total;
}

bool is_group_like(const LinComb& a, std::size_t max_degree) {
  TensorElem lhs = deshuffle(a).filtered(
      [max_degree](const ForestPair& p) { return p.first.degree() + p.second.degree() <= max_degree; });
  TensorElem rhs;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : a)
      if (x.degree() + y.degree() <= max_degree) rhs.add({x, y}, cx * cy);
  return lhs == rhs;
}

}  // namespace mkw
