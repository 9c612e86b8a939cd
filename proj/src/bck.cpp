#include "mkw/bck.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mkw {

namespace {

bool tree_less(Tree a, Tree b) { return compare(a, b) < 0; }

Forest sorted_forest(std::vector<Tree> trees) {
  std::sort(trees.begin(), trees.end(), tree_less);
  return Forest(std::move(trees));
}

void collect_vertices(Tree t, std::vector<Tree>& out) {
  out.push_back(t);
  for (const auto& c : t.children()) collect_vertices(c, out);
}

}  // namespace

Tree canonical_tree(Tree t) {
  thread_local std::unordered_map<Tree, Tree, TreeHash> cache;
  if (auto it = cache.find(t); it != cache.end()) return it->second;
  std::vector<Tree> kids;
  for (const auto& c : t.children()) kids.push_back(canonical_tree(c));
  std::sort(kids.begin(), kids.end(), tree_less);
  Tree out(t.root(), kids);
  cache.emplace(t, out);
  return out;
}

NonplanarForest::NonplanarForest(const Forest& any_planar) {
  std::vector<Tree> trees;
  for (const auto& t : any_planar) trees.push_back(canonical_tree(t));
  canonical_ = sorted_forest(std::move(trees));
}

NonplanarForest parse_nonplanar(std::string_view text, const Alphabet& alphabet) {
  return NonplanarForest(parse_forest(text, alphabet));
}

std::vector<NonplanarForest> enumerate_nonplanar(std::size_t degree, const Alphabet& alphabet) {
  std::set<NonplanarForest, BasisTraits<NonplanarForest>::Less> seen;
  for (const auto& f : enumerate_forests(degree, alphabet)) seen.insert(NonplanarForest(f));
  return {seen.begin(), seen.end()};
}

BckLinComb forget_planarity(const LinComb& x) {
  BckLinComb out;
  for (const auto& [w, c] : x) out.add(NonplanarForest(w), c);
  return out;
}

NonplanarForest bck_product(const NonplanarForest& a, const NonplanarForest& b) {
  return NonplanarForest(concat(a.canonical(), b.canonical()));
}

BckLinComb bck_product(const BckLinComb& a, const BckLinComb& b) {
  BckLinComb out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add(bck_product(x, y), cx * cy);
  return out;
}

Rational bck_counit(const BckLinComb& x) { return x.coeff(NonplanarForest{}); }

namespace {

BckTensor tensor_product(const BckTensor& x, const BckTensor& y) {
  BckTensor out;
  for (const auto& [p, cp] : x)
    for (const auto& [q, cq] : y) out.add({bck_product(p.first, q.first), bck_product(p.second, q.second)}, cp * cq);
  return out;
}

BckTensor tree_coproduct(Tree t) {
  thread_local std::unordered_map<Tree, BckTensor, TreeHash> cache;
  if (auto it = cache.find(t); it != cache.end()) return it->second;
  const NonplanarForest whole{Forest(t)};
  BckTensor out(NonplanarPair{whole, NonplanarForest{}});
  for (const auto& [p, c] : bck_coproduct(NonplanarForest(b_minus(t))))
    out.add({p.first, NonplanarForest(Forest(b_plus(p.second.canonical(), t.root())))}, c);
  cache.emplace(t, out);
  return out;
}

}  // namespace

BckTensor bck_coproduct(const NonplanarForest& w) {
  BckTensor out(NonplanarPair{NonplanarForest{}, NonplanarForest{}});
  for (const auto& t : w.canonical()) out = tensor_product(out, tree_coproduct(t));
  return out;
}

BckTensor bck_coproduct(const BckLinComb& x) {
  BckTensor out;
  for (const auto& [w, c] : x) out.add_scaled(bck_coproduct(w), c);
  return out;
}

BckTensor bck_reduced_coproduct(const NonplanarForest& w) {
  if (w.empty()) return {};
  return bck_coproduct(w).filtered([](const NonplanarPair& p) { return !p.first.empty() && !p.second.empty(); });
}

BckTensor bck_reduced_coproduct(const BckLinComb& x) {
  BckTensor out;
  for (const auto& [w, c] : x) out.add_scaled(bck_reduced_coproduct(w), c);
  return out;
}

BckLinComb bck_antipode(const NonplanarForest& w) {
  if (w.empty()) return BckLinComb(w);
  BckLinComb out(w, -1);
  for (const auto& [p, c] : bck_reduced_coproduct(w))
    out.add_scaled(bck_product(bck_antipode(p.first), BckLinComb(p.second)), -c);
  return out;
}

BckLinComb bck_antipode(const BckLinComb& x) {
  BckLinComb out;
  for (const auto& [w, c] : x) out.add_scaled(bck_antipode(w), c);
  return out;
}

BckLinComb bck_natural_growth(const NonplanarForest& a, const NonplanarForest& b) {
  if (b.empty()) throw std::invalid_argument("bck_natural_growth: second argument has a unit component");
  std::vector<Tree> vs;
  for (const auto& t : b.canonical()) collect_vertices(t, vs);
  BckLinComb out;
  for (std::size_t v = 0; v < vs.size(); ++v) {
    std::vector<Tree> kids(vs[v].children().begin(), vs[v].children().end());
    kids.insert(kids.end(), a.canonical().begin(), a.canonical().end());
    out.add(NonplanarForest(replace_children(b.canonical(), v, kids)), 1);
  }
  out *= Rational(1, static_cast<unsigned long>(b.degree()));
  return out;
}

BckLinComb bck_natural_growth(const BckLinComb& a, const BckLinComb& b) {
  BckLinComb out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) out.add_scaled(bck_natural_growth(x, y), cx * cy);
  return out;
}

BckLinComb bck_primitive_projection(const NonplanarForest& w) {
  if (w.empty()) return {};
  BckLinComb out(w);
  for (const auto& [p, c] : bck_reduced_coproduct(w))
    out.add_scaled(bck_natural_growth(BckLinComb(p.first), bck_primitive_projection(p.second)), -c);
  return out;
}

BckLinComb bck_primitive_projection(const BckLinComb& x) {
  BckLinComb out;
  for (const auto& [w, c] : x) out.add_scaled(bck_primitive_projection(w), c);
  return out;
}

std::string to_text(const BckLinComb& x) {
  LinComb planar;
  for (const auto& [w, c] : x) planar.add(w.canonical(), c);
  return to_text(planar);
}

std::string to_text(const BckTensor& t) {
  TensorElem planar;
  for (const auto& [p, c] : t) planar.add({p.first.canonical(), p.second.canonical()}, c);
  return to_text(planar);
}

}  // namespace mkw
