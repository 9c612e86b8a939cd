#include "mkw/mkw_hopf.hpp"

#include "mkw/postlie.hpp"

namespace mkw {

const TensorElem& left_admissible_cuts(Tree t) {
  thread_local std::unordered_map<Tree, TensorElem, TreeHash> cache;
  if (auto it = cache.find(t); it != cache.end()) return it->second;

  const auto kids = t.children();
  const std::size_t k = kids.size();
  TensorElem out;
  // Cut a prefix of length p at this vertex, then descend only into the rest.
  for (std::size_t p = 0; p <= k; ++p) {
    Forest prefix(std::vector<Tree>(kids.begin(), kids.begin() + static_cast<std::ptrdiff_t>(p)));
    TensorElem state(ForestPair{prefix, Forest{}});
    for (std::size_t j = p; j < k; ++j) {
      const TensorElem& below = left_admissible_cuts(kids[j]);
      TensorElem next;
      for (const auto& [s, cs] : state)
        for (const auto& [o, co] : below) {
          Forest trunk_kids = concat(s.second, o.second);
          for (const auto& [w, cw] : shuffle(s.first, o.first)) next.add({w, trunk_kids}, cs * co * cw);
        }
      state = std::move(next);
    }
    for (const auto& [s, c] : state) out.add({s.first, Forest(b_plus(s.second, t.root()))}, c);
  }
  return cache.emplace(t, std::move(out)).first->second;
}

TensorElem mkw_coproduct(Tree t) {
  TensorElem out = left_admissible_cuts(t);
  out.add({Forest(t), Forest{}}, 1);
  return out;
}

TensorElem mkw_coproduct(const Forest& w) {
  if (w.empty()) return TensorElem(ForestPair{Forest{}, Forest{}});
  if (w.size() == 1) return mkw_coproduct(w[0]);
  thread_local std::unordered_map<Forest, TensorElem, ForestHash> cache;
  if (auto it = cache.find(w); it != cache.end()) return it->second;
  // Graft the forest onto a scratch root, cut, then strip the root from every trunk.
  TensorElem out;
  for (const auto& [p, c] : left_admissible_cuts(b_plus(w, reserved_root())))
    out.add({p.first, b_minus(p.second[0])}, c);
  cache.emplace(w, out);
  return out;
}

TensorElem mkw_coproduct(const LinComb& x) {
  return linear_to_tensor(x, [](const Forest& w) { return mkw_coproduct(w); });
}

TensorElem reduced_coproduct(const Forest& w) {
  if (w.empty()) return {};
  return mkw_coproduct(w).filtered([](const ForestPair& p) { return !p.first.empty() && !p.second.empty(); });
}

TensorElem reduced_coproduct(const LinComb& x) {
  return linear_to_tensor(x, [](const Forest& w) { return reduced_coproduct(w); });
}

MultiTensor iterated_reduced_coproduct(const LinComb& x, std::size_t k) {
  MultiTensor t = as_multi(x.filtered([](const Forest& w) { return !w.empty(); }));
  for (std::size_t i = 0; i < k && !t.is_zero(); ++i)
    t = split_leg(t, i, [](const Forest& w) { return reduced_coproduct(w); });
  return t;
}

LinComb mkw_antipode(const Forest& w) {
  if (w.empty()) return unit();
  thread_local std::unordered_map<Forest, LinComb, ForestHash> cache;
  if (auto it = cache.find(w); it != cache.end()) return it->second;
  LinComb out(w, -1);
  for (const auto& [p, c] : reduced_coproduct(w)) out.add_scaled(shuffle(mkw_antipode(p.first), LinComb(p.second)), -c);
  cache.emplace(w, out);
  return out;
}

LinComb mkw_antipode(const LinComb& x) {
  return linear_map(x, [](const Forest& w) { return mkw_antipode(w); });
}

CheckResult gl_mkw_duality_check(std::size_t max_degree, const Alphabet& alphabet, const CoproductFn& coproduct) {
  CoproductFn delta = coproduct ? coproduct : CoproductFn([](const Forest& w) { return mkw_coproduct(w); });
  CheckResult r{"<A*B,x> = <A(x)B, Delta_MKW(x)>", "|x| <= " + std::to_string(max_degree) + ", " + alphabet.describe()};
  for (std::size_t n = 0; n <= max_degree; ++n) {
    std::unordered_map<Forest, TensorElem, ForestHash> from_products;
    for (std::size_t a = 0; a <= n; ++a)
      for (const auto& A : enumerate_forests(a, alphabet))
        for (const auto& B : enumerate_forests(n - a, alphabet))
          for (const auto& [x, c] : gl_product(A, B)) from_products[x].add({A, B}, c);
    for (const auto& x : enumerate_forests(n, alphabet)) {
      const TensorElem d = delta(x);
      const TensorElem& expected = from_products[x];
      TensorElem graded = d.filtered([n](const ForestPair& p) { return p.first.degree() + p.second.degree() == n; });
      r.check(graded == expected && graded.size() == d.size(), [&] {
        return "x = " + (x.empty() ? std::string("1") : x.text()) + ": Delta(x) = " + to_text(d) +
               " but transpose of * gives " + to_text(expected);
      });
    }
  }
  return r;
}

}  // namespace mkw
