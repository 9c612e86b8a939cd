#pragma once

// Brute-force reference implementations used as test oracles. They work on a
// plain nested-vector tree and string-keyed sums, sharing nothing with the
// library beyond the printed bracket notation.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mkw/bck.hpp"
#include "mkw/lincomb.hpp"

namespace oracle {

using Rational = mkw::Rational;

struct Node {
  std::string label;
  std::vector<Node> kids;
};
using Word = std::vector<Node>;

inline std::string text(const Node& n) {
  std::string s = "[" + n.label;
  for (const auto& k : n.kids) s += text(k);
  return s + "]";
}
inline std::string text(const Word& w) {
  std::string s;
  for (const auto& n : w) s += text(n);
  return s.empty() ? "1" : s;
}

// Bracket notation without the library parser; a missing label means "o".
inline Word parse(const std::string& s) {
  std::size_t pos = 0;
  std::function<Node()> node = [&]() {
    Node n;
    ++pos;  // '['
    while (pos < s.size() && s[pos] != '[' && s[pos] != ']') n.label += s[pos++];
    if (n.label.empty()) n.label = "o";
    while (s[pos] == '[') n.kids.push_back(node());
    ++pos;  // ']'
    return n;
  };
  Word w;
  while (pos < s.size()) w.push_back(node());
  return w;
}

inline std::size_t size(const Node& n) {
  std::size_t k = 1;
  for (const auto& c : n.kids) k += size(c);
  return k;
}
inline std::size_t size(const Word& w) {
  std::size_t k = 0;
  for (const auto& n : w) k += size(n);
  return k;
}

using Sum = std::map<std::string, Rational>;
using PairSum = std::map<std::pair<std::string, std::string>, Rational>;

inline void add(Sum& s, const std::string& k, const Rational& c) {
  if ((s[k] += c) == 0) s.erase(k);
}
inline void add(PairSum& s, const std::pair<std::string, std::string>& k, const Rational& c) {
  if ((s[k] += c) == 0) s.erase(k);
}

inline std::string show(const mkw::Forest& w) { return w.empty() ? "1" : w.text(); }

inline Sum of(const mkw::LinComb& x) {
  Sum s;
  for (const auto& [w, c] : x) add(s, show(w), c);
  return s;
}
inline PairSum of(const mkw::TensorElem& x) {
  PairSum s;
  for (const auto& [p, c] : x) add(s, {show(p.first), show(p.second)}, c);
  return s;
}
inline Sum of(const mkw::BckLinComb& x) {
  Sum s;
  for (const auto& [w, c] : x) add(s, w.text(), c);
  return s;
}
inline PairSum of(const mkw::BckTensor& x) {
  PairSum s;
  for (const auto& [p, c] : x) add(s, {p.first.text(), p.second.text()}, c);
  return s;
}

// All interleavings of two sequences, as lists of the merged sequences.
template <class T>
std::vector<std::vector<T>> interleavings(const std::vector<T>& a, const std::vector<T>& b) {
  const std::size_t n = a.size() + b.size();
  std::vector<std::vector<T>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != a.size()) continue;
    std::vector<T> merged;
    std::size_t i = 0, j = 0;
    for (std::size_t p = 0; p < n; ++p) merged.push_back(mask >> p & 1 ? a[i++] : b[j++]);
    out.push_back(std::move(merged));
  }
  return out;
}

inline Sum shuffle(const Word& a, const Word& b) {
  Sum s;
  for (const auto& w : interleavings(a, b)) add(s, text(w), 1);
  return s;
}

// Preorder addresses of every vertex of a word.
using Address = std::vector<std::size_t>;
inline void addresses(const Node& n, Address& prefix, std::vector<Address>& out) {
  out.push_back(prefix);
  for (std::size_t i = 0; i < n.kids.size(); ++i) {
    prefix.push_back(i);
    addresses(n.kids[i], prefix, out);
    prefix.pop_back();
  }
}
inline std::vector<Address> addresses(const Word& w) {
  std::vector<Address> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Address a{i};
    addresses(w[i], a, out);
  }
  return out;
}
inline Node& at(Word& w, const Address& a) {
  Node* n = &w[a[0]];
  for (std::size_t i = 1; i < a.size(); ++i) n = &n->kids[a[i]];
  return *n;
}

// A ⊲ B: every root of A picks a vertex of B and lands leftmost there; roots
// sharing a vertex keep their order.
inline Sum graft(const Word& a, const Word& b) {
  if (b.empty()) return a.empty() ? Sum{{"1", 1}} : Sum{};
  const auto targets = addresses(b);
  Sum s;
  std::vector<std::size_t> choice(a.size(), 0);
  for (;;) {
    Word result = b;
    std::map<Address, std::vector<Node>> incoming;
    for (std::size_t r = 0; r < a.size(); ++r) incoming[targets[choice[r]]].push_back(a[r]);
    // Deepest addresses first keeps the shallower addresses valid.
    for (auto it = incoming.rbegin(); it != incoming.rend(); ++it) {
      Node& target = at(result, it->first);
      target.kids.insert(target.kids.begin(), it->second.begin(), it->second.end());
    }
    add(s, text(result), 1);
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == targets.size()) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return s;
}

inline Sum shuffle_sums(const Sum& x, const Sum& y) {
  Sum out;
  for (const auto& [u, cu] : x)
    for (const auto& [v, cv] : y) {
      const Word wu = u == "1" ? Word{} : parse(u);
      const Word wv = v == "1" ? Word{} : parse(v);
      for (const auto& [w, c] : shuffle(wu, wv)) add(out, w, c * cu * cv);
    }
  return out;
}

// Δ_MKW on a tree from the definition: every edge subset is tested for left
// admissibility; the pruned pieces of each vertex stay in order and the pieces of
// different vertices are shuffled.
inline PairSum mkw_coproduct_tree(const Node& tree) {
  struct Edge {
    Address child;  // address of the child endpoint within the tree
  };
  std::vector<Address> all;
  Address root;
  addresses(tree, root, all);
  std::vector<Edge> edges;
  for (const auto& a : all)
    if (!a.empty()) edges.push_back({a});
  auto node_at = [&](const Address& a) -> const Node& {
    const Node* n = &tree;
    for (auto i : a) n = &n->kids[i];
    return *n;
  };
  auto is_prefix = [](const Address& p, const Address& a) {
    return p.size() < a.size() && std::equal(p.begin(), p.end(), a.begin());
  };
  PairSum out;
  add(out, {text(Word{tree}), "1"}, 1);
  for (std::size_t mask = 0; mask < (std::size_t{1} << edges.size()); ++mask) {
    std::vector<Address> cut;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (mask >> e & 1) cut.push_back(edges[e].child);
    bool ok = true;
    for (const auto& c : cut) {
      // every left sibling edge is cut too
      Address parent(c.begin(), c.end() - 1);
      for (std::size_t i = 0; i < c.back() && ok; ++i) {
        Address sib = parent;
        sib.push_back(i);
        ok = std::find(cut.begin(), cut.end(), sib) != cut.end();
      }
      // at most one cut edge on any root path
      for (const auto& d : cut)
        if (is_prefix(c, d)) ok = false;
      if (!ok) break;
    }
    if (!ok) continue;
    // Trunk: drop the cut subtrees. Pruned: per parent vertex, the cut children in order.
    std::map<Address, Word> pieces;
    for (const auto& c : cut) pieces[Address(c.begin(), c.end() - 1)].push_back(node_at(c));
    std::function<Node(const Node&, Address&)> trunk = [&](const Node& n, Address& here) {
      Node t{n.label, {}};
      for (std::size_t i = 0; i < n.kids.size(); ++i) {
        here.push_back(i);
        if (std::find(cut.begin(), cut.end(), here) == cut.end()) t.kids.push_back(trunk(n.kids[i], here));
        here.pop_back();
      }
      return t;
    };
    Address here;
    const std::string trunk_text = text(Word{trunk(tree, here)});
    Sum pruned{{"1", 1}};
    for (const auto& [parent, w] : pieces) pruned = shuffle_sums(pruned, Sum{{text(w), 1}});
    for (const auto& [p, c] : pruned) add(out, {p, trunk_text}, c);
  }
  return out;
}

// On a forest: graft it onto a fresh root, cut, and strip that root again.
inline PairSum mkw_coproduct(const Word& w) {
  if (w.empty()) return {{{"1", "1"}, 1}};
  const Node top{"#", w};
  PairSum out;
  for (const auto& [p, c] : mkw_coproduct_tree(top)) {
    if (p.second == "1") continue;  // the whole tree on the left
    const Word trunk = parse(p.second).front().kids;
    add(out, {p.first, text(trunk)}, c);
  }
  return out;
}

// (1/|b|) Σ_v: roots of a go onto v and are shuffled with v's children.
inline Sum natural_growth(const Word& a, const Word& b) {
  Sum s;
  const auto targets = addresses(b);
  for (const auto& v : targets) {
    Word base = b;
    Node& target = at(base, v);
    for (const auto& kids : interleavings(a, target.kids)) {
      Word result = base;
      at(result, v).kids = kids;
      add(s, text(result), Rational(1, static_cast<unsigned long>(size(b))));
    }
  }
  return s;
}

// Non-planar canonical text: children sorted by their own canonical text.
inline std::string canonical(const Node& n) {
  std::vector<std::string> kids;
  for (const auto& k : n.kids) kids.push_back(canonical(k));
  std::sort(kids.begin(), kids.end());
  std::string s = "[" + n.label;
  for (const auto& k : kids) s += k;
  return s + "]";
}

// Connes–Kreimer coproduct of a tree: every edge subset with at most one cut
// per root path, pruned part as a multiset, trunk containing the root.
inline std::map<std::pair<std::multiset<std::string>, std::string>, Rational> bck_coproduct_tree(const Node& tree) {
  std::vector<Address> all;
  Address root;
  addresses(tree, root, all);
  std::vector<Address> edges;
  for (const auto& a : all)
    if (!a.empty()) edges.push_back(a);
  auto is_prefix = [](const Address& p, const Address& a) {
    return p.size() < a.size() && std::equal(p.begin(), p.end(), a.begin());
  };
  std::map<std::pair<std::multiset<std::string>, std::string>, Rational> out;
  out[{{canonical(tree)}, "1"}] += 1;
  for (std::size_t mask = 0; mask < (std::size_t{1} << edges.size()); ++mask) {
    std::vector<Address> cut;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (mask >> e & 1) cut.push_back(edges[e]);
    bool ok = true;
    for (const auto& c : cut)
      for (const auto& d : cut)
        if (is_prefix(c, d)) ok = false;
    if (!ok) continue;
    std::multiset<std::string> pruned;
    std::function<Node(const Node&, Address&)> trunk = [&](const Node& n, Address& here) {
      Node t{n.label, {}};
      for (std::size_t i = 0; i < n.kids.size(); ++i) {
        here.push_back(i);
        if (std::find(cut.begin(), cut.end(), here) == cut.end()) {
          t.kids.push_back(trunk(n.kids[i], here));
        } else {
          pruned.insert(canonical(n.kids[i]));
        }
        here.pop_back();
      }
      return t;
    };
    Address here;
    const Node t = trunk(tree, here);
    out[{pruned, canonical(t)}] += 1;
  }
  return out;
}

inline std::size_t catalan(std::size_t n) {
  std::size_t c = 1;
  for (std::size_t k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace oracle
