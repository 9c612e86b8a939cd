#include "mkw/growth.hpp"

#include <stdexcept>

#include "mkw/linalg.hpp"
#include "mkw/mkw_hopf.hpp"

namespace mkw {

namespace {

void preorder(Tree t, std::vector<Tree>& out) {
  out.push_back(t);
  for (const auto& c : t.children()) preorder(c, out);
}

std::vector<Tree> vertices(const Forest& f) {
  std::vector<Tree> out;
  out.reserve(f.degree());
  for (const auto& t : f) preorder(t, out);
  return out;
}

}  // namespace

LinComb natural_growth(const Forest& a, const Forest& b) {
  if (b.empty()) throw std::invalid_argument("natural_growth: second argument has a unit component");
  const auto vs = vertices(b);
  LinComb out;
  for (std::size_t v = 0; v < vs.size(); ++v) {
    Forest existing = b_minus(vs[v]);
    for (const auto& [kids, c] : shuffle(a, existing)) out.add(replace_children(b, v, kids.trees()), c);
  }
  out *= Rational(1, static_cast<unsigned long>(b.degree()));
  return out;
}

LinComb natural_growth(const LinComb& a, const LinComb& b) {
  return bilinear_map(a, b, [](const Forest& x, const Forest& y) { return natural_growth(x, y); });
}

bool is_primitive(const LinComb& x) { return reduced_coproduct(x).is_zero() && is_zero(counit(x)); }

LinComb primitive_projection(const Forest& w) {
  if (w.empty()) return {};
  thread_local std::unordered_map<Forest, LinComb, ForestHash> cache;
  if (auto it = cache.find(w); it != cache.end()) return it->second;
  LinComb out(w);
  for (const auto& [p, c] : reduced_coproduct(w))
    out.add_scaled(natural_growth(LinComb(p.first), primitive_projection(p.second)), -c);
  cache.emplace(w, out);
  return out;
}

LinComb primitive_projection(const LinComb& x) {
  return linear_map(x, [](const Forest& w) { return primitive_projection(w); });
}

std::size_t primitive_degree(const LinComb& x) {
  if (x.is_zero()) throw std::invalid_argument("primitive_degree: zero has no primitive degree");
  if (!is_zero(counit(x))) throw std::invalid_argument("primitive_degree: input has a unit component");
  MultiTensor t = as_multi(x);
  for (std::size_t k = 1;; ++k) {
    t = split_leg(t, k - 1, [](const Forest& w) { return reduced_coproduct(w); });
    if (t.is_zero()) return k;
  }
}

LinComb growth_word(const ForestTuple& legs) {
  if (legs.empty()) return unit();
  LinComb acc(legs[0]);
  for (std::size_t i = 1; i < legs.size(); ++i) acc = natural_growth(acc, LinComb(legs[i]));
  return acc;
}

LinComb growth_word(const MultiTensor& t) {
  LinComb out;
  for (const auto& [k, c] : t) out.add_scaled(growth_word(k), c);
  return out;
}

std::vector<DecompositionLevel> f_decompose(const LinComb& x) {
  if (!is_zero(counit(x))) throw std::invalid_argument("f_decompose: input has a unit component");
  std::vector<DecompositionLevel> levels;
  LinComb rest = x;
  std::size_t previous = 0;
  while (!rest.is_zero()) {
    const std::size_t m = primitive_degree(rest);
    if (previous != 0 && m >= previous) throw std::logic_error("f_decompose: primitive degree failed to drop");
    previous = m;
    MultiTensor t = iterated_reduced_coproduct(rest, m - 1);
    for (std::size_t leg = 0; leg < m; ++leg)
      if (!split_leg(t, leg, [](const Forest& w) { return reduced_coproduct(w); }).is_zero())
        throw std::logic_error("f_decompose: top component is not a tensor of primitives");
    rest -= growth_word(t);
    levels.push_back({m, std::move(t)});
  }
  return levels;
}

LinComb recompose(const std::vector<DecompositionLevel>& levels) {
  LinComb out;
  for (const auto& l : levels) out += growth_word(l.component);
  return out;
}

PrimitiveElement::PrimitiveElement(LinComb value) : value_(std::move(value)) {
  if (!is_primitive(value_)) throw std::invalid_argument("not primitive: " + to_text(value_));
}

LinComb evaluate(const PrimitiveWord& word) {
  if (word.empty()) return unit();
  LinComb acc = word[0].value();
  for (std::size_t i = 1; i < word.size(); ++i) acc = natural_growth(acc, word[i].value());
  return acc;
}

LinComb cocycle_bplus(const LinComb& x, const PrimitiveElement& p) { return natural_growth(x, p.value()); }

std::vector<WordTerm> gr_shuffle(const PrimitiveWord& a, const PrimitiveWord& b) {
  std::vector<WordTerm> out;
  auto add = [&out](PrimitiveWord w) {
    for (auto& t : out)
      if (t.word == w) {
        t.coeff += 1;
        return;
      }
    out.push_back({1, std::move(w)});
  };
  // Enumerate positions of a's letters among the a.size() + b.size() slots.
  const std::size_t n = a.size() + b.size();
  std::vector<bool> from_a(n, false);
  std::fill(from_a.begin(), from_a.begin() + static_cast<std::ptrdiff_t>(a.size()), true);
  do {
    PrimitiveWord w;
    std::size_t i = 0, j = 0;
    for (bool fa : from_a) w.push_back(fa ? a[i++] : b[j++]);
    add(std::move(w));
  } while (std::prev_permutation(from_a.begin(), from_a.end()));
  return out;
}

std::vector<std::pair<PrimitiveWord, PrimitiveWord>> gr_deconcat(const PrimitiveWord& w) {
  std::vector<std::pair<PrimitiveWord, PrimitiveWord>> out;
  for (std::size_t k = 0; k <= w.size(); ++k)
    out.emplace_back(PrimitiveWord(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k)),
                     PrimitiveWord(w.begin() + static_cast<std::ptrdiff_t>(k), w.end()));
  return out;
}

namespace {

// Every way to cut {first, …, last} into consecutive blocks.
void interval_decompositions(std::size_t first, std::size_t last,
                             std::vector<std::pair<std::size_t, std::size_t>>& blocks,
                             std::vector<std::vector<std::pair<std::size_t, std::size_t>>>& out) {
  if (first > last) {
    out.push_back(blocks);
    return;
  }
  for (std::size_t end = first; end <= last; ++end) {
    blocks.emplace_back(first, end);
    interval_decompositions(end + 1, last, blocks, out);
    blocks.pop_back();
  }
}

}  // namespace

Coaction comodule_coaction(std::size_t n, const PrimitiveFamily& family) {
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j)
      if (!family.count({i, j}))
        throw std::invalid_argument("incomplete family: missing p_{" + std::to_string(i) + "," + std::to_string(j) + "}");
  Coaction table(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      std::vector<std::pair<std::size_t, std::size_t>> blocks;
      std::vector<std::vector<std::pair<std::size_t, std::size_t>>> decs;
      interval_decompositions(j + 1, i, blocks, decs);
      LinComb coefficient;
      for (const auto& dec : decs) {
        PrimitiveWord word;  // highest block first
        for (auto it = dec.rbegin(); it != dec.rend(); ++it) word.push_back(family.at(*it));
        coefficient += evaluate(word);
      }
      table[i].push_back({std::move(coefficient), j});
    }
    table[i].push_back({unit(), i});
  }
  return table;
}

namespace {

void compositions(std::size_t n, std::vector<std::size_t>& parts, std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(parts);
    return;
  }
  for (std::size_t first = 1; first <= n; ++first) {
    parts.push_back(first);
    compositions(n - first, parts, out);
    parts.pop_back();
  }
}

}  // namespace

LinComb coalgebra_endomorphism(const std::vector<PrimitiveMap>& u, const LinComb& x, std::size_t max_degree) {
  if (mkw::max_degree(x) > max_degree) throw std::invalid_argument("coalgebra_endomorphism: input above max degree");
  LinComb out;
  out.add(Forest{}, counit(x));
  LinComb augmented = x.filtered([](const Forest& w) { return !w.empty(); });
  for (const auto& level : f_decompose(augmented)) {
    std::vector<std::vector<std::size_t>> comps;
    std::vector<std::size_t> parts;
    compositions(level.level, parts, comps);
    for (const auto& comp : comps) {
      for (std::size_t a : comp)
        if (a > u.size() || !u[a - 1]) throw std::invalid_argument("coalgebra_endomorphism: missing u_" + std::to_string(a));
      for (const auto& [legs, c] : level.component) {
        MultiTensor acc(ForestTuple{}, c);
        std::size_t pos = 0;
        for (std::size_t a : comp) {
          ForestTuple block(legs.begin() + static_cast<std::ptrdiff_t>(pos),
                            legs.begin() + static_cast<std::ptrdiff_t>(pos + a));
          acc = tensor(acc, as_multi(u[a - 1](block)));
          pos += a;
          if (acc.is_zero()) break;
        }
        out += growth_word(acc);
      }
    }
  }
  return out;
}

namespace {

// Rank of a family of combinations, columns indexed by every forest that occurs.
std::size_t rank_of(const std::vector<LinComb>& images) {
  std::unordered_map<Forest, std::size_t, ForestHash> index;
  for (const auto& img : images)
    for (const auto& [w, c] : img) index.try_emplace(w, index.size());
  RowEchelon e(index.size());
  for (const auto& img : images) {
    Vector row(index.size(), Rational(0));
    for (const auto& [w, c] : img) row[index.at(w)] = c;
    e.insert(std::move(row));
  }
  return e.rank();
}

}  // namespace

bool endomorphism_bijective(const std::vector<PrimitiveMap>& u, std::size_t max_degree, const Alphabet& alphabet) {
  std::vector<LinComb> images;
  for (std::size_t n = 1; n <= max_degree; ++n)
    for (const auto& w : enumerate_forests(n, alphabet)) images.push_back(coalgebra_endomorphism(u, LinComb(w), max_degree));
  return rank_of(images) == images.size();
}

bool first_component_bijective(const PrimitiveMap& u1, std::size_t max_degree, const Alphabet& alphabet) {
  std::vector<LinComb> images;
  for (std::size_t n = 1; n <= max_degree; ++n)
    for (const auto& p : primitive_basis(n, alphabet)) {
      LinComb img;
      for (const auto& [w, c] : p) img.add_scaled(u1(ForestTuple{w}), c);
      images.push_back(std::move(img));
    }
  return rank_of(images) == images.size();
}

std::vector<LinComb> primitive_basis(std::size_t degree, const Alphabet& alphabet) {
  if (degree == 0) return {};
  thread_local std::map<std::pair<std::vector<Decoration>, std::size_t>, std::vector<LinComb>> cache;
  auto key = std::make_pair(alphabet.letters(), degree);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const auto columns = enumerate_forests(degree, alphabet);
  std::unordered_map<ForestPair, std::size_t, BasisTraits<ForestPair>::Hash> row_of;
  std::vector<Vector> rows;
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (const auto& [p, c] : reduced_coproduct(columns[j])) {
      auto [it, fresh] = row_of.try_emplace(p, rows.size());
      if (fresh) rows.emplace_back(columns.size(), Rational(0));
      rows[it->second][j] = c;
    }
  RowEchelon e(columns.size());
  for (auto& r : rows) e.insert(std::move(r));
  std::vector<LinComb> basis;
  for (const auto& v : e.kernel()) {
    LinComb p;
    for (std::size_t j = 0; j < columns.size(); ++j) p.add(columns[j], v[j]);
    basis.push_back(std::move(p));
  }
  return cache[key] = basis;
}

}  // namespace mkw
