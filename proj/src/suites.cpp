#include "mkw/suites.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <tuple>

#include "mkw/bck.hpp"
#include "mkw/cointeraction.hpp"
#include "mkw/commands.hpp"
#include "mkw/embedding.hpp"
#include "mkw/growth.hpp"
#include "mkw/linalg.hpp"
#include "mkw/mkw_hopf.hpp"
#include "mkw/postlie.hpp"
#include "mkw/regstruct.hpp"

namespace mkw {

namespace {

std::string show(const Forest& w) { return w.empty() ? std::string("1") : w.text(); }

struct Range {
  std::size_t degree;
  Alphabet alphabet;
  std::string text(const std::string& what = "deg") const {
    return what + " <= " + std::to_string(degree) + ", " + alphabet.describe();
  }
};

// {o} up to max_degree and {a,b} one degree lower, unless an alphabet is forced.
std::vector<Range> default_ranges(std::size_t max_degree, const SuiteOptions& options) {
  if (options.alphabet) return {{max_degree, *options.alphabet}};
  std::vector<Range> out{{max_degree, Alphabet::singleton()}};
  if (max_degree >= 2) out.push_back({max_degree - 1, Alphabet{"a", "b"}});
  return out;
}

std::vector<Tree> trees_upto(std::size_t n, const Alphabet& alphabet) {
  std::vector<Tree> out;
  for (std::size_t d = 1; d <= n; ++d)
    for (const auto& t : enumerate_trees(d, alphabet)) out.push_back(t);
  return out;
}

std::vector<Forest> nonempty_upto(std::size_t n, const Alphabet& alphabet) {
  std::vector<Forest> out;
  for (std::size_t d = 1; d <= n; ++d)
    for (const auto& w : enumerate_forests(d, alphabet)) out.push_back(w);
  return out;
}

LinComb bracket(const LinComb& x, const LinComb& y) {
  LinComb out = concat(x, y);
  out -= concat(y, x);
  return out;
}

LinComb shuffle_of(const Forest& a, const Forest& b) { return shuffle(a, b); }
LinComb gl_of(const Forest& a, const Forest& b) { return gl_product(a, b); }

std::string differ(const std::string& lhs, const std::string& rhs) { return lhs + "  !=  " + rhs; }

// ---- hopf-axioms -----------------------------------------------------------

void hopf_axioms(SuiteReport& report, const Range& r) {
  CheckResult coassoc("mkw coassociativity", r.text());
  CheckResult counit_law("mkw counit", r.text());
  CheckResult antipode_left("mkw antipode m(S⊗id)Δ = ε", r.text());
  CheckResult antipode_right("mkw antipode m(id⊗S)Δ = ε", r.text());
  auto cop = [](const Forest& w) { return mkw_coproduct(w); };
  for (const auto& w : enumerate_forests_upto(r.degree, r.alphabet)) {
    const TensorElem d = mkw_coproduct(w);
    const MultiTensor left = split_leg(as_multi(d), 0, cop);
    const MultiTensor right = split_leg(as_multi(d), 1, cop);
    coassoc.check(left == right, [&] { return show(w) + ": " + differ(to_text(left), to_text(right)); });

    LinComb via_left, via_right, sl, sr;
    for (const auto& [p, c] : d) {
      if (p.first.empty()) via_left.add(p.second, c);
      if (p.second.empty()) via_right.add(p.first, c);
      sl.add_scaled(shuffle(mkw_antipode(p.first), LinComb(p.second)), c);
      sr.add_scaled(shuffle(LinComb(p.first), mkw_antipode(p.second)), c);
    }
    const LinComb expect = w.empty() ? unit() : LinComb{};
    counit_law.check(via_left == LinComb(w) && via_right == LinComb(w), [&] { return show(w); });
    antipode_left.check(sl == expect, [&] { return show(w) + ": " + to_text(sl); });
    antipode_right.check(sr == expect, [&] { return show(w) + ": " + to_text(sr); });
  }

  CheckResult bialgebra("mkw bialgebra Δ(x⧢y) = Δ(x)⧢Δ(y)", r.text("|x|+|y|"));
  const auto all = enumerate_forests_upto(r.degree, r.alphabet);
  for (const auto& x : all)
    for (const auto& y : all) {
      if (x.degree() + y.degree() > r.degree) continue;
      const TensorElem lhs = mkw_coproduct(shuffle(x, y));
      const TensorElem rhs = legwise_product(mkw_coproduct(x), mkw_coproduct(y), shuffle_of, shuffle_of);
      bialgebra.check(lhs == rhs, [&] { return show(x) + " ⧢ " + show(y); });
    }

  CheckResult connected("connected grading", r.text());
  for (const auto& w : nonempty_upto(r.degree, r.alphabet))
    for (const auto& [p, c] : mkw_coproduct(w))
      connected.check(!(p.first.empty() && p.second.empty()), [&] { return show(w); });

  for (auto* c : {&coassoc, &counit_law, &bialgebra, &antipode_left, &antipode_right, &connected})
    report.checks.push_back(std::move(*c));
}

// ---- post-lie-axioms -------------------------------------------------------

void post_lie_axioms(SuiteReport& report, const Range& r) {
  CheckResult pl1("postLie1 [x,y]⊲z", r.text("|x|+|y|+|z|"));
  CheckResult pl2("postLie2 x⊲[y,z]", r.text("|x|+|y|+|z|"));
  const auto trees = trees_upto(r.degree, r.alphabet);
  for (const auto& tx : trees)
    for (const auto& ty : trees)
      for (const auto& tz : trees) {
        if (tx.degree() + ty.degree() + tz.degree() > r.degree) continue;
        const LinComb x(Forest{tx}), y(Forest{ty}), z(Forest{tz});
        LinComb lhs = left_graft(bracket(x, y), z);
        LinComb rhs = left_graft(x, left_graft(y, z));
        rhs -= left_graft(left_graft(x, y), z);
        rhs -= left_graft(y, left_graft(x, z));
        rhs += left_graft(left_graft(y, x), z);
        const auto name = [&] { return tx.text() + ", " + ty.text() + ", " + tz.text(); };
        pl1.check(lhs == rhs, name);
        LinComb lhs2 = left_graft(x, bracket(y, z));
        LinComb rhs2 = bracket(left_graft(x, y), z);
        rhs2 += bracket(y, left_graft(x, z));
        pl2.check(lhs2 == rhs2, name);
      }

  CheckResult shift("shift A⊲(B⊲C) = (A∗B)⊲C", r.text("|A|+|B|+|C|"));
  CheckResult assoc("∗ associativity", r.text("|A|+|B|+|C|"));
  const auto forests = nonempty_upto(r.degree, r.alphabet);
  for (const auto& A : forests)
    for (const auto& B : forests)
      for (const auto& C : forests) {
        if (A.degree() + B.degree() + C.degree() > r.degree) continue;
        const LinComb a(A), b(B), c(C);
        const auto name = [&] { return show(A) + ", " + show(B) + ", " + show(C); };
        shift.check(left_graft(a, left_graft(b, c)) == left_graft(gl_product(a, b), c), name);
        assoc.check(gl_product(gl_product(a, b), c) == gl_product(a, gl_product(b, c)), name);
      }

  CheckResult morphism("Δ⧢(A∗B) = Δ⧢(A)(∗⊗∗)Δ⧢(B)", r.text("|A|+|B|"));
  CheckResult inverse("A·B rebuilt from ∗ and S∗", r.text("|A|+|B|"));
  const auto all = enumerate_forests_upto(r.degree, r.alphabet);
  for (const auto& A : all)
    for (const auto& B : all) {
      if (A.degree() + B.degree() > r.degree) continue;
      const auto name = [&] { return show(A) + ", " + show(B); };
      morphism.check(deshuffle(gl_product(A, B)) == legwise_product(deshuffle(A), deshuffle(B), gl_of, gl_of), name);
      inverse.check(gl_inverse_product(LinComb(A), LinComb(B)) == LinComb(concat(A, B)), name);
    }

  CheckResult antipode("m∗(S∗⊗id)Δ⧢ = ε", r.text());
  for (const auto& w : all) {
    LinComb s;
    for (const auto& [p, c] : deshuffle(w)) s.add_scaled(gl_product(gl_antipode(p.first), LinComb(p.second)), c);
    antipode.check(s == (w.empty() ? unit() : LinComb{}), [&] { return show(w) + ": " + to_text(s); });
  }

  for (auto* c : {&pl1, &pl2, &shift, &assoc, &morphism, &inverse, &antipode}) report.checks.push_back(std::move(*c));
}

// ---- gl-duality ------------------------------------------------------------

void gl_duality(SuiteReport& report, const Range& r) {
  CheckResult a = gl_mkw_duality_check(r.degree, r.alphabet);
  a.name = "⟨A∗B,x⟩ = ⟨A⊗B,Δ_MKW x⟩";
  CheckResult b = graft_duality_check(r.degree, r.alphabet);
  b.name = "⟨A⊲B,x⟩ = ⟨A⊗B,ρ x⟩";
  report.checks.push_back(std::move(a));
  report.checks.push_back(std::move(b));
}

// ---- natural-growth ----------------------------------------------------------

TensorElem reduced(const LinComb& x) { return reduced_coproduct(x); }

void natural_growth_suite(SuiteReport& report, std::size_t n) {
  const Alphabet o = Alphabet::singleton();
  const std::size_t xdeg = n > 1 ? n - 1 : 1;
  const std::size_t ydeg = n > 2 ? n - 2 : 1;

  CheckResult identity("Δ̂(x⊤y) = x⊗y + x'⊗(x''⊤y)",
                       "|x| <= " + std::to_string(xdeg) + ", y primitive of degree <= " + std::to_string(ydeg) + ", {o}");
  std::vector<LinComb> prims;
  for (std::size_t d = 1; d <= ydeg; ++d)
    for (auto& p : primitive_basis(d, o)) prims.push_back(std::move(p));
  for (const auto& x : nonempty_upto(xdeg, o))
    for (const auto& y : prims) {
      const TensorElem lhs = reduced(natural_growth(LinComb(x), y));
      TensorElem rhs = tensor(LinComb(x), y);
      for (const auto& [p, c] : reduced_coproduct(x)) rhs.add_scaled(tensor(LinComb(p.first), natural_growth(LinComb(p.second), y)), c);
      identity.check(lhs == rhs, [&] { return show(x) + " ⊤ " + to_text(y); });
    }

  // Words over the primitives of degree 1 and 2.
  CheckResult deconcat("Δ̂ of a ⊤-word deconcatenates", "words of length <= 4 over primitives of degree <= 2, total degree <= " +
                                                       std::to_string(n + 1));
  std::vector<PrimitiveElement> letters;
  for (std::size_t d = 1; d <= 2; ++d)
    for (auto& p : primitive_basis(d, o)) letters.emplace_back(std::move(p));
  std::vector<std::pair<PrimitiveWord, std::size_t>> words{{{}, 0}};
  for (std::size_t len = 1; len <= 4; ++len) {
    std::vector<std::pair<PrimitiveWord, std::size_t>> longer;
    for (const auto& [w, deg] : words) {
      if (w.size() != len - 1) continue;
      for (const auto& p : letters) {
        const std::size_t d = deg + max_degree(p.value());
        if (d > n + 1) continue;
        PrimitiveWord next = w;
        next.push_back(p);
        longer.emplace_back(std::move(next), d);
      }
    }
    words.insert(words.end(), longer.begin(), longer.end());
  }
  for (const auto& [w, deg] : words) {
    if (w.size() < 2) continue;
    TensorElem rhs;
    for (const auto& [u, v] : gr_deconcat(w))
      if (!u.empty() && !v.empty()) rhs += tensor(evaluate(u), evaluate(v));
    deconcat.check(reduced(evaluate(w)) == rhs, [&] { return "word of length " + std::to_string(w.size()); });
  }

  // Words in two letters with concatenation as growth, deconcatenation as coproduct.
  CheckResult words_check("shuffle algebra: concatenation is a natural growth", "words of length <= 4, {a,b}");
  const Alphabet ab{"a", "b"};
  std::vector<Forest> ab_words{Forest{}};
  for (std::size_t len = 1; len <= 3; ++len) {
    std::vector<Forest> next;
    for (const auto& w : ab_words)
      if (w.size() == len - 1)
        for (Decoration d : ab.letters()) next.push_back(concat(w, Forest{Tree(d)}));
    ab_words.insert(ab_words.end(), next.begin(), next.end());
  }
  auto reduced_deconcat = [](const LinComb& x) {
    TensorElem t = deconcatenation(x);
    for (const auto& [w, c] : x) {
      t.add({w, Forest{}}, -c);
      t.add({Forest{}, w}, -c);
    }
    return t;
  };
  for (const auto& x : ab_words) {
    if (x.empty()) continue;
    for (Decoration d : ab.letters()) {
      const LinComb y(Forest{Tree(d)});
      TensorElem rhs = tensor(LinComb(x), y);
      for (const auto& [p, c] : reduced_deconcat(LinComb(x))) rhs.add_scaled(tensor(LinComb(p.first), concat(LinComb(p.second), y)), c);
      words_check.check(reduced_deconcat(concat(LinComb(x), y)) == rhs, [&] { return show(x) + " · " + token_name(d); });
    }
  }

  CheckResult cocycle("cocycle Δ B(x) = B(x)⊗1 + (id⊗B)Δx", "|x| <= 3, p primitive of degree <= 2, {o}");
  CheckResult antipode("S(B x) = −Σ S(x_(1)) ⧢ B(x_(2))", cocycle.range);
  for (const auto& x : enumerate_forests_upto(3, o))
    for (const auto& p : letters) {
      const auto B = [&](const Forest& w) { return w.empty() ? p.value() : cocycle_bplus(LinComb(w), p); };
      const LinComb bx = B(x);
      TensorElem rhs = tensor(bx, unit());
      for (const auto& [q, c] : mkw_coproduct(x)) rhs.add_scaled(tensor(LinComb(q.first), B(q.second)), c);
      const auto name = [&] { return show(x) + " with p = " + to_text(p.value()); };
      cocycle.check(mkw_coproduct(bx) == rhs, name);
      LinComb s;
      for (const auto& [q, c] : mkw_coproduct(x)) s.add_scaled(shuffle(mkw_antipode(q.first), B(q.second)), -c);
      antipode.check(mkw_antipode(bx) == s, name);
    }

  CheckResult comodule("comodule coaction coassociative", "n <= 3, seeded primitive families of degree <= 2");
  std::mt19937 rng(20240611);
  for (std::size_t size = 1; size <= 3; ++size)
    for (int trial = 0; trial < 4; ++trial) {
      PrimitiveFamily family;
      for (std::size_t i = 1; i <= size; ++i)
        for (std::size_t j = i; j <= size; ++j) family.emplace(std::pair{i, j}, letters[rng() % letters.size()]);
      const Coaction table = comodule_coaction(size, family);
      auto coefficient = [&](std::size_t i, std::size_t j) {
        for (const auto& term : table[i])
          if (term.target == j) return term.coefficient;
        return LinComb{};
      };
      for (std::size_t i = 0; i <= size; ++i)
        for (std::size_t k = 0; k <= i; ++k) {
          TensorElem rhs;
          for (std::size_t j = k; j <= i; ++j) rhs += tensor(coefficient(i, j), coefficient(j, k));
          comodule.check(mkw_coproduct(coefficient(i, k)) == rhs,
                         [&] { return "n=" + std::to_string(size) + " e_" + std::to_string(i) + " → e_" + std::to_string(k); });
        }
    }

  for (auto* c : {&identity, &deconcat, &words_check, &cocycle, &antipode, &comodule}) report.checks.push_back(std::move(*c));
}

// ---- primitives --------------------------------------------------------------

void compositions_of(std::size_t n, std::vector<std::size_t>& parts, std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(parts);
    return;
  }
  for (std::size_t k = 1; k <= n; ++k) {
    parts.push_back(k);
    compositions_of(n - k, parts, out);
    parts.pop_back();
  }
}

std::vector<Rational> coordinates(const LinComb& x, const std::vector<Forest>& basis) {
  std::vector<Rational> v;
  v.reserve(basis.size());
  for (const auto& w : basis) v.push_back(x.coeff(w));
  return v;
}

void bck_checks(SuiteReport& report, std::size_t n) {
  const Alphabet o = Alphabet::singleton();
  CheckResult coassoc("bck coassociativity", "deg <= " + std::to_string(n) + ", {o}");
  CheckResult antipode("bck antipode m(S⊗id)Δ = ε", coassoc.range);
  CheckResult primitive("bck π(x) primitive", coassoc.range);
  using Triple = std::tuple<std::string, std::string, std::string>;
  for (std::size_t d = 0; d <= n; ++d)
    for (const auto& w : enumerate_nonplanar(d, o)) {
      std::map<Triple, Rational> left, right;
      auto bump = [](std::map<Triple, Rational>& m, Triple k, const Rational& c) {
        if ((m[k] += c) == 0) m.erase(k);
      };
      for (const auto& [p, c] : bck_coproduct(w)) {
        for (const auto& [q, e] : bck_coproduct(p.first)) bump(left, {q.first.text(), q.second.text(), p.second.text()}, c * e);
        for (const auto& [q, e] : bck_coproduct(p.second)) bump(right, {p.first.text(), q.first.text(), q.second.text()}, c * e);
      }
      coassoc.check(left == right, [&] { return w.text(); });
      BckLinComb s;
      for (const auto& [p, c] : bck_coproduct(w)) s.add_scaled(bck_product(bck_antipode(p.first), BckLinComb(p.second)), c);
      antipode.check(s == (w.empty() ? BckLinComb(NonplanarForest{}) : BckLinComb{}), [&] { return w.text(); });
      if (!w.empty()) {
        const BckLinComb pi = bck_primitive_projection(w);
        primitive.check(bck_reduced_coproduct(pi).is_zero(), [&] { return w.text() + " ↦ " + to_text(pi); });
      }
    }

  CheckResult bialgebra("bck bialgebra", "|x|+|y| <= " + std::to_string(n) + ", {o}");
  std::vector<NonplanarForest> all;
  for (std::size_t d = 0; d <= n; ++d)
    for (auto& w : enumerate_nonplanar(d, o)) all.push_back(std::move(w));
  for (const auto& x : all)
    for (const auto& y : all) {
      if (x.degree() + y.degree() > n) continue;
      BckTensor rhs;
      for (const auto& [p, c] : bck_coproduct(x))
        for (const auto& [q, e] : bck_coproduct(y)) rhs.add({bck_product(p.first, q.first), bck_product(p.second, q.second)}, c * e);
      bialgebra.check(bck_coproduct(bck_product(x, y)) == rhs, [&] { return x.text() + " · " + y.text(); });
    }

  CheckResult contrast("forgetting planarity after π differs from π_BCK", "[o][o[o]]");
  const Forest witness = parse_forest("[o][o[o]]", o);
  const BckLinComb planar_then_forget = forget_planarity(primitive_projection(witness));
  const BckLinComb direct = bck_primitive_projection(NonplanarForest(witness));
  contrast.check(!(planar_then_forget == direct) && direct.is_zero(),
                 [&] { return to_text(planar_then_forget) + " vs " + to_text(direct); });

  for (auto* c : {&coassoc, &bialgebra, &antipode, &primitive, &contrast}) report.checks.push_back(std::move(*c));
}

void primitives_suite(SuiteReport& report, std::size_t n, const SuiteOptions& options) {
  for (const auto& r : default_ranges(n, options)) {
    CheckResult primitive("π(x) primitive", r.text());
    CheckResult idempotent("π∘π = π", r.text());
    for (const auto& w : nonempty_upto(r.degree, r.alphabet)) {
      const LinComb p = primitive_projection(w);
      primitive.check(is_primitive(p), [&] { return show(w) + " ↦ " + to_text(p); });
      idempotent.check(primitive_projection(p) == p, [&] { return show(w); });
    }
    CheckResult dims("dim ker Δ̂ = number of trees", r.text());
    for (std::size_t d = 1; d <= r.degree; ++d) {
      const auto basis = primitive_basis(d, r.alphabet);
      dims.check(basis.size() == enumerate_trees(d, r.alphabet).size(), [&] {
        return "degree " + std::to_string(d) + ": " + std::to_string(basis.size());
      });
    }
    report.checks.push_back(std::move(primitive));
    report.checks.push_back(std::move(idempotent));
    report.checks.push_back(std::move(dims));
  }

  const Alphabet o = options.alphabet.value_or(Alphabet::singleton());
  const std::size_t fdeg = n > 1 ? n - 1 : 1;
  CheckResult roundtrip("f_decompose round trip", "deg <= " + std::to_string(fdeg) + ", " + o.describe());
  for (const auto& w : nonempty_upto(fdeg, o)) {
    const auto levels = f_decompose(LinComb(w));
    roundtrip.check(recompose(levels) == LinComb(w), [&] { return show(w); });
  }

  CheckResult direct("𝕂1 ⊕ ⊕_j Im F_j spans each degree", roundtrip.range);
  for (std::size_t d = 1; d <= fdeg; ++d) {
    std::vector<std::vector<LinComb>> prim(d + 1);
    for (std::size_t k = 1; k <= d; ++k) prim[k] = primitive_basis(k, o);
    std::vector<std::vector<std::size_t>> comps;
    std::vector<std::size_t> parts;
    compositions_of(d, parts, comps);
    const auto basis = enumerate_forests(d, o);
    RowEchelon echelon(basis.size());
    std::size_t vectors = 0;
    for (const auto& comp : comps) {
      std::vector<MultiTensor> partial{MultiTensor(ForestTuple{})};
      for (std::size_t part : comp) {
        std::vector<MultiTensor> next;
        for (const auto& t : partial)
          for (const auto& p : prim[part]) next.push_back(tensor(t, as_multi(p)));
        partial = std::move(next);
      }
      for (const auto& t : partial) {
        echelon.insert(coordinates(growth_word(t), basis));
        ++vectors;
      }
    }
    direct.check(vectors == basis.size() && echelon.rank() == basis.size(), [&] {
      return "degree " + std::to_string(d) + ": " + std::to_string(vectors) + " vectors, rank " +
             std::to_string(echelon.rank()) + ", dimension " + std::to_string(basis.size());
    });
  }
  report.checks.push_back(std::move(roundtrip));
  report.checks.push_back(std::move(direct));
  bck_checks(report, n);
}

// ---- phi-iso -----------------------------------------------------------------

void phi_suite(SuiteReport& report, std::size_t n, const SuiteOptions& options) {
  for (const auto& r : default_ranges(n, options)) {
    CheckResult morphism("φ(A∗B) = φ(A)·φ(B)", r.text("|A|+|B|"));
    const auto all = enumerate_forests_upto(r.degree, r.alphabet);
    for (const auto& A : all)
      for (const auto& B : all) {
        if (A.degree() + B.degree() > r.degree) continue;
        morphism.check(phi(gl_product(A, B)) == concat(phi(LinComb(A)), phi(LinComb(B))),
                       [&] { return show(A) + ", " + show(B); });
      }
    CheckResult coalgebra("Δ⧢∘φ = (φ⊗φ)∘Δ⧢", r.text());
    CheckResult roundtrip("φ⁻¹∘φ = id", r.text());
    const auto phi_leg = [](const Forest& w) { return phi(w); };
    for (const auto& w : all) {
      coalgebra.check(deshuffle(phi(w)) == map_pair(deshuffle(w), phi_leg, phi_leg), [&] { return show(w); });
      roundtrip.check(phi_inverse(phi(w)) == LinComb(w), [&] { return show(w); });
    }
    CheckResult triangular("φ unitriangular by tree count", r.text());
    for (std::size_t d = 1; d <= r.degree; ++d)
      triangular.check(phi_unitriangular(d, r.alphabet), [&] { return "degree " + std::to_string(d); });
    for (auto* c : {&morphism, &coalgebra, &roundtrip, &triangular}) report.checks.push_back(std::move(*c));
  }

  const Alphabet ab{"a", "b"};
  const std::vector<std::map<std::string, Rational>> samples{
      {{"a", Rational(1, 2)}, {"b", Rational(-1, 3)}}, {{"a", 2}, {"b", Rational(3, 4)}}, {{"a", Rational(-5, 7)}}};

  CheckResult embed("unembed∘embed = id on characters", "canonical lifts, N <= 4, {a,b}");
  CheckResult geometric("φ(X) is a shuffle character", embed.range);
  CheckResult closure("X∗Y is a character", "canonical lifts, N = 3, {a,b}");
  for (std::size_t N = 1; N <= 4; ++N)
    for (const auto& inc : samples) {
      const TruncChar x = canonical_lift(inc, N, ab);
      const TruncChar y = embed_rough_path(x);
      embed.check(unembed_rough_path(y) == x, [&] { return "N=" + std::to_string(N); });
      geometric.check(y.is_character(), [&] { return "N=" + std::to_string(N); });
    }

  CheckResult chen("Chen X_su ∗ X_ut = X_st along a line", "N = 3, {a,b}, rational sample points");
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = 0; j < samples.size(); ++j) {
      // Points s, u, t on the line s + λ(t − s): increments are λ_1·v and λ_2·v.
      const Rational l1 = Rational(1) / (3 + i), l2 = Rational(2) / (5 + j);  // kept canonical
      std::map<std::string, Rational> first, second, whole;
      for (const auto& [k, c] : samples[i]) {
        first[k] = l1 * c;
        second[k] = l2 * c;
        whole[k] = (l1 + l2) * c;
      }
      const TruncChar su = canonical_lift(first, 3, ab);
      const TruncChar ut = canonical_lift(second, 3, ab);
      const TruncChar st = canonical_lift(whole, 3, ab);
      chen.check(char_convolve(su, ut) == st, [&] { return "sample " + std::to_string(i) + "," + std::to_string(j); });
      const TruncChar mixed = char_convolve(su, canonical_lift(samples[j], 3, ab));
      closure.check(mixed.is_character(), [&] { return "sample " + std::to_string(i) + "," + std::to_string(j); });
    }
  for (auto* c : {&embed, &geometric, &closure, &chen}) report.checks.push_back(std::move(*c));
}

// ---- cointeraction family ----------------------------------------------------

void cointeraction_suite(SuiteReport& report, std::size_t n, const SuiteOptions& options) {
  for (const auto& r : default_ranges(n, options))
    for (auto& c : verify_cointeraction(r.degree, r.alphabet)) report.checks.push_back(std::move(c));

  const Alphabet ab{"a", "b"};
  const std::size_t N = std::min<std::size_t>(n, 4);
  CheckResult stable("A, B group-like ⇒ A⊲B group-like", "truncation " + std::to_string(N) + ", {a,b}");
  const std::vector<LinComb> seeds{parse_forest("[a]", ab), Rational(1, 2) * LinComb(parse_forest("[b]", ab)),
                                   LinComb(parse_forest("[a[b]]", ab)) - LinComb(parse_forest("[b]", ab))};
  for (const auto& s : seeds)
    for (const auto& t : seeds) {
      const LinComb A = gl_exp(s, N), B = gl_exp(t, N);
      stable.check(is_group_like(left_graft(A, B, N), N), [&] { return to_text(s) + " ⊲ " + to_text(t); });
    }
  report.checks.push_back(std::move(stable));
}

void cotranslation_suite(SuiteReport& report, std::size_t n, const SuiteOptions& options) {
  for (const auto& r : default_ranges(n, options))
    for (auto& c : verify_cotranslation_cosubstitution(r.degree, r.alphabet)) report.checks.push_back(std::move(c));
}

void translation_suite(SuiteReport& report, std::size_t n) {
  const Alphabet ab{"a", "b"};
  const Decoration a = intern_token("a"), b = intern_token("b");
  auto f = [&](const char* text) { return LinComb(parse_forest(text, ab)); };
  const LinComb comm = concat(f("[a]"), f("[b]")) - concat(f("[b]"), f("[a]"));
  const std::vector<std::map<Decoration, LinComb>> shifts{
      {{a, f("[b]")}},
      {{b, Rational(1, 2) * f("[a]")}},
      {{a, comm}},
      {{a, f("[a]") + f("[b]")}, {b, Rational(-1, 3) * comm}},
  };
  const std::size_t D = std::min<std::size_t>(n, 3);
  CheckResult compose("T_v∘T_u = T_{v+T_v(u)}", "deg <= " + std::to_string(D) + ", shifts primitive of degree <= 2, {a,b}");
  for (const auto& v : shifts)
    for (const auto& u : shifts) {
      const Translation Tv(v, D), Tu(u, D);
      const Translation Tvu = Tv.after(Tu);
      for (const auto& w : enumerate_forests_upto(D, ab))
        compose.check(Tv(Tu(LinComb(w))) == Tvu(LinComb(w)), [&] { return show(w); });
    }

  const std::size_t N = std::min<std::size_t>(n + 1, 4);
  CheckResult characters("T_v keeps group-like elements group-like", "truncation " + std::to_string(N) + ", {a,b}");
  for (const auto& v : shifts) {
    const Translation Tv(v, N);
    for (const auto& seed : {f("[a]"), f("[a]") + Rational(1, 2) * f("[b]"), f("[b[a]]")}) {
      const LinComb X = gl_exp(seed, N);
      characters.check(is_group_like(Tv(X), N), [&] { return "exp(" + to_text(seed) + ")"; });
    }
  }
  report.checks.push_back(std::move(compose));
  report.checks.push_back(std::move(characters));
}

void disjointness_suite(SuiteReport& report, std::size_t n) {
  const Alphabet ab{"a", "b"};
  auto f = [&](const char* text) { return LinComb(parse_forest(text, ab)); };
  // The witnesses [i[j]] have degree 2, so ξ − 1 needs room below the truncation.
  const std::size_t D = std::max<std::size_t>(std::min<std::size_t>(n, 4), 3);
  CheckResult unit_case("ξ = 1 grafts as the identity translation", "deg <= " + std::to_string(D) + ", {a,b}");
  const DisjointnessResult trivial = disjointness_witness(unit(), ab, D);
  unit_case.check(trivial.equal, [&] { return trivial.witness; });

  CheckResult nonunit("ξ ≠ 1 is never a translation", unit_case.range);
  const std::vector<LinComb> exponents{f("[a]"), Rational(-1, 2) * f("[a]"), f("[b]") + 2 * f("[a]"), f("[a[b]]"),
                                       f("[a]") * Rational(1, 3) + f("[b[b]]")};
  for (const auto& e : exponents) {
    std::size_t lowest = D;
    for (const auto& [w, c] : e) lowest = std::min(lowest, w.degree());
    if (lowest + 2 > D) continue;
    const LinComb xi = gl_exp(e, D);
    const DisjointnessResult res = disjointness_witness(xi, ab, D);
    nonunit.check(!res.equal, [&] { return "exp(" + to_text(e) + ") behaved like T_v"; });
  }
  report.checks.push_back(std::move(unit_case));
  report.checks.push_back(std::move(nonunit));
}

// ---- regstruct -----------------------------------------------------------------

RegBasis reg_basis(std::size_t n) { return RegBasis{1, 2, n}; }

void regstruct_postlie(SuiteReport& report, std::size_t n) {
  const std::size_t gen_total = n + 1;
  std::vector<RegTree> gens;
  for (std::size_t d = 1; d <= gen_total; ++d)
    for (auto& g : enumerate_generators(d, 1, 2)) gens.push_back(std::move(g));
  const std::string range = "generators, d = 1, norms <= 2, degree sum <= " + std::to_string(gen_total);

  CheckResult pl1("postLie2 x⊲[y,z]₀", range);
  CheckResult pl2("postLie1 [x,y]₀⊲z", range);
  CheckResult jacobi("Jacobi for [·,·]₀", range);
  for (const auto& x : gens)
    for (const auto& y : gens)
      for (const auto& z : gens) {
        if (x.degree() + y.degree() + z.degree() > gen_total) continue;
        const RegLinComb X(x), Y(y), Z(z);
        const auto name = [&] { return x.text() + ", " + y.text() + ", " + z.text(); };
        RegLinComb r1 = bracket0(deformed_graft(X, Y), Z);
        r1 += bracket0(Y, deformed_graft(X, Z));
        pl1.check(reg_graft(X, bracket0(Y, Z)) == r1, name);
        auto assoc = [&](const RegLinComb& p, const RegLinComb& q) {
          RegLinComb s = deformed_graft(p, deformed_graft(q, Z));
          s -= deformed_graft(deformed_graft(p, q), Z);
          return s;
        };
        RegLinComb r2 = assoc(X, Y);
        r2 -= assoc(Y, X);
        pl2.check(reg_graft(bracket0(X, Y), Z) == r2, name);
        // The inner brackets may leave the Lie span only through ⊙-commutators, which bracket0 rejects,
        // so the cyclic sum is taken with the associative commutator there.
        auto lie = [](const RegLinComb& p, const RegLinComb& q) {
          RegLinComb s = reg_assoc_product(p, q);
          s -= reg_assoc_product(q, p);
          return s;
        };
        RegLinComb cyc = lie(X, lie(Y, Z));
        cyc += lie(Y, lie(Z, X));
        cyc += lie(Z, lie(X, Y));
        const bool brackets_agree = bracket0(X, Y) == lie(X, Y);
        jacobi.check(cyc.is_zero() && brackets_agree, name);
      }

  const auto basis = reg_basis(n).trees();
  const std::string brange = "basis trees, d = 1, norms <= 2, degree sum <= " + std::to_string(n);
  CheckResult odot_assoc("⊙ associativity", brange);
  CheckResult gl_assoc("∗ associativity", brange);
  for (const auto& A : basis)
    for (const auto& B : basis)
      for (const auto& C : basis) {
        if (A.degree() + B.degree() + C.degree() > n) continue;
        const RegLinComb a(A), b(B), c(C);
        const auto name = [&] { return A.text() + ", " + B.text() + ", " + C.text(); };
        odot_assoc.check(reg_assoc_product(reg_assoc_product(a, b), c) == reg_assoc_product(a, reg_assoc_product(b, c)), name);
        gl_assoc.check(reg_gl_product(reg_gl_product(a, b), c) == reg_gl_product(a, reg_gl_product(b, c)), name);
      }

  CheckResult commute("X^i ∗ X^j = X^{i+j} = X^j ∗ X^i", "d = 2, |i|, |j| <= 2");
  for (const auto& i : indices_below(MultiIndex({2, 2})))
    for (const auto& j : indices_below(MultiIndex({2, 2}))) {
      const RegLinComb xi(RegTree::monomial(i)), xj(RegTree::monomial(j));
      const RegLinComb sum(RegTree::monomial(i + j));
      commute.check(reg_gl_product(xi, xj) == sum && reg_gl_product(xj, xi) == sum,
                    [&] { return "i=(" + i.text() + "), j=(" + j.text() + ")"; });
    }
  CheckResult contrast("[a]∗[b] ≠ [b]∗[a] for undecorated forests", "{a,b}");
  const Alphabet ab{"a", "b"};
  const Forest fa = parse_forest("[a]", ab), fb = parse_forest("[b]", ab);
  contrast.check(!(gl_product(fa, fb) == gl_product(fb, fa)), [] { return std::string("they commute"); });

  for (auto* c : {&pl2, &pl1, &jacobi, &odot_assoc, &gl_assoc, &commute, &contrast}) report.checks.push_back(std::move(*c));
}

void regstruct_phi(SuiteReport& report, std::size_t n) {
  const RegBasis rb = reg_basis(n);
  const auto basis = rb.trees();
  const std::string range = "basis trees, d = 1, norms <= 2, degree <= " + std::to_string(n);
  const DeformedCoproduct cop(rb);

  CheckResult duality("⟨A∗B,x⟩ = ⟨A⊗B,Δ_DMKW x⟩", range);
  for (const auto& A : basis)
    for (const auto& B : basis) {
      if (A.degree() + B.degree() > n) continue;
      const RegLinComb product = reg_gl_product(A, B);
      for (const auto& x : basis)
        duality.check(product.coeff(x) == cop(x).coeff({A, B}),
                      [&] { return A.text() + " ∗ " + B.text() + " at " + x.text(); });
    }

  CheckResult counit_leg("(id⊗ε)Δ_DMKW = id", range);
  for (const auto& x : basis) {
    RegLinComb left;
    for (const auto& [p, c] : cop(x))
      if (p.second.is_unit()) left.add(p.first, c);
    counit_leg.check(left == RegLinComb(x), [&] { return x.text(); });
  }

  CheckResult triangular("φ_reg unitriangular by letter count", range);
  triangular.check(phi_reg_unitriangular(rb), [] { return std::string("a basis tree broke the triangular shape"); });
  CheckResult roundtrip("φ_reg⁻¹∘φ_reg = id", range);
  CheckResult coalgebra("Δ⧢∘φ_reg = (φ_reg⊗φ_reg)∘Δ⧢", range);
  for (const auto& x : basis) {
    const RegLinComb image = phi_reg(x, n);
    roundtrip.check(phi_reg_inverse(image, n) == RegLinComb(x), [&] { return x.text(); });
    RegTensor lhs;
    for (const auto& [t, c] : image) lhs.add_scaled(reg_deshuffle(t), c);
    RegTensor rhs;
    for (const auto& [p, c] : reg_deshuffle(x))
      for (const auto& [l, cl] : phi_reg(p.first, n))
        for (const auto& [r, cr] : phi_reg(p.second, n)) rhs.add({l, r}, c * cl * cr);
    coalgebra.check(lhs == rhs, [&] { return x.text() + ": " + differ(to_text(lhs), to_text(rhs)); });
  }

  CheckResult morphism("φ_reg(A∗B) = φ_reg(A)⊙φ_reg(B)", "basis pairs, d = 1, norms <= 2, |A|+|B| <= " + std::to_string(n));
  for (const auto& A : basis)
    for (const auto& B : basis) {
      if (A.degree() + B.degree() > n) continue;
      const RegLinComb lhs = phi_reg(reg_gl_product(A, B), 2 * n);
      const RegLinComb rhs = reg_assoc_product(phi_reg(A, n), phi_reg(B, n));
      morphism.check(lhs == rhs, [&] { return A.text() + " ∗ " + B.text() + ": " + differ(to_text(lhs), to_text(rhs)); });
    }

  for (auto* c : {&duality, &counit_leg, &triangular, &roundtrip, &coalgebra, &morphism}) report.checks.push_back(std::move(*c));
}

// ---- paper-examples -------------------------------------------------------------

void paper_examples(SuiteReport& report, const SuiteOptions& options) {
  std::ifstream in(options.fixture_path);
  if (!in) throw std::runtime_error("cannot open fixture file " + options.fixture_path);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    CheckResult check("malformed fixture", "line " + std::to_string(number));
    try {
      const FixtureCase fc = parse_fixture_line(line);
      check.name = fc.label;
      const ReplayOutcome outcome = replay(fc, options.degree_cap);
      check.check(outcome.matched, [&] { return differ(outcome.actual, outcome.expected); });
    } catch (const std::exception& e) {
      check.check(false, [&] { return std::string("error: ") + e.what(); });
    }
    report.checks.push_back(std::move(check));
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{
      "hopf-axioms", "post-lie-axioms", "gl-duality", "natural-growth", "primitives", "phi-iso", "cointeraction",
      "cotranslation", "translation", "disjointness", "regstruct-postlie", "regstruct-phi", "paper-examples"};
  return names;
}

std::size_t default_max_degree(const std::string& suite) {
  if (suite == "cointeraction" || suite == "cotranslation" || suite == "disjointness") return 4;
  if (suite == "translation" || suite == "regstruct-postlie" || suite == "regstruct-phi") return 3;
  return 5;
}

std::size_t degree_cap_from_env() {
  const char* raw = std::getenv("MKW_DEGREE_CAP");
  if (!raw || !*raw) return 7;
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("MKW_DEGREE_CAP is not a number: ") + raw);
  }
}

SuiteReport run_suite(const std::string& suite, std::size_t max_degree, const SuiteOptions& options) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  if (max_degree > options.degree_cap)
    throw std::out_of_range("max degree " + std::to_string(max_degree) + " exceeds the degree cap " +
                            std::to_string(options.degree_cap) + " (set MKW_DEGREE_CAP to raise it)");
  if (max_degree == 0 && suite != "paper-examples") throw std::invalid_argument("max degree must be at least 1");

  SuiteReport report;
  report.suite = suite;
  const std::size_t n = max_degree;
  if (suite == "hopf-axioms") {
    for (const auto& r : default_ranges(n, options)) hopf_axioms(report, r);
  } else if (suite == "post-lie-axioms") {
    // triples of nonempty elements need degree 3 at least
    for (const auto& r : default_ranges(n, options))
      if (r.degree >= 3) post_lie_axioms(report, r);
  } else if (suite == "gl-duality") {
    for (const auto& r : default_ranges(n, options)) gl_duality(report, r);
  } else if (suite == "natural-growth") {
    natural_growth_suite(report, n);
  } else if (suite == "primitives") {
    primitives_suite(report, n, options);
  } else if (suite == "phi-iso") {
    phi_suite(report, n, options);
  } else if (suite == "cointeraction") {
    cointeraction_suite(report, n, options);
  } else if (suite == "cotranslation") {
    cotranslation_suite(report, n, options);
  } else if (suite == "translation") {
    translation_suite(report, n);
  } else if (suite == "disjointness") {
    disjointness_suite(report, n);
  } else if (suite == "regstruct-postlie") {
    regstruct_postlie(report, n);
  } else if (suite == "regstruct-phi") {
    regstruct_phi(report, n);
  } else {
    paper_examples(report, options);
  }
  return report;
}

}  // namespace mkw
