#include "mkw/cointeraction.hpp"

#include <stdexcept>

#include "mkw/mkw_hopf.hpp"
#include "mkw/postlie.hpp"

namespace mkw {

namespace {

std::string show(const Forest& w) { return w.empty() ? std::string("1") : w.text(); }

std::string range_text(std::size_t max_degree, const Alphabet& alphabet) {
  return "|x| <= " + std::to_string(max_degree) + ", " + alphabet.describe();
}

CoactionFn or_default(const CoactionFn& rho) {
  return rho ? rho : CoactionFn([](const Forest& w) { return rho_graft(w); });
}

LinComb shuffle_of(const Forest& a, const Forest& b) { return shuffle(a, b); }
LinComb concat_of(const Forest& a, const Forest& b) { return LinComb(concat(a, b)); }

}  // namespace

TensorElem rho_graft(const Forest& w) {
  if (w.empty()) return TensorElem(ForestPair{Forest{}, Forest{}});
  if (w.size() == 1) return left_admissible_cuts(w[0]);
  thread_local std::unordered_map<Forest, TensorElem, ForestHash> cache;
  if (auto it = cache.find(w); it != cache.end()) return it->second;
  TensorElem out(ForestPair{Forest{}, Forest{}});
  for (const auto& t : w) out = legwise_product(out, left_admissible_cuts(t), shuffle_of, concat_of);
  cache.emplace(w, out);
  return out;
}

TensorElem rho_graft(const LinComb& x) {
  return linear_to_tensor(x, [](const Forest& w) { return rho_graft(w); });
}

TransposedCoproduct::TransposedCoproduct(ProductFn product, Alphabet alphabet)
    : product_(std::move(product)), alphabet_(std::move(alphabet)) {}

void TransposedCoproduct::fill(std::size_t degree) const {
  if (filled_.size() <= degree) filled_.resize(degree + 1, false);
  if (filled_[degree]) return;
  for (const auto& x : enumerate_forests(degree, alphabet_)) table_.try_emplace(x);
  for (std::size_t a = 0; a <= degree; ++a)
    for (const auto& A : enumerate_forests(a, alphabet_))
      for (const auto& B : enumerate_forests(degree - a, alphabet_))
        for (const auto& [x, c] : product_(A, B)) {
          if (x.degree() != degree) throw std::logic_error("transposed coproduct: product is not degree-additive");
          table_[x].add({A, B}, c);
        }
  filled_[degree] = true;
}

const TensorElem& TransposedCoproduct::operator()(const Forest& x) const {
  fill(x.degree());
  auto it = table_.find(x);
  if (it == table_.end()) throw std::invalid_argument("transposed coproduct: " + x.text() + " is outside " + alphabet_.describe());
  return it->second;
}

CheckResult graft_duality_check(std::size_t max_degree, const Alphabet& alphabet, const CoactionFn& rho) {
  const CoactionFn r = or_default(rho);
  CheckResult res{"<A(x)B, rho(x)> = <A|>B, x>", range_text(max_degree, alphabet)};
  for (std::size_t n = 0; n <= max_degree; ++n) {
    std::unordered_map<Forest, TensorElem, ForestHash> from_grafts;
    for (std::size_t a = 0; a <= n; ++a)
      for (const auto& A : enumerate_forests(a, alphabet))
        for (const auto& B : enumerate_forests(n - a, alphabet))
          for (const auto& [x, c] : left_graft(A, B)) from_grafts[x].add({A, B}, c);
    for (const auto& x : enumerate_forests(n, alphabet)) {
      const TensorElem d = r(x);
      const TensorElem& expected = from_grafts[x];
      res.check(d == expected, [&] {
        return "x = " + show(x) + ": rho(x) = " + to_text(d) + " but transpose of |> gives " + to_text(expected);
      });
    }
  }
  return res;
}

std::vector<CheckResult> verify_cointeraction(std::size_t max_degree, const Alphabet& alphabet, const CoactionFn& rho) {
  const CoactionFn r = or_default(rho);
  const std::string range = range_text(max_degree, alphabet);
  const TransposedCoproduct delta_concat(concat_of, alphabet);

  CheckResult unit_law{"rho(1) = 1(x)1", "x = 1"};
  unit_law.check(r(Forest{}) == TensorElem(ForestPair{Forest{}, Forest{}}), [&] { return "rho(1) = " + to_text(r(Forest{})); });

  CheckResult multiplicative{"rho(x sh y) = rho(x) (sh(x)sh) rho(y)", "|x|+|y| <= " + std::to_string(max_degree) + ", " +
                                                                         alphabet.describe()};
  for (std::size_t n = 0; n <= max_degree; ++n)
    for (std::size_t a = 0; a <= n; ++a)
      for (const auto& x : enumerate_forests(a, alphabet))
        for (const auto& y : enumerate_forests(n - a, alphabet)) {
          TensorElem lhs = linear_to_tensor(shuffle(x, y), r);
          TensorElem rhs = legwise_product(r(x), r(y), shuffle_of, shuffle_of);
          multiplicative.check(lhs == rhs, [&] {
            return "x = " + show(x) + ", y = " + show(y) + ": " + to_text(lhs) + " vs " + to_text(rhs);
          });
        }

  CheckResult counit_law{"(id(x)eps) rho = 1 eps", range};
  CheckResult comultiplicative{"(id(x)Delta_concat) rho = m13 (rho(x)rho) Delta_concat", range};
  CheckResult transpose_sanity{"transposed concatenation = deconcatenation", range};
  for (std::size_t n = 0; n <= max_degree; ++n)
    for (const auto& x : enumerate_forests(n, alphabet)) {
      const TensorElem rx = r(x);
      LinComb right_counit;
      for (const auto& [p, c] : rx)
        if (p.second.empty()) right_counit.add(p.first, c);
      const LinComb expected = x.empty() ? unit() : LinComb{};
      counit_law.check(right_counit == expected,
                       [&] { return "x = " + show(x) + ": (id(x)eps)rho(x) = " + to_text(right_counit); });

      const TensorElem& dx = delta_concat(x);
      transpose_sanity.check(dx == deconcatenation(x), [&] { return "x = " + show(x) + ": " + to_text(dx); });

      MultiTensor lhs, rhs;
      for (const auto& [p, c] : rx)
        for (const auto& [q, cq] : delta_concat(p.second)) lhs.add({p.first, q.first, q.second}, c * cq);
      for (const auto& [d, cd] : dx) {
        const TensorElem left = r(d.first), right = r(d.second);
        for (const auto& [p, cp] : left)
          for (const auto& [q, cq] : right)
            for (const auto& [s, cs] : shuffle(p.first, q.first)) rhs.add({s, p.second, q.second}, cd * cp * cq * cs);
      }
      comultiplicative.check(lhs == rhs,
                             [&] { return "x = " + show(x) + ": " + to_text(lhs) + " vs " + to_text(rhs); });
    }
  return {unit_law, multiplicative, counit_law, comultiplicative, transpose_sanity};
}

std::vector<CheckResult> verify_cotranslation_cosubstitution(std::size_t max_degree, const Alphabet& alphabet,
                                                             const CoactionFn& rho) {
  const CoactionFn r = or_default(rho);
  const std::string range = range_text(max_degree, alphabet);
  const TransposedCoproduct delta_concat(concat_of, alphabet);
  const TransposedCoproduct delta_gl([](const Forest& a, const Forest& b) { return gl_product(a, b); }, alphabet);

  CheckResult translation{"(id(x)rho) rho = m12 (id(x)rho(x)id)(Delta_concat(x)id) rho", range};
  CheckResult substitution{"(id(x)rho) rho = (Delta_*(x)id) rho", range};
  CheckResult transpose_sanity{"transposed * = Delta_MKW", range};
  for (std::size_t n = 0; n <= max_degree; ++n)
    for (const auto& x : enumerate_forests(n, alphabet)) {
      transpose_sanity.check(delta_gl(x) == mkw_coproduct(x),
                             [&] { return "x = " + show(x) + ": " + to_text(delta_gl(x)); });
      MultiTensor lhs, via_translation, via_substitution;
      for (const auto& [p, c] : r(x)) {
        for (const auto& [q, cq] : r(p.second)) lhs.add({p.first, q.first, q.second}, c * cq);
        for (const auto& [d, cd] : delta_concat(p.first))
          for (const auto& [q, cq] : r(d.second))
            for (const auto& [s, cs] : shuffle(d.first, q.first))
              via_translation.add({s, q.second, p.second}, c * cd * cq * cs);
        for (const auto& [d, cd] : delta_gl(p.first)) via_substitution.add({d.first, d.second, p.second}, c * cd);
      }
      translation.check(lhs == via_translation,
                        [&] { return "x = " + show(x) + ": " + to_text(lhs) + " vs " + to_text(via_translation); });
      substitution.check(lhs == via_substitution,
                         [&] { return "x = " + show(x) + ": " + to_text(lhs) + " vs " + to_text(via_substitution); });
    }
  return {translation, substitution, transpose_sanity};
}

bool is_lie_primitive(const LinComb& x) {
  if (!is_zero(counit(x))) return false;
  return linear_to_tensor(x, [](const Forest& w) { return reduced_deshuffle(w); }).is_zero();
}

Translation::Translation(std::map<Decoration, LinComb> shifts, std::size_t max_degree)
    : shifts_(std::move(shifts)), max_degree_(max_degree) {
  for (auto it = shifts_.begin(); it != shifts_.end();) {
    if (!is_lie_primitive(it->second))
      throw std::invalid_argument("translation: shift for '" + token_name(it->first) + "' is not primitive: " +
                                  to_text(it->second));
    it = it->second.is_zero() ? shifts_.erase(it) : std::next(it);
  }
}

const LinComb& Translation::shift(Decoration letter) const {
  static const LinComb zero;
  auto it = shifts_.find(letter);
  return it == shifts_.end() ? zero : it->second;
}

LinComb Translation::operator()(const Forest& w) const {
  if (w.empty()) return unit();
  if (w.degree() > max_degree_) return {};
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  LinComb out;
  if (w.size() == 1) {
    LinComb base(Forest(Tree(w[0].root())));
    base += shift(w[0].root());
    const Forest below = b_minus(w[0]);
    out = below.empty() ? truncate(base, max_degree_) : left_graft((*this)(below), base, max_degree_);
  } else {
    const Forest head(w[0]);
    const Forest rest = subword(w, 1, w.size() - 1);
    out = gl_product((*this)(head), (*this)(rest), max_degree_);
    out -= (*this)(left_graft(head, rest));
  }
  cache_.emplace(w, out);
  return out;
}

LinComb Translation::operator()(const LinComb& x) const {
  return linear_map(x, [this](const Forest& w) { return (*this)(w); });
}

Translation Translation::after(const Translation& u) const {
  std::map<Decoration, LinComb> combined = shifts_;
  for (const auto& [letter, value] : u.shifts()) combined[letter] += (*this)(value);
  return Translation(std::move(combined), std::min(max_degree_, u.max_degree()));
}

DisjointnessResult disjointness_witness(const LinComb& xi, const Alphabet& alphabet, std::size_t max_degree) {
  if (!is_group_like(xi, max_degree)) throw std::invalid_argument("disjointness: xi is not group-like up to degree " +
                                                                  std::to_string(max_degree));
  DisjointnessResult res;
  for (Decoration i : alphabet.letters()) {
    const LinComb letter{Forest(Tree(i))};
    res.forced_shifts[i] = left_graft(xi, letter, max_degree) - letter;
  }
  const Translation translate(res.forced_shifts, max_degree);

  for (Decoration i : alphabet.letters()) {
    const Forest x{Tree(i)};
    if (left_graft(xi, LinComb(x), max_degree) != translate(x)) throw std::logic_error("disjointness: forced shift mismatch");
  }
  for (Decoration i : alphabet.letters())
    for (Decoration j : alphabet.letters()) {
      const Tree leaf(j);
      const Forest x(Tree(i, std::span<const Tree>(&leaf, 1)));
      LinComb grafted = left_graft(xi, LinComb(x), max_degree);
      LinComb translated = translate(x);
      if (grafted != translated) {
        res.equal = false;
        res.witness = x.text();
        res.grafted = std::move(grafted);
        res.translated = std::move(translated);
        return res;
      }
    }
  return res;
}

}  // namespace mkw
