#include "mkw/embedding.hpp"

#include <sstream>
#include <stdexcept>

#include "mkw/mkw_hopf.hpp"
#include "mkw/postlie.hpp"

namespace mkw {

LinComb phi(const Forest& w) {
  if (w.size() <= 1) return LinComb(w);
  thread_local std::unordered_map<Forest, LinComb, ForestHash> cache;
  if (auto it = cache.find(w); it != cache.end()) return it->second;
  const Forest head(w[0]);
  const Forest rest = subword(w, 1, w.size() - 1);
  LinComb out = concat(LinComb(head), phi(rest));
  out -= phi(left_graft(head, rest));
  cache.emplace(w, out);
  return out;
}

LinComb phi(const LinComb& x) {
  return linear_map(x, [](const Forest& w) { return phi(w); });
}

LinComb phi_inverse(const Forest& w) {
  if (w.size() <= 1) return LinComb(w);
  thread_local std::unordered_map<Forest, LinComb, ForestHash> cache;
  if (auto it = cache.find(w); it != cache.end()) return it->second;
  LinComb lower = phi(w);
  if (lower.coeff(w) != 1) throw std::logic_error("phi_inverse: graded matrix is not unitriangular at " + w.text());
  lower.add(w, -1);
  LinComb out(w);
  out -= phi_inverse(lower);
  cache.emplace(w, out);
  return out;
}

LinComb phi_inverse(const LinComb& x) {
  return linear_map(x, [](const Forest& w) { return phi_inverse(w); });
}

bool phi_unitriangular(std::size_t degree, const Alphabet& alphabet) {
  for (const auto& w : enumerate_forests(degree, alphabet)) {
    for (const auto& [v, c] : phi(w)) {
      if (v == w) {
        if (c != 1) return false;
      } else if (v.size() >= w.size()) {
        return false;
      }
    }
    if (phi(w).coeff(w) != 1) return false;
  }
  return true;
}

std::string to_string(CharFlavor f) { return f == CharFlavor::mkw ? "mkw" : "tensor"; }

TruncChar::TruncChar(LinComb series, std::size_t N, CharFlavor flavor, Alphabet alphabet)
    : series_(std::move(series)), N_(N), flavor_(flavor), alphabet_(std::move(alphabet)) {
  if (series_.coeff(Forest{}) != 1) throw std::invalid_argument("character must take the value 1 on the unit");
  if (max_degree(series_) > N_) throw std::invalid_argument("character series exceeds its truncation degree");
}

TruncChar TruncChar::counit(std::size_t N, CharFlavor flavor, Alphabet alphabet) {
  return TruncChar(unit(), N, flavor, std::move(alphabet));
}

bool TruncChar::is_character() const { return is_group_like(series_, N_); }

nlohmann::json TruncChar::to_json() const {
  nlohmann::json values = nlohmann::json::object();
  for (const auto& [w, c] : series_.sorted()) values[w.empty() ? "1" : w.text()] = mkw::to_string(c);
  return {{"N", N_}, {"flavor", mkw::to_string(flavor_)}, {"alphabet", alphabet_.describe()}, {"values", values}};
}

std::string TruncChar::to_csv() const {
  std::ostringstream out;
  out << "forest,value\n";
  for (const auto& [w, c] : series_.sorted()) out << (w.empty() ? "1" : w.text()) << ',' << mkw::to_string(c) << '\n';
  return out.str();
}

namespace {

void require_compatible(const TruncChar& x, const TruncChar& y) {
  if (x.truncation() != y.truncation()) throw std::invalid_argument("characters have different truncation degrees");
  if (x.flavor() != y.flavor()) throw std::invalid_argument("characters have different flavors");
}

TensorElem flavor_coproduct(CharFlavor f, const Forest& w) {
  return f == CharFlavor::mkw ? mkw_coproduct(w) : deconcatenation(w);
}

}  // namespace

TruncChar char_convolve(const TruncChar& x, const TruncChar& y) {
  require_compatible(x, y);
  const std::size_t N = x.truncation();
  LinComb series;
  for (std::size_t n = 0; n <= N; ++n)
    for (const auto& w : enumerate_forests(n, x.alphabet())) {
      Rational v = 0;
      for (const auto& [p, c] : flavor_coproduct(x.flavor(), w)) v += c * x.value(p.first) * y.value(p.second);
      series.add(w, v);
    }
  return TruncChar(std::move(series), N, x.flavor(), x.alphabet());
}

TruncChar char_inverse(const TruncChar& x) {
  LinComb series;
  for (std::size_t n = 0; n <= x.truncation(); ++n)
    for (const auto& w : enumerate_forests(n, x.alphabet())) {
      const LinComb s = x.flavor() == CharFlavor::mkw ? mkw_antipode(w) : concat_antipode(w);
      Rational v = 0;
      for (const auto& [u, c] : s) v += c * x.value(u);
      series.add(w, v);
    }
  return TruncChar(std::move(series), x.truncation(), x.flavor(), x.alphabet());
}

TruncChar canonical_lift(const std::map<std::string, Rational>& increments, std::size_t N, const Alphabet& alphabet) {
  if (N == 0) throw std::invalid_argument("canonical_lift: truncation must be at least 1");
  LinComb first;
  for (const auto& [token, c] : increments) {
    const Decoration d = intern_token(token);
    if (!alphabet.contains(d)) throw std::invalid_argument("canonical_lift: '" + token + "' is not in " + alphabet.describe());
    first.add(Forest(Tree(d)), c);
  }
  return TruncChar(gl_exp(first, N), N, CharFlavor::mkw, alphabet);
}

PiScaling::PiScaling(std::size_t N, const Alphabet& alphabet) : N_(N) {
  for (std::size_t n = 1; n <= N; ++n)
    for (const auto& t : enumerate_trees(n, alphabet)) trees_.push_back(t);
}

Rational PiScaling::exponent(std::size_t j) const {
  return Rational(static_cast<unsigned long>(N_)) / static_cast<unsigned long>(trees_.at(j).degree());
}

Rational deg_pi(const Forest& w, const PiScaling& scaling) {
  Rational d = 0;
  for (const auto& t : w) {
    if (t.degree() > scaling.truncation())
      throw std::invalid_argument("deg_pi: tree " + t.text() + " has more than " + std::to_string(scaling.truncation()) +
                                  " vertices");
    d += Rational(static_cast<unsigned long>(t.degree())) / static_cast<unsigned long>(scaling.truncation());
  }
  return d;
}

TruncChar embed_rough_path(const TruncChar& x) {
  if (x.flavor() != CharFlavor::mkw) throw std::invalid_argument("embed_rough_path expects an mkw character");
  return TruncChar(phi(x.series()), x.truncation(), CharFlavor::tensor, x.alphabet());
}

TruncChar unembed_rough_path(const TruncChar& y) {
  if (y.flavor() != CharFlavor::tensor) throw std::invalid_argument("unembed_rough_path expects a tensor character");
  return TruncChar(phi_inverse(y.series()), y.truncation(), CharFlavor::mkw, y.alphabet());
}

}  // namespace mkw
