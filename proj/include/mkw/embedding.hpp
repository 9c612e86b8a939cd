#pragma once

#include <map>
#include <string>

#include "mkw/lincomb.hpp"

namespace mkw {

// Hopf isomorphism from (forests, ∗, Δ⧢) onto the tensor algebra over trees.
// φ(τ) = τ and φ(τ1 ω) = τ1·φ(ω) − φ(τ1 ⊲ ω).
LinComb phi(const Forest& w);
LinComb phi(const LinComb& x);

// Triangular inverse: φ(w) = w + terms with fewer trees.
LinComb phi_inverse(const Forest& w);
LinComb phi_inverse(const LinComb& x);

// φ(w) has coefficient 1 on w and every other term has fewer trees, for all w of this degree.
bool phi_unitriangular(std::size_t degree, const Alphabet& alphabet);

enum class CharFlavor { mkw, tensor };
std::string to_string(CharFlavor f);

// Truncated character, stored as its representing series Σ ⟨X, w⟩ w over |w| ≤ N.
// Both flavors are multiplicative for ⧢; they differ in the convolution coproduct
// (Δ_MKW versus deconcatenation).
class TruncChar {
 public:
  TruncChar(LinComb series, std::size_t N, CharFlavor flavor, Alphabet alphabet);
  static TruncChar counit(std::size_t N, CharFlavor flavor, Alphabet alphabet);

  Rational value(const Forest& w) const { return series_.coeff(w); }
  const LinComb& series() const { return series_; }
  std::size_t truncation() const { return N_; }
  CharFlavor flavor() const { return flavor_; }
  const Alphabet& alphabet() const { return alphabet_; }

  // ⟨X, x ⧢ y⟩ = ⟨X, x⟩⟨X, y⟩ whenever |x| + |y| ≤ N.
  bool is_character() const;

  nlohmann::json to_json() const;
  std::string to_csv() const;

  friend bool operator==(const TruncChar&, const TruncChar&) = default;

 private:
  LinComb series_;
  std::size_t N_;
  CharFlavor flavor_;
  Alphabet alphabet_;
};

// ⟨X∗Y, x⟩ = ⟨X⊗Y, Δ(x)⟩ with the flavor's coproduct.
TruncChar char_convolve(const TruncChar& x, const TruncChar& y);
// X∘S with the flavor's antipode.
TruncChar char_inverse(const TruncChar& x);

// exp_∗(Σ c_i [i]) truncated at N.
TruncChar canonical_lift(const std::map<std::string, Rational>& increments, std::size_t N, const Alphabet& alphabet);

// p_j = N/|τ_j| over every tree with at most N vertices, in compare order.
class PiScaling {
 public:
  PiScaling(std::size_t N, const Alphabet& alphabet);
  std::size_t truncation() const { return N_; }
  const std::vector<Tree>& trees() const { return trees_; }
  Rational exponent(std::size_t j) const;  // p_j

 private:
  std::size_t N_;
  std::vector<Tree> trees_;
};

// Σ |τ|/N over the trees of w; throws std::invalid_argument on a tree larger than N.
Rational deg_pi(const Forest& w, const PiScaling& scaling);

// mkw-flavored X to the tensor-flavored φ(X), and back.
TruncChar embed_rough_path(const TruncChar& x);
TruncChar unembed_rough_path(const TruncChar& y);

}  // namespace mkw
