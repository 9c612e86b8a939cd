#pragma once

#include <cstddef>
#include <limits>

#include "mkw/lincomb.hpp"

namespace mkw {

inline constexpr std::size_t kUntruncated = std::numeric_limits<std::size_t>::max();

// Left grafting A ⊲ B. Every root of A lands on some vertex of B; roots sharing
// a target keep their order and sit to the left of the target's existing children.
LinComb left_graft(const Forest& a, const Forest& b);
LinComb left_graft(const LinComb& a, const LinComb& b, std::size_t max_degree = kUntruncated);

// A ∗ B = A_(1) · (A_(2) ⊲ B) with the deshuffle coproduct.
LinComb gl_product(const Forest& a, const Forest& b);
LinComb gl_product(const LinComb& a, const LinComb& b, std::size_t max_degree = kUntruncated);

// S(τ1…τn) = (−1)^n τn…τ1.
LinComb concat_antipode(const Forest& w);
LinComb concat_antipode(const LinComb& x);

LinComb gl_antipode(const Forest& w);
LinComb gl_antipode(const LinComb& x);

// Rebuilds A·B from ∗, ⊲ and the ∗-antipode; equals concat(A, B).
LinComb gl_inverse_product(const LinComb& a, const LinComb& b);

// x⊲y − y⊲x + xy − yx.
LinComb jacobi_bracket(const LinComb& x, const LinComb& y);

// Σ_k a^{∗k}/k! truncated at total degree `max_degree`; `a` must have no unit term.
LinComb gl_exp(const LinComb& a, std::size_t max_degree);

// Δ⧢(A) = A⊗A up to total degree `max_degree`.
bool is_group_like(const LinComb& a, std::size_t max_degree);

}  // namespace mkw
