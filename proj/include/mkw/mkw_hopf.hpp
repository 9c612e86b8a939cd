#pragma once

#include <functional>

#include "mkw/lincomb.hpp"
#include "mkw/report.hpp"

namespace mkw {

// Σ over left-admissible cuts of pruned ⊗ trunk, the empty cut included.
// The trunk always keeps the root, so this is the coproduct minus τ⊗1.
const TensorElem& left_admissible_cuts(Tree t);

TensorElem mkw_coproduct(Tree t);
TensorElem mkw_coproduct(const Forest& w);
TensorElem mkw_coproduct(const LinComb& x);

// Δ − x⊗1 − 1⊗x. Unit components of x are dropped.
TensorElem reduced_coproduct(const Forest& w);
TensorElem reduced_coproduct(const LinComb& x);

// Δ̂ applied k times, as a (k+1)-leg tensor; k = 0 gives x itself.
MultiTensor iterated_reduced_coproduct(const LinComb& x, std::size_t k);

LinComb mkw_antipode(const Forest& w);
LinComb mkw_antipode(const LinComb& x);

using CoproductFn = std::function<TensorElem(const Forest&)>;

// ⟨A∗B, x⟩ = ⟨A⊗B, Δ(x)⟩ for |A| + |B| = |x| ≤ max_degree. The coproduct is a
// parameter so a corrupted one can serve as a negative control.
CheckResult gl_mkw_duality_check(std::size_t max_degree, const Alphabet& alphabet,
                                 const CoproductFn& coproduct = nullptr);

}  // namespace mkw
