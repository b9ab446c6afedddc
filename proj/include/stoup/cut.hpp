#pragma once

#include "stoup/derivation.hpp"

namespace stoup {

// scut: from f : S | Gamma |- A and g : A | Delta |- C build a derivation
// of S | Gamma, Delta |- C. Throws CheckError when the cut formula of g's
// stoup differs from f's succedent.
DerivPtr scut(const DerivPtr& f, const Sequent& sf, const DerivPtr& g, const Sequent& sg,
              const LogicProfile& profile);

// ccut: from f : - | Gamma |- A and g : S | Delta0, A, Delta1 |- C (with A at
// context index pos) build a derivation of S | Delta0, Gamma, Delta1 |- C.
DerivPtr ccut(const DerivPtr& f, const Sequent& sf, const DerivPtr& g, const Sequent& sg,
              std::size_t pos, const LogicProfile& profile);

// Admissible /\-introduction on a context formula: from
// d : S | Gamma, A_i, Delta |- C build S | Gamma, A1 /\ A2, Delta |- C,
// where `partner` is the missing conjunct. i is 1 or 2.
DerivPtr and_left_ctx(int i, const DerivPtr& d, const Sequent& sd, std::size_t pos,
                      const FormulaPtr& partner, const LogicProfile& profile);

}  // namespace stoup
