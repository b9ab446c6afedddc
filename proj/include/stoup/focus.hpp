#pragma once

#include "stoup/cut.hpp"
#include "stoup/focused.hpp"

namespace stoup {

// One branch obtained by inverting the right-invertible phase: an LI-phase
// derivation, or the topR leaf (null `li`), plus the antecedents that
// inverted limpR rules moved into the context.
struct RIBranch {
  std::vector<FormulaPtr> extension;
  FDerivPtr li;
};

// Invertibility of the RI phase: decompose f : S | Gamma |-RI A into one
// branch per component of the succedent. conjR_star is its inverse and
// rebuilds the RI derivation (the same tree, node for node).
std::vector<RIBranch> invert_RI(const FDerivPtr& f, const FormulaPtr& succedent,
                                const LogicProfile& profile);
FDerivPtr conjR_star(std::vector<RIBranch> branches, const FormulaPtr& succedent,
                     const LogicProfile& profile);

// Admissible rules of the RI judgment. Left and structural rules proceed by
// structural recursion; the right non-invertible ones invert their premise
// and rebuild via the generalized rules below.
FDerivPtr ax_RI(const FormulaPtr& a, const LogicProfile& profile);
FDerivPtr IR_RI();
FDerivPtr pass_RI(const FDerivPtr& f, const FormulaPtr& succedent, const LogicProfile& profile);
FDerivPtr IL_RI(const FDerivPtr& f, const FormulaPtr& succedent, const LogicProfile& profile);
FDerivPtr tensorL_RI(const FDerivPtr& f, const FormulaPtr& succedent,
                     const LogicProfile& profile);
FDerivPtr andL1_RI(const FDerivPtr& f, const FormulaPtr& succedent, const LogicProfile& profile);
FDerivPtr andL2_RI(const FDerivPtr& f, const FormulaPtr& succedent, const LogicProfile& profile);
FDerivPtr orL_RI(const FDerivPtr& f, const FDerivPtr& g, const FormulaPtr& succedent,
                 const LogicProfile& profile);
FDerivPtr botL_RI(const FormulaPtr& succedent, const LogicProfile& profile);
FDerivPtr limpL_RI(const FDerivPtr& left, const FDerivPtr& right, const FormulaPtr& succedent,
                   std::size_t split, const LogicProfile& profile);
FDerivPtr orR1_RI(const FDerivPtr& f, const FormulaPtr& stoup,
                  const std::vector<FormulaPtr>& ctx, const FormulaPtr& succedent,
                  const LogicProfile& profile);
FDerivPtr orR2_RI(const FDerivPtr& f, const FormulaPtr& stoup,
                  const std::vector<FormulaPtr>& ctx, const FormulaPtr& succedent,
                  const LogicProfile& profile);
FDerivPtr tensorR_RI(const FDerivPtr& f, const FDerivPtr& g, const FormulaPtr& stoup,
                     const std::vector<FormulaPtr>& ctx, const FormulaPtr& succedent,
                     const LogicProfile& profile);

// Generalized right rules (the permute-or-emit case analysis behind the
// bijection). Exposed for tests.
struct GenRight {
  enum class Kind : std::uint8_t { Or1, Or2, Tensor } kind;
  FormulaPtr succedent;  // the whole disjunction / tensor
  FDerivPtr second;      // Tensor only: RI derivation of - | Delta |- B
};
FDerivPtr gen_right(const GenRight& target, FormulaPtr stoup, std::vector<FormulaPtr> ctx,
                    std::vector<RIBranch> branches, const LogicProfile& profile);

// Tag list an RI derivation earns at a right non-invertible rule: one tag
// per succedent component, read off the first F-phase rule of each branch.
// `ctx` holds the shared (unmarked) context formulas of the rule's premise.
TagList branch_tags(const FDerivPtr& f, const FormulaPtr& succedent,
                    const std::vector<FormulaPtr>& ctx, const LogicProfile& profile);

// Normalization: send every rule of the plain calculus to its admissible
// RI counterpart. Not defined under the exchange profile.
FDerivPtr focus(const DerivPtr& d, const Sequent& s, const LogicProfile& profile);

}  // namespace stoup
