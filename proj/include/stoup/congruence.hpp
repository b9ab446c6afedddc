#pragma once

#include <cstdint>
#include <vector>

#include "stoup/derivation.hpp"
#include "stoup/focused.hpp"

namespace stoup {

// Generating equations of the derivation congruence, oriented as written:
// left-to-right is the normalizing direction. The Ex* equations relating ex
// to pass/IL/otimesL/otimesR are imported from earlier work on the exchange
// extension; the rest are the equations of this calculus.
enum class Eq : std::uint8_t {
  // eta-conversions
  EtaUnit,     // ax_I = IL(IR)
  EtaTensor,   // ax_{A*B} = otimesL(otimesR(ax, pass ax))
  EtaWith,     // ax_{A/\B} = andR(andL1 ax, andL2 ax)
  EtaPlus,     // ax_{A\/B} = orL(orR1 ax, orR2 ax)
  // permutative conversions
  TensorRPass,     // otimesR(pass f, g) = pass(otimesR(f, g))
  TensorRIL,       // otimesR(IL f, g) = IL(otimesR(f, g))
  TensorRTensorL,  // otimesR(otimesL f, g) = otimesL(otimesR(f, g))
  TensorRAndL,     // otimesR(andLi f, g) = andLi(otimesR(f, g))
  TensorROrL,      // otimesR(orL(f1, f2), g) = orL(otimesR(f1, g), otimesR(f2, g))
  // The andR family is normalized with the left rule moving toward the root:
  // andR(X f, X g) -> X(andR(f, g)). The opposite orientation is not
  // confluent against the orR/otimesR conversions.
  PassAndR,        // andR(pass f, pass g) = pass(andR(f, g))
  ILAndR,          // andR(IL f, IL g) = IL(andR(f, g))
  TensorLAndR,     // andR(otimesL f, otimesL g) = otimesL(andR(f, g))
  AndLAndR,        // andR(andLi f, andLi g) = andLi(andR(f, g))
  OrLAndR,         // andR(orL(f1, f2), orL(g1, g2)) = orL(andR(f1, g1), andR(f2, g2))
  OrRPass,         // orRi(pass f) = pass(orRi f)
  OrRIL,           // orRi(IL f) = IL(orRi f)
  OrRTensorL,      // orRi(otimesL f) = otimesL(orRi f)
  OrRAndL,         // orRi(andLj f) = andLj(orRi f)
  OrROrL,          // orRi(orL(f, g)) = orL(orRi f, orRi g)
  // units
  UnitTop,  // f = topR                      (f : S | Gamma |- Top)
  UnitBot,  // f = botL                      (f : Bot | Gamma |- C, C /= Top)
  // exchange
  ExInvolution,     // ex(ex f) = f (same position)
  ExBraid,          // Yang-Baxter on adjacent swaps
  ExDisjoint,       // disjoint swaps commute
  ExAndL,           // andLi(ex f) = ex(andLi f)
  ExAndR,           // andR(ex f, ex g) = ex(andR(f, g))
  ExOrL,            // orL(ex f, ex g) = ex(orL(f, g))
  ExOrR,            // orRi(ex f) = ex(orRi f)
  ExPass,           // pass(ex f) = ex(pass f), shifted   [imported]
  ExIL,             // IL(ex f) = ex(IL f)                [imported]
  ExTensorL,        // otimesL(ex f) = ex(otimesL f)      [imported]
  ExTensorRLeft,    // otimesR(ex f, g) = ex(otimesR(f, g))   [imported]
  ExTensorRRight,   // otimesR(f, ex g) = ex(otimesR(f, g))   [imported]
  // implication; the limpR family is oriented like the andR one
  EtaLimp,       // ax_{A-oB} = limpR(limpL(pass ax, ax))
  TensorRLimpL,  // otimesR(limpL(f, g), h) = limpL(f, otimesR(g, h))
  PassLimpR,     // limpR(pass f) = pass(limpR f), pass not on the new formula
  ILLimpR,       // limpR(IL f) = IL(limpR f)
  TensorLLimpR,  // limpR(otimesL f) = otimesL(limpR f)
  LimpLLimpR,    // limpR(limpL(f, g)) = limpL(f, limpR g), new formula stays right
  AndLLimpR,     // limpR(andLi f) = andLi(limpR f)
  OrLLimpR,      // limpR(orL(f, g)) = orL(limpR f, limpR g)
  OrRLimpL,      // orRi(limpL(f, g)) = limpL(f, orRi g)
};

const char* eq_label(Eq eq);
bool eq_allowed(Eq eq, const LogicProfile& profile);
bool eq_imported(Eq eq);

enum class Dir : std::uint8_t { LR, RL };

struct Redex {
  std::vector<std::size_t> path;  // premise indices from the root
  Eq eq;
  Dir dir;
  std::size_t param = 0;  // instance selector where a rule family needs one
};

// All single-step rewrites available anywhere in d, in both directions.
// The unit equations are listed in the contracting direction only: their
// expanding side is not finitely branching.
std::vector<Redex> applicable(const DerivPtr& d, const Sequent& s, const LogicProfile& profile);

// Apply one rewrite; the result proves the same sequent.
DerivPtr rewrite_once(const DerivPtr& d, const Sequent& s, const Redex& redex,
                      const LogicProfile& profile);

// Exhaustive left-to-right rewriting, leftmost-innermost, fixed rule order.
// Throws BudgetError when step_cap is exceeded.
DerivPtr normalize_rw(const DerivPtr& d, const Sequent& s, const LogicProfile& profile,
                      std::size_t step_cap = 10000);

struct OracleBudget {
  std::size_t max_connectives = 6;
  std::size_t node_cap = 200000;
};

// Decide the congruence by graph search over single rewrite steps,
// independently of the focusing route.
bool equiv_oracle(const DerivPtr& f, const DerivPtr& g, const Sequent& s,
                  const LogicProfile& profile, const OracleBudget& budget = {});

// Decide the congruence via focused normal forms: focus(f) = focus(g).
bool equiv(const DerivPtr& f, const DerivPtr& g, const Sequent& s, const LogicProfile& profile);

}  // namespace stoup
