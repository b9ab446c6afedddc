#include "stoup/congruence.hpp"

#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "stoup/focus.hpp"
#include "stoup/search.hpp"

namespace stoup {

const char* eq_label(Eq eq) {
  switch (eq) {
    case Eq::EtaUnit: return "eta-I";
    case Eq::EtaTensor: return "eta-otimes";
    case Eq::EtaWith: return "eta-and";
    case Eq::EtaPlus: return "eta-or";
    case Eq::TensorRPass: return "otimesR-pass";
    case Eq::TensorRIL: return "otimesR-IL";
    case Eq::TensorRTensorL: return "otimesR-otimesL";
    case Eq::TensorRAndL: return "otimesR-andL";
    case Eq::TensorROrL: return "otimesR-orL";
    case Eq::PassAndR: return "pass-andR";
    case Eq::ILAndR: return "IL-andR";
    case Eq::TensorLAndR: return "otimesL-andR";
    case Eq::AndLAndR: return "andL-andR";
    case Eq::OrLAndR: return "orL-andR";
    case Eq::OrRPass: return "orR-pass";
    case Eq::OrRIL: return "orR-IL";
    case Eq::OrRTensorL: return "orR-otimesL";
    case Eq::OrRAndL: return "orR-andL";
    case Eq::OrROrL: return "orR-orL";
    case Eq::UnitTop: return "unit-top";
    case Eq::UnitBot: return "unit-bot";
    case Eq::ExInvolution: return "ex-involution";
    case Eq::ExBraid: return "ex-braid";
    case Eq::ExDisjoint: return "ex-disjoint";
    case Eq::ExAndL: return "ex-andL";
    case Eq::ExAndR: return "ex-andR";
    case Eq::ExOrL: return "ex-orL";
    case Eq::ExOrR: return "ex-orR";
    case Eq::ExPass: return "ex-pass";
    case Eq::ExIL: return "ex-IL";
    case Eq::ExTensorL: return "ex-otimesL";
    case Eq::ExTensorRLeft: return "ex-otimesR-left";
    case Eq::ExTensorRRight: return "ex-otimesR-right";
    case Eq::EtaLimp: return "eta-limp";
    case Eq::TensorRLimpL: return "otimesR-limpL";
    case Eq::PassLimpR: return "pass-limpR";
    case Eq::ILLimpR: return "IL-limpR";
    case Eq::TensorLLimpR: return "otimesL-limpR";
    case Eq::LimpLLimpR: return "limpL-limpR";
    case Eq::AndLLimpR: return "andL-limpR";
    case Eq::OrLLimpR: return "orL-limpR";
    case Eq::OrRLimpL: return "orR-limpL";
  }
  return "?";
}

bool eq_allowed(Eq eq, const LogicProfile& profile) {
  switch (eq) {
    case Eq::UnitTop:
    case Eq::UnitBot:
      return profile.units;
    case Eq::ExInvolution:
    case Eq::ExBraid:
    case Eq::ExDisjoint:
    case Eq::ExAndL:
    case Eq::ExAndR:
    case Eq::ExOrL:
    case Eq::ExOrR:
    case Eq::ExPass:
    case Eq::ExIL:
    case Eq::ExTensorL:
    case Eq::ExTensorRLeft:
    case Eq::ExTensorRRight:
      return profile.exchange;
    case Eq::EtaLimp:
    case Eq::TensorRLimpL:
    case Eq::PassLimpR:
    case Eq::ILLimpR:
    case Eq::TensorLLimpR:
    case Eq::LimpLLimpR:
    case Eq::AndLLimpR:
    case Eq::OrLLimpR:
    case Eq::OrRLimpL:
      return profile.implication;
    default:
      return true;
  }
}

bool eq_imported(Eq eq) {
  switch (eq) {
    case Eq::ExPass:
    case Eq::ExIL:
    case Eq::ExTensorL:
    case Eq::ExTensorRLeft:
    case Eq::ExTensorRRight:
      return true;
    default:
      return false;
  }
}

namespace {

bool is_or_r(Rule r) { return r == Rule::OrR1 || r == Rule::OrR2; }
bool is_and_l(Rule r) { return r == Rule::AndL1 || r == Rule::AndL2; }

const DerivPtr& p0(const DerivPtr& d) { return d->premises[0]; }
const DerivPtr& p1(const DerivPtr& d) { return d->premises[1]; }

// One rewrite step at the root of d (conclusion sequent s), or nullopt when
// the pattern does not match. `param` selects the instance for families that
// need it (ex-involution expansion).
std::optional<DerivPtr> step(const DerivPtr& d, const Sequent& s, Eq eq, Dir dir,
                             std::size_t param, const LogicProfile& profile) {
  const bool lr = dir == Dir::LR;
  switch (eq) {
    case Eq::EtaUnit:
      if (lr) {
        if (d->rule == Rule::Ax && s.stoup && s.stoup->conn() == Conn::Unit)
          return mk(Rule::IL, {mk(Rule::IR)});
      } else if (d->rule == Rule::IL && p0(d)->rule == Rule::IR) {
        return mk(Rule::Ax);
      }
      return std::nullopt;
    case Eq::EtaTensor:
      if (lr) {
        if (d->rule == Rule::Ax && s.stoup && s.stoup->conn() == Conn::Tensor)
          return mk(Rule::TensorL,
                    {mk(Rule::TensorR, {mk(Rule::Ax), mk(Rule::Pass, {mk(Rule::Ax)})}, 0)});
      } else if (d->rule == Rule::TensorL && p0(d)->rule == Rule::TensorR &&
                 p0(d)->arg == 0 && p0(p0(d))->rule == Rule::Ax &&
                 p1(p0(d))->rule == Rule::Pass && p0(p1(p0(d)))->rule == Rule::Ax) {
        return mk(Rule::Ax);
      }
      return std::nullopt;
    case Eq::EtaWith:
      if (lr) {
        if (d->rule == Rule::Ax && s.stoup && s.stoup->conn() == Conn::With)
          return mk(Rule::AndR, {mk(Rule::AndL1, {mk(Rule::Ax)}),
                                 mk(Rule::AndL2, {mk(Rule::Ax)})});
      } else if (d->rule == Rule::AndR && p0(d)->rule == Rule::AndL1 &&
                 p1(d)->rule == Rule::AndL2 && p0(p0(d))->rule == Rule::Ax &&
                 p0(p1(d))->rule == Rule::Ax) {
        return mk(Rule::Ax);
      }
      return std::nullopt;
    case Eq::EtaPlus:
      if (lr) {
        if (d->rule == Rule::Ax && s.stoup && s.stoup->conn() == Conn::Plus)
          return mk(Rule::OrL,
                    {mk(Rule::OrR1, {mk(Rule::Ax)}), mk(Rule::OrR2, {mk(Rule::Ax)})});
      } else if (d->rule == Rule::OrL && p0(d)->rule == Rule::OrR1 &&
                 p1(d)->rule == Rule::OrR2 && p0(p0(d))->rule == Rule::Ax &&
                 p0(p1(d))->rule == Rule::Ax) {
        return mk(Rule::Ax);
      }
      return std::nullopt;
    case Eq::EtaLimp:
      if (lr) {
        if (d->rule == Rule::Ax && s.stoup && s.stoup->conn() == Conn::Limp)
          return mk(Rule::LimpR,
                    {mk(Rule::LimpL, {mk(Rule::Pass, {mk(Rule::Ax)}), mk(Rule::Ax)}, 1)});
      } else if (d->rule == Rule::LimpR && p0(d)->rule == Rule::LimpL && p0(d)->arg == 1 &&
                 p0(p0(d))->rule == Rule::Pass && p0(p0(p0(d)))->rule == Rule::Ax &&
                 p1(p0(d))->rule == Rule::Ax) {
        return mk(Rule::Ax);
      }
      return std::nullopt;

    case Eq::TensorRPass:
      if (lr) {
        if (d->rule == Rule::TensorR && p0(d)->rule == Rule::Pass && d->arg >= 1)
          return mk(Rule::Pass, {mk(Rule::TensorR, {p0(p0(d)), p1(d)}, d->arg - 1)});
      } else if (d->rule == Rule::Pass && p0(d)->rule == Rule::TensorR) {
        return mk(Rule::TensorR, {mk(Rule::Pass, {p0(p0(d))}), p1(p0(d))}, p0(d)->arg + 1);
      }
      return std::nullopt;
    case Eq::TensorRIL:
      if (lr) {
        if (d->rule == Rule::TensorR && p0(d)->rule == Rule::IL)
          return mk(Rule::IL, {mk(Rule::TensorR, {p0(p0(d)), p1(d)}, d->arg)});
      } else if (d->rule == Rule::IL && p0(d)->rule == Rule::TensorR) {
        return mk(Rule::TensorR, {mk(Rule::IL, {p0(p0(d))}), p1(p0(d))}, p0(d)->arg);
      }
      return std::nullopt;
    case Eq::TensorRTensorL:
      if (lr) {
        if (d->rule == Rule::TensorR && p0(d)->rule == Rule::TensorL)
          return mk(Rule::TensorL, {mk(Rule::TensorR, {p0(p0(d)), p1(d)}, d->arg + 1)});
      } else if (d->rule == Rule::TensorL && p0(d)->rule == Rule::TensorR &&
                 p0(d)->arg >= 1) {
        return mk(Rule::TensorR, {mk(Rule::TensorL, {p0(p0(d))}), p1(p0(d))}, p0(d)->arg - 1);
      }
      return std::nullopt;
    case Eq::TensorRAndL:
      if (lr) {
        if (d->rule == Rule::TensorR && is_and_l(p0(d)->rule))
          return mk(p0(d)->rule, {mk(Rule::TensorR, {p0(p0(d)), p1(d)}, d->arg)});
      } else if (is_and_l(d->rule) && p0(d)->rule == Rule::TensorR) {
        return mk(Rule::TensorR, {mk(d->rule, {p0(p0(d))}), p1(p0(d))}, p0(d)->arg);
      }
      return std::nullopt;
    case Eq::TensorROrL:
      if (lr) {
        if (d->rule == Rule::TensorR && p0(d)->rule == Rule::OrL)
          return mk(Rule::OrL, {mk(Rule::TensorR, {p0(p0(d)), p1(d)}, d->arg),
                                mk(Rule::TensorR, {p1(p0(d)), p1(d)}, d->arg)});
      } else if (d->rule == Rule::OrL && p0(d)->rule == Rule::TensorR &&
                 p1(d)->rule == Rule::TensorR && p0(d)->arg == p1(d)->arg &&
                 equal(p1(p0(d)), p1(p1(d)))) {
        return mk(Rule::TensorR, {mk(Rule::OrL, {p0(p0(d)), p0(p1(d))}), p1(p0(d))},
                  p0(d)->arg);
      }
      return std::nullopt;

    case Eq::PassAndR:
    case Eq::ILAndR:
    case Eq::TensorLAndR: {
      Rule outer = eq == Eq::PassAndR ? Rule::Pass
                   : eq == Eq::ILAndR ? Rule::IL
                                      : Rule::TensorL;
      if (lr) {
        if (d->rule == Rule::AndR && p0(d)->rule == outer && p1(d)->rule == outer)
          return mk(outer, {mk(Rule::AndR, {p0(p0(d)), p0(p1(d))})});
      } else if (d->rule == outer && p0(d)->rule == Rule::AndR) {
        return mk(Rule::AndR, {mk(outer, {p0(p0(d))}), mk(outer, {p1(p0(d))})});
      }
      return std::nullopt;
    }
    case Eq::AndLAndR:
      if (lr) {
        if (d->rule == Rule::AndR && is_and_l(p0(d)->rule) && p1(d)->rule == p0(d)->rule)
          return mk(p0(d)->rule, {mk(Rule::AndR, {p0(p0(d)), p0(p1(d))})});
      } else if (is_and_l(d->rule) && p0(d)->rule == Rule::AndR) {
        return mk(Rule::AndR, {mk(d->rule, {p0(p0(d))}), mk(d->rule, {p1(p0(d))})});
      }
      return std::nullopt;
    case Eq::OrLAndR:
      if (lr) {
        if (d->rule == Rule::AndR && p0(d)->rule == Rule::OrL && p1(d)->rule == Rule::OrL)
          return mk(Rule::OrL, {mk(Rule::AndR, {p0(p0(d)), p0(p1(d))}),
                                mk(Rule::AndR, {p1(p0(d)), p1(p1(d))})});
      } else if (d->rule == Rule::OrL && p0(d)->rule == Rule::AndR &&
                 p1(d)->rule == Rule::AndR) {
        return mk(Rule::AndR, {mk(Rule::OrL, {p0(p0(d)), p0(p1(d))}),
                               mk(Rule::OrL, {p1(p0(d)), p1(p1(d))})});
      }
      return std::nullopt;

    case Eq::OrRPass:
    case Eq::OrRIL:
    case Eq::OrRTensorL: {
      Rule inner = eq == Eq::OrRPass ? Rule::Pass
                   : eq == Eq::OrRIL ? Rule::IL
                                     : Rule::TensorL;
      if (lr) {
        if (is_or_r(d->rule) && p0(d)->rule == inner)
          return mk(inner, {mk(d->rule, {p0(p0(d))})});
      } else if (d->rule == inner && is_or_r(p0(d)->rule)) {
        return mk(p0(d)->rule, {mk(inner, {p0(p0(d))})});
      }
      return std::nullopt;
    }
    case Eq::OrRAndL:
      if (lr) {
        if (is_or_r(d->rule) && is_and_l(p0(d)->rule))
          return mk(p0(d)->rule, {mk(d->rule, {p0(p0(d))})});
      } else if (is_and_l(d->rule) && is_or_r(p0(d)->rule)) {
        return mk(p0(d)->rule, {mk(d->rule, {p0(p0(d))})});
      }
      return std::nullopt;
    case Eq::OrROrL:
      if (lr) {
        if (is_or_r(d->rule) && p0(d)->rule == Rule::OrL)
          return mk(Rule::OrL, {mk(d->rule, {p0(p0(d))}), mk(d->rule, {p1(p0(d))})});
      } else if (d->rule == Rule::OrL && is_or_r(p0(d)->rule) &&
                 p1(d)->rule == p0(d)->rule) {
        return mk(p0(d)->rule, {mk(Rule::OrL, {p0(p0(d)), p0(p1(d))})});
      }
      return std::nullopt;

    case Eq::UnitTop:
      if (lr && s.succedent->conn() == Conn::Top && d->rule != Rule::TopR)
        return mk(Rule::TopR);
      return std::nullopt;
    case Eq::UnitBot:
      if (lr && s.stoup && s.stoup->conn() == Conn::Zero && d->rule != Rule::BotL &&
          s.succedent->conn() != Conn::Top)
        return mk(Rule::BotL);
      return std::nullopt;

    case Eq::ExInvolution:
      if (lr) {
        if (d->rule == Rule::Ex && p0(d)->rule == Rule::Ex && d->arg == p0(d)->arg)
          return p0(p0(d));
      } else if (param + 1 < s.context.size()) {
        return mk(Rule::Ex, {mk(Rule::Ex, {d}, param)}, param);
      }
      return std::nullopt;
    case Eq::ExBraid:
      if (lr) {
        if (d->rule == Rule::Ex && d->arg >= 1 && p0(d)->rule == Rule::Ex &&
            p0(d)->arg == d->arg - 1 && p0(p0(d))->rule == Rule::Ex &&
            p0(p0(d))->arg == d->arg)
          return mk(Rule::Ex,
                    {mk(Rule::Ex, {mk(Rule::Ex, {p0(p0(p0(d)))}, d->arg - 1)}, d->arg)},
                    d->arg - 1);
      } else if (d->rule == Rule::Ex && p0(d)->rule == Rule::Ex &&
                 p0(d)->arg == d->arg + 1 && p0(p0(d))->rule == Rule::Ex &&
                 p0(p0(d))->arg == d->arg) {
        return mk(Rule::Ex,
                  {mk(Rule::Ex, {mk(Rule::Ex, {p0(p0(p0(d)))}, d->arg + 1)}, d->arg)},
                  d->arg + 1);
      }
      return std::nullopt;
    case Eq::ExDisjoint:
      if (lr) {
        if (d->rule == Rule::Ex && p0(d)->rule == Rule::Ex && p0(d)->arg >= d->arg + 2)
          return mk(Rule::Ex, {mk(Rule::Ex, {p0(p0(d))}, d->arg)}, p0(d)->arg);
      } else if (d->rule == Rule::Ex && p0(d)->rule == Rule::Ex &&
                 d->arg >= p0(d)->arg + 2) {
        return mk(Rule::Ex, {mk(Rule::Ex, {p0(p0(d))}, d->arg)}, p0(d)->arg);
      }
      return std::nullopt;
    case Eq::ExAndL:
      if (lr) {
        if (is_and_l(d->rule) && p0(d)->rule == Rule::Ex)
          return mk(Rule::Ex, {mk(d->rule, {p0(p0(d))})}, p0(d)->arg);
      } else if (d->rule == Rule::Ex && is_and_l(p0(d)->rule)) {
        return mk(p0(d)->rule, {mk(Rule::Ex, {p0(p0(d))}, d->arg)});
      }
      return std::nullopt;
    case Eq::ExAndR:
      if (lr) {
        if (d->rule == Rule::AndR && p0(d)->rule == Rule::Ex && p1(d)->rule == Rule::Ex &&
            p0(d)->arg == p1(d)->arg)
          return mk(Rule::Ex, {mk(Rule::AndR, {p0(p0(d)), p0(p1(d))})}, p0(d)->arg);
      } else if (d->rule == Rule::Ex && p0(d)->rule == Rule::AndR) {
        return mk(Rule::AndR, {mk(Rule::Ex, {p0(p0(d))}, d->arg),
                               mk(Rule::Ex, {p1(p0(d))}, d->arg)});
      }
      return std::nullopt;
    case Eq::ExOrL:
      if (lr) {
        if (d->rule == Rule::OrL && p0(d)->rule == Rule::Ex && p1(d)->rule == Rule::Ex &&
            p0(d)->arg == p1(d)->arg)
          return mk(Rule::Ex, {mk(Rule::OrL, {p0(p0(d)), p0(p1(d))})}, p0(d)->arg);
      } else if (d->rule == Rule::Ex && p0(d)->rule == Rule::OrL) {
        return mk(Rule::OrL, {mk(Rule::Ex, {p0(p0(d))}, d->arg),
                              mk(Rule::Ex, {p1(p0(d))}, d->arg)});
      }
      return std::nullopt;
    case Eq::ExOrR:
      if (lr) {
        if (is_or_r(d->rule) && p0(d)->rule == Rule::Ex)
          return mk(Rule::Ex, {mk(d->rule, {p0(p0(d))})}, p0(d)->arg);
      } else if (d->rule == Rule::Ex && is_or_r(p0(d)->rule)) {
        return mk(p0(d)->rule, {mk(Rule::Ex, {p0(p0(d))}, d->arg)});
      }
      return std::nullopt;
    case Eq::ExPass:
      if (lr) {
        if (d->rule == Rule::Pass && p0(d)->rule == Rule::Ex)
          return mk(Rule::Ex, {mk(Rule::Pass, {p0(p0(d))})}, p0(d)->arg + 1);
      } else if (d->rule == Rule::Ex && d->arg >= 1 && p0(d)->rule == Rule::Pass) {
        return mk(Rule::Pass, {mk(Rule::Ex, {p0(p0(d))}, d->arg - 1)});
      }
      return std::nullopt;
    case Eq::ExIL:
      if (lr) {
        if (d->rule == Rule::IL && p0(d)->rule == Rule::Ex)
          return mk(Rule::Ex, {mk(Rule::IL, {p0(p0(d))})}, p0(d)->arg);
      } else if (d->rule == Rule::Ex && p0(d)->rule == Rule::IL) {
        return mk(Rule::IL, {mk(Rule::Ex, {p0(p0(d))}, d->arg)});
      }
      return std::nullopt;
    case Eq::ExTensorL:
      if (lr) {
        if (d->rule == Rule::TensorL && p0(d)->rule == Rule::Ex && p0(d)->arg >= 1)
          return mk(Rule::Ex, {mk(Rule::TensorL, {p0(p0(d))})}, p0(d)->arg - 1);
      } else if (d->rule == Rule::Ex && p0(d)->rule == Rule::TensorL) {
        return mk(Rule::TensorL, {mk(Rule::Ex, {p0(p0(d))}, d->arg + 1)});
      }
      return std::nullopt;
    case Eq::ExTensorRLeft:
      if (lr) {
        if (d->rule == Rule::TensorR && p0(d)->rule == Rule::Ex)
          return mk(Rule::Ex, {mk(Rule::TensorR, {p0(p0(d)), p1(d)}, d->arg)}, p0(d)->arg);
      } else if (d->rule == Rule::Ex && p0(d)->rule == Rule::TensorR &&
                 d->arg + 1 < p0(d)->arg) {
        return mk(Rule::TensorR, {mk(Rule::Ex, {p0(p0(d))}, d->arg), p1(p0(d))},
                  p0(d)->arg);
      }
      return std::nullopt;
    case Eq::ExTensorRRight:
      if (lr) {
        if (d->rule == Rule::TensorR && p1(d)->rule == Rule::Ex)
          return mk(Rule::Ex, {mk(Rule::TensorR, {p0(d), p0(p1(d))}, d->arg)},
                    d->arg + p1(d)->arg);
      } else if (d->rule == Rule::Ex && p0(d)->rule == Rule::TensorR &&
                 d->arg >= p0(d)->arg) {
        return mk(Rule::TensorR,
                  {p0(p0(d)), mk(Rule::Ex, {p1(p0(d))}, d->arg - p0(d)->arg)}, p0(d)->arg);
      }
      return std::nullopt;

    case Eq::TensorRLimpL:
      if (lr) {
        if (d->rule == Rule::TensorR && p0(d)->rule == Rule::LimpL && d->arg >= p0(d)->arg)
          return mk(Rule::LimpL,
                    {p0(p0(d)),
                     mk(Rule::TensorR, {p1(p0(d)), p1(d)}, d->arg - p0(d)->arg)},
                    p0(d)->arg);
      } else if (d->rule == Rule::LimpL && p1(d)->rule == Rule::TensorR) {
        return mk(Rule::TensorR,
                  {mk(Rule::LimpL, {p0(d), p0(p1(d))}, d->arg), p1(p1(d))},
                  d->arg + p1(d)->arg);
      }
      return std::nullopt;
    case Eq::PassLimpR:
    case Eq::ILLimpR:
    case Eq::TensorLLimpR: {
      Rule outer = eq == Eq::PassLimpR ? Rule::Pass
                   : eq == Eq::ILLimpR ? Rule::IL
                                       : Rule::TensorL;
      if (lr) {
        // for pass the moved formula must exist below the limpR, i.e. the
        // conclusion context is non-empty
        if (d->rule == Rule::LimpR && p0(d)->rule == outer &&
            (outer != Rule::Pass || !s.context.empty()))
          return mk(outer, {mk(Rule::LimpR, {p0(p0(d))})});
      } else if (d->rule == outer && p0(d)->rule == Rule::LimpR) {
        return mk(Rule::LimpR, {mk(outer, {p0(p0(d))})});
      }
      return std::nullopt;
    }
    case Eq::LimpLLimpR:
      if (lr) {
        // the formula limpR moved to the context must stay in the right premise
        if (d->rule == Rule::LimpR && p0(d)->rule == Rule::LimpL &&
            p0(d)->arg <= s.context.size())
          return mk(Rule::LimpL, {p0(p0(d)), mk(Rule::LimpR, {p1(p0(d))})}, p0(d)->arg);
      } else if (d->rule == Rule::LimpL && p1(d)->rule == Rule::LimpR) {
        return mk(Rule::LimpR, {mk(Rule::LimpL, {p0(d), p0(p1(d))}, d->arg)});
      }
      return std::nullopt;
    case Eq::AndLLimpR:
      if (lr) {
        if (d->rule == Rule::LimpR && is_and_l(p0(d)->rule))
          return mk(p0(d)->rule, {mk(Rule::LimpR, {p0(p0(d))})});
      } else if (is_and_l(d->rule) && p0(d)->rule == Rule::LimpR) {
        return mk(Rule::LimpR, {mk(d->rule, {p0(p0(d))})});
      }
      return std::nullopt;
    case Eq::OrLLimpR:
      if (lr) {
        if (d->rule == Rule::LimpR && p0(d)->rule == Rule::OrL)
          return mk(Rule::OrL, {mk(Rule::LimpR, {p0(p0(d))}),
                                mk(Rule::LimpR, {p1(p0(d))})});
      } else if (d->rule == Rule::OrL && p0(d)->rule == Rule::LimpR &&
                 p1(d)->rule == Rule::LimpR) {
        return mk(Rule::LimpR, {mk(Rule::OrL, {p0(p0(d)), p0(p1(d))})});
      }
      return std::nullopt;
    case Eq::OrRLimpL:
      if (lr) {
        if (is_or_r(d->rule) && p0(d)->rule == Rule::LimpL)
          return mk(Rule::LimpL, {p0(p0(d)), mk(d->rule, {p1(p0(d))})}, p0(d)->arg);
      } else if (d->rule == Rule::LimpL && is_or_r(p1(d)->rule)) {
        return mk(p1(d)->rule, {mk(Rule::LimpL, {p0(d), p0(p1(d))}, d->arg)});
      }
      return std::nullopt;
  }
  return std::nullopt;
}

constexpr Eq kAllEqs[] = {
    Eq::EtaUnit,      Eq::EtaTensor,     Eq::EtaWith,       Eq::EtaPlus,
    Eq::TensorRPass,  Eq::TensorRIL,     Eq::TensorRTensorL, Eq::TensorRAndL,
    Eq::TensorROrL,   Eq::PassAndR,      Eq::ILAndR,        Eq::TensorLAndR,
    Eq::AndLAndR,     Eq::OrLAndR,       Eq::OrRPass,       Eq::OrRIL,
    Eq::OrRTensorL,   Eq::OrRAndL,       Eq::OrROrL,        Eq::UnitTop,
    Eq::UnitBot,      Eq::ExInvolution,  Eq::ExBraid,       Eq::ExDisjoint,
    Eq::ExAndL,       Eq::ExAndR,        Eq::ExOrL,         Eq::ExOrR,
    Eq::ExPass,       Eq::ExIL,          Eq::ExTensorL,     Eq::ExTensorRLeft,
    Eq::ExTensorRRight, Eq::EtaLimp,     Eq::TensorRLimpL,  Eq::PassLimpR,
    Eq::ILLimpR,      Eq::TensorLLimpR,  Eq::LimpLLimpR,    Eq::AndLLimpR,
    Eq::OrLLimpR,     Eq::OrRLimpL,
};

void collect(const DerivPtr& d, const Sequent& s, const LogicProfile& profile,
             std::vector<std::size_t>& path, std::vector<Redex>& out) {
  std::string why;
  auto ps = try_premises(d->rule, d->arg, s, profile, &why);
  if (!ps) throw CheckError("applicable: " + why);
  for (std::size_t i = 0; i < d->premises.size(); ++i) {
    path.push_back(i);
    collect(d->premises[i], (*ps)[i], profile, path, out);
    path.pop_back();
  }
  for (Eq eq : kAllEqs) {
    if (!eq_allowed(eq, profile)) continue;
    if (step(d, s, eq, Dir::LR, 0, profile)) out.push_back({path, eq, Dir::LR, 0});
    if (eq == Eq::ExInvolution) {
      // expansion: one instance per position the double swap can use
      for (std::size_t p = 0; p + 1 < s.context.size(); ++p)
        out.push_back({path, eq, Dir::RL, p});
    } else if (step(d, s, eq, Dir::RL, 0, profile)) {
      out.push_back({path, eq, Dir::RL, 0});
    }
  }
}

DerivPtr rewrite_at(const DerivPtr& d, const Sequent& s, const Redex& redex,
                    std::size_t depth, const LogicProfile& profile) {
  if (depth == redex.path.size()) {
    auto r = step(d, s, redex.eq, redex.dir, redex.param, profile);
    if (!r) throw CheckError(std::string("redex ") + eq_label(redex.eq) + " absent");
    return *r;
  }
  std::string why;
  auto ps = try_premises(d->rule, d->arg, s, profile, &why);
  if (!ps) throw CheckError("rewrite_once: " + why);
  std::size_t i = redex.path[depth];
  if (i >= d->premises.size()) throw CheckError("rewrite_once: path out of range");
  auto nd = std::make_shared<Deriv>(*d);
  nd->premises[i] = rewrite_at(d->premises[i], (*ps)[i], redex, depth + 1, profile);
  return nd;
}

// Leftmost-innermost search for the first left-to-right redex.
bool find_lr(const DerivPtr& d, const Sequent& s, const LogicProfile& profile,
             std::vector<std::size_t>& path, Eq& eq_out) {
  std::string why;
  auto ps = try_premises(d->rule, d->arg, s, profile, &why);
  if (!ps) throw CheckError("normalize_rw: " + why);
  for (std::size_t i = 0; i < d->premises.size(); ++i) {
    path.push_back(i);
    if (find_lr(d->premises[i], (*ps)[i], profile, path, eq_out)) return true;
    path.pop_back();
  }
  for (Eq eq : kAllEqs) {
    if (!eq_allowed(eq, profile)) continue;
    if (step(d, s, eq, Dir::LR, 0, profile)) {
      eq_out = eq;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<Redex> applicable(const DerivPtr& d, const Sequent& s,
                              const LogicProfile& profile) {
  std::vector<Redex> out;
  std::vector<std::size_t> path;
  collect(d, s, profile, path, out);
  return out;
}

DerivPtr rewrite_once(const DerivPtr& d, const Sequent& s, const Redex& redex,
                      const LogicProfile& profile) {
  return rewrite_at(d, s, redex, 0, profile);
}

DerivPtr normalize_rw(const DerivPtr& d, const Sequent& s, const LogicProfile& profile,
                      std::size_t step_cap) {
  DerivPtr cur = d;
  for (std::size_t steps = 0;; ++steps) {
    if (steps > step_cap)
      throw BudgetError("normalize_rw exceeded its step cap of " + std::to_string(step_cap));
    std::vector<std::size_t> path;
    Eq eq{};
    if (!find_lr(cur, s, profile, path, eq)) return cur;
    cur = rewrite_once(cur, s, Redex{path, eq, Dir::LR, 0}, profile);
  }
}

namespace {

// Closure of the one-step rewrite relation, capped. Returns true when `goal`
// (if non-null) was reached; `complete` reports whether the closure was
// exhausted.
bool closure_search(const DerivPtr& start, const Sequent& s, const LogicProfile& profile,
                    std::size_t cap, const std::string* goal_key,
                    std::unordered_set<std::string>* seen_out, bool& complete) {
  std::unordered_set<std::string> seen;
  std::deque<DerivPtr> frontier;
  frontier.push_back(start);
  seen.insert(serialize(start));
  complete = false;
  while (!frontier.empty()) {
    if (seen.size() > cap) {
      if (seen_out) *seen_out = std::move(seen);
      return false;
    }
    DerivPtr cur = frontier.front();
    frontier.pop_front();
    for (const Redex& r : applicable(cur, s, profile)) {
      DerivPtr next = rewrite_once(cur, s, r, profile);
      std::string key = serialize(next);
      if (goal_key && key == *goal_key) {
        if (seen_out) *seen_out = std::move(seen);
        complete = false;
        return true;
      }
      if (seen.insert(key).second) frontier.push_back(next);
    }
  }
  complete = true;
  if (seen_out) *seen_out = std::move(seen);
  return false;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

bool equiv_oracle(const DerivPtr& f, const DerivPtr& g, const Sequent& s,
                  const LogicProfile& profile, const OracleBudget& budget) {
  check(f, s, profile);
  check(g, s, profile);
  if (connective_count(s) > budget.max_connectives)
    throw BudgetError("equiv_oracle: sequent exceeds the connective budget of " +
                      std::to_string(budget.max_connectives));
  std::string fkey = serialize(f);
  std::string gkey = serialize(g);
  if (fkey == gkey) return true;

  if (profile.exchange) {
    // The rewrite classes are infinite here (ex o ex expands freely), so run
    // a capped search from both sides and intersect.
    bool complete_f = false, complete_g = false;
    std::unordered_set<std::string> from_f, from_g;
    if (closure_search(f, s, profile, budget.node_cap, &gkey, &from_f, complete_f))
      return true;
    if (closure_search(g, s, profile, budget.node_cap, &fkey, &from_g, complete_g))
      return true;
    for (const auto& k : from_f)
      if (from_g.count(k)) return true;
    if (complete_f || complete_g) return false;
    throw BudgetError("equiv_oracle: inconclusive under exchange within the node cap");
  }

  if (profile.units) {
    // The unit equations relate every proof of a Top-succedent (Bot-stoup)
    // sequent to topR (botL); their expanding direction is not enumerable,
    // so compute components over the full, finite derivation universe, where
    // every contraction edge is discovered from its redex side.
    SearchBudget sb;
    sb.max_connectives = budget.max_connectives;
    sb.node_cap = budget.node_cap;
    sb.result_cap = budget.node_cap;
    auto universe = enumerate_unfocused(s, profile, sb);
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < universe.size(); ++i)
      index.emplace(serialize(universe[i]), i);
    auto fit = index.find(fkey);
    auto git = index.find(gkey);
    if (fit == index.end() || git == index.end())
      throw CheckError("equiv_oracle: derivation missing from the enumerated universe");
    UnionFind uf;
    uf.parent.resize(universe.size());
    for (std::size_t i = 0; i < universe.size(); ++i) uf.parent[i] = i;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      for (const Redex& r : applicable(universe[i], s, profile)) {
        DerivPtr next = rewrite_once(universe[i], s, r, profile);
        auto it = index.find(serialize(next));
        if (it == index.end())
          throw CheckError("equiv_oracle: rewrite left the enumerated universe");
        uf.unite(i, it->second);
      }
    }
    return uf.find(fit->second) == uf.find(git->second);
  }

  bool complete = false;
  if (closure_search(f, s, profile, budget.node_cap, &gkey, nullptr, complete)) return true;
  if (complete) return false;
  throw BudgetError("equiv_oracle: rewrite closure exceeded the node cap");
}

bool equiv(const DerivPtr& f, const DerivPtr& g, const Sequent& s,
           const LogicProfile& profile) {
  return equal(focus(f, s, profile), focus(g, s, profile));
}

}  // namespace stoup
