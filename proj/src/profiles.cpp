#include "stoup/profiles.hpp"

namespace stoup {

bool frule_allowed(FRule r, const LogicProfile& profile) {
  switch (r) {
    case FRule::TopR:
    case FRule::BotL:
      return profile.units;
    case FRule::Ex:
    case FRule::RI2C:
      return profile.exchange;
    case FRule::LimpL:
    case FRule::LimpR:
      return profile.implication;
    default:
      return true;
  }
}

bool tag_kind_allowed(Tag::Kind k, const LogicProfile& profile) {
  switch (k) {
    case Tag::Kind::T:
      return profile.units;
    case Tag::Kind::Ctx:
    case Tag::Kind::Bullet:
      return profile.implication;
    default:
      return true;
  }
}

ProfileTables tables_for(const LogicProfile& profile) {
  LogicProfile::make(profile.units, profile.exchange, profile.implication);  // revalidate
  ProfileTables t;

  const Conn all_conns[] = {Conn::Atom, Conn::Unit, Conn::Tensor, Conn::With,
                            Conn::Plus, Conn::Top,  Conn::Zero,   Conn::Limp};
  for (Conn c : all_conns) {
    if ((c == Conn::Top || c == Conn::Zero) && !profile.units) continue;
    if (c == Conn::Limp && !profile.implication) continue;
    t.connectives.push_back(c);
    FormulaPtr probe;
    switch (c) {
      case Conn::Atom: probe = Formula::atom("X"); break;
      case Conn::Unit: probe = Formula::unit(); break;
      case Conn::Top: probe = Formula::top(); break;
      case Conn::Zero: probe = Formula::zero(); break;
      case Conn::Tensor: probe = Formula::tensor(Formula::atom("X"), Formula::atom("Y")); break;
      case Conn::With: probe = Formula::conj(Formula::atom("X"), Formula::atom("Y")); break;
      case Conn::Plus: probe = Formula::disj(Formula::atom("X"), Formula::atom("Y")); break;
      case Conn::Limp: probe = Formula::limp(Formula::atom("X"), Formula::atom("Y")); break;
    }
    if (is_negative(probe, profile)) t.negative_connectives.push_back(c);
    if (!is_irreducible_stoup(probe, profile)) t.reducible_stoup_connectives.push_back(c);
  }

  const Rule all_rules[] = {Rule::Ax,    Rule::Pass,  Rule::IL,    Rule::IR,   Rule::TensorL,
                            Rule::TensorR, Rule::AndL1, Rule::AndL2, Rule::AndR, Rule::OrL,
                            Rule::OrR1,  Rule::OrR2,  Rule::TopR,  Rule::BotL, Rule::Ex,
                            Rule::LimpL, Rule::LimpR};
  for (Rule r : all_rules)
    if (rule_allowed(r, profile)) t.rules.push_back(r);

  const FRule all_frules[] = {FRule::AndR, FRule::LimpR, FRule::TopR,  FRule::LI2RI,
                              FRule::IL,   FRule::TensorL, FRule::OrL, FRule::BotL,
                              FRule::F2LI, FRule::Pass,  FRule::Ax,    FRule::IR,
                              FRule::TensorR, FRule::OrR1, FRule::OrR2, FRule::AndL1,
                              FRule::AndL2, FRule::LimpL, FRule::Ex,   FRule::RI2C};
  for (FRule r : all_frules)
    if (frule_allowed(r, profile)) t.focused_rules.push_back(r);

  const Eq all_eqs[] = {
      Eq::EtaUnit,      Eq::EtaTensor,     Eq::EtaWith,        Eq::EtaPlus,
      Eq::TensorRPass,  Eq::TensorRIL,     Eq::TensorRTensorL, Eq::TensorRAndL,
      Eq::TensorROrL,   Eq::PassAndR,      Eq::ILAndR,         Eq::TensorLAndR,
      Eq::AndLAndR,     Eq::OrLAndR,       Eq::OrRPass,        Eq::OrRIL,
      Eq::OrRTensorL,   Eq::OrRAndL,       Eq::OrROrL,         Eq::UnitTop,
      Eq::UnitBot,      Eq::ExInvolution,  Eq::ExBraid,        Eq::ExDisjoint,
      Eq::ExAndL,       Eq::ExAndR,        Eq::ExOrL,          Eq::ExOrR,
      Eq::ExPass,       Eq::ExIL,          Eq::ExTensorL,      Eq::ExTensorRLeft,
      Eq::ExTensorRRight, Eq::EtaLimp,     Eq::TensorRLimpL,   Eq::PassLimpR,
      Eq::ILLimpR,      Eq::TensorLLimpR,  Eq::LimpLLimpR,     Eq::AndLLimpR,
      Eq::OrLLimpR,     Eq::OrRLimpL};
  for (Eq e : all_eqs)
    if (eq_allowed(e, profile)) t.equations.push_back(e);

  const Tag::Kind all_tags[] = {Tag::Kind::P,  Tag::Kind::C1,  Tag::Kind::C2, Tag::Kind::R,
                                Tag::Kind::T,  Tag::Kind::Ctx, Tag::Kind::Bullet};
  for (Tag::Kind k : all_tags)
    if (tag_kind_allowed(k, profile)) t.tags.push_back(k);

  t.validity = "R in l";
  if (profile.units) t.validity = "T in l | " + t.validity;
  t.validity += " | (C1 in l & C2 in l)";
  if (profile.implication)
    t.validity += " | (Ctx G, Ctx G' in l with G /= G') | (* in l)";
  return t;
}

}  // namespace stoup
