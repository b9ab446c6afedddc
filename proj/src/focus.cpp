#include "stoup/focus.hpp"

namespace stoup {

std::vector<RIBranch> invert_RI(const FDerivPtr& f, const FormulaPtr& a,
                                const LogicProfile& profile) {
  if (a->conn() == Conn::With) {
    if (f->rule != FRule::AndR)
      throw FocusError("invert_RI: expected andR at a /\\ succedent");
    auto out = invert_RI(f->premises[0], a->left(), profile);
    auto rhs = invert_RI(f->premises[1], a->right(), profile);
    out.insert(out.end(), rhs.begin(), rhs.end());
    return out;
  }
  if (profile.implication && a->conn() == Conn::Limp) {
    if (f->rule != FRule::LimpR)
      throw FocusError("invert_RI: expected limpR at a -o succedent");
    auto out = invert_RI(f->premises[0], a->right(), profile);
    for (auto& b : out) b.extension.insert(b.extension.begin(), a->left());
    return out;
  }
  if (profile.units && a->conn() == Conn::Top) {
    if (f->rule != FRule::TopR)
      throw FocusError("invert_RI: expected topR at a Top succedent");
    return {RIBranch{{}, nullptr}};
  }
  if (f->rule != FRule::LI2RI)
    throw FocusError("invert_RI: expected LI2RI at a non-negative succedent");
  return {RIBranch{{}, f->premises[0]}};
}

FDerivPtr conjR_star(std::vector<RIBranch> branches, const FormulaPtr& a,
                     const LogicProfile& profile) {
  if (a->conn() == Conn::With) {
    std::size_t n1 = succedent_parts(a->left(), profile);
    if (branches.size() < n1) throw FocusError("conjR_star: too few branches");
    std::vector<RIBranch> left(branches.begin(), branches.begin() + n1);
    std::vector<RIBranch> right(branches.begin() + n1, branches.end());
    return fmk(FRule::AndR, {conjR_star(std::move(left), a->left(), profile),
                             conjR_star(std::move(right), a->right(), profile)});
  }
  if (profile.implication && a->conn() == Conn::Limp) {
    for (auto& b : branches) {
      if (b.extension.empty() || !equal(b.extension.front(), a->left()))
        throw FocusError("conjR_star: branch extension does not match -o antecedent");
      b.extension.erase(b.extension.begin());
    }
    return fmk(FRule::LimpR, {conjR_star(std::move(branches), a->right(), profile)});
  }
  if (branches.size() != 1) throw FocusError("conjR_star: expected a single branch");
  if (profile.units && a->conn() == Conn::Top) {
    if (branches[0].li) throw FocusError("conjR_star: Top component needs the topR branch");
    return fmk(FRule::TopR);
  }
  if (!branches[0].li) throw FocusError("conjR_star: topR branch at a non-Top component");
  return fmk(FRule::LI2RI, {branches[0].li});
}

FDerivPtr IR_RI() { return fmk(FRule::LI2RI, {fmk(FRule::F2LI, {fmk(FRule::IR)})}); }

FDerivPtr pass_RI(const FDerivPtr& f, const FormulaPtr& c, const LogicProfile& profile) {
  switch (f->rule) {
    case FRule::AndR:
      return fmk(FRule::AndR, {pass_RI(f->premises[0], c->left(), profile),
                               pass_RI(f->premises[1], c->right(), profile)});
    case FRule::TopR:
      return fmk(FRule::TopR);
    case FRule::LimpR:
      return fmk(FRule::LimpR, {pass_RI(f->premises[0], c->right(), profile)});
    case FRule::LI2RI:
      return fmk(FRule::LI2RI, {fmk(FRule::F2LI, {fmk(FRule::Pass, {f->premises[0]})})});
    default:
      throw FocusError("pass_RI: premise is not an RI derivation");
  }
}

FDerivPtr IL_RI(const FDerivPtr& f, const FormulaPtr& c, const LogicProfile& profile) {
  switch (f->rule) {
    case FRule::AndR:
      return fmk(FRule::AndR, {IL_RI(f->premises[0], c->left(), profile),
                               IL_RI(f->premises[1], c->right(), profile)});
    case FRule::TopR:
      return fmk(FRule::TopR);
    case FRule::LimpR:
      return fmk(FRule::LimpR, {IL_RI(f->premises[0], c->right(), profile)});
    case FRule::LI2RI:
      return fmk(FRule::LI2RI, {fmk(FRule::IL, {f->premises[0]})});
    default:
      throw FocusError("IL_RI: premise is not an RI derivation");
  }
}

FDerivPtr tensorL_RI(const FDerivPtr& f, const FormulaPtr& c, const LogicProfile& profile) {
  switch (f->rule) {
    case FRule::AndR:
      return fmk(FRule::AndR, {tensorL_RI(f->premises[0], c->left(), profile),
                               tensorL_RI(f->premises[1], c->right(), profile)});
    case FRule::TopR:
      return fmk(FRule::TopR);
    case FRule::LimpR:
      return fmk(FRule::LimpR, {tensorL_RI(f->premises[0], c->right(), profile)});
    case FRule::LI2RI:
      return fmk(FRule::LI2RI, {fmk(FRule::TensorL, {f->premises[0]})});
    default:
      throw FocusError("tensorL_RI: premise is not an RI derivation");
  }
}

namespace {

FDerivPtr andL_RI(FRule which, const FDerivPtr& f, const FormulaPtr& c,
                  const LogicProfile& profile) {
  switch (f->rule) {
    case FRule::AndR:
      return fmk(FRule::AndR, {andL_RI(which, f->premises[0], c->left(), profile),
                               andL_RI(which, f->premises[1], c->right(), profile)});
    case FRule::TopR:
      return fmk(FRule::TopR);
    case FRule::LimpR:
      return fmk(FRule::LimpR, {andL_RI(which, f->premises[0], c->right(), profile)});
    case FRule::LI2RI:
      return fmk(FRule::LI2RI, {fmk(FRule::F2LI, {fmk(which, {f->premises[0]})})});
    default:
      throw FocusError("andL_RI: premise is not an RI derivation");
  }
}

}  // namespace

FDerivPtr andL1_RI(const FDerivPtr& f, const FormulaPtr& c, const LogicProfile& profile) {
  return andL_RI(FRule::AndL1, f, c, profile);
}

FDerivPtr andL2_RI(const FDerivPtr& f, const FormulaPtr& c, const LogicProfile& profile) {
  return andL_RI(FRule::AndL2, f, c, profile);
}

FDerivPtr orL_RI(const FDerivPtr& f, const FDerivPtr& g, const FormulaPtr& c,
                 const LogicProfile& profile) {
  if (c->conn() == Conn::With)
    return fmk(FRule::AndR, {orL_RI(f->premises[0], g->premises[0], c->left(), profile),
                             orL_RI(f->premises[1], g->premises[1], c->right(), profile)});
  if (profile.units && c->conn() == Conn::Top) return fmk(FRule::TopR);
  if (profile.implication && c->conn() == Conn::Limp)
    return fmk(FRule::LimpR, {orL_RI(f->premises[0], g->premises[0], c->right(), profile)});
  return fmk(FRule::LI2RI, {fmk(FRule::OrL, {f->premises[0], g->premises[0]})});
}

FDerivPtr botL_RI(const FormulaPtr& c, const LogicProfile& profile) {
  if (c->conn() == Conn::With)
    return fmk(FRule::AndR, {botL_RI(c->left(), profile), botL_RI(c->right(), profile)});
  if (c->conn() == Conn::Top) return fmk(FRule::TopR);
  if (profile.implication && c->conn() == Conn::Limp)
    return fmk(FRule::LimpR, {botL_RI(c->right(), profile)});
  return fmk(FRule::LI2RI, {fmk(FRule::BotL)});
}

FDerivPtr limpL_RI(const FDerivPtr& left, const FDerivPtr& right, const FormulaPtr& c,
                   std::size_t split, const LogicProfile& profile) {
  switch (right->rule) {
    case FRule::AndR:
      return fmk(FRule::AndR,
                 {limpL_RI(left, right->premises[0], c->left(), split, profile),
                  limpL_RI(left, right->premises[1], c->right(), split, profile)});
    case FRule::TopR:
      return fmk(FRule::TopR);
    case FRule::LimpR:
      return fmk(FRule::LimpR,
                 {limpL_RI(left, right->premises[0], c->right(), split, profile)});
    case FRule::LI2RI:
      return fmk(FRule::LI2RI,
                 {fmk(FRule::F2LI, {fmk(FRule::LimpL, {left, right->premises[0]}, split)})});
    default:
      throw FocusError("limpL_RI: premise is not an RI derivation");
  }
}

FDerivPtr ax_RI(const FormulaPtr& a, const LogicProfile& profile) {
  switch (a->conn()) {
    case Conn::Atom:
      return fmk(FRule::LI2RI, {fmk(FRule::F2LI, {fmk(FRule::Ax)})});
    case Conn::Unit:
      return IL_RI(IR_RI(), a, profile);
    case Conn::Tensor: {
      FDerivPtr lhs = ax_RI(a->left(), profile);
      FDerivPtr rhs = pass_RI(ax_RI(a->right(), profile), a->right(), profile);
      FDerivPtr pair = tensorR_RI(lhs, rhs, a->left(), {}, a, profile);
      return tensorL_RI(pair, a, profile);
    }
    case Conn::With:
      return fmk(FRule::AndR, {andL1_RI(ax_RI(a->left(), profile), a->left(), profile),
                               andL2_RI(ax_RI(a->right(), profile), a->right(), profile)});
    case Conn::Plus: {
      FDerivPtr l = orR1_RI(ax_RI(a->left(), profile), a->left(), {}, a, profile);
      FDerivPtr r = orR2_RI(ax_RI(a->right(), profile), a->right(), {}, a, profile);
      return orL_RI(l, r, a, profile);
    }
    case Conn::Top:
      return fmk(FRule::TopR);
    case Conn::Zero:
      return botL_RI(a, profile);
    case Conn::Limp: {
      FDerivPtr arg = pass_RI(ax_RI(a->left(), profile), a->left(), profile);
      FDerivPtr body = ax_RI(a->right(), profile);
      return fmk(FRule::LimpR, {limpL_RI(arg, body, a->right(), 1, profile)});
    }
  }
  throw FocusError("ax_RI: unknown connective");
}

namespace {

// Tag contributed by the head rule of one branch, as seen from a context of
// `shared` unmarked formulas followed by the branch's own extension.
Tag head_tag(const FDerivPtr& w, std::size_t shared, const std::vector<FormulaPtr>& ctx) {
  switch (w->rule) {
    case FRule::Pass:
      return shared == 0 ? Tag::bullet() : Tag::p();
    case FRule::AndL1:
      return Tag::c1();
    case FRule::AndL2:
      return Tag::c2();
    case FRule::LimpL:
      if (w->arg > shared) return Tag::bullet();
      return Tag::ctx_snapshot(std::vector<FormulaPtr>(ctx.begin(), ctx.begin() + w->arg));
    default:
      return Tag::r();
  }
}

}  // namespace

TagList branch_tags(const FDerivPtr& f, const FormulaPtr& succedent,
                    const std::vector<FormulaPtr>& ctx, const LogicProfile& profile) {
  auto branches = invert_RI(f, succedent, profile);
  TagList tags;
  tags.reserve(branches.size());
  for (const auto& b : branches) {
    if (!b.li) {
      tags.push_back(Tag::t());
      continue;
    }
    if (b.li->rule != FRule::F2LI)
      throw FocusError("branch_tags: expected F2LI at an irreducible stoup");
    tags.push_back(head_tag(b.li->premises[0], ctx.size(), ctx));
  }
  return tags;
}

FDerivPtr gen_right(const GenRight& target, FormulaPtr stoup, std::vector<FormulaPtr> ctx,
                    std::vector<RIBranch> branches, const LogicProfile& profile) {
  if (branches.empty()) throw FocusError("gen_right: no branches");
  if (stoup && stoup->conn() == Conn::Zero) return fmk(FRule::BotL);

  FRule head = FRule::TopR;  // placeholder meaning "all branches are topR"
  for (const auto& b : branches) {
    if (!b.li) continue;
    if (head == FRule::TopR) {
      head = b.li->rule;
    } else if (b.li->rule != head) {
      throw FocusError("gen_right: branches with the same stoup disagree on their head rule");
    }
  }

  auto strip = [&](std::size_t which_premise) {
    std::vector<RIBranch> out = branches;
    for (auto& b : out)
      if (b.li) b.li = b.li->premises[which_premise];
    return out;
  };

  switch (head) {
    case FRule::IL:
      return fmk(FRule::IL, {gen_right(target, nullptr, ctx, strip(0), profile)});
    case FRule::TensorL: {
      std::vector<FormulaPtr> inner{stoup->right()};
      inner.insert(inner.end(), ctx.begin(), ctx.end());
      return fmk(FRule::TensorL,
                 {gen_right(target, stoup->left(), std::move(inner), strip(0), profile)});
    }
    case FRule::OrL:
      return fmk(FRule::OrL,
                 {gen_right(target, stoup->left(), ctx, strip(0), profile),
                  gen_right(target, stoup->right(), ctx, strip(1), profile)});
    case FRule::BotL:
      throw FocusError("gen_right: botL branch against a non-Bot stoup");
    default:
      break;  // all branches are topR or F2LI-headed: decide via tags
  }

  TagList tags;
  std::vector<FDerivPtr> ws;  // null for topR branches
  for (const auto& b : branches) {
    if (!b.li) {
      tags.push_back(Tag::t());
      ws.push_back(nullptr);
      continue;
    }
    if (b.li->rule != FRule::F2LI)
      throw FocusError("gen_right: expected F2LI at an irreducible stoup");
    const FDerivPtr& w = b.li->premises[0];
    tags.push_back(head_tag(w, ctx.size(), ctx));
    ws.push_back(w);
  }

  if (valid_tags(tags, profile)) {
    FormulaPtr part = target.kind == GenRight::Kind::Or2 ? target.succedent->right()
                                                         : target.succedent->left();
    FDerivPtr inner = conjR_star(std::move(branches), part, profile);
    FDerivPtr node;
    switch (target.kind) {
      case GenRight::Kind::Or1:
        node = fmk(FRule::OrR1, {inner}, 0, tags);
        break;
      case GenRight::Kind::Or2:
        node = fmk(FRule::OrR2, {inner}, 0, tags);
        break;
      case GenRight::Kind::Tensor:
        node = fmk(FRule::TensorR, {inner, target.second}, ctx.size(), tags);
        break;
    }
    return fmk(FRule::F2LI, {node});
  }

  // Invalid list: no topR branch is present and every branch starts with the
  // same left non-invertible rule, which permutes below the right rule.
  FDerivPtr w0;
  for (const auto& w : ws)
    if (w) {
      w0 = w;
      break;
    }
  for (const auto& w : ws)
    if (!w || w->rule != w0->rule)
      throw FocusError("gen_right: invalid tag list with mixed branch heads");

  auto strip_f = [&](std::size_t which_premise) {
    std::vector<RIBranch> out = branches;
    for (auto& b : out) b.li = b.li->premises[0]->premises[which_premise];
    return out;
  };

  switch (w0->rule) {
    case FRule::Pass: {
      if (ctx.empty()) throw FocusError("gen_right: pass heads with an empty shared context");
      FormulaPtr moved = ctx.front();
      std::vector<FormulaPtr> rest(ctx.begin() + 1, ctx.end());
      FDerivPtr inner = gen_right(target, moved, std::move(rest), strip_f(0), profile);
      return fmk(FRule::F2LI, {fmk(FRule::Pass, {inner})});
    }
    case FRule::AndL1: {
      FDerivPtr inner = gen_right(target, stoup->left(), ctx, strip_f(0), profile);
      return fmk(FRule::F2LI, {fmk(FRule::AndL1, {inner})});
    }
    case FRule::AndL2: {
      FDerivPtr inner = gen_right(target, stoup->right(), ctx, strip_f(0), profile);
      return fmk(FRule::F2LI, {fmk(FRule::AndL2, {inner})});
    }
    case FRule::LimpL: {
      std::size_t split = w0->arg;
      const FDerivPtr& arg0 = w0->premises[0];
      for (const auto& w : ws)
        if (w->arg != split || !equal(w->premises[0], arg0))
          throw FocusError(
              "gen_right: limpL branches share a context split but differ in their left "
              "premises; the congruence provides no conversion for this shape");
      std::vector<FormulaPtr> rest(ctx.begin() + split, ctx.end());
      FDerivPtr inner = gen_right(target, stoup->right(), std::move(rest), strip_f(1), profile);
      return fmk(FRule::F2LI, {fmk(FRule::LimpL, {arg0, inner}, split)});
    }
    default:
      throw FocusError("gen_right: invalid tag list under head rule " +
                       std::string(frule_label(w0->rule)));
  }
}

FDerivPtr orR1_RI(const FDerivPtr& f, const FormulaPtr& stoup,
                  const std::vector<FormulaPtr>& ctx, const FormulaPtr& succedent,
                  const LogicProfile& profile) {
  auto branches = invert_RI(f, succedent->left(), profile);
  GenRight target{GenRight::Kind::Or1, succedent, nullptr};
  return fmk(FRule::LI2RI, {gen_right(target, stoup, ctx, std::move(branches), profile)});
}

FDerivPtr orR2_RI(const FDerivPtr& f, const FormulaPtr& stoup,
                  const std::vector<FormulaPtr>& ctx, const FormulaPtr& succedent,
                  const LogicProfile& profile) {
  auto branches = invert_RI(f, succedent->right(), profile);
  GenRight target{GenRight::Kind::Or2, succedent, nullptr};
  return fmk(FRule::LI2RI, {gen_right(target, stoup, ctx, std::move(branches), profile)});
}

FDerivPtr tensorR_RI(const FDerivPtr& f, const FDerivPtr& g, const FormulaPtr& stoup,
                     const std::vector<FormulaPtr>& ctx, const FormulaPtr& succedent,
                     const LogicProfile& profile) {
  auto branches = invert_RI(f, succedent->left(), profile);
  GenRight target{GenRight::Kind::Tensor, succedent, g};
  return fmk(FRule::LI2RI, {gen_right(target, stoup, ctx, std::move(branches), profile)});
}

namespace {

FDerivPtr focus_rec(const DerivPtr& d, const Sequent& s, const LogicProfile& profile) {
  std::string why;
  auto ps = try_premises(d->rule, d->arg, s, profile, &why);
  if (!ps) throw CheckError("focus: " + why);
  const auto& prem = *ps;
  switch (d->rule) {
    case Rule::Ax:
      return ax_RI(s.stoup, profile);
    case Rule::Pass:
      return pass_RI(focus_rec(d->premises[0], prem[0], profile), s.succedent, profile);
    case Rule::IL:
      return IL_RI(focus_rec(d->premises[0], prem[0], profile), s.succedent, profile);
    case Rule::IR:
      return IR_RI();
    case Rule::TensorL:
      return tensorL_RI(focus_rec(d->premises[0], prem[0], profile), s.succedent, profile);
    case Rule::TensorR: {
      FDerivPtr fl = focus_rec(d->premises[0], prem[0], profile);
      FDerivPtr fr = focus_rec(d->premises[1], prem[1], profile);
      return tensorR_RI(fl, fr, s.stoup, context_formulas(prem[0].context), s.succedent,
                        profile);
    }
    case Rule::AndL1:
      return andL1_RI(focus_rec(d->premises[0], prem[0], profile), s.succedent, profile);
    case Rule::AndL2:
      return andL2_RI(focus_rec(d->premises[0], prem[0], profile), s.succedent, profile);
    case Rule::AndR:
      return fmk(FRule::AndR, {focus_rec(d->premises[0], prem[0], profile),
                               focus_rec(d->premises[1], prem[1], profile)});
    case Rule::OrL:
      return orL_RI(focus_rec(d->premises[0], prem[0], profile),
                    focus_rec(d->premises[1], prem[1], profile), s.succedent, profile);
    case Rule::OrR1:
      return orR1_RI(focus_rec(d->premises[0], prem[0], profile), s.stoup,
                     context_formulas(s.context), s.succedent, profile);
    case Rule::OrR2:
      return orR2_RI(focus_rec(d->premises[0], prem[0], profile), s.stoup,
                     context_formulas(s.context), s.succedent, profile);
    case Rule::TopR:
      return fmk(FRule::TopR);
    case Rule::BotL:
      return botL_RI(s.succedent, profile);
    case Rule::LimpR:
      return fmk(FRule::LimpR, {focus_rec(d->premises[0], prem[0], profile)});
    case Rule::LimpL:
      return limpL_RI(focus_rec(d->premises[0], prem[0], profile),
                      focus_rec(d->premises[1], prem[1], profile), s.succedent, d->arg,
                      profile);
    case Rule::Ex:
      throw ProfileError("focus is not defined for derivations using ex");
  }
  throw FocusError("focus: unknown rule");
}

}  // namespace

FDerivPtr focus(const DerivPtr& d, const Sequent& s, const LogicProfile& profile) {
  if (profile.exchange)
    throw ProfileError(
        "focus is not defined under the exchange profile; use exchange canonicalization");
  check(d, s, profile);
  return focus_rec(d, s, profile);
}

}  // namespace stoup
