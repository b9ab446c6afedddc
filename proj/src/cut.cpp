#include "stoup/cut.hpp"

namespace stoup {

namespace {

std::vector<Sequent> prems(const DerivPtr& d, const Sequent& s, const LogicProfile& profile) {
  std::string why;
  auto ps = try_premises(d->rule, d->arg, s, profile, &why);
  if (!ps) throw CheckError("malformed derivation during cut: " + why);
  return *ps;
}

// Chain of ex nodes moving the formula at `from` in the premise context to
// `to` in the conclusion, one adjacent swap per node.
DerivPtr move_right(DerivPtr d, std::size_t from, std::size_t count) {
  for (std::size_t q = from; q < from + count; ++q) d = mk(Rule::Ex, {d}, q);
  return d;
}

DerivPtr move_left(DerivPtr d, std::size_t from, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) d = mk(Rule::Ex, {d}, from - k - 1);
  return d;
}

struct Cut {
  const LogicProfile& profile;

  DerivPtr scut(const DerivPtr& f, const Sequent& sf, const DerivPtr& g, const Sequent& sg) {
    if (g->rule == Rule::Ax) return f;
    switch (f->rule) {
      case Rule::Ax:
        return g;
      case Rule::Pass:
      case Rule::IL:
      case Rule::TensorL:
      case Rule::AndL1:
      case Rule::AndL2: {
        auto ps = prems(f, sf, profile);
        return mk(f->rule, {scut(f->premises[0], ps[0], g, sg)}, f->arg);
      }
      case Rule::OrL: {
        auto ps = prems(f, sf, profile);
        return mk(Rule::OrL, {scut(f->premises[0], ps[0], g, sg),
                              scut(f->premises[1], ps[1], g, sg)});
      }
      case Rule::BotL:
        return mk(Rule::BotL);
      case Rule::Ex: {
        auto ps = prems(f, sf, profile);
        return mk(Rule::Ex, {scut(f->premises[0], ps[0], g, sg)}, f->arg);
      }
      case Rule::LimpL: {
        auto ps = prems(f, sf, profile);
        return mk(Rule::LimpL, {f->premises[0], scut(f->premises[1], ps[1], g, sg)}, f->arg);
      }
      default:
        break;  // f ends with a right rule; analyze g
    }
    auto fp = prems(f, sf, profile);
    auto gp = prems(g, sg, profile);
    std::size_t gamma = sf.context.size();
    switch (g->rule) {
      // principal cases: g applies a left rule to the cut formula
      case Rule::IL:
        if (f->rule != Rule::IR) throw CheckError("scut: IL against a non-IR right rule");
        return g->premises[0];
      case Rule::TensorL: {
        if (f->rule != Rule::TensorR)
          throw CheckError("scut: otimesL against a non-otimesR right rule");
        DerivPtr inner = ccut(f->premises[1], fp[1], g->premises[0], gp[0], 0);
        Sequent si{gp[0].stoup, {}, gp[0].succedent};
        si.context = fp[1].context;
        si.context.insert(si.context.end(), gp[0].context.begin() + 1, gp[0].context.end());
        return scut(f->premises[0], fp[0], inner, si);
      }
      case Rule::AndL1:
        if (f->rule != Rule::AndR) throw CheckError("scut: andL1 against a non-andR right rule");
        return scut(f->premises[0], fp[0], g->premises[0], gp[0]);
      case Rule::AndL2:
        if (f->rule != Rule::AndR) throw CheckError("scut: andL2 against a non-andR right rule");
        return scut(f->premises[1], fp[1], g->premises[0], gp[0]);
      case Rule::OrL:
        if (f->rule == Rule::OrR1) return scut(f->premises[0], fp[0], g->premises[0], gp[0]);
        if (f->rule == Rule::OrR2) return scut(f->premises[0], fp[0], g->premises[1], gp[1]);
        throw CheckError("scut: orL against a non-orR right rule");
      case Rule::LimpL: {
        if (f->rule != Rule::LimpR) throw CheckError("scut: limpL against a non-limpR rule");
        DerivPtr inner = ccut(g->premises[0], gp[0], f->premises[0], fp[0], gamma);
        Sequent si{fp[0].stoup, {}, fp[0].succedent};
        si.context = Context(sf.context.begin(), sf.context.end());
        si.context.insert(si.context.end(), gp[0].context.begin(), gp[0].context.end());
        return scut(inner, si, g->premises[1], gp[1]);
      }
      // commutative cases: g's last rule leaves its stoup untouched
      case Rule::TensorR:
        return mk(Rule::TensorR,
                  {scut(f, sf, g->premises[0], gp[0]), g->premises[1]}, gamma + g->arg);
      case Rule::AndR:
        return mk(Rule::AndR, {scut(f, sf, g->premises[0], gp[0]),
                               scut(f, sf, g->premises[1], gp[1])});
      case Rule::OrR1:
      case Rule::OrR2:
        return mk(g->rule, {scut(f, sf, g->premises[0], gp[0])});
      case Rule::TopR:
        return mk(Rule::TopR);
      case Rule::Ex:
        return mk(Rule::Ex, {scut(f, sf, g->premises[0], gp[0])}, gamma + g->arg);
      case Rule::LimpR:
        return mk(Rule::LimpR, {scut(f, sf, g->premises[0], gp[0])});
      default:
        throw CheckError("scut: unexpected rule pair " + std::string(rule_label(f->rule)) +
                         " / " + std::string(rule_label(g->rule)));
    }
  }

  DerivPtr ccut(const DerivPtr& f, const Sequent& sf, const DerivPtr& g, const Sequent& sg,
                std::size_t pos) {
    std::size_t m = sf.context.size();
    auto gp = prems(g, sg, profile);
    switch (g->rule) {
      case Rule::Pass:
        if (pos == 0) return scut(f, sf, g->premises[0], gp[0]);
        return mk(Rule::Pass, {ccut(f, sf, g->premises[0], gp[0], pos - 1)});
      case Rule::IL:
      case Rule::AndL1:
      case Rule::AndL2:
        return mk(g->rule, {ccut(f, sf, g->premises[0], gp[0], pos)});
      case Rule::TensorL:
        return mk(Rule::TensorL, {ccut(f, sf, g->premises[0], gp[0], pos + 1)});
      case Rule::TensorR:
        if (pos < g->arg)
          return mk(Rule::TensorR,
                    {ccut(f, sf, g->premises[0], gp[0], pos), g->premises[1]},
                    g->arg + m - 1);
        return mk(Rule::TensorR,
                  {g->premises[0], ccut(f, sf, g->premises[1], gp[1], pos - g->arg)}, g->arg);
      case Rule::AndR:
        return mk(Rule::AndR, {ccut(f, sf, g->premises[0], gp[0], pos),
                               ccut(f, sf, g->premises[1], gp[1], pos)});
      case Rule::OrL:
        return mk(Rule::OrL, {ccut(f, sf, g->premises[0], gp[0], pos),
                              ccut(f, sf, g->premises[1], gp[1], pos)});
      case Rule::OrR1:
      case Rule::OrR2:
        return mk(g->rule, {ccut(f, sf, g->premises[0], gp[0], pos)});
      case Rule::TopR:
        return mk(Rule::TopR);
      case Rule::BotL:
        return mk(Rule::BotL);
      case Rule::Ex: {
        std::size_t p = g->arg;
        if (pos == p) {
          // the cut formula is the left half of the swapped pair
          DerivPtr inner = ccut(f, sf, g->premises[0], gp[0], p + 1);
          return move_right(inner, p, m);
        }
        if (pos == p + 1) {
          DerivPtr inner = ccut(f, sf, g->premises[0], gp[0], p);
          return move_left(inner, p + m, m);
        }
        std::size_t p2 = pos < p ? p + m - 1 : p;
        return mk(Rule::Ex, {ccut(f, sf, g->premises[0], gp[0], pos)}, p2);
      }
      case Rule::LimpL:
        if (pos < g->arg)
          return mk(Rule::LimpL,
                    {ccut(f, sf, g->premises[0], gp[0], pos), g->premises[1]},
                    g->arg + m - 1);
        return mk(Rule::LimpL,
                  {g->premises[0], ccut(f, sf, g->premises[1], gp[1], pos - g->arg)}, g->arg);
      case Rule::LimpR:
        return mk(Rule::LimpR, {ccut(f, sf, g->premises[0], gp[0], pos)});
      case Rule::Ax:
      case Rule::IR:
      default:
        throw CheckError("ccut: rule " + std::string(rule_label(g->rule)) +
                         " has no context position to cut at");
    }
  }
};

struct AndCtx {
  int which;  // 1 or 2
  FormulaPtr partner;
  const LogicProfile& profile;

  Rule stoup_rule() const { return which == 1 ? Rule::AndL1 : Rule::AndL2; }

  DerivPtr run(const DerivPtr& d, const Sequent& sd, std::size_t pos) {
    auto dp = prems(d, sd, profile);
    switch (d->rule) {
      case Rule::Pass:
        if (pos == 0) return mk(Rule::Pass, {mk(stoup_rule(), {d->premises[0]})});
        return mk(Rule::Pass, {run(d->premises[0], dp[0], pos - 1)});
      case Rule::IL:
      case Rule::AndL1:
      case Rule::AndL2:
      case Rule::OrR1:
      case Rule::OrR2:
      case Rule::LimpR:
        return mk(d->rule, {run(d->premises[0], dp[0], pos)}, d->arg);
      case Rule::TensorL:
        return mk(Rule::TensorL, {run(d->premises[0], dp[0], pos + 1)});
      case Rule::TensorR:
      case Rule::LimpL:
        if (pos < d->arg)
          return mk(d->rule, {run(d->premises[0], dp[0], pos), d->premises[1]}, d->arg);
        return mk(d->rule, {d->premises[0], run(d->premises[1], dp[1], pos - d->arg)}, d->arg);
      case Rule::AndR:
      case Rule::OrL:
        return mk(d->rule, {run(d->premises[0], dp[0], pos), run(d->premises[1], dp[1], pos)});
      case Rule::TopR:
        return mk(Rule::TopR);
      case Rule::BotL:
        return mk(Rule::BotL);
      case Rule::Ex: {
        std::size_t p = d->arg;
        std::size_t inner = pos == p ? p + 1 : pos == p + 1 ? p : pos;
        return mk(Rule::Ex, {run(d->premises[0], dp[0], inner)}, p);
      }
      case Rule::Ax:
      case Rule::IR:
      default:
        throw CheckError("and_left_ctx: rule " + std::string(rule_label(d->rule)) +
                         " has no context position");
    }
  }
};

}  // namespace

DerivPtr scut(const DerivPtr& f, const Sequent& sf, const DerivPtr& g, const Sequent& sg,
              const LogicProfile& profile) {
  check(f, sf, profile);
  check(g, sg, profile);
  if (!sg.stoup || !equal(sf.succedent, sg.stoup))
    throw CheckError("scut: cut formula mismatch (f proves " + print_formula(sf.succedent) +
                     ", g's stoup is " + (sg.stoup ? print_formula(sg.stoup) : "empty") + ")");
  Cut cut{profile};
  return cut.scut(f, sf, g, sg);
}

DerivPtr ccut(const DerivPtr& f, const Sequent& sf, const DerivPtr& g, const Sequent& sg,
              std::size_t pos, const LogicProfile& profile) {
  check(f, sf, profile);
  check(g, sg, profile);
  if (sf.stoup) throw CheckError("ccut: first derivation must have an empty stoup");
  if (pos >= sg.context.size()) throw CheckError("ccut: position out of range");
  if (!equal(sg.context[pos].formula, sf.succedent))
    throw CheckError("ccut: context formula at position " + std::to_string(pos) +
                     " is not the cut formula");
  Cut cut{profile};
  return cut.ccut(f, sf, g, sg, pos);
}

DerivPtr and_left_ctx(int i, const DerivPtr& d, const Sequent& sd, std::size_t pos,
                      const FormulaPtr& partner, const LogicProfile& profile) {
  if (i != 1 && i != 2) throw CheckError("and_left_ctx: index must be 1 or 2");
  check(d, sd, profile);
  if (pos >= sd.context.size()) throw CheckError("and_left_ctx: position out of range");
  AndCtx op{i, partner, profile};
  return op.run(d, sd, pos);
}

}  // namespace stoup
