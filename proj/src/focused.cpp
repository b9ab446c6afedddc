#include "stoup/focused.hpp"

#include <sstream>

namespace stoup {

const char* phase_label(Phase p) {
  switch (p) {
    case Phase::RI: return "RI";
    case Phase::LI: return "LI";
    case Phase::F: return "F";
    case Phase::C: return "C";
  }
  return "?";
}

bool equal(const Tag& a, const Tag& b) {
  if (a.kind != b.kind) return false;
  if (a.kind != Tag::Kind::Ctx) return true;
  if (a.ctx.size() != b.ctx.size()) return false;
  for (std::size_t i = 0; i < a.ctx.size(); ++i)
    if (!equal(a.ctx[i], b.ctx[i])) return false;
  return true;
}

bool equal(const TagList& a, const TagList& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!equal(a[i], b[i])) return false;
  return true;
}

std::string print_tag(const Tag& t) {
  switch (t.kind) {
    case Tag::Kind::P: return "P";
    case Tag::Kind::C1: return "C1";
    case Tag::Kind::C2: return "C2";
    case Tag::Kind::R: return "R";
    case Tag::Kind::T: return "T";
    case Tag::Kind::Bullet: return "*";
    case Tag::Kind::Ctx: {
      std::string out = "[";
      for (std::size_t i = 0; i < t.ctx.size(); ++i) {
        if (i) out += ", ";
        out += print_formula(t.ctx[i]);
      }
      return out + "]";
    }
  }
  return "?";
}

bool valid_tags(const TagList& l, const LogicProfile& profile) {
  if (l.empty()) return false;
  bool c1 = false, c2 = false;
  const std::vector<FormulaPtr>* snapshot = nullptr;
  for (const auto& t : l) {
    switch (t.kind) {
      case Tag::Kind::R:
        return true;
      case Tag::Kind::T:
        if (profile.units) return true;
        break;
      case Tag::Kind::Bullet:
        if (profile.implication) return true;
        break;
      case Tag::Kind::C1:
        c1 = true;
        break;
      case Tag::Kind::C2:
        c2 = true;
        break;
      case Tag::Kind::Ctx:
        if (profile.implication) {
          if (snapshot == nullptr) {
            snapshot = &t.ctx;
          } else if (snapshot->size() != t.ctx.size() ||
                     ![&] {
                       for (std::size_t i = 0; i < t.ctx.size(); ++i)
                         if (!equal((*snapshot)[i], t.ctx[i])) return false;
                       return true;
                     }()) {
            return true;  // two distinct context snapshots
          }
        }
        break;
      case Tag::Kind::P:
        break;
    }
  }
  return c1 && c2;
}

Phase phase_of(FRule r) {
  switch (r) {
    case FRule::AndR:
    case FRule::LimpR:
    case FRule::TopR:
    case FRule::LI2RI:
      return Phase::RI;
    case FRule::IL:
    case FRule::TensorL:
    case FRule::OrL:
    case FRule::BotL:
    case FRule::F2LI:
      return Phase::LI;
    case FRule::Ex:
    case FRule::RI2C:
      return Phase::C;
    default:
      return Phase::F;
  }
}

const char* frule_label(FRule r) {
  switch (r) {
    case FRule::AndR: return "andR";
    case FRule::LimpR: return "limpR";
    case FRule::TopR: return "topR";
    case FRule::LI2RI: return "LI2RI";
    case FRule::IL: return "IL";
    case FRule::TensorL: return "otimesL";
    case FRule::OrL: return "orL";
    case FRule::BotL: return "botL";
    case FRule::F2LI: return "F2LI";
    case FRule::Pass: return "pass";
    case FRule::Ax: return "ax";
    case FRule::IR: return "IR";
    case FRule::TensorR: return "otimesR";
    case FRule::OrR1: return "orR1";
    case FRule::OrR2: return "orR2";
    case FRule::AndL1: return "andL1";
    case FRule::AndL2: return "andL2";
    case FRule::LimpL: return "limpL";
    case FRule::Ex: return "ex";
    case FRule::RI2C: return "RI2C";
  }
  return "?";
}

std::optional<FRule> frule_from_label(const std::string& label) {
  static const FRule all[] = {
      FRule::AndR, FRule::LimpR, FRule::TopR,  FRule::LI2RI, FRule::IL,
      FRule::TensorL, FRule::OrL, FRule::BotL, FRule::F2LI,  FRule::Pass,
      FRule::Ax,   FRule::IR,    FRule::TensorR, FRule::OrR1, FRule::OrR2,
      FRule::AndL1, FRule::AndL2, FRule::LimpL, FRule::Ex,   FRule::RI2C};
  for (FRule r : all)
    if (label == frule_label(r)) return r;
  return std::nullopt;
}

FDerivPtr fmk(FRule rule, std::vector<FDerivPtr> premises, std::size_t arg, TagList tags) {
  auto d = std::make_shared<FDeriv>();
  d->rule = rule;
  d->arg = arg;
  d->tags = std::move(tags);
  d->premises = std::move(premises);
  return d;
}

bool equal(const FDerivPtr& a, const FDerivPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->rule != b->rule || a->arg != b->arg || !equal(a->tags, b->tags) ||
      a->premises.size() != b->premises.size())
    return false;
  for (std::size_t i = 0; i < a->premises.size(); ++i)
    if (!equal(a->premises[i], b->premises[i])) return false;
  return true;
}

std::string serialize(const FDerivPtr& d) {
  std::ostringstream out;
  struct Walk {
    std::ostringstream& out;
    void run(const FDerivPtr& d) {
      out << frule_label(d->rule);
      if (d->rule == FRule::TensorR || d->rule == FRule::LimpL || d->rule == FRule::Ex)
        out << '[' << d->arg << ']';
      if (!d->tags.empty()) {
        out << '{';
        for (std::size_t i = 0; i < d->tags.size(); ++i) {
          if (i) out << ',';
          out << print_tag(d->tags[i]);
        }
        out << '}';
      }
      if (!d->premises.empty()) {
        out << '(';
        for (std::size_t i = 0; i < d->premises.size(); ++i) {
          if (i) out << ',';
          run(d->premises[i]);
        }
        out << ')';
      }
    }
  } walk{out};
  walk.run(d);
  return out.str();
}

std::size_t node_count(const FDerivPtr& d) {
  std::size_t n = 1;
  for (const auto& p : d->premises) n += node_count(p);
  return n;
}

FGoal FGoal::root(const Sequent& s, const LogicProfile& profile) {
  FGoal g;
  g.sequent = s;
  if (profile.exchange) {
    g.phase = Phase::C;
    g.movable = s.context.size();
  } else {
    g.phase = Phase::RI;
  }
  return g;
}

namespace {

[[noreturn]] void bad(const std::string& msg, const FGoal& goal, const std::string& path) {
  throw CheckError(msg + " at [" + path + "] (phase " + phase_label(goal.phase) +
                   ", sequent: " + print_sequent(goal.sequent) + ")");
}

Context slice(const Context& ctx, std::size_t from, std::size_t to) {
  return Context(ctx.begin() + from, ctx.begin() + to);
}

std::size_t first_marked(const Context& ctx) {
  for (std::size_t i = 0; i < ctx.size(); ++i)
    if (ctx[i].marked) return i;
  return ctx.size();
}

// Premise goals of a focused rule applied root-first to `goal`.
std::vector<FGoal> fpremises(const FDeriv& d, const FGoal& goal, const LogicProfile& profile,
                             const std::string& path) {
  const Sequent& s = goal.sequent;
  const Context& ctx = s.context;
  Phase want = phase_of(d.rule);
  if (want != goal.phase)
    bad(std::string(frule_label(d.rule)) + " lives in phase " + phase_label(want), goal, path);

  auto ri_goal = [&](Sequent seq, bool tagged, TagList list) {
    FGoal g;
    g.phase = Phase::RI;
    g.sequent = std::move(seq);
    g.tagged = tagged;
    g.list = std::move(list);
    return g;
  };
  auto li_goal = [&](Sequent seq, bool tagged, Tag tag) {
    FGoal g;
    g.phase = Phase::LI;
    g.sequent = std::move(seq);
    g.tagged = tagged;
    g.tag = std::move(tag);
    return g;
  };
  auto f_goal = [&](Sequent seq, bool tagged, Tag tag) {
    FGoal g;
    g.phase = Phase::F;
    g.sequent = std::move(seq);
    g.tagged = tagged;
    g.tag = std::move(tag);
    return g;
  };

  switch (d.rule) {
    // ---- phase RI ----
    case FRule::AndR: {
      if (s.succedent->conn() != Conn::With) bad("andR needs a /\\ succedent", goal, path);
      TagList l1, l2;
      if (goal.tagged) {
        std::size_t total = succedent_parts(s.succedent, profile);
        if (goal.list.size() != total)
          bad("tag list has " + std::to_string(goal.list.size()) + " entries, succedent splits into " +
                  std::to_string(total),
              goal, path);
        std::size_t n1 = succedent_parts(s.succedent->left(), profile);
        l1.assign(goal.list.begin(), goal.list.begin() + n1);
        l2.assign(goal.list.begin() + n1, goal.list.end());
      }
      return {ri_goal({s.stoup, ctx, s.succedent->left()}, goal.tagged, std::move(l1)),
              ri_goal({s.stoup, ctx, s.succedent->right()}, goal.tagged, std::move(l2))};
    }
    case FRule::LimpR: {
      if (!profile.implication) bad("limpR requires the implication profile", goal, path);
      if (s.succedent->conn() != Conn::Limp) bad("limpR needs a -o succedent", goal, path);
      Context p = ctx;
      p.push_back(ContextEntry{s.succedent->left(), goal.tagged});
      return {ri_goal({s.stoup, std::move(p), s.succedent->right()}, goal.tagged, goal.list)};
    }
    case FRule::TopR: {
      if (!profile.units) bad("topR requires the units profile", goal, path);
      if (s.succedent->conn() != Conn::Top) bad("topR needs succedent Top", goal, path);
      if (goal.tagged && !(goal.list.size() == 1 && goal.list[0].kind == Tag::Kind::T))
        bad("a tagged topR carries exactly the tag list [T]", goal, path);
      return {};
    }
    case FRule::LI2RI: {
      if (is_negative(s.succedent, profile))
        bad("LI2RI needs a non-negative succedent", goal, path);
      if (goal.tagged && goal.list.size() != 1)
        bad("LI2RI under a tag list needs a singleton list", goal, path);
      return {li_goal(s, goal.tagged, goal.tagged ? goal.list[0] : Tag{})};
    }

    // ---- phase LI ----
    case FRule::IL:
    case FRule::TensorL:
    case FRule::OrL:
    case FRule::BotL:
    case FRule::F2LI: {
      if (is_negative(s.succedent, profile))
        bad("left-invertible phase needs a non-negative succedent", goal, path);
      if (goal.tagged && d.rule != FRule::F2LI)
        bad("a tagged left-invertible sequent admits only F2LI", goal, path);
      switch (d.rule) {
        case FRule::IL:
          if (!s.stoup || s.stoup->conn() != Conn::Unit) bad("IL needs stoup I", goal, path);
          return {li_goal({nullptr, ctx, s.succedent}, false, Tag{})};
        case FRule::TensorL: {
          if (!s.stoup || s.stoup->conn() != Conn::Tensor)
            bad("otimesL needs a tensor stoup", goal, path);
          Context p{ContextEntry{s.stoup->right(), false}};
          p.insert(p.end(), ctx.begin(), ctx.end());
          Sequent seq{s.stoup->left(), std::move(p), s.succedent};
          if (profile.exchange) {
            FGoal g;
            g.phase = Phase::C;
            g.sequent = std::move(seq);
            g.movable = 1;
            return {g};
          }
          return {li_goal(std::move(seq), false, Tag{})};
        }
        case FRule::OrL:
          if (!s.stoup || s.stoup->conn() != Conn::Plus) bad("orL needs a \\/ stoup", goal, path);
          return {li_goal({s.stoup->left(), ctx, s.succedent}, false, Tag{}),
                  li_goal({s.stoup->right(), ctx, s.succedent}, false, Tag{})};
        case FRule::BotL:
          if (!profile.units) bad("botL requires the units profile", goal, path);
          if (!s.stoup || s.stoup->conn() != Conn::Zero) bad("botL needs stoup Bot", goal, path);
          return {};
        default:  // F2LI
          if (!is_irreducible_stoup(s.stoup, profile))
            bad("F2LI needs an irreducible stoup", goal, path);
          return {f_goal(s, goal.tagged, goal.tag)};
      }
    }

    // ---- phase F ----
    case FRule::Pass: {
      if (s.stoup) bad("pass needs an empty stoup", goal, path);
      if (ctx.empty()) bad("pass needs a non-empty context", goal, path);
      const ContextEntry& head = ctx.front();
      if (head.marked) {
        if (!(goal.tagged && goal.tag.kind == Tag::Kind::Bullet))
          bad("pass on a bullet-marked formula needs tag *", goal, path);
      } else if (goal.tagged && goal.tag.kind != Tag::Kind::P) {
        bad("pass needs tag P, found " + print_tag(goal.tag), goal, path);
      }
      return {li_goal({head.formula, strip_marks(slice(ctx, 1, ctx.size())), s.succedent},
                      false, Tag{})};
    }
    case FRule::Ax:
      if (!s.stoup || s.stoup->conn() != Conn::Atom) bad("ax needs an atomic stoup", goal, path);
      if (!ctx.empty()) bad("ax needs an empty context", goal, path);
      if (!equal(s.stoup, s.succedent)) bad("ax needs stoup = succedent", goal, path);
      if (goal.tagged && goal.tag.kind != Tag::Kind::R)
        bad("ax needs tag R, found " + print_tag(goal.tag), goal, path);
      return {};
    case FRule::IR:
      if (s.stoup || !ctx.empty() || s.succedent->conn() != Conn::Unit)
        bad("IR proves exactly - | . |- I", goal, path);
      if (goal.tagged && goal.tag.kind != Tag::Kind::R)
        bad("IR needs tag R, found " + print_tag(goal.tag), goal, path);
      return {};
    case FRule::TensorR: {
      if (s.succedent->conn() != Conn::Tensor) bad("otimesR needs a tensor succedent", goal, path);
      if (goal.tagged && goal.tag.kind != Tag::Kind::R)
        bad("otimesR needs tag R, found " + print_tag(goal.tag), goal, path);
      if (d.arg > ctx.size()) bad("otimesR split out of range", goal, path);
      if (d.tags.size() != succedent_parts(s.succedent->left(), profile))
        bad("otimesR tag list length mismatch", goal, path);
      if (!valid_tags(d.tags, profile)) bad("otimesR needs a valid tag list", goal, path);
      return {ri_goal({s.stoup, strip_marks(slice(ctx, 0, d.arg)), s.succedent->left()}, true,
                      d.tags),
              ri_goal({nullptr, strip_marks(slice(ctx, d.arg, ctx.size())), s.succedent->right()},
                      false, {})};
    }
    case FRule::OrR1:
    case FRule::OrR2: {
      if (s.succedent->conn() != Conn::Plus) bad("orR needs a \\/ succedent", goal, path);
      if (goal.tagged && goal.tag.kind != Tag::Kind::R)
        bad("orR needs tag R, found " + print_tag(goal.tag), goal, path);
      FormulaPtr side = d.rule == FRule::OrR1 ? s.succedent->left() : s.succedent->right();
      if (d.tags.size() != succedent_parts(side, profile))
        bad("orR tag list length mismatch", goal, path);
      if (!valid_tags(d.tags, profile)) bad("orR needs a valid tag list", goal, path);
      return {ri_goal({s.stoup, strip_marks(ctx), side}, true, d.tags)};
    }
    case FRule::AndL1:
    case FRule::AndL2: {
      if (!s.stoup || s.stoup->conn() != Conn::With) bad("andL needs a /\\ stoup", goal, path);
      Tag::Kind want_tag = d.rule == FRule::AndL1 ? Tag::Kind::C1 : Tag::Kind::C2;
      if (goal.tagged && goal.tag.kind != want_tag)
        bad(std::string(frule_label(d.rule)) + " does not match tag " + print_tag(goal.tag),
            goal, path);
      FormulaPtr side = d.rule == FRule::AndL1 ? s.stoup->left() : s.stoup->right();
      return {li_goal({side, strip_marks(ctx), s.succedent}, false, Tag{})};
    }
    case FRule::LimpL: {
      if (!profile.implication) bad("limpL requires the implication profile", goal, path);
      if (!s.stoup || s.stoup->conn() != Conn::Limp) bad("limpL needs a -o stoup", goal, path);
      if (d.arg > ctx.size()) bad("limpL split out of range", goal, path);
      std::size_t p = first_marked(ctx);
      if (d.arg <= p) {
        // no marked formula goes to the left premise
        if (goal.tagged) {
          if (goal.tag.kind != Tag::Kind::Ctx)
            bad("limpL without marked formulas needs a context tag", goal, path);
          Tag expected = Tag::ctx_snapshot(context_formulas(slice(ctx, 0, d.arg)));
          if (!equal(goal.tag, expected))
            bad("limpL context tag is " + print_tag(goal.tag) + ", expected " +
                    print_tag(expected),
                goal, path);
        }
      } else {
        for (std::size_t i = p; i < d.arg; ++i)
          if (!ctx[i].marked)
            bad("limpL's marked segment must start at the leftmost marked formula", goal, path);
        if (!(goal.tagged && goal.tag.kind == Tag::Kind::Bullet))
          bad("limpL moving marked formulas left needs tag *", goal, path);
      }
      return {ri_goal({nullptr, strip_marks(slice(ctx, 0, d.arg)), s.stoup->left()}, false, {}),
              li_goal({s.stoup->right(), strip_marks(slice(ctx, d.arg, ctx.size())), s.succedent},
                      false, Tag{})};
    }

    // ---- phase C ----
    case FRule::Ex: {
      if (!profile.exchange) bad("ex requires the exchange profile", goal, path);
      if (goal.movable == 0) bad("ex needs a movable context formula", goal, path);
      std::size_t placed = ctx.size() - goal.movable;
      if (d.arg > placed) bad("ex insertion position out of range", goal, path);
      Context p = ctx;
      ContextEntry moved = p[goal.movable - 1];
      p.erase(p.begin() + (goal.movable - 1));
      p.insert(p.begin() + (goal.movable - 1) + d.arg, moved);
      FGoal g;
      g.phase = Phase::C;
      g.sequent = Sequent{s.stoup, std::move(p), s.succedent};
      g.movable = goal.movable - 1;
      return {g};
    }
    case FRule::RI2C: {
      if (!profile.exchange) bad("RI2C requires the exchange profile", goal, path);
      if (goal.movable != 0) bad("RI2C needs all context formulas placed", goal, path);
      return {ri_goal(s, false, {})};
    }
  }
  bad("unknown focused rule", goal, path);
}

void check_rec(const FDerivPtr& d, const FGoal& goal, const LogicProfile& profile,
               std::string& path) {
  if (!d) throw CheckError("null focused derivation node at [" + path + "]");
  auto ps = fpremises(*d, goal, profile, path);
  if (ps.size() != d->premises.size())
    throw CheckError(std::string(frule_label(d->rule)) + " expects " +
                     std::to_string(ps.size()) + " premises, has " +
                     std::to_string(d->premises.size()) + " at [" + path + "]");
  for (std::size_t i = 0; i < ps.size(); ++i) {
    std::string sub = path.empty() ? std::to_string(i) : path + "." + std::to_string(i);
    std::swap(path, sub);
    check_rec(d->premises[i], ps[i], profile, path);
    std::swap(path, sub);
  }
}

DerivPtr emb_rec(const FDerivPtr& d, const FGoal& goal, const LogicProfile& profile) {
  auto ps = fpremises(*d, goal, profile, "");
  std::vector<DerivPtr> sub;
  sub.reserve(d->premises.size());
  for (std::size_t i = 0; i < d->premises.size(); ++i)
    sub.push_back(emb_rec(d->premises[i], ps[i], profile));
  switch (d->rule) {
    case FRule::LI2RI:
    case FRule::F2LI:
    case FRule::RI2C:
      return sub[0];
    case FRule::AndR:
      return mk(Rule::AndR, std::move(sub));
    case FRule::LimpR:
      return mk(Rule::LimpR, std::move(sub));
    case FRule::TopR:
      return mk(Rule::TopR);
    case FRule::IL:
      return mk(Rule::IL, std::move(sub));
    case FRule::TensorL:
      return mk(Rule::TensorL, std::move(sub));
    case FRule::OrL:
      return mk(Rule::OrL, std::move(sub));
    case FRule::BotL:
      return mk(Rule::BotL);
    case FRule::Pass:
      return mk(Rule::Pass, std::move(sub));
    case FRule::Ax:
      return mk(Rule::Ax);
    case FRule::IR:
      return mk(Rule::IR);
    case FRule::TensorR:
      return mk(Rule::TensorR, std::move(sub), d->arg);
    case FRule::OrR1:
      return mk(Rule::OrR1, std::move(sub));
    case FRule::OrR2:
      return mk(Rule::OrR2, std::move(sub));
    case FRule::AndL1:
      return mk(Rule::AndL1, std::move(sub));
    case FRule::AndL2:
      return mk(Rule::AndL2, std::move(sub));
    case FRule::LimpL:
      return mk(Rule::LimpL, std::move(sub), d->arg);
    case FRule::Ex: {
      // The moved formula sits at index movable-1+arg in the premise and at
      // movable-1 in the conclusion: arg adjacent swaps, leftward.
      DerivPtr out = sub[0];
      std::size_t target = goal.movable - 1;
      for (std::size_t t = target + d->arg; t > target; --t)
        out = mk(Rule::Ex, {out}, t - 1);
      return out;
    }
  }
  throw CheckError("unknown focused rule in emb");
}

}  // namespace

void check_focused(const FDerivPtr& d, const Sequent& s, const LogicProfile& profile) {
  validate(s, profile);
  for (const auto& e : s.context)
    if (e.marked) throw CheckError("top-level sequents cannot carry bullet marks");
  std::string path;
  FGoal root = FGoal::root(s, profile);
  check_rec(d, root, profile, path);
}

void check_focused(const FDerivPtr& d, const FGoal& goal, const LogicProfile& profile) {
  std::string path;
  check_rec(d, goal, profile, path);
}

DerivPtr emb(const FDerivPtr& d, const Sequent& s, const LogicProfile& profile) {
  return emb_rec(d, FGoal::root(s, profile), profile);
}

DerivPtr emb(const FDerivPtr& d, const FGoal& goal, const LogicProfile& profile) {
  return emb_rec(d, goal, profile);
}

}  // namespace stoup
