#include "stoup/derivation.hpp"

#include <sstream>

namespace stoup {

const char* rule_label(Rule r) {
  switch (r) {
    case Rule::Ax: return "ax";
    case Rule::Pass: return "pass";
    case Rule::IL: return "IL";
    case Rule::IR: return "IR";
    case Rule::TensorL: return "otimesL";
    case Rule::TensorR: return "otimesR";
    case Rule::AndL1: return "andL1";
    case Rule::AndL2: return "andL2";
    case Rule::AndR: return "andR";
    case Rule::OrL: return "orL";
    case Rule::OrR1: return "orR1";
    case Rule::OrR2: return "orR2";
    case Rule::TopR: return "topR";
    case Rule::BotL: return "botL";
    case Rule::Ex: return "ex";
    case Rule::LimpL: return "limpL";
    case Rule::LimpR: return "limpR";
  }
  return "?";
}

std::optional<Rule> rule_from_label(const std::string& label) {
  static const Rule all[] = {
      Rule::Ax,    Rule::Pass,  Rule::IL,    Rule::IR,    Rule::TensorL, Rule::TensorR,
      Rule::AndL1, Rule::AndL2, Rule::AndR,  Rule::OrL,   Rule::OrR1,    Rule::OrR2,
      Rule::TopR,  Rule::BotL,  Rule::Ex,    Rule::LimpL, Rule::LimpR};
  for (Rule r : all)
    if (label == rule_label(r)) return r;
  return std::nullopt;
}

bool rule_allowed(Rule r, const LogicProfile& profile) {
  switch (r) {
    case Rule::TopR:
    case Rule::BotL:
      return profile.units;
    case Rule::Ex:
      return profile.exchange;
    case Rule::LimpL:
    case Rule::LimpR:
      return profile.implication;
    default:
      return true;
  }
}

bool rule_takes_arg(Rule r) {
  return r == Rule::TensorR || r == Rule::LimpL || r == Rule::Ex;
}

std::size_t rule_arity(Rule r) {
  switch (r) {
    case Rule::Ax:
    case Rule::IR:
    case Rule::TopR:
    case Rule::BotL:
      return 0;
    case Rule::TensorR:
    case Rule::AndR:
    case Rule::OrL:
    case Rule::LimpL:
      return 2;
    default:
      return 1;
  }
}

DerivPtr mk(Rule rule, std::vector<DerivPtr> premises, std::size_t arg) {
  auto d = std::make_shared<Deriv>();
  d->rule = rule;
  d->arg = arg;
  d->premises = std::move(premises);
  return d;
}

bool equal(const DerivPtr& a, const DerivPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->rule != b->rule || a->arg != b->arg || a->premises.size() != b->premises.size())
    return false;
  for (std::size_t i = 0; i < a->premises.size(); ++i)
    if (!equal(a->premises[i], b->premises[i])) return false;
  return true;
}

std::size_t node_count(const DerivPtr& d) {
  std::size_t n = 1;
  for (const auto& p : d->premises) n += node_count(p);
  return n;
}

std::string serialize(const DerivPtr& d) {
  std::ostringstream out;
  struct Walk {
    std::ostringstream& out;
    void run(const DerivPtr& d) {
      out << rule_label(d->rule);
      if (rule_takes_arg(d->rule)) out << '[' << d->arg << ']';
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

namespace {

bool no_marks(const Sequent& s) {
  for (const auto& e : s.context)
    if (e.marked) return false;
  return true;
}

std::optional<std::vector<Sequent>> fail(std::string* why, std::string msg) {
  if (why) *why = std::move(msg);
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<Sequent>> try_premises(Rule rule, std::size_t arg,
                                                 const Sequent& s,
                                                 const LogicProfile& profile,
                                                 std::string* why) {
  if (!rule_allowed(rule, profile))
    return fail(why, std::string(rule_label(rule)) + " is not part of profile " + profile.name());
  const auto& ctx = s.context;
  switch (rule) {
    case Rule::Ax:
      if (!s.stoup) return fail(why, "ax needs a stoup formula");
      if (!ctx.empty()) return fail(why, "ax needs an empty context");
      if (!equal(s.stoup, s.succedent)) return fail(why, "ax needs stoup = succedent");
      return std::vector<Sequent>{};
    case Rule::Pass: {
      if (s.stoup) return fail(why, "pass needs an empty stoup");
      if (ctx.empty()) return fail(why, "pass needs a non-empty context");
      Sequent p{ctx.front().formula, Context(ctx.begin() + 1, ctx.end()), s.succedent};
      return std::vector<Sequent>{std::move(p)};
    }
    case Rule::IL:
      if (!s.stoup || s.stoup->conn() != Conn::Unit) return fail(why, "IL needs stoup I");
      return std::vector<Sequent>{Sequent{nullptr, ctx, s.succedent}};
    case Rule::IR:
      if (s.stoup || !ctx.empty() || s.succedent->conn() != Conn::Unit)
        return fail(why, "IR proves exactly - | . |- I");
      return std::vector<Sequent>{};
    case Rule::TensorL: {
      if (!s.stoup || s.stoup->conn() != Conn::Tensor)
        return fail(why, "otimesL needs a tensor stoup");
      Context p{ContextEntry{s.stoup->right(), false}};
      p.insert(p.end(), ctx.begin(), ctx.end());
      return std::vector<Sequent>{Sequent{s.stoup->left(), std::move(p), s.succedent}};
    }
    case Rule::TensorR: {
      if (s.succedent->conn() != Conn::Tensor)
        return fail(why, "otimesR needs a tensor succedent");
      if (arg > ctx.size()) return fail(why, "otimesR split out of range");
      Sequent l{s.stoup, Context(ctx.begin(), ctx.begin() + arg), s.succedent->left()};
      Sequent r{nullptr, Context(ctx.begin() + arg, ctx.end()), s.succedent->right()};
      return std::vector<Sequent>{std::move(l), std::move(r)};
    }
    case Rule::AndL1:
      if (!s.stoup || s.stoup->conn() != Conn::With) return fail(why, "andL1 needs a /\\ stoup");
      return std::vector<Sequent>{Sequent{s.stoup->left(), ctx, s.succedent}};
    case Rule::AndL2:
      if (!s.stoup || s.stoup->conn() != Conn::With) return fail(why, "andL2 needs a /\\ stoup");
      return std::vector<Sequent>{Sequent{s.stoup->right(), ctx, s.succedent}};
    case Rule::AndR:
      if (s.succedent->conn() != Conn::With) return fail(why, "andR needs a /\\ succedent");
      return std::vector<Sequent>{Sequent{s.stoup, ctx, s.succedent->left()},
                                  Sequent{s.stoup, ctx, s.succedent->right()}};
    case Rule::OrL:
      if (!s.stoup || s.stoup->conn() != Conn::Plus) return fail(why, "orL needs a \\/ stoup");
      return std::vector<Sequent>{Sequent{s.stoup->left(), ctx, s.succedent},
                                  Sequent{s.stoup->right(), ctx, s.succedent}};
    case Rule::OrR1:
      if (s.succedent->conn() != Conn::Plus) return fail(why, "orR1 needs a \\/ succedent");
      return std::vector<Sequent>{Sequent{s.stoup, ctx, s.succedent->left()}};
    case Rule::OrR2:
      if (s.succedent->conn() != Conn::Plus) return fail(why, "orR2 needs a \\/ succedent");
      return std::vector<Sequent>{Sequent{s.stoup, ctx, s.succedent->right()}};
    case Rule::TopR:
      if (s.succedent->conn() != Conn::Top) return fail(why, "topR needs succedent Top");
      return std::vector<Sequent>{};
    case Rule::BotL:
      if (!s.stoup || s.stoup->conn() != Conn::Zero) return fail(why, "botL needs stoup Bot");
      return std::vector<Sequent>{};
    case Rule::Ex: {
      if (arg + 1 >= ctx.size()) return fail(why, "ex position out of range");
      Context p = ctx;
      std::swap(p[arg], p[arg + 1]);
      return std::vector<Sequent>{Sequent{s.stoup, std::move(p), s.succedent}};
    }
    case Rule::LimpL: {
      if (!s.stoup || s.stoup->conn() != Conn::Limp)
        return fail(why, "limpL needs a -o stoup");
      if (arg > ctx.size()) return fail(why, "limpL split out of range");
      Sequent l{nullptr, Context(ctx.begin(), ctx.begin() + arg), s.stoup->left()};
      Sequent r{s.stoup->right(), Context(ctx.begin() + arg, ctx.end()), s.succedent};
      return std::vector<Sequent>{std::move(l), std::move(r)};
    }
    case Rule::LimpR: {
      if (s.succedent->conn() != Conn::Limp) return fail(why, "limpR needs a -o succedent");
      Context p = ctx;
      p.push_back(ContextEntry{s.succedent->left(), false});
      return std::vector<Sequent>{Sequent{s.stoup, std::move(p), s.succedent->right()}};
    }
  }
  return fail(why, "unknown rule");
}

namespace {

void check_rec(const DerivPtr& d, const Sequent& s, const LogicProfile& profile,
               std::string& path) {
  if (!d) throw CheckError("null derivation node at [" + path + "]");
  std::string why;
  auto prems = try_premises(d->rule, d->arg, s, profile, &why);
  if (!prems)
    throw CheckError(why + " at [" + path + "] (sequent: " + print_sequent(s) + ")");
  if (prems->size() != d->premises.size())
    throw CheckError(std::string(rule_label(d->rule)) + " expects " +
                     std::to_string(prems->size()) + " premises, has " +
                     std::to_string(d->premises.size()) + " at [" + path + "]");
  for (std::size_t i = 0; i < prems->size(); ++i) {
    std::string sub = path.empty() ? std::to_string(i) : path + "." + std::to_string(i);
    std::swap(path, sub);
    check_rec(d->premises[i], (*prems)[i], profile, path);
    std::swap(path, sub);
  }
}

}  // namespace

void check(const DerivPtr& d, const Sequent& s, const LogicProfile& profile) {
  validate(s, profile);
  if (!no_marks(s)) throw CheckError("plain sequents cannot carry bullet marks");
  std::string path;
  check_rec(d, s, profile, path);
}

}  // namespace stoup
