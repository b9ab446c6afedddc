#include "stoup/search.hpp"

#include <algorithm>
#include <unordered_map>

#include "stoup/focus.hpp"

namespace stoup {

namespace {

// Bottom-up proof enumeration over focused goals. `need` caps how many
// results the caller can use; 1 turns the enumeration into plain search.
struct FocusedSearch {
  const LogicProfile& profile;
  const SearchBudget& budget;
  std::size_t nodes = 0;

  void tick() {
    if (++nodes > budget.node_cap)
      throw BudgetError("focused search exceeded its node cap");
  }

  std::vector<FDerivPtr> pairs(FRule rule, std::size_t arg, TagList tags,
                               const std::vector<FDerivPtr>& ls,
                               const std::vector<FDerivPtr>& rs, std::size_t need) {
    std::vector<FDerivPtr> out;
    for (const auto& l : ls) {
      for (const auto& r : rs) {
        if (out.size() >= need) return out;
        out.push_back(fmk(rule, {l, r}, arg, tags));
      }
    }
    return out;
  }

  std::vector<FDerivPtr> wrap(FRule rule, std::size_t arg, std::vector<FDerivPtr> subs) {
    for (auto& s : subs) s = fmk(rule, {s}, arg);
    return subs;
  }

  std::vector<FDerivPtr> ri(const Sequent& s, bool tagged, std::size_t need) {
    tick();
    const FormulaPtr& a = s.succedent;
    if (a->conn() == Conn::With) {
      auto ls = ri({s.stoup, s.context, a->left()}, tagged, need);
      if (ls.empty()) return {};
      auto rs = ri({s.stoup, s.context, a->right()}, tagged, need);
      return pairs(FRule::AndR, 0, {}, ls, rs, need);
    }
    if (profile.units && a->conn() == Conn::Top) return {fmk(FRule::TopR)};
    if (profile.implication && a->conn() == Conn::Limp) {
      Context ctx = s.context;
      ctx.push_back(ContextEntry{a->left(), tagged});
      return wrap(FRule::LimpR, 0, ri({s.stoup, std::move(ctx), a->right()}, tagged, need));
    }
    return wrap(FRule::LI2RI, 0, li(s, need));
  }

  std::vector<FDerivPtr> li(const Sequent& s, std::size_t need) {
    tick();
    const FormulaPtr& st = s.stoup;
    if (st && st->conn() == Conn::Unit)
      return wrap(FRule::IL, 0, li({nullptr, s.context, s.succedent}, need));
    if (st && st->conn() == Conn::Tensor) {
      Context ctx{ContextEntry{st->right(), false}};
      ctx.insert(ctx.end(), s.context.begin(), s.context.end());
      Sequent prem{st->left(), std::move(ctx), s.succedent};
      if (profile.exchange) return wrap(FRule::TensorL, 0, cphase(prem, 1, need));
      return wrap(FRule::TensorL, 0, li(prem, need));
    }
    if (st && st->conn() == Conn::Plus) {
      auto ls = li({st->left(), s.context, s.succedent}, need);
      if (ls.empty()) return {};
      auto rs = li({st->right(), s.context, s.succedent}, need);
      return pairs(FRule::OrL, 0, {}, ls, rs, need);
    }
    if (profile.units && st && st->conn() == Conn::Zero) return {fmk(FRule::BotL)};
    return wrap(FRule::F2LI, 0, focusing(s, need));
  }

  // Phase F, fixed rule order: pass, andL1, andL2, ax, IR, orR1, orR2,
  // otimesR, limpL.
  std::vector<FDerivPtr> focusing(const Sequent& s, std::size_t need) {
    tick();
    std::vector<FDerivPtr> out;
    auto add = [&](std::vector<FDerivPtr> more) {
      for (auto& d : more)
        if (out.size() < need) out.push_back(std::move(d));
    };
    const FormulaPtr& st = s.stoup;
    const FormulaPtr& a = s.succedent;

    if (!st && !s.context.empty() && out.size() < need) {
      Sequent prem{s.context.front().formula,
                   strip_marks(Context(s.context.begin() + 1, s.context.end())), a};
      add(wrap(FRule::Pass, 0, li(prem, need - out.size())));
    }
    if (st && st->conn() == Conn::With && out.size() < need) {
      add(wrap(FRule::AndL1, 0, li({st->left(), strip_marks(s.context), a}, need - out.size())));
      if (out.size() < need)
        add(wrap(FRule::AndL2, 0,
                 li({st->right(), strip_marks(s.context), a}, need - out.size())));
    }
    if (st && st->conn() == Conn::Atom && s.context.empty() && equal(st, a) &&
        out.size() < need)
      out.push_back(fmk(FRule::Ax));
    if (!st && s.context.empty() && a->conn() == Conn::Unit && out.size() < need)
      out.push_back(fmk(FRule::IR));

    if (a->conn() == Conn::Plus && out.size() < need) {
      add(right_rule(FRule::OrR1, s, a->left(), nullptr, 0, need - out.size()));
      if (out.size() < need)
        add(right_rule(FRule::OrR2, s, a->right(), nullptr, 0, need - out.size()));
    }
    if (a->conn() == Conn::Tensor && out.size() < need) {
      for (std::size_t split = 0; split <= s.context.size() && out.size() < need; ++split)
        add(right_rule(FRule::TensorR, s, a->left(), a->right(), split, need - out.size()));
    }
    if (profile.implication && st && st->conn() == Conn::Limp && out.size() < need) {
      for (std::size_t split = 0; split <= s.context.size() && out.size() < need; ++split) {
        auto args = ri({nullptr, strip_marks(Context(s.context.begin(),
                                                     s.context.begin() + split)),
                        st->left()},
                       false, need);
        if (args.empty()) continue;
        auto bodies = li({st->right(),
                          strip_marks(Context(s.context.begin() + split, s.context.end())),
                          s.succedent},
                         need);
        add(pairs(FRule::LimpL, split, {}, args, bodies, need - out.size()));
      }
    }
    return out;
  }

  // A right non-invertible rule: search the tagged premise, read off the tag
  // list each candidate earns, keep the valid ones.
  std::vector<FDerivPtr> right_rule(FRule rule, const Sequent& s, const FormulaPtr& part,
                                    const FormulaPtr& rest, std::size_t split,
                                    std::size_t need) {
    std::vector<FormulaPtr> shared;
    Context left_ctx, right_ctx;
    if (rule == FRule::TensorR) {
      left_ctx = strip_marks(Context(s.context.begin(), s.context.begin() + split));
      right_ctx = strip_marks(Context(s.context.begin() + split, s.context.end()));
    } else {
      left_ctx = strip_marks(s.context);
    }
    shared = context_formulas(left_ctx);

    auto cands = ri({s.stoup, left_ctx, part}, true, budget.result_cap);
    std::vector<FDerivPtr> out;
    std::vector<FDerivPtr> rights;
    bool rights_done = false;
    for (const auto& cand : cands) {
      if (out.size() >= need) break;
      TagList tags = branch_tags(cand, part, shared, profile);
      if (!valid_tags(tags, profile)) continue;
      if (rule != FRule::TensorR) {
        out.push_back(fmk(rule, {cand}, 0, tags));
        continue;
      }
      if (!rights_done) {
        rights = ri({nullptr, right_ctx, rest}, false, budget.result_cap);
        rights_done = true;
      }
      for (const auto& r : rights) {
        if (out.size() >= need) break;
        out.push_back(fmk(FRule::TensorR, {cand, r}, split, tags));
      }
    }
    return out;
  }

  // Phase C: place the rightmost movable formula anywhere in the placed
  // segment, leftmost insertion first.
  std::vector<FDerivPtr> cphase(const Sequent& s, std::size_t movable, std::size_t need) {
    tick();
    if (movable == 0) return wrap(FRule::RI2C, 0, ri(s, false, need));
    std::vector<FDerivPtr> out;
    std::size_t placed = s.context.size() - movable;
    for (std::size_t j = 0; j <= placed && out.size() < need; ++j) {
      Context ctx = s.context;
      ContextEntry moved = ctx[movable - 1];
      ctx.erase(ctx.begin() + (movable - 1));
      ctx.insert(ctx.begin() + (movable - 1) + j, moved);
      auto subs = cphase({s.stoup, std::move(ctx), s.succedent}, movable - 1,
                         need - out.size());
      for (auto& d : subs) out.push_back(fmk(FRule::Ex, {d}, j));
    }
    return out;
  }

  std::vector<FDerivPtr> root(const Sequent& s, std::size_t need) {
    if (profile.exchange) {
      if (s.context.size() > 6)
        throw BudgetError("exchange search is gated to contexts of at most 6 formulas");
      return cphase(s, s.context.size(), need);
    }
    return ri(s, false, need);
  }
};

void gate(const Sequent& s, const LogicProfile& profile, const SearchBudget& budget) {
  validate(s, profile);
  for (const auto& e : s.context)
    if (e.marked) throw CheckError("search goals cannot carry bullet marks");
  if (connective_count(s) > budget.max_connectives)
    throw BudgetError("sequent exceeds the connective budget of " +
                      std::to_string(budget.max_connectives));
}

struct UnfocusedSearch {
  const LogicProfile& profile;
  const SearchBudget& budget;
  std::size_t nodes = 0;
  std::unordered_map<std::string, std::shared_ptr<const std::vector<DerivPtr>>> memo;

  std::shared_ptr<const std::vector<DerivPtr>> run(const Sequent& s) {
    std::string key = print_sequent(s);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    if (++nodes > budget.node_cap)
      throw BudgetError("unfocused enumeration exceeded its node cap");
    auto out = std::make_shared<std::vector<DerivPtr>>();
    auto attempt = [&](Rule rule, std::size_t arg) {
      std::string why;
      auto ps = try_premises(rule, arg, s, profile, &why);
      if (!ps) return;
      std::vector<std::shared_ptr<const std::vector<DerivPtr>>> sub;
      for (const auto& p : *ps) {
        sub.push_back(run(p));
        if (sub.back()->empty()) return;
      }
      if (sub.empty()) {
        out->push_back(mk(rule, {}, arg));
      } else if (sub.size() == 1) {
        for (const auto& d : *sub[0]) out->push_back(mk(rule, {d}, arg));
      } else {
        for (const auto& l : *sub[0])
          for (const auto& r : *sub[1]) out->push_back(mk(rule, {l, r}, arg));
      }
      if (out->size() > budget.result_cap)
        throw BudgetError("unfocused enumeration exceeded its result cap");
    };
    attempt(Rule::Ax, 0);
    attempt(Rule::Pass, 0);
    attempt(Rule::IL, 0);
    attempt(Rule::IR, 0);
    attempt(Rule::TensorL, 0);
    for (std::size_t k = 0; k <= s.context.size(); ++k) attempt(Rule::TensorR, k);
    attempt(Rule::AndL1, 0);
    attempt(Rule::AndL2, 0);
    attempt(Rule::AndR, 0);
    attempt(Rule::OrL, 0);
    attempt(Rule::OrR1, 0);
    attempt(Rule::OrR2, 0);
    if (profile.units) {
      attempt(Rule::TopR, 0);
      attempt(Rule::BotL, 0);
    }
    if (profile.implication) {
      attempt(Rule::LimpR, 0);
      for (std::size_t k = 0; k <= s.context.size(); ++k) attempt(Rule::LimpL, k);
    }
    auto frozen = std::shared_ptr<const std::vector<DerivPtr>>(out);
    memo.emplace(std::move(key), frozen);
    return frozen;
  }
};

}  // namespace

std::optional<FDerivPtr> derive(const Sequent& s, const LogicProfile& profile,
                                const SearchBudget& budget) {
  gate(s, profile, budget);
  FocusedSearch search{profile, budget};
  auto out = search.root(s, 1);
  if (out.empty()) return std::nullopt;
  return out.front();
}

std::vector<FDerivPtr> enumerate_focused(const Sequent& s, const LogicProfile& profile,
                                         const SearchBudget& budget) {
  gate(s, profile, budget);
  FocusedSearch search{profile, budget};
  auto out = search.root(s, budget.result_cap);
  if (out.size() >= budget.result_cap)
    throw BudgetError("focused enumeration exceeded its result cap");
  std::sort(out.begin(), out.end(), [](const FDerivPtr& a, const FDerivPtr& b) {
    return serialize(a) < serialize(b);
  });
  return out;
}

std::vector<DerivPtr> enumerate_unfocused(const Sequent& s, const LogicProfile& profile,
                                          const SearchBudget& budget) {
  gate(s, profile, budget);
  if (profile.exchange)
    throw BudgetError(
        "unfocused enumeration is unbounded under exchange (ex steps can repeat)");
  UnfocusedSearch search{profile, budget};
  auto out = *search.run(s);
  std::sort(out.begin(), out.end(), [](const DerivPtr& a, const DerivPtr& b) {
    return serialize(a) < serialize(b);
  });
  return out;
}

ClassCount count_classes(const Sequent& s, const LogicProfile& profile,
                         const SearchBudget& budget) {
  return ClassCount{enumerate_focused(s, profile, budget).size(), profile.exchange};
}

FDerivPtr canonicalize_exchange(const Sequent& s, const DerivPtr& witness,
                                const LogicProfile& profile, const SearchBudget& budget) {
  if (!profile.exchange)
    throw ProfileError("canonicalize_exchange requires the exchange profile");
  check(witness, s, profile);
  auto found = derive(s, profile, budget);
  if (!found)
    throw CheckError(
        "canonicalize_exchange: the sequent has a plain derivation but focused search "
        "found none");
  return *found;
}

}  // namespace stoup
