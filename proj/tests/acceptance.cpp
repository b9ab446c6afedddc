// Acceptance suite: one pass/fail line per criterion. Exhaustive over graded
// corpora of sequents on the atoms {X, Y}:
//   main corpus : every sequent with at most 4 connectives and at most one
//                 context formula, plus every sequent with at most 3
//                 connectives and two context formulas;
//   pair corpus : the (<=3, ctx<=1) and (<=2, ctx=2) slices, used where the
//                 work is quadratic or worse in the number of derivations.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unordered_map>

#include "corpus.hpp"
#include "stoup/congruence.hpp"
#include "stoup/cut.hpp"
#include "stoup/focus.hpp"
#include "stoup/json_io.hpp"
#include "stoup/search.hpp"

using namespace stoup;

namespace {

const LogicProfile kBase = LogicProfile::make(false, false, false);
const LogicProfile kUnits = LogicProfile::make(true, false, false);
const LogicProfile kEx = LogicProfile::make(false, true, false);
const LogicProfile kImp = LogicProfile::make(false, false, true);

int g_failures = 0;

void report(int number, const std::string& name, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << name << " ("
            << detail << ")" << std::endl;
  if (!ok) ++g_failures;
}

std::vector<Sequent> main_corpus() {
  auto out = testing::sequents_up_to(4, 1, kBase);
  for (auto& s : testing::sequents_up_to(3, 2, kBase))
    if (s.context.size() == 2) out.push_back(s);
  return out;
}

std::vector<Sequent> pair_corpus() {
  auto out = testing::sequents_up_to(3, 1, kBase);
  for (auto& s : testing::sequents_up_to(2, 2, kBase))
    if (s.context.size() == 2) out.push_back(s);
  return out;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

// Congruence classes of the full derivation set of s, via one-step rewrite
// edges. Serves as the oracle quotient for criteria 1 and 2.
struct Quotient {
  std::vector<DerivPtr> universe;
  std::unordered_map<std::string, std::size_t> index;
  UnionFind uf{0};

  explicit Quotient(const Sequent& s, const LogicProfile& profile)
      : universe(enumerate_unfocused(s, profile)), uf(universe.size()) {
    for (std::size_t i = 0; i < universe.size(); ++i)
      index.emplace(serialize(universe[i]), i);
    for (std::size_t i = 0; i < universe.size(); ++i)
      for (const Redex& r : applicable(universe[i], s, profile))
        uf.unite(i, index.at(serialize(rewrite_once(universe[i], s, r, profile))));
  }

  std::size_t classes() {
    std::size_t n = 0;
    for (std::size_t i = 0; i < universe.size(); ++i)
      if (uf.find(i) == i) ++n;
    return n;
  }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void criterion_1_and_2() {
  std::size_t focused_checked = 0, embfocus_checked = 0, pairs_checked = 0,
              canonicity_checked = 0;
  bool ok = true;
  std::string detail;
  auto fail = [&](const Sequent& s, const std::string& what) {
    if (ok) detail = what + " at " + print_sequent(s);
    ok = false;
  };
  for (const auto& s : main_corpus()) {
    auto focused = enumerate_focused(s, kBase);
    Quotient q(s, kBase);
    if (focused.empty() && q.universe.empty()) continue;

    // focus(emb(d)) = d, exactly
    for (const auto& d : focused) {
      ++focused_checked;
      if (!equal(focus(emb(d, s, kBase), s, kBase), d)) fail(s, "focus(emb(d)) /= d");
    }
    // emb(focus(f)) ~ f
    std::vector<std::string> focus_keys(q.universe.size());
    for (std::size_t i = 0; i < q.universe.size(); ++i) {
      auto nf = focus(q.universe[i], s, kBase);
      focus_keys[i] = serialize(nf);
      ++embfocus_checked;
      auto back = emb(nf, s, kBase);
      auto it = q.index.find(serialize(back));
      if (it == q.index.end() || q.uf.find(it->second) != q.uf.find(i))
        fail(s, "emb(focus(f)) not congruent to f");
    }
    // within a class, focus is constant
    std::unordered_map<std::size_t, std::string> class_focus;
    for (std::size_t i = 0; i < q.universe.size(); ++i) {
      auto [it, fresh] = class_focus.emplace(q.uf.find(i), focus_keys[i]);
      ++pairs_checked;
      if (!fresh && it->second != focus_keys[i])
        fail(s, "congruent derivations with distinct focused forms");
    }
    ++canonicity_checked;
    if (focused.size() != q.classes()) fail(s, "|enumerate_focused| /= #classes");
  }

  // spot values, frozen from the oracle
  auto spot = [&](const char* text, std::size_t want) {
    Sequent s = parse_sequent(text, kBase);
    if (enumerate_focused(s, kBase).size() != want) fail(s, "spot count");
  };
  spot("- | X, Y |- X * Y", 1);
  spot("X /\\ Y | . |- X \\/ Y", 2);
  spot("I | . |- I", 1);

  report(1, "bijection suite", ok,
         detail.empty() ? std::to_string(focused_checked) + " focused + " +
                              std::to_string(embfocus_checked) + " unfocused derivations, " +
                              std::to_string(pairs_checked) + " class memberships"
                        : detail);
  report(2, "canonicity", ok,
         detail.empty() ? std::to_string(canonicity_checked) + " sequents + 3 spot values"
                        : detail);
}

void criterion_3() {
  bool ok = true;
  std::string detail = "derivations (6) and (8), byte-exact";
  {
    Sequent s = parse_sequent("X /\\ Y | . |- (X /\\ Y) \\/ Z", kBase);
    auto d = derive(s, kBase);
    if (!d) {
      ok = false;
      detail = "base golden sequent not derivable";
    } else {
      // semantic pin: orR1 under tag list [C1, C2]
      auto orr = (*d)->premises[0]->premises[0];
      if (orr->rule != FRule::OrR1 || orr->tags.size() != 2 ||
          orr->tags[0].kind != Tag::Kind::C1 || orr->tags[1].kind != Tag::Kind::C2) {
        ok = false;
        detail = "base golden lost its [C1, C2] tag list";
      }
      DerivationFile f{kBase, s, true, nullptr, *d};
      if (file_to_json(f).dump(2) + "\n" !=
          slurp(std::string(GOLDEN_DIR) + "/derivation6.json")) {
        ok = false;
        detail = "base golden JSON drifted";
      }
    }
  }
  {
    Sequent s = parse_sequent("I -o I | I, Y |- (I /\\ I) * Y", kImp);
    auto d = derive(s, kImp);
    if (!d) {
      ok = false;
      detail = "implication golden sequent not derivable";
    } else {
      auto tensor = (*d)->premises[0]->premises[0];
      bool tags_ok = tensor->rule == FRule::TensorR && tensor->tags.size() == 2 &&
                     tensor->tags[0].kind == Tag::Kind::Ctx && tensor->tags[0].ctx.empty() &&
                     tensor->tags[1].kind == Tag::Kind::Ctx &&
                     tensor->tags[1].ctx.size() == 1 &&
                     tensor->tags[1].ctx[0]->conn() == Conn::Unit;
      if (!tags_ok) {
        ok = false;
        detail = "implication golden lost its [[], [I]] tag lists";
      }
      DerivationFile f{kImp, s, true, nullptr, *d};
      if (file_to_json(f).dump(2) + "\n" !=
          slurp(std::string(GOLDEN_DIR) + "/derivation8.json")) {
        ok = false;
        detail = "implication golden JSON drifted";
      }
    }
  }
  report(3, "paper derivations as goldens", ok, detail);
}

void criterion_4() {
  struct Case {
    const char* text;
    bool derivable;
  };
  const Case cases[] = {
      {"X /\\ Y | Y \\/ X |- (X * Y) \\/ (Y * X)", false},
      {"X * (Y * Z) | . |- (X * Y) * Z", false},
      {"A | . |- I * A", false},
      {"(X * Y) * Z | . |- X * (Y * Z)", true},
      {"I * X | . |- X", true},
      {"X | . |- X * I", true},
  };
  bool ok = true;
  std::string detail = "6 derivability verdicts";
  for (const auto& c : cases) {
    Sequent s = parse_sequent(c.text, kBase);
    if (derive(s, kBase).has_value() != c.derivable) {
      ok = false;
      detail = std::string("wrong verdict for ") + c.text;
    }
  }
  report(4, "non-derivability battery", ok, detail);
}

void criterion_5() {
  bool ok = true;
  std::string detail;
  std::size_t normalized = 0, neighbors = 0;
  for (const auto& s : main_corpus()) {
    auto universe = enumerate_unfocused(s, kBase);
    for (const auto& d : universe) {
      try {
        auto n = normalize_rw(d, s, kBase);
        ++normalized;
        auto nf = focus(d, s, kBase);
        for (const Redex& r : applicable(d, s, kBase)) {
          auto step = rewrite_once(d, s, r, kBase);
          ++neighbors;
          if (!equal(normalize_rw(step, s, kBase), n)) {
            if (ok) detail = "non-confluent neighbor at " + print_sequent(s);
            ok = false;
          }
          if (!equal(focus(step, s, kBase), nf)) {
            if (ok) detail = "focus not invariant under a step at " + print_sequent(s);
            ok = false;
          }
        }
      } catch (const BudgetError&) {
        if (ok) detail = "normalization step cap hit at " + print_sequent(s);
        ok = false;
      }
    }
  }
  report(5, "rewrite-system evidence", ok,
         detail.empty() ? std::to_string(normalized) + " derivations, " +
                              std::to_string(neighbors) + " one-step neighbors"
                        : detail);
}

void criterion_6() {
  bool ok = true;
  std::string detail;
  auto fail = [&](const std::string& what) {
    if (ok) detail = what;
    ok = false;
  };

  struct Entry {
    Sequent s;
    std::vector<DerivPtr> ds;
  };
  std::vector<Entry> derivable;
  for (const auto& s : pair_corpus()) {
    auto ds = enumerate_unfocused(s, kBase);
    if (!ds.empty()) derivable.push_back({s, std::move(ds)});
  }

  std::size_t identities = 0, assoc = 0;
  for (const auto& e : derivable) {
    Sequent axl{e.s.stoup, {}, e.s.stoup};
    Sequent axr{e.s.succedent, {}, e.s.succedent};
    for (const auto& f : e.ds) {
      auto nf = focus(f, e.s, kBase);
      if (e.s.stoup &&
          !equal(focus(scut(mk(Rule::Ax), axl, f, e.s, kBase), e.s, kBase), nf))
        fail("scut(ax, f) not focus-equal to f at " + print_sequent(e.s));
      if (!equal(focus(scut(f, e.s, mk(Rule::Ax), axr, kBase), e.s, kBase), nf))
        fail("scut(f, ax) not focus-equal to f at " + print_sequent(e.s));
      identities += 2;
    }
  }

  // associativity over composable triples from the small slice
  std::vector<Entry> small;
  for (const auto& e : derivable)
    if (connective_count(e.s) <= 2 && e.s.context.size() <= 1) small.push_back(e);
  for (const auto& ef : small) {
    for (const auto& eg : small) {
      if (!eg.s.stoup || !equal(ef.s.succedent, eg.s.stoup)) continue;
      Sequent fg_seq{ef.s.stoup, ef.s.context, eg.s.succedent};
      fg_seq.context.insert(fg_seq.context.end(), eg.s.context.begin(), eg.s.context.end());
      for (const auto& eh : small) {
        if (!eh.s.stoup || !equal(eg.s.succedent, eh.s.stoup)) continue;
        Sequent gh_seq{eg.s.stoup, eg.s.context, eh.s.succedent};
        gh_seq.context.insert(gh_seq.context.end(), eh.s.context.begin(),
                              eh.s.context.end());
        Sequent whole{ef.s.stoup, ef.s.context, eh.s.succedent};
        whole.context.insert(whole.context.end(), eg.s.context.begin(), eg.s.context.end());
        whole.context.insert(whole.context.end(), eh.s.context.begin(), eh.s.context.end());
        for (const auto& f : ef.ds)
          for (const auto& g : eg.ds)
            for (const auto& h : eh.ds) {
              auto left = scut(scut(f, ef.s, g, eg.s, kBase), fg_seq, h, eh.s, kBase);
              auto right = scut(f, ef.s, scut(g, eg.s, h, eh.s, kBase), gh_seq, kBase);
              ++assoc;
              if (!equal(focus(left, whole, kBase), focus(right, whole, kBase)))
                fail("scut not associative at " + print_sequent(whole));
            }
      }
    }
  }
  report(6, "cut laws up to focus-equality", ok,
         detail.empty() ? std::to_string(identities) + " identity instances, " +
                              std::to_string(assoc) + " associativity instances"
                        : detail);
}

void criterion_7() {
  bool ok = true;
  std::string detail;
  auto fail = [&](const std::string& what) {
    if (ok) detail = what;
    ok = false;
  };

  std::size_t conserved = 0;
  const LogicProfile extensions[] = {kUnits, kEx, kImp,
                                     LogicProfile::make(true, true, false),
                                     LogicProfile::make(true, false, true)};
  for (const auto& s : pair_corpus()) {
    if (!derive(s, kBase)) continue;
    for (const auto& p : extensions) {
      ++conserved;
      if (!derive(s, p)) fail("lost " + print_sequent(s) + " under " + p.name());
    }
  }

  std::size_t unit_counts = 0;
  auto pieces = testing::formulas_up_to(2, kBase);
  std::vector<FormulaPtr> stoups = pieces;
  stoups.insert(stoups.begin(), nullptr);
  for (const auto& st : stoups) {
    for (const auto& ctx :
         std::vector<std::vector<FormulaPtr>>{{}, {Formula::atom("X")}, {Formula::unit()}}) {
      Sequent top{st, make_context(ctx), Formula::top()};
      ++unit_counts;
      if (count_classes(top, kUnits).classes != 1)
        fail("count_classes /= 1 at " + print_sequent(top));
    }
  }
  for (const auto& c : pieces) {
    for (const auto& ctx :
         std::vector<std::vector<FormulaPtr>>{{}, {Formula::atom("Y")}, {Formula::unit()}}) {
      Sequent bot{Formula::zero(), make_context(ctx), c};
      ++unit_counts;
      if (count_classes(bot, kUnits).classes != 1)
        fail("count_classes /= 1 at " + print_sequent(bot));
    }
  }
  report(7, "profile conservativity and unit laws", ok,
         detail.empty() ? std::to_string(conserved) + " conservativity checks, " +
                              std::to_string(unit_counts) + " unit-law counts"
                        : detail);
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  criterion_1_and_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  auto t1 = std::chrono::steady_clock::now();
  std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT") << " in "
            << std::chrono::duration<double>(t1 - t0).count() << "s" << std::endl;
  return g_failures == 0 ? 0 : 1;
}
