#include <doctest.h>

#include "corpus.hpp"
#include "stoup/congruence.hpp"
#include "stoup/cut.hpp"
#include "stoup/focus.hpp"
#include "stoup/search.hpp"

using namespace stoup;

namespace {

const LogicProfile kBase = LogicProfile::make(false, false, false);

Sequent seq(const std::string& text) { return parse_sequent(text, kBase); }

Sequent scut_seq(const Sequent& sf, const Sequent& sg) {
  Sequent out{sf.stoup, sf.context, sg.succedent};
  out.context.insert(out.context.end(), sg.context.begin(), sg.context.end());
  return out;
}

bool focus_equal(const DerivPtr& a, const DerivPtr& b, const Sequent& s) {
  return equal(focus(a, s, kBase), focus(b, s, kBase));
}

}  // namespace

TEST_CASE("scut against ax is the identity on both sides") {
  Sequent sf = seq("X /\\ Y | I |- X * I");
  auto fs = enumerate_unfocused(sf, kBase);
  REQUIRE(!fs.empty());
  Sequent ax_right = seq("X * I | . |- X * I");
  Sequent ax_left = seq("X /\\ Y | . |- X /\\ Y");
  for (const auto& f : fs) {
    CHECK(equal(scut(f, sf, mk(Rule::Ax), ax_right, kBase), f));
  }
  Sequent sg = seq("X /\\ Y | I |- X * I");
  for (const auto& g : enumerate_unfocused(sg, kBase)) {
    CHECK(equal(scut(mk(Rule::Ax), ax_left, g, sg, kBase), g));
  }
}

TEST_CASE("principal I-cut: scut(IR, IL f) is focus-equal to f") {
  Sequent sg = seq("I | X |- I * X");
  Sequent target = seq("- | X |- I * X");
  std::size_t il_headed = 0;
  for (const auto& g : enumerate_unfocused(sg, kBase)) {
    auto cut = scut(mk(Rule::IR), seq("- | . |- I"), g, sg, kBase);
    CHECK_NOTHROW(check(cut, target, kBase));
    if (g->rule == Rule::IL) {
      ++il_headed;
      CHECK(focus_equal(cut, g->premises[0], target));
    }
  }
  CHECK(il_headed > 0);
}

TEST_CASE("principal and-cut reduces to the chosen component") {
  // f = andR(f1, f2) : - | X |- X /\ X, g = andL1 g' : X /\ X | . |- X
  Sequent sf = seq("- | X |- X /\\ X");
  auto f1 = mk(Rule::Pass, {mk(Rule::Ax)});
  auto f = mk(Rule::AndR, {f1, f1});
  auto g = mk(Rule::AndL1, {mk(Rule::Ax)});
  Sequent sg = seq("X /\\ X | . |- X");
  auto cut = scut(f, sf, g, sg, kBase);
  Sequent target = seq("- | X |- X");
  CHECK_NOTHROW(check(cut, target, kBase));
  auto direct = scut(f1, seq("- | X |- X"), mk(Rule::Ax), seq("X | . |- X"), kBase);
  CHECK(focus_equal(cut, direct, target));
}

TEST_CASE("scut rejects a mismatched cut formula") {
  auto f = mk(Rule::Ax);
  CHECK_THROWS_WITH_AS(scut(f, seq("X | . |- X"), mk(Rule::Ax), seq("Y | . |- Y"), kBase),
                       doctest::Contains("cut formula"), CheckError);
}

TEST_CASE("ccut splices a context formula") {
  // f : - | I |- I, g : - | X, I |- X * I at position 1
  auto f = mk(Rule::Pass, {mk(Rule::IL, {mk(Rule::IR)})});
  Sequent sf = seq("- | I |- I");
  Sequent sg = seq("- | X, I |- X * I");
  for (const auto& g : enumerate_unfocused(sg, kBase)) {
    auto cut = ccut(f, sf, g, sg, 1, kBase);
    CHECK_NOTHROW(check(cut, seq("- | X, I |- X * I"), kBase));
  }
}

TEST_CASE("ccut at position 0 against pass reduces to scut") {
  // ccut(IR, pass(IL h), 0) where h : - | . |- I
  auto f = mk(Rule::IR);
  auto h = mk(Rule::IR);
  auto g = mk(Rule::Pass, {mk(Rule::IL, {h})});
  Sequent sg = seq("- | I |- I");
  auto cut = ccut(f, seq("- | . |- I"), g, sg, 0, kBase);
  Sequent target = seq("- | . |- I");
  CHECK_NOTHROW(check(cut, target, kBase));
  CHECK(focus_equal(cut, h, target));
}

TEST_CASE("ccut preconditions") {
  auto f = mk(Rule::Ax);
  auto g = mk(Rule::Pass, {mk(Rule::Ax)});
  CHECK_THROWS_WITH_AS(ccut(f, seq("X | . |- X"), g, seq("- | X |- X"), 0, kBase),
                       doctest::Contains("empty stoup"), CheckError);
  auto f2 = mk(Rule::Pass, {mk(Rule::Ax)});
  CHECK_THROWS_WITH_AS(ccut(f2, seq("- | X |- X"), g, seq("- | X |- X"), 3, kBase),
                       doctest::Contains("out of range"), CheckError);
  CHECK_THROWS_WITH_AS(
      ccut(f2, seq("- | X |- X"), mk(Rule::Pass, {mk(Rule::Ax)}), seq("- | Y |- Y"), 0, kBase),
      doctest::Contains("not the cut formula"), CheckError);
}

TEST_CASE("cuts preserve checkability over a small corpus") {
  auto corpus = testing::sequents_up_to(2, 1, kBase);
  std::vector<std::pair<Sequent, std::vector<DerivPtr>>> derivable;
  for (const auto& s : corpus) {
    auto ds = enumerate_unfocused(s, kBase);
    if (!ds.empty()) derivable.push_back({s, std::move(ds)});
  }
  std::size_t scut_checked = 0, ccut_checked = 0;
  for (const auto& [sf, fs] : derivable) {
    for (const auto& [sg, gs] : derivable) {
      if (!sg.stoup || !equal(sf.succedent, sg.stoup)) continue;
      Sequent target = scut_seq(sf, sg);
      for (const auto& f : fs)
        for (const auto& g : gs) {
          auto cut = scut(f, sf, g, sg, kBase);
          CHECK_NOTHROW(check(cut, target, kBase));
          ++scut_checked;
        }
      if (!sf.stoup) {
        // - | Gamma |- A against every position of A in a context
        for (const auto& [sh, hs] : derivable) {
          for (std::size_t pos = 0; pos < sh.context.size(); ++pos) {
            if (!equal(sh.context[pos].formula, sf.succedent)) continue;
            Sequent target2{sh.stoup, {}, sh.succedent};
            target2.context.assign(sh.context.begin(), sh.context.begin() + pos);
            target2.context.insert(target2.context.end(), sf.context.begin(),
                                   sf.context.end());
            target2.context.insert(target2.context.end(), sh.context.begin() + pos + 1,
                                   sh.context.end());
            for (const auto& f : fs)
              for (const auto& h : hs) {
                auto cut = ccut(f, sf, h, sh, pos, kBase);
                CHECK_NOTHROW(check(cut, target2, kBase));
                ++ccut_checked;
              }
          }
        }
      }
    }
  }
  CHECK(scut_checked > 100);
  CHECK(ccut_checked > 20);
}

TEST_CASE("andL_ctx introduces a conjunction at a context position") {
  auto d = mk(Rule::Pass, {mk(Rule::Ax)});
  Sequent sd = seq("- | X |- X");
  auto out1 = and_left_ctx(1, d, sd, 0, Formula::atom("Y"), kBase);
  CHECK_NOTHROW(check(out1, seq("- | X /\\ Y |- X"), kBase));

  auto d2 = mk(Rule::Pass, {mk(Rule::Ax)});
  auto out2 = and_left_ctx(2, d2, seq("- | Y |- Y"), 0, Formula::atom("X"), kBase);
  CHECK_NOTHROW(check(out2, seq("- | X /\\ Y |- Y"), kBase));

  CHECK_THROWS_WITH_AS(and_left_ctx(1, d, sd, 4, Formula::atom("Y"), kBase),
                       doctest::Contains("out of range"), CheckError);
}

TEST_CASE("andL_ctx works at deeper positions") {
  Sequent sd = seq("- | I, X |- I * X");
  for (const auto& d : enumerate_unfocused(sd, kBase)) {
    auto out = and_left_ctx(1, d, sd, 1, Formula::unit(), kBase);
    CHECK_NOTHROW(check(out, seq("- | I, X /\\ I |- I * X"), kBase));
  }
}
