#include <doctest.h>

#include "stoup/json_io.hpp"
#include "stoup/parser.hpp"
#include "stoup/search.hpp"

using namespace stoup;

namespace {

const LogicProfile kBase = LogicProfile::make(false, false, false);
const LogicProfile kImp = LogicProfile::make(false, false, true);

}  // namespace

TEST_CASE("plain derivation JSON uses the fixed labels") {
  auto d = mk(Rule::TensorR, {mk(Rule::Pass, {mk(Rule::Ax)}), mk(Rule::IL, {mk(Rule::IR)})},
              1);
  auto j = deriv_to_json(d);
  CHECK(j["rule"] == "otimesR");
  CHECK(j["args"]["split"] == 1);
  CHECK(j["premises"][0]["rule"] == "pass");
  CHECK(j["premises"][1]["rule"] == "IL");
  CHECK(j["premises"][1]["premises"][0]["rule"] == "IR");
  CHECK(equal(deriv_from_json(j), d));
}

TEST_CASE("ex nodes carry pos") {
  auto d = mk(Rule::Ex, {mk(Rule::Pass, {mk(Rule::Ax)})}, 2);
  auto j = deriv_to_json(d);
  CHECK(j["args"]["pos"] == 2);
  CHECK(equal(deriv_from_json(j), d));
}

TEST_CASE("focused derivation JSON carries phase and tags") {
  Sequent s = parse_sequent("X /\\ Y | . |- (X /\\ Y) \\/ Z", kBase);
  auto d = derive(s, kBase);
  REQUIRE(d);
  auto j = fderiv_to_json(*d);
  CHECK(j["phase"] == "RI");
  CHECK(j["rule"] == "LI2RI");
  const auto& orr = j["premises"][0]["premises"][0];
  CHECK(orr["rule"] == "orR1");
  CHECK(orr["phase"] == "F");
  REQUIRE(orr.contains("tags"));
  CHECK(orr["tags"][0] == "C1");
  CHECK(orr["tags"][1] == "C2");
  CHECK(equal(fderiv_from_json(j, kBase), *d));
}

TEST_CASE("context tags serialize as formula lists") {
  Sequent s = parse_sequent("I -o I | I, Y |- (I /\\ I) * Y", kImp);
  auto d = derive(s, kImp);
  REQUIRE(d);
  auto j = fderiv_to_json(*d);
  auto back = fderiv_from_json(j, kImp);
  CHECK(equal(back, *d));
  const auto& tags = j["premises"][0]["premises"][0]["tags"];
  CHECK(tags[0]["ctx"].size() == 0);
  CHECK(tags[1]["ctx"][0] == "I");
}

TEST_CASE("derivation files round-trip") {
  Sequent s = parse_sequent("- | X, Y |- X * Y", kBase);
  auto d = derive(s, kBase);
  REQUIRE(d);
  DerivationFile f{kBase, s, true, nullptr, *d};
  auto j = file_to_json(f);
  CHECK(j["profile"] == "base");
  CHECK(j["calculus"] == "focused");
  CHECK(j["sequent"] == "- | X, Y |- X * Y");
  auto back = file_from_json(j);
  CHECK(back.focused);
  CHECK(equal(back.sequent, s));
  CHECK(equal(back.normal, *d));

  DerivationFile plain{kBase, s, false, mk(Rule::TensorR,
                                           {mk(Rule::Pass, {mk(Rule::Ax)}),
                                            mk(Rule::Pass, {mk(Rule::Ax)})},
                                           1),
                       nullptr};
  auto j2 = file_to_json(plain);
  auto back2 = file_from_json(j2);
  CHECK(!back2.focused);
  CHECK(equal(back2.plain, plain.plain));
}

TEST_CASE("file parsing rejects malformed input") {
  CHECK_THROWS_AS(file_from_json(ordered_json::parse(R"({"calculus":"sequent"})")), Error);
  CHECK_THROWS_AS(
      file_from_json(ordered_json::parse(
          R"({"calculus":"nonsense","sequent":"X | . |- X","derivation":{"rule":"ax"}})")),
      Error);
  CHECK_THROWS_AS(
      file_from_json(ordered_json::parse(
          R"({"sequent":"X | . |- X","derivation":{"rule":"zap","premises":[]}})")),
      Error);
}

TEST_CASE("stable key order in emitted JSON") {
  Sequent s = parse_sequent("X | . |- X", kBase);
  DerivationFile f{kBase, s, false, mk(Rule::Ax), nullptr};
  CHECK(file_to_json(f).dump() ==
        R"({"profile":"base","calculus":"sequent","sequent":"X | . |- X",)"
        R"("derivation":{"rule":"ax","premises":[]}})");
}
