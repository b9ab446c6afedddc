#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stoup/derivation.hpp"
#include "stoup/formula.hpp"

namespace stoup {

// Proof-search phases: right-invertible, left-invertible, focusing, and the
// context-permutation phase of the exchange extension.
enum class Phase : std::uint8_t { RI, LI, F, C };

const char* phase_label(Phase p);

// Tag alphabet. P/C1/C2/R are the base tags, T belongs to the units
// extension, Ctx (a context snapshot) and Bullet to the implication one.
struct Tag {
  enum class Kind : std::uint8_t { P, C1, C2, R, T, Ctx, Bullet };
  Kind kind = Kind::R;
  std::vector<FormulaPtr> ctx;  // payload for Kind::Ctx

  static Tag p() { return {Kind::P, {}}; }
  static Tag c1() { return {Kind::C1, {}}; }
  static Tag c2() { return {Kind::C2, {}}; }
  static Tag r() { return {Kind::R, {}}; }
  static Tag t() { return {Kind::T, {}}; }
  static Tag ctx_snapshot(std::vector<FormulaPtr> fs) { return {Kind::Ctx, std::move(fs)}; }
  static Tag bullet() { return {Kind::Bullet, {}}; }
};

using TagList = std::vector<Tag>;

bool equal(const Tag& a, const Tag& b);
bool equal(const TagList& a, const TagList& b);
std::string print_tag(const Tag& t);

// Valid tag lists license a right non-invertible rule below left
// non-invertible ones: non-empty and R in l, or both C1 and C2 in l,
// or T in l (units), or two distinct context snapshots or a bullet in l
// (implication).
bool valid_tags(const TagList& l, const LogicProfile& profile);

// Rule labels of the focused calculus. TensorR/OrR1/OrR2 carry the tag list
// chosen for their right-invertible premise; TensorR/LimpL carry a context
// split; Ex carries the insertion position used in phase C.
enum class FRule : std::uint8_t {
  // phase RI
  AndR,
  LimpR,
  TopR,
  LI2RI,
  // phase LI
  IL,
  TensorL,
  OrL,
  BotL,
  F2LI,
  // phase F
  Pass,
  Ax,
  IR,
  TensorR,
  OrR1,
  OrR2,
  AndL1,
  AndL2,
  LimpL,
  // phase C (exchange)
  Ex,
  RI2C,
};

Phase phase_of(FRule r);
const char* frule_label(FRule r);
std::optional<FRule> frule_from_label(const std::string& label);

struct FDeriv;
using FDerivPtr = std::shared_ptr<const FDeriv>;

struct FDeriv {
  FRule rule{};
  std::size_t arg = 0;  // split for TensorR/LimpL, insertion position for Ex
  TagList tags;         // on TensorR/OrR1/OrR2: list for the tagged premise
  std::vector<FDerivPtr> premises;
};

FDerivPtr fmk(FRule rule, std::vector<FDerivPtr> premises = {}, std::size_t arg = 0,
              TagList tags = {});
bool equal(const FDerivPtr& a, const FDerivPtr& b);
std::string serialize(const FDerivPtr& d);
std::size_t node_count(const FDerivPtr& d);

// A focused proof obligation. `tagged` distinguishes the annotated judgment
// forms; the annotation is a full list in phase RI and a single tag in
// phases LI and F. In phase C the first `movable` context entries still await
// placement.
struct FGoal {
  Phase phase = Phase::RI;
  Sequent sequent;
  bool tagged = false;
  TagList list;        // phase RI
  Tag tag;             // phases LI / F
  std::size_t movable = 0;  // phase C

  static FGoal root(const Sequent& s, const LogicProfile& profile);
};

// Check d against the untagged root goal for s: phase RI, or phase C with the
// whole context movable under exchange. Throws CheckError.
void check_focused(const FDerivPtr& d, const Sequent& s, const LogicProfile& profile);

// Check d against an explicit goal (used for tagged fragments).
void check_focused(const FDerivPtr& d, const FGoal& goal, const LogicProfile& profile);

// Erase phase and tag annotations. The result checks, in the plain calculus,
// against the same sequent.
DerivPtr emb(const FDerivPtr& d, const Sequent& s, const LogicProfile& profile);
DerivPtr emb(const FDerivPtr& d, const FGoal& goal, const LogicProfile& profile);

}  // namespace stoup
