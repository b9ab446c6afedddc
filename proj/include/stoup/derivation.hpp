#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stoup/formula.hpp"

namespace stoup {

// Rule labels of the sequent calculus, including the rules of the three
// extensions. TensorR/LimpL carry a context split, Ex carries the index of
// the left formula of the swapped pair; premise sequents are recomputed
// from the conclusion, never stored.
enum class Rule : std::uint8_t {
  Ax,
  Pass,
  IL,
  IR,
  TensorL,
  TensorR,
  AndL1,
  AndL2,
  AndR,
  OrL,
  OrR1,
  OrR2,
  TopR,
  BotL,
  Ex,
  LimpL,
  LimpR,
};

const char* rule_label(Rule r);
std::optional<Rule> rule_from_label(const std::string& label);
bool rule_allowed(Rule r, const LogicProfile& profile);
bool rule_takes_arg(Rule r);
std::size_t rule_arity(Rule r);

struct Deriv;
using DerivPtr = std::shared_ptr<const Deriv>;

struct Deriv {
  Rule rule{};
  std::size_t arg = 0;  // split for TensorR/LimpL, position for Ex
  std::vector<DerivPtr> premises;
};

DerivPtr mk(Rule rule, std::vector<DerivPtr> premises = {}, std::size_t arg = 0);
bool equal(const DerivPtr& a, const DerivPtr& b);
std::size_t node_count(const DerivPtr& d);

// Compact canonical text form, usable as a hash/sort key.
std::string serialize(const DerivPtr& d);

// Premise sequents of a rule applied (root-first) to `conclusion`.
// Returns nullopt with a diagnostic when the rule does not fit.
std::optional<std::vector<Sequent>> try_premises(Rule rule, std::size_t arg,
                                                 const Sequent& conclusion,
                                                 const LogicProfile& profile,
                                                 std::string* why = nullptr);

// Throws CheckError (with the path to the offending node) unless d is a
// well-formed derivation of s under the profile.
void check(const DerivPtr& d, const Sequent& s, const LogicProfile& profile);

}  // namespace stoup
