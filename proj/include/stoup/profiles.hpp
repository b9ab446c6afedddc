#pragma once

#include <string>
#include <vector>

#include "stoup/congruence.hpp"
#include "stoup/derivation.hpp"
#include "stoup/focused.hpp"

namespace stoup {

// Everything a profile switches on, assembled in one place from the same
// predicates the checkers and rewriters consult.
struct ProfileTables {
  std::vector<Conn> connectives;               // formula alphabet
  std::vector<Conn> negative_connectives;      // right-invertible principals
  std::vector<Conn> reducible_stoup_connectives;  // excluded from irreducible stoups
  std::vector<Rule> rules;
  std::vector<FRule> focused_rules;
  std::vector<Eq> equations;
  std::vector<Tag::Kind> tags;
  std::string validity;  // disjunction of valid-tag-list clauses
};

ProfileTables tables_for(const LogicProfile& profile);

bool frule_allowed(FRule r, const LogicProfile& profile);
bool tag_kind_allowed(Tag::Kind k, const LogicProfile& profile);

}  // namespace stoup
