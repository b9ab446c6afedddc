#pragma once

#include <optional>

#include "stoup/focused.hpp"

namespace stoup {

struct SearchBudget {
  std::size_t max_connectives = 8;  // input gate on the sequent
  std::size_t node_cap = 1000000;   // search goals visited
  std::size_t result_cap = 100000;  // enumeration size bound
};

// Root-first proof search in the focused calculus. Deterministic: fixed rule
// order with left non-invertible rules before right ones, context splits and
// phase-C insertions tried left to right. Returns the first derivation found.
std::optional<FDerivPtr> derive(const Sequent& s, const LogicProfile& profile,
                                const SearchBudget& budget = {});

// Every focused derivation of s, duplicate-free, in canonical order.
std::vector<FDerivPtr> enumerate_focused(const Sequent& s, const LogicProfile& profile,
                                         const SearchBudget& budget = {});

// Every derivation of s in the plain calculus. Not available under exchange,
// where ex chains make the set infinite.
std::vector<DerivPtr> enumerate_unfocused(const Sequent& s, const LogicProfile& profile,
                                          const SearchBudget& budget = {});

// Number of focused derivations = number of congruence classes. Under
// exchange the count is reported with a caveat: uniqueness of normal forms
// per class is not established there.
struct ClassCount {
  std::size_t classes = 0;
  bool caveat = false;
};
ClassCount count_classes(const Sequent& s, const LogicProfile& profile,
                         const SearchBudget& budget = {});

// Deterministic phase-C canonical form for a derivable sequent under the
// exchange profile: the least insertion choices that extend to a proof, so
// the identity permutation wins ties. `witness` must check against s.
FDerivPtr canonicalize_exchange(const Sequent& s, const DerivPtr& witness,
                                const LogicProfile& profile, const SearchBudget& budget = {});

}  // namespace stoup
