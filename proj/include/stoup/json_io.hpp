#pragma once

#include <nlohmann/json.hpp>

#include "stoup/focused.hpp"

namespace stoup {

using ordered_json = nlohmann::ordered_json;

// Tree encodings: {"rule": ..., "args": {...}, "premises": [...]}, with
// "phase" and "tags" added on focused nodes. Formulas inside tags are
// concrete-syntax strings.
ordered_json deriv_to_json(const DerivPtr& d);
ordered_json fderiv_to_json(const FDerivPtr& d);
DerivPtr deriv_from_json(const ordered_json& j);
FDerivPtr fderiv_from_json(const ordered_json& j, const LogicProfile& profile);

// Self-contained derivation file:
// {"profile": ..., "calculus": "sequent"|"focused", "sequent": ..., "derivation": ...}
struct DerivationFile {
  LogicProfile profile;
  Sequent sequent;
  bool focused = false;
  DerivPtr plain;    // when !focused
  FDerivPtr normal;  // when focused
};

ordered_json file_to_json(const DerivationFile& f);
DerivationFile file_from_json(const ordered_json& j);

}  // namespace stoup
