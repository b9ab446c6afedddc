#include "stoup/json_io.hpp"

#include "stoup/parser.hpp"

namespace stoup {

namespace {

ordered_json tag_to_json(const Tag& t) {
  switch (t.kind) {
    case Tag::Kind::P: return "P";
    case Tag::Kind::C1: return "C1";
    case Tag::Kind::C2: return "C2";
    case Tag::Kind::R: return "R";
    case Tag::Kind::T: return "T";
    case Tag::Kind::Bullet: return "*";
    case Tag::Kind::Ctx: {
      ordered_json ctx = ordered_json::array();
      for (const auto& f : t.ctx) ctx.push_back(print_formula(f));
      return ordered_json{{"ctx", std::move(ctx)}};
    }
  }
  throw Error("unknown tag");
}

Tag tag_from_json(const ordered_json& j, const LogicProfile& profile) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "P") return Tag::p();
    if (s == "C1") return Tag::c1();
    if (s == "C2") return Tag::c2();
    if (s == "R") return Tag::r();
    if (s == "T") return Tag::t();
    if (s == "*") return Tag::bullet();
    throw Error("unknown tag '" + s + "'");
  }
  if (j.is_object() && j.contains("ctx")) {
    std::vector<FormulaPtr> fs;
    for (const auto& e : j.at("ctx")) fs.push_back(parse_formula(e.get<std::string>(), profile));
    return Tag::ctx_snapshot(std::move(fs));
  }
  throw Error("malformed tag");
}

}  // namespace

ordered_json deriv_to_json(const DerivPtr& d) {
  ordered_json j;
  j["rule"] = rule_label(d->rule);
  if (rule_takes_arg(d->rule)) {
    ordered_json args;
    args[d->rule == Rule::Ex ? "pos" : "split"] = d->arg;
    j["args"] = std::move(args);
  }
  ordered_json prems = ordered_json::array();
  for (const auto& p : d->premises) prems.push_back(deriv_to_json(p));
  j["premises"] = std::move(prems);
  return j;
}

ordered_json fderiv_to_json(const FDerivPtr& d) {
  ordered_json j;
  j["rule"] = frule_label(d->rule);
  j["phase"] = phase_label(phase_of(d->rule));
  if (d->rule == FRule::TensorR || d->rule == FRule::LimpL) {
    ordered_json args;
    args["split"] = d->arg;
    j["args"] = std::move(args);
  } else if (d->rule == FRule::Ex) {
    ordered_json args;
    args["pos"] = d->arg;
    j["args"] = std::move(args);
  }
  if (!d->tags.empty()) {
    ordered_json tags = ordered_json::array();
    for (const auto& t : d->tags) tags.push_back(tag_to_json(t));
    j["tags"] = std::move(tags);
  }
  ordered_json prems = ordered_json::array();
  for (const auto& p : d->premises) prems.push_back(fderiv_to_json(p));
  j["premises"] = std::move(prems);
  return j;
}

DerivPtr deriv_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("rule")) throw Error("derivation node needs a \"rule\"");
  auto rule = rule_from_label(j.at("rule").get<std::string>());
  if (!rule) throw Error("unknown rule label '" + j.at("rule").get<std::string>() + "'");
  std::size_t arg = 0;
  if (j.contains("args")) {
    const auto& a = j.at("args");
    if (a.contains("split")) arg = a.at("split").get<std::size_t>();
    if (a.contains("pos")) arg = a.at("pos").get<std::size_t>();
  }
  std::vector<DerivPtr> prems;
  if (j.contains("premises"))
    for (const auto& p : j.at("premises")) prems.push_back(deriv_from_json(p));
  return mk(*rule, std::move(prems), arg);
}

FDerivPtr fderiv_from_json(const ordered_json& j, const LogicProfile& profile) {
  if (!j.is_object() || !j.contains("rule")) throw Error("derivation node needs a \"rule\"");
  auto rule = frule_from_label(j.at("rule").get<std::string>());
  if (!rule) throw Error("unknown focused rule label '" + j.at("rule").get<std::string>() + "'");
  std::size_t arg = 0;
  if (j.contains("args")) {
    const auto& a = j.at("args");
    if (a.contains("split")) arg = a.at("split").get<std::size_t>();
    if (a.contains("pos")) arg = a.at("pos").get<std::size_t>();
  }
  TagList tags;
  if (j.contains("tags"))
    for (const auto& t : j.at("tags")) tags.push_back(tag_from_json(t, profile));
  std::vector<FDerivPtr> prems;
  if (j.contains("premises"))
    for (const auto& p : j.at("premises")) prems.push_back(fderiv_from_json(p, profile));
  return fmk(*rule, std::move(prems), arg, std::move(tags));
}

ordered_json file_to_json(const DerivationFile& f) {
  ordered_json j;
  j["profile"] = f.profile.name();
  j["calculus"] = f.focused ? "focused" : "sequent";
  j["sequent"] = print_sequent(f.sequent);
  j["derivation"] = f.focused ? fderiv_to_json(f.normal) : deriv_to_json(f.plain);
  return j;
}

DerivationFile file_from_json(const ordered_json& j) {
  if (!j.is_object()) throw Error("derivation file must be a JSON object");
  DerivationFile out;
  out.profile = LogicProfile::parse(j.value("profile", std::string("base")));
  std::string calculus = j.value("calculus", std::string("sequent"));
  if (calculus != "sequent" && calculus != "focused")
    throw Error("\"calculus\" must be \"sequent\" or \"focused\"");
  out.focused = calculus == "focused";
  if (!j.contains("sequent")) throw Error("derivation file needs a \"sequent\"");
  out.sequent = parse_sequent(j.at("sequent").get<std::string>(), out.profile);
  if (!j.contains("derivation")) throw Error("derivation file needs a \"derivation\"");
  if (out.focused)
    out.normal = fderiv_from_json(j.at("derivation"), out.profile);
  else
    out.plain = deriv_from_json(j.at("derivation"));
  return out;
}

}  // namespace stoup
