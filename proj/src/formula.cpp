#include "stoup/formula.hpp"

#include <cctype>
#include <sstream>

namespace stoup {

LogicProfile LogicProfile::make(bool units, bool exchange, bool implication) {
  if (exchange && implication)
    throw ProfileError("the exchange and implication extensions cannot be combined");
  return LogicProfile{units, exchange, implication};
}

LogicProfile LogicProfile::parse(const std::string& name) {
  bool units = false, exchange = false, implication = false;
  std::size_t start = 0;
  if (name.empty()) throw ProfileError("empty profile name");
  while (start <= name.size()) {
    std::size_t plus = name.find('+', start);
    std::string part = name.substr(start, plus == std::string::npos ? plus : plus - start);
    if (part == "base") {
      // no flags
    } else if (part == "units") {
      units = true;
    } else if (part == "exchange") {
      exchange = true;
    } else if (part == "implication") {
      implication = true;
    } else {
      throw ProfileError("unknown profile '" + part + "'");
    }
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  return make(units, exchange, implication);
}

std::string LogicProfile::name() const {
  std::string out;
  auto add = [&out](const char* p) {
    if (!out.empty()) out += '+';
    out += p;
  };
  if (units) add("units");
  if (exchange) add("exchange");
  if (implication) add("implication");
  if (out.empty()) out = "base";
  return out;
}

static bool valid_atom_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

FormulaPtr Formula::atom(std::string name) {
  if (!valid_atom_name(name)) throw Error("invalid atom name '" + name + "'");
  return FormulaPtr(new Formula(Conn::Atom, std::move(name), nullptr, nullptr));
}

FormulaPtr Formula::unit() { return FormulaPtr(new Formula(Conn::Unit, {}, nullptr, nullptr)); }
FormulaPtr Formula::top() { return FormulaPtr(new Formula(Conn::Top, {}, nullptr, nullptr)); }
FormulaPtr Formula::zero() { return FormulaPtr(new Formula(Conn::Zero, {}, nullptr, nullptr)); }

FormulaPtr Formula::tensor(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(new Formula(Conn::Tensor, {}, std::move(a), std::move(b)));
}
FormulaPtr Formula::conj(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(new Formula(Conn::With, {}, std::move(a), std::move(b)));
}
FormulaPtr Formula::disj(FormulaPtr a, FormulaPtr b) {
  return FormulaPtr(new Formula(Conn::Plus, {}, std::move(a), std::move(b)));
}
FormulaPtr Formula::limp(FormulaPtr antecedent, FormulaPtr consequent) {
  return FormulaPtr(new Formula(Conn::Limp, {}, std::move(antecedent), std::move(consequent)));
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->conn() != b->conn()) return false;
  switch (a->conn()) {
    case Conn::Atom:
      return a->atom_name() == b->atom_name();
    case Conn::Unit:
    case Conn::Top:
    case Conn::Zero:
      return true;
    default:
      return equal(a->left(), b->left()) && equal(a->right(), b->right());
  }
}

std::size_t connective_count(const FormulaPtr& f) {
  if (!f) return 0;
  switch (f->conn()) {
    case Conn::Atom:
      return 0;
    case Conn::Unit:
    case Conn::Top:
    case Conn::Zero:
      return 1;
    default:
      return 1 + connective_count(f->left()) + connective_count(f->right());
  }
}

Context make_context(std::vector<FormulaPtr> formulas) {
  Context ctx;
  ctx.reserve(formulas.size());
  for (auto& f : formulas) ctx.push_back(ContextEntry{std::move(f), false});
  return ctx;
}

std::vector<FormulaPtr> context_formulas(const Context& ctx) {
  std::vector<FormulaPtr> out;
  out.reserve(ctx.size());
  for (const auto& e : ctx) out.push_back(e.formula);
  return out;
}

Context strip_marks(const Context& ctx) {
  Context out = ctx;
  for (auto& e : out) e.marked = false;
  return out;
}

bool equal(const Context& a, const Context& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].marked != b[i].marked || !equal(a[i].formula, b[i].formula)) return false;
  return true;
}

bool equal(const Sequent& a, const Sequent& b) {
  return equal(a.stoup, b.stoup) && equal(a.context, b.context) &&
         equal(a.succedent, b.succedent);
}

std::size_t connective_count(const Sequent& s) {
  std::size_t n = connective_count(s.stoup) + connective_count(s.succedent);
  for (const auto& e : s.context) n += connective_count(e.formula);
  return n;
}

void validate(const FormulaPtr& f, const LogicProfile& profile) {
  if (!f) return;
  switch (f->conn()) {
    case Conn::Top:
      if (!profile.units) throw ProfileError("Top requires the units profile");
      return;
    case Conn::Zero:
      if (!profile.units) throw ProfileError("Bot requires the units profile");
      return;
    case Conn::Limp:
      if (!profile.implication) throw ProfileError("-o requires the implication profile");
      validate(f->left(), profile);
      validate(f->right(), profile);
      return;
    case Conn::Atom:
    case Conn::Unit:
      return;
    default:
      validate(f->left(), profile);
      validate(f->right(), profile);
      return;
  }
}

void validate(const Sequent& s, const LogicProfile& profile) {
  validate(s.stoup, profile);
  for (const auto& e : s.context) validate(e.formula, profile);
  validate(s.succedent, profile);
}

bool is_negative(const FormulaPtr& f, const LogicProfile& profile) {
  if (!f) return false;
  switch (f->conn()) {
    case Conn::With:
      return true;
    case Conn::Top:
      return profile.units;
    case Conn::Limp:
      return profile.implication;
    default:
      return false;
  }
}

bool is_irreducible_stoup(const FormulaPtr& stoup, const LogicProfile& profile) {
  if (!stoup) return true;
  switch (stoup->conn()) {
    case Conn::Unit:
    case Conn::Tensor:
    case Conn::Plus:
      return false;
    case Conn::Zero:
      return !profile.units;  // Zero cannot occur outside units anyway
    default:
      return true;
  }
}

std::vector<FormulaPtr> conj(const FormulaPtr& f) {
  if (f && f->conn() == Conn::With) {
    auto out = conj(f->left());
    auto rhs = conj(f->right());
    out.insert(out.end(), rhs.begin(), rhs.end());
    return out;
  }
  return {f};
}

std::vector<ImpConjPart> impconj(const FormulaPtr& f) {
  if (f && f->conn() == Conn::With) {
    auto out = impconj(f->left());
    auto rhs = impconj(f->right());
    out.insert(out.end(), rhs.begin(), rhs.end());
    return out;
  }
  if (f && f->conn() == Conn::Limp) {
    auto out = impconj(f->right());
    for (auto& part : out) part.antecedents.insert(part.antecedents.begin(), f->left());
    return out;
  }
  return {ImpConjPart{{}, f}};
}

std::size_t succedent_parts(const FormulaPtr& f, const LogicProfile& profile) {
  return profile.implication ? impconj(f).size() : conj(f).size();
}

namespace {

// Precedence levels, loosest first: -o < \/ < /\ < *.
int precedence(Conn c) {
  switch (c) {
    case Conn::Limp:
      return 0;
    case Conn::Plus:
      return 1;
    case Conn::With:
      return 2;
    case Conn::Tensor:
      return 3;
    default:
      return 4;
  }
}

const char* infix_token(Conn c) {
  switch (c) {
    case Conn::Limp:
      return " -o ";
    case Conn::Plus:
      return " \\/ ";
    case Conn::With:
      return " /\\ ";
    case Conn::Tensor:
      return " * ";
    default:
      return nullptr;
  }
}

// All binary connectives are right-associative, so the left operand is
// printed one level tighter.
void print_rec(std::ostringstream& out, const FormulaPtr& f, int min_prec) {
  switch (f->conn()) {
    case Conn::Atom:
      out << f->atom_name();
      return;
    case Conn::Unit:
      out << "I";
      return;
    case Conn::Top:
      out << "Top";
      return;
    case Conn::Zero:
      out << "Bot";
      return;
    default: {
      int prec = precedence(f->conn());
      bool parens = prec < min_prec;
      if (parens) out << "(";
      print_rec(out, f->left(), prec + 1);
      out << infix_token(f->conn());
      print_rec(out, f->right(), prec);
      if (parens) out << ")";
      return;
    }
  }
}

}  // namespace

std::string print_formula(const FormulaPtr& f) {
  if (!f) throw Error("cannot print a null formula");
  std::ostringstream out;
  print_rec(out, f, 0);
  return out.str();
}

std::string print_sequent(const Sequent& s) {
  std::ostringstream out;
  out << (s.stoup ? print_formula(s.stoup) : "-");
  out << " | ";
  if (s.context.empty()) {
    out << ".";
  } else {
    for (std::size_t i = 0; i < s.context.size(); ++i) {
      if (i) out << ", ";
      out << print_formula(s.context[i].formula);
    }
  }
  out << " |- " << print_formula(s.succedent);
  return out.str();
}

}  // namespace stoup
