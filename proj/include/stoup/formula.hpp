#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "stoup/error.hpp"

namespace stoup {

// Which of the three extensions of the base logic are switched on.
// The exchange and implication extensions have no combined rule set,
// so that combination is rejected at construction time.
struct LogicProfile {
  bool units = false;
  bool exchange = false;
  bool implication = false;

  static LogicProfile make(bool units, bool exchange, bool implication);
  // Accepts "base", "units", "exchange", "implication",
  // "units+exchange", "units+implication" (order-insensitive around '+').
  static LogicProfile parse(const std::string& name);
  std::string name() const;

  bool operator==(const LogicProfile&) const = default;
};

enum class Conn : std::uint8_t { Atom, Unit, Tensor, With, Plus, Top, Zero, Limp };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable formula tree. Shared freely; never mutated after construction.
class Formula {
 public:
  Conn conn() const { return conn_; }
  const std::string& atom_name() const { return name_; }
  const FormulaPtr& left() const { return left_; }
  const FormulaPtr& right() const { return right_; }

  static FormulaPtr atom(std::string name);
  static FormulaPtr unit();
  static FormulaPtr top();
  static FormulaPtr zero();
  static FormulaPtr tensor(FormulaPtr a, FormulaPtr b);
  static FormulaPtr conj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr disj(FormulaPtr a, FormulaPtr b);
  static FormulaPtr limp(FormulaPtr antecedent, FormulaPtr consequent);

 private:
  Formula(Conn c, std::string name, FormulaPtr l, FormulaPtr r)
      : conn_(c), name_(std::move(name)), left_(std::move(l)), right_(std::move(r)) {}

  Conn conn_;
  std::string name_;
  FormulaPtr left_;
  FormulaPtr right_;
};

bool equal(const FormulaPtr& a, const FormulaPtr& b);
std::size_t connective_count(const FormulaPtr& f);

// One context slot. `marked` is the bullet annotation of the implication
// profile; outside tag-annotated focused sequents it is always false.
struct ContextEntry {
  FormulaPtr formula;
  bool marked = false;
};
using Context = std::vector<ContextEntry>;

Context make_context(std::vector<FormulaPtr> formulas);
std::vector<FormulaPtr> context_formulas(const Context& ctx);
Context strip_marks(const Context& ctx);
bool equal(const Context& a, const Context& b);

// S | Gamma |- A.  A null stoup is the empty stoup '-'.
struct Sequent {
  FormulaPtr stoup;
  Context context;
  FormulaPtr succedent;
};

bool equal(const Sequent& a, const Sequent& b);
std::size_t connective_count(const Sequent& s);

// Reject Top/Zero/Limp outside the profile that introduces them.
void validate(const FormulaPtr& f, const LogicProfile& profile);
void validate(const Sequent& s, const LogicProfile& profile);

// Succedents whose principal connective is right-invertible: /\ always,
// Top under units, -o under implication.
bool is_negative(const FormulaPtr& f, const LogicProfile& profile);

// Stoups that admit no left-invertible rule: empty stoups and formulas whose
// principal connective is not I, *, \/ (nor Bot under units).
bool is_irreducible_stoup(const FormulaPtr& stoup, const LogicProfile& profile);

// Flatten additive conjunctions: conj(A /\ B) = conj(A) ++ conj(B),
// singleton otherwise.
std::vector<FormulaPtr> conj(const FormulaPtr& f);

// impconj additionally walks under -o, collecting antecedents:
// each part is (list of antecedents, body with principal connective
// neither /\ nor -o).
struct ImpConjPart {
  std::vector<FormulaPtr> antecedents;
  FormulaPtr body;
};
std::vector<ImpConjPart> impconj(const FormulaPtr& f);

// Number of branches the right-invertible phase splits a succedent into:
// |impconj(f)| under implication, |conj(f)| otherwise.
std::size_t succedent_parts(const FormulaPtr& f, const LogicProfile& profile);

std::string print_formula(const FormulaPtr& f);
std::string print_sequent(const Sequent& s);

}  // namespace stoup
