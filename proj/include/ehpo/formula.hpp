#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ehpo/rational.hpp"

namespace ehpo {

// Multimodal formula over atoms, negation, conjunction, the time-indexed
// possibility operator and tagged belief operators. Disjunction, implication
// and the necessity operator are definitional sugar and are normalized away
// at construction:
//   a | b   ==  !(!a & !b)
//   a -> b  ==  !a | b
//   [][t] a ==  !<>[t] !a
// Double negations cancel during construction, so structural equality treats
// !!a and a as the same formula.
class Formula {
public:
    enum class Kind { Atom, Not, And, Possibly, Believes };
    using Ptr = std::shared_ptr<const Formula>;

    Kind kind;
    std::string text;   // atom name or reasoner tag
    Rational budget;    // Possibly only
    Ptr lhs;            // Not/Possibly/Believes operand, And left
    Ptr rhs;            // And right

    static Ptr atom(std::string name);
    static Ptr negate(Ptr inner);
    static Ptr conj(Ptr a, Ptr b);
    static Ptr disj(Ptr a, Ptr b);
    static Ptr implies(Ptr a, Ptr b);
    static Ptr possibly(Rational budget, Ptr inner);
    static Ptr necessarily(Rational budget, Ptr inner);
    static Ptr believes(std::string tag, Ptr inner);

private:
    Formula(Kind k) : kind(k) {}
    friend struct FormulaFactory;
};

bool equal(const Formula::Ptr& a, const Formula::Ptr& b);

// Canonical core-syntax rendering; reparsing the result yields a structurally
// equal formula.
std::string format_formula(const Formula::Ptr& f);

// Grammar: atoms are identifiers; ! & | -> for the connectives; <>[t] for
// possibility with a nonnegative rational budget; [][t] for the necessity
// sugar; B{tag} for belief. Unary operators bind tightest, then &, |, ->.
// Throws ParseError with the byte offset on bad input.
Formula::Ptr parse_formula(const std::string& text);

// Propositional tautology test with modal subformulas treated as opaque
// variables (the "is a theorem of propositional logic" judgment).
bool is_propositional_tautology(const Formula::Ptr& f);

// Type 1 consistency audit over a set of concluded formulas: a violation is a
// pair {phi, !phi} (after the normalization performed at construction).
struct ConsistencyReport {
    bool consistent = true;
    Formula::Ptr witness; // the positive half of a violating pair
};
ConsistencyReport consistency_audit(std::span<const Formula::Ptr> formulas);

} // namespace ehpo
