#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ehpo/formula.hpp"

namespace ehpo {

// Inference rules checked by the kernel. Rules operate on the normalized
// core representation, so the necessity forms below are matched through the
// [][t] a == !<>[t] !a sugar.
//
//   Hypothesis        conclusion listed among the derivation's hypotheses
//   PropTautology     conclusion is a propositional tautology (modal
//                     subformulas opaque)
//   DefSubstitution   unfold one occurrence of the defended-belief operator:
//                     B{*} x  ==  B{n} x & !<>[t] B{n} !x
//   ConjElimLeft      (a & b) => a, optionally under a stack of <> operators
//   ConjElimRight     (a & b) => b, same context handling
//   DiamondCollapse   <>[t] <>[t] a        => <>[t] a
//   Symmetry          <>[s] [][t] a        => [][t] a
//   DiamondDistAnd    <>[t](a & b)         => <>[t] a & <>[t] b
//   Necessitation     a  =>  [][t] a   or   a => B{tag} a
//   Distribution      [][t](a -> b)        => [][t] a -> [][t] b
//                     B{g}(a -> b)         => B{g} a -> B{g} b
//   Reflexivity       a => <>[t] a   or   [][t] a => a
//   Transitivity      <>[t] <>[s] a        => <>[t+s] a
//   Consistency       introduces !(B{g} a & B{g} !a)
//   ModusPonens       a -> b, a            => b
//   ModusTollens      a -> b, !b           => !a
//   ContradictionIntro !a, a               => !a & a
enum class RuleId {
    Hypothesis,
    PropTautology,
    DefSubstitution,
    ConjElimLeft,
    ConjElimRight,
    DiamondCollapse,
    Symmetry,
    DiamondDistAnd,
    Necessitation,
    Distribution,
    Reflexivity,
    Transitivity,
    Consistency,
    ModusPonens,
    ModusTollens,
    ContradictionIntro,
};

std::size_t rule_arity(RuleId rule);
const char* rule_name(RuleId rule);
std::optional<RuleId> rule_from_name(const std::string& name);
std::vector<RuleId> all_rules();

// The defended-belief definition B{star} x == B{naive} x & !<>[t] B{naive} !x
// available to DefSubstitution.
struct DefendedDef {
    std::string star_tag;
    std::string naive_tag;
    Rational budget;

    Formula::Ptr unfold(const Formula::Ptr& operand) const;
};

// One row of a proof table.
struct DerivationStep {
    std::size_t index = 0; // 1-based
    Formula::Ptr conclusion;
    RuleId rule = RuleId::Hypothesis;
    std::vector<std::size_t> premises; // indices of earlier steps
    std::string note;
};

struct Derivation {
    std::string name;
    std::vector<Formula::Ptr> hypotheses;
    std::optional<DefendedDef> defended;
    std::vector<DerivationStep> steps;
    Formula::Ptr goal;
};

struct StepResult {
    bool ok = true;
    std::string reason;
};

struct DerivationResult {
    bool ok = true;
    std::size_t failing_step = 0; // 1-based, 0 when ok
    std::string reason;
};

// Validate one step against the formulas of the referenced earlier steps.
StepResult check_step(const DerivationStep& step, std::span<const Formula::Ptr> earlier,
                      const std::vector<Formula::Ptr>& hypotheses,
                      const std::optional<DefendedDef>& defended);

// Validate a whole derivation. When the goal has contradiction shape
// (!a & a), the final step must be ContradictionIntro.
DerivationResult check_derivation(const Derivation& derivation);

// Fixture file format: '#' comments, then
//   name: <text>
//   defended-def: star=<tag> naive=<tag> t=<budget>     (optional)
//   hyp: <formula>                                      (repeatable)
//   step: <index> | <rule> | <premises> | <formula> [| <note>]
//   goal: <formula>
Derivation parse_derivation(std::istream& in);
Derivation parse_derivation_file(const std::string& path);

} // namespace ehpo
