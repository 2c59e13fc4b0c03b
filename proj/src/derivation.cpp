#include "ehpo/derivation.hpp"

#include <fstream>
#include <sstream>

#include "ehpo/errors.hpp"

namespace ehpo {

namespace {

struct RuleInfo {
    RuleId id;
    const char* name;
    std::size_t arity;
};

constexpr RuleInfo kRules[] = {
    {RuleId::Hypothesis, "Hypothesis", 0},
    {RuleId::PropTautology, "PropTautology", 0},
    {RuleId::DefSubstitution, "DefSubstitution", 1},
    {RuleId::ConjElimLeft, "ConjElimLeft", 1},
    {RuleId::ConjElimRight, "ConjElimRight", 1},
    {RuleId::DiamondCollapse, "DiamondCollapse", 1},
    {RuleId::Symmetry, "Symmetry", 1},
    {RuleId::DiamondDistAnd, "DiamondDistAnd", 1},
    {RuleId::Necessitation, "Necessitation", 1},
    {RuleId::Distribution, "Distribution", 1},
    {RuleId::Reflexivity, "Reflexivity", 1},
    {RuleId::Transitivity, "Transitivity", 1},
    {RuleId::Consistency, "Consistency", 0},
    {RuleId::ModusPonens, "ModusPonens", 2},
    {RuleId::ModusTollens, "ModusTollens", 2},
    {RuleId::ContradictionIntro, "ContradictionIntro", 2},
};

const RuleInfo& info(RuleId id) {
    for (const auto& r : kRules)
        if (r.id == id) return r;
    throw Error("unknown rule id");
}

// Decompose f as the necessity form [][t] x == !<>[t] !x. Returns false when
// f is not negated possibility.
bool as_box(const Formula::Ptr& f, Rational& budget, Formula::Ptr& content) {
    if (f->kind != Formula::Kind::Not) return false;
    if (f->lhs->kind != Formula::Kind::Possibly) return false;
    budget = f->lhs->budget;
    content = Formula::negate(f->lhs->lhs);
    return true;
}

// Decompose f as a material implication a -> b, i.e. !(a & !b) after
// normalization. Any !(x & y) matches, with b = !y.
bool as_implication(const Formula::Ptr& f, Formula::Ptr& antecedent, Formula::Ptr& consequent) {
    if (f->kind != Formula::Kind::Not) return false;
    if (f->lhs->kind != Formula::Kind::And) return false;
    antecedent = f->lhs->lhs;
    consequent = Formula::negate(f->lhs->rhs);
    return true;
}

// Enumerate every formula obtained from f by unfolding exactly one occurrence
// of the defended-belief operator.
void unfold_candidates(const Formula::Ptr& f, const DefendedDef& def,
                       std::vector<Formula::Ptr>& out) {
    if (f->kind == Formula::Kind::Believes && f->text == def.star_tag)
        out.push_back(def.unfold(f->lhs));
    switch (f->kind) {
    case Formula::Kind::Not: {
        std::vector<Formula::Ptr> inner;
        unfold_candidates(f->lhs, def, inner);
        for (auto& c : inner) out.push_back(Formula::negate(c));
        break;
    }
    case Formula::Kind::And: {
        std::vector<Formula::Ptr> left, right;
        unfold_candidates(f->lhs, def, left);
        unfold_candidates(f->rhs, def, right);
        for (auto& c : left) out.push_back(Formula::conj(c, f->rhs));
        for (auto& c : right) out.push_back(Formula::conj(f->lhs, c));
        break;
    }
    case Formula::Kind::Possibly: {
        std::vector<Formula::Ptr> inner;
        unfold_candidates(f->lhs, def, inner);
        for (auto& c : inner) out.push_back(Formula::possibly(f->budget, c));
        break;
    }
    case Formula::Kind::Believes: {
        std::vector<Formula::Ptr> inner;
        unfold_candidates(f->lhs, def, inner);
        for (auto& c : inner) out.push_back(Formula::believes(f->text, c));
        break;
    }
    case Formula::Kind::Atom:
        break;
    }
}

StepResult reject(std::string reason) { return {false, std::move(reason)}; }
StepResult accept() { return {}; }

// Conjunction elimination under an optional stack of possibility operators:
// premise = <>...<>(a & b), conclusion = <>...<>(a or b) with the identical
// operator stack (licensed by necessitation + distribution).
StepResult check_conj_elim(const Formula::Ptr& premise, const Formula::Ptr& conclusion,
                           bool left) {
    Formula::Ptr p = premise;
    Formula::Ptr c = conclusion;
    while (p->kind == Formula::Kind::Possibly) {
        if (c->kind != Formula::Kind::Possibly || !(c->budget == p->budget))
            return reject("possibility context of premise and conclusion differ");
        p = p->lhs;
        c = c->lhs;
    }
    if (p->kind != Formula::Kind::And)
        return reject("premise is not a conjunction (expected (a & b))");
    const Formula::Ptr& kept = left ? p->lhs : p->rhs;
    if (!equal(kept, c))
        return reject(std::string("conclusion does not match the ") + (left ? "left" : "right") +
                      " conjunct");
    return accept();
}

} // namespace

std::size_t rule_arity(RuleId rule) { return info(rule).arity; }
const char* rule_name(RuleId rule) { return info(rule).name; }

std::optional<RuleId> rule_from_name(const std::string& name) {
    for (const auto& r : kRules)
        if (name == r.name) return r.id;
    return std::nullopt;
}

std::vector<RuleId> all_rules() {
    std::vector<RuleId> out;
    for (const auto& r : kRules) out.push_back(r.id);
    return out;
}

Formula::Ptr DefendedDef::unfold(const Formula::Ptr& operand) const {
    return Formula::conj(
        Formula::believes(naive_tag, operand),
        Formula::negate(
            Formula::possibly(budget, Formula::believes(naive_tag, Formula::negate(operand)))));
}

StepResult check_step(const DerivationStep& step, std::span<const Formula::Ptr> earlier,
                      const std::vector<Formula::Ptr>& hypotheses,
                      const std::optional<DefendedDef>& defended) {
    const std::size_t arity = rule_arity(step.rule);
    if (step.premises.size() != arity)
        return reject(std::string(rule_name(step.rule)) + " takes " + std::to_string(arity) +
                      " premise(s), got " + std::to_string(step.premises.size()));
    std::vector<Formula::Ptr> prem;
    for (std::size_t idx : step.premises) {
        if (idx == 0 || idx > earlier.size())
            return reject("premise index " + std::to_string(idx) + " does not reference an earlier step");
        prem.push_back(earlier[idx - 1]);
    }
    const Formula::Ptr& c = step.conclusion;

    switch (step.rule) {
    case RuleId::Hypothesis:
        for (const auto& h : hypotheses)
            if (equal(h, c)) return accept();
        return reject("conclusion is not a hypothesis of the derivation");

    case RuleId::PropTautology:
        if (!is_propositional_tautology(c))
            return reject("conclusion is not a propositional tautology");
        return accept();

    case RuleId::DefSubstitution: {
        if (!defended) return reject("no defended-belief definition in scope");
        std::vector<Formula::Ptr> candidates;
        unfold_candidates(prem[0], *defended, candidates);
        if (candidates.empty())
            return reject("premise contains no B{" + defended->star_tag + "} occurrence");
        for (const auto& cand : candidates)
            if (equal(cand, c)) return accept();
        return reject("conclusion is not the premise with one defended-belief occurrence unfolded");
    }

    case RuleId::ConjElimLeft:
        return check_conj_elim(prem[0], c, true);
    case RuleId::ConjElimRight:
        return check_conj_elim(prem[0], c, false);

    case RuleId::DiamondCollapse: {
        const Formula::Ptr& p = prem[0];
        if (p->kind != Formula::Kind::Possibly || p->lhs->kind != Formula::Kind::Possibly)
            return reject("premise is not of shape <>[t] <>[t] a");
        if (!(p->budget == p->lhs->budget)) return reject("collapse requires equal budgets");
        if (!equal(p->lhs, c)) return reject("conclusion must drop exactly the outer <>[t]");
        return accept();
    }

    case RuleId::Symmetry: {
        const Formula::Ptr& p = prem[0];
        if (p->kind != Formula::Kind::Possibly) return reject("premise is not of shape <>[s] [][t] a");
        Rational budget;
        Formula::Ptr content;
        if (!as_box(p->lhs, budget, content))
            return reject("operand of the outer <> is not a necessity form");
        if (!equal(p->lhs, c)) return reject("conclusion must be the inner necessity formula");
        return accept();
    }

    case RuleId::DiamondDistAnd: {
        const Formula::Ptr& p = prem[0];
        if (p->kind != Formula::Kind::Possibly || p->lhs->kind != Formula::Kind::And)
            return reject("premise is not of shape <>[t](a & b)");
        Formula::Ptr expected = Formula::conj(Formula::possibly(p->budget, p->lhs->lhs),
                                              Formula::possibly(p->budget, p->lhs->rhs));
        if (!equal(expected, c))
            return reject("conclusion must be <>[t] a & <>[t] b (expected " +
                          format_formula(expected) + ")");
        return accept();
    }

    case RuleId::Necessitation: {
        if (c->kind == Formula::Kind::Believes) {
            if (!equal(c->lhs, prem[0])) return reject("belief operand must equal the premise");
            return accept();
        }
        Rational budget;
        Formula::Ptr content;
        if (as_box(c, budget, content) && equal(content, prem[0])) return accept();
        return reject("conclusion must be [][t] premise or B{tag} premise");
    }

    case RuleId::Distribution: {
        const Formula::Ptr& p = prem[0];
        Rational budget;
        Formula::Ptr content;
        if (as_box(p, budget, content)) {
            Formula::Ptr a, b;
            if (!as_implication(content, a, b))
                return reject("necessity operand is not an implication");
            Formula::Ptr expected = Formula::implies(Formula::necessarily(budget, a),
                                                     Formula::necessarily(budget, b));
            if (!equal(expected, c))
                return reject("conclusion must be [][t] a -> [][t] b (expected " +
                              format_formula(expected) + ")");
            return accept();
        }
        if (p->kind == Formula::Kind::Believes) {
            Formula::Ptr a, b;
            if (!as_implication(p->lhs, a, b))
                return reject("belief operand is not an implication");
            Formula::Ptr expected = Formula::implies(Formula::believes(p->text, a),
                                                     Formula::believes(p->text, b));
            if (!equal(expected, c))
                return reject("conclusion must be B{g} a -> B{g} b (expected " +
                              format_formula(expected) + ")");
            return accept();
        }
        return reject("premise is neither a necessity nor a belief over an implication");
    }

    case RuleId::Reflexivity: {
        if (c->kind == Formula::Kind::Possibly && equal(c->lhs, prem[0])) return accept();
        Rational budget;
        Formula::Ptr content;
        if (as_box(prem[0], budget, content) && equal(content, c)) return accept();
        return reject("conclusion must be <>[t] premise, or premise must be [][t] conclusion");
    }

    case RuleId::Transitivity: {
        const Formula::Ptr& p = prem[0];
        if (p->kind != Formula::Kind::Possibly || p->lhs->kind != Formula::Kind::Possibly)
            return reject("premise is not of shape <>[t] <>[s] a");
        Formula::Ptr expected = Formula::possibly(p->budget + p->lhs->budget, p->lhs->lhs);
        if (!equal(expected, c))
            return reject("conclusion must be <>[t+s] a (expected " + format_formula(expected) + ")");
        return accept();
    }

    case RuleId::Consistency: {
        if (c->kind != Formula::Kind::Not || c->lhs->kind != Formula::Kind::And)
            return reject("conclusion must have shape !(B{g} a & B{g} !a)");
        const Formula::Ptr& x = c->lhs->lhs;
        const Formula::Ptr& y = c->lhs->rhs;
        if (x->kind != Formula::Kind::Believes || y->kind != Formula::Kind::Believes ||
            x->text != y->text || !equal(Formula::negate(x->lhs), y->lhs))
            return reject("conclusion must have shape !(B{g} a & B{g} !a)");
        return accept();
    }

    case RuleId::ModusPonens: {
        Formula::Ptr a, b;
        if (!as_implication(prem[0], a, b)) return reject("first premise is not an implication");
        if (!equal(prem[1], a)) return reject("second premise must equal the antecedent");
        if (!equal(b, c)) return reject("conclusion must equal the consequent");
        return accept();
    }

    case RuleId::ModusTollens: {
        Formula::Ptr a, b;
        if (!as_implication(prem[0], a, b)) return reject("first premise is not an implication");
        if (!equal(prem[1], Formula::negate(b)))
            return reject("second premise must equal the negated consequent");
        if (!equal(c, Formula::negate(a)))
            return reject("conclusion must equal the negated antecedent");
        return accept();
    }

    case RuleId::ContradictionIntro: {
        if (!equal(prem[0], Formula::negate(prem[1])))
            return reject("premises must be !a and a, in that order");
        if (c->kind != Formula::Kind::And || !equal(c->lhs, prem[0]) || !equal(c->rhs, prem[1]))
            return reject("conclusion must be the conjunction !a & a of the premises");
        return accept();
    }
    }
    return reject("unhandled rule");
}

DerivationResult check_derivation(const Derivation& derivation) {
    DerivationResult result;
    if (derivation.steps.empty()) {
        result.ok = false;
        result.reason = "derivation has no steps";
        return result;
    }
    std::vector<Formula::Ptr> earlier;
    for (std::size_t i = 0; i < derivation.steps.size(); ++i) {
        const DerivationStep& step = derivation.steps[i];
        if (step.index != i + 1) {
            result.ok = false;
            result.failing_step = i + 1;
            result.reason = "step indices must be consecutive from 1";
            return result;
        }
        StepResult sr = check_step(step, earlier, derivation.hypotheses, derivation.defended);
        if (!sr.ok) {
            result.ok = false;
            result.failing_step = step.index;
            result.reason = sr.reason;
            return result;
        }
        earlier.push_back(step.conclusion);
    }
    const Formula::Ptr& last = derivation.steps.back().conclusion;
    if (!derivation.goal || !equal(derivation.goal, last)) {
        result.ok = false;
        result.failing_step = derivation.steps.size();
        result.reason = "goal does not equal the final step's conclusion";
        return result;
    }
    const bool contradiction_goal = derivation.goal->kind == Formula::Kind::And &&
                                    equal(derivation.goal->lhs, Formula::negate(derivation.goal->rhs));
    if (contradiction_goal && derivation.steps.back().rule != RuleId::ContradictionIntro) {
        result.ok = false;
        result.failing_step = derivation.steps.size();
        result.reason = "a contradiction goal must end with ContradictionIntro";
        return result;
    }
    return result;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_pipes(const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == '|') {
            parts.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    return parts;
}

} // namespace

Derivation parse_derivation(std::istream& in) {
    Derivation d;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t colon = t.find(':');
        if (colon == std::string::npos) throw IoError("expected 'key: value'", line_no);
        std::string key = trim(t.substr(0, colon));
        std::string value = trim(t.substr(colon + 1));
        try {
            if (key == "name") {
                d.name = value;
            } else if (key == "defended-def") {
                DefendedDef def;
                std::istringstream fields(value);
                std::string field;
                while (fields >> field) {
                    std::size_t eq = field.find('=');
                    if (eq == std::string::npos) throw Error("expected key=value in defended-def");
                    std::string k = field.substr(0, eq);
                    std::string v = field.substr(eq + 1);
                    if (k == "star")
                        def.star_tag = v;
                    else if (k == "naive")
                        def.naive_tag = v;
                    else if (k == "t") {
                        // reuse the formula budget syntax
                        Formula::Ptr probe = parse_formula("<>[" + v + "] p");
                        def.budget = probe->budget;
                    } else
                        throw Error("unknown defended-def field '" + k + "'");
                }
                if (def.star_tag.empty() || def.naive_tag.empty())
                    throw Error("defended-def needs star= and naive= tags");
                d.defended = def;
            } else if (key == "hyp") {
                d.hypotheses.push_back(parse_formula(value));
            } else if (key == "step") {
                auto parts = split_pipes(value);
                if (parts.size() < 4) throw Error("step needs index | rule | premises | formula");
                DerivationStep step;
                step.index = std::stoull(parts[0]);
                auto rule = rule_from_name(parts[1]);
                if (!rule) throw Error("unknown rule '" + parts[1] + "'");
                step.rule = *rule;
                if (!parts[2].empty()) {
                    std::istringstream prems(parts[2]);
                    std::string idx;
                    while (std::getline(prems, idx, ','))
                        step.premises.push_back(std::stoull(trim(idx)));
                }
                step.conclusion = parse_formula(parts[3]);
                if (parts.size() > 4) step.note = parts[4];
                d.steps.push_back(std::move(step));
            } else if (key == "goal") {
                d.goal = parse_formula(value);
            } else {
                throw Error("unknown fixture key '" + key + "'");
            }
        } catch (const IoError&) {
            throw;
        } catch (const std::exception& e) {
            throw IoError(std::string("bad fixture record: ") + e.what(), line_no);
        }
    }
    if (!d.goal) throw IoError("fixture has no goal", line_no == 0 ? 1 : line_no);
    if (d.steps.empty()) throw IoError("fixture has no steps", line_no == 0 ? 1 : line_no);
    return d;
}

Derivation parse_derivation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open fixture '" + path + "'");
    return parse_derivation(in);
}

} // namespace ehpo
