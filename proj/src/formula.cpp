#include "ehpo/formula.hpp"

#include <cctype>
#include <map>

#include "ehpo/errors.hpp"

namespace ehpo {

struct FormulaFactory {
    static Formula::Ptr make(Formula::Kind k) {
        return Formula::Ptr(new Formula(k));
    }
};

namespace {

Formula* mut(const Formula::Ptr& p) { return const_cast<Formula*>(p.get()); }

} // namespace

Formula::Ptr Formula::atom(std::string name) {
    auto f = FormulaFactory::make(Kind::Atom);
    mut(f)->text = std::move(name);
    return f;
}

Formula::Ptr Formula::negate(Ptr inner) {
    if (inner->kind == Kind::Not) return inner->lhs; // !!a == a
    auto f = FormulaFactory::make(Kind::Not);
    mut(f)->lhs = std::move(inner);
    return f;
}

Formula::Ptr Formula::conj(Ptr a, Ptr b) {
    auto f = FormulaFactory::make(Kind::And);
    mut(f)->lhs = std::move(a);
    mut(f)->rhs = std::move(b);
    return f;
}

Formula::Ptr Formula::disj(Ptr a, Ptr b) {
    return negate(conj(negate(std::move(a)), negate(std::move(b))));
}

Formula::Ptr Formula::implies(Ptr a, Ptr b) {
    return disj(negate(std::move(a)), std::move(b));
}

Formula::Ptr Formula::possibly(Rational budget, Ptr inner) {
    if (budget.negative()) throw Error("possibility budget must be nonnegative");
    auto f = FormulaFactory::make(Kind::Possibly);
    mut(f)->budget = budget;
    mut(f)->lhs = std::move(inner);
    return f;
}

Formula::Ptr Formula::necessarily(Rational budget, Ptr inner) {
    return negate(possibly(budget, negate(std::move(inner))));
}

Formula::Ptr Formula::believes(std::string tag, Ptr inner) {
    auto f = FormulaFactory::make(Kind::Believes);
    mut(f)->text = std::move(tag);
    mut(f)->lhs = std::move(inner);
    return f;
}

bool equal(const Formula::Ptr& a, const Formula::Ptr& b) {
    if (a.get() == b.get()) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
    case Formula::Kind::Atom: return a->text == b->text;
    case Formula::Kind::Not: return equal(a->lhs, b->lhs);
    case Formula::Kind::And: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    case Formula::Kind::Possibly: return a->budget == b->budget && equal(a->lhs, b->lhs);
    case Formula::Kind::Believes: return a->text == b->text && equal(a->lhs, b->lhs);
    }
    return false;
}

namespace {

// Precedence: unary prefixes bind tighter than &; parentheses elsewhere.
void format_rec(const Formula::Ptr& f, std::string& out, bool parenthesize_and) {
    switch (f->kind) {
    case Formula::Kind::Atom:
        out += f->text;
        return;
    case Formula::Kind::Not:
        out += '!';
        format_rec(f->lhs, out, true);
        return;
    case Formula::Kind::And: {
        if (parenthesize_and) out += '(';
        format_rec(f->lhs, out, f->lhs->kind == Formula::Kind::And);
        out += " & ";
        format_rec(f->rhs, out, true);
        if (parenthesize_and) out += ')';
        return;
    }
    case Formula::Kind::Possibly:
        out += "<>[";
        out += f->budget.to_string();
        out += "] ";
        format_rec(f->lhs, out, true);
        return;
    case Formula::Kind::Believes:
        out += "B{";
        out += f->text;
        out += "} ";
        format_rec(f->lhs, out, true);
        return;
    }
}

} // namespace

std::string format_formula(const Formula::Ptr& f) {
    std::string out;
    format_rec(f, out, false);
    return out;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Formula::Ptr parse() {
        Formula::Ptr f = parse_implies();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(const char* token) {
        skip_ws();
        std::size_t len = std::string(token).size();
        if (text_.compare(pos_, len, token) == 0) {
            pos_ += len;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Formula::Ptr parse_implies() {
        Formula::Ptr left = parse_or();
        skip_ws();
        if (consume("->")) return Formula::implies(left, parse_implies());
        return left;
    }

    Formula::Ptr parse_or() {
        Formula::Ptr left = parse_and();
        for (;;) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '|') {
                ++pos_;
                left = Formula::disj(left, parse_and());
            } else {
                return left;
            }
        }
    }

    Formula::Ptr parse_and() {
        Formula::Ptr left = parse_unary();
        for (;;) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '&') {
                ++pos_;
                left = Formula::conj(left, parse_unary());
            } else {
                return left;
            }
        }
    }

    Formula::Ptr parse_unary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("formula expected");
        char c = text_[pos_];
        if (c == '!') {
            ++pos_;
            return Formula::negate(parse_unary());
        }
        if (c == '<') {
            if (!consume("<>")) fail("'<>' expected");
            Rational budget = parse_budget();
            return Formula::possibly(budget, parse_unary());
        }
        if (c == '[') {
            if (!consume("[]")) fail("'[]' expected");
            Rational budget = parse_budget();
            return Formula::necessarily(budget, parse_unary());
        }
        if (c == 'B' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '{') {
            pos_ += 2;
            std::string tag = parse_tag();
            return Formula::believes(std::move(tag), parse_unary());
        }
        if (c == '(') {
            ++pos_;
            Formula::Ptr inner = parse_implies();
            if (!consume(")")) fail("')' expected");
            return inner;
        }
        return parse_atom();
    }

    Formula::Ptr parse_atom() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("atom expected");
        return Formula::atom(text_.substr(start, pos_ - start));
    }

    std::string parse_tag() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != '}') ++pos_;
        if (pos_ >= text_.size()) fail("'}' expected");
        std::string tag = text_.substr(start, pos_ - start);
        ++pos_;
        if (tag.empty()) fail("empty reasoner tag");
        return tag;
    }

    Rational parse_budget() {
        if (!consume("[")) fail("'[' expected");
        skip_ws();
        bool neg = false;
        // Accept ASCII minus and U+2212 so negative budgets fail cleanly.
        if (pos_ < text_.size() && text_[pos_] == '-') {
            neg = true;
            ++pos_;
        } else if (text_.compare(pos_, 3, "\xe2\x88\x92") == 0) {
            neg = true;
            pos_ += 3;
        }
        std::int64_t intpart = parse_int("budget");
        Rational value = Rational::from_int(intpart);
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            std::size_t start = pos_;
            std::int64_t frac = parse_int("budget fraction");
            std::size_t digits = pos_ - start;
            if (digits > 15) fail("budget has too many fractional digits");
            std::int64_t den = 1;
            for (std::size_t i = 0; i < digits; ++i) den *= 10;
            value = value + Rational(frac, den);
        } else if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            std::int64_t den = parse_int("budget denominator");
            if (den == 0) fail("zero budget denominator");
            value = Rational(intpart, den);
        }
        if (neg) fail("negative budget");
        if (!consume("]")) fail("']' expected");
        return value;
    }

    std::int64_t parse_int(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail(std::string(what) + " digits expected");
        if (pos_ - start > 18) fail(std::string(what) + " out of range");
        return std::stoll(text_.substr(start, pos_ - start));
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

// Maps each maximal modal subformula (and each atom) to a propositional
// variable index.
void collect_vars(const Formula::Ptr& f, std::map<std::string, int>& vars) {
    switch (f->kind) {
    case Formula::Kind::Atom:
    case Formula::Kind::Possibly:
    case Formula::Kind::Believes: {
        std::string key = format_formula(f);
        if (!vars.count(key)) {
            int next = static_cast<int>(vars.size());
            vars[key] = next;
        }
        return;
    }
    case Formula::Kind::Not:
        collect_vars(f->lhs, vars);
        return;
    case Formula::Kind::And:
        collect_vars(f->lhs, vars);
        collect_vars(f->rhs, vars);
        return;
    }
}

bool eval_skeleton(const Formula::Ptr& f, const std::map<std::string, int>& vars,
                   unsigned assignment) {
    switch (f->kind) {
    case Formula::Kind::Atom:
    case Formula::Kind::Possibly:
    case Formula::Kind::Believes:
        return (assignment >> vars.at(format_formula(f))) & 1u;
    case Formula::Kind::Not:
        return !eval_skeleton(f->lhs, vars, assignment);
    case Formula::Kind::And:
        return eval_skeleton(f->lhs, vars, assignment) && eval_skeleton(f->rhs, vars, assignment);
    }
    return false;
}

} // namespace

Formula::Ptr parse_formula(const std::string& text) { return Parser(text).parse(); }

bool is_propositional_tautology(const Formula::Ptr& f) {
    std::map<std::string, int> vars;
    collect_vars(f, vars);
    if (vars.size() > 20) throw Error("tautology check limited to 20 distinct variables");
    const unsigned total = 1u << vars.size();
    for (unsigned a = 0; a < total; ++a)
        if (!eval_skeleton(f, vars, a)) return false;
    return true;
}

ConsistencyReport consistency_audit(std::span<const Formula::Ptr> formulas) {
    ConsistencyReport report;
    for (std::size_t i = 0; i < formulas.size(); ++i) {
        for (std::size_t j = 0; j < formulas.size(); ++j) {
            if (i == j) continue;
            if (equal(Formula::negate(formulas[i]), formulas[j])) {
                report.consistent = false;
                report.witness = formulas[i]->kind == Formula::Kind::Not ? formulas[j] : formulas[i];
                return report;
            }
        }
    }
    return report;
}

} // namespace ehpo
