#include "coopmac/bool_expr.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace coopmac {

Term Term::of(std::initializer_list<Literal> lits) {
    Term t;
    for (const Literal& l : lits) t = t.with(l.element, !l.complemented);
    return t;
}

Term Term::with(StateElement e, bool positive) const {
    const std::uint8_t bit = static_cast<std::uint8_t>(1u << bit_position(e));
    if ((mask_ & bit) && static_cast<bool>(value_ & bit) != positive)
        throw std::invalid_argument("contradictory literal in product term");
    Term t = *this;
    t.mask_ = static_cast<std::uint8_t>(t.mask_ | bit);
    if (positive) t.value_ = static_cast<std::uint8_t>(t.value_ | bit);
    return t;
}

int Term::literal_count() const noexcept {
    return std::popcount(mask_);
}

std::vector<Literal> Term::literals() const {
    std::vector<Literal> out;
    for (StateElement e : kAllElements) {
        const std::uint8_t bit = static_cast<std::uint8_t>(1u << bit_position(e));
        if (mask_ & bit) out.push_back({e, !(value_ & bit)});
    }
    return out;
}

std::string Term::str() const {
    if (mask_ == 0) return "1";
    std::string out;
    for (const Literal& l : literals()) {
        if (!out.empty()) out += "*";
        if (l.complemented) out += "~";
        out += element_name(l.element);
    }
    return out;
}

BoolExpr BoolExpr::constant(bool value) {
    BoolExpr e;
    if (value) e.terms_.push_back(Term::always());
    return e;
}

BoolExpr BoolExpr::sum(std::vector<Term> terms) {
    // Constant-true absorbs everything else.
    if (std::any_of(terms.begin(), terms.end(),
                    [](const Term& t) { return t.mask() == 0; }))
        return constant(true);
    std::sort(terms.begin(), terms.end());
    terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
    BoolExpr e;
    e.terms_ = std::move(terms);
    return e;
}

bool BoolExpr::evaluate(NetworkState s) const noexcept {
    return std::any_of(terms_.begin(), terms_.end(),
                       [s](const Term& t) { return t.evaluate(s); });
}

bool BoolExpr::is_constant_true() const noexcept {
    return terms_.size() == 1 && terms_.front().mask() == 0;
}

int BoolExpr::literal_count() const noexcept {
    int n = 0;
    for (const Term& t : terms_) n += t.literal_count();
    return n;
}

std::uint8_t BoolExpr::support_mask() const noexcept {
    std::uint8_t m = 0;
    for (const Term& t : terms_) m = static_cast<std::uint8_t>(m | t.mask());
    return m;
}

std::string BoolExpr::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const Term& t : terms_) {
        if (!out.empty()) out += " + ";
        out += t.str();
    }
    return out;
}

}  // namespace coopmac
