#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "coopmac/binary_model.hpp"

namespace coopmac {

struct Literal {
    StateElement element;
    bool complemented = false;

    friend constexpr bool operator==(Literal, Literal) noexcept = default;
};

/// Product of literals over distinct state elements. An empty product is the
/// constant 1. Encoded as (mask, value) over the element bit positions:
/// mask selects the elements present, value gives their required polarity.
class Term {
public:
    constexpr Term() noexcept = default;

    static constexpr Term always() noexcept { return Term(); }

    static Term of(std::initializer_list<Literal> lits);

    Term with(StateElement e, bool positive) const;

    constexpr bool evaluate(NetworkState s) const noexcept {
        return (s.index() & mask_) == value_;
    }

    constexpr std::uint8_t mask() const noexcept { return mask_; }
    constexpr std::uint8_t value() const noexcept { return value_; }
    int literal_count() const noexcept;
    std::vector<Literal> literals() const;  // ascending element order

    std::string str() const;

    friend constexpr bool operator==(Term, Term) noexcept = default;
    friend constexpr auto operator<=>(Term, Term) noexcept = default;

private:
    constexpr Term(std::uint8_t mask, std::uint8_t value) noexcept
        : mask_(mask), value_(value) {}

    std::uint8_t mask_ = 0;
    std::uint8_t value_ = 0;
};

/// Sum-of-products over state-element literals, plus the constants 0 and 1.
/// Terms are kept sorted and deduplicated so structural equality is
/// meaningful; an empty sum is the constant 0.
class BoolExpr {
public:
    BoolExpr() = default;

    static BoolExpr constant(bool value);
    static BoolExpr sum(std::vector<Term> terms);

    bool evaluate(NetworkState s) const noexcept;

    bool is_constant_false() const noexcept { return terms_.empty(); }
    bool is_constant_true() const noexcept;

    const std::vector<Term>& terms() const noexcept { return terms_; }
    int term_count() const noexcept { return static_cast<int>(terms_.size()); }
    int literal_count() const noexcept;

    /// Bitmask over element positions of every variable appearing in the
    /// expression.
    std::uint8_t support_mask() const noexcept;

    std::string str() const;  // "H_R1S2*~H_S1S2 + H_R1D2", "0", "1"

    friend bool operator==(const BoolExpr&, const BoolExpr&) = default;

private:
    std::vector<Term> terms_;
};

}  // namespace coopmac
