#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "coopmac/rational.hpp"

namespace coopmac {

/// Univariate polynomial with exact rational coefficients, stored in
/// ascending powers with trailing zeros stripped (the zero polynomial has no
/// coefficients).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> ascending_coefficients);

    static Polynomial constant(Rational value);
    static Polynomial variable();  // p

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Coefficient of p^k (zero outside the stored range).
    Rational coeff(std::size_t k) const;
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    Rational operator()(const Rational& x) const;  // Horner
    double operator()(double x) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// "(5p^2-5p+6)/16"-style rendering: descending powers over the common
    /// denominator. Constants render as plain rationals ("3/8").
    std::string str(std::string_view var = "p") const;

private:
    void normalize();
    std::vector<Rational> coeffs_;
};

}  // namespace coopmac
