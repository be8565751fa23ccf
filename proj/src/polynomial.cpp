#include "coopmac/polynomial.hpp"

#include <boost/integer/common_factor_rt.hpp>

#include <sstream>
#include <stdexcept>

namespace coopmac {

using boost::multiprecision::cpp_int;

Rational parse_rational(std::string_view text) {
    const auto bad = [&] {
        return std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    };
    if (text.empty()) throw bad();
    try {
        if (const auto slash = text.find('/'); slash != std::string_view::npos) {
            const cpp_int num{std::string(text.substr(0, slash))};
            const cpp_int den{std::string(text.substr(slash + 1))};
            if (den == 0) throw bad();
            return Rational(num, den);
        }
        if (const auto dot = text.find('.'); dot != std::string_view::npos) {
            std::string digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
            const std::size_t frac_len = text.size() - dot - 1;
            if (frac_len == 0 || dot == 0) throw bad();
            cpp_int scale = 1;
            for (std::size_t i = 0; i < frac_len; ++i) scale *= 10;
            return Rational(cpp_int{digits}, scale);
        }
        return Rational(cpp_int{std::string(text)});
    } catch (const std::runtime_error&) {
        throw bad();
    }
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

Polynomial::Polynomial(std::vector<Rational> ascending_coefficients)
    : coeffs_(std::move(ascending_coefficients)) {
    normalize();
}

Polynomial Polynomial::constant(Rational value) {
    return Polynomial({std::move(value)});
}

Polynomial Polynomial::variable() {
    return Polynomial({Rational(0), Rational(1)});
}

void Polynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Polynomial::operator()(double x) const {
    double acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + it->convert_to<double>();
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return Polynomial();
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

std::string Polynomial::str(std::string_view var) const {
    if (coeffs_.empty()) return "0";
    if (coeffs_.size() == 1) return to_string(coeffs_[0]);

    cpp_int common_den = 1;
    for (const Rational& c : coeffs_)
        common_den = boost::integer::lcm(common_den, cpp_int(denominator(c)));

    std::ostringstream body;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational scaled = coeffs_[k] * Rational(common_den);
        const cpp_int n = numerator(scaled);
        if (n == 0) continue;
        if (first) {
            if (n < 0) body << "-";
            first = false;
        } else {
            body << (n < 0 ? "-" : "+");
        }
        const cpp_int mag = abs(n);
        if (mag != 1 || k == 0) body << mag;
        if (k >= 1) {
            body << var;
            if (k >= 2) body << "^" << k;
        }
    }
    if (common_den == 1) return body.str();
    std::ostringstream os;
    os << "(" << body.str() << ")/" << common_den;
    return os.str();
}

}  // namespace coopmac
