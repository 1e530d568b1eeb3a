#include "hilbert/rational.hpp"

#include "hilbert/errors.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace hilbert {

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) throw DomainError("not an integer literal: '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

} // namespace

ExactRational::ExactRational(long numerator, long denominator) {
    if (denominator == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

ExactRational::ExactRational(const mpz_class& numerator, const mpz_class& denominator) {
    if (denominator == 0) throw DomainError("rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw DomainError("empty rational literal");

    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash));
        mpz_class den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw DomainError("rational with zero denominator: '" + std::string(text) + "'");
        return ExactRational(mpq_class(num, den));
    }
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        const bool negative = !whole.empty() && whole.front() == '-';
        if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
        if ((!whole.empty() && !is_integer_literal(whole)) || frac.empty() || !is_integer_literal(frac) ||
            frac.front() == '-' || frac.front() == '+') {
            throw DomainError("not a decimal literal: '" + std::string(text) + "'");
        }
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        mpz_class num = (whole.empty() ? mpz_class(0) : parse_integer(whole)) * scale + parse_integer(frac);
        if (negative) num = -num;
        return ExactRational(mpq_class(num, scale));
    }
    return ExactRational(mpq_class(parse_integer(text)));
}

ExactRational ExactRational::from_double(double value) {
    if (!std::isfinite(value)) throw DomainError("cannot convert a non-finite double to a rational");
    return ExactRational(mpq_class(value));
}

ExactRational& ExactRational::operator+=(const ExactRational& rhs) {
    value_ += rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator-=(const ExactRational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator*=(const ExactRational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

ExactRational& ExactRational::operator/=(const ExactRational& rhs) {
    if (sgn(rhs.value_) == 0) throw DomainError("division by zero in exact rational arithmetic");
    value_ /= rhs.value_;
    return *this;
}

ExactRational operator-(const ExactRational& a) { return ExactRational(mpq_class(-a.value_)); }

std::ostream& operator<<(std::ostream& os, const ExactRational& r) { return os << r.str(); }

} // namespace hilbert
