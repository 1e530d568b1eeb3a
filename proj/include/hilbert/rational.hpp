#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hilbert {

/// Exact rational number, always in lowest terms with a positive denominator.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long value) : value_(value) {} // NOLINT(google-explicit-constructor)
    ExactRational(int value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    ExactRational(long numerator, long denominator);
    ExactRational(const mpz_class& numerator, const mpz_class& denominator);

    /// Parses "a/b", "a" or a finite decimal such as "-0.375".
    static ExactRational parse(std::string_view text);

    /// Exact value of a finite double.
    static ExactRational from_double(double value);

    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] double to_double() const { return value_.get_d(); }
    [[nodiscard]] std::string str() const { return value_.get_str(); }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

    ExactRational& operator+=(const ExactRational& rhs);
    ExactRational& operator-=(const ExactRational& rhs);
    ExactRational& operator*=(const ExactRational& rhs);
    ExactRational& operator/=(const ExactRational& rhs);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
    friend ExactRational operator-(const ExactRational& a);

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const ExactRational& r);

private:
    explicit ExactRational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }
    mpq_class value_;
};

} // namespace hilbert
