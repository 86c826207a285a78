#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mnm {

using BigInt = mpz_class;

/// Arbitrary-precision fraction, always kept in lowest terms with a positive
/// denominator.
class ExactRational {
public:
    ExactRational() = default;
    ExactRational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
    explicit ExactRational(const BigInt& value) : q_(value) {}
    ExactRational(const BigInt& numerator, const BigInt& denominator);

    /// Parses "n", "n/d" or a plain decimal such as "0.25" (read exactly).
    static ExactRational parse(std::string_view text);

    [[nodiscard]] BigInt numerator() const { return q_.get_num(); }
    [[nodiscard]] BigInt denominator() const { return q_.get_den(); }
    [[nodiscard]] double to_double() const { return q_.get_d(); }
    [[nodiscard]] std::string to_string() const;  // "n/d", or "n" when d == 1
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(q_); }

    ExactRational& operator+=(const ExactRational& o) { q_ += o.q_; return *this; }
    ExactRational& operator-=(const ExactRational& o) { q_ -= o.q_; return *this; }
    ExactRational& operator*=(const ExactRational& o) { q_ *= o.q_; return *this; }
    ExactRational& operator/=(const ExactRational& o);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }
    friend ExactRational operator-(const ExactRational& a) { ExactRational r; r.q_ = -a.q_; return r; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const ExactRational& a, const ExactRational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    [[nodiscard]] const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const ExactRational& r);

/// n choose k by the multiplicative formula; zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

/// base^exponent for non-negative exponents.
BigInt power(unsigned long base, unsigned long exponent);

}  // namespace mnm
