#include "mnm/rational.hpp"

#include <algorithm>
#include <ostream>

#include "mnm/error.hpp"

namespace mnm {

ExactRational::ExactRational(const BigInt& numerator, const BigInt& denominator)
    : q_(numerator, denominator) {
    if (denominator == 0) {
        throw DomainError("ExactRational: zero denominator");
    }
    q_.canonicalize();
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
    if (o.q_ == 0) {
        throw DomainError("ExactRational: division by zero");
    }
    q_ /= o.q_;
    return *this;
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    std::string digits(text);
    if (digits.empty() || digits == "-" || digits == "+") {
        throw ParseError("not a rational: '" + std::string(whole) + "'");
    }
    if (digits.front() == '+') {
        digits.erase(0, 1);
    }
    for (std::size_t i = 0; i < digits.size(); ++i) {
        const char c = digits[i];
        if (!(c >= '0' && c <= '9') && !(i == 0 && c == '-')) {
            throw ParseError("not a rational: '" + std::string(whole) + "'");
        }
    }
    return BigInt(digits, 10);
}

}  // namespace

ExactRational ExactRational::parse(std::string_view text) {
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const BigInt num = parse_integer(text.substr(0, slash), text);
        const BigInt den = parse_integer(text.substr(slash + 1), text);
        if (den <= 0) {
            throw ParseError("non-positive denominator in '" + std::string(text) + "'");
        }
        return ExactRational(num, den);
    }
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const std::string_view int_part = text.substr(0, dot);
        const std::string_view frac_part = text.substr(dot + 1);
        if (frac_part.empty() || frac_part.find_first_of("+-") != std::string_view::npos) {
            throw ParseError("not a rational: '" + std::string(text) + "'");
        }
        const bool negative = !int_part.empty() && int_part.front() == '-';
        std::string int_digits(int_part);
        if (int_digits.empty() || int_digits == "-" || int_digits == "+") {
            int_digits += "0";
        }
        const BigInt whole = parse_integer(int_digits, text);
        const BigInt frac = parse_integer(frac_part, text);
        const BigInt scale = power(10, frac_part.size());
        BigInt num = abs(whole) * scale + frac;
        if (negative) {
            num = -num;
        }
        return ExactRational(num, scale);
    }
    return ExactRational(parse_integer(text, text));
}

std::string ExactRational::to_string() const {
    if (q_.get_den() == 1) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const ExactRational& r) {
    return os << r.to_string();
}

BigInt binomial(unsigned long n, unsigned long k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt result = 1;
    for (unsigned long i = 0; i < k; ++i) {
        result *= n - i;
        mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), i + 1);
    }
    return result;
}

BigInt power(unsigned long base, unsigned long exponent) {
    BigInt result;
    mpz_ui_pow_ui(result.get_mpz_t(), base, exponent);
    return result;
}

}  // namespace mnm
