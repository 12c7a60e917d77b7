#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

// Exact rational arithmetic for density thresholds.  Denominator always
// positive, fraction always reduced.  Comparisons go through 128-bit
// intermediates so desk-scale values never overflow.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    constexpr Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}

    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw input_error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    // Accepts "3", "-1/9", and decimal forms like "0.01".
    static Rational parse(const std::string& text);

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

// Decides  value <= coeff * lambda^(1/4) * n  exactly, by raising both sides
// to the fourth power.  lambda must be nonnegative.
bool within_quartic_slack(std::int64_t value, std::int64_t coeff, const Rational& lambda, std::int64_t n);

}  // namespace rainbow
