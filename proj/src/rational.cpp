#include "rainbow/rational.hpp"

namespace rainbow {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw input_error("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::int64_t n = std::stoll(text.substr(0, slash));
        std::int64_t d = std::stoll(text.substr(slash + 1));
        return Rational(n, d);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(std::stoll(text));
    bool neg = text[0] == '-';
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    if (neg) digits = digits.substr(1);
    std::int64_t den = 1;
    for (std::size_t i = dot + 1; i < text.size(); ++i) {
        if (den > 1'000'000'000'000'000'000 / 10)
            throw input_error("decimal literal too precise: " + text);
        den *= 10;
    }
    std::int64_t num = digits.empty() ? 0 : std::stoll(digits);
    return Rational(neg ? -num : num, den);
}

bool within_quartic_slack(std::int64_t value, std::int64_t coeff, const Rational& lambda,
                          std::int64_t n) {
    if (lambda.num < 0) throw input_error("negative lambda in quartic comparison");
    if (value <= 0) return true;
    // value^4 * q  <=  coeff^4 * p * n^4
    __int128 v2 = static_cast<__int128>(value) * value;
    __int128 lhs = v2 * v2 * lambda.den;
    __int128 c2 = static_cast<__int128>(coeff) * coeff;
    __int128 n2 = static_cast<__int128>(n) * n;
    __int128 rhs = c2 * c2 * lambda.num * n2 * n2;
    return lhs <= rhs;
}

}  // namespace rainbow
