#include "ffvc/bigint.hpp"

namespace ffvc {

Rational parse_rational(const std::string& text) {
    std::string s = text;
    if (s.empty())
        throw ParseError("empty rational literal");
    try {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            BigInt num(s.substr(0, slash));
            BigInt den(s.substr(slash + 1));
            if (den == 0) throw ParseError("zero denominator in '" + text + "'");
            return Rational(num, den);
        }
        auto point = s.find('.');
        if (point == std::string::npos)
            return Rational(BigInt(s));
        std::string digits = s.substr(0, point) + s.substr(point + 1);
        size_t frac_len = s.size() - point - 1;
        if (digits.empty() || digits == "-")
            throw ParseError("bad rational literal '" + text + "'");
        return Rational(BigInt(digits), bpow(BigInt(10), static_cast<unsigned>(frac_len)));
    } catch (const std::runtime_error& err) {
        throw ParseError("bad rational literal '" + text + "'");
    }
}

std::string rational_to_string(const Rational& r) {
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string rational_num_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str();
}

std::string rational_den_string(const Rational& r) {
    return boost::multiprecision::denominator(r).str();
}

} // namespace ffvc
