#include "treetp/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace treetp {

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool is_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

// gmp rejects an explicit leading '+'.
std::string strip_plus(const std::string& s) {
    return (!s.empty() && s[0] == '+') ? s.substr(1) : s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string s(text);
    if (auto slash = s.find('/'); slash != std::string::npos) {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (!is_integer_token(num) || !is_integer_token(den))
            throw std::invalid_argument("rational: malformed fraction '" + s + "'");
        Integer p(strip_plus(num), 10), q(strip_plus(den), 10);
        if (q == 0) throw std::invalid_argument("rational: zero denominator in '" + s + "'");
        Rational r(p, q);
        r.canonicalize();
        return r;
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        const std::string whole = s.substr(0, dot);
        const std::string frac = s.substr(dot + 1);
        std::string sign_part;
        std::string digits = whole;
        if (!whole.empty() && (whole[0] == '+' || whole[0] == '-')) {
            sign_part = whole.substr(0, 1);
            digits = whole.substr(1);
        }
        if (frac.empty() || (!digits.empty() && !is_integer_token(digits)) ||
            !is_integer_token(frac))
            throw std::invalid_argument("rational: malformed decimal '" + s + "'");
        // Base fixed to 10: gmp's auto-detection would read a leading
        // zero ("0125") as octal.
        Integer p((sign_part == "-" ? "-" : "") +
                      (digits.empty() ? "0" : digits) + frac,
                  10);
        Integer q(1);
        for (std::size_t i = 0; i < frac.size(); ++i) q *= 10;
        Rational r(p, q);
        r.canonicalize();
        return r;
    }
    if (!is_integer_token(s))
        throw std::invalid_argument("rational: malformed number '" + s + "'");
    return Rational(Integer(strip_plus(s), 10));
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace treetp
