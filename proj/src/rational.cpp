#include "sclkit/rational.h"

#include "sclkit/errors.h"

#include <cctype>

namespace sclkit {

Rational make_rational(long num, long den) {
    if (den == 0) throw InvalidArgument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) {
    Rational c(r);
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational rational_from_string(const std::string& text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t digits = 0;
    std::size_t slash = std::string::npos;
    for (std::size_t k = i; k < text.size(); ++k) {
        if (std::isdigit(static_cast<unsigned char>(text[k]))) {
            ++digits;
        } else if (text[k] == '/' && slash == std::string::npos && digits > 0) {
            slash = k;
            digits = 0;
        } else {
            throw InvalidArgument("malformed rational '" + text + "'");
        }
    }
    if (digits == 0) throw InvalidArgument("malformed rational '" + text + "'");
    Rational r;
    if (slash == std::string::npos) {
        r = Rational(Integer(text[0] == '+' ? text.substr(1) : text));
    } else {
        Integer num(text[0] == '+' ? text.substr(1, slash - 1) : text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw InvalidArgument("zero denominator in '" + text + "'");
        r = Rational(num, den);
        r.canonicalize();
    }
    return r;
}

Integer lcm_of_denominators(const std::vector<Rational>& values) {
    Integer l = 1;
    for (const auto& v : values) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    }
    return l;
}

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace sclkit
