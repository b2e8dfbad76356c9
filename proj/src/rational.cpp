#include "aklab/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace aklab {

namespace {

bool valid_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t k = start; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    }
    return true;
}

}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    std::string num = text.substr(0, slash);
    std::string den = slash == std::string::npos ? "" : text.substr(slash + 1);
    if (!valid_integer_token(num) || (slash != std::string::npos && !valid_integer_token(den))) {
        throw std::invalid_argument("bad rational '" + text + "': want 'a/b' or an integer");
    }
    BigInt n(num);
    BigInt d = slash == std::string::npos ? BigInt(1) : BigInt(den);
    if (d == 0) {
        throw std::domain_error("bad rational '" + text + "': zero denominator");
    }
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_decimal(const Rational& value) {
    if (value == 0) return "0";
    mpf_class f(value, 256);
    mp_exp_t exp10 = 0;
    std::string digits = f.get_str(exp10, 10, 17);
    std::string sign;
    if (!digits.empty() && digits[0] == '-') {
        sign = "-";
        digits.erase(digits.begin());
    }
    digits.resize(17, '0');
    char tail[32];
    long e = static_cast<long>(exp10) - 1;
    std::snprintf(tail, sizeof tail, "e%+03ld", e);
    return sign + digits.substr(0, 1) + "." + digits.substr(1) + tail;
}

Rational pow_rational(const Rational& value, long exp) {
    if (exp == 0) return Rational(1);
    if (value == 0) {
        if (exp < 0) throw std::domain_error("zero base with negative exponent");
        return Rational(0);
    }
    unsigned long k = exp < 0 ? static_cast<unsigned long>(-exp)
                              : static_cast<unsigned long>(exp);
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), value.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), value.get_den().get_mpz_t(), k);
    Rational result = exp < 0 ? Rational(den, num) : Rational(num, den);
    result.canonicalize();
    return result;
}

BigInt binomial(long n, long k) {
    if (n < 0) throw std::domain_error("binomial needs n >= 0");
    if (k < 0 || k > n) return BigInt(0);
    BigInt result;
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return result;
}

}
