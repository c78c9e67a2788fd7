#include "polyharm/rational.hpp"

#include "polyharm/errors.hpp"

namespace polyharm {

Rational make_rational(Int numerator, Int denominator) {
    if (denominator == 0) throw validation_error("rational with zero denominator");
    Rational r(numerator, denominator);
    r.canonicalize();
    return r;
}

Rational rational_from_string(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return make_rational(Int(text), 1);
        return make_rational(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw validation_error("malformed rational literal: \"" + text + "\"");
    }
}

std::string to_string(const Rational& value) { return value.get_str(); }

Int int_pow(Int base, unsigned exponent) {
    Int result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
}

Int binomial_int(unsigned long n, unsigned long k) {
    Int result;
    mpz_bin_uiui(result.get_mpz_t(), n, k);
    return result;
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::int64_t result = 1;
    for (int i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;  // exact at each step
    }
    return result;
}

}  // namespace polyharm
