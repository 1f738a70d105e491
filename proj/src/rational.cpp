#include "polyred/rational.hpp"

#include <cctype>

namespace polyred {

Integer factorial(unsigned n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) {
        return q.get_num().get_str();
    }
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    auto is_int = [](std::string_view s) {
        std::size_t i = 0;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
            i = 1;
        }
        if (i == s.size()) {
            return false;
        }
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
                return false;
            }
        }
        return true;
    };
    auto strip_plus = [](std::string_view s) {
        return (!s.empty() && s[0] == '+') ? std::string(s.substr(1)) : std::string(s);
    };
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_int(num_text)) {
        throw DomainError("malformed rational: " + std::string(text));
    }
    Integer num(strip_plus(num_text));
    Integer den(1);
    if (slash != std::string_view::npos) {
        const auto den_text = text.substr(slash + 1);
        if (!is_int(den_text) || den_text[0] == '-' || den_text[0] == '+') {
            throw DomainError("malformed rational: " + std::string(text));
        }
        den = Integer(std::string(den_text));
    }
    return make_rational(num, den);
}

}  // namespace polyred
