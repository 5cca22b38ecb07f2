#include "edslrs/bigint.hpp"

#include "edslrs/error.hpp"

#include <cmath>
#include <string>

namespace edslrs {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::invalid_input: return "invalid_input";
        case ErrorKind::no_square_root: return "no_square_root";
        case ErrorKind::not_coprime: return "not_coprime";
        case ErrorKind::inexact_division: return "inexact_division";
        case ErrorKind::torsion_point: return "torsion_point";
        case ErrorKind::bad_reduction: return "bad_reduction";
        case ErrorKind::degenerate: return "degenerate";
        case ErrorKind::unconfirmed: return "unconfirmed";
        case ErrorKind::internal: return "internal";
    }
    return "unknown";
}

Int parse_int(std::string_view text) {
    std::string s(text);
    if (s.empty()) fail(ErrorKind::invalid_input, "empty integer");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) fail(ErrorKind::invalid_input, "malformed integer '" + s + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') fail(ErrorKind::invalid_input, "malformed integer '" + s + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return Int(s, 10);
}

Rat parse_rat(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rat(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) fail(ErrorKind::invalid_input, "zero denominator in '" + std::string(text) + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Int exact_div(const Int& a, const Int& b) {
    if (b == 0) fail(ErrorKind::inexact_division, "division by zero");
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
        fail(ErrorKind::inexact_division, a.get_str() + " is not divisible by " + b.get_str());
    }
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

double log_abs(const Int& v) {
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace edslrs
