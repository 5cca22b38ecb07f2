#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace edslrs {

using Int = mpz_class;
using Rat = mpq_class;

Int parse_int(std::string_view text);
Rat parse_rat(std::string_view text);

inline std::string to_dec(const Int& v) { return v.get_str(10); }
inline std::string to_dec(const Rat& v) { return v.get_str(10); }

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// Canonical residue of v in [0, m).
inline Int mod_floor(const Int& v, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    if (r < 0) r += abs_int(m);
    return r;
}

inline std::uint64_t mod_u64(const Int& v, std::uint64_t m) {
    return mpz_fdiv_ui(v.get_mpz_t(), m);
}

inline bool fits_u64(const Int& v) {
    return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Int& v) {
    return static_cast<std::uint64_t>(mpz_get_ui(v.get_mpz_t()));
}

inline Int from_u64(std::uint64_t v) {
    Int r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

inline Int from_i64(std::int64_t v) {
    if (v >= 0) return from_u64(static_cast<std::uint64_t>(v));
    return -from_u64(static_cast<std::uint64_t>(-(v + 1)) + 1);
}

/// Exact quotient; throws when b does not divide a.
Int exact_div(const Int& a, const Int& b);

/// Natural log of |v| for v != 0 (double precision, for growth diagnostics only).
double log_abs(const Int& v);

}  // namespace edslrs
