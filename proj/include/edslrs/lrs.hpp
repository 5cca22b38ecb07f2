#pragma once

#include "edslrs/bigint.hpp"
#include "edslrs/poly.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace edslrs::lrs {

/// u_{n+k} = c_1 u_{n+k-1} + ... + c_k u_n with c_k != 0.
struct LrsSpec {
    std::vector<Int> coeffs;   // c_1..c_k
    std::vector<Int> initial;  // u_1..u_k
    /// Set when no shorter recurrence reproduces the sequence.
    bool minimal = false;

    std::size_t order() const { return coeffs.size(); }
    std::string to_string() const;
    bool operator==(const LrsSpec& o) const { return coeffs == o.coeffs && initial == o.initial; }
};

LrsSpec make_spec(std::vector<Int> coeffs, std::vector<Int> initial);
void validate(const LrsSpec& s);

/// Psi(x) = x^k - c_1 x^{k-1} - ... - c_k
Poly characteristic_poly(const LrsSpec& s);

std::vector<Int> generate(const LrsSpec& s, std::size_t count);
Int eval_exact(const LrsSpec& s, std::size_t n);
/// u_n mod p via companion-matrix powers; n may be astronomically large.
std::uint64_t eval_mod(const LrsSpec& s, const Int& n, std::uint64_t p);

struct FitResult {
    bool found = false;
    LrsSpec spec;
    /// Order reported by the fit on the leading terms (0 for the zero sequence).
    std::size_t order = 0;
    /// Rational coefficients when they fail to be integers.
    std::vector<Rat> rational_coeffs;
    std::string diagnostic;
};

/// Minimal recurrence of order <= bound over Q (Berlekamp-Massey on the first 2*bound terms,
/// verified on the rest), then the integrality check. Needs at least 2*bound terms.
FitResult fit_minimal_recurrence(const std::vector<Int>& terms, std::size_t bound = 12);

/// Spec for <u_{Mn}>, re-minimised.
LrsSpec decimate(const LrsSpec& s, std::uint64_t m);

/// Same sequence, shortest recurrence.
LrsSpec minimise(const LrsSpec& s);

struct DegeneracyReport {
    bool degenerate = false;
    /// Smallest root-of-unity order among ratios of distinct roots (0 when none).
    unsigned order = 0;
    std::vector<unsigned> all_orders;
    /// Ratio polynomial with the trivial (x-1)^s factor removed.
    Poly ratio_poly;
    /// Order of the minimal recurrence that was analysed.
    std::size_t minimal_order = 0;
};

/// Resultant-based ratio polynomial of a squarefree f: roots are a/b over distinct roots a != b of f.
Poly ratio_polynomial(const Poly& f);

/// Roots-of-unity ratios among the distinct characteristic roots of the minimal recurrence.
DegeneracyReport is_degenerate(const LrsSpec& s);

struct Reduction {
    std::uint64_t m = 1;
    LrsSpec spec;
};

/// M = lcm of the witness orders; returns decimate(s, M^2), which is non-degenerate.
Reduction nondegenerate_reduction(const LrsSpec& s);

struct LrsPeriod {
    Int period;
    /// Full-window check over [1, 2*period + k] was carried out (period small enough).
    bool window_verified = false;
};

/// Minimal period of u_n mod p; requires p not dividing c_k.
LrsPeriod lrs_period_mod_p(const LrsSpec& s, std::uint64_t p);

struct SquarePeriod {
    std::uint64_t base_period = 0;
    std::uint64_t period = 0;
    /// All n in [1, window_end] were checked (covers a full base period).
    std::uint64_t window_end = 0;
};

/// Minimal period of n -> u_{n^2} mod p.
SquarePeriod square_sampled_period(const LrsSpec& s, std::uint64_t p,
                                   std::uint64_t table_cap = std::uint64_t{1} << 27);

/// log|u_n| / n for n = 1..count (0 where u_n = 0).
std::vector<double> growth_profile(const LrsSpec& s, std::size_t count);

/// `lrs k c1..ck u1..uk`
LrsSpec parse_spec(const std::string& line);
/// One integer per line; blank lines and '#' comments skipped.
std::vector<Int> read_terms(std::istream& in);

}  // namespace edslrs::lrs
