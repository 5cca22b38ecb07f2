#include "edslrs/factor.hpp"

#include "edslrs/error.hpp"
#include "edslrs/modular.hpp"

#include <algorithm>
#include <vector>

namespace edslrs::nt {

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic witness set for 64-bit inputs
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = mod::pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mod::mul(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t next_prime(std::uint64_t n) {
    std::uint64_t c = n + 1;
    while (!is_prime_u64(c)) ++c;
    return c;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
    std::vector<std::uint32_t> out;
    if (limit < 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

Int Factorization::value() const {
    Int v = cofactor;
    for (const auto& [p, e] : primes) v *= pow_int(p, e);
    return v;
}

namespace {

constexpr unsigned kTrialLimit = 10'000;

/// Pollard-Brent rho; returns a non-trivial factor or 0 when the budget runs out.
Int brent_rho(const Int& n, std::uint64_t& budget) {
    if (mpz_even_p(n.get_mpz_t())) return Int(2);
    for (unsigned long c = 1; budget > 0; ++c) {
        Int y(2), x, ys, q(1), g(1);
        unsigned long r = 1;
        const unsigned long m = 128;
        auto f = [&](const Int& v) {
            Int t = v * v + c;
            mpz_mod(t.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            return t;
        };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                unsigned long steps = std::min(m, r - k);
                for (unsigned long i = 0; i < steps; ++i) {
                    y = f(y);
                    Int diff = abs_int(Int(x - y));
                    q = q * diff;
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                budget = budget > steps ? budget - steps : 0;
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1 && budget > 0);
            r *= 2;
        } while (g == 1 && budget > 0);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs_int(Int(x - ys)), n);
            } while (g == 1);
        }
        if (g != n && g != 1) return g;
    }
    return Int(0);
}

void factor_into(const Int& n, Factorization& out, std::uint64_t& budget) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.primes[n] += 1;
        return;
    }
    if (mpz_perfect_square_p(n.get_mpz_t())) {
        Int s;
        mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
        Factorization sub;
        factor_into(s, sub, budget);
        for (const auto& [p, e] : sub.primes) out.primes[p] += 2 * e;
        if (sub.cofactor != 1) out.cofactor *= sub.cofactor * sub.cofactor;
        return;
    }
    Int d = budget > 0 ? brent_rho(n, budget) : Int(0);
    if (d == 0) {
        out.cofactor *= n;
        return;
    }
    factor_into(d, out, budget);
    factor_into(exact_div(n, d), out, budget);
}

}  // namespace

Factorization factor(const Int& n, std::uint64_t rho_budget) {
    Factorization out;
    Int m = abs_int(n);
    if (m == 0) fail(ErrorKind::invalid_input, "cannot factor zero");
    for (unsigned long p = 2; p < kTrialLimit && m > 1; p = (p == 2 ? 3 : p + 2)) {
        if (Int(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            out.primes[Int(p)] += 1;
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    }
    std::uint64_t budget = rho_budget;
    factor_into(m, out, budget);
    return out;
}

std::map<std::uint64_t, unsigned> factor_u64(std::uint64_t n) {
    std::map<std::uint64_t, unsigned> out;
    if (n < 2) return out;
    auto f = factor(from_u64(n), ~std::uint64_t{0});
    for (const auto& [p, e] : f.primes) out[to_u64(p)] = e;
    return out;
}

std::vector<Int> prime_divisors(const Int& n) {
    auto f = factor(n, ~std::uint64_t{0});
    std::vector<Int> out;
    for (const auto& [p, e] : f.primes) out.push_back(p);
    return out;
}

}  // namespace edslrs::nt
