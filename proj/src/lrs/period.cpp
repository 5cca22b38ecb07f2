#include "internal.hpp"

#include "edslrs/error.hpp"
#include "edslrs/factor.hpp"
#include "edslrs/modular.hpp"
#include "edslrs/ntkernel.hpp"
#include "edslrs/simd.hpp"

#include <set>

namespace edslrs::lrs {

using mod::u64;

LrsPeriod lrs_period_mod_p(const LrsSpec& s, u64 p) {
    validate(s);
    require(nt::is_prime_u64(p), "period modulus must be prime");
    require(mod_u64(s.coeffs.back(), p) != 0, "p divides c_k: the sequence is only eventually periodic mod p");
    const std::size_t k = s.order();
    std::vector<u64> state(k);
    for (std::size_t i = 0; i < k; ++i) state[i] = mod_u64(s.initial[i], p);

    // ord(C) divides p^e * lcm{p^j - 1 : j <= k}, p^e the least power >= k.
    Int pe = 1;
    while (pe < static_cast<unsigned long>(k)) pe *= static_cast<unsigned long>(p);
    const Int bound = pe * nt::lcm_tower(from_u64(p), static_cast<unsigned>(k));
    std::set<Int> primes;
    if (pe > 1) primes.insert(from_u64(p));
    for (unsigned j = 1; j <= k; ++j) {
        auto f = nt::factor(pow_int(from_u64(p), j) - 1);
        if (!f.complete()) fail(ErrorKind::internal, "could not factor p^" + std::to_string(j) + " - 1");
        for (auto& [q, e] : f.primes) primes.insert(q);
    }
    if (apply_power(s, state, bound, p) != state) fail(ErrorKind::internal, "companion matrix order bound failed");
    Int t = bound;
    for (const Int& q : primes) {
        while (mpz_divisible_p(t.get_mpz_t(), q.get_mpz_t())) {
            Int smaller = t / q;
            if (apply_power(s, state, smaller, p) != state) break;
            t = smaller;
        }
    }
    LrsPeriod out;
    out.period = t;
    if (t <= 10'000'000) {
        const u64 tt = t.get_ui();
        std::vector<std::uint32_t> seq;
        if (p < (u64{1} << 32)) {
            seq.reserve(2 * tt + k);
            std::vector<u64> u(state);
            auto comp = companion_mod(s, p);
            for (std::size_t n = 0; n < 2 * tt + k; ++n) {
                if (n >= k) {
                    u64 next = 0;
                    for (std::size_t i = 0; i < k; ++i)
                        next = mod::add(next, mod::mul(comp[(k - 1) * k + i], u[n - k + i], p), p);
                    u.push_back(next);
                }
                seq.push_back(static_cast<std::uint32_t>(u[n]));
            }
            out.window_verified = simd::first_shift_mismatch(seq, 0, tt + k, tt) == tt + k;
            if (!out.window_verified) fail(ErrorKind::internal, "period failed the window check");
        }
    }
    return out;
}

SquarePeriod square_sampled_period(const LrsSpec& s, u64 p, u64 table_cap) {
    require(p < (u64{1} << 32), "square-sampled period needs p < 2^32");
    auto base = lrs_period_mod_p(s, p);
    if (base.period > table_cap)
        fail(ErrorKind::unconfirmed, "base period " + to_dec(base.period) + " exceeds the table cap");
    SquarePeriod out;
    const u64 pi = base.period.get_ui();
    out.base_period = pi;
    // One full period of u mod p, then v_n = u_{n^2} for n = 1..2*pi.
    std::vector<u64> table;
    {
        const std::size_t k = s.order();
        table.reserve(std::max<u64>(pi, k));
        for (std::size_t i = 0; i < k; ++i) table.push_back(mod_u64(s.initial[i], p));
        auto comp = companion_mod(s, p);
        while (table.size() < pi) {
            const std::size_t n = table.size();
            u64 next = 0;
            for (std::size_t i = 0; i < k; ++i)
                next = mod::add(next, mod::mul(comp[(k - 1) * k + i], table[n - k + i], p), p);
            table.push_back(next);
        }
    }
    std::vector<std::uint32_t> v(2 * pi);
    for (u64 n = 1; n <= 2 * pi; ++n) {
        const u64 idx = static_cast<u64>((static_cast<unsigned __int128>(n) * n - 1) % pi);
        v[n - 1] = static_cast<std::uint32_t>(table[idx]);
    }
    u64 t = pi;
    for (auto [q, e] : nt::factor_u64(pi)) {
        while (t % q == 0 && simd::first_shift_mismatch(v, 0, pi, t / q) == pi) t /= q;
    }
    out.period = t;
    out.window_end = pi;
    return out;
}

}  // namespace edslrs::lrs
