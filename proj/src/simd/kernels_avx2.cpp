// Compiled with -mavx2; only reached through the runtime dispatcher.
#include "edslrs/simd.hpp"

#include <immintrin.h>

namespace edslrs::simd::avx2 {

namespace {

/// (a + b) mod p for lanes already in [0, p), p < 2^31.
inline __m256i add_mod(__m256i a, __m256i b, __m256i p) {
    __m256i s = _mm256_add_epi32(a, b);
    return _mm256_min_epu32(s, _mm256_sub_epi32(s, p));
}

inline std::uint32_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint32_t>(a % p * (b % p) % p);
}

inline std::int64_t hsum_epi32(__m256i v) {
    alignas(32) std::int32_t lanes[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
    std::int64_t s = 0;
    for (int i = 0; i < 8; ++i) s += lanes[i];
    return s;
}

}  // namespace

std::int64_t cubic_character_sum(const CharTable& table, std::uint32_t a, std::uint32_t b) {
    const std::uint64_t p = table.p;
    const std::uint64_t blocks = p / 8;
    std::int64_t total = 0;
    if (blocks > 0) {
        // Per lane x = x0 + i: f(x) = x^3 + a x + b advanced by 8 using finite differences
        //   d1 = f(x+8) - f(x) = 24x^2 + 192x + 512 + 8a
        //   d2 = d1(x+8) - d1(x) = 384x + 3072,  d3 = 3072
        alignas(32) std::uint32_t f0[8], d10[8], d20[8];
        for (std::uint64_t i = 0; i < 8; ++i) {
            std::uint64_t x = i;
            f0[i] = static_cast<std::uint32_t>((mulmod(mulmod(x, x, p), x, p) + mulmod(a, x, p) + b) % p);
            d10[i] = static_cast<std::uint32_t>((mulmod(24, mulmod(x, x, p), p) + mulmod(192, x, p) + 512 % p +
                                                 mulmod(8, a, p)) % p);
            d20[i] = static_cast<std::uint32_t>((mulmod(384, x, p) + 3072 % p) % p);
        }
        const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
        const __m256i d3 = _mm256_set1_epi32(static_cast<int>(3072 % p));
        __m256i f = _mm256_load_si256(reinterpret_cast<const __m256i*>(f0));
        __m256i d1 = _mm256_load_si256(reinterpret_cast<const __m256i*>(d10));
        __m256i d2 = _mm256_load_si256(reinterpret_cast<const __m256i*>(d20));
        __m256i acc = _mm256_setzero_si256();
        const int* chi = table.chi.data();
        for (std::uint64_t blk = 0; blk < blocks; ++blk) {
            acc = _mm256_add_epi32(acc, _mm256_i32gather_epi32(chi, f, 4));
            f = add_mod(f, d1, vp);
            d1 = add_mod(d1, d2, vp);
            d2 = add_mod(d2, d3, vp);
        }
        total = hsum_epi32(acc);
    }
    for (std::uint64_t x = blocks * 8; x < p; ++x) {
        std::uint64_t v = (mulmod(mulmod(x, x, p), x, p) + mulmod(a, x, p) + b) % p;
        total += table.chi[v];
    }
    return total;
}

std::uint64_t count_square_shift_residues(const CharTable& table, std::uint32_t c, unsigned t) {
    const std::uint64_t r = table.p;
    const std::uint64_t blocks = r / 8;
    std::uint64_t count = 0;
    if (blocks > 0) {
        // g(n) = n^2: g(n+8) - g(n) = 16n + 64, second difference 128
        alignas(32) std::uint32_t g0[8], d10[8];
        for (std::uint64_t i = 0; i < 8; ++i) {
            g0[i] = mulmod(i, i, r);
            d10[i] = static_cast<std::uint32_t>((16 * i + 64) % r);
        }
        const __m256i vr = _mm256_set1_epi32(static_cast<int>(r));
        const __m256i d2 = _mm256_set1_epi32(static_cast<int>(128 % r));
        const __m256i one = _mm256_set1_epi32(1);
        __m256i g = _mm256_load_si256(reinterpret_cast<const __m256i*>(g0));
        __m256i d1 = _mm256_load_si256(reinterpret_cast<const __m256i*>(d10));
        const int* chi = table.chi.data();
        std::vector<std::uint32_t> shifts;
        shifts.reserve(t);
        for (unsigned j = 1; j <= t; ++j) shifts.push_back(static_cast<std::uint32_t>(std::uint64_t{j} * c % r));
        for (std::uint64_t blk = 0; blk < blocks; ++blk) {
            __m256i ok = _mm256_set1_epi32(-1);
            for (std::uint32_t s : shifts) {
                __m256i v = add_mod(g, _mm256_set1_epi32(static_cast<int>(s)), vr);
                __m256i ch = _mm256_i32gather_epi32(chi, v, 4);
                ok = _mm256_and_si256(ok, _mm256_cmpeq_epi32(ch, one));
            }
            count += static_cast<std::uint64_t>(
                __builtin_popcount(static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(ok)))));
            g = add_mod(g, d1, vr);
            d1 = add_mod(d1, d2, vr);
        }
    }
    for (std::uint64_t n = blocks * 8; n < r; ++n) {
        const std::uint64_t sq = n * n % r;
        bool ok = true;
        for (unsigned j = 1; j <= t && ok; ++j) ok = table.chi[(sq + j * std::uint64_t{c}) % r] == 1;
        count += ok ? 1 : 0;
    }
    return count;
}

std::size_t first_shift_mismatch(const std::uint32_t* seq, std::size_t begin, std::size_t end, std::size_t shift) {
    std::size_t n = begin;
    for (; n + 8 <= end; n += 8) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(seq + n));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(seq + n + shift));
        unsigned eq = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(a, b))));
        if (eq != 0xFFu) return n + static_cast<std::size_t>(__builtin_ctz(~eq & 0xFFu));
    }
    for (; n < end; ++n) {
        if (seq[n + shift] != seq[n]) return n;
    }
    return end;
}

}  // namespace edslrs::simd::avx2
