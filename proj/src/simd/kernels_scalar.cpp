#include "edslrs/simd.hpp"

namespace edslrs::simd::scalar {

std::int64_t cubic_character_sum(const CharTable& table, std::uint32_t a, std::uint32_t b) {
    const std::uint64_t p = table.p;
    std::int64_t sum = 0;
    for (std::uint64_t x = 0; x < p; ++x) {
        std::uint64_t v = (x * x % p * x + a * x + b) % p;
        sum += table.chi[v];
    }
    return sum;
}

std::uint64_t count_square_shift_residues(const CharTable& table, std::uint32_t c, unsigned t) {
    const std::uint64_t r = table.p;
    std::uint64_t count = 0;
    for (std::uint64_t n = 0; n < r; ++n) {
        const std::uint64_t sq = n * n % r;
        bool ok = true;
        for (unsigned j = 1; j <= t && ok; ++j) ok = table.chi[(sq + j * std::uint64_t{c}) % r] == 1;
        count += ok ? 1 : 0;
    }
    return count;
}

std::size_t first_shift_mismatch(const std::uint32_t* seq, std::size_t begin, std::size_t end, std::size_t shift) {
    for (std::size_t n = begin; n < end; ++n) {
        if (seq[n + shift] != seq[n]) return n;
    }
    return end;
}

}  // namespace edslrs::simd::scalar
