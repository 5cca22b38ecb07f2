#pragma once

// Data-parallel modular kernels. Each kernel has a scalar reference and an AVX2
// variant; the dispatcher picks AVX2 at runtime when the CPU supports it, unless
// EDSLRS_SIMD=scalar is set in the environment.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace edslrs::simd {

enum class Isa { scalar, avx2 };

const char* to_string(Isa isa) noexcept;
bool avx2_supported() noexcept;
Isa active_isa() noexcept;
/// Override the runtime choice (tests and benchmarks). Falls back to scalar when unsupported.
void force_isa(Isa isa) noexcept;

/// Quadratic character of every residue modulo an odd prime p < 2^31.
struct CharTable {
    std::uint32_t p = 0;
    std::vector<std::int32_t> chi;
};

CharTable build_char_table(std::uint32_t p);

/// sum_{x in F_p} chi(x^3 + a x + b), with a, b already reduced mod p.
std::int64_t cubic_character_sum(const CharTable& table, std::uint32_t a, std::uint32_t b);

/// #{ n in [0, r) : chi(n^2 + j c) = +1 for all 1 <= j <= t }, c reduced mod r.
std::uint64_t count_square_shift_residues(const CharTable& table, std::uint32_t c, unsigned t);

/// Smallest n in [begin, end) with seq[n + shift] != seq[n]; returns end when none.
/// Requires end + shift <= seq.size().
std::size_t first_shift_mismatch(const std::vector<std::uint32_t>& seq, std::size_t begin, std::size_t end,
                                 std::size_t shift);

namespace scalar {
std::int64_t cubic_character_sum(const CharTable& table, std::uint32_t a, std::uint32_t b);
std::uint64_t count_square_shift_residues(const CharTable& table, std::uint32_t c, unsigned t);
std::size_t first_shift_mismatch(const std::uint32_t* seq, std::size_t begin, std::size_t end, std::size_t shift);
}  // namespace scalar

namespace avx2 {
std::int64_t cubic_character_sum(const CharTable& table, std::uint32_t a, std::uint32_t b);
std::uint64_t count_square_shift_residues(const CharTable& table, std::uint32_t c, unsigned t);
std::size_t first_shift_mismatch(const std::uint32_t* seq, std::size_t begin, std::size_t end, std::size_t shift);
}  // namespace avx2

}  // namespace edslrs::simd
