#include "edslrs/simd.hpp"

#include "edslrs/error.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace edslrs::simd {

namespace {

Isa detect() noexcept {
    if (const char* env = std::getenv("EDSLRS_SIMD"); env && std::strcmp(env, "scalar") == 0) return Isa::scalar;
    return avx2_supported() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() {
    static std::atomic<Isa> isa{detect()};
    return isa;
}

}  // namespace

const char* to_string(Isa isa) noexcept { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool avx2_supported() noexcept {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) noexcept {
    if (isa == Isa::avx2 && !avx2_supported()) isa = Isa::scalar;
    current().store(isa, std::memory_order_relaxed);
}

CharTable build_char_table(std::uint32_t p) {
    require(p >= 3 && (p & 1U) && p < (1U << 31), "build_char_table: p must be an odd prime below 2^31");
    CharTable t;
    t.p = p;
    t.chi.assign(p, -1);
    t.chi[0] = 0;
    for (std::uint64_t y = 1; y <= (p - 1) / 2; ++y) t.chi[y * y % p] = 1;
    return t;
}

std::int64_t cubic_character_sum(const CharTable& table, std::uint32_t a, std::uint32_t b) {
#if defined(__x86_64__)
    if (active_isa() == Isa::avx2) return avx2::cubic_character_sum(table, a, b);
#endif
    return scalar::cubic_character_sum(table, a, b);
}

std::uint64_t count_square_shift_residues(const CharTable& table, std::uint32_t c, unsigned t) {
#if defined(__x86_64__)
    if (active_isa() == Isa::avx2) return avx2::count_square_shift_residues(table, c, t);
#endif
    return scalar::count_square_shift_residues(table, c, t);
}

std::size_t first_shift_mismatch(const std::vector<std::uint32_t>& seq, std::size_t begin, std::size_t end,
                                 std::size_t shift) {
    require(end + shift <= seq.size() && begin <= end, "first_shift_mismatch: window out of range");
#if defined(__x86_64__)
    if (active_isa() == Isa::avx2) return avx2::first_shift_mismatch(seq.data(), begin, end, shift);
#endif
    return scalar::first_shift_mismatch(seq.data(), begin, end, shift);
}

}  // namespace edslrs::simd
