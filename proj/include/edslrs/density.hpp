#pragma once

#include "edslrs/bigint.hpp"
#include "edslrs/elliptic.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace edslrs::density {

struct Empirical {
    std::uint64_t x = 0;
    std::uint64_t hits = 0;
    std::uint64_t scanned = 0;
    /// Matching primes, ascending.
    std::vector<std::uint64_t> primes;
    bool small_sample = false;
};

enum class Kind { gl2, affine };

struct DensityReport {
    Kind kind = Kind::gl2;
    std::uint64_t q = 0, a = 0, b = 0;
    Int numerator{0};
    Int denominator{1};
    /// numerator / denominator in lowest terms
    Rat delta{0};
    std::optional<Empirical> empirical;
};

/// (q^2 - 1)(q^2 - q)
std::uint64_t gl2_order(std::uint64_t q);

/// counts[a * q + b]: matrices in GL2(F_q) with trace a and determinant b.
std::vector<std::uint64_t> gl2_histogram(std::uint64_t q, unsigned jobs = 1);
/// counts[a * q + b]: pairs (J, u) with tr J = a, det J = b, u outside Im(J - I).
std::vector<std::uint64_t> affine_histogram(std::uint64_t q, unsigned jobs = 1);

DensityReport count_gl2(std::uint64_t q, std::uint64_t a, std::uint64_t b, std::uint64_t cap = 31, unsigned jobs = 1);
DensityReport count_affine(std::uint64_t q, std::uint64_t a, std::uint64_t b, std::uint64_t cap = 13,
                           unsigned jobs = 1);

/// The explicit pair J = [[a-1, -1], [0, 1]], u = (1, 1): trace a, det a-1, u outside Im(J - I).
struct WitnessPair {
    std::uint64_t j[2][2];
    std::uint64_t u[2];
};
WitnessPair affine_witness(std::uint64_t q, std::uint64_t a);
bool witness_is_counted(std::uint64_t q, const WitnessPair& w);

struct ScanOptions {
    std::vector<std::uint64_t> exclude;
    unsigned jobs = 1;
    std::uint64_t affine_cap = 61;
};

/// Frequency of primes p <= x with p = a-1 (mod q), a_p = a (mod q) and q | ord(P mod p),
/// next to the exact affine density.
DensityReport empirical_density(const ec::CurveQ& e, const ec::PointQ& p, std::uint64_t q, std::uint64_t a,
                                std::uint64_t x, const ScanOptions& opt = {});

nlohmann::json to_json(const DensityReport& r);
DensityReport from_json(const nlohmann::json& j);

}  // namespace edslrs::density
