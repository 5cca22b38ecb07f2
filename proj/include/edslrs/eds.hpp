#pragma once

#include "edslrs/bigint.hpp"
#include "edslrs/elliptic.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace edslrs::eds {

struct WardSeed {
    Int w1, w2, w3, w4;
};

/// Checks w1 w2 w3 != 0 and w2 | w4.
void validate_seed(const WardSeed& seed);

/// Homogenised division values W1..W4 of a point; they seed a Ward sequence with W_n = +-z_n
/// whenever the point is nonsingular modulo every prime.
WardSeed ward_seed_from_point(const ec::CurveQ& e, const ec::PointQ& p);

enum class Source { geometric, ward };

struct EdsSequence {
    Source source = Source::geometric;
    std::optional<ec::CurveQ> curve;
    std::optional<ec::PointQ> point;
    std::optional<WardSeed> seed;
    /// terms[i] = z_{i+1}
    std::vector<Int> terms;
    /// Ward only: first index with w_n = 0 (0 when none).
    std::size_t first_zero = 0;

    const Int& at(std::size_t n) const { return terms.at(n - 1); }
    std::size_t size() const { return terms.size(); }
};

EdsSequence generate_geometric(const ec::CurveQ& e, const ec::PointQ& p, std::size_t n);
EdsSequence generate_ward(const WardSeed& seed, std::size_t n);

struct PrimitiveReport {
    std::size_t n = 0;
    /// Primitive primes that were identified.
    std::vector<Int> primes;
    /// z_n has a prime factor dividing no earlier term (decided even when factoring is incomplete).
    bool has_primitive = false;
    /// An unfactored cofactor of the primitive part remains.
    bool incomplete = false;
    bool zero_term = false;
};

struct PrimitiveScan {
    std::vector<PrimitiveReport> rows;
    /// Indices without a primitive divisor.
    std::vector<std::size_t> lacking;
    Int largest_prime{1};
};

PrimitiveScan primitive_divisor_scan(const EdsSequence& seq, std::uint64_t rho_budget = 2'000'000);

// ---- residues modulo p ---------------------------------------------------------------

/// Smallest m in [1, 12] such that mP is nonsingular modulo every prime, or 0.
unsigned suggest_stride(const ec::CurveQ& e, const ec::PointQ& p);

/// W_n mod p for n = 1..count, with |W_n| = z_n. Division-free (division polynomials at P,
/// homogenised by z^{n^2}). Throws bad_reduction when P is singular modulo some prime.
std::vector<std::uint64_t> geometric_mod_p(const ec::CurveQ& e, const ec::PointQ& p, std::uint64_t prime,
                                           std::size_t count);

/// Ward sequence modulo p; needs p not dividing w1 w2.
std::vector<std::uint64_t> ward_mod_p(const WardSeed& seed, std::uint64_t prime, std::size_t count);

enum class PeriodStatus { confirmed, unconfirmed };

struct PeriodReport {
    std::uint64_t p = 0;
    PeriodStatus status = PeriodStatus::unconfirmed;
    /// Minimal T with z_{n+T} = +-z_n (mod p) on the window.
    std::uint64_t period = 0;
    /// Minimal T with W_{n+T} = W_n (mod p); 0 if not confirmed within the horizon.
    std::uint64_t signed_period = 0;
    /// Verified window [1, window_end] for the sign-free period.
    std::uint64_t window_end = 0;
    std::uint64_t horizon = 0;
    /// Smallest n with p | z_n (0 if none seen).
    std::uint64_t rank = 0;
    // Geometric sources only.
    std::uint64_t group_order = 0;
    std::int64_t ap = 0;
    std::uint64_t point_order = 0;
    bool divides_2_pm2_order = false;
    bool divides_pm1_order = false;
};

const char* to_string(PeriodStatus s);

struct PeriodOptions {
    /// Fixed horizon; 0 grows the horizon adaptively up to horizon_cap.
    std::uint64_t horizon = 0;
    std::uint64_t horizon_cap = std::uint64_t{1} << 24;
};

/// Period search on a precomputed residue stream (values[i] = w_{i+1} mod p).
PeriodReport stream_period(const std::vector<std::uint64_t>& values, std::uint64_t p);

PeriodReport eds_period_mod_p(const ec::CurveQ& e, const ec::PointQ& pt, std::uint64_t p, PeriodOptions opt = {});
PeriodReport eds_period_mod_p(const WardSeed& seed, std::uint64_t p, PeriodOptions opt = {});

// ---- Ward consistency ---------------------------------------------------------------

struct WardConsistency {
    unsigned stride = 1;
    WardSeed seed;
    bool matches_up_to_sign = false;
    /// +1 / -1 per index, 0 where the magnitudes differ.
    std::vector<int> signs;
};

/// Compare z_{stride*n} with the Ward sequence seeded from stride*P, n = 1..count.
WardConsistency ward_consistency(const ec::CurveQ& e, const ec::PointQ& p, unsigned stride, std::size_t count);

// ---- sequence cache -----------------------------------------------------------------

class SequenceCache {
  public:
    explicit SequenceCache(std::filesystem::path root);

    /// Directory from EDSLRS_CACHE_DIR, else ~/.cache/edslrs.
    static std::filesystem::path default_root();
    static std::string key(const ec::CurveQ& e, const ec::PointQ& p);

    std::filesystem::path path_for(const ec::CurveQ& e, const ec::PointQ& p) const;
    /// Cached prefix of length >= n, revalidated at its first and last term; nullopt on miss or corruption.
    std::optional<std::vector<Int>> load(const ec::CurveQ& e, const ec::PointQ& p, std::size_t n) const;
    void store(const ec::CurveQ& e, const ec::PointQ& p, const std::vector<Int>& terms) const;

  private:
    std::filesystem::path root_;
};

/// generate_geometric through the cache; `hit` reports whether the cache served the request.
EdsSequence generate_geometric_cached(const ec::CurveQ& e, const ec::PointQ& p, std::size_t n,
                                      const SequenceCache& cache, bool* hit = nullptr);

}  // namespace edslrs::eds
