#pragma once

#include "edslrs/elliptic.hpp"
#include "edslrs/lrs.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace edslrs::refute {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kSignConvention = "z_n is compared with +u_{n^2} and -u_{n^2} mod p; either counts as agreement";

struct Window {
    std::uint64_t value = 0;
    /// Verified index range [1, end].
    std::uint64_t end = 0;
};

struct WitnessCertificate {
    ec::CurveQ curve{0, 1};
    ec::PointQ point;
    lrs::LrsSpec spec;
    std::uint64_t q = 0;
    std::uint64_t a = 3;
    std::uint64_t p = 0;
    std::int64_t ap = 0;
    std::uint64_t group_order = 0;
    std::uint64_t ord_p = 0;
    Window tz;
    Window tu;
    bool q_divides_tz = false;
    bool q_divides_tu = false;
    std::vector<std::uint64_t> mismatch_indices;
};

nlohmann::json to_json(const WitnessCertificate& c);
WitnessCertificate certificate_from_json(const nlohmann::json& j);

struct WitnessOptions {
    std::uint64_t a = 3;
    std::vector<std::uint64_t> exclude;
    unsigned jobs = 1;
    /// Mismatch indices to collect (searched over n = 1..mismatch_window).
    std::size_t mismatch_count = 16;
    std::uint64_t mismatch_window = 4096;
    std::uint64_t horizon_cap = std::uint64_t{1} << 24;
};

/// Per-condition counts over every prime up to the winner (or p_max).
struct ScanStats {
    std::uint64_t primes_seen = 0;
    std::uint64_t wrong_residue = 0;
    std::uint64_t bad_prime = 0;
    std::uint64_t excluded = 0;
    std::uint64_t trace_mismatch = 0;
    std::uint64_t order_not_divisible = 0;
    std::uint64_t period_unconfirmed = 0;
    std::uint64_t q_divides_tu = 0;
    std::uint64_t too_few_mismatches = 0;

    std::map<std::string, std::uint64_t> as_map() const;
};

struct WitnessResult {
    std::optional<WitnessCertificate> certificate;
    ScanStats stats;
    std::uint64_t p_max = 0;
};

/// Smallest prime q > k with q not dividing c_k * disc and (a-1)^j != 1 mod q for j <= k.
std::uint64_t default_q(const ec::CurveQ& e, const lrs::LrsSpec& spec, std::uint64_t a = 3);

/// Scan p = a-1 (mod q) upward for a_p = a (mod q) and q | ord(P mod p); certify the first hit.
WitnessResult find_witness(const ec::CurveQ& e, const ec::PointQ& pt, const lrs::LrsSpec& spec, std::uint64_t q,
                           std::uint64_t p_max, const WitnessOptions& opt = {});

struct FieldCheck {
    std::string field;
    bool ok = true;
    std::string detail;
};

struct VerifyResult {
    bool pass = true;
    std::vector<FieldCheck> checks;
    std::vector<std::string> failed_fields() const;
};

/// Recomputes every certified fact from the certificate alone.
VerifyResult verify_certificate(const WitnessCertificate& c);

/// z_n mod p up to sign for n in [begin, begin + count) versus v (already reduced), returning disagreeing n.
std::vector<std::uint64_t> falsify_streams(const std::vector<std::uint64_t>& z, const std::vector<std::uint64_t>& v,
                                           std::uint64_t p, std::uint64_t begin);

/// n in [n_claim, n_claim + window) with z_n != +-u_{n^2} (mod p).
std::vector<std::uint64_t> direct_falsify(const ec::CurveQ& e, const ec::PointQ& pt, const lrs::LrsSpec& spec,
                                          std::uint64_t n_claim, std::uint64_t p, std::uint64_t window);

}  // namespace edslrs::refute
