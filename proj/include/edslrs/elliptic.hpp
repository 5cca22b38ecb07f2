#pragma once

#include "edslrs/bigint.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace edslrs::ec {

/// y^2 = x^3 + A x + B over Q with A, B integers and 4A^3 + 27B^2 != 0.
class CurveQ {
  public:
    CurveQ(Int a, Int b);

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    /// 4A^3 + 27B^2
    const Int& disc() const { return disc_; }

    std::string to_string() const;

  private:
    Int a_, b_, disc_;
};

/// Affine point (x/z^2, y/z^3) with gcd(x, y, z) = 1 and z > 0, or the point at infinity.
struct PointQ {
    bool infinity = true;
    Int x{0}, y{1}, z{0};

    static PointQ at_infinity() { return {}; }
    bool operator==(const PointQ& o) const {
        return infinity == o.infinity && (infinity || (x == o.x && y == o.y && z == o.z));
    }
    std::string to_string() const;
};

/// Validate and normalise (x, y, z) as the point (x/z^2, y/z^3) on E. z may be any non-zero integer.
PointQ make_point(const CurveQ& e, const Int& x, const Int& y, const Int& z);
/// Point with affine coordinates (X, Y); throws if it is not on E.
PointQ from_affine(const CurveQ& e, const Rat& X, const Rat& Y);
bool on_curve(const CurveQ& e, const PointQ& p);

PointQ negate(const PointQ& p);
PointQ add(const PointQ& p, const PointQ& q, const CurveQ& e);
PointQ scalar_mul(const Int& n, const PointQ& p, const CurveQ& e);

struct TorsionInfo {
    bool torsion = false;
    unsigned order = 0;
};

/// Checks nP = O for n <= 16.
TorsionInfo is_torsion(const PointQ& p, const CurveQ& e);

/// Primes at which P reduces to a singular point of the model y^2 = x^3 + A x + B.
std::vector<Int> singular_reduction_primes(const CurveQ& e, const PointQ& p);

struct HeightEstimate {
    /// c_n = log z_n / n^2 for n = 1..n_max
    std::vector<double> estimates;
    double last = 0;
    /// |c_{n_max} - c_{n_max/2}|
    double convergence_gap = 0;
};

HeightEstimate canonical_height_estimate(const PointQ& p, const CurveQ& e, unsigned n_max);

// ---- reduction modulo p ------------------------------------------------------------

struct CurveFp {
    std::uint64_t p = 0;
    std::uint64_t a = 0, b = 0;
    /// p does not divide 4A^3 + 27B^2 (and p is odd).
    bool good_reduction = false;
};

CurveFp reduce(const CurveQ& e, std::uint64_t p);

struct PointFp {
    bool infinity = true;
    std::uint64_t x = 0, y = 0;

    static PointFp at_infinity() { return {}; }
    bool operator==(const PointFp& o) const {
        return infinity == o.infinity && (infinity || (x == o.x && y == o.y));
    }
};

PointFp reduce(const PointQ& pt, const CurveFp& e);
bool on_curve(const CurveFp& e, const PointFp& p);
PointFp negate(const PointFp& p, const CurveFp& e);
PointFp add(const PointFp& p, const PointFp& q, const CurveFp& e);
PointFp scalar_mul(std::uint64_t n, const PointFp& p, const CurveFp& e);

struct PointCount {
    std::uint64_t order = 0;
    std::int64_t ap = 0;
    bool bad_reduction = false;
};

/// #E(F_p) = p + 1 - a_p by summing quadratic characters of x^3 + a x + b.
PointCount count_points(const CurveFp& e);

/// Exact order of P in E(F_p). group_order may be supplied to avoid recounting.
std::uint64_t point_order_fp(const PointFp& p, const CurveFp& e, std::optional<std::uint64_t> group_order = {});

// ---- text ingestion ----------------------------------------------------------------

/// Parses lines `curve A B` and `point x y z` (blank lines and '#' comments ignored).
struct CurvePointInput {
    std::optional<CurveQ> curve;
    std::optional<PointQ> point;
};

CurvePointInput read_curve_point(std::istream& in);
CurveQ parse_curve(const std::string& a, const std::string& b);

}  // namespace edslrs::ec
