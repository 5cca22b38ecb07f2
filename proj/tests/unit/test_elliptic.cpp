#include <doctest.h>

#include "edslrs/elliptic.hpp"
#include "edslrs/error.hpp"
#include "edslrs/factor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

using namespace edslrs;
using namespace edslrs::ec;

namespace {

// Brute-force #E(F_p) over all (x, y) pairs.
std::uint64_t brute_count(const CurveFp& e) {
    std::uint64_t n = 1;
    for (std::uint64_t x = 0; x < e.p; ++x)
        for (std::uint64_t y = 0; y < e.p; ++y)
            if ((y * y) % e.p == (x * x % e.p * x + e.a * x + e.b) % e.p) ++n;
    return n;
}

}  // namespace

TEST_SUITE("elliptic") {

TEST_CASE("construction validates curve and point") {
    CHECK_THROWS_AS(CurveQ(0, 0), Error);
    CHECK_THROWS_AS(CurveQ(-3, 2), Error);
    CurveQ e(0, 3);
    CHECK(e.disc() == 243);
    CHECK_THROWS_AS(make_point(e, 1, 3, 1), Error);
    auto p = make_point(e, 1, 2, -1);  // z sign and scale are normalised away
    CHECK(p.z == 1);
    CHECK(p.y == -2);
    CHECK(make_point(e, 4, -16, 2) == p);
}

TEST_CASE("group law examples") {
    CurveQ e(0, 3);
    auto p = make_point(e, 1, 2, 1);
    CHECK(add(p, PointQ::at_infinity(), e) == p);
    CHECK(add(p, negate(p), e).infinity);
    auto d = add(p, p, e);
    CHECK(d.x == -23);
    CHECK(d.y == -11);
    CHECK(d.z == 4);
    CHECK(scalar_mul(2, p, e) == d);
    CHECK(scalar_mul(1, p, e) == p);
    PointQ acc = PointQ::at_infinity();
    for (int n = 1; n <= 6; ++n) {
        acc = add(acc, p, e);
        CHECK(scalar_mul(n, p, e) == acc);
        CHECK(on_curve(e, acc));
    }
    CHECK(scalar_mul(-3, p, e) == negate(scalar_mul(3, p, e)));
}

TEST_CASE("group axioms on small multiples") {
    for (auto [a, b, x, y] : {std::tuple{0, 3, 1, 2}, std::tuple{2, 1, 1, 2}, std::tuple{-2, 5, 1, 2}}) {
        CurveQ e(a, b);
        auto p = make_point(e, x, y, 1);
        std::vector<PointQ> pts;
        for (int n = -3; n <= 3; ++n) pts.push_back(scalar_mul(n, p, e));
        for (auto& s : pts) {
            if (!s.infinity) CHECK(make_point(e, s.x, s.y, s.z) == s);
            for (auto& t : pts) {
                CHECK(add(s, t, e) == add(t, s, e));
                for (auto& u : pts) CHECK(add(add(s, t, e), u, e) == add(s, add(t, u, e), e));
            }
        }
    }
}

TEST_CASE("torsion detection") {
    CurveQ e(0, 3);
    CHECK(is_torsion(PointQ::at_infinity(), e).order == 1);
    CHECK_FALSE(is_torsion(make_point(e, 1, 2, 1), e).torsion);
    CurveQ f(-1, 0);  // (0,0) has order 2
    auto t = is_torsion(make_point(f, 0, 0, 1), f);
    CHECK(t.torsion);
    CHECK(t.order == 2);
    CurveQ g(0, 1);  // (2,3) has order 6 on y^2 = x^3 + 1
    CHECK(is_torsion(make_point(g, 2, 3, 1), g).order == 6);
    CHECK_THROWS_AS(canonical_height_estimate(make_point(g, 2, 3, 1), g, 8), Error);
}

TEST_CASE("point counting against brute force, Hasse window") {
    CurveQ e(0, 3);
    auto c5 = count_points(reduce(e, 5));
    CHECK(c5.order == 6);
    CHECK(c5.ap == 0);
    CHECK(count_points(reduce(e, 3)).bad_reduction);
    auto pt = make_point(e, 1, 2, 1);
    for (std::uint32_t p : nt::primes_up_to(200)) {
        auto ef = reduce(e, p);
        auto c = count_points(ef);
        CHECK(c.order == brute_count(ef));
        CHECK(c.order == p + 1 - c.ap);
        if (!ef.good_reduction) continue;
        CHECK(double(c.ap) * c.ap < 4.0 * p);
        auto q = reduce(pt, ef);
        auto ord = point_order_fp(q, ef);
        CHECK(c.order % ord == 0);
        CHECK(scalar_mul(ord, q, ef).infinity);
        for (auto [ell, m] : nt::factor_u64(ord)) CHECK_FALSE(scalar_mul(ord / ell, q, ef).infinity);
        auto q2 = reduce(scalar_mul(2, pt, e), ef);
        CHECK(point_order_fp(q2, ef) == ord / std::gcd<std::uint64_t>(2, ord));
    }
    CHECK_THROWS_AS(point_order_fp(PointFp::at_infinity(), reduce(e, 3)), Error);
}

TEST_CASE("reduction commutes with multiplication") {
    CurveQ e(2, 1);
    auto pt = make_point(e, 1, 2, 1);
    std::vector<PointQ> mult{PointQ::at_infinity()};
    for (int n = 1; n <= 50; ++n) mult.push_back(add(mult.back(), pt, e));
    for (std::uint32_t p : nt::primes_up_to(100)) {
        auto ef = reduce(e, p);
        if (!ef.good_reduction) continue;
        auto q = reduce(pt, ef);
        for (int n = 1; n <= 50; ++n) CHECK(reduce(mult[n], ef) == scalar_mul(n, q, ef));
    }
}

TEST_CASE("height estimate and singular reduction") {
    CurveQ e(0, 3);
    auto pt = make_point(e, 1, 2, 1);
    auto h = canonical_height_estimate(pt, e, 24);
    CHECK(h.last > 0);
    CHECK(h.convergence_gap < 0.1);
    CHECK(singular_reduction_primes(e, pt).empty());
    CurveQ f(2, 1);
    CHECK(singular_reduction_primes(f, make_point(f, 1, 2, 1)).empty());
    CurveQ g(-3, 3);  // (1, 1) lies on it and x = A mod 2
    auto bad = singular_reduction_primes(g, make_point(g, 1, 1, 1));
    CHECK(std::find(bad.begin(), bad.end(), Int(2)) != bad.end());  // x = 1 = A mod 2
}

TEST_CASE("text ingestion") {
    std::istringstream in("# fixture\ncurve 0 3\npoint 1 2 1\n");
    auto r = read_curve_point(in);
    REQUIRE(r.curve);
    REQUIRE(r.point);
    CHECK(r.point->x == 1);
    std::istringstream bad("curve 0 3\npoint 1 3 1\n");
    CHECK_THROWS_AS(read_curve_point(bad), Error);
    std::istringstream junk("curve x 3\n");
    CHECK_THROWS_AS(read_curve_point(junk), Error);
}

}  // TEST_SUITE
