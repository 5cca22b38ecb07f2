#include <doctest.h>

#include "edslrs/density.hpp"
#include "edslrs/error.hpp"

using namespace edslrs;
using u64 = std::uint64_t;

namespace {

// Cell size from the number of roots of x^2 - a x + b in F_q.
u64 conjugacy_formula(u64 q, u64 a, u64 b) {
    int roots = 0;
    for (u64 r = 0; r < q; ++r) roots += (r * r + q * q - a * r % q + b) % q == 0;
    return roots == 2 ? q * q + q : roots == 1 ? q * q : q * q - q;
}

// Affine count via ranks: each J contributes q^2 - q^{rank(J - I)}.
u64 affine_by_rank(u64 q, u64 a, u64 b) {
    u64 total = 0;
    for (u64 w = 0; w < q; ++w)
        for (u64 x = 0; x < q; ++x)
            for (u64 y = 0; y < q; ++y)
                for (u64 z = 0; z < q; ++z) {
                    if ((w + z) % q != a || (w * z + q * q - x * y % q) % q != b) continue;
                    u64 m00 = (w + q - 1) % q, m11 = (z + q - 1) % q;
                    int rank = (m00 | x | y | m11) == 0 ? 0 : ((m00 * m11 + q * q - x * y % q) % q ? 2 : 1);
                    u64 img = rank == 0 ? 1 : rank == 1 ? q : q * q;
                    total += q * q - img;
                }
    return total;
}

}  // namespace

TEST_SUITE("galois_density") {

TEST_CASE("GL2 counts") {
    CHECK(density::gl2_order(3) == 48);
    auto r = density::count_gl2(3, 0, 2);
    CHECK(r.numerator == 12);
    CHECK(r.delta == Rat(1, 4));
    CHECK_THROWS_AS(density::count_gl2(3, 0, 0), Error);
    CHECK_THROWS_AS(density::count_gl2(37, 0, 1), Error);
    CHECK_THROWS_AS(density::count_gl2(9, 0, 1), Error);
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL}) {
        auto h = density::gl2_histogram(q, 2);
        u64 total = 0;
        for (u64 a = 0; a < q; ++a)
            for (u64 b = 0; b < q; ++b) {
                total += h[a * q + b];
                if (b == 0) continue;
                CHECK(h[a * q + b] == conjugacy_formula(q, a, b));
                CHECK(density::count_gl2(q, a, b).numerator == from_u64(h[a * q + b]));
            }
        CHECK(total == density::gl2_order(q));
    }
}

TEST_CASE("affine counts and the explicit witness") {
    for (u64 q : {2ULL, 3ULL, 5ULL}) {
        auto h = density::affine_histogram(q, 3);
        for (u64 a = 0; a < q; ++a)
            for (u64 b = 1; b < q; ++b) {
                CHECK(h[a * q + b] == affine_by_rank(q, a, b));
                CHECK(density::count_affine(q, a, b).numerator == from_u64(h[a * q + b]));
            }
    }
    auto w = density::affine_witness(5, 3);
    CHECK(w.j[0][0] == 2);
    CHECK(density::witness_is_counted(5, w));
    // Im(J - I) = {(x, 0)} for the witness, so (1, 1) is outside.
    CHECK(w.j[1][0] == 0);
    CHECK(w.j[1][1] == 1);
    auto r = density::count_affine(5, 3, 2);
    CHECK(r.numerator > 0);
    CHECK(r.denominator == 480 * 25);
}

TEST_CASE("empirical scan") {
    ec::CurveQ e(2, 1);
    auto pt = ec::make_point(e, 1, 2, 1);
    density::ScanOptions opt;
    opt.jobs = 2;
    auto r = density::empirical_density(e, pt, 3, 0, 20000, opt);
    REQUIRE(r.empirical);
    CHECK(r.empirical->hits > 30);
    for (u64 p : r.empirical->primes) {
        auto ef = ec::reduce(e, p);
        auto c = ec::count_points(ef);
        CHECK(p % 3 == 2);
        CHECK(((c.ap % 3) + 3) % 3 == 0);
        CHECK(c.order % 3 == 0);
        CHECK(ec::point_order_fp(ec::reduce(pt, ef), ef) % 3 == 0);
    }
    opt.jobs = 1;
    auto again = density::empirical_density(e, pt, 3, 0, 20000, opt);
    CHECK(again.empirical->primes == r.empirical->primes);
    auto j = density::to_json(r);
    auto back = density::from_json(j);
    CHECK(density::to_json(back) == j);
    CHECK(j["delta_num"].is_string());
}

}  // TEST_SUITE
