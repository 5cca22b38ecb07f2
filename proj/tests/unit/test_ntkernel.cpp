#include <doctest.h>

#include "edslrs/error.hpp"
#include "edslrs/factor.hpp"
#include "edslrs/linalg.hpp"
#include "edslrs/ntkernel.hpp"
#include "edslrs/poly.hpp"

#include <random>

using namespace edslrs;

namespace {

// Brute-force oracle: every s in [0, r) with s^2 = a.
std::vector<long> roots_by_scan(long a, long r) {
    std::vector<long> out;
    for (long s = 0; s < r; ++s)
        if ((s * s - a) % r == 0) out.push_back(s);
    return out;
}

Poly random_poly(std::mt19937& rng, int max_deg) {
    std::uniform_int_distribution<int> deg(0, max_deg), c(-5, 5);
    std::vector<Rat> cs(deg(rng) + 1);
    for (auto& x : cs) {
        x = Rat(c(rng), 1 + std::abs(c(rng)));
        x.canonicalize();
    }
    return Poly(cs);
}

}  // namespace

TEST_SUITE("ntkernel") {

TEST_CASE("legendre symbol matches exhaustive squares") {
    CHECK(nt::legendre_symbol(2, 7) == 1);
    CHECK(nt::legendre_symbol(0, 7) == 0);
    CHECK(nt::legendre_symbol(2, 5) == -1);
    for (long r : {3L, 5L, 7L, 11L, 13L, 101L}) {
        for (long a = -r; a < 2 * r; ++a) {
            long am = ((a % r) + r) % r;
            int expect = am == 0 ? 0 : (roots_by_scan(am, r).empty() ? -1 : 1);
            CHECK(nt::legendre_symbol(a, r) == expect);
        }
    }
    CHECK_THROWS_AS(nt::legendre_symbol(2, 9), Error);
    CHECK_THROWS_AS(nt::legendre_symbol(2, 2), Error);
}

TEST_CASE("sqrt_mod_prime returns the canonical root") {
    CHECK(nt::sqrt_mod_prime(2, 7) == 3);
    CHECK(nt::sqrt_mod_prime(0, 7) == 0);
    CHECK(nt::sqrt_mod_prime(4, 11) == 2);
    CHECK_THROWS_AS(nt::sqrt_mod_prime(3, 7), Error);
    std::mt19937 rng(11);
    for (long r : {3L, 5L, 13L, 17L, 97L, 1009L, 65537L}) {
        for (int i = 0; i < 50; ++i) {
            long a = std::uniform_int_distribution<long>(0, r - 1)(rng);
            if (nt::legendre_symbol(a, r) == -1) continue;
            Int s = nt::sqrt_mod_prime(a, r);
            CHECK(mod_floor(s * s - a, r) == 0);
            CHECK(2 * s <= r);
        }
    }
}

TEST_CASE("hensel lifting") {
    CHECK(nt::hensel_lift_sqrt(2, 7, 2) == 10);
    CHECK(nt::hensel_lift_sqrt(4, 11, 1) == 2);
    CHECK_THROWS_AS(nt::hensel_lift_sqrt(7, 7, 2), Error);
    std::mt19937 rng(5);
    for (long r : {3L, 7L, 23L, 101L}) {
        for (int i = 0; i < 30; ++i) {
            long a = std::uniform_int_distribution<long>(1, r - 1)(rng);
            if (nt::legendre_symbol(a, r) != 1) continue;
            for (unsigned e = 1; e <= 6; ++e) {
                Int m = pow_int(r, e);
                Int s = nt::hensel_lift_sqrt(a, r, e);
                CHECK(mod_floor(s * s - a, m) == 0);
                if (e > 1) {
                    Int prev = nt::hensel_lift_sqrt(a, r, e - 1);
                    CHECK(mod_floor(s - prev, pow_int(r, e - 1)) == 0);
                }
            }
        }
    }
}

TEST_CASE("crt") {
    auto c = nt::crt_combine({{2, 3}, {3, 5}});
    CHECK(c.value == 8);
    CHECK(c.modulus == 15);
    CHECK(nt::crt_combine({{0, 9}}).value == 0);
    auto d = nt::crt_combine({{1, 2}, {1, 3}, {1, 5}});
    CHECK(d.value == 1);
    CHECK(d.modulus == 30);
    CHECK_THROWS_AS(nt::crt_combine({{1, 4}, {1, 6}}), Error);
    std::mt19937 rng(3);
    const long mods[] = {7, 9, 11, 13, 16, 25};
    for (int i = 0; i < 100; ++i) {
        std::vector<nt::Congruence> in;
        for (long m : mods) in.push_back({Int(std::uniform_int_distribution<long>(-50, 50)(rng)), Int(m)});
        auto out = nt::crt_combine(in);
        for (auto& x : in) CHECK(mod_floor(out.value - x.value, x.modulus) == 0);
        CHECK(out.value >= 0);
        CHECK(out.value < out.modulus);
    }
}

TEST_CASE("lcm tower") {
    CHECK(nt::lcm_tower(5, 2) == 24);
    CHECK(nt::lcm_tower(2, 3) == 21);
    CHECK(nt::lcm_tower(13, 1) == 12);
}

TEST_CASE("cyclotomic polynomials and the root-of-unity test") {
    CHECK(nt::cyclotomic(1) == Poly({-1, 1}));
    CHECK(nt::cyclotomic(2) == Poly({1, 1}));
    CHECK(nt::cyclotomic(6) == Poly({1, -1, 1}));
    CHECK(nt::cyclotomic(12) == Poly({1, 0, -1, 0, 1}));
    for (unsigned m = 1; m <= 40; ++m) CHECK(nt::cyclotomic(m).degree() == static_cast<long>(nt::euler_phi(m)));
    // x^n - 1 = prod over d | n of Phi_d
    for (unsigned n = 1; n <= 30; ++n) {
        Poly prod = Poly::constant(1);
        for (unsigned d = 1; d <= n; ++d)
            if (n % d == 0) prod *= nt::cyclotomic(d);
        CHECK(prod == Poly::monomial(1, n) - Poly::constant(1));
    }
    auto h = nt::cyclotomic_root_of_unity_test(Poly({1, 1}), 4);
    CHECK(h.found);
    CHECK(h.order == 2);
    CHECK_FALSE(nt::cyclotomic_root_of_unity_test(Poly({-2, 1}), 20).found);
    auto h3 = nt::cyclotomic_root_of_unity_test(Poly({1, 1, 1}), 6);
    CHECK(h3.found);
    CHECK(h3.order == 3);
    CHECK(nt::ratio_cyclotomic_bound(3) == 9);
}

TEST_CASE("polynomial ring axioms") {
    std::mt19937 rng(9);
    for (int i = 0; i < 60; ++i) {
        Poly a = random_poly(rng, 4), b = random_poly(rng, 4), c = random_poly(rng, 4);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        if (!b.is_zero()) {
            auto qr = divmod(a, b);
            CHECK(qr.quotient * b + qr.remainder == a);
            CHECK(qr.remainder.degree() < b.degree());
        }
        Rat x0(i - 30, 7);
        x0.canonicalize();
        CHECK((a * b).eval(x0) == a.eval(x0) * b.eval(x0));
        CHECK(a.compose(b).eval(x0) == a.eval(b.eval(x0)));
    }
    Poly f = Poly({-1, 1}).pow(3) * Poly({1, 1});
    CHECK(squarefree_part(f) == Poly({-1, 0, 1}));
    std::vector<Rat> xs{0, 1, 2, 3}, ys{1, 2, 5, 10};
    CHECK(interpolate(xs, ys) == Poly({1, 0, 1}));
}

TEST_CASE("linear algebra helpers") {
    CHECK(det_bareiss({{2, 0, 1}, {1, 3, 2}, {1, 1, 1}}) == 0);
    CHECK(det_bareiss({{0, 1}, {1, 0}}) == -1);
    RatMatrix m(2, 2);
    m(0, 0) = 1; m(0, 1) = 1; m(1, 0) = 1; m(1, 1) = 0;
    auto cp = charpoly(m);
    REQUIRE(cp.size() == 3);
    CHECK(cp[0] == -1);
    CHECK(cp[1] == -1);
    CHECK(cp[2] == 1);
    RatMatrix k(2, 3);
    k(0, 0) = 1; k(0, 1) = 2; k(0, 2) = 3;
    k(1, 0) = 2; k(1, 1) = 4; k(1, 2) = 6;
    CHECK(rank(k) == 1);
    CHECK(kernel_basis(k).size() == 2);
}

TEST_CASE("factorization") {
    auto f = nt::factor(Int("1000000016000000063"));  // (10^9+7)(10^9+9)
    CHECK(f.complete());
    CHECK(f.primes.size() == 2);
    CHECK(f.value() == Int("1000000016000000063"));
    CHECK(nt::is_prime_u64(1000000007ULL));
    CHECK_FALSE(nt::is_prime_u64(561));
    CHECK(nt::next_prime(13) == 17);
    CHECK(nt::primes_up_to(30).size() == 10);
    auto g = nt::factor_u64(360);
    CHECK(g[2] == 3);
    CHECK(g[3] == 2);
    CHECK(g[5] == 1);
}

}  // TEST_SUITE
