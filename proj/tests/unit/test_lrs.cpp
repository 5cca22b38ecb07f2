#include <doctest.h>

#include "edslrs/eds.hpp"
#include "edslrs/error.hpp"
#include "edslrs/factor.hpp"
#include "edslrs/lrs.hpp"
#include "edslrs/ntkernel.hpp"
#include "oracles/numeric_degeneracy.hpp"

#include <random>
#include <sstream>

using namespace edslrs;
using lrs::LrsSpec;

namespace {

LrsSpec fib() { return lrs::make_spec({1, 1}, {1, 1}); }

LrsSpec random_spec(std::mt19937& rng, std::size_t max_k, int mag) {
    std::uniform_int_distribution<int> kd(1, static_cast<int>(max_k)), cd(-mag, mag);
    const std::size_t k = kd(rng);
    std::vector<Int> c(k), u(k);
    for (auto& x : c) x = cd(rng);
    while (c.back() == 0) c.back() = cd(rng);
    for (auto& x : u) x = cd(rng);
    return lrs::make_spec(c, u);
}

// Independent evaluation: 2x2-or-larger integer matrix power, no shared code with the library.
Int matrix_power_eval(const LrsSpec& s, std::size_t n) {
    const std::size_t k = s.order();
    using M = std::vector<std::vector<Int>>;
    auto mul = [k](const M& a, const M& b) {
        M c(k, std::vector<Int>(k, 0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t l = 0; l < k; ++l)
                for (std::size_t j = 0; j < k; ++j) c[i][j] += a[i][l] * b[l][j];
        return c;
    };
    M c(k, std::vector<Int>(k, 0)), r(k, std::vector<Int>(k, 0));
    for (std::size_t i = 0; i + 1 < k; ++i) c[i][i + 1] = 1;
    for (std::size_t j = 0; j < k; ++j) c[k - 1][j] = s.coeffs[k - 1 - j];
    for (std::size_t i = 0; i < k; ++i) r[i][i] = 1;
    for (std::size_t e = n - 1; e; e >>= 1) {
        if (e & 1) r = mul(r, c);
        c = mul(c, c);
    }
    Int v = 0;
    for (std::size_t j = 0; j < k; ++j) v += r[0][j] * s.initial[j];
    return v;
}

// Period by plain iteration of the state until it returns to the start.
std::uint64_t iterate_period(const LrsSpec& s, std::uint64_t p) {
    const std::size_t k = s.order();
    std::vector<std::uint64_t> start(k), cur;
    for (std::size_t i = 0; i < k; ++i) start[i] = mod_u64(s.initial[i], p);
    cur = start;
    for (std::uint64_t t = 1;; ++t) {
        std::uint64_t next = 0;
        for (std::size_t i = 0; i < k; ++i) next = (next + mod_u64(s.coeffs[i], p) * cur[k - 1 - i]) % p;
        cur.erase(cur.begin());
        cur.push_back(next);
        if (cur == start) return t;
    }
}

}  // namespace

TEST_SUITE("lrs") {

TEST_CASE("evaluation") {
    CHECK(lrs::eval_exact(fib(), 10) == 55);
    CHECK(lrs::eval_exact(lrs::make_spec({2}, {3}), 5) == 48);
    std::mt19937 rng(1);
    for (int t = 0; t < 10; ++t) {
        auto s = random_spec(rng, 4, 5);
        auto u = lrs::generate(s, 200);
        for (std::size_t n = 1; n <= 200; n += 7) CHECK(u[n - 1] == matrix_power_eval(s, n));
        for (std::uint64_t p : {2ULL, 7ULL, 101ULL, 1000000007ULL})
            for (std::size_t n = 1; n <= 200; n += 3) CHECK(lrs::eval_mod(s, Int(unsigned(n)), p) == mod_u64(u[n - 1], p));
    }
    CHECK(lrs::eval_mod(fib(), Int(1000000), 5) == 0);
    CHECK(lrs::eval_mod(fib(), Int(1000001), 5) == lrs::eval_exact(fib(), 1) % 5);
    CHECK_THROWS_AS(lrs::make_spec({1, 0}, {1, 1}), Error);
}

TEST_CASE("fitting") {
    auto f = lrs::fit_minimal_recurrence(lrs::generate(fib(), 30));
    REQUIRE(f.found);
    CHECK(f.spec.coeffs == std::vector<Int>{1, 1});
    auto c = lrs::fit_minimal_recurrence(std::vector<Int>(30, 7));
    REQUIRE(c.found);
    CHECK(c.spec.coeffs == std::vector<Int>{1});
    auto z = lrs::fit_minimal_recurrence(std::vector<Int>(30, 0));
    CHECK(z.found);
    std::vector<Int> halves;
    for (int n = 0; n < 30; ++n) halves.push_back(n % 2 ? 1 : 0);
    CHECK(lrs::fit_minimal_recurrence(halves).found);
    std::vector<Int> tail{1};
    tail.resize(30, 0);
    auto t = lrs::fit_minimal_recurrence(tail);
    CHECK_FALSE(t.found);
    auto pt = ec::make_point(ec::CurveQ(0, 3), 1, 2, 1);
    auto eds20 = eds::generate_geometric(ec::CurveQ(0, 3), pt, 20);
    CHECK_FALSE(lrs::fit_minimal_recurrence(eds20.terms, 8).found);
    // u_{n+1} = (3/2) u_n on a finite window: only a rational recurrence fits
    std::vector<Int> rat;
    Int v = 1;
    for (int n = 0; n < 12; ++n) rat.push_back(v * pow_int(2, 11 - n)), v *= 3;
    auto r = lrs::fit_minimal_recurrence(rat, 4);
    CHECK_FALSE(r.found);
    CHECK(r.rational_coeffs.size() == 1);
    CHECK_THROWS_AS(lrs::fit_minimal_recurrence(lrs::generate(fib(), 10), 12), Error);
    std::mt19937 rng(2);
    for (int i = 0; i < 60; ++i) {
        auto s = random_spec(rng, 5, 9);
        auto g = lrs::generate(s, 40);
        auto fit = lrs::fit_minimal_recurrence(g, 12);
        REQUIRE(fit.found);
        CHECK(lrs::generate(fit.spec, 40) == g);
        CHECK(fit.spec.order() <= s.order());
    }
}

TEST_CASE("decimation") {
    auto d = lrs::decimate(fib(), 2);
    CHECK(d.coeffs == std::vector<Int>{3, -1});
    CHECK(lrs::decimate(fib(), 1) == fib());
    std::mt19937 rng(4);
    for (int i = 0; i < 20; ++i) {
        auto s = random_spec(rng, 4, 4);
        for (std::uint64_t m : {2ULL, 3ULL, 5ULL}) {
            auto dm = lrs::decimate(s, m);
            auto u = lrs::generate(s, 60 * m);
            auto v = lrs::generate(dm, 60);
            for (std::size_t n = 1; n <= 60; ++n) CHECK(v[n - 1] == u[n * m - 1]);
        }
    }
}

TEST_CASE("degeneracy") {
    auto alt = lrs::make_spec({0, 1}, {0, 2});  // 1 + (-1)^n
    auto a = lrs::is_degenerate(alt);
    CHECK(a.degenerate);
    CHECK(a.order == 2);
    CHECK_FALSE(lrs::is_degenerate(fib()).degenerate);
    auto gi = lrs::is_degenerate(lrs::make_spec({2, -2}, {1, 3}));  // x^2 - 2x + 2
    CHECK(gi.degenerate);
    CHECK(gi.order == 4);
    auto red = lrs::nondegenerate_reduction(alt);
    CHECK(red.m == 2);
    CHECK(lrs::generate(red.spec, 10) == std::vector<Int>(10, 2));
    auto same = lrs::nondegenerate_reduction(fib());
    CHECK(same.m == 1);
    CHECK(same.spec == fib());
    std::mt19937 rng(8);
    for (int i = 0; i < 40; ++i) {
        auto s = random_spec(rng, 4, 3);
        auto rep = lrs::is_degenerate(s);
        CHECK(rep.degenerate == oracle::numerically_degenerate(s));
        auto r = lrs::nondegenerate_reduction(s);
        CHECK_FALSE(lrs::is_degenerate(r.spec).degenerate);
    }
}

TEST_CASE("periods modulo p") {
    CHECK(lrs::lrs_period_mod_p(fib(), 5).period == 20);
    CHECK(lrs::lrs_period_mod_p(fib(), 11).period == 10);
    CHECK(iterate_period(fib(), 5) == 20);
    CHECK(iterate_period(fib(), 11) == 10);
    CHECK_THROWS_AS(lrs::lrs_period_mod_p(lrs::make_spec({1, 5}, {1, 1}), 5), Error);
    std::mt19937 rng(6);
    for (std::uint32_t p : nt::primes_up_to(50)) {
        for (int i = 0; i < 6; ++i) {
            auto s = random_spec(rng, 4, 9);
            if (mod_u64(s.coeffs.back(), p) == 0) continue;
            auto per = lrs::lrs_period_mod_p(s, p);
            CHECK(per.window_verified);
            CHECK(per.period == iterate_period(s, p));
            Int pe = 1;
            while (pe < static_cast<unsigned long>(s.order())) pe *= p;
            Int bound = pe * nt::lcm_tower(p, static_cast<unsigned>(s.order()));
            CHECK(mpz_divisible_p(bound.get_mpz_t(), per.period.get_mpz_t()) != 0);
            if (per.period > 5000) continue;
            auto sq = lrs::square_sampled_period(s, p);
            CHECK(sq.base_period % sq.period == 0);
            // brute force: smallest T with u_{(n+T)^2} = u_{n^2} for n <= 2 * base
            const std::uint64_t base = sq.base_period;
            std::vector<std::uint64_t> v;
            for (std::uint64_t n = 1; n <= 2 * base; ++n) v.push_back(lrs::eval_mod(s, Int((unsigned long)(n * n)), p));
            std::uint64_t best = 0;
            for (std::uint64_t t = 1; t <= base && !best; ++t) {
                bool ok = true;
                for (std::uint64_t n = 0; n < base && ok; ++n) ok = v[n + t] == v[n];
                if (ok) best = t;
            }
            CHECK(best == sq.period);
        }
    }
}

TEST_CASE("ingestion and growth") {
    auto s = lrs::parse_spec("lrs 2 1 1 1 1");
    CHECK(s == fib());
    CHECK_THROWS_AS(lrs::parse_spec("lrs 2 1 1 1"), Error);
    CHECK_THROWS_AS(lrs::parse_spec("lrs 1 0 5"), Error);
    std::istringstream in("1\n1\n# comment\n2\n\n3\n");
    CHECK(lrs::read_terms(in).size() == 4);
    auto g = lrs::growth_profile(fib(), 200);
    CHECK(std::abs(g.back() - std::log((1 + std::sqrt(5.0)) / 2)) < 0.01);
}

}  // TEST_SUITE
