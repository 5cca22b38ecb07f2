// One pass/fail line per acceptance criterion. `--criterion N` runs a single one.

#include "edslrs/density.hpp"
#include "edslrs/eds.hpp"
#include "edslrs/elliptic.hpp"
#include "edslrs/factor.hpp"
#include "edslrs/lrs.hpp"
#include "edslrs/prooflab.hpp"
#include "edslrs/refuter.hpp"
#include "oracles/mutations.hpp"
#include "oracles/numeric_degeneracy.hpp"
#include "oracles/stochastic.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace edslrs;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects the first few failures with context.
class Tally {
  public:
    void expect(bool ok, const std::string& what) {
        ++checked_;
        if (ok) return;
        ++failed_;
        if (failed_ <= 5) notes_ << (failed_ > 1 ? "; " : "") << what;
    }
    Outcome done(const std::string& summary) const {
        std::ostringstream s;
        s << summary << ", " << checked_ << " checks";
        if (failed_) s << ", " << failed_ << " failed: " << notes_.str() << (failed_ > 5 ? "; ..." : "");
        return {failed_ == 0, s.str()};
    }

  private:
    std::size_t checked_ = 0, failed_ = 0;
    std::ostringstream notes_;
};

Rat rat(long n, long d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::uint64_t mod_of(const Int& v, std::uint64_t p) {
    Int r = v % Int(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
}

Outcome qlemma() {
    Tally t;
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 50; ++i) {
        const long d = 1 + static_cast<long>(rng() % 4);
        std::vector<Rat> c;
        for (long k = 0; k <= d; ++k) c.push_back(rat(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 9)));
        while (c.back() == 0) c.back() = rat(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 4));
        Rat alpha = rat(1 + static_cast<long>(rng() % 15), 1 + static_cast<long>(rng() % 7));
        if (rng() % 2) alpha = -alpha;
        const Poly p(c);
        auto x = prooflab::expand_q(p, alpha);
        const Rat a0 = c.back();
        t.expect(x.degree == 8 * d - 3, "degree " + std::to_string(x.degree) + " for d=" + std::to_string(d));
        t.expect(x.leading == Rat(-4 * d) * a0 * a0 * a0 * a0 * alpha * alpha * alpha, "leading coefficient, P=" + p.to_string());
        // Pointwise check that the expansion is the defining expression.
        const Rat X = rat(static_cast<long>(rng() % 11) - 5, 3);
        auto sq = [](const Rat& v) { return Rat(v * v); };
        const Rat p1 = p.eval(sq(X + 1)), p2 = p.eval(X * X);
        const Rat want = p.eval(sq(2 * X + 1)) - alpha * alpha * alpha *
                                                      (p.eval(sq(X + 2)) * p2 * p2 * p2 - p.eval(sq(X - 1)) * p1 * p1 * p1);
        t.expect(x.q.eval(X) == want, "expansion at a sample point");
    }
    for (long a0 : {5L, -3L, 7L}) {
        auto x = prooflab::expand_q(Poly{a0}, rat(2, 1));
        t.expect(x.q == Poly{a0}, "d=0 constant");
    }
    return t.done("50 random (P, alpha) with 1 <= d <= 4 plus d = 0");
}

Outcome det_identity() {
    Tally t;
    std::size_t admissible = 0;
    for (std::uint64_t q : {3u, 5u, 7u, 11u})
        for (std::size_t len = 1; len <= 3; ++len) {
            std::vector<std::uint64_t> b(len, 0);
            for (;;) {
                bool ok = true;
                for (std::size_t i = 0; i < len; ++i) {
                    ok = ok && b[i] != 1;
                    for (std::size_t j = i + 1; j < len; ++j) ok = ok && b[i] != b[j];
                }
                if (ok) {
                    ++admissible;
                    auto d = prooflab::det_beta_identity(q, b);
                    t.expect(d.holds && (d.det == d.product || d.det == -d.product),
                             "q=" + std::to_string(q) + " t=" + std::to_string(len));
                    // Independent mod-q value of the product side.
                    std::int64_t prod = 1;
                    const auto qq = static_cast<std::int64_t>(q);
                    for (std::size_t i = 0; i < len; ++i) {
                        prod = prod * ((static_cast<std::int64_t>(b[i]) - 1 + qq) % qq) % qq;
                        for (std::size_t j = i + 1; j < len; ++j)
                            prod = prod * ((static_cast<std::int64_t>(b[i]) - static_cast<std::int64_t>(b[j]) + qq) % qq) % qq;
                    }
                    const auto dm = static_cast<std::int64_t>(d.det_mod_q);
                    t.expect(dm == prod || dm == (qq - prod) % qq, "det mod q is not +-product");
                }
                std::size_t i = 0;
                while (i < len && ++b[i] == q) b[i++] = 0;
                if (i == len) break;
            }
        }
    return t.done(std::to_string(admissible) + " admissible tuples");
}

Outcome gl2_densities() {
    Tally t;
    for (std::uint64_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
        auto h = density::gl2_histogram(q, 1);
        std::uint64_t total = 0;
        for (auto v : h) total += v;
        t.expect(total == (q * q - 1) * (q * q - q), "|GL2(F_" + std::to_string(q) + ")|");
        for (std::uint64_t a = 0; a < q; ++a)
            for (std::uint64_t b = 1; b < q; ++b) {
                unsigned roots = 0;
                for (std::uint64_t x = 0; x < q; ++x) roots += (x * x + (q - a) * x + b) % q == 0;
                bool repeated = false;
                for (std::uint64_t x = 0; x < q; ++x)
                    repeated = repeated || ((x * x + (q - a) * x + b) % q == 0 && (2 * x + q - a) % q == 0);
                const std::uint64_t want = repeated ? q * q : roots == 2 ? q * q + q : q * q - q;
                t.expect(h[a * q + b] == want, "cell q=" + std::to_string(q) + " a=" + std::to_string(a) + " b=" +
                                                   std::to_string(b));
                t.expect(density::count_gl2(q, a, b).delta > 0, "delta positive");
            }
    }
    for (std::uint64_t q : {3u, 5u, 7u})
        for (std::uint64_t a = 0; a < q; ++a) {
            if (a == 1) continue;  // b = a - 1 = 0 is not a unit
            const std::uint64_t b = (a + q - 1) % q;
            t.expect(density::witness_is_counted(q, density::affine_witness(q, a)), "witness counted");
            t.expect(density::count_affine(q, a, b).delta > 0,
                     "affine delta q=" + std::to_string(q) + " a=" + std::to_string(a));
        }
    return t.done("q <= 13 enumerated, affine q in {3,5,7}");
}

Outcome period_divisibility() {
    Tally t;
    const ec::CurveQ e(0, 3);
    const auto pt = ec::make_point(e, 1, 2, 1);
    std::size_t primes = 0, pm1 = 0;
    for (std::uint32_t p : nt::primes_up_to(100)) {
        if (!ec::reduce(e, p).good_reduction) continue;
        ++primes;
        auto rep = eds::eds_period_mod_p(e, pt, p);
        pm1 += rep.divides_pm1_order;
        const std::string at = "p=" + std::to_string(p);
        t.expect(rep.status == eds::PeriodStatus::confirmed, at + " unconfirmed");
        const std::uint64_t bound = 2 * (p - 2) * rep.group_order;
        t.expect(bound % rep.period == 0, at + ": T_z=" + std::to_string(rep.period) + " does not divide 2(p-2)#E=" +
                                              std::to_string(bound));
        auto z = eds::geometric_mod_p(e, pt, p, 4 * rep.point_order + 8);
        bool zeros_ok = true;
        for (std::size_t n = 1; n <= z.size(); ++n) zeros_ok = zeros_ok && ((z[n - 1] == 0) == (n % rep.point_order == 0));
        t.expect(zeros_ok, at + ": zeros off the multiples of ord(P)");
    }
    return t.done(std::to_string(primes) + " good primes <= 100 for y^2 = x^3 + 3, P = (1,2); T_z | (p-1)#E at " +
                  std::to_string(pm1));
}

Outcome refutation() {
    Tally t;
    const ec::CurveQ e(2, 1);
    const auto pt = ec::make_point(e, 1, 2, 1);
    const auto fib = lrs::make_spec({1, 1}, {1, 1});
    auto res = refute::find_witness(e, pt, fib, 5, 1'000'000);
    t.expect(res.certificate.has_value(), "no witness below 10^6");
    if (!res.certificate) return t.done("fixture y^2 = x^3 + 2x + 1");
    const auto& c = *res.certificate;
    t.expect(c.p <= 1'000'000, "p bound");
    t.expect(c.tz.value % 5 == 0 && c.q_divides_tz, "q | T_z");
    t.expect(c.tu.value % 5 != 0 && !c.q_divides_tu, "q does not divide T_u");
    t.expect(c.mismatch_indices.size() >= 10, "mismatch count");
    t.expect(refute::verify_certificate(c).pass, "verification");
    const auto muts = oracle::mutations(c);
    t.expect(muts.size() == 12, "mutation count");
    for (auto& [name, m] : muts) t.expect(!refute::verify_certificate(m).pass, "mutation " + name + " accepted");
    return t.done("witness p=" + std::to_string(c.p) + ", T_z=" + std::to_string(c.tz.value) + ", T_u=" +
                  std::to_string(c.tu.value) + ", " + std::to_string(c.mismatch_indices.size()) + " mismatches");
}

std::uint64_t iterate_period(const lrs::LrsSpec& s, std::uint64_t p) {
    const std::size_t k = s.order();
    std::vector<std::uint64_t> start(k);
    for (std::size_t i = 0; i < k; ++i) start[i] = mod_of(s.initial[i], p);
    auto cur = start;
    for (std::uint64_t n = 1;; ++n) {
        std::uint64_t next = 0;
        for (std::size_t i = 0; i < k; ++i) next = (next + mod_of(s.coeffs[i], p) * cur[k - 1 - i]) % p;
        cur.erase(cur.begin());
        cur.push_back(next);
        if (cur == start) return n;
    }
}

Outcome lrs_engine() {
    Tally t;
    std::mt19937_64 rng(77);
    for (int i = 0; i < 100; ++i) {
        const std::size_t k = 1 + rng() % 5;
        std::vector<Int> c(k), u(k);
        for (auto& x : c) x = static_cast<long>(rng() % 19) - 9;
        while (c.back() == 0) c.back() = static_cast<long>(rng() % 19) - 9;
        for (auto& x : u) x = static_cast<long>(rng() % 19) - 9;
        const auto s = lrs::make_spec(c, u);
        const auto terms = lrs::generate(s, 30);
        const auto fit = lrs::fit_minimal_recurrence(terms, 5);
        t.expect(fit.found, "fit failed on " + s.to_string());
        if (fit.found) {
            t.expect(fit.spec.order() <= k, "fitted order exceeds the generator");
            t.expect(lrs::generate(fit.spec, 60) == lrs::generate(s, 60), "round trip " + s.to_string());
        }
    }
    const auto fib = lrs::make_spec({1, 1}, {1, 1});
    const auto d = lrs::decimate(fib, 2);
    t.expect(d.coeffs == std::vector<Int>{3, -1}, "decimation by 2: " + d.to_string());
    for (auto [p, want] : {std::pair<std::uint64_t, std::uint64_t>{5, 20}, {11, 10}}) {
        t.expect(iterate_period(fib, p) == want, "iterated Pisano period mod " + std::to_string(p));
        t.expect(lrs::lrs_period_mod_p(fib, p).period == want, "matrix-order Pisano period mod " + std::to_string(p));
    }
    return t.done("100 random specs k <= 5, |c| <= 9");
}

Outcome degeneracy() {
    Tally t;
    std::mt19937_64 rng(4242);
    std::size_t degenerate = 0;
    for (int i = 0; i < 100; ++i) {
        const std::size_t k = 1 + rng() % 4;
        std::vector<Int> c(k), u(k);
        for (auto& x : c) x = static_cast<long>(rng() % 7) - 3;
        while (c.back() == 0) c.back() = static_cast<long>(rng() % 7) - 3;
        for (auto& x : u) x = static_cast<long>(rng() % 7) - 3;
        const auto s = lrs::make_spec(c, u);
        const bool got = lrs::is_degenerate(s).degenerate;
        degenerate += got;
        t.expect(got == oracle::numerically_degenerate(s), "disagreement on " + s.to_string());
    }
    t.expect(lrs::is_degenerate(lrs::make_spec({0, 1}, {1, 2})).degenerate, "(x-1)(x+1)");
    t.expect(!lrs::is_degenerate(lrs::make_spec({1, 1}, {1, 1})).degenerate, "Fibonacci");
    t.expect(lrs::is_degenerate(lrs::make_spec({2, -2}, {1, 1})).degenerate, "x^2 - 2x + 2");
    return t.done("100 random specs k <= 4 (" + std::to_string(degenerate) + " degenerate) plus 3 fixtures");
}

Outcome eds_negative_control() {
    Tally t;
    for (auto [a, b, x, y] : {std::array<long, 4>{0, 3, 1, 2}, {2, 1, 1, 2}}) {
        const ec::CurveQ e(a, b);
        auto seq = eds::generate_geometric(e, ec::make_point(e, x, y, 1), 20);
        const auto fit = lrs::fit_minimal_recurrence(seq.terms, 8);
        t.expect(!fit.found, "a recurrence was fitted to " + e.to_string());
    }
    return t.done("20 terms, orders <= 8, both fixture curves");
}

Outcome residue_counts() {
    Tally t;
    std::size_t cases = 0, outside = 0, empty = 0;
    for (std::uint32_t r : nt::primes_up_to(10'000)) {
        if (r == 2) continue;
        std::vector<char> square(r, 0);
        for (std::uint64_t x = 1; x < r; ++x) square[x * x % r] = 1;
        for (unsigned tt = 1; tt <= 3; ++tt) {
            if (r <= tt) continue;
            ++cases;
            auto got = prooflab::count_admissible_residues(r, tt, 1);
            std::uint64_t brute = 0;
            for (std::uint64_t n = 0; n < r; ++n) {
                bool ok = true;
                for (unsigned j = 1; j <= tt && ok; ++j) ok = square[(n * n + j) % r];
                brute += ok;
            }
            const std::string at = "r=" + std::to_string(r) + " t=" + std::to_string(tt);
            t.expect(got.count == brute, at + " count differs from enumeration");
            const double dev = std::fabs(std::ldexp(static_cast<double>(got.count), static_cast<int>(tt)) - r);
            const bool in_band = dev <= 2.0 * tt * (std::sqrt(static_cast<double>(r)) + 1.0);
            outside += !in_band;
            t.expect(in_band, at + " I_r=" + std::to_string(got.count) + " outside 2t(sqrt r + 1)");
            if (r >= 11) {
                empty += got.count == 0;
                t.expect(got.count > 0, at + " I_r = 0");
            }
        }
    }
    return t.done(std::to_string(cases) + " (r, t) pairs, " + std::to_string(outside) + " outside the band, " +
                  std::to_string(empty) + " with I_r = 0");
}

Outcome fixed_points() {
    Tally t;
    std::mt19937_64 rng(31337);
    std::size_t larger = 0;
    for (int k = 0; k < 20; ++k) {
        const std::size_t n = 3 + static_cast<std::size_t>(k % 4);
        const auto a = oracle::random_admissible(rng, n, k % 4 == 3);
        const auto v = prooflab::fixed_point_collision(a);
        larger += v.dimension > 1;
        t.expect(v.dimension >= 1, "eigenvalue 1 missing");
        t.expect(v.collision, "no colliding pair for instance " + std::to_string(k));
        for (int combo = 0; combo < 25; ++combo) {
            std::vector<Rat> x(n, 0);
            for (auto& b : v.basis) {
                const long w = static_cast<long>(rng() % 41) - 20;
                for (std::size_t i = 0; i < n; ++i) x[i] += w * b[i];
            }
            bool fixed = true;
            for (std::size_t i = 0; i < n; ++i) {
                Rat ax = 0;
                for (std::size_t j = 0; j < n; ++j) ax += a(i, j) * x[j];
                fixed = fixed && ax == x[i];
            }
            t.expect(fixed, "basis combination is not fixed");
            t.expect(oracle::argmin_collides(a, x), "eigenvector with distinct coordinates");
        }
    }
    return t.done("20 matrices of size 3..6 (" + std::to_string(larger) + " with eigenspace dimension > 1)");
}

struct Criterion {
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all{
        {"Q(X) degree and leading coefficient", 10, qlemma},
        {"determinant identity", 30, det_identity},
        {"GL2 and affine densities", 120, gl2_densities},
        {"EDS period divides 2(p-2)#E", 120, period_divisibility},
        {"refutation certificate end to end", 300, refutation},
        {"LRS engine", 60, lrs_engine},
        {"degeneracy vs numerical oracle", 60, degeneracy},
        {"EDS negative control", 30, eds_negative_control},
        {"residue counting band", 60, residue_counts},
        {"fixed-point collision", 30, fixed_points},
    };
    return all;
}

bool run_one(std::size_t idx) {
    const auto& c = criteria()[idx - 1];
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = c.run();
    } catch (const std::exception& e) {
        o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.budget_s;
    const bool pass = o.pass && in_time;
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << idx << ": " << c.name << " [" << std::fixed
              << std::setprecision(2) << secs << " s of " << std::setprecision(0) << c.budget_s << " s] " << o.detail
              << (in_time ? "" : " (over time budget)") << std::endl;
    return pass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    std::size_t only = 0;
    app.add_option("--criterion", only, "run a single criterion (1-10)")->check(CLI::Range(1, 10));
    CLI11_PARSE(app, argc, argv);
    bool all = true;
    for (std::size_t i = 1; i <= criteria().size(); ++i)
        if (only == 0 || only == i) all = run_one(i) && all;
    return all ? 0 : 1;
}
