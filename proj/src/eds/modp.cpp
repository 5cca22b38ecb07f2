#include "edslrs/eds.hpp"

#include "edslrs/error.hpp"
#include "edslrs/factor.hpp"
#include "edslrs/modular.hpp"
#include "edslrs/simd.hpp"

#include <algorithm>

namespace edslrs::eds {

using mod::u64;

namespace {

std::vector<std::uint32_t> narrow(const std::vector<u64>& v, u64 p, bool fold_sign) {
    std::vector<std::uint32_t> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        u64 w = v[i];
        if (fold_sign && w != 0) w = std::min(w, p - w);
        out[i] = static_cast<std::uint32_t>(w);
    }
    return out;
}

/// Smallest multiple T of step with 2T <= size and seq[n + T] == seq[n] for every n < size - T.
u64 smallest_shift(const std::vector<std::uint32_t>& seq, u64 step) {
    const u64 h = seq.size();
    for (u64 t = step; 2 * t <= h; t += step) {
        if (seq[t] != seq[0]) continue;
        if (simd::first_shift_mismatch(seq, 0, h - t, t) == h - t) return t;
    }
    return 0;
}

bool divides(u64 t, const Int& n) { return t != 0 && mpz_divisible_ui_p(n.get_mpz_t(), t) != 0; }

}  // namespace

const char* to_string(PeriodStatus s) { return s == PeriodStatus::confirmed ? "confirmed" : "unconfirmed"; }

unsigned suggest_stride(const ec::CurveQ& e, const ec::PointQ& p) {
    ec::PointQ acc = p;
    for (unsigned m = 1; m <= 12; ++m) {
        if (m > 1) acc = ec::add(acc, p, e);
        if (acc.infinity) return 0;
        if (ec::singular_reduction_primes(e, acc).empty()) return m;
    }
    return 0;
}

std::vector<u64> geometric_mod_p(const ec::CurveQ& e, const ec::PointQ& pt, u64 p, std::size_t count) {
    require(p >= 2 && p < (u64{1} << 62), "modulus out of range");
    require(!pt.infinity, "point at infinity has no EDS");
    if (auto bad = ec::singular_reduction_primes(e, pt); !bad.empty()) {
        unsigned m = suggest_stride(e, pt);
        fail(ErrorKind::bad_reduction, "point is singular modulo " + to_dec(bad.front()) +
                                           "; z_n is not |W_n| here" +
                                           (m ? "; stride " + std::to_string(m) + " gives a usable multiple" : ""));
    }
    std::vector<u64> out(count, 0);
    const u64 z = mod_u64(pt.z, p);
    if (z == 0) return out;
    const u64 A = mod_u64(e.a(), p), B = mod_u64(e.b(), p);
    const u64 zi = mod::inv(z, p);
    const u64 X = mod::mul(mod_u64(pt.x, p), mod::mul(zi, zi, p), p);
    const u64 Y = mod::mul(mod_u64(pt.y, p), mod::pow(zi, 3, p), p);
    auto mul = [p](u64 a, u64 b) { return mod::mul(a, b, p); };
    auto add = [p](u64 a, u64 b) { return mod::add(a, b, p); };
    auto sub = [p](u64 a, u64 b) { return mod::sub(a, b, p); };
    auto c = [p](u64 v) { return v % p; };
    const u64 X2 = mul(X, X), X3 = mul(X2, X), X4 = mul(X2, X2), X6 = mul(X3, X3), A2 = mul(A, A);
    const u64 F = mul(c(4), add(add(X3, mul(A, X)), B));
    const u64 F2 = mul(F, F);
    const u64 twoY = add(Y, Y);

    // psi_n = t_n for odd n and 2Y t_n for even n
    const std::size_t top = std::max<std::size_t>(count, 4);
    std::vector<u64> t(top + 1);
    t[0] = 0;
    t[1] = c(1);
    t[2] = c(1);
    t[3] = sub(add(add(mul(c(3), X4), mul(mul(c(6), A), X2)), mul(mul(c(12), B), X)), A2);
    {
        u64 s = add(X6, mul(mul(c(5), A), X4));
        s = add(s, mul(mul(c(20), B), X3));
        s = sub(s, mul(mul(c(5), A2), X2));
        s = sub(s, mul(mul(mul(c(4), A), B), X));
        s = sub(s, mul(c(8), mul(B, B)));
        s = sub(s, mul(A2, A));
        t[4] = mul(c(2), s);
    }
    for (std::size_t n = 5; n <= top; ++n) {
        const std::size_t m = n / 2;
        auto cube = [&](u64 v) { return mul(mul(v, v), v); };
        auto sq = [&](u64 v) { return mul(v, v); };
        if (n % 2 == 0) {
            t[n] = mul(t[m], sub(mul(t[m + 2], sq(t[m - 1])), mul(t[m - 2], sq(t[m + 1]))));
        } else if (m % 2 == 0) {
            t[n] = sub(mul(F2, mul(t[m + 2], cube(t[m]))), mul(t[m - 1], cube(t[m + 1])));
        } else {
            t[n] = sub(mul(t[m + 2], cube(t[m])), mul(F2, mul(t[m - 1], cube(t[m + 1]))));
        }
    }
    u64 zpow = z;                  // z^{n^2}
    u64 zstep = mod::pow(z, 3, p);  // z^{2n+1}
    const u64 zsq = mul(z, z);
    for (std::size_t n = 1; n <= count; ++n) {
        u64 psi = n % 2 == 0 ? mul(twoY, t[n]) : t[n];
        out[n - 1] = mul(psi, zpow);
        zpow = mul(zpow, zstep);
        zstep = mul(zstep, zsq);
    }
    return out;
}

std::vector<u64> ward_mod_p(const WardSeed& seed, u64 p, std::size_t count) {
    validate_seed(seed);
    require(p >= 2 && p < (u64{1} << 62), "modulus out of range");
    const u64 w1 = mod_u64(seed.w1, p), w2 = mod_u64(seed.w2, p);
    require(w1 != 0 && w2 != 0, "Ward stream modulo p needs p to divide neither w1 nor w2");
    auto mul = [p](u64 a, u64 b) { return mod::mul(a, b, p); };
    auto sub = [p](u64 a, u64 b) { return mod::sub(a, b, p); };
    const std::size_t top = std::max<std::size_t>(count, 4);
    std::vector<u64> w(top + 1);
    w[0] = 0;
    w[1] = w1;
    w[2] = w2;
    w[3] = mod_u64(seed.w3, p);
    w[4] = mod_u64(seed.w4, p);
    const u64 odd_inv = mod::inv(mul(mul(w1, w1), w1), p);
    const u64 even_inv = mod::inv(mul(mul(w2, w1), w1), p);
    require(odd_inv != 0 && even_inv != 0, "Ward stream modulo p needs a prime modulus");
    for (std::size_t m = 5; m <= top; ++m) {
        const std::size_t k = m / 2;
        if (m % 2 == 1) {
            u64 a = mul(w[k + 2], mul(mul(w[k], w[k]), w[k]));
            u64 b = mul(mul(mul(w[k + 1], w[k + 1]), w[k + 1]), w[k - 1]);
            w[m] = mul(sub(a, b), odd_inv);
        } else {
            u64 a = mul(mul(w[k + 2], w[k]), mul(w[k - 1], w[k - 1]));
            u64 b = mul(mul(w[k], w[k - 2]), mul(w[k + 1], w[k + 1]));
            w[m] = mul(sub(a, b), even_inv);
        }
    }
    return std::vector<u64>(w.begin() + 1, w.begin() + 1 + static_cast<std::ptrdiff_t>(count));
}

PeriodReport stream_period(const std::vector<u64>& values, u64 p) {
    require(p >= 2 && p < (u64{1} << 32), "period search needs p < 2^32");
    PeriodReport r;
    r.p = p;
    r.horizon = values.size();
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] == 0) {
            r.rank = i + 1;
            break;
        }
    }
    const u64 step = r.rank ? r.rank : 1;
    auto folded = narrow(values, p, true);
    r.period = smallest_shift(folded, step);
    if (r.period) {
        r.status = PeriodStatus::confirmed;
        r.window_end = r.horizon;
        r.signed_period = smallest_shift(narrow(values, p, false), r.period);
    }
    return r;
}

namespace {

template <class Gen>
PeriodReport adaptive_period(Gen&& gen, u64 p, const PeriodOptions& opt, u64 start) {
    if (opt.horizon) return stream_period(gen(opt.horizon), p);
    u64 h = std::max<u64>(start, 64);
    PeriodReport r;
    for (;;) {
        h = std::min(h, opt.horizon_cap);
        r = stream_period(gen(h), p);
        bool done = r.status == PeriodStatus::confirmed && (r.signed_period != 0 || h >= 8 * r.period);
        if (done || h >= opt.horizon_cap) return r;
        h *= 2;
    }
}

}  // namespace

PeriodReport eds_period_mod_p(const ec::CurveQ& e, const ec::PointQ& pt, u64 p, PeriodOptions opt) {
    require(nt::is_prime_u64(p) && p > 2, "period modulus must be an odd prime");
    auto ef = ec::reduce(e, p);
    if (!ef.good_reduction) fail(ErrorKind::bad_reduction, "p divides the discriminant");
    require(!pt.infinity && mod_u64(pt.z, p) != 0, "p divides z_1");
    auto count = ec::count_points(ef);
    const u64 ord = ec::point_order_fp(ec::reduce(pt, ef), ef, count.order);
    auto r = adaptive_period([&](u64 h) { return geometric_mod_p(e, pt, p, h); }, p, opt, 4 * ord);
    r.group_order = count.order;
    r.ap = count.ap;
    r.point_order = ord;
    if (r.status == PeriodStatus::confirmed) {
        const Int n = from_u64(count.order);
        r.divides_2_pm2_order = divides(r.period, 2 * from_u64(p - 2) * n);
        r.divides_pm1_order = divides(r.period, from_u64(p - 1) * n);
    }
    return r;
}

PeriodReport eds_period_mod_p(const WardSeed& seed, u64 p, PeriodOptions opt) {
    require(nt::is_prime_u64(p), "period modulus must be prime");
    return adaptive_period([&](u64 h) { return ward_mod_p(seed, p, h); }, p, opt, 4 * p);
}

}  // namespace edslrs::eds
