#include "edslrs/refuter.hpp"

#include "edslrs/eds.hpp"
#include "edslrs/error.hpp"
#include "edslrs/factor.hpp"
#include "edslrs/modular.hpp"

#include <set>

namespace edslrs::refute {

using mod::u64;

namespace {

u64 fold(u64 v, u64 p) { return v == 0 ? 0 : std::min(v, p - v); }

/// Is shift t a sign-free period of z (z[i] = z_{i+1}) on indices 1..end?
bool z_period_holds(const std::vector<u64>& z, u64 p, u64 t, u64 end) {
    for (u64 n = 1; n + t <= end; ++n)
        if (fold(z[n - 1 + t], p) != fold(z[n - 1], p)) return false;
    return true;
}

u64 u_square(const lrs::LrsSpec& s, u64 n, u64 p) {
    return lrs::eval_mod(s, Int(static_cast<unsigned long>(n)) * static_cast<unsigned long>(n), p);
}

class Checker {
  public:
    void add(const std::string& field, bool ok, const std::string& detail) {
        result_.checks.push_back({field, ok, ok ? "" : detail});
        if (!ok) result_.pass = false;
    }
    /// Runs body; an exception counts as a failure of `field`.
    template <class F>
    void guarded(const std::string& field, F&& body) {
        try {
            body();
        } catch (const std::exception& ex) {
            add(field, false, std::string("recomputation failed: ") + ex.what());
        }
    }
    VerifyResult result() const { return result_; }

  private:
    VerifyResult result_;
};

}  // namespace

VerifyResult verify_certificate(const WitnessCertificate& c) {
    Checker ck;
    const u64 p = c.p, q = c.q;

    ck.guarded("point", [&] {
        bool ok = ec::on_curve(c.curve, c.point) && !c.point.infinity && !ec::is_torsion(c.point, c.curve).torsion &&
                  ec::singular_reduction_primes(c.curve, c.point).empty();
        ck.add("point", ok, "point must be a non-torsion point, nonsingular modulo every prime");
    });
    ck.guarded("lrs", [&] {
        lrs::validate(c.spec);
        ck.add("lrs", !lrs::is_degenerate(c.spec).degenerate, "recurrence is degenerate");
    });
    ck.guarded("q", [&] {
        bool ok = nt::is_prime_u64(q) && mod_u64(c.spec.coeffs.back(), q) != 0;
        u64 b = (c.a % q + q - 1) % q, pw = 1;
        for (std::size_t j = 1; ok && j <= c.spec.order(); ++j) {
            pw = pw * b % q;
            ok = pw != 1;
        }
        ck.add("q", ok, "q must be a prime with q not dividing c_k or any (a-1)^j - 1, j <= k");
    });
    ck.guarded("a", [&] { ck.add("a", c.a >= 2 && c.a % q != 0 && c.a % q != 1, "a must be >= 2, a != 0, 1 mod q"); });
    bool p_ok = false;
    ck.guarded("p", [&] {
        const Int bad = c.curve.disc() * c.point.z * c.spec.coeffs.back();
        p_ok = p > 2 && p < (u64{1} << 31) && nt::is_prime_u64(p) && p % q == (c.a % q + q - 1) % q &&
               mod_u64(bad, p) != 0;
        ck.add("p", p_ok, "p must be a good prime with p = a - 1 (mod q)");
    });
    if (!p_ok) return ck.result();

    const auto ef = ec::reduce(c.curve, p);
    const auto cnt = ec::count_points(ef);
    ck.add("a_p", cnt.ap == c.ap && ((c.ap % (std::int64_t)q) + (std::int64_t)q) % (std::int64_t)q == (std::int64_t)(c.a % q),
           "recomputed a_p = " + std::to_string(cnt.ap));
    ck.add("group_order", cnt.order == c.group_order, "recomputed #E(F_p) = " + std::to_string(cnt.order));
    u64 ord = 0;
    ck.guarded("ord_P", [&] {
        ord = ec::point_order_fp(ec::reduce(c.point, ef), ef, cnt.order);
        ck.add("ord_P", ord == c.ord_p && ord % q == 0, "recomputed ord_P = " + std::to_string(ord));
    });

    // Residues of z_n: division-polynomial stream, cross-checked against exact multiples for small n.
    ck.guarded("T_z", [&] {
        const u64 top = c.tz.end;
        require(top <= (u64{1} << 26), "window too large to recheck");
        const auto z = eds::geometric_mod_p(c.curve, c.point, p, top);
        ec::PointQ acc = c.point;
        for (u64 n = 1; n <= std::min<u64>(top, 64); ++n) {
            if (n > 1) acc = ec::add(acc, c.point, c.curve);
            if (fold(mod_u64(acc.z, p), p) != fold(z[n - 1], p))
                fail(ErrorKind::internal, "residue stream disagrees with exact z_" + std::to_string(n));
        }
        const u64 t = c.tz.value;
        bool ok = t >= 1 && c.tz.end >= 2 * t && z_period_holds(z, p, t, c.tz.end) && ord != 0 && t % ord == 0;
        for (u64 s = 1; ok && s < t; ++s)
            if (z_period_holds(z, p, s, c.tz.end)) ok = false;
        ck.add("T_z", ok, "T_z is not the minimal period on [1, " + std::to_string(c.tz.end) + "] with window >= 2 T_z");
    });
    ck.guarded("T_u", [&] {
        const auto base = lrs::lrs_period_mod_p(c.spec, p).period;
        const u64 t = c.tu.value;
        bool ok = fits_u64(base) && to_u64(base) == c.tu.end && t >= 1 && c.tu.end % t == 0;
        auto holds = [&](u64 s) {
            for (u64 n = 1; n <= c.tu.end; ++n)
                if (u_square(c.spec, n + s, p) != u_square(c.spec, n, p)) return false;
            return true;
        };
        ok = ok && holds(t);
        if (ok)
            for (auto [ell, m] : nt::factor_u64(t))
                if (holds(t / ell)) ok = false;
        ck.add("T_u", ok, "T_u is not the minimal period of u_{n^2} mod p over one base period");
    });
    ck.add("q_divides_Tz", c.q_divides_tz && c.tz.value % q == 0, "claim q | T_z does not hold");
    ck.add("q_divides_Tu", !c.q_divides_tu && c.tu.value % q != 0, "claim q does not divide T_u does not hold");
    ck.guarded("mismatch_indices", [&] {
        bool ok = !c.mismatch_indices.empty();
        u64 top = 0;
        for (u64 n : c.mismatch_indices) top = std::max(top, n);
        require(top <= (u64{1} << 26), "mismatch index too large to recheck");
        const auto zs = top > 256 ? eds::geometric_mod_p(c.curve, c.point, p, top) : std::vector<u64>{};
        std::set<u64> seen;
        std::string why = "empty list";
        for (u64 n : c.mismatch_indices) {
            if (!ok) break;
            if (n == 0 || !seen.insert(n).second) {
                ok = false;
                why = "index " + std::to_string(n) + " invalid or repeated";
                break;
            }
            const u64 zn = n <= 256 ? mod_u64(ec::scalar_mul(Int(static_cast<unsigned long>(n)), c.point, c.curve).z, p)
                                    : zs[n - 1];
            const u64 u = u_square(c.spec, n, p);
            if (fold(zn, p) == fold(u, p)) {
                ok = false;
                why = "z_" + std::to_string(n) + " agrees with u_{n^2} up to sign";
            }
        }
        ck.add("mismatch_indices", ok, why);
    });
    return ck.result();
}

}  // namespace edslrs::refute
