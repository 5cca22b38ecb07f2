#include "edslrs/refuter.hpp"

#include "edslrs/eds.hpp"
#include "edslrs/error.hpp"
#include "edslrs/factor.hpp"
#include "edslrs/modular.hpp"
#include "edslrs/parallel.hpp"

#include <algorithm>

namespace edslrs::refute {

using mod::u64;

namespace {

enum class Outcome { certified, trace_mismatch, order_not_divisible, period_unconfirmed, q_divides_tu, few_mismatches };

struct Evaluation {
    Outcome outcome = Outcome::trace_mismatch;
    WitnessCertificate cert;
};

bool agrees(u64 z, u64 u, u64 p) { return z == u || mod::add(z, u, p) == 0; }

void check_q(const lrs::LrsSpec& spec, u64 q, u64 a) {
    require(nt::is_prime_u64(q), "q must be prime");
    require(mod_u64(spec.coeffs.back(), q) != 0, "q divides c_k");
    const u64 b = (a % q + q - 1) % q;
    require(a % q != 0 && b != 0, "need a != 0, 1 (mod q)");
    u64 pw = 1;
    for (std::size_t j = 1; j <= spec.order(); ++j) {
        pw = pw * b % q;
        require(pw != 1, "(a-1)^" + std::to_string(j) + " = 1 (mod q): q could divide lcm{p^j - 1}");
    }
}

Evaluation evaluate(const ec::CurveQ& e, const ec::PointQ& pt, const lrs::LrsSpec& spec, u64 q, u64 p,
                    const WitnessOptions& opt) {
    Evaluation ev;
    auto ef = ec::reduce(e, p);
    auto cnt = ec::count_points(ef);
    const auto sq = static_cast<std::int64_t>(q);
    if (((cnt.ap % sq) + sq) % sq != static_cast<std::int64_t>(opt.a % q)) return ev;
    const u64 ord = ec::point_order_fp(ec::reduce(pt, ef), ef, cnt.order);
    if (ord % q != 0) {
        ev.outcome = Outcome::order_not_divisible;
        return ev;
    }
    eds::PeriodOptions po;
    po.horizon_cap = opt.horizon_cap;
    auto tz = eds::eds_period_mod_p(e, pt, p, po);
    lrs::SquarePeriod tu;
    try {
        tu = lrs::square_sampled_period(spec, p);
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::unconfirmed) throw;
        ev.outcome = Outcome::period_unconfirmed;
        return ev;
    }
    if (tz.status != eds::PeriodStatus::confirmed) {
        ev.outcome = Outcome::period_unconfirmed;
        return ev;
    }
    if (tu.period % q == 0) {
        ev.outcome = Outcome::q_divides_tu;
        return ev;
    }
    auto z = eds::geometric_mod_p(e, pt, p, opt.mismatch_window);
    std::vector<u64> mism;
    for (u64 n = 1; n <= opt.mismatch_window && mism.size() < opt.mismatch_count; ++n) {
        const u64 u = lrs::eval_mod(spec, Int(static_cast<unsigned long>(n)) * static_cast<unsigned long>(n), p);
        if (!agrees(z[n - 1], u, p)) mism.push_back(n);
    }
    if (mism.size() < opt.mismatch_count) {
        ev.outcome = Outcome::few_mismatches;
        return ev;
    }
    ev.outcome = Outcome::certified;
    auto& c = ev.cert;
    c.curve = e;
    c.point = pt;
    c.spec = spec;
    c.q = q;
    c.a = opt.a;
    c.p = p;
    c.ap = cnt.ap;
    c.group_order = cnt.order;
    c.ord_p = ord;
    c.tz = {tz.period, tz.window_end};
    c.tu = {tu.period, tu.window_end};
    c.q_divides_tz = tz.period % q == 0;
    c.q_divides_tu = false;
    c.mismatch_indices = std::move(mism);
    if (!c.q_divides_tz) fail(ErrorKind::internal, "q | ord_P but q does not divide T_z at p = " + std::to_string(p));
    return ev;
}

}  // namespace

u64 default_q(const ec::CurveQ& e, const lrs::LrsSpec& spec, u64 a) {
    for (u64 q = nt::next_prime(spec.order()); q < 100000; q = nt::next_prime(q)) {
        if (mod_u64(spec.coeffs.back() * e.disc(), q) == 0) continue;
        try {
            check_q(spec, q, a);
            return q;
        } catch (const Error&) {
        }
    }
    fail(ErrorKind::invalid_input, "no admissible auxiliary prime q below 100000");
}

WitnessResult find_witness(const ec::CurveQ& e, const ec::PointQ& pt, const lrs::LrsSpec& spec, u64 q, u64 p_max,
                           const WitnessOptions& opt) {
    lrs::validate(spec);
    require(!pt.infinity && ec::on_curve(e, pt), "point must lie on the curve");
    if (ec::is_torsion(pt, e).torsion) fail(ErrorKind::torsion_point, "the point must have infinite order");
    if (lrs::is_degenerate(spec).degenerate)
        fail(ErrorKind::degenerate, "degenerate recurrence: apply nondegenerate_reduction (lrs degenerate) first");
    require(opt.a >= 2, "a must be at least 2");
    check_q(spec, q, opt.a);
    require(p_max >= 3 && p_max < (u64{1} << 31), "p_max out of range");
    if (auto bad = ec::singular_reduction_primes(e, pt); !bad.empty())
        fail(ErrorKind::bad_reduction, "point is singular modulo " + to_dec(bad.front()) + "; try --stride " +
                                           std::to_string(eds::suggest_stride(e, pt)));

    const u64 b = (opt.a % q + q - 1) % q;
    const Int bad = e.disc() * pt.z * spec.coeffs.back();
    WitnessResult res;
    res.p_max = p_max;
    const auto primes = nt::primes_up_to(static_cast<std::uint32_t>(p_max));

    // Cheap filters are sequential; survivors go through in ascending batches.
    std::vector<u64> candidates;
    std::vector<ScanStats> cheap_prefix;  // stats for primes before each candidate
    ScanStats cheap;
    for (u64 p : primes) {
        ++cheap.primes_seen;
        if (p % q != b) {
            ++cheap.wrong_residue;
        } else if (p == 2 || p == q || mod_u64(bad, p) == 0) {
            ++cheap.bad_prime;
        } else if (std::find(opt.exclude.begin(), opt.exclude.end(), p) != opt.exclude.end()) {
            ++cheap.excluded;
        } else {
            candidates.push_back(p);
            cheap_prefix.push_back(cheap);
        }
    }
    const std::size_t batch = std::max<std::size_t>(8, 4 * std::size_t{std::max(1u, opt.jobs)});
    ScanStats expensive;
    for (std::size_t start = 0; start < candidates.size(); start += batch) {
        const std::size_t len = std::min(batch, candidates.size() - start);
        std::vector<Evaluation> evs(len);
        parallel_strided(opt.jobs, len,
                         [&](unsigned, std::size_t i) { evs[i] = evaluate(e, pt, spec, q, candidates[start + i], opt); });
        // Barrier passed: the smallest certified prime wins regardless of completion order.
        for (std::size_t i = 0; i < len; ++i) {
            switch (evs[i].outcome) {
                case Outcome::certified: {
                    res.stats = cheap_prefix[start + i];
                    res.stats.trace_mismatch = expensive.trace_mismatch;
                    res.stats.order_not_divisible = expensive.order_not_divisible;
                    res.stats.period_unconfirmed = expensive.period_unconfirmed;
                    res.stats.q_divides_tu = expensive.q_divides_tu;
                    res.stats.too_few_mismatches = expensive.too_few_mismatches;
                    res.certificate = std::move(evs[i].cert);
                    return res;
                }
                case Outcome::trace_mismatch: ++expensive.trace_mismatch; break;
                case Outcome::order_not_divisible: ++expensive.order_not_divisible; break;
                case Outcome::period_unconfirmed: ++expensive.period_unconfirmed; break;
                case Outcome::q_divides_tu: ++expensive.q_divides_tu; break;
                case Outcome::few_mismatches: ++expensive.too_few_mismatches; break;
            }
        }
    }
    res.stats = cheap;
    res.stats.trace_mismatch = expensive.trace_mismatch;
    res.stats.order_not_divisible = expensive.order_not_divisible;
    res.stats.period_unconfirmed = expensive.period_unconfirmed;
    res.stats.q_divides_tu = expensive.q_divides_tu;
    res.stats.too_few_mismatches = expensive.too_few_mismatches;
    return res;
}

std::vector<u64> falsify_streams(const std::vector<u64>& z, const std::vector<u64>& v, u64 p, u64 begin) {
    require(z.size() == v.size(), "streams must have equal length");
    std::vector<u64> out;
    for (std::size_t i = 0; i < z.size(); ++i)
        if (!agrees(z[i] % p, v[i] % p, p)) out.push_back(begin + i);
    return out;
}

std::vector<u64> direct_falsify(const ec::CurveQ& e, const ec::PointQ& pt, const lrs::LrsSpec& spec, u64 n_claim,
                                u64 p, u64 window) {
    require(nt::is_prime_u64(p), "p must be prime");
    require(ec::reduce(e, p).good_reduction, "p must be a prime of good reduction");
    require(n_claim >= 1, "threshold index starts at 1");
    auto all = eds::geometric_mod_p(e, pt, p, n_claim + window - 1);
    std::vector<u64> z(all.begin() + static_cast<std::ptrdiff_t>(n_claim - 1), all.end()), v;
    for (u64 n = n_claim; n < n_claim + window; ++n)
        v.push_back(lrs::eval_mod(spec, Int(static_cast<unsigned long>(n)) * static_cast<unsigned long>(n), p));
    return falsify_streams(z, v, p, n_claim);
}

}  // namespace edslrs::refute
