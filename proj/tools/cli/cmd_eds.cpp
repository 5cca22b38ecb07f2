#include "cli/context.hpp"

#include "edslrs/error.hpp"
#include "edslrs/factor.hpp"

#include <cmath>
#include <filesystem>
#include <sstream>

namespace edslrs::cli {

namespace {

std::string log_ratio(const Int& v, std::size_t n) {
    if (v == 0) return "-";
    // log|v| from mantissa and exponent so huge terms do not overflow
    long exp = 0;
    const double m = mpz_get_d_2exp(&exp, v.get_mpz_t());
    const double l = std::log(std::fabs(m)) + static_cast<double>(exp) * std::log(2.0);
    std::ostringstream s;
    s.precision(6);
    s << l / static_cast<double>(n * n);
    return s.str();
}

Report sequence_report(const eds::EdsSequence& seq, bool with_growth) {
    Report r;
    r.headers = {"n", "z_n"};
    if (with_growth) r.headers.push_back("log|z_n|/n^2");
    nlohmann::json terms = nlohmann::json::array();
    for (std::size_t n = 1; n <= seq.size(); ++n) {
        std::vector<std::string> row{std::to_string(n), to_dec(seq.at(n))};
        if (with_growth) row.push_back(log_ratio(seq.at(n), n));
        r.rows.push_back(row);
        terms.push_back(to_dec(seq.at(n)));
    }
    r.json["terms"] = terms;
    r.json["first_zero"] = seq.first_zero;
    return r;
}

std::string divisor_flags(const eds::PeriodReport& rep) {
    return yes_no(rep.divides_2_pm2_order) + "/" + yes_no(rep.divides_pm1_order);
}

}  // namespace

void add_eds(CLI::App& app, Context& ctx) {
    auto* eds = app.add_subcommand("eds", "elliptic divisibility sequences");
    eds->require_subcommand(1);

    auto* gen = eds->add_subcommand("gen", "exact terms of the EDS attached to (E, P)");
    gen->callback([&ctx] {
        ctx.action = [&ctx] {
            const auto& c = ctx.cfg;
            const auto e = ctx.curve();
            auto p = ctx.point();
            if (c.stride > 1) p = ec::scalar_mul(Int(c.stride), p, e);
            bool hit = false;
            eds::EdsSequence seq;
            try {
                eds::SequenceCache cache(c.cache_dir.empty() ? eds::SequenceCache::default_root()
                                                             : std::filesystem::path(c.cache_dir));
                seq = eds::generate_geometric_cached(e, p, c.n, cache, &hit);
            } catch (const std::filesystem::filesystem_error& fe) {
                *ctx.err << "warning: cache unavailable (" << fe.what() << ")\n";
                seq = eds::generate_geometric(e, p, c.n);
            }
            Report r = sequence_report(seq, true);
            const auto h = ec::canonical_height_estimate(p, e, static_cast<unsigned>(std::min<std::uint64_t>(c.n, 40)));
            r.summary = {{"curve", e.to_string()},
                         {"point", p.to_string()},
                         {"terms", std::to_string(seq.size())},
                         {"cache", hit ? "hit" : "miss"},
                         {"height_estimate", std::to_string(h.last)},
                         {"height_gap", std::to_string(h.convergence_gap)}};
            r.json["curve"] = e.to_string();
            r.json["point"] = p.to_string();
            r.json["cache"] = hit ? "hit" : "miss";
            r.json["height_estimate"] = h.last;
            ctx.emit(r);
            return 0;
        };
    });

    auto* ward = eds->add_subcommand("ward", "terms from a Ward seed, or the stride-m seed of (E, P)");
    ward->callback([&ctx] {
        ctx.action = [&ctx] {
            const auto& c = ctx.cfg;
            if (!c.seed.empty()) {
                auto seq = eds::generate_ward(ctx.seed(), c.n);
                Report r = sequence_report(seq, false);
                r.summary = {{"seed", c.seed[0] + " " + c.seed[1] + " " + c.seed[2] + " " + c.seed[3]},
                             {"terms", std::to_string(seq.size())}};
                if (seq.first_zero) r.summary.emplace_back("first_zero", std::to_string(seq.first_zero));
                ctx.emit(r);
                return 0;
            }
            const auto w = eds::ward_consistency(ctx.curve(), ctx.point(), c.stride, c.n);
            auto seq = eds::generate_ward(w.seed, c.n);
            Report r = sequence_report(seq, false);
            r.headers.push_back("sign vs z_{mn}");
            for (std::size_t i = 0; i < r.rows.size(); ++i)
                r.rows[i].push_back(i < w.signs.size() ? std::to_string(w.signs[i]) : "-");
            r.summary = {{"stride", std::to_string(w.stride)},
                         {"seed", to_dec(w.seed.w1) + " " + to_dec(w.seed.w2) + " " + to_dec(w.seed.w3) + " " +
                                      to_dec(w.seed.w4)},
                         {"matches_up_to_sign", yes_no(w.matches_up_to_sign)}};
            r.json["stride"] = w.stride;
            r.json["matches_up_to_sign"] = w.matches_up_to_sign;
            r.json["signs"] = w.signs;
            ctx.emit(r);
            return w.matches_up_to_sign ? 0 : 4;
        };
    });

    auto* period = eds->add_subcommand("period", "period of z_n mod p (every good p <= --p-max without --p)");
    period->add_option("--p", ctx.loc.primes, "primes (comma separated)")->delimiter(',');
    period->callback([&ctx] {
        ctx.action = [&ctx] {
            const auto& c = ctx.cfg;
            eds::PeriodOptions opt;
            opt.horizon_cap = c.horizon_cap;
            std::vector<std::uint64_t> primes = ctx.loc.primes;
            std::optional<ec::CurveQ> e;
            std::optional<ec::PointQ> pt;
            std::optional<eds::WardSeed> seed;
            if (!c.seed.empty()) seed = ctx.seed();
            else e = ctx.curve(), pt = ctx.point();
            if (e && c.stride > 1) pt = ec::scalar_mul(Int(c.stride), *pt, *e);
            const bool listed = !primes.empty();
            if (!listed) {
                require(c.p_max <= 100'000, "period scan: --p-max above 100000 is not supported");
                for (auto p : nt::primes_up_to(static_cast<std::uint32_t>(c.p_max))) {
                    if (p == 2) continue;
                    if (std::find(c.exclude.begin(), c.exclude.end(), p) != c.exclude.end()) continue;
                    if (e) {
                        if (!ec::reduce(*e, p).good_reduction) continue;
                        if (pt->z % p == 0) continue;
                    }
                    primes.push_back(p);
                }
            }
            Report r;
            r.headers = {"p", "status", "T_z", "signed", "#E", "a_p", "ord_P", "rank", "window", "2(p-2)#E/(p-1)#E"};
            bool all_confirmed = true;
            nlohmann::json rows = nlohmann::json::array();
            for (auto p : primes) {
                auto rep = e ? eds::eds_period_mod_p(*e, *pt, p, opt) : eds::eds_period_mod_p(*seed, p, opt);
                all_confirmed = all_confirmed && rep.status == eds::PeriodStatus::confirmed;
                r.rows.push_back({std::to_string(p), eds::to_string(rep.status), std::to_string(rep.period),
                                  std::to_string(rep.signed_period), std::to_string(rep.group_order),
                                  std::to_string(rep.ap), std::to_string(rep.point_order), std::to_string(rep.rank),
                                  std::to_string(rep.window_end), divisor_flags(rep)});
                rows.push_back({{"p", p},
                                {"status", eds::to_string(rep.status)},
                                {"period", rep.period},
                                {"signed_period", rep.signed_period},
                                {"window", {1, rep.window_end}},
                                {"horizon", rep.horizon},
                                {"rank", rep.rank},
                                {"group_order", rep.group_order},
                                {"ap", rep.ap},
                                {"point_order", rep.point_order},
                                {"divides_2_pm2_order", rep.divides_2_pm2_order},
                                {"divides_pm1_order", rep.divides_pm1_order}});
            }
            r.summary = {{"primes", std::to_string(primes.size())}, {"all_confirmed", yes_no(all_confirmed)}};
            r.json = {{"primes", primes.size()}, {"all_confirmed", all_confirmed}, {"rows", rows}};
            ctx.emit(r);
            return all_confirmed ? 0 : 3;
        };
    });

    auto* zs = eds->add_subcommand("zsigmondy", "primitive prime divisors of z_n");
    zs->callback([&ctx] {
        ctx.action = [&ctx] {
            const auto& c = ctx.cfg;
            auto seq = c.seed.empty() ? eds::generate_geometric(ctx.curve(), ctx.point(), c.n)
                                      : eds::generate_ward(ctx.seed(), c.n);
            auto scan = eds::primitive_divisor_scan(seq);
            Report r;
            r.headers = {"n", "primitive", "new primes", "note"};
            nlohmann::json rows = nlohmann::json::array();
            for (auto& row : scan.rows) {
                std::string primes;
                nlohmann::json pj = nlohmann::json::array();
                for (auto& p : row.primes) {
                    primes += (primes.empty() ? "" : " ") + to_dec(p);
                    pj.push_back(to_dec(p));
                }
                const std::string note = row.zero_term ? "zero term" : row.incomplete ? "factorization incomplete" : "";
                r.rows.push_back({std::to_string(row.n), yes_no(row.has_primitive), primes, note});
                rows.push_back({{"n", row.n},
                                {"primitive", row.has_primitive},
                                {"primes", pj},
                                {"incomplete", row.incomplete},
                                {"zero_term", row.zero_term}});
            }
            std::string lacking;
            for (auto n : scan.lacking) lacking += (lacking.empty() ? "" : " ") + std::to_string(n);
            r.summary = {{"terms", std::to_string(seq.size())},
                         {"lacking", lacking.empty() ? "none" : lacking},
                         {"largest_prime", to_dec(scan.largest_prime)}};
            r.json = {{"rows", rows}, {"lacking", scan.lacking}, {"largest_prime", to_dec(scan.largest_prime)}};
            ctx.emit(r);
            return 0;
        };
    });
}

}  // namespace edslrs::cli
