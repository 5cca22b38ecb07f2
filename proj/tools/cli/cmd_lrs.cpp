#include "cli/context.hpp"

#include "edslrs/error.hpp"

#include <fstream>

namespace edslrs::cli {

namespace {

nlohmann::json spec_json(const lrs::LrsSpec& s) {
    nlohmann::json c = nlohmann::json::array(), u = nlohmann::json::array();
    for (auto& x : s.coeffs) c.push_back(to_dec(x));
    for (auto& x : s.initial) u.push_back(to_dec(x));
    return {{"order", s.order()}, {"coeffs", c}, {"initial", u}, {"text", s.to_string()}};
}

std::vector<Int> gather_terms(const Context& ctx) {
    const auto& l = ctx.loc;
    std::vector<Int> terms;
    if (!l.terms_file.empty()) {
        std::ifstream in(l.terms_file);
        require(static_cast<bool>(in), "cannot open " + l.terms_file);
        return lrs::read_terms(in);
    }
    if (!l.terms.empty()) {
        for (auto& t : l.terms) terms.push_back(parse_int(t));
        return terms;
    }
    if (!ctx.cfg.seed.empty()) return eds::generate_ward(ctx.seed(), ctx.cfg.n).terms;
    if (ctx.has_geometric()) return eds::generate_geometric(ctx.curve(), ctx.point(), ctx.cfg.n).terms;
    fail(ErrorKind::invalid_input, "give --terms, --terms-file, or an EDS source");
}

}  // namespace

void add_lrs(CLI::App& app, Context& ctx) {
    auto* grp = app.add_subcommand("lrs", "linear recurrence sequences");
    grp->require_subcommand(1);
    auto& l = ctx.loc;

    auto* fit = grp->add_subcommand("fit", "minimal integer recurrence through given terms");
    fit->add_option("--terms", l.terms, "terms u_1, u_2, ... (comma separated)")->delimiter(',');
    fit->add_option("--terms-file", l.terms_file, "one term per line");
    fit->add_option("--bound", l.bound, "largest order tried")->check(CLI::PositiveNumber);
    fit->callback([&ctx] {
        ctx.action = [&ctx] {
            const auto terms = gather_terms(ctx);
            const auto res = lrs::fit_minimal_recurrence(terms, ctx.loc.bound);
            Report r;
            r.summary = {{"terms", std::to_string(terms.size())},
                         {"bound", std::to_string(ctx.loc.bound)},
                         {"found", yes_no(res.found)}};
            r.json = {{"terms", terms.size()}, {"bound", ctx.loc.bound}, {"found", res.found},
                      {"diagnostic", res.diagnostic}};
            if (res.found) {
                r.summary.emplace_back("spec", res.spec.to_string());
                r.json["spec"] = spec_json(res.spec);
            }
            if (!res.diagnostic.empty()) r.summary.emplace_back("diagnostic", res.diagnostic);
            if (!res.rational_coeffs.empty()) {
                std::string rc;
                nlohmann::json rj = nlohmann::json::array();
                for (auto& x : res.rational_coeffs) {
                    rc += (rc.empty() ? "" : " ") + to_dec(x);
                    rj.push_back(to_dec(x));
                }
                r.summary.emplace_back("rational_coeffs", rc);
                r.json["rational_coeffs"] = rj;
            }
            ctx.emit(r);
            return res.found ? 0 : 3;
        };
    });

    auto* eval = grp->add_subcommand("eval", "u_n exactly or mod p, or the first --count terms");
    eval->add_option("--index", l.index, "index n (decimal, may be huge when --p is given)");
    eval->add_option("--count", l.count, "list u_1..u_count");
    eval->add_option("--p", l.p, "prime modulus");
    eval->callback([&ctx] {
        ctx.action = [&ctx] {
            const auto s = ctx.spec();
            const auto& l = ctx.loc;
            Report r;
            r.summary = {{"spec", s.to_string()}};
            if (l.count > 0) {
                r.headers = {"n", "u_n"};
                auto terms = lrs::generate(s, l.count);
                nlohmann::json tj = nlohmann::json::array();
                for (std::size_t i = 0; i < terms.size(); ++i) {
                    std::string v = l.p ? std::to_string(lrs::eval_mod(s, Int(static_cast<unsigned long>(i + 1)), l.p))
                                        : to_dec(terms[i]);
                    r.rows.push_back({std::to_string(i + 1), v});
                    tj.push_back(v);
                }
                r.json = {{"spec", spec_json(s)}, {"terms", tj}};
                if (l.p) r.json["p"] = l.p;
            } else {
                require(!l.index.empty(), "give --index or --count");
                const Int n = parse_int(l.index);
                require(n >= 1, "--index must be positive");
                std::string v;
                if (l.p) {
                    v = std::to_string(lrs::eval_mod(s, n, l.p));
                } else {
                    require(n <= 1'000'000, "exact evaluation limited to n <= 10^6; pass --p");
                    v = to_dec(lrs::eval_exact(s, n.get_ui()));
                }
                r.summary.emplace_back("n", to_dec(n));
                if (l.p) r.summary.emplace_back("p", std::to_string(l.p));
                r.summary.emplace_back("u_n", v);
                r.json = {{"spec", spec_json(s)}, {"n", to_dec(n)}, {"value", v}};
                if (l.p) r.json["p"] = l.p;
            }
            ctx.emit(r);
            return 0;
        };
    });

    auto* dec = grp->add_subcommand("decimate", "recurrence satisfied by u_{mn}");
    dec->add_option("--m", l.m, "decimation factor")->check(CLI::PositiveNumber);
    dec->callback([&ctx] {
        ctx.action = [&ctx] {
            const auto s = ctx.spec();
            const auto d = lrs::decimate(s, ctx.loc.m);
            Report r;
            r.summary = {{"spec", s.to_string()}, {"m", std::to_string(ctx.loc.m)}, {"decimated", d.to_string()}};
            r.json = {{"spec", spec_json(s)}, {"m", ctx.loc.m}, {"decimated", spec_json(d)}};
            ctx.emit(r);
            return 0;
        };
    });

    auto* deg = grp->add_subcommand("degenerate", "root-of-unity ratio test and non-degenerate reduction");
    deg->callback([&ctx] {
        ctx.action = [&ctx] {
            const auto s = ctx.spec();
            const auto rep = lrs::is_degenerate(s);
            Report r;
            std::string orders;
            for (auto o : rep.all_orders) orders += (orders.empty() ? "" : " ") + std::to_string(o);
            r.summary = {{"spec", s.to_string()},
                         {"minimal_order", std::to_string(rep.minimal_order)},
                         {"degenerate", yes_no(rep.degenerate)},
                         {"root_of_unity_orders", orders.empty() ? "none" : orders},
                         {"ratio_poly", rep.ratio_poly.to_string()}};
            r.json = {{"spec", spec_json(s)},
                      {"minimal_order", rep.minimal_order},
                      {"degenerate", rep.degenerate},
                      {"orders", rep.all_orders},
                      {"ratio_poly", rep.ratio_poly.to_string()}};
            if (rep.degenerate) {
                const auto red = lrs::nondegenerate_reduction(s);
                r.summary.emplace_back("M", std::to_string(red.m));
                r.summary.emplace_back("reduced", red.spec.to_string());
                r.json["M"] = red.m;
                r.json["reduced"] = spec_json(red.spec);
            }
            ctx.emit(r);
            return 0;
        };
    });

    auto* per = grp->add_subcommand("period", "period of u_n and of u_{n^2} mod p");
    per->add_option("--p", l.p, "prime modulus")->required()->check(CLI::PositiveNumber);
    per->callback([&ctx] {
        ctx.action = [&ctx] {
            const auto s = ctx.spec();
            const auto p = ctx.loc.p;
            const auto base = lrs::lrs_period_mod_p(s, p);
            Report r;
            r.summary = {{"spec", s.to_string()}, {"p", std::to_string(p)}, {"period", to_dec(base.period)},
                         {"window_verified", yes_no(base.window_verified)}};
            r.json = {{"spec", spec_json(s)}, {"p", p}, {"period", to_dec(base.period)},
                      {"window_verified", base.window_verified}};
            try {
                const auto sq = lrs::square_sampled_period(s, p);
                r.summary.emplace_back("T_u", std::to_string(sq.period));
                r.summary.emplace_back("T_u_window", "1.." + std::to_string(sq.window_end));
                r.json["T_u"] = {{"value", std::to_string(sq.period)},
                                 {"window", {"1", std::to_string(sq.window_end)}}};
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::unconfirmed) throw;
                r.summary.emplace_back("T_u", std::string("unconfirmed: ") + e.what());
                r.json["T_u"] = nullptr;
            }
            ctx.emit(r);
            return 0;
        };
    });
}

}  // namespace edslrs::cli
