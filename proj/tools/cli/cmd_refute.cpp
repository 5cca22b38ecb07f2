#include "cli/context.hpp"

#include "edslrs/error.hpp"
#include "edslrs/refuter.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace edslrs::cli {

namespace {

std::string join(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

void write_atomically(const std::string& path, const std::string& text) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::trunc);
        require(static_cast<bool>(f), "cannot write " + tmp);
        f << text;
        require(static_cast<bool>(f), "write failed for " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

Report verify_report(const refute::VerifyResult& v) {
    Report r;
    r.headers = {"field", "ok", "detail"};
    nlohmann::json checks = nlohmann::json::array();
    for (auto& c : v.checks) {
        r.rows.push_back({c.field, c.ok ? "pass" : "FAIL", c.detail});
        checks.push_back({{"field", c.field}, {"ok", c.ok}, {"detail", c.detail}});
    }
    r.summary = {{"verdict", v.pass ? "pass" : "fail"}};
    r.json = {{"verdict", v.pass ? "pass" : "fail"}, {"checks", checks}, {"failed", v.failed_fields()}};
    return r;
}

}  // namespace

void add_refute(CLI::App& app, Context& ctx) {
    auto& l = ctx.loc;

    auto* ref = app.add_subcommand("refute", "search for a prime certifying that z_n is not u_{n^2} up to sign");
    ref->add_option("--out", l.out, "certificate path (default certificate.json)");
    ref->callback([&ctx] {
        ctx.action = [&ctx] {
            const auto& c = ctx.cfg;
            const auto e = ctx.curve();
            const auto pt = ctx.point();
            const auto spec = ctx.spec();
            const std::uint64_t q = c.q ? c.q : refute::default_q(e, spec, c.a);
            refute::WitnessOptions opt;
            opt.a = c.a;
            opt.exclude = c.exclude;
            opt.jobs = c.jobs;
            opt.horizon_cap = c.horizon_cap;
            const auto res = refute::find_witness(e, pt, spec, q, c.p_max, opt);

            Report r;
            r.headers = {"counter", "value"};
            nlohmann::json stats = nlohmann::json::object();
            for (auto& [k, v] : res.stats.as_map()) {
                r.rows.push_back({k, std::to_string(v)});
                stats[k] = v;
            }
            r.summary = {{"curve", e.to_string()}, {"point", pt.to_string()}, {"lrs", spec.to_string()},
                         {"q", std::to_string(q)},  {"a", std::to_string(c.a)},  {"p_max", std::to_string(c.p_max)}};
            r.json = {{"q", q}, {"a", c.a}, {"p_max", c.p_max}, {"stats", stats}};

            if (!res.certificate) {
                r.summary.emplace_back("result", "exhausted: no witness prime up to p_max");
                r.json["result"] = "exhausted";
                ctx.emit(r);
                return 3;
            }
            const auto& cert = *res.certificate;
            const auto check = refute::verify_certificate(cert);
            if (!check.pass) {
                *ctx.err << "error: freshly built certificate failed verification:";
                for (auto& f : check.failed_fields()) *ctx.err << ' ' << f;
                *ctx.err << '\n';
                return 4;
            }
            const std::string path = ctx.loc.out.empty() ? "certificate.json" : ctx.loc.out;
            write_atomically(path, refute::to_json(cert).dump(2) + "\n");
            r.summary.emplace_back("result", "witness");
            r.summary.emplace_back("p", std::to_string(cert.p));
            r.summary.emplace_back("T_z", std::to_string(cert.tz.value));
            r.summary.emplace_back("T_u", std::to_string(cert.tu.value));
            r.summary.emplace_back("mismatches", join(cert.mismatch_indices));
            r.summary.emplace_back("certificate", path);
            r.summary.emplace_back("verified", "yes");
            r.json["result"] = "witness";
            r.json["certificate_path"] = path;
            r.json["certificate"] = refute::to_json(cert);
            ctx.emit(r);
            return 0;
        };
    });

    auto* ver = app.add_subcommand("verify", "re-check a witness certificate from scratch");
    ver->add_option("certificate", l.cert, "certificate JSON file")->required();
    ver->callback([&ctx] {
        ctx.action = [&ctx] {
            std::ifstream in(ctx.loc.cert);
            require(static_cast<bool>(in), "cannot open " + ctx.loc.cert);
            nlohmann::json j;
            try {
                j = nlohmann::json::parse(in);
            } catch (const nlohmann::json::parse_error& e) {
                fail(ErrorKind::invalid_input, std::string("not valid JSON: ") + e.what());
            }
            refute::WitnessCertificate cert;
            try {
                cert = refute::certificate_from_json(j);
            } catch (const Error& e) {
                refute::VerifyResult bad;
                bad.pass = false;
                bad.checks.push_back({"schema", false, e.what()});
                ctx.emit(verify_report(bad));
                return 4;
            }
            const auto v = refute::verify_certificate(cert);
            ctx.emit(verify_report(v));
            return v.pass ? 0 : 4;
        };
    });

    auto* fal = app.add_subcommand("falsify", "indices n >= --from in a window where z_n differs from +-u_{n^2} mod p");
    fal->add_option("--p", l.p, "prime of good reduction")->required()->check(CLI::PositiveNumber);
    fal->add_option("--from", l.from, "first index checked")->check(CLI::PositiveNumber);
    fal->add_option("--window", l.window, "number of indices checked")->check(CLI::PositiveNumber);
    fal->callback([&ctx] {
        ctx.action = [&ctx] {
            const auto& l = ctx.loc;
            const auto spec = ctx.spec();
            const auto hits = refute::direct_falsify(ctx.curve(), ctx.point(), spec, l.from, l.p, l.window);
            Report r;
            r.summary = {{"p", std::to_string(l.p)},
                         {"window", std::to_string(l.from) + ".." + std::to_string(l.from + l.window - 1)},
                         {"mismatches", std::to_string(hits.size())},
                         {"indices", hits.empty() ? "none" : join(hits)}};
            r.json = {{"p", l.p}, {"from", l.from}, {"window", l.window}, {"indices", hits}};
            ctx.emit(r);
            return hits.empty() ? 3 : 0;
        };
    });
}

}  // namespace edslrs::cli
