#include "cli/context.hpp"

#include "edslrs/density.hpp"
#include "edslrs/error.hpp"

namespace edslrs::cli {

namespace {

Report density_report(const density::DensityReport& d) {
    Report r;
    r.summary = {{"kind", d.kind == density::Kind::gl2 ? "gl2" : "affine"},
                 {"q", std::to_string(d.q)},
                 {"a", std::to_string(d.a)},
                 {"b", std::to_string(d.b)},
                 {"count", to_dec(d.numerator) + "/" + to_dec(d.denominator)},
                 {"delta", to_dec(d.delta)}};
    if (d.empirical) {
        const auto& em = *d.empirical;
        r.summary.emplace_back("x", std::to_string(em.x));
        r.summary.emplace_back("hits", std::to_string(em.hits));
        r.summary.emplace_back("scanned", std::to_string(em.scanned));
        r.summary.emplace_back("empirical", em.scanned ? std::to_string(double(em.hits) / double(em.scanned)) : "-");
        r.summary.emplace_back("predicted", std::to_string(d.delta.get_d()));
        if (em.small_sample) r.summary.emplace_back("note", "small sample");
    }
    r.json = density::to_json(d);
    return r;
}

}  // namespace

void add_density(CLI::App& app, Context& ctx) {
    auto* grp = app.add_subcommand("density", "Chebotarev-type densities");
    grp->require_subcommand(1);
    auto& l = ctx.loc;

    auto* gl2 = grp->add_subcommand("gl2", "share of GL2(F_q) with trace a and determinant b");
    gl2->add_option("--b", l.b, "determinant class");
    gl2->add_option("--cap", l.cap, "largest q enumerated");
    gl2->callback([&ctx] {
        ctx.action = [&ctx] {
            require(ctx.cfg.q > 0, "--q is required");
            auto d = density::count_gl2(ctx.cfg.q, ctx.cfg.a, ctx.loc.b, ctx.loc.cap ? ctx.loc.cap : 31, ctx.cfg.jobs);
            ctx.emit(density_report(d));
            return 0;
        };
    });

    auto* aff = grp->add_subcommand("affine", "affine pairs (J, u) with tr J = a, det J = b, u in the image of J - I");
    aff->add_option("--b", l.b, "determinant class");
    aff->add_option("--cap", l.cap, "largest q enumerated");
    aff->callback([&ctx] {
        ctx.action = [&ctx] {
            require(ctx.cfg.q > 0, "--q is required");
            auto d = density::count_affine(ctx.cfg.q, ctx.cfg.a, ctx.loc.b, ctx.loc.cap ? ctx.loc.cap : 13,
                                           ctx.cfg.jobs);
            ctx.emit(density_report(d));
            return 0;
        };
    });

    auto* emp = grp->add_subcommand("empirical", "observed prime share next to the predicted density");
    emp->add_option("--x", l.x, "scan primes up to x")->check(CLI::PositiveNumber);
    emp->add_option("--cap", l.cap, "largest q for the affine prediction");
    emp->callback([&ctx] {
        ctx.action = [&ctx] {
            require(ctx.cfg.q > 0, "--q is required");
            density::ScanOptions opt;
            opt.exclude = ctx.cfg.exclude;
            opt.jobs = ctx.cfg.jobs;
            if (ctx.loc.cap) opt.affine_cap = ctx.loc.cap;
            auto d = density::empirical_density(ctx.curve(), ctx.point(), ctx.cfg.q, ctx.cfg.a, ctx.loc.x, opt);
            ctx.emit(density_report(d));
            return 0;
        };
    });
}

}  // namespace edslrs::cli
