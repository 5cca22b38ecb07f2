#include "cli/context.hpp"

#include "edslrs/error.hpp"
#include "edslrs/factor.hpp"
#include "edslrs/prooflab.hpp"

#include <fstream>
#include <random>
#include <sstream>

namespace edslrs::cli {

namespace {

using namespace edslrs::prooflab;

std::string pass(bool ok) { return ok ? "pass" : "FAIL"; }

RatMatrix parse_matrix(const std::string& text) {
    std::vector<std::vector<Rat>> rows;
    std::string chunk;
    std::istringstream all(text);
    while (std::getline(all, chunk, ';')) {
        std::istringstream line(chunk);
        std::vector<Rat> row;
        for (std::string tok; line >> tok;) row.push_back(parse_rat(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    require(!rows.empty(), "empty matrix");
    RatMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require(rows[i].size() == m.cols, "matrix row " + std::to_string(i) + " has the wrong length");
        for (std::size_t j = 0; j < m.cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Poly random_poly(std::mt19937_64& rng) {
    const std::size_t d = rng() % 5;
    std::vector<Rat> c;
    for (std::size_t i = 0; i <= d; ++i) {
        Rat v(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 6));
        v.canonicalize();
        c.push_back(v);
    }
    if (c.back() == 0) c.back() = 1;
    return Poly(c);
}

}  // namespace

void add_prooflab(CLI::App& app, Context& ctx) {
    auto* grp = app.add_subcommand("prooflab", "exact checks of the auxiliary lemmas");
    grp->require_subcommand(1);
    auto& l = ctx.loc;

    auto* ql = grp->add_subcommand("qlemma", "degree and leading coefficient of Q(X)");
    ql->add_option("--poly", l.poly, "coefficients of P, constant term first (comma separated)")->delimiter(',');
    ql->add_option("--alpha", l.alpha, "rational alpha");
    ql->add_option("--random", l.random, "check this many random (P, alpha) as well");
    ql->add_option("--rng-seed", l.rng_seed, "seed for --random");
    ql->callback([&ctx] {
        ctx.action = [&ctx] {
            const auto& l = ctx.loc;
            std::vector<std::pair<Poly, Rat>> cases;
            if (!l.poly.empty()) {
                std::vector<Rat> c;
                for (auto& t : l.poly) c.push_back(parse_rat(t));
                cases.emplace_back(Poly(c), parse_rat(l.alpha));
            }
            std::mt19937_64 rng(l.rng_seed);
            for (std::uint64_t i = 0; i < l.random; ++i) {
                Rat alpha(1 + static_cast<long>(rng() % 9), 1 + static_cast<long>(rng() % 5));
                alpha.canonicalize();
                if (rng() % 2) alpha = -alpha;
                cases.emplace_back(random_poly(rng), alpha);
            }
            require(!cases.empty(), "give --poly or --random");
            Report r;
            r.headers = {"P", "alpha", "deg Q", "8d-3", "lead Q", "-4d a0^4 alpha^3", "result"};
            nlohmann::json detail = nlohmann::json::array();
            bool all = true;
            for (auto& [p, alpha] : cases) {
                auto x = expand_q(p, alpha);
                all = all && x.matches;
                r.rows.push_back({p.to_string(), to_dec(alpha), std::to_string(x.degree),
                                  std::to_string(x.predicted_degree), to_dec(x.leading), to_dec(x.predicted_leading),
                                  pass(x.matches)});
                detail.push_back(to_json(x));
            }
            r.summary = {{"cases", std::to_string(cases.size())}, {"all_pass", yes_no(all)}};
            r.json = {{"all_pass", all}, {"cases", detail}};
            ctx.emit(r);
            return all ? 0 : 4;
        };
    });

    auto* det = grp->add_subcommand("det", "det(beta_j^u - 1) against the factored product");
    det->add_option("--betas", l.betas, "residues beta_1..beta_t (comma separated); omit for an exhaustive run")
        ->delimiter(',');
    det->add_option("--t-max", l.t_max, "largest t in the exhaustive run")->check(CLI::PositiveNumber);
    det->callback([&ctx] {
        ctx.action = [&ctx] {
            const auto& l = ctx.loc;
            require(ctx.cfg.q > 0, "--q is required");
            const std::uint64_t q = ctx.cfg.q;
            Report r;
            r.headers = {"betas", "det", "product", "sign", "admissible", "result"};
            auto row = [&](const DetIdentity& d) {
                std::string b;
                for (auto x : d.betas) b += (b.empty() ? "" : " ") + std::to_string(x);
                r.rows.push_back({b, to_dec(d.det), to_dec(d.product), std::to_string(d.sign), yes_no(d.admissible),
                                  pass(d.holds)});
            };
            if (!l.betas.empty()) {
                auto d = det_beta_identity(q, l.betas);
                row(d);
                r.summary = {{"q", std::to_string(q)}, {"expected_sign", std::to_string(d.expected_sign)}};
                r.json = to_json(d);
                ctx.emit(r);
                return d.holds ? 0 : 4;
            }
            std::uint64_t tuples = 0, admissible = 0, failures = 0;
            for (unsigned t = 1; t <= l.t_max; ++t) {
                std::vector<std::uint64_t> b(t, 0);
                for (;;) {
                    auto d = det_beta_identity(q, b);
                    ++tuples;
                    admissible += d.admissible;
                    const bool ok = d.holds && (!d.admissible || d.sign == d.expected_sign);
                    if (!ok) {
                        ++failures;
                        row(d);
                    }
                    std::size_t i = 0;
                    while (i < t && ++b[i] == q) b[i++] = 0;
                    if (i == t) break;
                }
            }
            r.summary = {{"q", std::to_string(q)},
                         {"t_max", std::to_string(l.t_max)},
                         {"tuples", std::to_string(tuples)},
                         {"admissible", std::to_string(admissible)},
                         {"failures", std::to_string(failures)}};
            r.json = {{"q", q}, {"t_max", l.t_max}, {"tuples", tuples}, {"admissible", admissible},
                      {"failures", failures}};
            ctx.emit(r);
            return failures ? 4 : 0;
        };
    });

    auto* rc = grp->add_subcommand("resclass", "I_r: residues n with every n^2 + j c a non-zero square mod r");
    rc->add_option("--r", l.r, "odd prime r");
    rc->add_option("--r-max", l.r_max, "every odd prime r <= r-max instead");
    rc->add_option("--t", l.t, "number of shifts");
    rc->add_option("--c", l.c, "shift unit c");
    rc->callback([&ctx] {
        ctx.action = [&ctx] {
            const auto& l = ctx.loc;
            const Int c = parse_int(l.c);
            std::vector<std::uint64_t> rs;
            if (l.r) rs.push_back(l.r);
            if (l.r_max) {
                require(l.r_max <= 10'000'000, "--r-max above 10^7 is not supported");
                for (auto r : nt::primes_up_to(static_cast<std::uint32_t>(l.r_max)))
                    if (r > 2 && r > l.t && c % r != 0) rs.push_back(r);
            }
            require(!rs.empty(), "give --r or --r-max");
            Report r;
            r.headers = {"r", "t", "I_r", "|2^t I_r - r|", "2t(sqrt r + 1)", "in band"};
            nlohmann::json detail = nlohmann::json::array();
            std::uint64_t outside = 0, empty = 0;
            for (auto rr : rs) {
                auto x = count_admissible_residues(rr, l.t, c);
                outside += !x.within_band;
                empty += x.count == 0;
                r.rows.push_back({std::to_string(rr), std::to_string(l.t), std::to_string(x.count), to_dec(x.deviation),
                                  std::to_string(x.band), yes_no(x.within_band)});
                detail.push_back(to_json(x));
            }
            r.summary = {{"primes", std::to_string(rs.size())},
                         {"outside_band", std::to_string(outside)},
                         {"zero_counts", std::to_string(empty)}};
            r.json = {{"primes", rs.size()}, {"outside_band", outside}, {"zero_counts", empty}, {"rows", detail}};
            ctx.emit(r);
            return 0;
        };
    });

    auto* ell = grp->add_subcommand("ell", "solve 2 l n0 + c l^2 = j mod r^e");
    ell->add_option("--r", l.r, "odd prime r")->required();
    ell->add_option("--e", l.e, "exponent")->check(CLI::PositiveNumber);
    ell->add_option("--n0", l.n0, "n0");
    ell->add_option("--j", l.j, "j");
    ell->add_option("--c", l.c, "c (coprime to r)");
    ell->callback([&ctx] {
        ctx.action = [&ctx] {
            const auto& l = ctx.loc;
            auto s = construct_ell(Int(static_cast<unsigned long>(l.r)), l.e, parse_int(l.n0), parse_int(l.j),
                                   parse_int(l.c));
            Report r;
            r.summary = {{"modulus", to_dec(s.modulus)}, {"discriminant", to_dec(s.discriminant)},
                         {"root", to_dec(s.root)},       {"ell", to_dec(s.ell)},
                         {"ell mod r", to_dec(s.base)},  {"substitution", "pass"}};
            r.json = to_json(s);
            ctx.emit(r);
            return 0;
        };
    });

    auto* fp = grp->add_subcommand("fixedpoint", "eigenvalue-1 eigenspace of a row-stochastic matrix");
    fp->add_option("--matrix", l.matrix, "rows separated by ';', entries by spaces, e.g. \"1/2 1/2; 1 0\"");
    fp->add_option("--matrix-file", l.matrix_file, "one row per line");
    fp->callback([&ctx] {
        ctx.action = [&ctx] {
            std::string text = ctx.loc.matrix;
            if (!ctx.loc.matrix_file.empty()) {
                std::ifstream in(ctx.loc.matrix_file);
                require(static_cast<bool>(in), "cannot open " + ctx.loc.matrix_file);
                for (std::string line; std::getline(in, line);) text += line + ";";
            }
            auto v = fixed_point_collision(parse_matrix(text));
            Report r;
            r.headers = {"basis vector"};
            for (auto& b : v.basis) {
                std::string s;
                for (auto& x : b) s += (s.empty() ? "" : " ") + to_dec(x);
                r.rows.push_back({s});
            }
            std::string pairs;
            for (auto& [i, j] : v.pairs) pairs += (pairs.empty() ? "" : " ") + ("(" + std::to_string(i) + "," + std::to_string(j) + ")");
            r.summary = {{"dimension", std::to_string(v.dimension)},
                         {"colliding_pairs", pairs.empty() ? "none" : pairs},
                         {"collision", pass(v.collision)}};
            r.json = to_json(v);
            ctx.emit(r);
            return v.collision ? 0 : 4;
        };
    });

    auto* ind = grp->add_subcommand("indep", "multiplicative independence of non-zero rationals");
    ind->add_option("--values", l.values, "rationals (comma separated)")->delimiter(',')->required();
    ind->callback([&ctx] {
        ctx.action = [&ctx] {
            std::vector<Rat> v;
            for (auto& s : ctx.loc.values) v.push_back(parse_rat(s));
            auto res = multiplicative_independence_check(v);
            Report r;
            std::string rel;
            for (auto& e : res.relation) rel += (rel.empty() ? "" : " ") + to_dec(e);
            r.summary = {{"status", to_string(res.status)}};
            if (!rel.empty()) r.summary.emplace_back("relation", rel);
            r.json = to_json(res);
            ctx.emit(r);
            return res.status == Independence::inconclusive ? 3 : 0;
        };
    });
}

}  // namespace edslrs::cli
