#include "cli/cli.hpp"

#include "cli/context.hpp"
#include "edslrs/error.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>

namespace edslrs::cli {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

ec::CurveQ Context::curve() const {
    if (!cfg.input.empty()) {
        std::ifstream in(cfg.input);
        require(static_cast<bool>(in), "cannot open input file " + cfg.input);
        auto cp = ec::read_curve_point(in);
        require(cp.curve.has_value(), "input file has no `curve` record");
        return *cp.curve;
    }
    require(cfg.curve.size() == 2, "--curve A B is required");
    return ec::parse_curve(cfg.curve[0], cfg.curve[1]);
}

ec::PointQ Context::point() const {
    if (!cfg.input.empty() && cfg.point.empty()) {
        std::ifstream in(cfg.input);
        auto cp = ec::read_curve_point(in);
        require(cp.point.has_value(), "input file has no `point` record");
        return *cp.point;
    }
    require(cfg.point.size() == 3, "--point x y z is required");
    return ec::make_point(curve(), parse_int(cfg.point[0]), parse_int(cfg.point[1]), parse_int(cfg.point[2]));
}

eds::WardSeed Context::seed() const {
    require(cfg.seed.size() == 4, "--seed w1 w2 w3 w4 is required");
    eds::WardSeed s{parse_int(cfg.seed[0]), parse_int(cfg.seed[1]), parse_int(cfg.seed[2]), parse_int(cfg.seed[3])};
    eds::validate_seed(s);
    return s;
}

lrs::LrsSpec Context::spec() const {
    require(!cfg.lrs.empty(), "--lrs \"k c1..ck u1..uk\" is required");
    std::string line;
    for (auto& t : cfg.lrs) line += t + " ";
    std::replace(line.begin(), line.end(), ',', ' ');
    if (line.rfind("lrs", 0) != 0) line = "lrs " + line;
    return lrs::parse_spec(line);
}

namespace {

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

nlohmann::json default_json(const Report& r) {
    nlohmann::json j = nlohmann::json::object();
    for (auto& [k, v] : r.summary) j[k] = v;
    if (!r.headers.empty()) {
        auto rows = nlohmann::json::array();
        for (auto& row : r.rows) {
            nlohmann::json o = nlohmann::json::object();
            for (std::size_t i = 0; i < r.headers.size() && i < row.size(); ++i) o[r.headers[i]] = row[i];
            rows.push_back(o);
        }
        j["rows"] = rows;
    }
    return j;
}

}  // namespace

void render(const Report& r, Format f, std::ostream& out) {
    if (f == Format::json) {
        out << (r.json.is_null() ? default_json(r) : r.json).dump(2) << '\n';
        return;
    }
    if (f == Format::csv) {
        for (auto& [k, v] : r.summary) out << "# " << k << "," << csv_cell(v) << '\n';
        if (!r.headers.empty()) {
            for (std::size_t i = 0; i < r.headers.size(); ++i) out << (i ? "," : "") << csv_cell(r.headers[i]);
            out << '\n';
            for (auto& row : r.rows) {
                for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
                out << '\n';
            }
        }
        return;
    }
    std::size_t key_w = 0;
    for (auto& [k, v] : r.summary) key_w = std::max(key_w, k.size());
    for (auto& [k, v] : r.summary) out << k << std::string(key_w - k.size() + 2, ' ') << v << '\n';
    if (r.headers.empty()) return;
    if (!r.summary.empty()) out << '\n';
    std::vector<std::size_t> w(r.headers.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = r.headers[i].size();
    for (auto& row : r.rows)
        for (std::size_t i = 0; i < row.size() && i < w.size(); ++i) w[i] = std::max(w[i], row[i].size());
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size() && i < w.size(); ++i) {
            out << cells[i];
            if (i + 1 < cells.size()) out << std::string(w[i] - cells[i].size() + 2, ' ');
        }
        out << '\n';
    };
    line(r.headers);
    for (auto& row : r.rows) line(row);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Context ctx;
    ctx.out = &out;
    ctx.err = &err;
    auto& c = ctx.cfg;

    CLI::App app{"Elliptic divisibility sequences versus linear recurrences", "edslrs"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value file; command-line flags override it");
    app.config_formatter(std::make_shared<CLI::ConfigINI>());

    auto* curve = app.add_option("--curve", c.curve, "Weierstrass coefficients A B of y^2 = x^3 + Ax + B")->expected(2);
    auto* point = app.add_option("--point", c.point, "projective point x y z (z^2, z^3 denominators)")->expected(3);
    auto* input = app.add_option("--input", c.input, "file with `curve A B` and `point x y z` records");
    auto* seed = app.add_option("--seed", c.seed, "Ward seed w1 w2 w3 w4")->expected(4);
    seed->excludes(curve)->excludes(point)->excludes(input);
    curve->excludes(input);
    app.add_option("--lrs", c.lrs, "recurrence \"k c1..ck u1..uk\"")->expected(1, CLI::detail::expected_max_vector_size);
    app.add_option("--q", c.q, "auxiliary prime q")->check(CLI::PositiveNumber);
    app.add_option("--a", c.a, "residue a (default 3)")->check(CLI::NonNegativeNumber);
    app.add_option("--p-max", c.p_max, "prime search bound")->check(CLI::PositiveNumber);
    app.add_option("--n", c.n, "number of terms")->check(CLI::PositiveNumber);
    app.add_option("--horizon-cap", c.horizon_cap, "largest period horizon tried")->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", c.cache_dir, "sequence cache root (default $EDSLRS_CACHE_DIR or ~/.cache/edslrs)");
    const std::map<std::string, Format> formats{{"json", Format::json}, {"csv", Format::csv}, {"table", Format::table}};
    app.add_option("--format", c.format, "json | csv | table")->transform(CLI::CheckedTransformer(formats));
    app.add_option("--exclude", c.exclude, "primes to skip (comma separated)")->delimiter(',');
    app.add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--stride", c.stride, "Ward stride m (use mP)")->check(CLI::PositiveNumber);

    add_eds(app, ctx);
    add_lrs(app, ctx);
    add_density(app, ctx);
    add_refute(app, ctx);
    add_prooflab(app, ctx);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    if (!ctx.action) {
        err << "error: no command given\n";
        return kExitInvalid;
    }
    try {
        return ctx.action();
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        switch (e.kind()) {
            case ErrorKind::unconfirmed: return kExitExhausted;
            case ErrorKind::internal: return kExitInternal;
            default: return kExitInvalid;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace edslrs::cli
