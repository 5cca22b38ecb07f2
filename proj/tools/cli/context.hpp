#pragma once

#include "edslrs/elliptic.hpp"
#include "edslrs/eds.hpp"
#include "edslrs/lrs.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace edslrs::cli {

enum class Format { json, csv, table };

struct RunConfig {
    std::vector<std::string> curve;  // A B
    std::vector<std::string> point;  // x y z
    std::vector<std::string> seed;   // w1 w2 w3 w4
    std::string input;               // file with `curve` / `point` records
    std::vector<std::string> lrs;    // "k c1..ck u1..uk", possibly split into tokens
    std::uint64_t q = 0;
    std::uint64_t a = 3;
    std::uint64_t p_max = 1'000'000;
    std::uint64_t n = 20;
    std::uint64_t horizon_cap = std::uint64_t{1} << 24;
    std::string cache_dir;
    Format format = Format::table;
    std::vector<std::uint64_t> exclude;
    unsigned jobs = 1;
    unsigned stride = 1;
};

// One command's output: summary pairs, an optional table, and a JSON document.
struct Report {
    std::vector<std::pair<std::string, std::string>> summary;
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
    nlohmann::json json;  // built from summary and rows when left null
};

void render(const Report& r, Format f, std::ostream& out);

// Options that belong to a single subcommand.
struct Locals {
    std::vector<std::uint64_t> primes;
    std::uint64_t p = 0;
    std::vector<std::string> terms;
    std::string terms_file;
    std::size_t bound = 12;
    std::string index;
    std::uint64_t count = 0;
    std::uint64_t m = 2;
    std::uint64_t b = 0;
    std::uint64_t x = 100'000;
    std::uint64_t cap = 0;
    std::string out;
    std::string cert;
    std::vector<std::string> poly;
    std::string alpha = "1";
    std::uint64_t random = 0;
    std::uint64_t rng_seed = 1;
    std::vector<std::uint64_t> betas;
    unsigned t = 1;
    unsigned t_max = 3;
    std::string c = "1";
    std::uint64_t r = 0;
    std::uint64_t r_max = 0;
    unsigned e = 1;
    std::string n0 = "0";
    std::string j = "1";
    std::string matrix_file;
    std::string matrix;
    std::vector<std::string> values;
    std::uint64_t from = 1;
    std::uint64_t window = 1000;
};

struct Context {
    RunConfig cfg;
    Locals loc;
    std::function<int()> action;
    std::ostream* out = nullptr;
    std::ostream* err = nullptr;

    bool has_geometric() const { return !curve_point_empty(); }
    bool curve_point_empty() const { return cfg.curve.empty() && cfg.input.empty(); }
    ec::CurveQ curve() const;
    ec::PointQ point() const;
    eds::WardSeed seed() const;
    lrs::LrsSpec spec() const;
    void emit(const Report& r) const { render(r, cfg.format, *out); }
};

void add_eds(CLI::App& app, Context& ctx);
void add_lrs(CLI::App& app, Context& ctx);
void add_density(CLI::App& app, Context& ctx);
void add_refute(CLI::App& app, Context& ctx);
void add_prooflab(CLI::App& app, Context& ctx);

std::string yes_no(bool b);
template <class T>
std::string str(const T& v) {
    if constexpr (std::is_same_v<T, std::string>) return v;
    else if constexpr (std::is_arithmetic_v<T>) return std::to_string(v);
    else return v.get_str(10);
}

}  // namespace edslrs::cli
