#include "internal.hpp"

#include "edslrs/error.hpp"
#include "edslrs/modular.hpp"

#include <cmath>
#include <istream>
#include <sstream>

namespace edslrs::lrs {

using mod::u64;

std::string LrsSpec::to_string() const {
    std::string s = "lrs " + std::to_string(order());
    for (const auto& c : coeffs) s += " " + to_dec(c);
    for (const auto& u : initial) s += " " + to_dec(u);
    return s;
}

void validate(const LrsSpec& s) {
    require(s.order() >= 1, "recurrence order must be at least 1");
    require(s.initial.size() == s.order(), "need exactly k initial terms");
    require(s.coeffs.back() != 0, "last recurrence coefficient c_k must be non-zero");
}

LrsSpec make_spec(std::vector<Int> coeffs, std::vector<Int> initial) {
    LrsSpec s{std::move(coeffs), std::move(initial), false};
    validate(s);
    return s;
}

Poly characteristic_poly(const LrsSpec& s) {
    const std::size_t k = s.order();
    std::vector<Rat> c(k + 1);
    c[k] = 1;
    for (std::size_t i = 1; i <= k; ++i) c[k - i] = Rat(-s.coeffs[i - 1]);
    return Poly(c);
}

std::vector<Int> generate(const LrsSpec& s, std::size_t count) {
    validate(s);
    const std::size_t k = s.order();
    std::vector<Int> u(s.initial.begin(), s.initial.end());
    u.reserve(std::max(count, k));
    while (u.size() < count) {
        Int next = 0;
        const std::size_t n = u.size();
        for (std::size_t i = 1; i <= k; ++i) next += s.coeffs[i - 1] * u[n - i];
        u.push_back(std::move(next));
    }
    u.resize(count);
    return u;
}

Int eval_exact(const LrsSpec& s, std::size_t n) {
    require(n >= 1, "LRS index starts at 1");
    return generate(s, n).back();
}

namespace {

using Mat = std::vector<u64>;  // k x k row-major

Mat mat_mul(const Mat& a, const Mat& b, std::size_t k, u64 p) {
    Mat c(k * k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            const u64 ail = a[i * k + l];
            if (!ail) continue;
            for (std::size_t j = 0; j < k; ++j) c[i * k + j] = mod::add(c[i * k + j], mod::mul(ail, b[l * k + j], p), p);
        }
    return c;
}

std::vector<u64> mat_vec(const Mat& a, const std::vector<u64>& v, std::size_t k, u64 p) {
    std::vector<u64> r(k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) r[i] = mod::add(r[i], mod::mul(a[i * k + j], v[j], p), p);
    return r;
}

}  // namespace

std::vector<u64> companion_mod(const LrsSpec& s, u64 p) {
    const std::size_t k = s.order();
    Mat c(k * k, 0);
    for (std::size_t i = 0; i + 1 < k; ++i) c[i * k + i + 1] = 1 % p;
    for (std::size_t j = 0; j < k; ++j) c[(k - 1) * k + j] = mod_u64(s.coeffs[k - 1 - j], p);
    return c;
}

std::vector<u64> apply_power(const LrsSpec& s, const std::vector<u64>& state, const Int& e, u64 p) {
    const std::size_t k = s.order();
    Mat base = companion_mod(s, p);
    std::vector<u64> v = state;
    // Right-to-left binary powering applied directly to the vector.
    const std::size_t bits = e > 0 ? mpz_sizeinbase(e.get_mpz_t(), 2) : 0;
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) v = mat_vec(base, v, k, p);
        if (i + 1 < bits) base = mat_mul(base, base, k, p);
    }
    return v;
}

u64 eval_mod(const LrsSpec& s, const Int& n, u64 p) {
    validate(s);
    require(n >= 1, "LRS index starts at 1");
    require(p >= 2, "modulus must be at least 2");
    std::vector<u64> state(s.order());
    for (std::size_t i = 0; i < s.order(); ++i) state[i] = mod_u64(s.initial[i], p);
    return apply_power(s, state, n - 1, p)[0];
}

std::vector<double> growth_profile(const LrsSpec& s, std::size_t count) {
    auto u = generate(s, count);
    std::vector<double> out(count, 0.0);
    for (std::size_t i = 0; i < count; ++i)
        if (u[i] != 0) out[i] = log_abs(u[i]) / double(i + 1);
    return out;
}

LrsSpec parse_spec(const std::string& line) {
    std::istringstream in(line);
    std::string tag;
    in >> tag;
    require(tag == "lrs", "expected `lrs k c1..ck u1..uk`");
    std::vector<std::string> f;
    for (std::string t; in >> t;) f.push_back(t);
    require(!f.empty(), "missing recurrence order");
    Int k = parse_int(f[0]);
    require(k >= 1 && k <= 4096, "recurrence order out of range");
    const std::size_t kk = k.get_ui();
    require(f.size() == 1 + 2 * kk, "expected " + std::to_string(2 * kk) + " integers after the order");
    std::vector<Int> c, u;
    for (std::size_t i = 0; i < kk; ++i) c.push_back(parse_int(f[1 + i]));
    for (std::size_t i = 0; i < kk; ++i) u.push_back(parse_int(f[1 + kk + i]));
    return make_spec(std::move(c), std::move(u));
}

std::vector<Int> read_terms(std::istream& in) {
    std::vector<Int> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        out.push_back(parse_int(tok));
        require(!(ls >> tok), "one integer per line expected");
    }
    return out;
}

}  // namespace edslrs::lrs
