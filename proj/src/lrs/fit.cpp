#include "edslrs/lrs.hpp"

#include "edslrs/error.hpp"
#include "edslrs/linalg.hpp"
#include "edslrs/ntkernel.hpp"

#include <algorithm>

namespace edslrs::lrs {

namespace {

/// Berlekamp-Massey over Q. Returns the connection polynomial C (C[0] = 1) and its length L.
std::pair<std::vector<Rat>, std::size_t> berlekamp_massey(const std::vector<Int>& s, std::size_t n_terms) {
    std::vector<Rat> c{Rat(1)}, b{Rat(1)};
    std::size_t len = 0, shift = 1;
    Rat bdisc = 1;
    for (std::size_t n = 0; n < n_terms; ++n) {
        Rat d = Rat(s[n]);
        for (std::size_t i = 1; i <= len && i < c.size(); ++i) d += c[i] * Rat(s[n - i]);
        if (d == 0) {
            ++shift;
            continue;
        }
        const Rat coef = d / bdisc;
        std::vector<Rat> prev = c;
        if (c.size() < b.size() + shift) c.resize(b.size() + shift, Rat(0));
        for (std::size_t i = 0; i < b.size(); ++i) c[i + shift] -= coef * b[i];
        if (2 * len <= n) {
            len = n + 1 - len;
            b = std::move(prev);
            bdisc = d;
            shift = 1;
        } else {
            ++shift;
        }
    }
    c.resize(std::max(c.size(), len + 1), Rat(0));
    return {c, len};
}

}  // namespace

FitResult fit_minimal_recurrence(const std::vector<Int>& terms, std::size_t bound) {
    require(bound >= 1, "fit bound must be positive");
    require(terms.size() >= 2 * bound,
            "fitting with bound " + std::to_string(bound) + " needs at least " + std::to_string(2 * bound) + " terms");
    FitResult r;
    auto [c, len] = berlekamp_massey(terms, 2 * bound);
    r.order = len;
    if (len == 0) {
        if (std::any_of(terms.begin(), terms.end(), [](const Int& t) { return t != 0; })) {
            r.diagnostic = "leading terms vanish but the sequence does not";
            return r;
        }
        r.found = true;
        r.spec = LrsSpec{{Int(1)}, {Int(0)}, true};
        return r;
    }
    if (len > bound) {
        r.diagnostic = "no recurrence of order <= " + std::to_string(bound);
        return r;
    }
    std::vector<Rat> coeffs(len);
    for (std::size_t i = 1; i <= len; ++i) coeffs[i - 1] = -c[i];
    // Verify on every supplied term, not only the ones the fit saw.
    for (std::size_t n = len; n < terms.size(); ++n) {
        Rat v = 0;
        for (std::size_t i = 1; i <= len; ++i) v += coeffs[i - 1] * Rat(terms[n - i]);
        if (v != Rat(terms[n])) {
            r.diagnostic = "no recurrence of order <= " + std::to_string(bound) + " reproduces term " +
                           std::to_string(n + 1);
            return r;
        }
    }
    if (coeffs.back() == 0) {
        r.diagnostic = "shortest recurrence has c_k = 0 (sequence is not purely recurrent)";
        return r;
    }
    bool integral = std::all_of(coeffs.begin(), coeffs.end(), [](const Rat& q) { return q.get_den() == 1; });
    if (!integral) {
        r.rational_coeffs = coeffs;
        r.diagnostic = "recurrence coefficients are not integers: not an integer LRS of this order";
        return r;
    }
    r.found = true;
    r.spec.minimal = true;
    for (auto& q : coeffs) r.spec.coeffs.push_back(q.get_num());
    r.spec.initial.assign(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(len));
    return r;
}

LrsSpec minimise(const LrsSpec& s) {
    validate(s);
    const std::size_t k = s.order();
    auto fit = fit_minimal_recurrence(generate(s, 2 * k + 4), k);
    if (!fit.found) fail(ErrorKind::internal, "re-minimisation failed: " + fit.diagnostic);
    return fit.spec;
}

LrsSpec decimate(const LrsSpec& s, std::uint64_t m) {
    validate(s);
    require(m >= 1, "decimation factor must be positive");
    if (m == 1) return s;
    const std::size_t k = s.order();
    RatMatrix comp(k, k);
    for (std::size_t i = 0; i + 1 < k; ++i) comp(i, i + 1) = 1;
    for (std::size_t j = 0; j < k; ++j) comp(k - 1, j) = Rat(s.coeffs[k - 1 - j]);
    RatMatrix power = RatMatrix::identity(k), base = comp;
    for (std::uint64_t e = m; e; e >>= 1) {
        if (e & 1) power = power * base;
        if (e > 1) base = base * base;
    }
    auto cp = charpoly(power);  // x^k + cp[k-1] x^{k-1} + ... + cp[0]
    LrsSpec d;
    for (std::size_t i = 1; i <= k; ++i) d.coeffs.push_back(-Int(cp[k - i].get_num()));
    auto u = generate(s, k * m);
    for (std::size_t i = 1; i <= k; ++i) d.initial.push_back(u[i * m - 1]);
    return minimise(d);
}

}  // namespace edslrs::lrs
