#include "edslrs/error.hpp"
#include "edslrs/factor.hpp"
#include "edslrs/prooflab.hpp"

#include <map>
#include <set>

namespace edslrs::prooflab {

void check_admissible(const RatMatrix& a) {
    require(a.rows == a.cols && a.rows > 0, "fixed_point_collision: matrix must be square and non-empty");
    for (std::size_t i = 0; i < a.rows; ++i) {
        const std::string row = "row " + std::to_string(i);
        Rat sum = 0;
        std::size_t support = 0;
        for (std::size_t j = 0; j < a.cols; ++j) {
            require(a(i, j) >= 0, row + " has a negative entry");
            sum += a(i, j);
            if (a(i, j) != 0) ++support;
        }
        require(sum == 1, row + " does not sum to 1");
        if (a(i, i) != 0)
            require(support >= 3, row + " has the diagonal in a support of size " + std::to_string(support));
    }
}

CollisionVerdict fixed_point_collision(const RatMatrix& a) {
    check_admissible(a);
    const std::size_t n = a.rows;
    RatMatrix shifted = a;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= 1;

    CollisionVerdict out;
    out.basis = kernel_basis(shifted);
    out.dimension = out.basis.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            bool all = true;
            for (const auto& v : out.basis)
                if (v[i] != v[j]) {
                    all = false;
                    break;
                }
            if (all) out.pairs.emplace_back(i, j);
        }
    // A Q-space is never a finite union of proper subspaces, so a pair holding
    // on the whole eigenspace is the same as every eigenvector having one.
    out.collision = !out.pairs.empty();
    return out;
}

const char* to_string(Independence s) {
    switch (s) {
        case Independence::independent: return "independent";
        case Independence::dependent: return "dependent";
        case Independence::inconclusive: return "inconclusive";
    }
    return "?";
}

IndependenceResult multiplicative_independence_check(const std::vector<Rat>& values, std::uint64_t rho_budget) {
    require(!values.empty(), "multiplicative_independence_check: no values");
    const std::size_t k = values.size();
    std::map<Int, std::vector<long>> exps;
    std::vector<bool> negative(k);
    IndependenceResult out;

    for (std::size_t i = 0; i < k; ++i) {
        require(values[i] != 0, "multiplicative_independence_check: zero value");
        negative[i] = values[i] < 0;
        for (int side = 0; side < 2; ++side) {
            const Int part = side == 0 ? Int(values[i].get_num()) : Int(values[i].get_den());
            auto f = nt::factor(part, rho_budget);
            if (!f.complete()) return out;
            for (auto& [prime, e] : f.primes) {
                auto& row = exps[prime];
                row.resize(k, 0);
                row[i] += side == 0 ? static_cast<long>(e) : -static_cast<long>(e);
            }
        }
    }

    RatMatrix m(std::max<std::size_t>(exps.size(), 1), k);
    std::size_t r = 0;
    for (auto& [prime, row] : exps) {
        for (std::size_t j = 0; j < k; ++j) m(r, j) = row[j];
        ++r;
    }
    const auto kernel = kernel_basis(m);
    if (kernel.empty()) {
        out.status = Independence::independent;
        return out;
    }

    const auto& v = kernel.front();
    Int den = 1;
    for (auto& x : v) den = lcm(den, Int(x.get_den()));
    std::vector<Int> rel(k);
    Int g = 0;
    for (std::size_t j = 0; j < k; ++j) {
        rel[j] = Int(v[j] * den);
        g = gcd(g, rel[j]);
    }
    for (auto& x : rel) x /= g;
    for (auto& x : rel)
        if (x != 0) {
            if (x < 0)
                for (auto& y : rel) y = -y;
            break;
        }
    // The relation holds up to sign; squaring clears a stray -1.
    bool flips = false;
    for (std::size_t j = 0; j < k; ++j)
        if (negative[j] && rel[j] % 2 != 0) flips = !flips;
    if (flips)
        for (auto& x : rel) x *= 2;
    out.status = Independence::dependent;
    out.relation = std::move(rel);
    return out;
}

namespace {

nlohmann::json rat_list(const std::vector<Rat>& v) {
    auto j = nlohmann::json::array();
    for (auto& x : v) j.push_back(to_dec(x));
    return j;
}

}  // namespace

nlohmann::json to_json(const QExpansion& x) {
    return {{"P", rat_list(x.p.coeffs())},
            {"alpha", to_dec(x.alpha)},
            {"Q", rat_list(x.q.coeffs())},
            {"degree", x.degree},
            {"leading", to_dec(x.leading)},
            {"predicted_degree", x.predicted_degree},
            {"predicted_leading", to_dec(x.predicted_leading)},
            {"matches", x.matches}};
}

nlohmann::json to_json(const DetIdentity& x) {
    return {{"q", x.q},
            {"betas", x.betas},
            {"det", to_dec(x.det)},
            {"product", to_dec(x.product)},
            {"sign", x.sign},
            {"expected_sign", x.expected_sign},
            {"det_mod_q", x.det_mod_q},
            {"product_mod_q", x.product_mod_q},
            {"admissible", x.admissible},
            {"holds", x.holds}};
}

nlohmann::json to_json(const ResidueCount& x) {
    return {{"r", x.r},         {"t", x.t},       {"c", x.c},
            {"I_r", x.count},   {"deviation", to_dec(x.deviation)},
            {"band", x.band},   {"within_band", x.within_band}};
}

nlohmann::json to_json(const EllSolution& x) {
    return {{"r", to_dec(x.r)},       {"e", x.e},           {"modulus", to_dec(x.modulus)},
            {"discriminant", to_dec(x.discriminant)}, {"root", to_dec(x.root)},
            {"ell", to_dec(x.ell)},   {"base", to_dec(x.base)}};
}

nlohmann::json to_json(const CollisionVerdict& x) {
    auto basis = nlohmann::json::array();
    for (auto& v : x.basis) basis.push_back(rat_list(v));
    auto pairs = nlohmann::json::array();
    for (auto& [i, j] : x.pairs) pairs.push_back({i, j});
    return {{"dimension", x.dimension}, {"basis", basis}, {"pairs", pairs}, {"collision", x.collision}};
}

nlohmann::json to_json(const IndependenceResult& x) {
    auto rel = nlohmann::json::array();
    for (auto& e : x.relation) rel.push_back(to_dec(e));
    return {{"status", to_string(x.status)}, {"relation", rel}};
}

}  // namespace edslrs::prooflab
