#pragma once

#include "edslrs/bigint.hpp"
#include "edslrs/linalg.hpp"
#include "edslrs/poly.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace edslrs::prooflab {

// Q(X) = P((2X+1)^2) - alpha^3 (P((X+2)^2) P(X^2)^3 - P((X-1)^2) P((X+1)^2)^3)
struct QExpansion {
    Poly p;
    Rat alpha;
    Poly q;
    long degree = 0;
    Rat leading;
    long predicted_degree = 0;
    Rat predicted_leading;
    bool matches = false;
};

QExpansion expand_q(const Poly& p, const Rat& alpha);

struct DetIdentity {
    std::uint64_t q = 0;
    std::vector<std::uint64_t> betas;
    Int det;        // over Z, entries beta_j^u - 1 with beta in [0, q)
    Int product;    // prod (b_i - 1) prod_{i<j} (b_i - b_j), over Z
    int sign = 0;   // det = sign * product; 0 when both vanish
    int expected_sign = 1;  // (-1)^{t(t-1)/2}
    std::uint64_t det_mod_q = 0;
    std::uint64_t product_mod_q = 0;
    bool admissible = false;
    bool holds = false;
};

DetIdentity det_beta_identity(std::uint64_t q, const std::vector<std::uint64_t>& betas);

struct ResidueCount {
    std::uint64_t r = 0;
    unsigned t = 0;
    std::uint64_t c = 0;
    std::uint64_t count = 0;
    Int deviation;  // |2^t I_r - r|
    double band = 0;  // 2t (sqrt r + 1)
    bool within_band = false;
};

ResidueCount count_admissible_residues(std::uint64_t r, unsigned t, const Int& c);

// Solution of 2 l n0 + c l^2 = j (mod r^e).
struct EllSolution {
    Int r;
    unsigned e = 1;
    Int modulus;
    Int discriminant;  // n0^2 + j c mod r^e
    Int root;
    Int ell;
    Int base;  // same construction with e = 1
};

EllSolution construct_ell(const Int& r, unsigned e, const Int& n0, const Int& j, const Int& c);

struct CollisionVerdict {
    std::size_t dimension = 0;
    std::vector<std::vector<Rat>> basis;
    // (i, j) with x_i = x_j on the whole eigenvalue-1 eigenspace
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    bool collision = false;
};

// Throws invalid_input naming the row when A is not admissible.
void check_admissible(const RatMatrix& a);
CollisionVerdict fixed_point_collision(const RatMatrix& a);

enum class Independence { independent, dependent, inconclusive };
const char* to_string(Independence s);

struct IndependenceResult {
    Independence status = Independence::inconclusive;
    std::vector<Int> relation;  // prod v_i^{e_i} = 1, first nonzero entry positive
};

IndependenceResult multiplicative_independence_check(const std::vector<Rat>& values,
                                                     std::uint64_t rho_budget = 4'000'000);

nlohmann::json to_json(const QExpansion& x);
nlohmann::json to_json(const DetIdentity& x);
nlohmann::json to_json(const ResidueCount& x);
nlohmann::json to_json(const EllSolution& x);
nlohmann::json to_json(const CollisionVerdict& x);
nlohmann::json to_json(const IndependenceResult& x);

}  // namespace edslrs::prooflab
