#include "edslrs/prooflab.hpp"

#include "edslrs/error.hpp"
#include "edslrs/factor.hpp"
#include "edslrs/linalg.hpp"
#include "edslrs/ntkernel.hpp"
#include "edslrs/simd.hpp"

#include <cmath>

namespace edslrs::prooflab {

namespace {

Int mod_nonneg(const Int& v, const Int& m) {
    Int r = v % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

QExpansion expand_q(const Poly& p, const Rat& alpha) {
    require(!p.is_zero(), "expand_q: P must be non-zero");
    const Poly x = Poly::x();
    auto sq = [&](long shift, long scale) {
        Poly lin({Rat(shift), Rat(scale)});
        return lin * lin;
    };
    const Poly a3 = Poly::constant(alpha * alpha * alpha);
    const Poly left = p.compose(sq(1, 2));
    const Poly plus = p.compose(sq(2, 1)) * p.compose(x * x).pow(3);
    const Poly minus = p.compose(sq(-1, 1)) * p.compose(sq(1, 1)).pow(3);

    QExpansion out;
    out.p = p;
    out.alpha = alpha;
    out.q = left - a3 * (plus - minus);
    out.degree = out.q.degree();
    out.leading = out.q.leading();

    const long d = p.degree();
    const Rat a0 = p.leading();
    if (d == 0) {
        out.predicted_degree = 0;
        out.predicted_leading = a0;
    } else {
        out.predicted_degree = 8 * d - 3;
        out.predicted_leading = Rat(-4 * d) * a0 * a0 * a0 * a0 * alpha * alpha * alpha;
    }
    out.matches = out.degree == out.predicted_degree && out.leading == out.predicted_leading;
    return out;
}

DetIdentity det_beta_identity(std::uint64_t q, const std::vector<std::uint64_t>& betas) {
    require(nt::is_prime_u64(q), "det_beta_identity: q must be prime");
    require(!betas.empty(), "det_beta_identity: need at least one beta");
    const std::size_t t = betas.size();
    DetIdentity out;
    out.q = q;
    for (auto b : betas) out.betas.push_back(b % q);

    out.admissible = true;
    for (std::size_t i = 0; i < t; ++i) {
        if (out.betas[i] == 1) out.admissible = false;
        for (std::size_t j = i + 1; j < t; ++j)
            if (out.betas[i] == out.betas[j]) out.admissible = false;
    }

    std::vector<std::vector<Int>> m(t, std::vector<Int>(t));
    for (std::size_t u = 0; u < t; ++u)
        for (std::size_t j = 0; j < t; ++j)
            m[u][j] = pow_int(Int(static_cast<unsigned long>(out.betas[j])), u + 1) - 1;
    out.det = det_bareiss(m);

    out.product = 1;
    for (std::size_t i = 0; i < t; ++i) {
        out.product *= Int(static_cast<unsigned long>(out.betas[i])) - 1;
        for (std::size_t j = i + 1; j < t; ++j)
            out.product *= Int(static_cast<unsigned long>(out.betas[i])) - Int(static_cast<unsigned long>(out.betas[j]));
    }
    out.expected_sign = (t * (t - 1) / 2) % 2 == 0 ? 1 : -1;

    const Int qq(static_cast<unsigned long>(q));
    out.det_mod_q = mod_nonneg(out.det, qq).get_ui();
    out.product_mod_q = mod_nonneg(out.product, qq).get_ui();

    if (out.product == 0) {
        out.sign = 0;
        out.holds = out.det == 0;
    } else {
        out.sign = out.det == out.product ? 1 : (out.det == -out.product ? -1 : 0);
        const std::uint64_t signed_mod =
            out.sign == 1 ? out.product_mod_q : (q - out.product_mod_q) % q;
        out.holds = out.sign != 0 && out.det_mod_q == signed_mod;
    }
    return out;
}

ResidueCount count_admissible_residues(std::uint64_t r, unsigned t, const Int& c) {
    require(r > 2 && r < (1ull << 31) && nt::is_prime_u64(r), "count_admissible_residues: r must be an odd prime below 2^31");
    const Int rr(static_cast<unsigned long>(r));
    const Int cr = mod_nonneg(c, rr);
    require(cr != 0, "count_admissible_residues: r divides c");
    require(r > t, "count_admissible_residues: need r > t");

    ResidueCount out;
    out.r = r;
    out.t = t;
    out.c = cr.get_ui();
    if (t == 0) {
        out.count = r;
    } else {
        const auto table = simd::build_char_table(static_cast<std::uint32_t>(r));
        out.count = simd::count_square_shift_residues(table, static_cast<std::uint32_t>(out.c), t);
    }
    const Int scaled = pow_int(2, t) * Int(static_cast<unsigned long>(out.count));
    out.deviation = abs_int(scaled - rr);
    out.band = 2.0 * t * (std::sqrt(static_cast<double>(r)) + 1.0);
    out.within_band = out.deviation.get_d() <= out.band;
    return out;
}

EllSolution construct_ell(const Int& r, unsigned e, const Int& n0, const Int& j, const Int& c) {
    require(e >= 1, "construct_ell: exponent must be positive");
    require(r > 2 && nt::is_prime(r), "construct_ell: r must be an odd prime");
    require(c % r != 0, "construct_ell: r divides c");

    EllSolution out;
    out.r = r;
    out.e = e;
    out.modulus = pow_int(r, e);
    out.discriminant = mod_nonneg(n0 * n0 + j * c, out.modulus);
    if (nt::legendre_symbol(out.discriminant, r) != 1)
        fail(ErrorKind::no_square_root, "construct_ell: n0^2 + j c = " + to_dec(out.discriminant) +
                                            " is not a non-zero square mod " + to_dec(r));

    auto solve = [&](const Int& mod, unsigned ex) {
        const Int root = nt::hensel_lift_sqrt(mod_nonneg(n0 * n0 + j * c, mod), r, ex);
        Int inv;
        const Int cm = mod_nonneg(c, mod);
        mpz_invert(inv.get_mpz_t(), cm.get_mpz_t(), mod.get_mpz_t());
        return std::pair{root, mod_nonneg((root - n0) * inv, mod)};
    };
    auto [root, ell] = solve(out.modulus, e);
    out.root = root;
    out.ell = ell;
    out.base = solve(r, 1).second;

    if (mod_nonneg(2 * ell * n0 + c * ell * ell - j, out.modulus) != 0)
        fail(ErrorKind::internal, "construct_ell: substitution check failed");
    if (mod_nonneg(out.ell - out.base, r) != 0)
        fail(ErrorKind::internal, "construct_ell: lift disagrees with base solution");
    return out;
}

}  // namespace edslrs::prooflab
