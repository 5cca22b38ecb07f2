#include "edslrs/eds.hpp"

#include "edslrs/error.hpp"
#include "edslrs/factor.hpp"

namespace edslrs::eds {

void validate_seed(const WardSeed& s) {
    require(s.w1 != 0 && s.w2 != 0 && s.w3 != 0, "Ward seed needs w1 w2 w3 != 0");
    require(mpz_divisible_p(s.w4.get_mpz_t(), s.w2.get_mpz_t()) != 0, "Ward seed needs w2 | w4");
}

WardSeed ward_seed_from_point(const ec::CurveQ& e, const ec::PointQ& p) {
    require(!p.infinity, "Ward seed of the point at infinity");
    const Int &x = p.x, &y = p.y, &z = p.z, &A = e.a(), &B = e.b();
    const Int z2 = z * z, z4 = z2 * z2, z6 = z4 * z2, z8 = z4 * z4, z10 = z8 * z2, z12 = z6 * z6;
    const Int x2 = x * x, x3 = x2 * x, x4 = x2 * x2, x6 = x3 * x3;
    WardSeed s;
    s.w1 = z;
    s.w2 = 2 * y * z;
    s.w3 = z * (3 * x4 + 6 * A * x2 * z4 + 12 * B * x * z6 - A * A * z8);
    s.w4 = 4 * y * z *
           (x6 + 5 * A * x4 * z4 + 20 * B * x3 * z6 - 5 * A * A * x2 * z8 - 4 * A * B * x * z10 -
            (8 * B * B + A * A * A) * z12);
    return s;
}

EdsSequence generate_geometric(const ec::CurveQ& e, const ec::PointQ& p, std::size_t n) {
    require(n >= 1, "sequence length must be positive");
    require(!p.infinity && ec::on_curve(e, p), "point must be an affine point on the curve");
    if (ec::is_torsion(p, e).torsion) fail(ErrorKind::torsion_point, "torsion point: its EDS is not defined");
    EdsSequence s;
    s.source = Source::geometric;
    s.curve = e;
    s.point = p;
    s.terms.reserve(n);
    ec::PointQ acc = p;
    for (std::size_t i = 1; i <= n; ++i) {
        if (i > 1) acc = ec::add(acc, p, e);
        s.terms.push_back(acc.z);
    }
    return s;
}

EdsSequence generate_ward(const WardSeed& seed, std::size_t n) {
    validate_seed(seed);
    require(n >= 1, "sequence length must be positive");
    std::vector<Int> w(std::max<std::size_t>(n, 4) + 1);
    w[0] = 0;
    w[1] = seed.w1;
    w[2] = seed.w2;
    w[3] = seed.w3;
    w[4] = seed.w4;
    const Int odd_den = seed.w1 * seed.w1 * seed.w1;
    const Int even_den = seed.w2 * seed.w1 * seed.w1;
    for (std::size_t m = 5; m <= n; ++m) {
        const std::size_t k = m / 2;
        Int num, den;
        if (m % 2 == 1) {
            num = w[k + 2] * w[k] * w[k] * w[k] - w[k + 1] * w[k + 1] * w[k + 1] * w[k - 1];
            den = odd_den;
        } else {
            num = w[k + 2] * w[k] * w[k - 1] * w[k - 1] - w[k] * w[k - 2] * w[k + 1] * w[k + 1];
            den = even_den;
        }
        if (mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) == 0)
            fail(ErrorKind::inexact_division, "Ward recurrence is not integral at index " + std::to_string(m));
        mpz_divexact(w[m].get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    EdsSequence s;
    s.source = Source::ward;
    s.seed = seed;
    s.terms.assign(w.begin() + 1, w.begin() + 1 + static_cast<std::ptrdiff_t>(n));
    for (std::size_t i = 0; i < s.terms.size(); ++i) {
        if (s.terms[i] == 0) {
            s.first_zero = i + 1;
            break;
        }
    }
    return s;
}

PrimitiveScan primitive_divisor_scan(const EdsSequence& seq, std::uint64_t rho_budget) {
    PrimitiveScan out;
    // Everything already seen: primes, plus composite cofactors factoring gave up on.
    std::vector<Int> seen;
    for (std::size_t n = 1; n <= seq.size(); ++n) {
        PrimitiveReport row;
        row.n = n;
        Int z = abs_int(seq.at(n));
        if (z == 0) {
            row.zero_term = true;
            out.rows.push_back(row);
            out.lacking.push_back(n);
            continue;
        }
        for (const Int& s : seen) {
            for (Int g = gcd(z, s); g > 1; g = gcd(z, s)) z /= g;
            if (z == 1) break;
        }
        row.has_primitive = z > 1;
        if (row.has_primitive) {
            auto f = nt::factor(z, rho_budget);
            for (auto& [prime, mult] : f.primes) {
                row.primes.push_back(prime);
                seen.push_back(prime);
                if (prime > out.largest_prime) out.largest_prime = prime;
            }
            if (!f.complete()) {
                row.incomplete = true;
                seen.push_back(f.cofactor);
            }
        } else {
            out.lacking.push_back(n);
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

WardConsistency ward_consistency(const ec::CurveQ& e, const ec::PointQ& p, unsigned stride, std::size_t count) {
    require(stride >= 1, "stride must be positive");
    const ec::PointQ mp = ec::scalar_mul(stride, p, e);
    WardConsistency out;
    out.stride = stride;
    out.seed = ward_seed_from_point(e, mp);
    auto geo = generate_geometric(e, mp, count);
    auto ward = generate_ward(out.seed, count);
    out.matches_up_to_sign = true;
    for (std::size_t n = 1; n <= count; ++n) {
        int s = ward.at(n) == geo.at(n) ? 1 : (ward.at(n) == -geo.at(n) ? -1 : 0);
        out.signs.push_back(s);
        if (s == 0) out.matches_up_to_sign = false;
    }
    return out;
}

}  // namespace edslrs::eds
