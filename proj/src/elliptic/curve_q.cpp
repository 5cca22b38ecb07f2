#include "edslrs/elliptic.hpp"

#include "edslrs/error.hpp"
#include "edslrs/factor.hpp"

#include <cmath>
#include <istream>
#include <sstream>

namespace edslrs::ec {

namespace {

Rat make_rat(const Int& n, const Int& d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

struct Affine {
    Rat X, Y;
};

Affine affine(const PointQ& p) {
    Int z2 = p.z * p.z;
    return {make_rat(p.x, z2), make_rat(p.y, z2 * p.z)};
}

bool on_curve_affine(const CurveQ& e, const Rat& X, const Rat& Y) {
    return Y * Y == X * X * X + Rat(e.a()) * X + Rat(e.b());
}

}  // namespace

CurveQ::CurveQ(Int a, Int b) : a_(std::move(a)), b_(std::move(b)) {
    disc_ = 4 * a_ * a_ * a_ + 27 * b_ * b_;
    require(disc_ != 0, "singular curve: 4A^3 + 27B^2 = 0");
}

std::string CurveQ::to_string() const { return "y^2 = x^3 + (" + to_dec(a_) + ")x + (" + to_dec(b_) + ")"; }

std::string PointQ::to_string() const {
    if (infinity) return "O";
    return "(" + to_dec(x) + " : " + to_dec(y) + " : " + to_dec(z) + ")";
}

PointQ from_affine(const CurveQ& e, const Rat& X, const Rat& Y) {
    require(on_curve_affine(e, X, Y), "point is not on the curve");
    const Int& xd = X.get_den();
    require(mpz_perfect_square_p(xd.get_mpz_t()) != 0, "x-denominator is not a square");
    Int s;
    mpz_sqrt(s.get_mpz_t(), xd.get_mpz_t());
    Rat ys = Y * Rat(s * s * s);
    require(ys.get_den() == 1, "y-denominator is not the cube of the x-denominator root");
    PointQ p;
    p.infinity = false;
    p.x = X.get_num();
    p.y = ys.get_num();
    p.z = s;
    return p;
}

PointQ make_point(const CurveQ& e, const Int& x, const Int& y, const Int& z) {
    require(z != 0, "point z-coordinate must be non-zero (use infinity explicitly)");
    Int z2 = z * z;
    return from_affine(e, make_rat(x, z2), make_rat(y, z2 * z));
}

bool on_curve(const CurveQ& e, const PointQ& p) {
    if (p.infinity) return true;
    Int z2 = p.z * p.z;
    Int z4 = z2 * z2;
    return p.y * p.y == p.x * p.x * p.x + e.a() * p.x * z4 + e.b() * z4 * z2;
}

PointQ negate(const PointQ& p) {
    PointQ r = p;
    if (!r.infinity) r.y = -r.y;
    return r;
}

PointQ add(const PointQ& p, const PointQ& q, const CurveQ& e) {
    if (p.infinity) return q;
    if (q.infinity) return p;
    Affine a = affine(p), b = affine(q);
    Rat lambda;
    if (a.X == b.X) {
        if (a.Y != b.Y || a.Y == 0) return PointQ::at_infinity();
        lambda = (3 * a.X * a.X + Rat(e.a())) / (2 * a.Y);
    } else {
        lambda = (b.Y - a.Y) / (b.X - a.X);
    }
    Rat X3 = lambda * lambda - a.X - b.X;
    Rat Y3 = lambda * (a.X - X3) - a.Y;
    return from_affine(e, X3, Y3);
}

PointQ scalar_mul(const Int& n, const PointQ& p, const CurveQ& e) {
    if (n < 0) return scalar_mul(-n, negate(p), e);
    PointQ acc = PointQ::at_infinity();
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        acc = add(acc, acc, e);
        if (mpz_tstbit(n.get_mpz_t(), i)) acc = add(acc, p, e);
    }
    return acc;
}

TorsionInfo is_torsion(const PointQ& p, const CurveQ& e) {
    PointQ acc = p;
    for (unsigned n = 1; n <= 16; ++n) {
        if (acc.infinity) return {true, n};
        acc = add(acc, p, e);
    }
    return {false, 0};
}

std::vector<Int> singular_reduction_primes(const CurveQ& e, const PointQ& p) {
    std::vector<Int> out;
    if (p.infinity) return out;
    // Mod 2 the model is always singular, at the point with x = A.
    if (mpz_odd_p(p.z.get_mpz_t()) && mod_floor(p.x - e.a(), 2) == 0) out.emplace_back(2);
    // Odd l: both partials 2y and 3x^2 + A z^4 vanish.
    Int z4 = p.z * p.z * p.z * p.z;
    Int g = gcd(p.y, 3 * p.x * p.x + e.a() * z4);
    Int zz = p.z;
    for (Int c = gcd(g, zz); c != 1; c = gcd(g, c)) g /= c;
    while (g % 2 == 0) g /= 2;
    if (g > 1) {
        auto f = nt::factor(g);
        require(f.complete(), "could not factor gcd(y, 3x^2 + A z^4)");
        for (auto& [prime, mult] : f.primes) out.push_back(prime);
    }
    return out;
}

HeightEstimate canonical_height_estimate(const PointQ& p, const CurveQ& e, unsigned n_max) {
    require(n_max >= 2, "canonical_height_estimate: n_max must be at least 2");
    if (is_torsion(p, e).torsion) fail(ErrorKind::torsion_point, "canonical height estimate needs a non-torsion point");
    HeightEstimate h;
    PointQ acc = p;
    for (unsigned n = 1; n <= n_max; ++n) {
        if (n > 1) acc = add(acc, p, e);
        h.estimates.push_back(log_abs(acc.z) / (double(n) * n));
    }
    h.last = h.estimates.back();
    h.convergence_gap = std::fabs(h.last - h.estimates[n_max / 2 - 1]);
    return h;
}

CurveQ parse_curve(const std::string& a, const std::string& b) { return CurveQ(parse_int(a), parse_int(b)); }

CurvePointInput read_curve_point(std::istream& in) {
    CurvePointInput out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        std::vector<std::string> f;
        for (std::string t; ls >> t;) f.push_back(t);
        const std::string where = " (line " + std::to_string(lineno) + ")";
        if (tag == "curve") {
            require(f.size() == 2, "expected `curve A B`" + where);
            out.curve = parse_curve(f[0], f[1]);
        } else if (tag == "point") {
            require(f.size() == 3, "expected `point x y z`" + where);
            require(out.curve.has_value(), "`point` must follow `curve`" + where);
            out.point = make_point(*out.curve, parse_int(f[0]), parse_int(f[1]), parse_int(f[2]));
        } else {
            fail(ErrorKind::invalid_input, "unknown record `" + tag + "`" + where);
        }
    }
    return out;
}

}  // namespace edslrs::ec
