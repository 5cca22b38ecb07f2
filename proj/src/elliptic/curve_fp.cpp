#include "edslrs/elliptic.hpp"

#include "edslrs/error.hpp"
#include "edslrs/factor.hpp"
#include "edslrs/modular.hpp"
#include "edslrs/simd.hpp"

namespace edslrs::ec {

using mod::u64;

CurveFp reduce(const CurveQ& e, u64 p) {
    require(p >= 2, "reduction modulus must be a prime");
    CurveFp c;
    c.p = p;
    c.a = mod_u64(e.a(), p);
    c.b = mod_u64(e.b(), p);
    c.good_reduction = p != 2 && mod_u64(e.disc(), p) != 0;
    return c;
}

PointFp reduce(const PointQ& pt, const CurveFp& e) {
    if (pt.infinity) return PointFp::at_infinity();
    const u64 p = e.p;
    const u64 z = mod_u64(pt.z, p);
    if (z == 0) return PointFp::at_infinity();
    const u64 zi = mod::inv(z, p);
    const u64 zi2 = mod::mul(zi, zi, p);
    PointFp r;
    r.infinity = false;
    r.x = mod::mul(mod_u64(pt.x, p), zi2, p);
    r.y = mod::mul(mod_u64(pt.y, p), mod::mul(zi2, zi, p), p);
    return r;
}

bool on_curve(const CurveFp& e, const PointFp& q) {
    if (q.infinity) return true;
    const u64 p = e.p;
    u64 rhs = mod::add(mod::mul(mod::mul(q.x, q.x, p), q.x, p), mod::add(mod::mul(e.a, q.x, p), e.b, p), p);
    return mod::mul(q.y, q.y, p) == rhs;
}

PointFp negate(const PointFp& q, const CurveFp& e) {
    PointFp r = q;
    if (!r.infinity) r.y = mod::neg(r.y, e.p);
    return r;
}

PointFp add(const PointFp& s, const PointFp& t, const CurveFp& e) {
    if (s.infinity) return t;
    if (t.infinity) return s;
    const u64 p = e.p;
    u64 lambda;
    if (s.x == t.x) {
        if (s.y != t.y || s.y == 0) return PointFp::at_infinity();
        u64 num = mod::add(mod::mul(3 % p, mod::mul(s.x, s.x, p), p), e.a, p);
        lambda = mod::mul(num, mod::inv(mod::add(s.y, s.y, p), p), p);
    } else {
        lambda = mod::mul(mod::sub(t.y, s.y, p), mod::inv(mod::sub(t.x, s.x, p), p), p);
    }
    PointFp r;
    r.infinity = false;
    r.x = mod::sub(mod::sub(mod::mul(lambda, lambda, p), s.x, p), t.x, p);
    r.y = mod::sub(mod::mul(lambda, mod::sub(s.x, r.x, p), p), s.y, p);
    return r;
}

PointFp scalar_mul(u64 n, const PointFp& q, const CurveFp& e) {
    PointFp acc = PointFp::at_infinity();
    PointFp base = q;
    while (n) {
        if (n & 1) acc = add(acc, base, e);
        base = add(base, base, e);
        n >>= 1;
    }
    return acc;
}

PointCount count_points(const CurveFp& e) {
    const u64 p = e.p;
    PointCount out;
    out.bad_reduction = !e.good_reduction;
    std::int64_t chi_sum = 0;
    if (p == 2) {
        for (u64 x = 0; x < 2; ++x)
            for (u64 y = 0; y < 2; ++y)
                if ((y * y + x * x * x + e.a * x + e.b) % 2 == 0) ++out.order;
        ++out.order;
        out.ap = static_cast<std::int64_t>(p + 1) - static_cast<std::int64_t>(out.order);
        return out;
    }
    if (p < (u64{1} << 31)) {
        auto table = simd::build_char_table(static_cast<std::uint32_t>(p));
        chi_sum = simd::cubic_character_sum(table, static_cast<std::uint32_t>(e.a), static_cast<std::uint32_t>(e.b));
    } else {
        const u64 half = (p - 1) / 2;
        for (u64 x = 0; x < p; ++x) {
            u64 v = mod::add(mod::mul(mod::mul(x, x, p), x, p), mod::add(mod::mul(e.a, x, p), e.b, p), p);
            if (v == 0) continue;
            chi_sum += mod::pow(v, half, p) == 1 ? 1 : -1;
        }
    }
    out.order = static_cast<u64>(static_cast<std::int64_t>(p) + 1 + chi_sum);
    out.ap = -chi_sum;
    return out;
}

u64 point_order_fp(const PointFp& q, const CurveFp& e, std::optional<u64> group_order) {
    if (!e.good_reduction) fail(ErrorKind::bad_reduction, "point order requested at a prime of bad reduction");
    require(on_curve(e, q), "point is not on the reduced curve");
    if (q.infinity) return 1;
    const u64 n = group_order ? *group_order : count_points(e).order;
    u64 order = n;
    for (auto [ell, mult] : nt::factor_u64(n)) {
        for (unsigned i = 0; i < mult && order % ell == 0; ++i) {
            if (!scalar_mul(order / ell, q, e).infinity) break;
            order /= ell;
        }
    }
    if (!scalar_mul(order, q, e).infinity) fail(ErrorKind::internal, "group order does not annihilate the point");
    return order;
}

}  // namespace edslrs::ec
