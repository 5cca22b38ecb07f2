#include "edslrs/lrs.hpp"

#include "edslrs/error.hpp"
#include "edslrs/linalg.hpp"
#include "edslrs/ntkernel.hpp"

#include <numeric>

namespace edslrs::lrs {

namespace {

/// Sylvester determinant of two integer polynomials (low-to-high) with the given formal degrees.
Int sylvester_resultant(const std::vector<Int>& f, const std::vector<Int>& g) {
    const std::size_t m = f.size() - 1, n = g.size() - 1, size = m + n;
    std::vector<std::vector<Int>> s(size, std::vector<Int>(size, 0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = f[m - i];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = g[n - i];
    return det_bareiss(std::move(s));
}

}  // namespace

Poly ratio_polynomial(const Poly& f) {
    require(!f.is_zero() && f.coeff(0) != 0, "ratio polynomial needs f(0) != 0");
    const auto fi = primitive_integer_coeffs(f);
    const std::size_t s = fi.size() - 1;
    if (s == 0) return Poly::constant(1);
    // Res_y(f(y), f(x y)) has degree s^2 in x; sample x = 1..s^2+1 and interpolate.
    std::vector<Rat> xs, ys;
    for (std::size_t x0 = 1; x0 <= s * s + 1; ++x0) {
        std::vector<Int> g(fi.size());
        Int pw = 1;
        for (std::size_t i = 0; i <= s; ++i) {
            g[i] = fi[i] * pw;
            pw *= static_cast<unsigned long>(x0);
        }
        xs.emplace_back(static_cast<long>(x0));
        ys.emplace_back(sylvester_resultant(fi, g));
    }
    Poly r = interpolate(xs, ys);
    // Each root pairs with itself once: (x - 1)^s.
    auto qr = divmod(r, Poly({-1, 1}).pow(static_cast<unsigned>(s)));
    if (!qr.remainder.is_zero()) fail(ErrorKind::internal, "ratio polynomial lacks the (x-1)^s factor");
    return qr.quotient;
}

DegeneracyReport is_degenerate(const LrsSpec& s) {
    validate(s);
    DegeneracyReport rep;
    LrsSpec m = minimise(s);
    rep.minimal_order = m.order();
    if (std::all_of(m.initial.begin(), m.initial.end(), [](const Int& v) { return v == 0; })) return rep;
    Poly sf = squarefree_part(characteristic_poly(m));
    if (sf.degree() < 2) {
        rep.ratio_poly = Poly::constant(1);
        return rep;
    }
    rep.ratio_poly = ratio_polynomial(sf);
    auto hit = nt::cyclotomic_root_of_unity_test(rep.ratio_poly,
                                                  nt::ratio_cyclotomic_bound(static_cast<unsigned>(m.order())));
    rep.degenerate = hit.found;
    rep.order = hit.order;
    rep.all_orders = hit.all_orders;
    return rep;
}

Reduction nondegenerate_reduction(const LrsSpec& s) {
    auto rep = is_degenerate(s);
    if (!rep.degenerate) return {1, minimise(s)};
    std::uint64_t m = 1;
    for (unsigned o : rep.all_orders) m = std::lcm(m, std::uint64_t{o});
    // The cyclotomic bound k^2 keeps every order <= 2k^4 + 2; this cannot overflow for sane k.
    require(m < (std::uint64_t{1} << 20), "root-of-unity orders too large for decimation");
    Reduction r{m, decimate(s, m * m)};
    if (is_degenerate(r.spec).degenerate) fail(ErrorKind::internal, "decimated sequence is still degenerate");
    return r;
}

}  // namespace edslrs::lrs
