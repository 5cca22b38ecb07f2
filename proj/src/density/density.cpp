#include "edslrs/density.hpp"

#include "edslrs/error.hpp"
#include "edslrs/factor.hpp"

#include "edslrs/parallel.hpp"

#include <algorithm>

namespace edslrs::density {

namespace {

using u64 = std::uint64_t;

void check_prime_field(u64 q, u64 cap) {
    require(q >= 2 && nt::is_prime_u64(q), "q must be prime");
    require(q <= cap, "q = " + std::to_string(q) + " exceeds the enumeration cap " + std::to_string(cap));
}

/// Split [0, q) first-row values across workers; each fills its own histogram, merged by summation.
template <class Body>
std::vector<u64> partitioned(u64 q, unsigned jobs, Body body) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(q)));
    std::vector<std::vector<u64>> parts(jobs, std::vector<u64>(q * q, 0));
    parallel_strided(jobs, q, [&](unsigned t, std::size_t w) { body(w, parts[t]); });
    std::vector<u64> out(q * q, 0);
    for (auto& part : parts)
        for (u64 i = 0; i < out.size(); ++i) out[i] += part[i];
    return out;
}

/// Number of u in F_q^2 outside the column space of M (2x2).
u64 outside_image(u64 q, u64 m00, u64 m01, u64 m10, u64 m11) {
    std::vector<char> hit(q * q, 0);
    u64 n = 0;
    for (u64 v0 = 0; v0 < q; ++v0)
        for (u64 v1 = 0; v1 < q; ++v1) {
            u64 r0 = (m00 * v0 + m01 * v1) % q, r1 = (m10 * v0 + m11 * v1) % q;
            if (!hit[r0 * q + r1]) {
                hit[r0 * q + r1] = 1;
                ++n;
            }
        }
    return q * q - n;
}

DensityReport make_report(Kind kind, u64 q, u64 a, u64 b, u64 num, u64 den) {
    DensityReport r;
    r.kind = kind;
    r.q = q;
    r.a = a;
    r.b = b;
    r.numerator = from_u64(num);
    r.denominator = from_u64(den);
    r.delta = Rat(r.numerator, r.denominator);
    r.delta.canonicalize();
    return r;
}

}  // namespace

u64 gl2_order(u64 q) { return (q * q - 1) * (q * q - q); }

std::vector<u64> gl2_histogram(u64 q, unsigned jobs) {
    require(q >= 2 && nt::is_prime_u64(q), "q must be prime");
    return partitioned(q, jobs, [q](u64 w, std::vector<u64>& h) {
        for (u64 x = 0; x < q; ++x)
            for (u64 y = 0; y < q; ++y)
                for (u64 z = 0; z < q; ++z) {
                    const u64 det = (w * z + q * q - x * y % q) % q;
                    if (det == 0) continue;
                    ++h[((w + z) % q) * q + det];
                }
    });
}

std::vector<u64> affine_histogram(u64 q, unsigned jobs) {
    require(q >= 2 && nt::is_prime_u64(q), "q must be prime");
    return partitioned(q, jobs, [q](u64 w, std::vector<u64>& h) {
        for (u64 x = 0; x < q; ++x)
            for (u64 y = 0; y < q; ++y)
                for (u64 z = 0; z < q; ++z) {
                    const u64 det = (w * z + q * q - x * y % q) % q;
                    if (det == 0) continue;
                    h[((w + z) % q) * q + det] += outside_image(q, (w + q - 1) % q, x, y, (z + q - 1) % q);
                }
    });
}

DensityReport count_gl2(u64 q, u64 a, u64 b, u64 cap, unsigned jobs) {
    check_prime_field(q, cap);
    a %= q;
    b %= q;
    require(b != 0, "determinant b must be non-zero mod q");
    // Restricting to the requested cell keeps this a single pass over q^4 matrices.
    auto h = partitioned(q, jobs, [q, a, b](u64 w, std::vector<u64>& out) {
        const u64 z = (a + q - w) % q;
        for (u64 x = 0; x < q; ++x)
            for (u64 y = 0; y < q; ++y)
                if ((w * z + q * q - x * y % q) % q == b) ++out[0];
    });
    return make_report(Kind::gl2, q, a, b, h[0], gl2_order(q));
}

DensityReport count_affine(u64 q, u64 a, u64 b, u64 cap, unsigned jobs) {
    check_prime_field(q, cap);
    a %= q;
    b %= q;
    require(b != 0, "determinant b must be non-zero mod q");
    auto h = partitioned(q, jobs, [q, a, b](u64 w, std::vector<u64>& out) {
        const u64 z = (a + q - w) % q;
        for (u64 x = 0; x < q; ++x)
            for (u64 y = 0; y < q; ++y)
                if ((w * z + q * q - x * y % q) % q == b)
                    out[0] += outside_image(q, (w + q - 1) % q, x, y, (z + q - 1) % q);
    });
    return make_report(Kind::affine, q, a, b, h[0], gl2_order(q) * q * q);
}

WitnessPair affine_witness(u64 q, u64 a) {
    WitnessPair w{};
    w.j[0][0] = (a % q + q - 1) % q;
    w.j[0][1] = q - 1;
    w.j[1][0] = 0;
    w.j[1][1] = 1 % q;
    w.u[0] = 1 % q;
    w.u[1] = 1 % q;
    return w;
}

bool witness_is_counted(u64 q, const WitnessPair& w) {
    const u64 det = (w.j[0][0] * w.j[1][1] + q * q - w.j[0][1] * w.j[1][0] % q) % q;
    if (det == 0) return false;
    const u64 m00 = (w.j[0][0] + q - 1) % q, m01 = w.j[0][1], m10 = w.j[1][0], m11 = (w.j[1][1] + q - 1) % q;
    for (u64 v0 = 0; v0 < q; ++v0)
        for (u64 v1 = 0; v1 < q; ++v1)
            if ((m00 * v0 + m01 * v1) % q == w.u[0] && (m10 * v0 + m11 * v1) % q == w.u[1]) return false;
    return true;
}

DensityReport empirical_density(const ec::CurveQ& e, const ec::PointQ& pt, u64 q, u64 a, u64 x,
                                const ScanOptions& opt) {
    require(!pt.infinity, "point at infinity");
    require(x >= 3 && x <= (u64{1} << 31), "prime bound out of range");
    a %= q;
    const u64 b = (a + q - 1) % q;
    require(b != 0, "a = 1 (mod q) gives determinant 0");
    DensityReport r = count_affine(q, a, b, opt.affine_cap, opt.jobs);
    // x1 = 0: the order test runs on 2P instead of P.
    const ec::PointQ base = pt.x == 0 ? ec::add(pt, pt, e) : pt;
    const Int bad = e.disc() * pt.z;
    std::vector<u64> candidates;
    Empirical emp;
    emp.x = x;
    for (u64 p : nt::primes_up_to(static_cast<std::uint32_t>(x))) {
        if (p == 2 || mod_u64(bad, p) == 0) continue;
        if (std::find(opt.exclude.begin(), opt.exclude.end(), p) != opt.exclude.end()) continue;
        ++emp.scanned;
        if (p % q == b) candidates.push_back(p);
    }
    std::vector<char> match(candidates.size(), 0);
    parallel_strided(opt.jobs, candidates.size(), [&](unsigned, std::size_t i) {
        const u64 p = candidates[i];
        auto ef = ec::reduce(e, p);
        auto cnt = ec::count_points(ef);
        const auto sq = static_cast<std::int64_t>(q);
        if (((cnt.ap % sq) + sq) % sq != static_cast<std::int64_t>(a)) return;
        // #E = p - a_p + 1 = (a - 1) - a + 1 = 0 mod q
        if (cnt.order % q != 0) fail(ErrorKind::internal, "q does not divide #E(F_p) at p = " + std::to_string(p));
        auto red = ec::reduce(base, ef);
        if (!red.infinity && ec::point_order_fp(red, ef, cnt.order) % q == 0) match[i] = 1;
    });
    for (std::size_t i = 0; i < candidates.size(); ++i)
        if (match[i]) emp.primes.push_back(candidates[i]);
    emp.hits = emp.primes.size();
    emp.small_sample = emp.hits < 30;
    r.empirical = std::move(emp);
    return r;
}

nlohmann::json to_json(const DensityReport& r) {
    nlohmann::json j;
    j["kind"] = r.kind == Kind::gl2 ? "gl2" : "affine";
    j["q"] = r.q;
    j["a"] = r.a;
    j["b"] = r.b;
    j["numerator"] = to_dec(r.numerator);
    j["denominator"] = to_dec(r.denominator);
    j["delta_num"] = to_dec(Int(r.delta.get_num()));
    j["delta_den"] = to_dec(Int(r.delta.get_den()));
    if (r.empirical) {
        const auto& e = *r.empirical;
        j["empirical"] = {{"x", e.x}, {"hits", e.hits}, {"scanned", e.scanned}, {"primes", e.primes},
                          {"small_sample", e.small_sample}};
    }
    return j;
}

DensityReport from_json(const nlohmann::json& j) {
    try {
        DensityReport r;
        r.kind = j.at("kind").get<std::string>() == "affine" ? Kind::affine : Kind::gl2;
        r.q = j.at("q").get<u64>();
        r.a = j.at("a").get<u64>();
        r.b = j.at("b").get<u64>();
        r.numerator = parse_int(j.at("numerator").get<std::string>());
        r.denominator = parse_int(j.at("denominator").get<std::string>());
        r.delta = Rat(parse_int(j.at("delta_num").get<std::string>()), parse_int(j.at("delta_den").get<std::string>()));
        r.delta.canonicalize();
        if (j.contains("empirical")) {
            const auto& e = j.at("empirical");
            Empirical emp;
            emp.x = e.at("x").get<u64>();
            emp.hits = e.at("hits").get<u64>();
            emp.scanned = e.at("scanned").get<u64>();
            emp.primes = e.value("primes", std::vector<u64>{});
            emp.small_sample = e.value("small_sample", emp.hits < 30);
            r.empirical = std::move(emp);
        }
        return r;
    } catch (const nlohmann::json::exception& ex) {
        fail(ErrorKind::invalid_input, std::string("malformed density report: ") + ex.what());
    }
}

}  // namespace edslrs::density
