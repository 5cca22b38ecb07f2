#include "edslrs/ntkernel.hpp"

#include "edslrs/error.hpp"
#include "edslrs/factor.hpp"

#include <map>
#include <mutex>
#include <string>

namespace edslrs::nt {

namespace {

void require_odd_prime(const Int& r, const char* who) {
    if (r < 3 || mpz_even_p(r.get_mpz_t()) || !is_prime(r)) {
        fail(ErrorKind::invalid_input, std::string(who) + ": modulus " + r.get_str() + " is not an odd prime");
    }
}

Int powm(const Int& b, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int invert(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
        fail(ErrorKind::not_coprime, a.get_str() + " is not invertible modulo " + m.get_str());
    }
    return r;
}

}  // namespace

Residue::Residue(Int value, Int modulus) : modulus_(std::move(modulus)) {
    if (modulus_ <= 0) fail(ErrorKind::invalid_input, "residue modulus must be positive");
    value_ = mod_floor(value, modulus_);
}

bool Residue::invertible() const { return gcd(value_, modulus_) == 1; }

Residue Residue::inverse() const { return Residue(invert(value_, modulus_), modulus_); }

Residue Residue::pow(const Int& e) const {
    if (e < 0) return inverse().pow(Int(-e));
    return Residue(powm(value_, e, modulus_), modulus_);
}

Residue operator+(const Residue& a, const Residue& b) {
    require(a.modulus_ == b.modulus_, "residue modulus mismatch");
    return Residue(a.value_ + b.value_, a.modulus_);
}

Residue operator-(const Residue& a, const Residue& b) {
    require(a.modulus_ == b.modulus_, "residue modulus mismatch");
    return Residue(a.value_ - b.value_, a.modulus_);
}

Residue operator*(const Residue& a, const Residue& b) {
    require(a.modulus_ == b.modulus_, "residue modulus mismatch");
    return Residue(a.value_ * b.value_, a.modulus_);
}

int legendre_symbol(const Int& a, const Int& r) {
    require_odd_prime(r, "legendre_symbol");
    Int v = mod_floor(a, r);
    return mpz_jacobi(v.get_mpz_t(), r.get_mpz_t());
}

Int sqrt_mod_prime(const Int& a, const Int& r) {
    require_odd_prime(r, "sqrt_mod_prime");
    Int n = mod_floor(a, r);
    if (n == 0) return Int(0);
    if (mpz_jacobi(n.get_mpz_t(), r.get_mpz_t()) != 1) {
        fail(ErrorKind::no_square_root, n.get_str() + " has no square root modulo " + r.get_str());
    }
    // r - 1 = q * 2^s with q odd
    Int q = r - 1;
    unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);

    Int z(2);
    while (mpz_jacobi(z.get_mpz_t(), r.get_mpz_t()) != -1) ++z;

    Int c = powm(z, q, r);
    Int x = powm(n, Int((q + 1) / 2), r);
    Int t = powm(n, q, r);
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        Int t2 = t;
        while (t2 != 1) {
            t2 = t2 * t2 % r;
            ++i;
        }
        Int b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % r;
        x = x * b % r;
        c = b * b % r;
        t = t * c % r;
        m = i;
    }
    Int other = r - x;
    return other < x ? other : x;
}

Int hensel_lift_sqrt(const Int& a, const Int& r, unsigned e) {
    require(e >= 1, "hensel_lift_sqrt: exponent must be >= 1");
    require_odd_prime(r, "hensel_lift_sqrt");
    if (e == 1) return sqrt_mod_prime(a, r);
    if (mod_floor(a, r) == 0) {
        fail(ErrorKind::invalid_input, "hensel_lift_sqrt: r divides a (non-unit case)");
    }
    Int s = sqrt_mod_prime(a, r);
    Int modulus = r;
    for (unsigned k = 2; k <= e; ++k) {
        modulus *= r;
        // Newton step s <- s - (s^2 - a) / (2 s)
        Int f = mod_floor(Int(s * s - a), modulus);
        Int step = mod_floor(Int(f * invert(mod_floor(Int(2 * s), modulus), modulus)), modulus);
        s = mod_floor(Int(s - step), modulus);
    }
    return s;
}

Congruence crt_combine(const std::vector<Congruence>& residues) {
    require(!residues.empty(), "crt_combine: empty system");
    for (const auto& c : residues) require(c.modulus > 0, "crt_combine: moduli must be positive");
    for (std::size_t i = 0; i < residues.size(); ++i) {
        for (std::size_t j = i + 1; j < residues.size(); ++j) {
            if (gcd(residues[i].modulus, residues[j].modulus) != 1) {
                fail(ErrorKind::not_coprime, "crt_combine: moduli " + residues[i].modulus.get_str() + " and " +
                                                 residues[j].modulus.get_str() + " (positions " + std::to_string(i) +
                                                 ", " + std::to_string(j) + ") are not coprime");
            }
        }
    }
    Int x = mod_floor(residues[0].value, residues[0].modulus);
    Int m = residues[0].modulus;
    for (std::size_t i = 1; i < residues.size(); ++i) {
        const Int& mi = residues[i].modulus;
        Int vi = mod_floor(residues[i].value, mi);
        // x + m * t = vi (mod mi)
        Int t = mod_floor(Int((vi - x) * invert(mod_floor(m, mi), mi)), mi);
        x += m * t;
        m *= mi;
        x = mod_floor(x, m);
    }
    return {x, m};
}

Int lcm_tower(const Int& p, unsigned k) {
    require(k >= 1, "lcm_tower: k must be >= 1");
    require(is_prime(p), "lcm_tower: " + p.get_str() + " is not prime");
    Int l(1);
    Int pj(1);
    for (unsigned j = 1; j <= k; ++j) {
        pj *= p;
        l = lcm(l, Int(pj - 1));
    }
    return l;
}

std::uint64_t euler_phi(std::uint64_t m) {
    if (m == 0) return 0;
    std::uint64_t result = m;
    std::uint64_t n = m;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

const Poly& cyclotomic(unsigned m) {
    require(m >= 1, "cyclotomic: order must be >= 1");
    static std::mutex mu;
    static std::map<unsigned, Poly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(m); it != cache.end()) return it->second;
    }
    Poly num = Poly::monomial(Rat(1), m) - Poly::constant(Rat(1));
    for (unsigned d = 1; d < m; ++d) {
        if (m % d == 0) num = divmod(num, cyclotomic(d)).quotient;
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(m, std::move(num)).first->second;
}

CyclotomicHit cyclotomic_root_of_unity_test(const Poly& f, unsigned bound) {
    require(!f.is_zero(), "cyclotomic_root_of_unity_test: zero polynomial");
    CyclotomicHit hit;
    if (f.degree() == 0) return hit;
    // phi(m) >= sqrt(m / 2), so m <= 2 bound^2 covers every m with phi(m) <= bound
    const std::uint64_t m_max = 2ULL * bound * bound + 2;
    for (std::uint64_t m = 1; m <= m_max; ++m) {
        std::uint64_t ph = euler_phi(m);
        if (ph > bound || static_cast<long>(ph) > f.degree()) continue;
        // Phi_m is irreducible over Q, so a common factor means Phi_m | f
        if (divmod(f, cyclotomic(static_cast<unsigned>(m))).remainder.is_zero()) {
            if (!hit.found) hit.order = static_cast<unsigned>(m);
            hit.found = true;
            hit.all_orders.push_back(static_cast<unsigned>(m));
        }
    }
    return hit;
}

}  // namespace edslrs::nt
