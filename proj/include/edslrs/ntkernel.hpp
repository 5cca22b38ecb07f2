#pragma once

#include "edslrs/bigint.hpp"
#include "edslrs/poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace edslrs::nt {

/// An element of Z/mZ, always held in canonical range [0, m).
class Residue {
  public:
    Residue(Int value, Int modulus);

    const Int& value() const { return value_; }
    const Int& modulus() const { return modulus_; }

    bool invertible() const;
    Residue inverse() const;
    Residue pow(const Int& e) const;

    friend Residue operator+(const Residue& a, const Residue& b);
    friend Residue operator-(const Residue& a, const Residue& b);
    friend Residue operator*(const Residue& a, const Residue& b);
    friend bool operator==(const Residue& a, const Residue& b) {
        return a.modulus_ == b.modulus_ && a.value_ == b.value_;
    }

  private:
    Int value_;
    Int modulus_;
};

/// Legendre symbol (a / r) for an odd prime r; returns -1, 0 or +1.
int legendre_symbol(const Int& a, const Int& r);

/// Square root of a modulo the odd prime r by Tonelli-Shanks. The smaller of the two
/// roots (the representative in [0, r/2]) is returned. Throws no_square_root for
/// non-residues.
Int sqrt_mod_prime(const Int& a, const Int& r);

/// Square root of a modulo r^e obtained by Hensel-lifting the canonical root mod r.
/// The result reduces mod r to sqrt_mod_prime(a, r).
Int hensel_lift_sqrt(const Int& a, const Int& r, unsigned e);

struct Congruence {
    Int value;
    Int modulus;
};

/// Chinese remaindering for pairwise coprime moduli. Throws not_coprime naming the pair.
Congruence crt_combine(const std::vector<Congruence>& residues);

/// lcm{p^j - 1 : 1 <= j <= k}.
Int lcm_tower(const Int& p, unsigned k);

/// Euler phi for small arguments.
std::uint64_t euler_phi(std::uint64_t m);

/// Phi_m over Z (cached).
const Poly& cyclotomic(unsigned m);

struct CyclotomicHit {
    bool found = false;
    /// Smallest m with gcd(f, Phi_m) != 1 (0 when not found).
    unsigned order = 0;
    /// Every m with phi(m) <= bound dividing f in the gcd sense.
    std::vector<unsigned> all_orders;
};

/// Does f share a factor with some Phi_m, phi(m) <= bound?
CyclotomicHit cyclotomic_root_of_unity_test(const Poly& f, unsigned bound);

/// Safe phi-bound for root ratios of an order-k recurrence.
inline unsigned ratio_cyclotomic_bound(unsigned k) { return k * k; }

}  // namespace edslrs::nt
