#pragma once

#include "edslrs/bigint.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace edslrs {

/// Dense univariate polynomial over Q. coeffs[i] multiplies X^i; the
/// representation is always trimmed, so the zero polynomial has no coefficients.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<long> coeffs);

    static Poly constant(const Rat& c);
    static Poly monomial(const Rat& c, std::size_t degree);
    static Poly x() { return monomial(Rat(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    Rat leading() const { return is_zero() ? Rat(0) : coeffs_.back(); }
    Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    Rat eval(const Rat& at) const;
    /// this(inner(X))
    Poly compose(const Poly& inner) const;
    Poly derivative() const;
    Poly monic() const;
    Poly pow(unsigned e) const;
    /// Substitute X -> scale * X.
    Poly scale_var(const Rat& scale) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rat& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
    friend Poly operator-(Poly a) { return a *= Rat(-1); }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string(const char* var = "X") const;

  private:
    void trim();
    std::vector<Rat> coeffs_;
};

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

PolyDivision divmod(const Poly& num, const Poly& den);
/// Monic gcd (zero only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);
Poly squarefree_part(const Poly& f);
/// Lagrange interpolation through (xs[i], ys[i]); xs distinct.
Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

/// Integer polynomial with the same roots (clears denominators, removes content).
std::vector<Int> primitive_integer_coeffs(const Poly& f);

}  // namespace edslrs
