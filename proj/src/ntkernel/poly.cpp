#include "edslrs/poly.hpp"

#include "edslrs/error.hpp"

#include <sstream>
#include <utility>

namespace edslrs {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

Poly Poly::constant(const Rat& c) { return Poly(std::vector<Rat>{c}); }

Poly Poly::monomial(const Rat& c, std::size_t degree) {
    std::vector<Rat> v(degree + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat Poly::eval(const Rat& at) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= inner;
        acc += constant(*it);
    }
    return acc;
}

Poly Poly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rat> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return {};
    Poly r = *this;
    Rat lc = leading();
    for (auto& c : r.coeffs_) c /= lc;
    return r;
}

Poly Poly::pow(unsigned e) const {
    Poly result = constant(Rat(1));
    Poly base = *this;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

Poly Poly::scale_var(const Rat& scale) const {
    std::vector<Rat> v = coeffs_;
    Rat s(1);
    for (auto& c : v) {
        c *= s;
        s *= scale;
    }
    return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rat> r(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(r);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rat& c) {
    for (auto& v : coeffs_) v *= c;
    trim();
    return *this;
}

std::string Poly::to_string(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || i == 0) {
            out << mag.get_str();
            if (i > 0) out << "*";
        }
        if (i > 0) out << var;
        if (i > 1) out << "^" << i;
    }
    return out.str();
}

PolyDivision divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) fail(ErrorKind::invalid_input, "polynomial division by zero");
    std::vector<Rat> rem = num.coeffs();
    long dd = den.degree();
    long dn = num.degree();
    if (dn < dd) return {Poly(), num};
    std::vector<Rat> quot(static_cast<std::size_t>(dn - dd + 1));
    Rat lc = den.leading();
    for (long i = dn - dd; i >= 0; --i) {
        Rat c = rem[static_cast<std::size_t>(i + dd)] / lc;
        quot[static_cast<std::size_t>(i)] = c;
        if (c == 0) continue;
        for (long j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i + j)] -= c * den.coeff(static_cast<std::size_t>(j));
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).remainder;
        x = std::move(y);
        // keep the intermediate coefficients small
        y = r.monic();
    }
    return x.monic();
}

Poly squarefree_part(const Poly& f) {
    if (f.degree() <= 0) return f.monic();
    Poly g = gcd(f, f.derivative());
    return divmod(f, g).quotient.monic();
}

Poly interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    require(xs.size() == ys.size(), "interpolate: size mismatch");
    Poly result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Poly basis = Poly::constant(Rat(1));
        Rat denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis *= Poly(std::vector<Rat>{Rat(-xs[j]), Rat(1)});
            denom *= xs[i] - xs[j];
        }
        result += basis * Rat(ys[i] / denom);
    }
    return result;
}

std::vector<Int> primitive_integer_coeffs(const Poly& f) {
    Int den(1);
    for (const auto& c : f.coeffs()) den = lcm(den, c.get_den());
    std::vector<Int> out;
    Int content(0);
    for (const auto& c : f.coeffs()) {
        Int v = c.get_num() * (den / c.get_den());
        content = gcd(content, v);
        out.push_back(v);
    }
    if (content > 1) {
        for (auto& v : out) v = exact_div(v, content);
    }
    if (!out.empty() && out.back() < 0) {
        for (auto& v : out) v = -v;
    }
    return out;
}

}  // namespace edslrs
