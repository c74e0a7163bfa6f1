#pragma once

#include <string>
#include <utility>
#include <vector>

#include "commgraph/field.hpp"

namespace cg {

// Dense univariate polynomial, coefficients little-endian, always trimmed
// (no trailing zeros). Zero polynomial has empty coefficient list, degree -1.
class Poly {
  public:
    explicit Poly(Field f) : f_(std::move(f)) {}
    Poly(Field f, std::vector<Fe> coeffs);

    const Field& field() const { return f_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const;
    const std::vector<Fe>& coeffs() const { return c_; }
    Fe coeff(int i) const; // 0 beyond degree
    Fe leading() const;    // DegreeMismatch on zero poly

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly constant(const Field& f, const Fe& a);
    static Poly x(const Field& f);
    static Poly from_roots(const Field& f, const std::vector<Fe>& roots);

    Fe eval(const Fe& x) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly scale(const Fe& a) const;
    Poly shift(int m) const; // * x^m

    std::pair<Poly, Poly> divmod(const Poly& b) const; // DivisionByZero
    Poly make_monic() const;
    Poly derivative() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    Field f_;
    std::vector<Fe> c_;
    void trim();
};

// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);
Poly poly_lcm(const Poly& a, const Poly& b);

// a^e mod m, e >= 0.
Poly poly_powmod(const Poly& a, const Int& e, const Poly& m);

// Roots in the base field with multiplicities, sorted by canonical element
// order. Finite fields: exhaustive evaluation (guarded). Q: rational-root
// search on the primitive integer form.
std::vector<std::pair<Fe, int>> poly_roots_in_field(const Poly& f);

// Irreducibility over a finite base field via the gcd(f, x^(q^i) - x)
// ladder, i <= deg/2. Pre: monic, degree >= 1. InfiniteField over Q.
bool poly_is_irreducible(const Poly& f);

// Degrees of irreducible factors (with multiplicity ignored): finite fields
// via distinct-degree factorization; over Q only rational roots are split
// off and the remainder is reported as one block.
std::vector<int> poly_factor_degrees(const Poly& f);

} // namespace cg
