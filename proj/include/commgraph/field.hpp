#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "commgraph/error.hpp"

namespace cg {

using Int = boost::multiprecision::cpp_int;

// Reduced fraction, den > 0, gcd(num, den) = 1. Kept normalized by Field ops.
struct Rat {
    Int num{0};
    Int den{1};
};

// Field element. The field itself knows which alternative is live:
//   GF(p), k = 1      -> uint64_t residue in [0, p)
//   GF(p^k), k > 1    -> k coefficients, little-endian, each in [0, p)
//   Q                 -> Rat
// Elements are plain data; all arithmetic goes through Field.
using Fe = std::variant<std::uint64_t, std::vector<std::uint64_t>, Rat>;

enum class FieldKind { Rational, Finite };

bool is_prime_u64(std::uint64_t n);

class Field {
  public:
    // GF(p^k); when no modulus is given and k > 1, the monic irreducible
    // of degree k whose coefficient list (c0..ck, little-endian) read as a
    // base-p number is smallest is selected.
    static Field rationals();
    static Field finite(std::uint64_t p, unsigned k = 1);
    static Field finite(std::uint64_t p, unsigned k, const std::vector<std::uint64_t>& modulus);

    FieldKind kind() const;
    bool is_rational() const { return kind() == FieldKind::Rational; }
    bool is_finite() const { return kind() == FieldKind::Finite; }
    std::uint64_t characteristic() const; // 0 for Q
    std::uint64_t p() const;              // finite only
    unsigned k() const;                   // finite only
    const std::vector<std::uint64_t>& modulus() const; // finite, length k+1, monic
    Int order() const;                    // finite only: p^k

    bool same(const Field& o) const;
    friend bool operator==(const Field& a, const Field& b) { return a.same(b); }

    Fe zero() const;
    Fe one() const;
    Fe from_int(long long v) const;
    Fe from_coeffs(std::vector<std::uint64_t> c) const; // finite; length <= k, reduced mod p
    Fe from_rat(Int num, Int den) const;                // rationals; normalizes

    Fe add(const Fe& a, const Fe& b) const;
    Fe sub(const Fe& a, const Fe& b) const;
    Fe mul(const Fe& a, const Fe& b) const;
    Fe neg(const Fe& a) const;
    Fe inv(const Fe& a) const; // DivisionByZero on 0
    Fe div(const Fe& a, const Fe& b) const;
    Fe pow(const Fe& a, const Int& e) const; // e >= 0, or e < 0 with invertible a

    bool eq(const Fe& a, const Fe& b) const;
    bool is_zero(const Fe& a) const;
    bool is_one(const Fe& a) const;

    // Canonical element order: GF(p^k) by base-p value of the coefficient
    // list; Q by (denominator, numerator) under integer order.
    int cmp(const Fe& a, const Fe& b) const;

    // Canonical enumeration used for deterministic picks: finite fields list
    // all q elements by base-p value; Q yields 0, 1, 2, ...
    Fe element_at(std::uint64_t index) const;
    std::uint64_t element_index(const Fe& a) const; // finite only

    // Representation check (alternative kind, coefficient ranges, reduced
    // fraction). Throws FieldMismatch. Cannot tell GF(5)'s 3 from GF(7)'s 3.
    void check(const Fe& a) const;

    std::string to_string(const Fe& a) const;
    Fe parse(const std::string& text) const;

    std::string spec_line() const; // "field Q" | "field gf p k [c0,...,ck]"

  private:
    struct Data;
    std::shared_ptr<const Data> d;
    explicit Field(std::shared_ptr<const Data> dd) : d(std::move(dd)) {}
};

} // namespace cg
