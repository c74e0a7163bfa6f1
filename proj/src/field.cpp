#include "commgraph/field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "commgraph/poly.hpp"

namespace cg {

const char* err_name(Err c) {
    switch (c) {
        case Err::NonPrime: return "NonPrime";
        case Err::ReducibleModulus: return "ReducibleModulus";
        case Err::DegreeMismatch: return "DegreeMismatch";
        case Err::DivisionByZero: return "DivisionByZero";
        case Err::FieldMismatch: return "FieldMismatch";
        case Err::ShapeMismatch: return "ShapeMismatch";
        case Err::TooLarge: return "TooLarge";
        case Err::NotMonic: return "NotMonic";
        case Err::ScalarInput: return "ScalarInput";
        case Err::NonSplitSpectrum: return "NonSplitSpectrum";
        case Err::NoEigenvalueInField: return "NoEigenvalueInField";
        case Err::InfiniteField: return "InfiniteField";
        case Err::BudgetExceeded: return "BudgetExceeded";
        case Err::DegenerateParameters: return "DegenerateParameters";
        case Err::NotMinimalSpec: return "NotMinimalSpec";
        case Err::BadConjugator: return "BadConjugator";
        case Err::BadParameters: return "BadParameters";
        case Err::BadDimension: return "BadDimension";
        case Err::RepeatedEigenvalues: return "RepeatedEigenvalues";
        case Err::Char2IndexClash: return "Char2IndexClash";
        case Err::WrongClass: return "WrongClass";
        case Err::MinimalInput: return "MinimalInput";
        case Err::NotSemisimpleMinimal: return "NotSemisimpleMinimal";
        case Err::FieldTooSmall: return "FieldTooSmall";
        case Err::SemisimpleInput: return "SemisimpleInput";
        case Err::NotJordan: return "NotJordan";
        case Err::AmbientMismatch: return "AmbientMismatch";
        case Err::IdentityMissing: return "IdentityMissing";
        case Err::ParseError: return "ParseError";
        case Err::Unsupported: return "Unsupported";
        case Err::Internal: return "Internal";
    }
    return "Unknown";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((u128)a * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Deterministic Miller-Rabin base set for 64-bit integers.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

struct Field::Data {
    FieldKind kind;
    u64 p = 0;
    unsigned k = 1;
    std::vector<u64> modulus; // length k+1, monic, little-endian; empty for k==1
};

namespace {

// Coefficient-vector arithmetic mod p for extension-field internals. Vectors
// are little-endian and not necessarily trimmed.
void cv_trim(std::vector<u64>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int cv_deg(const std::vector<u64>& a) {
    int d = static_cast<int>(a.size()) - 1;
    while (d >= 0 && a[d] == 0) --d;
    return d;
}

u64 inv_mod_p(u64 a, u64 p) {
    require(a % p != 0, Err::DivisionByZero, "inverse of zero");
    return powmod_u64(a % p, p - 2, p);
}

// r = r - c * x^shift * b  (mod p)
void cv_submul(std::vector<u64>& r, u64 c, int shift, const std::vector<u64>& b, u64 p) {
    if (c == 0) return;
    if (r.size() < b.size() + shift) r.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i) {
        u64 t = mulmod(c, b[i], p);
        u64& ri = r[i + shift];
        ri = (ri + p - t) % p;
    }
}

std::vector<u64> cv_mod(std::vector<u64> a, const std::vector<u64>& m, u64 p) {
    int dm = cv_deg(m);
    u64 lead_inv = inv_mod_p(m[dm], p);
    for (int d = cv_deg(a); d >= dm; d = cv_deg(a)) {
        u64 c = mulmod(a[d], lead_inv, p);
        cv_submul(a, c, d - dm, m, p);
        a[d] = 0;
    }
    cv_trim(a);
    return a;
}

std::vector<u64> cv_mul(const std::vector<u64>& a, const std::vector<u64>& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + (u128)a[i] * b[j]) % p;
        }
    }
    return r;
}

// Extended Euclid over GF(p)[x]: returns s with s*a = gcd (mod m), and
// requires gcd(a, m) = 1, i.e. a invertible mod m.
std::vector<u64> cv_invmod(std::vector<u64> a, std::vector<u64> m, u64 p) {
    std::vector<u64> r0 = std::move(m), r1 = cv_mod(std::move(a), r0, p);
    std::vector<u64> s0 = {}, s1 = {1};
    while (cv_deg(r1) >= 0) {
        // divide r0 by r1
        int d1 = cv_deg(r1);
        u64 lead_inv = inv_mod_p(r1[d1], p);
        std::vector<u64> q(std::max(cv_deg(r0) - d1 + 1, 1), 0);
        std::vector<u64> rem = r0;
        for (int d = cv_deg(rem); d >= d1; d = cv_deg(rem)) {
            u64 c = mulmod(rem[d], lead_inv, p);
            q[d - d1] = c;
            cv_submul(rem, c, d - d1, r1, p);
            rem[d] = 0;
        }
        cv_trim(rem);
        // s2 = s0 - q*s1
        std::vector<u64> qs1 = cv_mul(q, s1, p);
        std::vector<u64> s2 = s0;
        if (s2.size() < qs1.size()) s2.resize(qs1.size(), 0);
        for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] = (s2[i] + p - qs1[i]) % p;
        cv_trim(s2);
        r0 = std::move(r1); r1 = std::move(rem);
        s0 = std::move(s1); s1 = std::move(s2);
    }
    require(cv_deg(r0) == 0, Err::DivisionByZero, "element not invertible");
    u64 c = inv_mod_p(r0[0], p);
    for (auto& x : s0) x = mulmod(x, c, p);
    cv_trim(s0);
    return s0;
}

Rat rat_norm(Int num, Int den) {
    require(den != 0, Err::DivisionByZero, "zero denominator");
    if (den < 0) { num = -num; den = -den; }
    Int g = boost::multiprecision::gcd(num < 0 ? Int(-num) : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
    return Rat{std::move(num), std::move(den)};
}

} // namespace

Field Field::rationals() {
    auto d = std::make_shared<Data>();
    d->kind = FieldKind::Rational;
    return Field(std::move(d));
}

Field Field::finite(u64 p, unsigned k) {
    require(is_prime_u64(p), Err::NonPrime, "p = " + std::to_string(p));
    require(k >= 1, Err::BadParameters, "k must be >= 1");
    if (k == 1) {
        auto d = std::make_shared<Data>();
        d->kind = FieldKind::Finite;
        d->p = p;
        d->k = 1;
        return Field(std::move(d));
    }
    // Smallest monic irreducible of degree k: coefficient list read as a
    // base-p number, low coefficients varying fastest.
    Field base = Field::finite(p, 1);
    double bits = k * std::log2((double)p);
    require(bits <= 40, Err::TooLarge, "default modulus search space too large");
    u64 total = 1;
    for (unsigned i = 0; i < k; ++i) total *= p;
    for (u64 m = 0; m < total; ++m) {
        std::vector<Fe> c(k + 1);
        u64 t = m;
        for (unsigned i = 0; i < k; ++i) { c[i] = Fe(t % p); t /= p; }
        c[k] = Fe(u64(1));
        Poly f(base, c);
        if (poly_is_irreducible(f)) {
            std::vector<u64> mod(k + 1);
            t = m;
            for (unsigned i = 0; i < k; ++i) { mod[i] = t % p; t /= p; }
            mod[k] = 1;
            return finite(p, k, mod);
        }
    }
    fail(Err::Internal, "no irreducible modulus found");
}

Field Field::finite(u64 p, unsigned k, const std::vector<u64>& modulus) {
    require(is_prime_u64(p), Err::NonPrime, "p = " + std::to_string(p));
    require(k >= 1, Err::BadParameters, "k must be >= 1");
    require(modulus.size() == k + 1, Err::DegreeMismatch,
            "modulus must have k+1 coefficients");
    for (u64 c : modulus) require(c < p, Err::BadParameters, "modulus coefficient out of range");
    require(modulus[k] == 1, Err::NotMonic, "modulus must be monic");
    if (k > 1) {
        Field base = Field::finite(p, 1);
        std::vector<Fe> c(modulus.size());
        for (std::size_t i = 0; i < modulus.size(); ++i) c[i] = Fe(modulus[i]);
        require(poly_is_irreducible(Poly(base, c)), Err::ReducibleModulus,
                "modulus is not irreducible over GF(p)");
    }
    auto d = std::make_shared<Data>();
    d->kind = FieldKind::Finite;
    d->p = p;
    d->k = k;
    if (k > 1) d->modulus = modulus;
    return Field(std::move(d));
}

FieldKind Field::kind() const { return d->kind; }
u64 Field::characteristic() const { return d->kind == FieldKind::Finite ? d->p : 0; }

u64 Field::p() const {
    require(is_finite(), Err::InfiniteField, "p() on Q");
    return d->p;
}

unsigned Field::k() const {
    require(is_finite(), Err::InfiniteField, "k() on Q");
    return d->k;
}

const std::vector<u64>& Field::modulus() const {
    require(is_finite() && d->k > 1, Err::BadParameters, "modulus() needs k > 1");
    return d->modulus;
}

Int Field::order() const {
    require(is_finite(), Err::InfiniteField, "order() on Q");
    Int q = 1;
    for (unsigned i = 0; i < d->k; ++i) q *= d->p;
    return q;
}

bool Field::same(const Field& o) const {
    if (d->kind != o.d->kind) return false;
    if (d->kind == FieldKind::Rational) return true;
    return d->p == o.d->p && d->k == o.d->k && d->modulus == o.d->modulus;
}

Fe Field::zero() const {
    if (is_rational()) return Rat{};
    if (d->k == 1) return u64(0);
    return std::vector<u64>(d->k, 0);
}

Fe Field::one() const {
    if (is_rational()) return Rat{1, 1};
    if (d->k == 1) return u64(1 % d->p);
    std::vector<u64> c(d->k, 0);
    c[0] = 1;
    return c;
}

Fe Field::from_int(long long v) const {
    if (is_rational()) return Rat{Int(v), Int(1)};
    long long m = v % (long long)d->p;
    u64 r = m < 0 ? u64(m + (long long)d->p) : u64(m);
    if (d->k == 1) return r;
    std::vector<u64> c(d->k, 0);
    c[0] = r;
    return c;
}

Fe Field::from_coeffs(std::vector<u64> c) const {
    require(is_finite(), Err::FieldMismatch, "coefficient element on Q");
    require(c.size() <= d->k, Err::DegreeMismatch, "too many coefficients");
    for (auto& x : c) x %= d->p;
    if (d->k == 1) return c.empty() ? u64(0) : c[0];
    c.resize(d->k, 0);
    return c;
}

Fe Field::from_rat(Int num, Int den) const {
    require(is_rational(), Err::FieldMismatch, "rational element on finite field");
    return rat_norm(std::move(num), std::move(den));
}

void Field::check(const Fe& a) const {
    if (is_rational()) {
        const Rat* r = std::get_if<Rat>(&a);
        require(r != nullptr, Err::FieldMismatch, "expected rational element");
        require(r->den > 0, Err::FieldMismatch, "denominator must be positive");
        require(boost::multiprecision::gcd(r->num < 0 ? Int(-r->num) : r->num, r->den) <= 1
                    || r->num == 0,
                Err::FieldMismatch, "fraction not reduced");
        return;
    }
    if (d->k == 1) {
        const u64* u = std::get_if<u64>(&a);
        require(u != nullptr, Err::FieldMismatch, "expected prime-field residue");
        require(*u < d->p, Err::FieldMismatch, "residue out of range");
        return;
    }
    const auto* v = std::get_if<std::vector<u64>>(&a);
    require(v != nullptr, Err::FieldMismatch, "expected coefficient vector");
    require(v->size() == d->k, Err::FieldMismatch, "coefficient count mismatch");
    for (u64 c : *v) require(c < d->p, Err::FieldMismatch, "coefficient out of range");
}

Fe Field::add(const Fe& a, const Fe& b) const {
    if (is_rational()) {
        const Rat& x = std::get<Rat>(a);
        const Rat& y = std::get<Rat>(b);
        return rat_norm(x.num * y.den + y.num * x.den, x.den * y.den);
    }
    if (d->k == 1) {
        u64 s = std::get<u64>(a) + std::get<u64>(b);
        if (s >= d->p) s -= d->p;
        return s;
    }
    const auto& x = std::get<std::vector<u64>>(a);
    const auto& y = std::get<std::vector<u64>>(b);
    std::vector<u64> r(d->k);
    for (unsigned i = 0; i < d->k; ++i) {
        u64 s = x[i] + y[i];
        r[i] = s >= d->p ? s - d->p : s;
    }
    return r;
}

Fe Field::neg(const Fe& a) const {
    if (is_rational()) {
        const Rat& x = std::get<Rat>(a);
        return Rat{-x.num, x.den};
    }
    if (d->k == 1) {
        u64 v = std::get<u64>(a);
        return v == 0 ? u64(0) : d->p - v;
    }
    const auto& x = std::get<std::vector<u64>>(a);
    std::vector<u64> r(d->k);
    for (unsigned i = 0; i < d->k; ++i) r[i] = x[i] == 0 ? 0 : d->p - x[i];
    return r;
}

Fe Field::sub(const Fe& a, const Fe& b) const { return add(a, neg(b)); }

Fe Field::mul(const Fe& a, const Fe& b) const {
    if (is_rational()) {
        const Rat& x = std::get<Rat>(a);
        const Rat& y = std::get<Rat>(b);
        return rat_norm(x.num * y.num, x.den * y.den);
    }
    if (d->k == 1) return mulmod(std::get<u64>(a), std::get<u64>(b), d->p);
    const auto& x = std::get<std::vector<u64>>(a);
    const auto& y = std::get<std::vector<u64>>(b);
    std::vector<u64> r = cv_mod(cv_mul(x, y, d->p), d->modulus, d->p);
    r.resize(d->k, 0);
    return r;
}

Fe Field::inv(const Fe& a) const {
    require(!is_zero(a), Err::DivisionByZero, "inverse of zero");
    if (is_rational()) {
        const Rat& x = std::get<Rat>(a);
        return rat_norm(x.den, x.num);
    }
    if (d->k == 1) return inv_mod_p(std::get<u64>(a), d->p);
    std::vector<u64> r = cv_invmod(std::get<std::vector<u64>>(a), d->modulus, d->p);
    r.resize(d->k, 0);
    return r;
}

Fe Field::div(const Fe& a, const Fe& b) const { return mul(a, inv(b)); }

Fe Field::pow(const Fe& a, const Int& e) const {
    if (e < 0) return pow(inv(a), -e);
    Fe r = one();
    Fe base = a;
    Int ee = e;
    while (ee > 0) {
        if ((ee & 1) != 0) r = mul(r, base);
        base = mul(base, base);
        ee >>= 1;
    }
    return r;
}

bool Field::eq(const Fe& a, const Fe& b) const {
    if (is_rational()) {
        const Rat& x = std::get<Rat>(a);
        const Rat& y = std::get<Rat>(b);
        return x.num == y.num && x.den == y.den;
    }
    if (d->k == 1) return std::get<u64>(a) == std::get<u64>(b);
    return std::get<std::vector<u64>>(a) == std::get<std::vector<u64>>(b);
}

bool Field::is_zero(const Fe& a) const { return eq(a, zero()); }
bool Field::is_one(const Fe& a) const { return eq(a, one()); }

int Field::cmp(const Fe& a, const Fe& b) const {
    if (is_rational()) {
        const Rat& x = std::get<Rat>(a);
        const Rat& y = std::get<Rat>(b);
        if (x.den != y.den) return x.den < y.den ? -1 : 1;
        if (x.num != y.num) return x.num < y.num ? -1 : 1;
        return 0;
    }
    if (d->k == 1) {
        u64 x = std::get<u64>(a), y = std::get<u64>(b);
        return x < y ? -1 : x > y ? 1 : 0;
    }
    const auto& x = std::get<std::vector<u64>>(a);
    const auto& y = std::get<std::vector<u64>>(b);
    for (int i = (int)d->k - 1; i >= 0; --i) {
        if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
    }
    return 0;
}

Fe Field::element_at(u64 index) const {
    if (is_rational()) return Rat{Int(index), 1};
    if (d->k == 1) {
        require(index < d->p, Err::BadParameters, "element index out of range");
        return index;
    }
    std::vector<u64> c(d->k);
    for (unsigned i = 0; i < d->k; ++i) { c[i] = index % d->p; index /= d->p; }
    require(index == 0, Err::BadParameters, "element index out of range");
    return c;
}

u64 Field::element_index(const Fe& a) const {
    require(is_finite(), Err::InfiniteField, "element_index on Q");
    if (d->k == 1) return std::get<u64>(a);
    const auto& c = std::get<std::vector<u64>>(a);
    u64 idx = 0;
    for (int i = (int)d->k - 1; i >= 0; --i) idx = idx * d->p + c[i];
    return idx;
}

std::string Field::to_string(const Fe& a) const {
    if (is_rational()) {
        const Rat& x = std::get<Rat>(a);
        std::ostringstream os;
        os << x.num;
        if (x.den != 1) os << "/" << x.den;
        return os.str();
    }
    if (d->k == 1) return std::to_string(std::get<u64>(a));
    const auto& c = std::get<std::vector<u64>>(a);
    std::string s = "[";
    for (unsigned i = 0; i < d->k; ++i) {
        if (i) s += ":";
        s += std::to_string(c[i]);
    }
    s += "]";
    return s;
}

Fe Field::parse(const std::string& text) const {
    if (is_rational()) {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos) return rat_norm(Int(text), 1);
            return rat_norm(Int(text.substr(0, slash)), Int(text.substr(slash + 1)));
        } catch (const std::exception&) {
            fail(Err::ParseError, "bad rational: " + text);
        }
    }
    if (d->k == 1) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(text, &pos);
            require(pos == text.size(), Err::ParseError, "bad residue: " + text);
            require(v >= 0 && (u64)v < d->p, Err::ParseError, "residue out of range: " + text);
            return u64(v);
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            fail(Err::ParseError, "bad residue: " + text);
        }
    }
    require(text.size() >= 2 && text.front() == '[' && text.back() == ']', Err::ParseError,
            "extension element must look like [c0:c1:...]: " + text);
    std::vector<u64> c;
    std::string body = text.substr(1, text.size() - 2);
    std::istringstream is(body);
    std::string tok;
    while (std::getline(is, tok, ':')) {
        try {
            long long v = std::stoll(tok);
            require(v >= 0 && (u64)v < d->p, Err::ParseError, "coefficient out of range: " + tok);
            c.push_back((u64)v);
        } catch (const Error&) {
            throw;
        } catch (const std::exception&) {
            fail(Err::ParseError, "bad coefficient: " + tok);
        }
    }
    require(c.size() == d->k, Err::ParseError, "expected " + std::to_string(d->k) + " coefficients");
    return c;
}

std::string Field::spec_line() const {
    if (is_rational()) return "field Q";
    std::string s = "field gf " + std::to_string(d->p) + " " + std::to_string(d->k);
    if (d->k > 1) {
        s += " [";
        for (unsigned i = 0; i <= d->k; ++i) {
            if (i) s += ",";
            s += std::to_string(d->modulus[i]);
        }
        s += "]";
    }
    return s;
}

} // namespace cg
