#include "commgraph/poly.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cg {

namespace {

void check_same(const Field& a, const Field& b) {
    require(a.same(b), Err::FieldMismatch, "polynomials over different fields");
}

} // namespace

Poly::Poly(Field f, std::vector<Fe> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    for (const Fe& x : c_) f_.check(x);
    trim();
}

void Poly::trim() {
    while (!c_.empty() && f_.is_zero(c_.back())) c_.pop_back();
}

bool Poly::is_monic() const { return !c_.empty() && f_.is_one(c_.back()); }

Fe Poly::coeff(int i) const {
    if (i < 0 || i >= (int)c_.size()) return f_.zero();
    return c_[i];
}

Fe Poly::leading() const {
    require(!c_.empty(), Err::DegreeMismatch, "zero polynomial has no leading coefficient");
    return c_.back();
}

Poly Poly::constant(const Field& f, const Fe& a) { return Poly(f, {a}); }

Poly Poly::x(const Field& f) { return Poly(f, {f.zero(), f.one()}); }

Poly Poly::from_roots(const Field& f, const std::vector<Fe>& roots) {
    Poly r = constant(f, f.one());
    for (const Fe& root : roots) r = r * Poly(f, {f.neg(root), f.one()});
    return r;
}

Fe Poly::eval(const Fe& x) const {
    Fe acc = f_.zero();
    for (int i = degree(); i >= 0; --i) acc = f_.add(f_.mul(acc, x), c_[i]);
    return acc;
}

Poly operator+(const Poly& a, const Poly& b) {
    check_same(a.f_, b.f_);
    std::vector<Fe> c(std::max(a.c_.size(), b.c_.size()), a.f_.zero());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.f_.add(a.coeff((int)i), b.coeff((int)i));
    return Poly(a.f_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly Poly::operator-() const {
    std::vector<Fe> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = f_.neg(c_[i]);
    return Poly(f_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    check_same(a.f_, b.f_);
    if (a.is_zero() || b.is_zero()) return Poly(a.f_);
    std::vector<Fe> c(a.c_.size() + b.c_.size() - 1, a.f_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.f_.is_zero(a.c_[i])) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            c[i + j] = a.f_.add(c[i + j], a.f_.mul(a.c_[i], b.c_[j]));
        }
    }
    return Poly(a.f_, std::move(c));
}

bool operator==(const Poly& a, const Poly& b) {
    if (!a.f_.same(b.f_) || a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (!a.f_.eq(a.c_[i], b.c_[i])) return false;
    }
    return true;
}

Poly Poly::scale(const Fe& a) const {
    std::vector<Fe> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = f_.mul(c_[i], a);
    return Poly(f_, std::move(c));
}

Poly Poly::shift(int m) const {
    if (is_zero()) return *this;
    std::vector<Fe> c(c_.size() + m, f_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i + m] = c_[i];
    return Poly(f_, std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& b) const {
    check_same(f_, b.f_);
    require(!b.is_zero(), Err::DivisionByZero, "division by zero polynomial");
    Poly q(f_), r = *this;
    Fe lead_inv = f_.inv(b.leading());
    std::vector<Fe> qc(std::max(degree() - b.degree() + 1, 0), f_.zero());
    while (r.degree() >= b.degree()) {
        int sh = r.degree() - b.degree();
        Fe c = f_.mul(r.leading(), lead_inv);
        qc[sh] = c;
        r = r - b.scale(c).shift(sh);
    }
    return {Poly(f_, std::move(qc)), std::move(r)};
}

Poly Poly::make_monic() const {
    require(!is_zero(), Err::DegreeMismatch, "cannot normalize zero polynomial");
    return scale(f_.inv(leading()));
}

Poly Poly::derivative() const {
    if (degree() <= 0) return Poly(f_);
    std::vector<Fe> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        Fe n = f_.from_int((long long)i);
        c[i - 1] = f_.mul(c_[i], n);
    }
    return Poly(f_, std::move(c));
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (f_.is_zero(c_[i])) continue;
        if (!s.empty()) s += " + ";
        bool unit = f_.is_one(c_[i]);
        if (i == 0 || !unit) s += f_.to_string(c_[i]);
        if (i > 0) {
            if (!unit) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly r2 = r0.divmod(r1).second;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    if (r0.is_zero()) return r0;
    return r0.make_monic();
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.field());
    Poly g = poly_gcd(a, b);
    return (a * b).divmod(g).first.make_monic();
}

Poly poly_powmod(const Poly& a, const Int& e, const Poly& m) {
    require(e >= 0, Err::BadParameters, "negative exponent");
    Poly r = Poly::constant(a.field(), a.field().one());
    r = r.divmod(m).second;
    Poly base = a.divmod(m).second;
    Int ee = e;
    while (ee > 0) {
        if ((ee & 1) != 0) r = (r * base).divmod(m).second;
        base = (base * base).divmod(m).second;
        ee >>= 1;
    }
    return r;
}

namespace {

using u64 = std::uint64_t;

u64 mulmod_u(u64 a, u64 b, u64 m) { return (u64)((unsigned __int128)a * b % m); }

u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        auto step = [&](u64 v) { return (mulmod_u(v, v, n) + c) % n; };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            u64 diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            d = std::gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_u64(u64 n, std::map<u64, int>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) { out[n]++; return; }
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        if (n % p == 0) {
            out[p]++;
            factor_u64(n / p, out);
            return;
        }
    }
    u64 d = pollard_rho(n);
    factor_u64(d, out);
    factor_u64(n / d, out);
}

std::vector<u64> divisors_u64(u64 n) {
    std::map<u64, int> fac;
    factor_u64(n, fac);
    std::vector<u64> divs = {1};
    for (auto [p, e] : fac) {
        std::size_t sz = divs.size();
        u64 pe = 1;
        for (int i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pe);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<std::pair<Fe, int>> roots_finite(const Poly& f) {
    const Field& F = f.field();
    Int q = F.order();
    require(q <= Int(1) << 22, Err::TooLarge, "field too large for exhaustive root search");
    std::vector<std::pair<Fe, int>> out;
    Poly g = f;
    for (u64 i = 0; i < (u64)q; ++i) {
        Fe r = F.element_at(i);
        if (!F.is_zero(f.eval(r))) continue;
        int mult = 0;
        Poly lin(F, {F.neg(r), F.one()});
        while (true) {
            auto [quo, rem] = g.divmod(lin);
            if (!rem.is_zero()) break;
            g = quo;
            ++mult;
        }
        out.emplace_back(r, mult);
    }
    return out; // already in canonical order: element_at enumerates by value
}

std::vector<std::pair<Fe, int>> roots_rational(const Poly& f) {
    const Field& F = f.field();
    // Clear denominators and content: primitive integer coefficients.
    Int den_lcm = 1;
    for (const Fe& c : f.coeffs()) {
        const Rat& r = std::get<Rat>(c);
        den_lcm = boost::multiprecision::lcm(den_lcm, r.den);
    }
    std::vector<Int> a(f.coeffs().size());
    Int content = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const Rat& r = std::get<Rat>(f.coeffs()[i]);
        a[i] = r.num * (den_lcm / r.den);
        content = boost::multiprecision::gcd(content, a[i] < 0 ? Int(-a[i]) : a[i]);
    }
    if (content > 1) {
        for (Int& x : a) x /= content;
    }
    std::vector<std::pair<Fe, int>> out;
    // Roots at zero: trailing zero coefficients.
    int t = 0;
    while (t < (int)a.size() && a[t] == 0) ++t;
    if (t > 0) {
        out.emplace_back(F.zero(), t);
        a.erase(a.begin(), a.begin() + t);
    }
    if (a.size() <= 1) {
        std::sort(out.begin(), out.end(), [&](auto& x, auto& y) { return F.cmp(x.first, y.first) < 0; });
        return out;
    }
    Int a0 = a.front() < 0 ? Int(-a.front()) : a.front();
    Int an = a.back() < 0 ? Int(-a.back()) : a.back();
    require(a0 < (Int(1) << 63) && an < (Int(1) << 63), Err::TooLarge,
            "coefficients too large for rational root search");
    std::vector<u64> us = divisors_u64((u64)a0);
    std::vector<u64> vs = divisors_u64((u64)an);
    auto eval_int = [&](const std::vector<Int>& cs, const Rat& r) {
        // cs evaluated at num/den, scaled by den^deg: sum cs[i] num^i den^(deg-i)
        Int acc = 0;
        int d = (int)cs.size() - 1;
        Int np = 1;
        std::vector<Int> numpow(d + 1);
        for (int i = 0; i <= d; ++i) { numpow[i] = np; np *= r.num; }
        Int dp = 1;
        for (int i = d; i >= 0; --i) { acc += cs[i] * numpow[i] * dp; dp *= r.den; }
        return acc;
    };
    std::vector<Int> cur(a.begin(), a.end());
    for (u64 v : vs) {
        for (u64 u : us) {
            if (std::gcd(u, v) != 1) continue;
            for (int sign = 1; sign >= -1; sign -= 2) {
                Rat cand{Int(sign) * Int(u), Int(v)};
                if (u == 0) continue;
                if (eval_int(cur, cand) != 0) continue;
                // Deflate: synthetic division by (v x - sign*u), repeatedly.
                int mult = 0;
                while (eval_int(cur, cand) == 0 && cur.size() > 1) {
                    // cur(x) = (x - u/v) * q(x); q has rational coefficients with
                    // denominators dividing powers of v; rescale to integers.
                    std::vector<Rat> qr(cur.size() - 1);
                    Rat carry{0, 1};
                    for (int i = (int)cur.size() - 1; i >= 1; --i) {
                        Rat ci{cur[i], 1};
                        Int num = ci.num * carry.den + carry.num * ci.den;
                        Int den = ci.den * carry.den;
                        qr[i - 1] = Rat{num, den};
                        // carry = qr[i-1] * cand
                        carry = Rat{qr[i - 1].num * cand.num, qr[i - 1].den * cand.den};
                    }
                    Int dl = 1;
                    for (const Rat& r : qr) {
                        Int g = boost::multiprecision::gcd(r.den, dl);
                        dl = dl / g * r.den;
                    }
                    std::vector<Int> q(qr.size());
                    for (std::size_t i = 0; i < qr.size(); ++i) q[i] = qr[i].num * (dl / qr[i].den);
                    Int cont = 0;
                    for (const Int& x : q) cont = boost::multiprecision::gcd(cont, x < 0 ? Int(-x) : x);
                    if (cont > 1) {
                        for (Int& x : q) x /= cont;
                    }
                    cur = std::move(q);
                    ++mult;
                }
                if (mult > 0) out.emplace_back(F.from_rat(Int(sign) * Int(u), Int(v)), mult);
            }
        }
    }
    std::sort(out.begin(), out.end(), [&](auto& x, auto& y) { return F.cmp(x.first, y.first) < 0; });
    return out;
}

} // namespace

std::vector<std::pair<Fe, int>> poly_roots_in_field(const Poly& f) {
    require(!f.is_zero(), Err::DegreeMismatch, "roots of the zero polynomial");
    if (f.degree() == 0) return {};
    if (f.field().is_finite()) return roots_finite(f);
    return roots_rational(f);
}

bool poly_is_irreducible(const Poly& f) {
    const Field& F = f.field();
    require(F.is_finite(), Err::InfiniteField, "irreducibility test needs a finite field");
    require(f.is_monic(), Err::NotMonic, "irreducibility test needs a monic polynomial");
    int n = f.degree();
    require(n >= 1, Err::DegreeMismatch, "degree must be >= 1");
    if (n == 1) return true;
    Int q = F.order();
    Poly h = Poly::x(F); // x^(q^i) mod f, built by iterated q-th powers
    for (int i = 1; i <= n / 2; ++i) {
        h = poly_powmod(h, q, f);
        Poly g = poly_gcd(f, h - Poly::x(F));
        if (g.degree() > 0) return false;
    }
    return true;
}

namespace {

// Degrees of the distinct irreducible factors of a squarefree monic g,
// one entry per factor, via distinct-degree splitting.
void ddf_degrees(Poly sf, std::vector<int>& degs) {
    const Field& F = sf.field();
    Int q = F.order();
    Poly h = Poly::x(F);
    int i = 1;
    while (sf.degree() > 0) {
        if (i > sf.degree() / 2) {
            degs.push_back(sf.degree());
            break;
        }
        h = poly_powmod(h, q, sf);
        Poly gd = poly_gcd(sf, h - Poly::x(F));
        if (gd.degree() > 0) {
            for (int c = 0; c < gd.degree() / i; ++c) degs.push_back(i);
            sf = sf.divmod(gd).first;
            h = h.divmod(sf).second;
        }
        ++i;
    }
}

// One entry per irreducible factor counted with multiplicity. When every
// multiplicity is divisible by p the derivative vanishes; take the p-th root
// (coefficient-wise a -> a^(p^(k-1))) and recurse p times.
void finite_factor_degrees(Poly g, std::vector<int>& degs) {
    const Field& F = g.field();
    while (g.degree() > 0) {
        Poly d = g.derivative();
        if (d.is_zero()) {
            u64 p = F.p();
            unsigned k = F.k();
            std::vector<Fe> hc(g.degree() / (int)p + 1, F.zero());
            for (int i = 0; i <= g.degree(); i += (int)p) {
                Int e = 1;
                for (unsigned j = 0; j + 1 < k; ++j) e *= p;
                hc[i / (int)p] = F.pow(g.coeff(i), e);
            }
            std::vector<int> sub;
            finite_factor_degrees(Poly(F, std::move(hc)), sub);
            for (unsigned c = 0; c < (unsigned)p; ++c) degs.insert(degs.end(), sub.begin(), sub.end());
            return;
        }
        // w carries each factor whose multiplicity is not divisible by p, once.
        Poly w = g.divmod(poly_gcd(g, d)).first.make_monic();
        ddf_degrees(w, degs);
        g = g.divmod(w).first.make_monic();
    }
}

} // namespace

std::vector<int> poly_factor_degrees(const Poly& f0) {
    require(!f0.is_zero(), Err::DegreeMismatch, "zero polynomial");
    Poly f = f0.make_monic();
    std::vector<int> degs;
    auto roots = poly_roots_in_field(f);
    const Field& F = f.field();
    for (auto& [r, m] : roots) {
        Poly lin(F, {F.neg(r), F.one()});
        for (int i = 0; i < m; ++i) {
            degs.push_back(1);
            f = f.divmod(lin).first;
        }
    }
    if (f.degree() <= 0) {
        std::sort(degs.begin(), degs.end());
        return degs;
    }
    if (F.is_rational()) {
        // No factorization over Q here: the rootless remainder is one block.
        degs.push_back(f.degree());
        std::sort(degs.begin(), degs.end());
        return degs;
    }
    finite_factor_degrees(f, degs);
    std::sort(degs.begin(), degs.end());
    return degs;
}

} // namespace cg
