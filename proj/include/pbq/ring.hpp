// Sparse multivariate Laurent polynomials over exact coefficient domains.
//
// Domains: arbitrary-precision integers, Gaussian integers, and integral
// (Lipschitz) quaternions.  The quaternion domain is noncommutative; nothing
// in this header ever reorders a coefficient product.
//
// Variables come from a fixed catalogue (s, t, z, per-component z_i,
// per-component-pair w_{i,j}, alpha) with the total order
//   s < t < z < z_1 < z_2 < ... < w_{1,2} < w_{1,3} < ... < alpha
// which also drives the canonical term order used for printing.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pbq {

using BigInt = boost::multiprecision::cpp_int;

// ---------------------------------------------------------------------------
// Variables

enum class VarKind : std::uint8_t { S = 0, T, Z, ZComp, WPair, Alpha };

struct Var {
    VarKind kind = VarKind::S;
    // ZComp: i = component index (1-based).  WPair: i < j, both 1-based.
    std::uint16_t i = 0, j = 0;

    static Var s() { return {VarKind::S, 0, 0}; }
    static Var t() { return {VarKind::T, 0, 0}; }
    static Var z() { return {VarKind::Z, 0, 0}; }
    static Var z_comp(int comp);
    static Var w_pair(int a, int b);
    static Var alpha() { return {VarKind::Alpha, 0, 0}; }

    auto operator<=>(const Var&) const = default;

    std::string str() const;
};

// ---------------------------------------------------------------------------
// Monomials: sorted factor lists with nonzero (possibly negative) exponents.

class Monomial {
public:
    Monomial() = default;  // the monomial 1

    static Monomial of(Var v, int exp);

    Monomial times(const Monomial& other) const;
    Monomial inverse() const;

    int exponent(Var v) const;
    long total_degree() const;
    bool is_one() const { return factors_.empty(); }
    const std::vector<std::pair<Var, int>>& factors() const { return factors_; }

    bool operator==(const Monomial&) const = default;
    // Graded order: total degree first, then lexicographic in the variable
    // order with the higher exponent on the earliest differing variable
    // ranking greater.
    std::strong_ordering operator<=>(const Monomial& other) const;

    std::string str() const;  // "s^2*t^-1"; empty string for 1

private:
    std::vector<std::pair<Var, int>> factors_;
};

// ---------------------------------------------------------------------------
// Coefficient domains

struct GaussInt {
    BigInt re = 0, im = 0;

    GaussInt() = default;
    GaussInt(BigInt r) : re(std::move(r)) {}
    GaussInt(long r) : re(r) {}
    GaussInt(BigInt r, BigInt i) : re(std::move(r)), im(std::move(i)) {}

    static GaussInt unit_i() { return {0, 1}; }

    GaussInt conj() const { return {re, -im}; }
    BigInt norm() const { return re * re + im * im; }

    GaussInt operator-() const { return {-re, -im}; }
    GaussInt operator+(const GaussInt& o) const { return {re + o.re, im + o.im}; }
    GaussInt operator-(const GaussInt& o) const { return {re - o.re, im - o.im}; }
    GaussInt operator*(const GaussInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    bool operator==(const GaussInt&) const = default;
};

// a + b*i + c*j + d*k with the Hamilton relations i^2 = j^2 = k^2 = ijk = -1.
struct Quat {
    BigInt a = 0, b = 0, c = 0, d = 0;

    Quat() = default;
    Quat(BigInt ra) : a(std::move(ra)) {}
    Quat(long ra) : a(ra) {}
    Quat(BigInt ra, BigInt rb, BigInt rc, BigInt rd)
        : a(std::move(ra)), b(std::move(rb)), c(std::move(rc)), d(std::move(rd)) {}

    static Quat unit_i() { return {0, 1, 0, 0}; }
    static Quat unit_j() { return {0, 0, 1, 0}; }
    static Quat unit_k() { return {0, 0, 0, 1}; }

    Quat conj() const { return {a, -b, -c, -d}; }
    BigInt norm() const { return a * a + b * b + c * c + d * d; }

    Quat operator-() const { return {-a, -b, -c, -d}; }
    Quat operator+(const Quat& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Quat operator-(const Quat& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Quat operator*(const Quat& o) const {
        return {a * o.a - b * o.b - c * o.c - d * o.d,
                a * o.b + b * o.a + c * o.d - d * o.c,
                a * o.c - b * o.d + c * o.a + d * o.b,
                a * o.d + b * o.c - c * o.b + d * o.a};
    }
    bool operator==(const Quat&) const = default;
};

// Uniform coefficient interface.  `commutative` gates the elimination paths.
template <class C>
struct coeff_traits;

template <>
struct coeff_traits<BigInt> {
    static constexpr bool commutative = true;
    static BigInt zero() { return 0; }
    static BigInt one() { return 1; }
    static bool is_zero(const BigInt& v) { return v == 0; }
    static std::optional<BigInt> unit_inverse(const BigInt& v) {
        if (v == 1 || v == -1) return v;
        return std::nullopt;
    }
    static std::optional<BigInt> exact_div(const BigInt& num, const BigInt& den) {
        if (den == 0) return std::nullopt;
        BigInt q, r;
        boost::multiprecision::divide_qr(num, den, q, r);
        if (r != 0) return std::nullopt;
        return q;
    }
    static std::string str(const BigInt& v) { return v.str(); }
};

template <>
struct coeff_traits<GaussInt> {
    static constexpr bool commutative = true;
    static GaussInt zero() { return {}; }
    static GaussInt one() { return {1}; }
    static bool is_zero(const GaussInt& v) { return v.re == 0 && v.im == 0; }
    static std::optional<GaussInt> unit_inverse(const GaussInt& v) {
        if (v.norm() != 1) return std::nullopt;
        return v.conj();
    }
    static std::optional<GaussInt> exact_div(const GaussInt& num, const GaussInt& den);
    static std::string str(const GaussInt& v);
};

template <>
struct coeff_traits<Quat> {
    static constexpr bool commutative = false;
    static Quat zero() { return {}; }
    static Quat one() { return {1}; }
    static bool is_zero(const Quat& v) {
        return v.a == 0 && v.b == 0 && v.c == 0 && v.d == 0;
    }
    // Lipschitz units: norm 1, i.e. +-1, +-i, +-j, +-k.  Inverse = conjugate.
    static std::optional<Quat> unit_inverse(const Quat& v) {
        if (v.norm() != 1) return std::nullopt;
        return v.conj();
    }
    static std::optional<Quat> exact_div(const Quat&, const Quat&) = delete;
    static std::string str(const Quat& v);
};

// ---------------------------------------------------------------------------
// Polynomials

template <class C>
class Poly {
public:
    using traits = coeff_traits<C>;

    Poly() = default;  // zero

    static Poly zero() { return {}; }
    static Poly constant(C c) {
        Poly p;
        p.add_term(Monomial{}, std::move(c));
        return p;
    }
    static Poly monomial(Var v, int exp) {
        Poly p;
        p.add_term(Monomial::of(v, exp), traits::one());
        return p;
    }
    static Poly term(C c, const Monomial& m) {
        Poly p;
        p.add_term(m, std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, C>& terms() const { return terms_; }

    // Largest term in the graded-lex order.  Precondition: not zero.
    const std::pair<const Monomial, C>& leading() const {
        if (terms_.empty()) throw std::logic_error("leading() of zero polynomial");
        return *terms_.rbegin();
    }

    Poly operator-() const {
        Poly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term(ma.times(mb), ca * cb);  // order matters for quaternions
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    bool operator==(const Poly&) const = default;

    // Multiply by a bare monomial (exact, unit operation).
    Poly shifted(const Monomial& m) const {
        Poly r;
        for (const auto& [mm, c] : terms_) r.terms_.emplace(mm.times(m), c);
        return r;
    }

    struct UnitParts {
        C coeff;
        Monomial mono;
    };

    // Nonempty iff the polynomial is a single term whose coefficient is a unit
    // of the coefficient domain.  Such elements are exactly the invertible
    // elements of the Laurent ring.
    std::optional<UnitParts> unit_parts() const {
        if (terms_.size() != 1) return std::nullopt;
        const auto& [m, c] = *terms_.begin();
        if (!traits::unit_inverse(c)) return std::nullopt;
        return UnitParts{c, m};
    }

    std::optional<Poly> unit_inverse() const {
        auto u = unit_parts();
        if (!u) return std::nullopt;
        return Poly::term(*traits::unit_inverse(u->coeff), u->mono.inverse());
    }

    struct ExpRange {
        int min = 0, max = 0;
    };

    // Exponent range of v over the terms; a variable absent from every term
    // contributes exponent 0.  Zero polynomial reports (0, 0).
    ExpRange exponent_range(Var v) const {
        ExpRange r;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            int e = m.exponent(v);
            if (first) {
                r.min = r.max = e;
                first = false;
            } else {
                r.min = std::min(r.min, e);
                r.max = std::max(r.max, e);
            }
        }
        return r;
    }

    std::string str() const;

private:
    void add_term(const Monomial& m, C c) {
        if (traits::is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, std::move(c));
        } else {
            it->second = it->second + c;
            if (traits::is_zero(it->second)) terms_.erase(it);
        }
    }

    std::map<Monomial, C> terms_;
};

using IntPoly = Poly<BigInt>;
using GaussPoly = Poly<GaussInt>;
using QuatPoly = Poly<Quat>;

// Exact division: num must be den * q for a polynomial q (this is guaranteed
// at every fraction-free elimination step); throws std::logic_error otherwise.
template <class C>
Poly<C> div_exact(const Poly<C>& num, const Poly<C>& den) {
    static_assert(coeff_traits<C>::commutative,
                  "exact division is defined for commutative domains only");
    if (den.is_zero()) throw std::logic_error("div_exact: zero divisor");
    Poly<C> rem = num, quot;
    // Each round cancels the leading term, so the round count is bounded by
    // the term count of the true quotient.  The cap only trips on inexact
    // input, which would otherwise descend forever through negative degrees.
    std::size_t guard = 4 * (num.term_count() + den.term_count()) + 64;
    while (!rem.is_zero()) {
        if (guard-- == 0) throw std::logic_error("div_exact: division is not exact");
        const auto& [mr, cr] = rem.leading();
        const auto& [md, cd] = den.leading();
        auto c = coeff_traits<C>::exact_div(cr, cd);
        if (!c) throw std::logic_error("div_exact: division is not exact");
        Poly<C> t = Poly<C>::term(*c, mr.times(md.inverse()));
        quot += t;
        rem -= t * den;
    }
    return quot;
}

// Lossless embeddings / projections between coefficient domains.
inline GaussInt to_gauss(const BigInt& v) { return {v}; }
inline Quat to_quat(const BigInt& v) { return {v}; }

template <class C>
Poly<C> embed(const IntPoly& p) {
    Poly<C> r;
    for (const auto& [m, c] : p.terms()) r += Poly<C>::term(C(c), m);
    return r;
}

// Projection used after a Study determinant: the result is provably real, so
// a nonzero imaginary part indicates an internal error.
IntPoly gauss_to_int(const GaussPoly& p);

std::string format_poly_term(const std::string& coeff, bool coeff_is_one,
                             bool coeff_is_minus_one, const std::string& mono);

template <class C>
std::string Poly<C>::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Descending canonical order: largest term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string piece = format_poly_term(traits::str(c), c == traits::one(),
                                             c == -traits::one(), m.str());
        if (out.empty()) {
            out = piece;
        } else if (piece.size() && piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

}  // namespace pbq
