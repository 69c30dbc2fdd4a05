#include "pbq/ring.hpp"

namespace pbq {

Var Var::z_comp(int comp) {
    if (comp < 1 || comp > 0xffff) throw std::invalid_argument("z_comp: bad component index");
    return {VarKind::ZComp, static_cast<std::uint16_t>(comp), 0};
}

Var Var::w_pair(int a, int b) {
    if (a == b || a < 1 || b < 1 || a > 0xffff || b > 0xffff)
        throw std::invalid_argument("w_pair: bad component pair");
    if (a > b) std::swap(a, b);
    return {VarKind::WPair, static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b)};
}

std::string Var::str() const {
    switch (kind) {
        case VarKind::S: return "s";
        case VarKind::T: return "t";
        case VarKind::Z: return "z";
        case VarKind::ZComp: return "z" + std::to_string(i);
        case VarKind::WPair: return "w" + std::to_string(i) + "_" + std::to_string(j);
        case VarKind::Alpha: return "alpha";
    }
    return "?";
}

Monomial Monomial::of(Var v, int exp) {
    Monomial m;
    if (exp != 0) m.factors_.emplace_back(v, exp);
    return m;
}

Monomial Monomial::times(const Monomial& other) const {
    Monomial r;
    r.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            r.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            r.factors_.push_back(*b++);
        } else {
            int e = a->second + b->second;
            if (e != 0) r.factors_.emplace_back(a->first, e);
            ++a, ++b;
        }
    }
    return r;
}

Monomial Monomial::inverse() const {
    Monomial r = *this;
    for (auto& [v, e] : r.factors_) e = -e;
    return r;
}

int Monomial::exponent(Var v) const {
    for (const auto& [w, e] : factors_)
        if (w == v) return e;
    return 0;
}

long Monomial::total_degree() const {
    long d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
    long da = total_degree(), db = other.total_degree();
    if (da != db) return da <=> db;
    // Lexicographic walk in variable order; a missing variable has exponent 0.
    auto a = factors_.begin(), b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        Var va = (a != factors_.end()) ? a->first : b->first;
        Var vb = (b != other.factors_.end()) ? b->first : a->first;
        Var v = std::min(va, vb);
        int ea = (a != factors_.end() && a->first == v) ? a->second : 0;
        int eb = (b != other.factors_.end() && b->first == v) ? b->second : 0;
        if (ea != eb) return ea > eb ? std::strong_ordering::greater : std::strong_ordering::less;
        if (a != factors_.end() && a->first == v) ++a;
        if (b != other.factors_.end() && b->first == v) ++b;
    }
    return std::strong_ordering::equal;
}

std::string Monomial::str() const {
    std::string out;
    for (const auto& [v, e] : factors_) {
        if (!out.empty()) out += "*";
        out += v.str();
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::optional<GaussInt> coeff_traits<GaussInt>::exact_div(const GaussInt& num,
                                                          const GaussInt& den) {
    BigInt n = den.norm();
    if (n == 0) return std::nullopt;
    GaussInt scaled = num * den.conj();
    auto re = coeff_traits<BigInt>::exact_div(scaled.re, n);
    auto im = coeff_traits<BigInt>::exact_div(scaled.im, n);
    if (!re || !im) return std::nullopt;
    return GaussInt{*re, *im};
}

namespace {

// Renders one basis component ("2i", "-j", "k", ...) into `out`.
void append_component(std::string& out, const BigInt& v, const char* sym) {
    if (v == 0) return;
    if (out.empty()) {
        if (v == -1 && *sym) out += "-";
        else if (!(v == 1 && *sym)) out += v.str();
    } else {
        out += (v < 0) ? "-" : "+";
        BigInt av = abs(v);
        if (!(av == 1 && *sym)) out += av.str();
    }
    out += sym;
}

std::string hypercomplex_str(std::initializer_list<std::pair<const BigInt*, const char*>> parts) {
    std::string body;
    int nonzero = 0;
    for (const auto& pr : parts)
        if (*pr.first != 0) ++nonzero;
    if (nonzero == 0) return "0";
    for (const auto& pr : parts) append_component(body, *pr.first, pr.second);
    if (nonzero > 1) return "(" + body + ")";
    return body;
}

}  // namespace

std::string coeff_traits<GaussInt>::str(const GaussInt& v) {
    return hypercomplex_str({{&v.re, ""}, {&v.im, "i"}});
}

std::string coeff_traits<Quat>::str(const Quat& v) {
    return hypercomplex_str({{&v.a, ""}, {&v.b, "i"}, {&v.c, "j"}, {&v.d, "k"}});
}

IntPoly gauss_to_int(const GaussPoly& p) {
    IntPoly r;
    for (const auto& [m, c] : p.terms()) {
        if (c.im != 0)
            throw std::logic_error("gauss_to_int: nonzero imaginary coefficient in " + p.str());
        r += IntPoly::term(c.re, m);
    }
    return r;
}

std::string format_poly_term(const std::string& coeff, bool coeff_is_one,
                             bool coeff_is_minus_one, const std::string& mono) {
    if (mono.empty()) return coeff;
    if (coeff_is_one) return mono;
    if (coeff_is_minus_one) return "-" + mono;
    return coeff + "*" + mono;
}

}  // namespace pbq
