// Dense matrices over Laurent polynomial rings, with an exact determinant.
//
// The determinant runs fraction-free (Bareiss) after per-row monomial
// extraction, so negative exponents never reach the elimination and every
// division is exact.  It is only instantiated for commutative coefficient
// domains; quaternionic matrices must be pushed through
// quaternion_to_complex_rep first, which halves the problem to Gaussian
// integers at twice the dimension (Study determinant).

#pragma once

#include <string>
#include <vector>

#include "pbq/ring.hpp"

namespace pbq {

template <class C>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), cells_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Poly<C>::constant(coeff_traits<C>::one());
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Poly<C>& at(std::size_t r, std::size_t c) { return cells_[r * cols_ + c]; }
    const Poly<C>& at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }

    bool operator==(const Matrix&) const = default;

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Poly<C>& aik = a.at(i, k);
                if (aik.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    if (b.at(k, j).is_zero()) continue;
                    r.at(i, j) += aik * b.at(k, j);
                }
            }
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix difference: shape mismatch");
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.cells_.size(); ++i) r.cells_[i] = a.cells_[i] - b.cells_[i];
        return r;
    }

    bool is_zero() const {
        for (const auto& p : cells_)
            if (!p.is_zero()) return false;
        return true;
    }

    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < rows_; ++i) {
            out += "[ ";
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) out += " | ";
                out += at(i, j).str();
            }
            out += " ]\n";
        }
        return out;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Poly<C>> cells_;
};

using IntMatrix = Matrix<BigInt>;
using GaussMatrix = Matrix<GaussInt>;
using QuatMatrix = Matrix<Quat>;

// Entrywise complex representation: a + bi + cj + dk becomes the 2x2 block
//   [  a+bi   c+di ]
//   [ -c+di   a-bi ]
// so an n x m quaternionic matrix becomes a 2n x 2m Gaussian-integer matrix.
// The map is a ring homomorphism, which the tests verify on random inputs.
inline GaussMatrix quaternion_to_complex_rep(const QuatMatrix& m) {
    GaussMatrix r(2 * m.rows(), 2 * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            for (const auto& [mono, q] : m.at(i, j).terms()) {
                r.at(2 * i, 2 * j) += GaussPoly::term({q.a, q.b}, mono);
                r.at(2 * i, 2 * j + 1) += GaussPoly::term({q.c, q.d}, mono);
                r.at(2 * i + 1, 2 * j) += GaussPoly::term({-q.c, q.d}, mono);
                r.at(2 * i + 1, 2 * j + 1) += GaussPoly::term({q.a, -q.b}, mono);
            }
    return r;
}

namespace detail {

// Per-variable minimum exponent over every term of every nonzero entry in a
// row; factoring it out leaves ordinary polynomial entries.
template <class C>
Monomial row_content_monomial(const Matrix<C>& m, std::size_t row) {
    bool any = false;
    std::map<Var, int> acc;  // min exponent over terms where the var appears
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& [mono, c] : m.at(row, j).terms()) {
            for (const auto& [v, e] : mono.factors()) {
                auto it = acc.find(v);
                if (it == acc.end()) acc.emplace(v, e);
                else it->second = std::min(it->second, e);
            }
            any = true;
        }
    if (!any) return {};
    Monomial out;
    for (const auto& [v, e] : acc) {
        // A term where v is absent has exponent 0, so the row minimum can
        // never exceed 0 unless v occurs in every term.  Recheck cheaply.
        int mn = e;
        if (mn > 0) {
            for (std::size_t j = 0; j < m.cols() && mn > 0; ++j)
                for (const auto& [mono, c] : m.at(row, j).terms())
                    if (mono.exponent(v) == 0) { mn = 0; break; }
        }
        if (mn != 0) out = out.times(Monomial::of(v, mn));
    }
    return out;
}

}  // namespace detail

// Exact determinant by fraction-free Gaussian elimination with row pivoting.
// Pivot choice prefers the sparsest nonzero candidate; row swaps flip the
// sign, which is folded into the result.
template <class C>
Poly<C> determinant(Matrix<C> m) {
    static_assert(coeff_traits<C>::commutative,
                  "determinant requires a commutative coefficient domain");
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return Poly<C>::constant(coeff_traits<C>::one());

    Poly<C> unit = Poly<C>::constant(coeff_traits<C>::one());
    Monomial extracted;
    for (std::size_t i = 0; i < n; ++i) {
        Monomial rc = detail::row_content_monomial(m, i);
        bool empty_row = true;
        for (std::size_t j = 0; j < n; ++j)
            if (!m.at(i, j).is_zero()) { empty_row = false; break; }
        if (empty_row) return {};
        if (!rc.is_one()) {
            Monomial inv = rc.inverse();
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = m.at(i, j).shifted(inv);
            extracted = extracted.times(rc);
        }
    }

    bool negate = false;
    Poly<C> prev = Poly<C>::constant(coeff_traits<C>::one());
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = n;
        std::size_t best_terms = 0;
        for (std::size_t i = k; i < n; ++i) {
            const auto& cand = m.at(i, k);
            if (cand.is_zero()) continue;
            if (pivot == n || cand.term_count() < best_terms) {
                pivot = i;
                best_terms = cand.term_count();
            }
        }
        if (pivot == n) return {};
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) =
                    div_exact(m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j), prev);
            m.at(i, k) = {};
        }
        prev = m.at(k, k);
    }

    Poly<C> det = m.at(n - 1, n - 1).shifted(extracted);
    return negate ? -det : det;
}

// Adjugate inverse for 2x2 matrices whose determinant is a unit of the
// Laurent ring; empty when it is not.  Commutative domains only.
template <class C>
std::optional<Matrix<C>> inverse_2x2(const Matrix<C>& m) {
    static_assert(coeff_traits<C>::commutative);
    if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("inverse_2x2: shape");
    Poly<C> det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    auto inv_det = det.unit_inverse();
    if (!inv_det) return std::nullopt;
    Matrix<C> r(2, 2);
    r.at(0, 0) = m.at(1, 1) * *inv_det;
    r.at(0, 1) = -m.at(0, 1) * *inv_det;
    r.at(1, 0) = -m.at(1, 0) * *inv_det;
    r.at(1, 1) = m.at(0, 0) * *inv_det;
    return r;
}

}  // namespace pbq
