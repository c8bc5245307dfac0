#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fp.hpp"
#include "int_ring.hpp"
#include "multipoly.hpp"
#include "unipoly.hpp"

namespace nilcommute {

/// Dense rectangular matrix over an exact coefficient ring. Carries a zero
/// exemplar so that 0xk matrices and runtime-modulus fields work uniformly.
template <class R>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, R zero)
        : rows_(rows), cols_(cols), zero_(std::move(zero)), e_(rows * cols, zero_) {}

    static Matrix identity(std::size_t n, const R& one) {
        Matrix m(n, n, zero_like(one));
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const R& zero() const { return zero_; }

    R& at(std::size_t i, std::size_t j) {
        check_index(i, j);
        return e_[i * cols_ + j];
    }
    const R& at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return e_[i * cols_ + j];
    }
    R& operator()(std::size_t i, std::size_t j) { return at(i, j); }
    const R& operator()(std::size_t i, std::size_t j) const { return at(i, j); }

    bool is_square() const { return rows_ == cols_; }

    bool is_zero_matrix() const {
        for (const auto& x : e_)
            if (!is_zero(x)) return false;
        return true;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] + b.e_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix r = a;
        for (std::size_t i = 0; i < r.e_.size(); ++i) r.e_[i] = r.e_[i] - b.e_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix r(a.rows_, b.cols_, a.zero_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const R& aik = a.at(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const R& bkj = b.at(k, j);
                    if (is_zero(bkj)) continue;
                    r.at(i, j) = r.at(i, j) + aik * bkj;
                }
            }
        return r;
    }

    Matrix scaled(const R& k) const {
        Matrix r = *this;
        for (auto& x : r.e_) x = x * k;
        return r;
    }

    Matrix pow(std::size_t m) const {
        if (!is_square()) throw std::invalid_argument("Matrix: pow of non-square matrix");
        Matrix acc = identity(rows_, find_one());
        Matrix base = *this;
        while (m) {
            if (m & 1) acc = acc * base;
            base = base * base;
            m >>= 1;
        }
        return acc;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    R trace() const {
        if (!is_square()) throw std::invalid_argument("Matrix: trace of non-square matrix");
        R t = zero_;
        for (std::size_t i = 0; i < rows_; ++i) t = t + at(i, i);
        return t;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const {
        if (r0 + h > rows_ || c0 + w > cols_) throw std::invalid_argument("Matrix: block out of range");
        Matrix r(h, w, zero_);
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < w; ++j) r.at(i, j) = at(r0 + i, c0 + j);
        return r;
    }

    void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
        if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::invalid_argument("Matrix: block out of range");
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j) at(r0 + i, c0 + j) = b.at(i, j);
    }

    Matrix columns(const std::vector<std::size_t>& idx) const {
        Matrix r(rows_, idx.size(), zero_);
        for (std::size_t j = 0; j < idx.size(); ++j) {
            if (idx[j] >= cols_) throw std::invalid_argument("Matrix: column index out of range");
            for (std::size_t i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
        }
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::string to_text() const {
        using nilcommute::to_string;
        std::ostringstream os;
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j) os << "  ";
                os << to_string(at(i, j));
            }
            os << "\n";
        }
        return os.str();
    }

private:
    R find_one() const { return one_like(zero_); }

    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::invalid_argument("Matrix: index out of range");
    }
    void check_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("Matrix: shape mismatch");
    }

    std::size_t rows_, cols_;
    R zero_;
    std::vector<R> e_;
};

template <class R>
inline Matrix<R> zero_like(const Matrix<R>& m) { return Matrix<R>(m.rows(), m.cols(), m.zero()); }
template <class R>
inline Matrix<R> one_like(const Matrix<R>& m) { return Matrix<R>::identity(m.rows(), one_like(m.zero())); }
template <class R>
inline bool is_zero(const Matrix<R>& m) { return m.is_zero_matrix(); }

template <class R>
inline Matrix<R> commutator(const Matrix<R>& a, const Matrix<R>& b) { return a * b - b * a; }

/// Nilpotent Jordan block J_k: ones on the first superdiagonal.
template <class R>
inline Matrix<R> jordan_block(std::size_t k, const R& one) {
    Matrix<R> m(k, k, zero_like(one));
    for (std::size_t i = 0; i + 1 < k; ++i) m.at(i, i + 1) = one;
    return m;
}

/// Block-diagonal nilpotent Jordan matrix for the given part sizes.
template <class R>
inline Matrix<R> jordan_matrix(const std::vector<int>& parts, const R& one) {
    std::size_t n = 0;
    for (int u : parts) n += static_cast<std::size_t>(u);
    Matrix<R> m(n, n, zero_like(one));
    std::size_t off = 0;
    for (int u : parts) {
        m.set_block(off, off, jordan_block<R>(static_cast<std::size_t>(u), one));
        off += static_cast<std::size_t>(u);
    }
    return m;
}

/// View of a matrix as a block matrix (X_{hk}) induced by part sizes that sum
/// to the parent dimensions.
template <class R>
class BlockView {
public:
    BlockView(const Matrix<R>& m, std::vector<int> parts) : m_(m), parts_(std::move(parts)) {
        std::size_t n = 0;
        for (int u : parts_) {
            if (u <= 0) throw std::invalid_argument("BlockView: nonpositive part");
            n += static_cast<std::size_t>(u);
        }
        if (n != m.rows() || n != m.cols()) throw std::invalid_argument("BlockView: parts do not sum to dimension");
        offsets_.push_back(0);
        for (int u : parts_) offsets_.push_back(offsets_.back() + static_cast<std::size_t>(u));
    }

    std::size_t count() const { return parts_.size(); }

    /// Block (h,k), zero-based, of shape u_h x u_k.
    Matrix<R> block(std::size_t h, std::size_t k) const {
        if (h >= parts_.size() || k >= parts_.size()) throw std::invalid_argument("BlockView: block index out of range");
        return m_.block(offsets_[h], offsets_[k],
                        static_cast<std::size_t>(parts_[h]), static_cast<std::size_t>(parts_[k]));
    }

private:
    const Matrix<R>& m_;
    std::vector<int> parts_;
    std::vector<std::size_t> offsets_;
};

// ---------------------------------------------------------------------------
// Field elimination
// ---------------------------------------------------------------------------

/// In-place reduced row echelon form. Returns the pivot columns.
template <class F>
std::vector<std::size_t> rref_in_place(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && is_zero(m.at(sel, col))) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(row, j));
        F inv = one_like(m.zero()) / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m.at(row, j) = m.at(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || is_zero(m.at(i, col))) continue;
            F f = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
std::size_t rank_over_field(const Matrix<F>& m) {
    Matrix<F> work = m;
    return rref_in_place(work).size();
}

/// Basis of the right null space; dimension = cols - rank. Deterministic
/// (free variables in column order, pivot entries read off the RREF).
template <class F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& m) {
    Matrix<F> work = m;
    std::vector<std::size_t> pivots = rref_in_place(work);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    const F zero = m.zero();
    const F one = one_like(zero);
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<F> v(m.cols(), zero);
        v[free_col] = one;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = zero - work.at(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solve M x = rhs; empty optional when inconsistent. When the system is
/// underdetermined the free variables are set to zero.
template <class F>
std::optional<std::vector<F>> solve_linear(const Matrix<F>& m, const std::vector<F>& rhs) {
    if (rhs.size() != m.rows()) throw std::invalid_argument("solve_linear: rhs size mismatch");
    Matrix<F> aug(m.rows(), m.cols() + 1, m.zero());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = rhs[i];
    }
    std::vector<std::size_t> pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt; // pivot in rhs column
    std::vector<F> x(m.cols(), m.zero());
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols());
    return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse: non-square matrix");
    std::size_t n = m.rows();
    Matrix<F> aug(n, 2 * n, m.zero());
    aug.set_block(0, 0, m);
    aug.set_block(0, n, Matrix<F>::identity(n, one_like(m.zero())));
    std::vector<std::size_t> pivots = rref_in_place(aug);
    std::size_t lead = 0;
    while (lead < pivots.size() && pivots[lead] < n) ++lead;
    if (lead != n) return std::nullopt; // a pivot escaped into the augmentation
    return aug.block(0, n, n, n);
}

/// P^{-1} A P; throws when P is singular.
template <class F>
Matrix<F> conjugate(const Matrix<F>& a, const Matrix<F>& p) {
    auto pinv = inverse(p);
    if (!pinv) throw std::domain_error("conjugate: singular change of basis");
    return (*pinv) * a * p;
}

// ---------------------------------------------------------------------------
// Exact determinants over integral domains
// ---------------------------------------------------------------------------

/// Division-free determinant by Laplace expansion memoized on column subsets.
/// Exact over any commutative ring; intended for small polynomial matrices.
template <class R>
R det_minor_expansion(const Matrix<R>& m) {
    if (!m.is_square()) throw std::invalid_argument("det: non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return one_like(m.zero());
    if (n > 31) throw std::invalid_argument("det: matrix too large for minor expansion");
    // level k: minors of the last k rows against every k-subset of columns
    std::map<std::uint32_t, R> memo;
    memo.emplace(0u, one_like(m.zero()));
    for (std::size_t k = 1; k <= n; ++k) {
        std::map<std::uint32_t, R> next;
        std::size_t row = n - k;
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
            R acc = m.zero();
            int sign = 1;
            for (std::size_t j = 0; j < n; ++j) {
                if (!(mask & (1u << j))) continue;
                const R& a = m.at(row, j);
                if (!is_zero(a)) {
                    const R& sub = memo.at(mask & ~(1u << j));
                    acc = (sign > 0) ? acc + a * sub : acc - a * sub;
                }
                sign = -sign;
            }
            if (!is_zero(acc)) next.emplace(mask, std::move(acc));
            else next.emplace(mask, m.zero());
        }
        memo = std::move(next);
    }
    return memo.at((n == 32) ? 0xffffffffu : ((1u << n) - 1));
}

/// Fraction-free (Bareiss) determinant over the integers.
inline Int det_bareiss(const Matrix<Int>& m) {
    if (!m.is_square()) throw std::invalid_argument("det: non-square matrix");
    std::size_t n = m.rows();
    if (n == 0) return Int(1);
    Matrix<Int> a = m;
    Int prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(a.at(k, k))) {
            std::size_t sel = k + 1;
            while (sel < n && is_zero(a.at(sel, k))) ++sel;
            if (sel == n) return Int(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(sel, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    Int d = a.at(n - 1, n - 1);
    return sign > 0 ? d : -d;
}

/// Exact determinant dispatcher: fraction-free over Z, division-free minor
/// expansion over polynomial rings.
inline Int det_exact(const Matrix<Int>& m) { return det_bareiss(m); }
template <class C>
MultiPoly<C> det_exact(const Matrix<MultiPoly<C>>& m) { return det_minor_expansion(m); }
template <class C>
UniPoly<C> det_exact(const Matrix<UniPoly<C>>& m) { return det_minor_expansion(m); }

// ---------------------------------------------------------------------------
// Rank over K[x] (equivalently over the fraction field K(x))
// ---------------------------------------------------------------------------

/// Rank of a univariate polynomial matrix by fraction-free elimination with
/// nonzero-polynomial pivots. Pivot choice: lowest degree, ties by leftmost
/// column, to bound intermediate degree swell.
template <class F>
std::size_t rank_over_polynomial_ring(const Matrix<UniPoly<F>>& m) {
    Matrix<UniPoly<F>> a = m;
    std::size_t rank = 0;
    UniPoly<F> prev = one_like(a.zero());
    std::size_t n_rows = a.rows(), n_cols = a.cols();
    for (std::size_t k = 0; k < std::min(n_rows, n_cols); ++k) {
        // select pivot among remaining submatrix
        std::optional<std::pair<std::size_t, std::size_t>> piv;
        int best_deg = -1;
        for (std::size_t j = k; j < n_cols; ++j)
            for (std::size_t i = k; i < n_rows; ++i) {
                const auto& x = a.at(i, j);
                if (is_zero(x)) continue;
                if (!piv || x.degree() < best_deg) {
                    piv = {i, j};
                    best_deg = x.degree();
                }
            }
        if (!piv) break;
        auto [pi, pj] = *piv;
        if (pi != k)
            for (std::size_t j = 0; j < n_cols; ++j) std::swap(a.at(pi, j), a.at(k, j));
        if (pj != k)
            for (std::size_t i = 0; i < n_rows; ++i) std::swap(a.at(i, pj), a.at(i, k));
        ++rank;
        for (std::size_t i = k + 1; i < n_rows; ++i)
            for (std::size_t j = k + 1; j < n_cols; ++j)
                a.at(i, j) = exact_div(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
        for (std::size_t i = k + 1; i < n_rows; ++i) a.at(i, k) = a.zero();
        prev = a.at(k, k);
    }
    return rank;
}

} // namespace nilcommute
