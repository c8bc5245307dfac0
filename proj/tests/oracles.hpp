// Independent oracles for the test suites: brute-force and by-definition
// computations kept deliberately separate from the library implementations
// they check.
#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include <nilcommute/commutant.hpp>
#include <nilcommute/matrix.hpp>
#include <nilcommute/partition.hpp>
#include <nilcommute/rng.hpp>

namespace oracles {

using namespace nilcommute;

/// Naive recursive cofactor expansion along the first row.
template <class R>
R det_cofactor(const Matrix<R>& m) {
    std::size_t n = m.rows();
    if (n == 0) return one_like(m.zero());
    if (n == 1) return m.at(0, 0);
    R acc = m.zero();
    for (std::size_t j = 0; j < n; ++j) {
        if (is_zero(m.at(0, j))) continue;
        Matrix<R> sub(n - 1, n - 1, m.zero());
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(i - 1, jj++) = m.at(i, c);
            }
        }
        R term = m.at(0, j) * det_cofactor(sub);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// rank B^m for B nilpotent of the given Jordan type, by counting the
/// surviving chain segments.
inline std::size_t rank_power_by_parts(const Partition& p, std::size_t m) {
    std::size_t r = 0;
    for (int u : p.parts())
        if (static_cast<std::size_t>(u) > m) r += static_cast<std::size_t>(u) - m;
    return r;
}

/// Matrix of X -> [X, B] acting on the n^2 entry coordinates (row-major).
template <class F>
Matrix<F> sylvester_commutator_matrix(const Matrix<F>& b) {
    std::size_t n = b.rows();
    Matrix<F> s(n * n, n * n, b.zero());
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t d = 0; d < n; ++d) {
                    // coefficient of X[a][d] in (XB - BX)[r][c]
                    F coeff = s.zero();
                    if (a == r) coeff = coeff + b.at(d, c);
                    if (d == c) coeff = coeff - b.at(r, a);
                    if (!is_zero(coeff)) s.at(r * n + c, a * n + d) = coeff;
                }
    return s;
}

/// Kernel of the commutator map as explicit matrices: the brute-force
/// centralizer basis.
template <class F>
std::vector<Matrix<F>> centralizer_by_kernel(const Matrix<F>& b) {
    std::size_t n = b.rows();
    auto vecs = kernel_basis(sylvester_commutator_matrix(b));
    std::vector<Matrix<F>> out;
    for (const auto& v : vecs) {
        Matrix<F> m(n, n, b.zero());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = v[i * n + j];
        out.push_back(std::move(m));
    }
    return out;
}

/// Exact span equality of two lists of equally-shaped matrices.
template <class F>
bool same_span(const std::vector<Matrix<F>>& a, const std::vector<Matrix<F>>& b, const F& zero) {
    if (a.empty() && b.empty()) return true;
    std::size_t n2 = (a.empty() ? b[0].rows() * b[0].cols() : a[0].rows() * a[0].cols());
    Matrix<F> rows_a(a.size(), n2, zero), rows_b(b.size(), n2, zero), stacked(a.size() + b.size(), n2, zero);
    auto fill = [&](Matrix<F>& dst, const std::vector<Matrix<F>>& src, std::size_t row0) {
        for (std::size_t i = 0; i < src.size(); ++i) {
            std::size_t k = 0;
            for (std::size_t r = 0; r < src[i].rows(); ++r)
                for (std::size_t c = 0; c < src[i].cols(); ++c) dst.at(row0 + i, k++) = src[i].at(r, c);
        }
    };
    fill(rows_a, a, 0);
    fill(rows_b, b, 0);
    fill(stacked, a, 0);
    fill(stacked, b, a.size());
    std::size_t ra = rank_over_field(rows_a), rb = rank_over_field(rows_b), rs = rank_over_field(stacked);
    return ra == rb && rb == rs;
}

inline Matrix<Fp> random_matrix(Rng& rng, const PrimeField& f, std::size_t rows, std::size_t cols) {
    Matrix<Fp> m(rows, cols, f.zero());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.field_element(f);
    return m;
}

inline Matrix<Fp> random_invertible(Rng& rng, const PrimeField& f, std::size_t n) {
    for (;;) {
        Matrix<Fp> g = random_matrix(rng, f, n, n);
        if (rank_over_field(g) == n) return g;
    }
}

/// Exhaustive check of the defining conditions for the chain indices n_i:
/// n_1 = 1, u_{n_i} - u_{n_{i+1}} >= 2, u_{n_i} - u_{n_{i+1}-1} <= 1, and
/// u_{n_{r}} - u_t <= 1 (1-based indices).
inline bool n_indices_satisfy_definition(const Partition& p, const std::vector<int>& n_idx) {
    if (n_idx.empty() || n_idx.front() != 1) return false;
    int t = p.count();
    for (std::size_t i = 0; i + 1 < n_idx.size(); ++i) {
        int a = n_idx[i], b = n_idx[i + 1];
        if (!(a < b && b <= t)) return false;
        if (!(p.part(a - 1) - p.part(b - 1) >= 2)) return false;
        if (!(p.part(a - 1) - p.part(b - 2) <= 1)) return false;
    }
    if (!(p.part(n_idx.back() - 1) - p.part(t - 1) <= 1)) return false;
    return true;
}

/// h(i,j) by exhaustive search over all chains i=k_0<k_1<...<k_h with
/// u_{k_l}-u_{k_{l+1}} >= 2, u_{k_l}-u_{k_{l+1}-1} <= 1 and
/// 0 <= u_{k_h}-u_j <= 1 (0-based i,j). Returns every h admitting a chain.
inline std::vector<int> h_values_by_enumeration(const Partition& p, int i, int j) {
    std::vector<int> found;
    if (p.part(i) - p.part(j) <= 1) return {0};
    int t = p.count();
    std::function<void(int, int)> rec = [&](int k, int depth) {
        if (p.part(k) - p.part(j) >= 0 && p.part(k) - p.part(j) <= 1) {
            found.push_back(depth);
            return;
        }
        for (int nxt = k + 1; nxt < t; ++nxt) {
            if (p.part(k) - p.part(nxt) >= 2 && p.part(k) - p.part(nxt - 1) <= 1) rec(nxt, depth + 1);
        }
    };
    rec(i, 0);
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

} // namespace oracles
