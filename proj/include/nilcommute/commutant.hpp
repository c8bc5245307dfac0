#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "matrix.hpp"
#include "partition.hpp"
#include "rng.hpp"

namespace nilcommute {

template <class F>
bool is_nilpotent(const Matrix<F>& m) {
    if (!m.is_square()) return false;
    return m.pow(m.rows()).is_zero_matrix();
}

/// Nilpotency index: least e with m^e = 0.
template <class F>
std::size_t nilpotency_index(const Matrix<F>& m) {
    if (!is_nilpotent(m)) throw std::domain_error("nilpotency_index: matrix is not nilpotent");
    Matrix<F> p = Matrix<F>::identity(m.rows(), one_like(m.zero()));
    for (std::size_t e = 0; e <= m.rows(); ++e) {
        if (p.is_zero_matrix()) return e;
        p = p * m;
    }
    return m.rows(); // unreachable
}

/// Jordan type of a nilpotent matrix from the ranks of its powers.
template <class F>
Partition jordan_partition(const Matrix<F>& b) {
    if (!b.is_square()) throw std::domain_error("jordan_partition: non-square matrix");
    if (!is_nilpotent(b)) throw std::domain_error("jordan_partition: matrix is not nilpotent");
    std::size_t n = b.rows();
    // conjugate parts: dim ker B^m - dim ker B^{m-1} = rank B^{m-1} - rank B^m
    std::vector<int> conj;
    Matrix<F> p = b;
    std::size_t prev_rank = n;
    while (prev_rank > 0) {
        std::size_t r = rank_over_field(p);
        conj.push_back(static_cast<int>(prev_rank - r));
        prev_rank = r;
        p = p * b;
    }
    return Partition(conj).conjugate();
}

/// A nilpotent matrix together with a basis putting it into Jordan form:
/// basis^{-1} * input * basis = jordan, blocks in weakly decreasing order.
template <class F>
struct JordanData {
    Matrix<F> jordan;
    Partition partition;
    Matrix<F> basis;
};

namespace detail {

template <class F>
bool extends_span(Matrix<F>& span_rows, std::size_t& used, const std::vector<F>& v) {
    // span_rows holds `used` rows; appends v if independent
    for (std::size_t j = 0; j < v.size(); ++j) span_rows.at(used, j) = v[j];
    Matrix<F> sub = span_rows.block(0, 0, used + 1, span_rows.cols());
    if (rank_over_field(sub) == used + 1) {
        ++used;
        return true;
    }
    return false;
}

} // namespace detail

/// Greedy top-down Jordan chain extraction from the kernel filtration.
/// Deterministic given the input matrix; the conjugation check is enforced.
template <class F>
JordanData<F> jordan_basis(const Matrix<F>& b) {
    Partition part = jordan_partition(b); // includes the nilpotency check
    std::size_t n = b.rows();
    const F zero = b.zero();
    const F one = one_like(zero);

    std::size_t ind = static_cast<std::size_t>(part.part(0));
    // kernel bases of the powers, W[s] = ker b^s (W[0] empty)
    std::vector<std::vector<std::vector<F>>> kernels(ind + 1);
    Matrix<F> pw = Matrix<F>::identity(n, one);
    for (std::size_t s = 1; s <= ind; ++s) {
        pw = pw * b;
        kernels[s] = kernel_basis(pw);
    }

    struct Chain {
        std::vector<F> gen;
        std::size_t len;
    };
    std::vector<Chain> chains;

    for (std::size_t s = ind; s >= 1; --s) {
        Matrix<F> span_rows(n + 1, n, zero);
        std::size_t used = 0;
        if (s >= 2)
            for (const auto& w : kernels[s - 1]) detail::extends_span(span_rows, used, w);
        for (const auto& ch : chains) {
            // chain element at kernel level s
            Matrix<F> v(n, 1, zero);
            for (std::size_t i = 0; i < n; ++i) v.at(i, 0) = ch.gen[i];
            Matrix<F> img = b.pow(ch.len - s) * v;
            std::vector<F> w(n, zero);
            for (std::size_t i = 0; i < n; ++i) w[i] = img.at(i, 0);
            detail::extends_span(span_rows, used, w);
        }
        for (const auto& w : kernels[s]) {
            if (detail::extends_span(span_rows, used, w)) chains.push_back({w, s});
        }
        if (s == 1) break;
    }

    // assemble basis columns: per chain b^{len-1}g, ..., bg, g
    Matrix<F> basis(n, n, zero);
    std::size_t col = 0;
    for (const auto& ch : chains) {
        Matrix<F> v(n, 1, zero);
        for (std::size_t i = 0; i < n; ++i) v.at(i, 0) = ch.gen[i];
        std::vector<Matrix<F>> elems;
        elems.push_back(v);
        for (std::size_t j = 1; j < ch.len; ++j) elems.push_back(b * elems.back());
        for (std::size_t j = 0; j < ch.len; ++j) {
            const Matrix<F>& e = elems[ch.len - 1 - j];
            for (std::size_t i = 0; i < n; ++i) basis.at(i, col) = e.at(i, 0);
            ++col;
        }
    }

    Matrix<F> jordan = jordan_matrix(part.parts(), one);
    Matrix<F> check = conjugate(b, basis);
    if (check != jordan) throw std::logic_error("jordan_basis: conjugation check failed");
    return JordanData<F>{jordan, part, basis};
}

// ---------------------------------------------------------------------------
// Centralizer parameterization (Turnbull-Aitken block form)
// ---------------------------------------------------------------------------

/// Basis matrix of the centralizer block (h,k): the banded Toeplitz pattern
/// with parameter index j in 1..min(u_h,u_k) set to `one`. Entries sit on
/// the diagonal c - r = (u_k - min) + j - 1 hugging the top-right corner.
template <class F>
Matrix<F> commutant_block_pattern(int rows, int cols, int j, const F& one) {
    Matrix<F> m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), zero_like(one));
    int mn = std::min(rows, cols);
    int d = (cols - mn) + j - 1;
    for (int r = 0; r + d < cols && r < rows && r < mn - j + 1; ++r)
        m.at(static_cast<std::size_t>(r), static_cast<std::size_t>(r + d)) = one;
    return m;
}

/// Free parameters a^j_{hk} of an element of the centralizer of the Jordan
/// matrix of the given partition, in canonical (h, k, j) order.
template <class F>
struct CommutantParams {
    Partition partition;
    std::vector<F> values;

    static std::size_t count(const Partition& p) {
        std::size_t c = 0;
        for (int h = 0; h < p.count(); ++h)
            for (int k = 0; k < p.count(); ++k) c += static_cast<std::size_t>(std::min(p.part(h), p.part(k)));
        return c;
    }

    static std::size_t index(const Partition& p, int h, int k, int j) {
        std::size_t idx = 0;
        for (int hh = 0; hh < p.count(); ++hh)
            for (int kk = 0; kk < p.count(); ++kk) {
                int mn = std::min(p.part(hh), p.part(kk));
                if (hh == h && kk == k) {
                    if (j < 1 || j > mn) throw std::invalid_argument("CommutantParams: parameter index out of range");
                    return idx + static_cast<std::size_t>(j - 1);
                }
                idx += static_cast<std::size_t>(mn);
            }
        throw std::invalid_argument("CommutantParams: block index out of range");
    }

    const F& at(int h, int k, int j) const { return values.at(index(partition, h, k, j)); }
    F& at(int h, int k, int j) { return values.at(index(partition, h, k, j)); }
};

/// The matrix with the given centralizer parameters, in the Jordan basis.
template <class F>
Matrix<F> materialize_commutant(const CommutantParams<F>& params, const F& one) {
    const Partition& p = params.partition;
    std::size_t n = static_cast<std::size_t>(p.n());
    Matrix<F> a(n, n, zero_like(one));
    std::vector<std::size_t> off{0};
    for (int u : p.parts()) off.push_back(off.back() + static_cast<std::size_t>(u));
    std::size_t idx = 0;
    for (int h = 0; h < p.count(); ++h)
        for (int k = 0; k < p.count(); ++k) {
            int rows = p.part(h), cols = p.part(k);
            int mn = std::min(rows, cols);
            for (int j = 1; j <= mn; ++j, ++idx) {
                const F& v = params.values[idx];
                if (is_zero(v)) continue;
                int d = (cols - mn) + j - 1;
                for (int r = 0; r + d < cols && r < mn - j + 1; ++r)
                    a.at(off[static_cast<std::size_t>(h)] + static_cast<std::size_t>(r),
                         off[static_cast<std::size_t>(k)] + static_cast<std::size_t>(r + d)) =
                        a.at(off[static_cast<std::size_t>(h)] + static_cast<std::size_t>(r),
                             off[static_cast<std::size_t>(k)] + static_cast<std::size_t>(r + d)) + v;
            }
        }
    return a;
}

/// Read the parameters back off a matrix assumed to lie in the centralizer
/// (entries are taken from the band representatives; no validation).
template <class F>
CommutantParams<F> extract_commutant_params(const Matrix<F>& a, const Partition& p) {
    BlockView<F> bv(a, p.parts());
    CommutantParams<F> params{p, {}};
    params.values.reserve(CommutantParams<F>::count(p));
    for (int h = 0; h < p.count(); ++h)
        for (int k = 0; k < p.count(); ++k) {
            Matrix<F> blk = bv.block(static_cast<std::size_t>(h), static_cast<std::size_t>(k));
            int rows = p.part(h), cols = p.part(k);
            int mn = std::min(rows, cols);
            for (int j = 1; j <= mn; ++j) {
                int d = (cols - mn) + j - 1;
                params.values.push_back(blk.at(0, static_cast<std::size_t>(d)));
            }
        }
    return params;
}

/// One basis matrix per centralizer parameter; their span is the full
/// centralizer of the Jordan matrix (dimension sum of min(u_h,u_k)).
template <class F>
std::vector<Matrix<F>> commutant_basis(const Partition& p, const F& one) {
    std::vector<Matrix<F>> out;
    out.reserve(CommutantParams<F>::count(p));
    std::size_t total = CommutantParams<F>::count(p);
    for (std::size_t i = 0; i < total; ++i) {
        CommutantParams<F> params{p, std::vector<F>(total, zero_like(one))};
        params.values[i] = one;
        out.push_back(materialize_commutant(params, one));
    }
    return out;
}

/// The diagonal parameter block of group alpha: (a^1_{hk}) over the blocks
/// of equal part size in that group.
template <class F>
Matrix<F> abar_block(const CommutantParams<F>& params, const PartitionInvariants& inv, int alpha, const F& one) {
    int lo = inv.q[static_cast<std::size_t>(alpha)];     // first block of the group (0-based)
    int hi = inv.q[static_cast<std::size_t>(alpha) + 1]; // one past last
    int g = hi - lo;
    Matrix<F> m(static_cast<std::size_t>(g), static_cast<std::size_t>(g), zero_like(one));
    for (int h = 0; h < g; ++h)
        for (int k = 0; k < g; ++k) m.at(static_cast<std::size_t>(h), static_cast<std::size_t>(k)) = params.at(lo + h, lo + k, 1);
    return m;
}

/// Nilpotency of a centralizer element through its diagonal parameter
/// blocks: A is nilpotent iff every Abar_{alpha,alpha} is nilpotent.
template <class F>
bool is_nilpotent_in_centralizer(const CommutantParams<F>& params, const F& one) {
    PartitionInvariants inv = partition_invariants(params.partition);
    for (int alpha = 0; alpha < inv.t_hat; ++alpha) {
        if (!is_nilpotent(abar_block(params, inv, alpha, one))) return false;
    }
    return true;
}

/// Change of basis keeping the Jordan form fixed and making every diagonal
/// parameter block strictly upper triangular. Input and output are in the
/// coordinates of `jd.basis`'s source; the returned JordanData has the
/// composed basis.
template <class F>
JordanData<F> triangularize(const Matrix<F>& a_input, const JordanData<F>& jd) {
    const F zero = jd.jordan.zero();
    const F one = one_like(zero);
    Matrix<F> a = conjugate(a_input, jd.basis);
    if (!commutator(a, jd.jordan).is_zero_matrix() || !is_nilpotent(a))
        throw std::domain_error("triangularize: matrix is not a nilpotent centralizer element");
    const Partition& p = jd.partition;
    PartitionInvariants inv = partition_invariants(p);
    CommutantParams<F> params = extract_commutant_params(a, p);

    std::vector<std::size_t> off{0};
    for (int u : p.parts()) off.push_back(off.back() + static_cast<std::size_t>(u));

    std::size_t n = static_cast<std::size_t>(p.n());
    Matrix<F> t = Matrix<F>::identity(n, one);
    for (int alpha = 0; alpha < inv.t_hat; ++alpha) {
        int lo = inv.q[static_cast<std::size_t>(alpha)];
        int hi = inv.q[static_cast<std::size_t>(alpha) + 1];
        int g = hi - lo;
        if (g == 1) continue;
        Matrix<F> m = abar_block(params, inv, alpha, one);
        // order a basis along the kernel filtration of m: q_i with
        // m q_i in span(q_1..q_{i-1})
        Matrix<F> q(static_cast<std::size_t>(g), static_cast<std::size_t>(g), zero);
        Matrix<F> span_rows(static_cast<std::size_t>(g) + 1, static_cast<std::size_t>(g), zero);
        std::size_t used = 0;
        Matrix<F> pw = m;
        while (used < static_cast<std::size_t>(g)) {
            for (const auto& w : kernel_basis(pw)) {
                if (detail::extends_span(span_rows, used, w)) {
                    for (int i = 0; i < g; ++i) q.at(static_cast<std::size_t>(i), used - 1) = w[static_cast<std::size_t>(i)];
                }
            }
            pw = pw * m;
        }
        // same mixing at every grade: new chain i = sum_k q[k][i] * chain k
        int u = p.part(lo);
        for (int i = 0; i < g; ++i)
            for (int k = 0; k < g; ++k) {
                const F& c = q.at(static_cast<std::size_t>(k), static_cast<std::size_t>(i));
                for (int l = 0; l < u; ++l)
                    t.at(off[static_cast<std::size_t>(lo + k)] + static_cast<std::size_t>(l),
                         off[static_cast<std::size_t>(lo + i)] + static_cast<std::size_t>(l)) = c;
            }
    }

    Matrix<F> new_basis = jd.basis * t;
    if (conjugate(jd.jordan, t) != jd.jordan) throw std::logic_error("triangularize: Jordan form not preserved");
    Matrix<F> a_new = conjugate(a, t);
    CommutantParams<F> np = extract_commutant_params(a_new, p);
    for (int alpha = 0; alpha < inv.t_hat; ++alpha) {
        Matrix<F> ab = abar_block(np, inv, alpha, one);
        for (std::size_t i = 0; i < ab.rows(); ++i)
            for (std::size_t j = 0; j <= i; ++j)
                if (!is_zero(ab.at(i, j))) throw std::logic_error("triangularize: diagonal block not strictly triangular");
    }
    return JordanData<F>{jd.jordan, p, new_basis};
}

enum class SampleMode { uniform, witness };

/// Sample A in N_{B,Delta_B} for B the Jordan matrix of the partition:
/// uniform draws all centralizer parameters with strictly upper triangular
/// diagonal groups; witness builds the block-regular element attaining
/// rank n - r_B.
inline Matrix<Fp> sample_nilpotent_commuting(const Partition& p, const PrimeField& field, Rng& rng, SampleMode mode) {
    PartitionInvariants inv = partition_invariants(p);
    std::size_t n = static_cast<std::size_t>(p.n());
    std::vector<std::size_t> off{0};
    for (int u : p.parts()) off.push_back(off.back() + static_cast<std::size_t>(u));

    if (mode == SampleMode::uniform) {
        CommutantParams<Fp> params{p, std::vector<Fp>(CommutantParams<Fp>::count(p), field.zero())};
        std::size_t idx = 0;
        for (int h = 0; h < p.count(); ++h)
            for (int k = 0; k < p.count(); ++k) {
                int mn = std::min(p.part(h), p.part(k));
                bool same_group = inv.group_of(h) == inv.group_of(k);
                for (int j = 1; j <= mn; ++j, ++idx) {
                    if (j == 1 && same_group && h >= k) continue; // strict upper triangular Abar
                    params.values[idx] = rng.field_element(field);
                }
            }
        return materialize_commutant(params, field.one());
    }

    // witness: per near-equal chain n_i..n_{i+1}-1, the cyclic shift that is
    // regular on the chain and commutes with the chain's Jordan blocks
    Matrix<Fp> a(n, n, field.zero());
    for (int i = 0; i < inv.r_B; ++i) {
        int lo = inv.n_idx[static_cast<std::size_t>(i)] - 1; // 0-based first block of chain
        int hi = (i + 1 < inv.r_B ? inv.n_idx[static_cast<std::size_t>(i) + 1] - 1 : p.count()) - 1;
        int r = hi - lo + 1;
        int chain_size = 0;
        for (int h = lo; h <= hi; ++h) chain_size += p.part(h);
        // source index j (1-based within the chain's shift ordering) sits at
        // block lo + ((j-1) mod r), grade position (j-1)/r
        auto coord = [&](int j) -> std::size_t {
            int h = lo + ((j - 1) % r);
            int pos = (j - 1) / r;
            return off[static_cast<std::size_t>(h)] + static_cast<std::size_t>(pos);
        };
        for (int j = 2; j <= chain_size; ++j) a.at(coord(j - 1), coord(j)) = field.one();
    }
    return a;
}

} // namespace nilcommute
