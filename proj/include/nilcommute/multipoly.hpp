#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fp.hpp"
#include "int_ring.hpp"

namespace nilcommute {

using VarList = std::vector<std::string>;
using VarListPtr = std::shared_ptr<const VarList>;
using Expo = std::vector<std::uint32_t>;

inline VarListPtr make_vars(std::vector<std::string> names) {
    return std::make_shared<const VarList>(std::move(names));
}

/// Variables x_1..x_a, y_1..y_b, z in that order (the coefficient ring of the
/// Upsilon matrices; all polynomial matrices in this project share it).
inline VarListPtr make_xyz_vars(int nx, int ny, bool with_z) {
    std::vector<std::string> names;
    for (int i = 1; i <= nx; ++i) names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= ny; ++i) names.push_back("y" + std::to_string(i));
    if (with_z) names.push_back("z");
    return make_vars(std::move(names));
}

inline bool same_vars(const VarListPtr& a, const VarListPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return *a == *b;
}

/// Sparse multivariate polynomial over an exact coefficient ring C
/// (arbitrary-precision integers or a prime field). Terms are kept in a
/// sorted map with no stored zero coefficients; values are immutable in
/// spirit: all operations return fresh polynomials.
template <class C>
class MultiPoly {
public:
    MultiPoly(VarListPtr vars, C coeff_zero)
        : vars_(std::move(vars)), czero_(std::move(coeff_zero)) {
        if (!vars_) throw std::invalid_argument("MultiPoly: null variable list");
    }

    static MultiPoly constant(VarListPtr vars, C value) {
        MultiPoly r(std::move(vars), zero_like(value));
        if (!is_zero(value)) r.terms_.emplace(Expo(r.vars_->size(), 0), std::move(value));
        return r;
    }

    static MultiPoly variable(const VarListPtr& vars, std::size_t index, const C& one) {
        if (index >= vars->size()) throw std::invalid_argument("MultiPoly: variable index out of range");
        MultiPoly r(vars, zero_like(one));
        Expo e(vars->size(), 0);
        e[index] = 1;
        r.terms_.emplace(std::move(e), one);
        return r;
    }

    static MultiPoly monomial(const VarListPtr& vars, Expo e, C coeff) {
        if (e.size() != vars->size()) throw std::invalid_argument("MultiPoly: exponent length mismatch");
        MultiPoly r(vars, zero_like(coeff));
        if (!is_zero(coeff)) r.terms_.emplace(std::move(e), std::move(coeff));
        return r;
    }

    const VarListPtr& vars() const { return vars_; }
    const std::map<Expo, C>& terms() const { return terms_; }
    const C& coeff_zero() const { return czero_; }
    bool is_zero_poly() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    C coefficient(const Expo& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? czero_ : it->second;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (auto x : e) s += static_cast<int>(x);
            d = std::max(d, s);
        }
        return d; // -1 for the zero polynomial
    }

    int degree_in(std::size_t var) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
        return d;
    }

    bool is_homogeneous(int degree) const {
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (auto x : e) s += static_cast<int>(x);
            if (s != degree) return false;
        }
        return true;
    }

    /// Largest variable index with a positive exponent anywhere, or -1.
    int max_var_used() const {
        int m = -1;
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) m = std::max(m, static_cast<int>(i));
        return m;
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        a.check_compatible(b);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        a.check_compatible(b);
        MultiPoly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, a.czero_ - c);
        return r;
    }

    friend MultiPoly operator-(const MultiPoly& a) {
        MultiPoly r(a.vars_, a.czero_);
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, a.czero_ - c);
        return r;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        a.check_compatible(b);
        MultiPoly r(a.vars_, a.czero_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Expo e(ea.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    MultiPoly& operator+=(const MultiPoly& b) { *this = *this + b; return *this; }
    MultiPoly& operator-=(const MultiPoly& b) { *this = *this - b; return *this; }
    MultiPoly& operator*=(const MultiPoly& b) { *this = *this * b; return *this; }

    MultiPoly scaled(const C& k) const {
        MultiPoly r(vars_, czero_);
        if (is_zero(k)) return r;
        for (const auto& [e, c] : terms_) {
            C v = c * k;
            if (!is_zero(v)) r.terms_.emplace(e, std::move(v));
        }
        return r;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return same_vars(a.vars_, b.vars_) && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    /// Total evaluation: the assignment must cover every variable.
    template <class V>
    V evaluate(const std::vector<V>& assignment) const {
        if (assignment.size() != vars_->size())
            throw std::invalid_argument("MultiPoly::evaluate: assignment size mismatch");
        if (assignment.empty()) {
            // constant polynomial in the empty ring: no value type context; disallowed
            throw std::invalid_argument("MultiPoly::evaluate: empty assignment");
        }
        V acc = zero_like(assignment[0]);
        // per-variable power cache, rebuilt lazily up to the needed exponent
        std::vector<std::vector<V>> pows(assignment.size());
        for (std::size_t i = 0; i < assignment.size(); ++i) pows[i].push_back(one_like(assignment[0]));
        for (const auto& [e, c] : terms_) {
            V t = coerce_coeff(c, assignment[0]);
            for (std::size_t i = 0; i < e.size(); ++i) {
                auto& pw = pows[i];
                while (pw.size() <= e[i]) pw.push_back(pw.back() * assignment[i]);
                if (e[i] > 0) t = t * pw[e[i]];
            }
            acc = acc + t;
        }
        return acc;
    }

    /// Partial substitution: variables present in `values` are evaluated,
    /// the rest are re-mapped onto `new_vars` via `remap[old_index] == new
    /// index` (or -1 for substituted variables).
    MultiPoly specialize(const std::vector<std::pair<std::size_t, C>>& values,
                         const VarListPtr& new_vars,
                         const std::vector<int>& remap) const {
        if (remap.size() != vars_->size())
            throw std::invalid_argument("MultiPoly::specialize: remap size mismatch");
        std::vector<const C*> sub(vars_->size(), nullptr);
        for (const auto& [idx, v] : values) sub[idx] = &v;
        MultiPoly r(new_vars, czero_);
        for (const auto& [e, c] : terms_) {
            C coeff = c;
            Expo ne(new_vars->size(), 0);
            bool dead = false;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (sub[i]) {
                    C p = *sub[i];
                    if (is_zero(p)) { dead = true; break; }
                    for (std::uint32_t k = 0; k < e[i]; ++k) coeff = coeff * p;
                } else {
                    if (remap[i] < 0) throw std::invalid_argument("MultiPoly::specialize: unmapped live variable");
                    ne[static_cast<std::size_t>(remap[i])] += e[i];
                }
            }
            if (!dead) r.add_term(ne, coeff);
        }
        return r;
    }

    /// Canonical rendering: terms in sorted exponent order, explicit
    /// coefficients, '*' separated factors, e.g. "3*x1^2*x3 + -2*y1".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << render_term(e, c);
        }
        return os.str();
    }

private:
    static Fp coerce_coeff(const Int& c, const Fp& exemplar) {
        return reduce_mod_p(c, PrimeField(exemplar.p));
    }
    static const C& coerce_coeff(const C& c, const C&) { return c; }

    std::string render_term(const Expo& e, const C& c) const {
        using nilcommute::to_string;
        std::ostringstream os;
        os << to_string(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*" << (*vars_)[i];
            if (e[i] > 1) os << "^" << e[i];
        }
        return os.str();
    }

    void check_compatible(const MultiPoly& b) const {
        if (!same_vars(vars_, b.vars_))
            throw std::invalid_argument("MultiPoly: variable-list mismatch");
    }

    void add_term(const Expo& e, const C& c) {
        if (is_zero(c)) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    VarListPtr vars_;
    std::map<Expo, C> terms_;
    C czero_;
};

template <class C>
inline bool is_zero(const MultiPoly<C>& p) { return p.is_zero_poly(); }
template <class C>
inline MultiPoly<C> zero_like(const MultiPoly<C>& p) { return MultiPoly<C>(p.vars(), p.coeff_zero()); }
template <class C>
inline MultiPoly<C> one_like(const MultiPoly<C>& p) {
    return MultiPoly<C>::constant(p.vars(), one_like(p.coeff_zero()));
}
template <class C>
inline std::string to_string(const MultiPoly<C>& p) { return p.to_string(); }

/// Coefficient-wise reduction into F_p; zero terms are dropped.
inline MultiPoly<Fp> reduce_mod_p(const MultiPoly<Int>& a, const PrimeField& f) {
    MultiPoly<Fp> r(a.vars(), f.zero());
    for (const auto& [e, c] : a.terms()) {
        Fp v = reduce_mod_p(c, f);
        if (!v.is_zero()) r = r + MultiPoly<Fp>::monomial(a.vars(), e, v);
    }
    return r;
}

} // namespace nilcommute
