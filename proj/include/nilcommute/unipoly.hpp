#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fp.hpp"
#include "int_ring.hpp"

namespace nilcommute {

/// Dense univariate polynomial; the leading coefficient is nonzero unless
/// the polynomial is zero (empty coefficient vector).
template <class C>
class UniPoly {
public:
    explicit UniPoly(C coeff_zero) : czero_(std::move(coeff_zero)) {}

    UniPoly(std::vector<C> coeffs, C coeff_zero)
        : c_(std::move(coeffs)), czero_(std::move(coeff_zero)) {
        normalize();
    }

    static UniPoly constant(C v) {
        UniPoly r(zero_like(v));
        if (!is_zero(v)) r.c_.push_back(std::move(v));
        return r;
    }

    static UniPoly x(const C& one) {
        UniPoly r(zero_like(one));
        r.c_ = {zero_like(one), one};
        return r;
    }

    static UniPoly monomial(const C& coeff, std::size_t degree) {
        UniPoly r(zero_like(coeff));
        if (!is_zero(coeff)) {
            r.c_.assign(degree + 1, zero_like(coeff));
            r.c_[degree] = coeff;
        }
        return r;
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero_poly() const { return c_.empty(); }
    const C& coeff_zero() const { return czero_; }

    const C& coeff(std::size_t i) const { return i < c_.size() ? c_[i] : czero_; }
    const std::vector<C>& coeffs() const { return c_; }

    const C& leading() const {
        if (c_.empty()) throw std::domain_error("UniPoly: leading coefficient of zero");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == one_like(czero_); }

    /// True when x divides the polynomial (no constant term). Zero counts.
    bool divisible_by_x() const { return c_.empty() || is_zero(c_[0]); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<C> r(std::max(a.c_.size(), b.c_.size()), a.czero_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
        return UniPoly(std::move(r), a.czero_);
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        std::vector<C> r(std::max(a.c_.size(), b.c_.size()), a.czero_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
        return UniPoly(std::move(r), a.czero_);
    }
    friend UniPoly operator-(const UniPoly& a) {
        std::vector<C> r(a.c_.size(), a.czero_);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.czero_ - a.c_[i];
        return UniPoly(std::move(r), a.czero_);
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.c_.empty() || b.c_.empty()) return UniPoly(a.czero_);
        std::vector<C> r(a.c_.size() + b.c_.size() - 1, a.czero_);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(r), a.czero_);
    }

    UniPoly& operator+=(const UniPoly& b) { *this = *this + b; return *this; }
    UniPoly& operator-=(const UniPoly& b) { *this = *this - b; return *this; }
    UniPoly& operator*=(const UniPoly& b) { *this = *this * b; return *this; }

    UniPoly scaled(const C& k) const {
        std::vector<C> r(c_.size(), czero_);
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * k;
        return UniPoly(std::move(r), czero_);
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    /// Horner evaluation at a ring element (field element, or any value with
    /// the same ring operations, e.g. a square matrix).
    template <class V>
    V eval(const V& at) const {
        V acc = zero_like(at);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + promote(c_[i], at);
        return acc;
    }

    /// Division with remainder, requiring an invertible leading coefficient
    /// in the divisor (field coefficients in practice).
    friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero_poly()) throw std::domain_error("UniPoly: division by zero polynomial");
        UniPoly q(a.czero_), r = a;
        C lead_inv = one_like(b.czero_) / b.leading();
        while (!r.is_zero_poly() && r.degree() >= b.degree()) {
            C f = r.leading() * lead_inv;
            std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            q += UniPoly::monomial(f, shift);
            r -= UniPoly::monomial(f, shift) * b;
        }
        return {q, r};
    }

    /// Exact quotient; throws if the division leaves a remainder.
    friend UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero_poly()) throw std::domain_error("UniPoly: inexact division");
        return q;
    }

    std::string to_string(const std::string& var = "x") const {
        using nilcommute::to_string;
        if (c_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (is_zero(c_[i])) continue;
            if (!first) os << " + ";
            first = false;
            os << to_string(c_[i]);
            if (i >= 1) {
                os << "*" << var;
                if (i > 1) os << "^" << i;
            }
        }
        return os.str();
    }

private:
    template <class V>
    static V promote(const C& c, const V& exemplar) {
        if constexpr (std::is_same_v<C, V>) {
            (void)exemplar;
            return c;
        } else {
            return one_like(exemplar).scaled(c); // matrix-valued evaluation: c * I
        }
    }

    void normalize() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }

    std::vector<C> c_;
    C czero_;
};

template <class C>
inline bool is_zero(const UniPoly<C>& p) { return p.is_zero_poly(); }
template <class C>
inline UniPoly<C> zero_like(const UniPoly<C>& p) { return UniPoly<C>(p.coeff_zero()); }
template <class C>
inline UniPoly<C> one_like(const UniPoly<C>& p) { return UniPoly<C>::constant(one_like(p.coeff_zero())); }
template <class C>
inline std::string to_string(const UniPoly<C>& p) { return p.to_string(); }

} // namespace nilcommute
