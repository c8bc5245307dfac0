#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nilcommute {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i < s - 1; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace detail

/// Element of F_p. Carries its modulus; mixing moduli is a structural error.
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0; // 0 = unattached zero (absorbing placeholder never produced by PrimeField)

    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t modulus) : v(value % modulus), p(modulus) {}

    bool is_zero() const { return v == 0; }

    friend void check_same_field(const Fp& a, const Fp& b) {
        if (a.p != b.p) throw std::invalid_argument("Fp: mixed moduli " + std::to_string(a.p) + " vs " + std::to_string(b.p));
    }

    friend Fp operator+(const Fp& a, const Fp& b) {
        check_same_field(a, b);
        std::uint64_t s = a.v + b.v;
        if (s >= a.p) s -= a.p;
        return Fp{s, a.p};
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        check_same_field(a, b);
        std::uint64_t s = a.v + a.p - b.v;
        if (s >= a.p) s -= a.p;
        return Fp{s, a.p};
    }
    friend Fp operator-(const Fp& a) {
        return Fp{a.v == 0 ? 0 : a.p - a.v, a.p};
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        check_same_field(a, b);
        return Fp{detail::mulmod_u64(a.v, b.v, a.p), a.p};
    }
    Fp inv() const {
        if (v == 0) throw std::domain_error("Fp: inverse of zero");
        return Fp{detail::powmod_u64(v, p - 2, p), p};
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }

    Fp& operator+=(const Fp& b) { *this = *this + b; return *this; }
    Fp& operator-=(const Fp& b) { *this = *this - b; return *this; }
    Fp& operator*=(const Fp& b) { *this = *this * b; return *this; }

    friend bool operator==(const Fp& a, const Fp& b) { return a.v == b.v && a.p == b.p; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }
    friend bool operator<(const Fp& a, const Fp& b) { return a.v < b.v; } // canonical order, same field assumed

    Fp pow(std::uint64_t e) const { return Fp{detail::powmod_u64(v, e, p), p}; }
};

inline bool is_zero(const Fp& a) { return a.v == 0; }
inline Fp zero_like(const Fp& a) { return Fp{0, a.p}; }
inline Fp one_like(const Fp& a) { return Fp{1 % a.p, a.p}; }
inline std::string to_string(const Fp& a) { return std::to_string(a.v); }

/// A prime field F_p with runtime modulus, p checked prime at construction.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (!detail::is_prime_u64(p)) throw std::invalid_argument("PrimeField: modulus " + std::to_string(p) + " is not prime");
    }

    std::uint64_t modulus() const { return p_; }

    Fp zero() const { return Fp{0, p_}; }
    Fp one() const { return Fp{1 % p_, p_}; }

    Fp from_int(long long x) const {
        long long r = x % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return Fp{static_cast<std::uint64_t>(r), p_};
    }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    std::uint64_t p_;
};

} // namespace nilcommute
