#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "fp.hpp"

namespace nilcommute {

// Arbitrary-precision coefficients. The polynomial-matrix constructions grow
// combinatorially and must never wrap. Expression templates are disabled so
// the types behave as plain values in generic code.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                          boost::multiprecision::et_off>;

inline bool is_zero(const Int& a) { return a.is_zero(); }
inline Int zero_like(const Int&) { return Int(0); }
inline Int one_like(const Int&) { return Int(1); }
inline std::string to_string(const Int& a) { return a.str(); }

inline bool is_zero(const Rat& a) { return a.is_zero(); }
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline std::string to_string(const Rat& a) { return a.str(); }

inline Fp reduce_mod_p(const Int& a, const PrimeField& f) {
    Int r = a % Int(f.modulus());
    if (r < 0) r += Int(f.modulus());
    return Fp{r.convert_to<std::uint64_t>(), f.modulus()};
}

} // namespace nilcommute
