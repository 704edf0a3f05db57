#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace tvl {

// All arithmetic in the solver is arbitrary precision: bounds like M^phi
// overflow machine words even on toy inputs.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

inline std::string to_string(const Int& v) { return v.str(); }

// floor(log2(v)) for v >= 1, as an Int-friendly helper.
inline unsigned floor_log2(const Int& v) {
    return static_cast<unsigned>(boost::multiprecision::msb(v));
}

// v^e for e >= 0.
inline Int int_pow(const Int& v, unsigned long e) {
    Int r = 1, b = v;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

} // namespace tvl
