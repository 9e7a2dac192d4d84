#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace rotorkit {

// Exact arbitrary-precision integer. Cofactor growth overflows 64 bits long
// before graphs stop being desk-sized, so every algebraic quantity uses Int.
using Int = mpz_class;

inline std::string to_string(const Int& x) { return x.get_str(); }

inline std::vector<std::string> to_strings(const std::vector<Int>& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(x.get_str());
    return out;
}

// Nonnegative remainder of a modulo m (m > 0), independent of the sign of a.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

}  // namespace rotorkit
