/**
 * @file rat.hpp
 * @brief Exact arbitrary-precision rationals, backed by GMP.
 *
 * Rat is mpq_class: always canonical (coprime numerator/denominator,
 * denominator > 0), so the invariants hold by construction. The helpers
 * here add the few operations GMP does not ship: integer powers with
 * negative exponents, parsing of "p/q" strings, and a stable to_string.
 */
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qtet {

using Rat = mpq_class;
using Int = mpz_class;

struct zero_divide : std::runtime_error {
    explicit zero_divide(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat(long n, long d = 1) {
    if (d == 0) throw zero_divide("rational with zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw zero_divide("0 raised to a negative power");
        return Rat(0);
    }
    Rat out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(),
               static_cast<unsigned long>(e < 0 ? -e : e));
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(),
               static_cast<unsigned long>(e < 0 ? -e : e));
    out.canonicalize();
    if (e < 0) return Rat(1) / out;
    return out;
}

// Accepts "p", "-p", "p/q" with optional sign.
inline Rat rat_parse(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("cannot parse rational: '" + s + "'");
    if (r.get_den() == 0) throw zero_divide("rational with zero denominator");
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace qtet
