#pragma once

#include <gmpxx.h>

#include <string>

#include "pqm/error.hpp"

namespace pqm {

using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    require(den != 0, "ZeroDenominator", "rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Canonical "num/den" form; the denominator is always printed ("0/1", "1/1").
inline std::string rat_str(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Parses "3/8", "-1/2" or a bare integer "2".
inline Rat rat_parse(const std::string& s) {
    try {
        Rat r;
        if (r.set_str(s, 10) != 0) fail("BadRational", "cannot parse '" + s + "'");
        require(r.get_den() != 0, "ZeroDenominator", "rational with zero denominator: '" + s + "'");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        fail("BadRational", "cannot parse '" + s + "'");
    }
}

/// Exact square root of a perfect-square rational; `ok` reports whether one exists.
inline Rat rat_sqrt(const Rat& r, bool& ok) {
    if (sgn(r) < 0) {
        ok = false;
        return Rat(0);
    }
    Int num_root, den_root;
    ok = mpz_perfect_square_p(r.get_num().get_mpz_t()) &&
         mpz_perfect_square_p(r.get_den().get_mpz_t());
    if (!ok) return Rat(0);
    mpz_sqrt(num_root.get_mpz_t(), r.get_num().get_mpz_t());
    mpz_sqrt(den_root.get_mpz_t(), r.get_den().get_mpz_t());
    return Rat(num_root, den_root);
}

}  // namespace pqm
