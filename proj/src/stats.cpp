#include "pqm/stats.hpp"

namespace pqm {

StatKind stat_kind_parse(const std::string& name) {
    if (name == "MB" || name == "mb") return StatKind::MB;
    if (name == "BE" || name == "be") return StatKind::BE;
    if (name == "FD" || name == "fd") return StatKind::FD;
    fail("BadStatKind", "unknown statistics kind '" + name + "' (expected MB, BE or FD)");
}

std::string stat_kind_name(StatKind kind) {
    switch (kind) {
        case StatKind::MB: return "MB";
        case StatKind::BE: return "BE";
        case StatKind::FD: return "FD";
    }
    return "?";
}

Int falling_factorial(long n, long k) {
    require(k >= 0, "KExceedsN", "need k >= 0");
    require(k <= n, "KExceedsN", "falling factorial needs k <= n");
    Int out = 1;
    for (long i = 0; i < k; ++i) out *= (n - i);
    return out;
}

Int rising_factorial(long n, long k) {
    require(n >= 1, "BadArgument", "rising factorial needs n >= 1");
    require(k >= 0, "BadArgument", "need k >= 0");
    Int out = 1;
    for (long i = 0; i < k; ++i) out *= (n + i);
    return out;
}

Int multinomial(long k, const std::vector<long>& theta) {
    Int numer = 1;
    for (long i = 2; i <= k; ++i) numer *= i;
    Int denom = 1;
    long total = 0;
    for (long t : theta) {
        require(t >= 0, "InvalidOccupation", "occupation numbers must be non-negative");
        total += t;
        for (long i = 2; i <= t; ++i) denom *= i;
    }
    require(total == k, "InvalidOccupation", "occupation numbers must sum to k");
    return numer / denom;
}

Int state_count(StatKind kind, long n, long k) {
    require(n >= 1, "BadArgument", "need at least one state");
    require(k >= 0, "BadArgument", "need k >= 0");
    Int kfact = 1;
    for (long i = 2; i <= k; ++i) kfact *= i;
    switch (kind) {
        case StatKind::MB: {
            Int out;
            mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(n),
                          static_cast<unsigned long>(k));
            return out;
        }
        case StatKind::BE:
            return rising_factorial(n, k) / kfact;
        case StatKind::FD:
            require(k <= n, "KExceedsN", "at most one fermion per state");
            return falling_factorial(n, k) / kfact;
    }
    return 0;
}

Rat occupancy_probability(StatKind kind, long n, long k, const std::vector<long>& theta) {
    require(static_cast<long>(theta.size()) == n, "InvalidOccupation",
            "need one occupation number per state");
    long total = 0;
    for (long t : theta) {
        require(t >= 0, "InvalidOccupation", "occupation numbers must be non-negative");
        total += t;
    }
    require(total == k, "InvalidOccupation", "occupation numbers must sum to k");
    if (kind == StatKind::FD)
        for (long t : theta)
            require(t <= 1, "InvalidOccupation", "fermion occupation numbers are 0 or 1");
    switch (kind) {
        case StatKind::MB: {
            Rat p(multinomial(k, theta), state_count(StatKind::MB, n, k));
            p.canonicalize();
            return p;
        }
        case StatKind::BE:
        case StatKind::FD: {
            Rat p(1, state_count(kind, n, k));
            p.canonicalize();
            return p;
        }
    }
    return Rat(0);
}

}  // namespace pqm
