#pragma once

#include <vector>

#include "pqm/rational.hpp"

namespace pqm {

/// Occupancy model: distinguishable particles / indistinguishable with
/// arbitrary placement / indistinguishable with at most one per state.
enum class StatKind { MB, BE, FD };

StatKind stat_kind_parse(const std::string& name);
std::string stat_kind_name(StatKind kind);

/// n(n-1)...(n-k+1), exact; empty product for k = 0.
Int falling_factorial(long n, long k);

/// n(n+1)...(n+k-1), exact.
Int rising_factorial(long n, long k);

/// k! / (theta_1! ... theta_n!).
Int multinomial(long k, const std::vector<long>& theta);

/// Number of equiprobable states for k particles in n boxes:
/// MB -> n^k, BE -> rising(n,k)/k!, FD -> C(n,k).
Int state_count(StatKind kind, long n, long k);

/// Probability of the given occupation vector under the model; exact rational.
Rat occupancy_probability(StatKind kind, long n, long k, const std::vector<long>& theta);

}  // namespace pqm
