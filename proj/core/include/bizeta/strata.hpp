#pragma once

#include <map>
#include <vector>

#include "bizeta/jacobian.hpp"
#include "bizeta/zeta_one.hpp"

namespace bizeta {

/// b[n][nu] = number of F_q-rational degree-n classes with h^0 = nu, for
/// 0 <= n <= 2g-2 and 0 <= nu <= g.
struct StratumTable {
    int genus = 0;
    Integer q;
    Integer classNumber;
    std::vector<std::vector<Integer>> b;

    const Integer& at(int n, int nu) const { return b.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(nu)); }
};

/// h^0 of every class hit by an effective divisor, per degree 0..2g-2.
/// Classes missing from the map have h^0 = 0.
struct ClassStrata {
    std::vector<std::map<DivisorClassKey, int>> h0ByDegree;

    int h0(const DivisorClassKey& key) const;
};

/// Buckets effective divisors of degree <= 2g-2 by class and inverts the
/// bucket size (q^nu - 1)/(q - 1) to nu. Throws StratificationError when a
/// bucket has any other size.
ClassStrata classifyEffectiveDivisors(const Jacobian& jac, const PlaceTable& places);

/// Builds the table and certifies row sums, the zero-section row, duality,
/// Clifford vanishing and the Riemann-Roch floor (StratificationError otherwise).
StratumTable strataTable(const Jacobian& jac, const PlaceTable& places, const LPolynomial& L);

/// Same from a precomputed classification.
StratumTable strataTable(const ClassStrata& classes, const Integer& q, int genus, const Integer& classNumber);

/// Empty string when all table invariants hold, else the first violation.
std::string stratumTableViolation(const StratumTable& table);

}  // namespace bizeta
