#pragma once

#include <vector>

#include "bizeta/curve.hpp"
#include "bizeta/rational_poly.hpp"

namespace bizeta {

/// Numerator of the one-variable zeta function, c_0 = 1 and c_{2g} = q^g.
struct LPolynomial {
    std::vector<Integer> coeffs;
    Integer q;
    int genus = 0;

    Integer operator[](std::size_t i) const { return i < coeffs.size() ? coeffs[i] : Integer(0); }
    QPoly toQPoly() const;
};

/// Recovers L from a_1..a_g by Newton's identities on the power sums
/// a_m - 1 - q^m. Throws InconsistentCountsError when a coefficient fails to
/// be integral or the Weil bound c_1^2 <= 4 g^2 q fails.
LPolynomial lPolynomialFromCounts(const std::vector<Integer>& counts, const Integer& q, int genus);

/// a_1..a_count determined by L (the inverse of lPolynomialFromCounts).
std::vector<Integer> countsFromL(const LPolynomial& L, int count);

/// L over F_{q^m}: reciprocal roots raised to the m-th power.
LPolynomial baseChangeL(const LPolynomial& L, unsigned m);

/// h = L(1).
Integer classNumber(const LPolynomial& L);

/// s_0..s_N with s_n = |X^(n)(F_q)|, the Taylor coefficients of
/// L(T) / ((1-T)(1-qT)). Throws InconsistentCountsError on a negative or
/// non-integral coefficient.
std::vector<Integer> symmetricProductCounts(const LPolynomial& L, unsigned order);

/// Number of effective divisors of degree n, by the Euler product over the
/// places of the table. Throws PreconditionError when the table is too shallow.
Integer effectiveDivisorCount(const PlaceTable& places, int n);

/// Same, for every n <= order at once.
std::vector<Integer> effectiveDivisorCounts(const PlaceTable& places, int order);

}  // namespace bizeta
