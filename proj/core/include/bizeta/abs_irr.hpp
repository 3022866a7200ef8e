#pragma once

#include "bizeta/rational_poly.hpp"
#include "bizeta/zeta_two.hpp"

namespace bizeta {

/// True iff gcd(P, dP/dT) is constant in T over Q(u).
bool squarefreeCheck(const BiPoly& P);

struct FactorReport {
    int absFactorCount = 0;
    bool squarefree = false;
};

/// Number of absolutely irreducible factors of a squarefree P, as the
/// nullity of Gao's differential system
///   g_u P - g P_u = h_T P - h P_T,  deg g <= (m-1, n), deg h <= (m, n-1)
/// applied to the primitive part (in T) of P, plus the number of distinct
/// roots of the content. Throws PreconditionError for non-squarefree input.
FactorReport absFactorCount(const BiPoly& P);

/// Independent count: shear P to be monic in T, lift the generic root of
/// P(T, u0) to a power series over Q[t]/(P(t, u0)) and measure the space of
/// trace functionals whose power sums are polynomial. Throws
/// PreconditionError for non-squarefree input.
int absFactorCountByLifting(const BiPoly& P);

/// Structural facts and the irreducibility biconditional for P.
CheckReport verifyTheorem3(const TwoVarZeta& z, const Measure& m);

/// T^{2g} P(1/T, u).
BiPoly reversedNumerator(const TwoVarZeta& z);

}  // namespace bizeta
