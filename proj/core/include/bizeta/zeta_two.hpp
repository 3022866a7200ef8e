#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bizeta/rational_poly.hpp"
#include "bizeta/strata.hpp"

namespace bizeta {

/// Stratum-indexed values v[n][nu] (0 <= n <= 2g-2, 0 <= nu <= g) of a
/// measure, with its value on Pic^0 and, for counting measures, on the affine line.
struct Measure {
    int genus = 0;
    std::vector<std::vector<Rational>> values;
    Rational pic0;
    std::optional<Rational> lefschetz;

    Rational at(int n, int nu) const;
};

/// Empty when every measure invariant holds, otherwise the name of the first
/// violated constraint followed by details. Checked in the order: shape,
/// zero section, row sums, duality, Clifford vanishing.
std::string measureViolation(const Measure& m);

Measure countingMeasure(const StratumTable& strata);

/// Throws InvalidMeasureError naming the violated constraint.
Measure tableMeasure(int genus, std::vector<std::vector<Rational>> values, const Rational& pic0);

/// Sum of v[n][nu] u^nu T^n.
BiPoly assembleG(const Measure& m);

/// pic0 ((1-T) u^g T^{2g-1} - (1-uT)) + (1-uT)(1-T) G. Throws
/// InvalidMeasureError unless Q(T,1) = 0.
BiPoly assembleQ(const Measure& m);

/// Numerator of Z(T,u) over the fixed denominator (1-T)(1-uT).
struct TwoVarZeta {
    int genus = 0;
    BiPoly P;

    QPoly coefficient(std::size_t i) const { return P.row(i); }
};

/// P = Q / (u-1); P = 1 for genus 0. Throws InvalidMeasureError if the
/// division fails and TheoremViolationError if P violates its structural
/// invariants.
TwoVarZeta numeratorP(const Measure& m);

/// P(T, value).
QPoly specializeU(const TwoVarZeta& z, const Rational& value);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckResult> checks;

    bool allPassed() const;
    void add(std::string name, bool passed, std::string detail = {});
};

CheckReport verifyTheorem2(const TwoVarZeta& z, const Measure& m);

/// For n <= 2g-2 compares sum_nu b[n][nu] (q^nu-1)/(q-1) with s_n, beyond
/// that h (q^{n-g+1}-1)/(q-1).
CheckReport kapranovIdentityCheck(const StratumTable& strata, const LPolynomial& L, unsigned order);

/// The counting measure of the model lifted to F_{q^m}. Also certifies that
/// the lifted curve's own L-polynomial equals the one predicted from the
/// base curve (ConsistencyError otherwise).
Measure baseChangeMeasure(const HyperellipticModel& model, unsigned m, const Limits& limits = {});

}  // namespace bizeta
