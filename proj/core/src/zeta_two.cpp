#include "bizeta/zeta_two.hpp"

#include <algorithm>

namespace bizeta {

namespace {

std::string idx(int n, int nu) { return "v[" + std::to_string(n) + "][" + std::to_string(nu) + "]"; }

BiPoly uMinusOne() { return BiPoly::u() - BiPoly::constant(1); }

// (1 - T)(1 - uT)
BiPoly denominator() { return (BiPoly::constant(1) - BiPoly::T()) * (BiPoly::constant(1) - BiPoly::u() * BiPoly::T()); }

Measure measureOf(const HyperellipticModel& model, const Limits& limits) {
    const int g = model.genus();
    std::vector<Integer> counts;
    for (int i = 1; i <= g; ++i) counts.push_back(countPoints(model, static_cast<unsigned>(i), limits));
    const Integer q = model.field().order();
    const LPolynomial L = lPolynomialFromCounts(counts, q, g);
    const PlaceTable places = enumeratePlaces(model, std::max(1, 2 * g - 2), limits);
    const Jacobian jac(model);
    return countingMeasure(strataTable(jac, places, L));
}

}  // namespace

Rational Measure::at(int n, int nu) const {
    if (n < 0 || nu < 0 || static_cast<std::size_t>(n) >= values.size()) return 0;
    const auto& row = values[static_cast<std::size_t>(n)];
    return static_cast<std::size_t>(nu) < row.size() ? row[static_cast<std::size_t>(nu)] : Rational(0);
}

std::string measureViolation(const Measure& m) {
    const int g = m.genus;
    if (g < 0) return "shape: negative genus";
    const int rows = std::max(0, 2 * g - 1);
    if (static_cast<int>(m.values.size()) != rows) {
        return "shape: expected " + std::to_string(rows) + " rows, got " + std::to_string(m.values.size());
    }
    for (std::size_t n = 0; n < m.values.size(); ++n) {
        if (static_cast<int>(m.values[n].size()) != g + 1) {
            return "shape: row " + std::to_string(n) + " has " + std::to_string(m.values[n].size()) +
                   " entries, expected " + std::to_string(g + 1);
        }
    }
    if (g == 0) {
        if (m.pic0 != 1) return "zero section: genus 0 requires pic0 = 1, got " + m.pic0.get_str();
        return {};
    }
    if (m.at(0, 1) != 1) return "zero section: v[0][1] = " + m.at(0, 1).get_str() + ", expected 1";
    for (int nu = 2; nu <= g; ++nu) {
        if (m.at(0, nu) != 0) return "zero section: " + idx(0, nu) + " = " + m.at(0, nu).get_str() + ", expected 0";
    }
    for (int n = 0; n < rows; ++n) {
        Rational sum = 0;
        for (int nu = 0; nu <= g; ++nu) sum += m.at(n, nu);
        if (sum != m.pic0) {
            return "row sum: row " + std::to_string(n) + " sums to " + sum.get_str() + ", pic0 = " + m.pic0.get_str();
        }
    }
    for (int n = 0; n < rows; ++n) {
        for (int nu = 0; nu <= g; ++nu) {
            const int n2 = 2 * g - 2 - n;
            const int nu2 = nu - n + g - 1;
            const Rational partner = (nu2 >= 0 && nu2 <= g) ? m.at(n2, nu2) : Rational(0);
            if (m.at(n, nu) != partner) {
                return "duality: " + idx(n, nu) + " = " + m.at(n, nu).get_str() + " but " + idx(n2, nu2) + " = " +
                       partner.get_str();
            }
        }
    }
    for (int n = 0; n < rows; ++n) {
        for (int nu = 0; nu <= g; ++nu) {
            if (nu >= std::max(1, n - g + 2) && 2 * nu > n + 2 && m.at(n, nu) != 0) {
                return "Clifford: " + idx(n, nu) + " = " + m.at(n, nu).get_str() + ", expected 0";
            }
        }
    }
    return {};
}

Measure countingMeasure(const StratumTable& strata) {
    if (const auto v = stratumTableViolation(strata); !v.empty()) throw StratificationError(v);
    Measure m;
    m.genus = strata.genus;
    m.pic0 = Rational(strata.classNumber);
    m.lefschetz = Rational(strata.q);
    for (const auto& row : strata.b) {
        std::vector<Rational> r;
        for (const auto& x : row) r.emplace_back(x);
        m.values.push_back(std::move(r));
    }
    if (m.genus == 0) m.pic0 = 1;
    return m;
}

Measure tableMeasure(int genus, std::vector<std::vector<Rational>> values, const Rational& pic0) {
    Measure m;
    m.genus = genus;
    m.values = std::move(values);
    m.pic0 = pic0;
    if (const auto v = measureViolation(m); !v.empty()) throw InvalidMeasureError(v);
    return m;
}

BiPoly assembleG(const Measure& m) {
    const int rows = std::max(0, 2 * m.genus - 1);
    if (static_cast<int>(m.values.size()) != rows) throw InvalidMeasureError("shape: wrong number of rows");
    std::vector<std::vector<Rational>> mat;
    for (const auto& row : m.values) {
        if (static_cast<int>(row.size()) != m.genus + 1) throw InvalidMeasureError("shape: wrong row length");
        mat.push_back(row);
    }
    return BiPoly::fromMatrix(mat);
}

BiPoly assembleQ(const Measure& m) {
    const int g = m.genus;
    if (g < 1) throw PreconditionError("assembleQ needs genus >= 1");
    const BiPoly one = BiPoly::constant(1);
    const BiPoly T = BiPoly::T();
    const BiPoly uT = BiPoly::u() * T;
    const BiPoly lead = (one - T) * BiPoly::monomial(1, static_cast<unsigned>(2 * g - 1), static_cast<unsigned>(g));
    const BiPoly Q = (lead - (one - uT)) * m.pic0 + denominator() * assembleG(m);
    if (const QPoly atOne = Q.evalU(1); !atOne.isZero()) {
        throw InvalidMeasureError("row sum: Q(T,1) = " + atOne.toString('T') + " is not zero");
    }
    if (const QPoly atZero = Q.evalT(0); !(atZero == QPoly{-1, 1})) {
        throw InvalidMeasureError("zero section: Q(0,u) = " + atZero.toString('u') + ", expected u - 1");
    }
    return Q;
}

TwoVarZeta numeratorP(const Measure& m) {
    if (const auto v = measureViolation(m); !v.empty()) throw InvalidMeasureError(v);
    TwoVarZeta z;
    z.genus = m.genus;
    if (m.genus == 0) {
        z.P = BiPoly::constant(1);
    } else {
        const BiPoly Q = assembleQ(m);
        try {
            z.P = bivariateExactDivide(Q, uMinusOne());
        } catch (const NotDivisibleError& e) {
            throw InvalidMeasureError(std::string("Q not divisible by u - 1: ") + e.what());
        }
    }
    const CheckReport report = verifyTheorem2(z, m);
    for (const auto& c : report.checks) {
        if (!c.passed) throw TheoremViolationError(c.name + ": " + c.detail);
    }
    return z;
}

QPoly specializeU(const TwoVarZeta& z, const Rational& value) { return z.P.evalU(value); }

bool CheckReport::allPassed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void CheckReport::add(std::string name, bool passed, std::string detail) {
    checks.push_back({std::move(name), passed, std::move(detail)});
}

CheckReport verifyTheorem2(const TwoVarZeta& z, const Measure& m) {
    CheckReport r;
    const int g = z.genus;
    const BiPoly& P = z.P;
    const QPoly uToG = QPoly::monomial(1, static_cast<unsigned>(g));

    r.add("P0 = 1", P.row(0) == QPoly{1}, "P0 = " + P.row(0).toString('u'));
    r.add("P2g = u^g", P.row(static_cast<std::size_t>(2 * g)) == uToG,
          "P" + std::to_string(2 * g) + " = " + P.row(static_cast<std::size_t>(2 * g)).toString('u'));
    r.add("T-degree = 2g", P.degreeT() == 2 * g, "deg_T P = " + std::to_string(P.degreeT()));

    std::string degDetail;
    for (int i = 0; i <= P.degreeT(); ++i) {
        if (2 * P.row(static_cast<std::size_t>(i)).degree() > 2 + i && degDetail.empty()) {
            degDetail = "deg P" + std::to_string(i) + " = " + std::to_string(P.row(static_cast<std::size_t>(i)).degree());
        }
    }
    r.add("deg P_i <= 1 + i/2", degDetail.empty(), degDetail);

    std::string feDetail;
    for (int i = 0; i <= g && feDetail.empty(); ++i) {
        const QPoly lhs = P.row(static_cast<std::size_t>(2 * g - i));
        const QPoly rhs = P.row(static_cast<std::size_t>(i)) * QPoly::monomial(1, static_cast<unsigned>(g - i));
        if (!(lhs == rhs)) feDetail = "P" + std::to_string(2 * g - i) + " != u^" + std::to_string(g - i) + " P" + std::to_string(i);
    }
    r.add("P_{2g-i} = u^{g-i} P_i", feDetail.empty(), feDetail);

    const QPoly atOne = P.evalT(1);
    r.add("P(1,u) = pic0", atOne == QPoly::constant(m.pic0),
          "P(1,u) = " + atOne.toString('u') + ", pic0 = " + m.pic0.get_str());

    // u^g T^{2g} P(1/(Tu), u) == P(T, u), scaled by u^g so every exponent is non-negative.
    bool seriesOk = P.degreeT() <= 2 * g;
    if (seriesOk) {
        std::vector<std::vector<Rational>> mat(static_cast<std::size_t>(2 * g + 1));
        for (int i = 0; i <= P.degreeT(); ++i) {
            const QPoly rowPoly = P.row(static_cast<std::size_t>(i));
            const auto& row = rowPoly.coeffs();
            for (std::size_t j = 0; j < row.size(); ++j) {
                auto& target = mat[static_cast<std::size_t>(2 * g - i)];
                const std::size_t uExp = j + static_cast<std::size_t>(2 * g - i);
                if (target.size() <= uExp) target.resize(uExp + 1);
                target[uExp] += row[j];
            }
        }
        seriesOk = BiPoly::fromMatrix(mat) == P * BiPoly::monomial(1, 0, static_cast<unsigned>(g));
    }
    r.add("u^{g-1} T^{2g-2} Z(1/(Tu),u) = Z(T,u)", seriesOk);

    if (g >= 1) {
        const BiPoly Q = assembleQ(m);
        r.add("(u-1) P = Q", uMinusOne() * P == Q);
        r.add("Q(0,u) = u-1", Q.evalT(0) == QPoly{-1, 1});
    }
    return r;
}

CheckReport kapranovIdentityCheck(const StratumTable& strata, const LPolynomial& L, unsigned order) {
    CheckReport r;
    const std::vector<Integer> s = symmetricProductCounts(L, order);
    const Integer& q = L.q;
    const int g = strata.genus;
    const Integer h = classNumber(L);
    auto geometric = [&](long nu) {
        if (nu <= 0) return Integer(0);
        Integer acc = 0, power = 1;
        for (long i = 0; i < nu; ++i, power *= q) acc += power;
        return acc;
    };
    for (unsigned n = 0; n <= order; ++n) {
        Integer lhs = 0;
        if (static_cast<int>(n) <= 2 * g - 2) {
            for (int nu = 0; nu <= g; ++nu) lhs += strata.at(static_cast<int>(n), nu) * geometric(nu);
        } else {
            lhs = h * geometric(static_cast<long>(n) - g + 1);
        }
        r.add("Kapranov n=" + std::to_string(n), lhs == s[n], lhs.get_str() + " vs s_n = " + s[n].get_str());
    }
    return r;
}

Measure baseChangeMeasure(const HyperellipticModel& model, unsigned m, const Limits& limits) {
    if (m < 1) throw PreconditionError("base-change exponent must be >= 1");
    if (m == 1) return measureOf(model, limits);
    const int g = model.genus();
    std::vector<Integer> base;
    for (int i = 1; i <= g; ++i) base.push_back(countPoints(model, static_cast<unsigned>(i), limits));
    const LPolynomial predicted = baseChangeL(lPolynomialFromCounts(base, model.field().order(), g), m);

    const LiftedModel lifted = liftModel(model, m, limits);
    std::vector<Integer> counts;
    for (int i = 1; i <= g; ++i) counts.push_back(countPoints(lifted.model, static_cast<unsigned>(i), limits));
    const LPolynomial direct = lPolynomialFromCounts(counts, lifted.model.field().order(), g);
    if (direct.coeffs != predicted.coeffs) {
        throw ConsistencyError("L-polynomial over F_{q^" + std::to_string(m) + "} differs from the base-change prediction");
    }
    return measureOf(lifted.model, limits);
}

}  // namespace bizeta
