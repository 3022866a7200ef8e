#include <optional>
#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace bizeta;
using bizeta::testing::model;

namespace {

Integer classNumberOf(const HyperellipticModel& m) {
    std::vector<Integer> a;
    for (int i = 1; i <= m.genus(); ++i) a.push_back(countPoints(m, static_cast<unsigned>(i)));
    return classNumber(lPolynomialFromCounts(a, Integer(static_cast<unsigned long>(m.field().order())), m.genus()));
}

LPolynomial lOf(const HyperellipticModel& m) {
    std::vector<Integer> a;
    for (int i = 1; i <= m.genus(); ++i) a.push_back(countPoints(m, static_cast<unsigned>(i)));
    return lPolynomialFromCounts(a, Integer(static_cast<unsigned long>(m.field().order())), m.genus());
}

// Affine point on y^2 = x^3 + a x + b (odd p); nullopt is the point at infinity.
using Pt = std::optional<std::pair<Fq, Fq>>;

Pt chordTangent(const FiniteField& E, Fq a, Pt P, Pt Q) {
    if (!P) return Q;
    if (!Q) return P;
    const auto [x1, y1] = *P;
    const auto [x2, y2] = *Q;
    Fq lambda;
    if (x1 == x2) {
        if (E.add(y1, y2) == E.zero()) return std::nullopt;
        lambda = E.div(E.add(E.mul(E.fromInt(3), E.mul(x1, x1)), a), E.mul(E.fromInt(2), y1));
    } else {
        lambda = E.div(E.sub(y2, y1), E.sub(x2, x1));
    }
    const Fq x3 = E.sub(E.sub(E.mul(lambda, lambda), x1), x2);
    const Fq y3 = E.sub(E.mul(lambda, E.sub(x1, x3)), y1);
    return std::make_pair(x3, y3);
}

}  // namespace

TEST_CASE("group law basics on y^2 = x^3 + x over F_3") {
    const auto M = model("p=3; f=x^3+x");
    const Jacobian J(M);
    const auto& F = M.field();
    const MumfordRep P{FqPoly::x(F), FqPoly(F)};
    REQUIRE(J.isReduced(P));
    CHECK(J.add(P, J.identity()) == P);
    CHECK(J.add(P, J.negate(P)) == J.identity());
    CHECK(J.add(P, P) == J.identity());  // (0,0) is 2-torsion
    CHECK(J.identity().toString() == "U=1;V=0");
    CHECK(P.toString() == "U=x;V=0");
}

TEST_CASE("places map into the Jacobian") {
    const auto M = model("p=3; f=x^3+x");
    const Jacobian J(M);
    const auto table = enumeratePlaces(M, 2);
    CHECK(J.fromPlace(table.byDegree[1][0]) == J.identity());
    bool sawX = false;
    for (const auto& P : table.byDegree[1]) {
        if (!P.isInfinite() && P.u == FqPoly::x(M.field())) {
            CHECK(J.fromPlace(P) == MumfordRep{P.u, P.v});
            sawX = true;
        }
    }
    CHECK(sawX);
}

TEST_CASE("degree-two places reduce like the sum of their conjugate points") {
    for (const std::string spec : {"p=3; f=x^3+x", "p=5; f=x^3+x+1", "p=5; f=x^3+2*x+1", "p=7; f=x^3+3*x+2"}) {
        CAPTURE(spec);
        const auto M = model(spec);
        const Jacobian J(M);
        const auto& F = M.field();
        const auto lifted = liftModel(M, 2);
        const auto& E = lifted.model.field();
        const Fq a = lifted.model.f()[1];
        const auto table = enumeratePlaces(M, 2);
        for (const auto& P : table.byDegree[2]) {
            if (P.isInert()) {
                CHECK(J.fromPlace(P) == J.identity());
                continue;
            }
            const MumfordRep R = J.fromPlace(P);
            CHECK(J.isReduced(R));
            CHECK(R.U.degree() <= 1);
            // The geometric points: roots x of u over F_{q^2}, y = v(x).
            const FqPoly u = mapCoefficients(P.u, lifted.embedding);
            const FqPoly v = mapCoefficients(P.v, lifted.embedding);
            std::vector<Pt> pts;
            for (std::uint32_t r = 0; r < E.order(); ++r) {
                if (u.eval(Fq{r}) == E.zero()) pts.push_back(std::make_pair(Fq{r}, v.eval(Fq{r})));
            }
            REQUIRE(pts.size() == 2);
            const Pt sum = chordTangent(E, a, pts[0], pts[1]);
            if (R.U.degree() == 0) {
                CHECK(!sum.has_value());
            } else {
                REQUIRE(sum.has_value());
                CHECK(sum->first == lifted.embedding(F.neg(R.U[0])));
                CHECK(sum->second == lifted.embedding(R.V[0]));
            }
        }
    }
}

TEST_CASE("effective divisor classes") {
    const auto M1 = model("p=3; f=x^3+x");
    const Jacobian J1(M1);
    const auto key0 = effectiveDivisorClass({}, J1);
    CHECK(key0.jac == J1.identity());
    CHECK(key0.degree == 0);
    const auto t1 = enumeratePlaces(M1, 1);
    const Place& P = t1.byDegree[1][1];
    const auto key1 = effectiveDivisorClass({{&P, 1}}, J1);
    CHECK(key1.degree == 1);
    CHECK(key1.jac == MumfordRep{P.u, P.v});

    const auto M2 = model("p=3; f=x^5+1");
    const Jacobian J2(M2);
    const auto t2 = enumeratePlaces(M2, 1);
    REQUIRE(t2.count(1) >= 3);
    const auto key2 = effectiveDivisorClass({{&t2.byDegree[1][1], 1}, {&t2.byDegree[1][2], 1}}, J2);
    CHECK(key2.degree == 2);
    CHECK(key2.jac.U.degree() <= 2);
    CHECK(J2.isReduced(key2.jac));
}

TEST_CASE("dual class keys") {
    const auto M1 = model("p=3; f=x^3+x");
    const Jacobian J1(M1);
    CHECK(dualClassKey({J1.identity(), 0}, J1) == DivisorClassKey{J1.identity(), 0});
    CHECK_THROWS_AS(dualClassKey({J1.identity(), 1}, J1), PreconditionError);

    const auto M2 = model("p=3; f=x^5+1");
    const Jacobian J2(M2);
    const auto t = enumeratePlaces(M2, 1);
    const auto canonical = effectiveDivisorClass({{&t.byDegree[1][0], 2}}, J2);
    CHECK(canonical.degree == 2);
    CHECK(dualClassKey(canonical, J2) == DivisorClassKey{J2.identity(), 0});
    const auto key = effectiveDivisorClass({{&t.byDegree[1][1], 1}}, J2);
    const auto dual = dualClassKey(key, J2);
    CHECK(dual.degree == 1);
    CHECK(dual.jac == J2.negate(key.jac));
    CHECK(dualClassKey(dual, J2) == key);
}

TEST_CASE("Jacobian enumeration") {
    CHECK(jacobianEnumerate(Jacobian(model("p=3; f=x^3+x")), 4) == 4);
    CHECK(jacobianEnumerate(Jacobian(model("p=5; f=x^3+x")), 4) == 4);
    CHECK_THROWS_AS(jacobianEnumerate(Jacobian(model("p=5; f=x^3+x")), 5), ConsistencyError);
    CHECK_THROWS_AS(jacobianElements(Jacobian(model("p=5; f=x^5+2*x+1")), Limits{100}), CapacityError);
}

TEST_CASE("group axioms and element orders on the corpus") {
    std::mt19937 rng(2024);
    auto curves = testing::ellipticCorpus();
    for (auto& c : testing::genusTwoCorpus()) curves.push_back(c);
    for (const auto& c : curves) {
        CAPTURE(c.spec);
        const Jacobian J(c.model);
        const auto elems = jacobianElements(J);
        const Integer h = classNumberOf(c.model);
        REQUIRE(Integer(static_cast<unsigned long>(elems.size())) == h);
        std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
        for (const auto& e : elems) {
            CHECK(J.isReduced(e));
            CHECK(J.multiply(e, h) == J.identity());
        }
        for (int trial = 0; trial < 30; ++trial) {
            const auto& a = elems[pick(rng)];
            const auto& b = elems[pick(rng)];
            const auto& d = elems[pick(rng)];
            CHECK(J.add(a, b) == J.add(b, a));
            CHECK(J.add(J.add(a, b), d) == J.add(a, J.add(b, d)));
            CHECK(J.add(a, J.identity()) == a);
            CHECK(J.add(a, J.negate(a)) == J.identity());
            CHECK(J.multiply(a, -3) == J.negate(J.add(a, J.add(a, a))));
            CHECK(std::binary_search(elems.begin(), elems.end(), J.add(a, b),
                                     [](const MumfordRep& x, const MumfordRep& y) { return x.compare(y) < 0; }));
        }
    }
}

TEST_CASE("stratum tables of the worked examples") {
    for (const char* spec : {"p=3; f=x^3+x", "p=5; f=x^3+x"}) {
        const auto M = model(spec);
        const Jacobian J(M);
        const auto t = strataTable(J, enumeratePlaces(M, 1), lOf(M));
        REQUIRE(t.b.size() == 1);
        CHECK(t.at(0, 1) == 1);
        CHECK(t.at(0, 0) == 3);
        CHECK(t.classNumber == 4);
    }
}

TEST_CASE("stratum tables: invariants, brute-force buckets, duality per class and Kapranov sums") {
    auto curves = testing::ellipticCorpus();
    for (auto& c : testing::genusTwoCorpus()) curves.push_back(c);
    for (const auto& c : curves) {
        CAPTURE(c.spec);
        const auto& M = c.model;
        const int g = M.genus();
        const Jacobian J(M);
        const auto places = enumeratePlaces(M, std::max(1, 2 * g - 2));
        const auto L = lOf(M);
        const auto classes = classifyEffectiveDivisors(J, places);
        const auto table = strataTable(classes, L.q, g, classNumber(L));
        CHECK(stratumTableViolation(table).empty());
        CHECK(table.at(2 * g - 2, g) == 1);

        for (int n = 0; n <= 2 * g - 2; ++n) {
            // Buckets agree with an independent enumeration of divisors as sorted tuples.
            const auto brute = testing::bruteDivisorBuckets(J, places, n);
            const auto& mine = classes.h0ByDegree[static_cast<std::size_t>(n)];
            CHECK(brute.size() == mine.size());
            for (const auto& [key, size] : brute) {
                Integer expect = 0, power = 1;
                for (int nu = 0; nu < classes.h0(key); ++nu, power *= L.q) expect += power;
                CHECK(expect == size);
            }
            // h0(K - D) = h0(D) - n + g - 1 for every class of degree n.
            for (const auto& e : jacobianElements(J)) {
                const DivisorClassKey key{e, n};
                CHECK(classes.h0(dualClassKey(key, J)) == classes.h0(key) - n + g - 1);
            }
            // sum_nu b[n][nu] (q^nu - 1)/(q - 1) counts all effective divisors of degree n.
            Integer total = 0;
            for (int nu = 0; nu <= g; ++nu) {
                Integer geo = 0, power = 1;
                for (int i = 0; i < nu; ++i, power *= L.q) geo += power;
                total += table.at(n, nu) * geo;
            }
            CHECK(total == effectiveDivisorCount(places, n));
        }
    }
}

TEST_CASE("stratum table violations are named") {
    StratumTable t{2, 3, 10, {{Integer(9), 1, 0}, {Integer(6), 4, 0}, {Integer(0), 9, 1}}};
    CHECK(stratumTableViolation(t).empty());
    auto bad = t;
    bad.b[1][1] = 5;
    CHECK(stratumTableViolation(bad).rfind("row sum", 0) == 0);
    bad = t;
    bad.b[0] = {Integer(8), 1, 1};
    CHECK(stratumTableViolation(bad).rfind("zero section", 0) == 0);
    bad = t;
    bad.b[2] = {Integer(1), 8, 1};
    CHECK(stratumTableViolation(bad).rfind("duality", 0) == 0);
    bad = t;
    bad.b[1] = {Integer(6), 3, 1};
    CHECK(!stratumTableViolation(bad).empty());
    bad = t;
    bad.b.pop_back();
    CHECK(stratumTableViolation(bad).rfind("shape", 0) == 0);
    CHECK_THROWS_AS(strataTable(ClassStrata{{{}}}, 3, 1, 4), StratificationError);
}
