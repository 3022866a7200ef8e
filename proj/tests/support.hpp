#pragma once
// Shared fixtures and brute-force oracles for the test binaries.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "bizeta/report.hpp"

namespace bizeta::testing {

inline HyperellipticModel model(const std::string& spec) { return buildModel(parseCurveSpec(spec)); }

struct CorpusCurve {
    std::string spec;
    HyperellipticModel model;
};

inline bool tryAdd(std::vector<CorpusCurve>& out, const std::string& spec) {
    try {
        out.push_back({spec, model(spec)});
        return true;
    } catch (const SingularCurveError&) {
        return false;
    }
}

/// Every nonsingular y^2 + h y = x^3 + a x + b over F_2 (h in {1, x, x+1}),
/// F_3 and F_5 (h = 0).
inline std::vector<CorpusCurve> ellipticCorpus() {
    std::vector<CorpusCurve> out;
    for (const char* h : {"1", "x", "x+1"}) {
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                tryAdd(out, "p=2; f=x^3+" + std::to_string(a) + "*x+" + std::to_string(b) + "; h=" + h);
            }
        }
    }
    for (int p : {3, 5}) {
        for (int a = 0; a < p; ++a) {
            for (int b = 0; b < p; ++b) {
                tryAdd(out, "p=" + std::to_string(p) + "; f=x^3+" + std::to_string(a) + "*x+" + std::to_string(b));
            }
        }
    }
    return out;
}

inline std::vector<CorpusCurve> genusTwoCorpus() {
    std::vector<CorpusCurve> out;
    for (const char* s : {"p=3; f=x^5+1", "p=3; f=x^5+x+1", "p=3; f=x^5+2*x^2+1", "p=5; f=x^5+2*x+1", "p=5; f=x^5+x^2+2",
                          "p=5; f=x^5+3*x^3+x+1", "p=2; f=x^5+1; h=1", "p=2; f=x^5+x^3+1; h=x"}) {
        tryAdd(out, s);
    }
    return out;
}

/// |X(F_{q^m})| by testing every pair (a, b) in F_{q^m}^2.
inline Integer bruteCountPoints(const HyperellipticModel& m, unsigned ext) {
    const LiftedModel lifted = liftModel(m, ext);
    const auto& E = lifted.model.field();
    Integer n = 1;
    for (std::uint32_t a = 0; a < E.order(); ++a) {
        const Fq fa = lifted.model.f().eval(Fq{a});
        const Fq ha = lifted.model.h().eval(Fq{a});
        for (std::uint32_t b = 0; b < E.order(); ++b) {
            if (E.add(E.mul(Fq{b}, Fq{b}), E.mul(ha, Fq{b})) == fa) n += 1;
        }
    }
    return n;
}

/// Searches F_{q^m}, m <= maxExt, for a point where both partials vanish.
inline bool bruteHasSingularPoint(const FiniteField& F, const FqPoly& f, const FqPoly& h, unsigned maxExt) {
    for (unsigned ext = 1; ext <= maxExt; ++ext) {
        const FiniteField E = FiniteField::make(F.characteristic(), F.degree() * ext, Limits{10'000'000});
        const FieldEmbedding emb(F, E);
        const FqPoly fe = mapCoefficients(f, emb), he = mapCoefficients(h, emb);
        const FqPoly df = fe.derivative(), dh = he.derivative();
        const Fq two = E.fromInt(2);
        for (std::uint32_t a = 0; a < E.order(); ++a) {
            const Fq x{a};
            const Fq fa = fe.eval(x), ha = he.eval(x), dfa = df.eval(x), dha = dh.eval(x);
            for (std::uint32_t b = 0; b < E.order(); ++b) {
                const Fq y{b};
                const bool onCurve = E.add(E.mul(y, y), E.mul(ha, y)) == fa;
                const bool dy = E.add(E.mul(two, y), ha) == E.zero();
                const bool dx = E.mul(dha, y) == dfa;
                if (onCurve && dx && dy) return true;
            }
        }
    }
    return false;
}

/// Effective divisors of degree n as sorted tuples of indices into a flat
/// place list, classified by their Jacobian class one divisor at a time.
inline std::map<DivisorClassKey, std::uint64_t> bruteDivisorBuckets(const Jacobian& jac, const PlaceTable& places, int n) {
    std::vector<const Place*> flat;
    for (int d = 1; d <= std::min(n, places.maxDegree); ++d) {
        for (const auto& p : places.byDegree[static_cast<std::size_t>(d)]) flat.push_back(&p);
    }
    std::map<DivisorClassKey, std::uint64_t> buckets;
    std::vector<std::size_t> chosen;
    auto rec = [&](auto&& self, std::size_t from, int remaining) -> void {
        if (remaining == 0) {
            std::vector<DivisorTerm> terms;
            for (auto i : chosen) terms.push_back({flat[i], 1});
            ++buckets[effectiveDivisorClass(terms, jac)];
            return;
        }
        for (std::size_t i = from; i < flat.size(); ++i) {
            if (flat[i]->degree > remaining) continue;
            chosen.push_back(i);
            self(self, i, remaining - flat[i]->degree);
            chosen.pop_back();
        }
    };
    rec(rec, 0, n);
    return buckets;
}

/// P(T,u) = (1-T)(1-uT) sum_{[D], deg D <= 2g} (1 + u + ... + u^{h0-1}) T^{deg D},
/// truncated at T^{2g}, with h0 read off from brute-force bucket sizes.
inline BiPoly bruteNumerator(const HyperellipticModel& m) {
    const int g = m.genus();
    const Jacobian jac(m);
    const PlaceTable places = enumeratePlaces(m, 2 * g);
    const Integer q(static_cast<unsigned long>(m.field().order()));
    std::vector<QPoly> z(static_cast<std::size_t>(2 * g + 1));
    for (int n = 0; n <= 2 * g; ++n) {
        for (const auto& [key, size] : bruteDivisorBuckets(jac, places, n)) {
            Integer acc = 0, power = 1;
            int nu = 0;
            while (acc < size) {
                acc += power;
                power *= q;
                ++nu;
            }
            if (acc != size) throw StratificationError("bucket size is not 1 + q + ... + q^{nu-1}");
            std::vector<Rational> ones(static_cast<std::size_t>(nu), Rational(1));
            z[static_cast<std::size_t>(n)] += QPoly(ones);
        }
    }
    const BiPoly product = BiPoly(z) * (BiPoly::constant(1) - BiPoly::T()) * (BiPoly::constant(1) - BiPoly::u() * BiPoly::T());
    std::vector<QPoly> rows;
    for (int i = 0; i <= 2 * g; ++i) rows.push_back(product.row(static_cast<std::size_t>(i)));
    return BiPoly(rows);
}

/// Counting measure straight from a model, for tests that need one.
inline Measure countingMeasureOf(const HyperellipticModel& m) { return baseChangeMeasure(m, 1); }

inline BiPoly powerOf(const BiPoly& b, unsigned e) {
    BiPoly r = BiPoly::constant(1);
    for (unsigned i = 0; i < e; ++i) r = r * b;
    return r;
}

/// f(T + s, u), done term by term.
inline BiPoly substituteT(const BiPoly& f, const BiPoly& s) {
    BiPoly out;
    for (int i = 0; i <= f.degreeT(); ++i) {
        const QPoly row = f.row(static_cast<std::size_t>(i));
        for (int j = 0; j <= row.degree(); ++j) {
            if (row[static_cast<std::size_t>(j)] == 0) continue;
            out += BiPoly::monomial(row[static_cast<std::size_t>(j)], 0, static_cast<unsigned>(j)) *
                   powerOf(BiPoly::T() + s, static_cast<unsigned>(i));
        }
    }
    return out;
}

struct Factor {
    BiPoly poly;
    int absolute;  // number of factors over the algebraic closure
};

/// A random irreducible factor of total degree <= budget whose absolute
/// factor count is known by construction.
inline Factor randomFactor(std::mt19937& rng, int budget) {
    const BiPoly T = BiPoly::T();
    const BiPoly U = BiPoly::u();
    auto c = [](long v) { return BiPoly::constant(v); };
    std::uniform_int_distribution<long> coef(-3, 3);
    std::uniform_int_distribution<int> kind(0, budget >= 2 ? 4 : 1);
    auto nonzero = [&] {
        long v = 0;
        while (v == 0) v = coef(rng);
        return v;
    };
    const BiPoly shift = c(coef(rng)) * U + c(coef(rng));
    switch (kind(rng)) {
        case 0:  // u - r: a root of the content
            return {U - c(coef(rng)), 1};
        case 1:  // T - a u - b
            return {T - shift, 1};
        case 2:  // T^2 - k u with k != 0: irreducible even over the closure
            return {substituteT(T * T - c(nonzero()) * U, shift), 1};
        case 3: {  // T^2 - k u^2 with k not a square: two conjugate lines
            const long ks[] = {2, 3, -1, 5, -2, 7};
            std::uniform_int_distribution<int> pick(0, 5);
            return {substituteT(T * T - c(ks[pick(rng)]) * U * U, shift), 2};
        }
        default:  // T^2 - k u - m, k != 0
            return {substituteT(T * T - c(nonzero()) * U - c(coef(rng)), shift), 1};
    }
}

struct RandomProduct {
    BiPoly P;
    int expected;
};

/// Squarefree products of random factors, total degree 2..6, with the
/// expected absolute factor count. Products whose content repeats a root are skipped.
inline std::vector<RandomProduct> randomProducts(unsigned seed, std::size_t count) {
    std::mt19937 rng(seed);
    std::vector<RandomProduct> out;
    while (out.size() < count) {
        int budget = 2 + static_cast<int>(rng() % 5);
        BiPoly P = BiPoly::constant(1);
        int expected = 0;
        while (budget > 0) {
            const Factor f = randomFactor(rng, budget);
            const int d = f.poly.totalDegree();
            if (d > budget || d <= 0) continue;
            P = P * f.poly;
            expected += f.absolute;
            budget -= d;
        }
        if (!squarefreeCheck(P)) continue;
        // A repeated linear factor in u alone leaves gcd(P, P_T) constant in T.
        const QPoly content = [&] {
            QPoly g;
            for (const auto& row : P.rows()) g = gcd(g, row);
            return g;
        }();
        if (!gcd(content, content.derivative()).isConstant()) continue;
        out.push_back({P, expected});
    }
    return out;
}

}  // namespace bizeta::testing
