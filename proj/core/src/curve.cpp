#include "bizeta/curve.hpp"

#include <algorithm>

namespace bizeta {

namespace {

std::string pointText(const FiniteField& F, Fq a, Fq b) { return "(" + F.format(a) + ", " + F.format(b) + ")"; }

// Rational root of c, when one exists.
bool findRoot(const FqPoly& c, Fq& root) {
    const auto& F = c.field();
    for (std::uint32_t r = 0; r < F.order(); ++r) {
        if (c.eval(Fq{r}).rep == 0) {
            root = Fq{r};
            return true;
        }
    }
    return false;
}

}  // namespace

HyperellipticModel validateModel(const FiniteField& field, const FqPoly& f, const FqPoly& h) {
    const int df = f.degree();
    if (df < 3 || df % 2 == 0) {
        throw ModelShapeError("f must have odd degree >= 3, got degree " + std::to_string(df));
    }
    if (f.leading() != field.one()) throw ModelShapeError("f must be monic");
    const int g = (df - 1) / 2;
    if (h.degree() > g) {
        throw ModelShapeError("deg h = " + std::to_string(h.degree()) + " exceeds the genus " + std::to_string(g));
    }

    if (field.characteristic() != 2) {
        // (y + h/2)^2 = f + h^2/4
        const Fq quarter = field.inv(field.fromInt(4));
        const FqPoly F = f + (h * h).scaled(quarter);
        const FqPoly c = gcd(F, F.derivative());
        if (c.degree() > 0) {
            Fq a;
            if (findRoot(c, a)) {
                const Fq b = field.mul(field.neg(h.eval(a)), field.inv(field.fromInt(2)));
                throw SingularCurveError("singular point " + pointText(field, a, b));
            }
            throw SingularCurveError("singular over an extension: gcd(F, F') = " + c.toString() +
                                     " with F = f + h^2/4");
        }
    } else {
        // A singular point needs h(a) = 0 and h'(a)^2 f(a) = f'(a)^2.
        const FqPoly hd = h.derivative();
        const FqPoly fd = f.derivative();
        const FqPoly c = gcd(h, hd * hd * f - fd * fd);
        if (c.degree() > 0) {
            Fq a, b;
            if (findRoot(c, a) && field.sqrt(f.eval(a), b)) {
                throw SingularCurveError("singular point " + pointText(field, a, b));
            }
            throw SingularCurveError("singular over an extension: gcd(h, h'^2 f - f'^2) = " + c.toString());
        }
    }
    return HyperellipticModel(f, h, g);
}

HyperellipticModel HyperellipticModel::lifted(const FieldEmbedding& emb) const {
    return validateModel(emb.target(), mapCoefficients(f_, emb), mapCoefficients(h_, emb));
}

std::string HyperellipticModel::describe() const {
    std::string s = "y^2";
    if (!h_.isZero()) {
        const std::string hs = h_.toString();
        s += h_.isOne() ? "+y" : (h_.degree() == 0 && hs.find('+') == std::string::npos ? "+" + hs + "*y" : "+(" + hs + ")*y");
    }
    return s + " = " + f_.toString() + " over F_" + std::to_string(field().order());
}

LiftedModel liftModel(const HyperellipticModel& model, unsigned m, const Limits& limits) {
    const auto& F = model.field();
    FiniteField E = FiniteField::make(F.characteristic(), F.degree() * m, limits);
    FieldEmbedding emb(F, E);
    HyperellipticModel lifted = model.lifted(emb);
    return {std::move(emb), std::move(lifted)};
}

Integer countPoints(const HyperellipticModel& model, unsigned m, const Limits& limits) {
    if (m == 0) throw PreconditionError("extension degree must be positive");
    const auto& F = model.field();
    requireCapacity(limits, saturatingPow(F.order(), m), "point count over F_q^" + std::to_string(m));
    const FiniteField E = FiniteField::make(F.characteristic(), F.degree() * m, limits);
    const FieldEmbedding emb(F, E);
    const FqPoly f = mapCoefficients(model.f(), emb);
    const FqPoly h = mapCoefficients(model.h(), emb);
    const bool even = E.characteristic() == 2;
    const Fq four = E.fromInt(4);

    std::uint64_t affine = 0;
    for (std::uint32_t r = 0; r < E.order(); ++r) {
        const Fq a{r};
        const Fq fa = f.eval(a);
        const Fq ha = h.eval(a);
        if (!even) {
            const Fq disc = E.add(E.mul(ha, ha), E.mul(four, fa));
            if (disc.rep == 0) {
                affine += 1;
            } else if (E.isSquare(disc)) {
                affine += 2;
            }
        } else if (ha.rep == 0) {
            affine += 1;
        } else {
            // b = h z with z^2 + z = f / h^2, solvable iff the trace vanishes
            const Fq c = E.div(fa, E.mul(ha, ha));
            if (E.trace(c) == 0) affine += 2;
        }
    }
    return Integer(static_cast<unsigned long>(affine)) + 1;
}

namespace {

// All b with b^2 + hb = c, for fixed hb, c in E.
class QuadraticSolver {
  public:
    explicit QuadraticSolver(const FiniteField& E) : E_(E) {
        if (E.characteristic() == 2) {
            artinSchreier_.assign(E.order(), -1);
            for (std::uint32_t z = E.order(); z-- > 0;) {
                const Fq zz{z};
                artinSchreier_[E.add(E.mul(zz, zz), zz).rep] = z;
            }
        }
    }

    std::vector<Fq> solve(Fq hb, Fq c) const {
        if (E_.characteristic() != 2) {
            const Fq disc = E_.add(E_.mul(hb, hb), E_.mul(E_.fromInt(4), c));
            Fq r;
            if (!E_.sqrt(disc, r)) return {};
            const Fq half = E_.inv(E_.fromInt(2));
            const Fq b1 = E_.mul(E_.sub(r, hb), half);
            if (r.rep == 0) return {b1};
            const Fq b2 = E_.mul(E_.sub(E_.neg(r), hb), half);
            return {b1, b2};
        }
        if (hb.rep == 0) {
            Fq r;
            E_.sqrt(c, r);
            return {r};
        }
        const Fq target = E_.div(c, E_.mul(hb, hb));
        const std::int64_t z = artinSchreier_[target.rep];
        if (z < 0) return {};
        const Fq z1{static_cast<std::uint32_t>(z)};
        const Fq z2 = E_.add(z1, E_.one());
        return {E_.mul(hb, z1), E_.mul(hb, z2)};
    }

  private:
    FiniteField E_;
    std::vector<std::int64_t> artinSchreier_;
};

FqPoly pullBack(const FqPoly& p, const FieldEmbedding& emb, const FiniteField& base) {
    std::vector<Fq> c;
    c.reserve(p.coeffs().size());
    for (auto a : p.coeffs()) {
        Fq pre;
        if (!emb.preimage(a, pre)) throw ConsistencyError("Frobenius-stable polynomial has a coefficient outside F_q");
        c.push_back(pre);
    }
    return FqPoly(base, std::move(c));
}

}  // namespace

PlaceTable enumeratePlaces(const HyperellipticModel& model, int maxDegree, const Limits& limits) {
    if (maxDegree < 1) throw PreconditionError("place table depth must be at least 1");
    const auto& F = model.field();
    const std::uint64_t q = F.order();
    requireCapacity(limits, saturatingPow(q, static_cast<unsigned>(maxDegree)),
                    "place enumeration to degree " + std::to_string(maxDegree));

    PlaceTable table;
    table.maxDegree = maxDegree;
    table.byDegree.resize(static_cast<std::size_t>(maxDegree) + 1);
    table.byDegree[1].push_back(Place{Place::Kind::infinite, FqPoly(F), FqPoly(F), 1});

    for (int d = 1; d <= maxDegree; ++d) {
        const FiniteField E = FiniteField::make(F.characteristic(), F.degree() * static_cast<unsigned>(d), limits);
        const FieldEmbedding emb(F, E);
        const FqPoly f = mapCoefficients(model.f(), emb);
        const FqPoly h = mapCoefficients(model.h(), emb);
        const QuadraticSolver solver(E);
        const FqPoly x = FqPoly::x(E);

        std::vector<Place> found;
        std::vector<Fq> orbit;
        for (std::uint32_t r = 0; r < E.order(); ++r) {
            const Fq alpha{r};
            // Frobenius orbit of alpha over F_q, kept only from its smallest member.
            orbit.assign(1, alpha);
            bool minimal = true;
            for (Fq next = E.pow(alpha, q); next != alpha && minimal; next = E.pow(next, q)) {
                minimal = next.rep > r;
                orbit.push_back(next);
            }
            const int e = static_cast<int>(orbit.size());
            if (!minimal || (e != d && 2 * e != d)) continue;

            FqPoly uE = FqPoly::constant(E, E.one());
            for (auto a : orbit) uE *= x - FqPoly::constant(E, a);
            const FqPoly u = pullBack(uE, emb, F);
            const auto roots = solver.solve(h.eval(alpha), f.eval(alpha));

            if (2 * e == d) {
                // The fibre over a degree-e point is one place of degree 2e when y is not defined over F_{q^e}.
                if (!roots.empty() && E.pow(roots.front(), saturatingPow(q, static_cast<unsigned>(e))) != roots.front()) {
                    found.push_back(Place{Place::Kind::inert, u, FqPoly(F), d});
                }
                continue;
            }

            for (Fq b : roots) {
                // v(x) interpolates the conjugates (alpha^{q^i}, b^{q^i}).
                FqPoly vE(E);
                Fq bi = b;
                for (int i = 0; i < d; ++i) {
                    FqPoly basis = FqPoly::constant(E, E.one());
                    Fq denom = E.one();
                    for (int j = 0; j < d; ++j) {
                        if (j == i) continue;
                        basis *= x - FqPoly::constant(E, orbit[static_cast<std::size_t>(j)]);
                        denom = E.mul(denom, E.sub(orbit[static_cast<std::size_t>(i)], orbit[static_cast<std::size_t>(j)]));
                    }
                    vE += basis.scaled(E.div(bi, denom));
                    bi = E.pow(bi, q);
                }
                found.push_back(Place{Place::Kind::affine, u, pullBack(vE, emb, F), d});
            }
        }
        std::sort(found.begin(), found.end(), [](const Place& a, const Place& b) {
            const int c = a.u.compare(b.u);
            return c != 0 ? c < 0 : a.v.compare(b.v) < 0;
        });
        auto& slot = table.byDegree[static_cast<std::size_t>(d)];
        slot.insert(slot.end(), std::make_move_iterator(found.begin()), std::make_move_iterator(found.end()));
    }
    return table;
}

}  // namespace bizeta
