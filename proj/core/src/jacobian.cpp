#include "bizeta/jacobian.hpp"

#include <algorithm>

namespace bizeta {

int MumfordRep::compare(const MumfordRep& o) const {
    const int c = U.compare(o.U);
    return c != 0 ? c : V.compare(o.V);
}

std::string MumfordRep::toString() const { return "U=" + U.toString() + ";V=" + V.toString(); }

Jacobian::Jacobian(HyperellipticModel model) : model_(std::move(model)) {}

MumfordRep Jacobian::identity() const {
    const auto& F = model_.field();
    return {FqPoly::constant(F, F.one()), FqPoly(F)};
}

MumfordRep Jacobian::compose(const MumfordRep& a, const MumfordRep& b) const {
    const FqPoly& f = model_.f();
    const FqPoly& h = model_.h();
    const FqXgcd first = xgcd(a.U, b.U);
    const FqXgcd second = xgcd(first.g, a.V + b.V + h);
    const FqPoly& d = second.g;
    const FqPoly s1 = second.s * first.s;
    const FqPoly s2 = second.s * first.t;
    const FqPoly& s3 = second.t;
    const FqPoly U = (a.U * b.U) / (d * d);
    const FqPoly V = ((s1 * a.U * b.V + s2 * b.U * a.V + s3 * (a.V * b.V + f)) / d) % U;
    return {U, V};
}

MumfordRep Jacobian::reduce(FqPoly U, FqPoly V) const {
    const FqPoly& f = model_.f();
    const FqPoly& h = model_.h();
    while (U.degree() > model_.genus()) {
        FqPoly Un = (f - V * h - V * V) / U;
        FqPoly Vn = (-h - V) % Un;
        U = std::move(Un);
        V = std::move(Vn);
    }
    U = U.monic();
    V = V % U;
    return {std::move(U), std::move(V)};
}

MumfordRep Jacobian::add(const MumfordRep& a, const MumfordRep& b) const {
    MumfordRep c = compose(a, b);
    return reduce(std::move(c.U), std::move(c.V));
}

MumfordRep Jacobian::negate(const MumfordRep& a) const { return {a.U, (-model_.h() - a.V) % a.U}; }

MumfordRep Jacobian::multiply(const MumfordRep& a, Integer n) const {
    MumfordRep base = n < 0 ? negate(a) : a;
    if (n < 0) n = -n;
    MumfordRep acc = identity();
    while (n > 0) {
        if (mpz_odd_p(n.get_mpz_t())) acc = add(acc, base);
        n >>= 1;
        if (n > 0) base = add(base, base);
    }
    return acc;
}

bool Jacobian::isReduced(const MumfordRep& a) const {
    if (a.U.isZero() || a.U.leading() != model_.field().one()) return false;
    if (a.U.degree() > model_.genus() || a.V.degree() >= a.U.degree()) return false;
    return ((a.V * a.V + model_.h() * a.V - model_.f()) % a.U).isZero();
}

MumfordRep Jacobian::fromPlace(const Place& place) const {
    // An inert place is the divisor of u(x) plus deg * infinity, hence principal.
    if (place.isInfinite() || place.isInert()) return identity();
    return reduce(place.u, place.v);
}

DivisorClassKey effectiveDivisorClass(const std::vector<DivisorTerm>& divisor, const Jacobian& jac) {
    DivisorClassKey key{jac.identity(), 0};
    for (const auto& term : divisor) {
        const MumfordRep p = jac.fromPlace(*term.place);
        for (int i = 0; i < term.multiplicity; ++i) key.jac = jac.add(key.jac, p);
        key.degree += term.multiplicity * term.place->degree;
    }
    return key;
}

DivisorClassKey dualClassKey(const DivisorClassKey& key, const Jacobian& jac) {
    const int top = 2 * jac.genus() - 2;
    if (key.degree < 0 || key.degree > top) {
        throw PreconditionError("degree " + std::to_string(key.degree) + " outside [0, " + std::to_string(top) + "]");
    }
    return {jac.negate(key.jac), top - key.degree};
}

std::vector<MumfordRep> jacobianElements(const Jacobian& jac, const Limits& limits) {
    const auto& model = jac.model();
    const auto& F = model.field();
    const std::uint64_t q = F.order();
    std::uint64_t work = 0;
    for (int r = 0; r <= jac.genus(); ++r) work += saturatingPow(q, static_cast<unsigned>(2 * r));
    requireCapacity(limits, work, "Jacobian scan");

    std::vector<MumfordRep> out;
    for (int r = 0; r <= jac.genus(); ++r) {
        const std::uint64_t n = saturatingPow(q, static_cast<unsigned>(r));
        for (std::uint64_t ui = 0; ui < n; ++ui) {
            const FqPoly U = FqPoly::monicFromIndex(F, static_cast<unsigned>(r), ui);
            const FqPoly target = (model.f() % U);
            const FqPoly hm = model.h() % U;
            for (std::uint64_t vi = 0; vi < n; ++vi) {
                std::vector<Fq> digits(static_cast<std::size_t>(r));
                std::uint64_t rest = vi;
                for (auto& dgt : digits) {
                    dgt = Fq{static_cast<std::uint32_t>(rest % q)};
                    rest /= q;
                }
                FqPoly V(F, std::move(digits));
                if (((V * V + hm * V) % U - target).isZero()) out.push_back({U, std::move(V)});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const MumfordRep& a, const MumfordRep& b) { return a.compare(b) < 0; });
    return out;
}

Integer jacobianEnumerate(const Jacobian& jac, const Integer& expected, const Limits& limits) {
    const Integer n(static_cast<unsigned long>(jacobianElements(jac, limits).size()));
    if (n != expected) {
        throw ConsistencyError("Jacobian scan found " + n.get_str() + " elements, L(1) = " + expected.get_str());
    }
    return n;
}

}  // namespace bizeta
