#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bizeta/curve.hpp"

namespace bizeta {

/// Reduced divisor class (U, V): U monic, deg V < deg U <= g, U | V^2 + hV - f.
struct MumfordRep {
    FqPoly U;
    FqPoly V;

    bool operator==(const MumfordRep& o) const { return U == o.U && V == o.V; }
    int compare(const MumfordRep& o) const;
    /// `U=<poly>;V=<poly>`.
    std::string toString() const;
};

/// Group law on Pic^0 of an odd-degree hyperelliptic model (Cantor's algorithm).
class Jacobian {
  public:
    explicit Jacobian(HyperellipticModel model);

    const HyperellipticModel& model() const { return model_; }
    int genus() const { return model_.genus(); }

    MumfordRep identity() const;
    MumfordRep add(const MumfordRep& a, const MumfordRep& b) const;
    MumfordRep negate(const MumfordRep& a) const;
    MumfordRep multiply(const MumfordRep& a, Integer n) const;

    /// True when (U, V) is a valid reduced representative for this model.
    bool isReduced(const MumfordRep& a) const;

    /// Reduction of a semi-reduced pair until deg U <= g.
    MumfordRep reduce(FqPoly U, FqPoly V) const;

    /// [P - deg(P) * infinity]; the infinite and inert places map to the identity.
    MumfordRep fromPlace(const Place& place) const;

  private:
    MumfordRep compose(const MumfordRep& a, const MumfordRep& b) const;
    HyperellipticModel model_;
};

/// The class of an effective divisor D of degree n, written as jac + n * infinity.
struct DivisorClassKey {
    MumfordRep jac;
    int degree = 0;

    bool operator==(const DivisorClassKey& o) const { return degree == o.degree && jac == o.jac; }
    bool operator<(const DivisorClassKey& o) const {
        if (degree != o.degree) return degree < o.degree;
        return jac.compare(o.jac) < 0;
    }
};

struct DivisorTerm {
    const Place* place;
    int multiplicity;
};

/// Sums multiplicity * [P - deg P * infinity] by iterated group additions.
DivisorClassKey effectiveDivisorClass(const std::vector<DivisorTerm>& divisor, const Jacobian& jac);

/// [omega] - key, where omega = (2g-2) * infinity. Throws PreconditionError
/// when the degree is outside [0, 2g-2].
DivisorClassKey dualClassKey(const DivisorClassKey& key, const Jacobian& jac);

/// Every reduced (U, V), in lex order of (U, V). Throws CapacityError when
/// the scan size q^{2g}-ish exceeds the bound.
std::vector<MumfordRep> jacobianElements(const Jacobian& jac, const Limits& limits = {});

/// |Jacobian(F_q)| by scanning; throws ConsistencyError when it disagrees
/// with `expected` (normally L(1)).
Integer jacobianEnumerate(const Jacobian& jac, const Integer& expected, const Limits& limits = {});

}  // namespace bizeta
