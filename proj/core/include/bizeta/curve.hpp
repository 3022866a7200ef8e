#pragma once

#include <string>
#include <vector>

#include "bizeta/fq_poly.hpp"
#include "bizeta/rational_poly.hpp"

namespace bizeta {

/// y^2 + h(x) y = f(x) over F_q with f monic of odd degree 2g+1 and
/// deg h <= g. The single point at infinity is rational, so the curve has a
/// degree-one divisor.
class HyperellipticModel {
  public:
    const FiniteField& field() const { return f_.field(); }
    const FqPoly& f() const { return f_; }
    const FqPoly& h() const { return h_; }
    int genus() const { return genus_; }

    /// The same curve over F_{q^m}, with coefficients pushed through `emb`.
    HyperellipticModel lifted(const FieldEmbedding& emb) const;

    std::string describe() const;

  private:
    friend HyperellipticModel validateModel(const FiniteField&, const FqPoly&, const FqPoly&);
    HyperellipticModel(FqPoly f, FqPoly h, int genus) : f_(std::move(f)), h_(std::move(h)), genus_(genus) {}
    FqPoly f_;
    FqPoly h_;
    int genus_;
};

/// Checks shape (ModelShapeError) and smoothness (SingularCurveError, with a
/// witness point when one is rational, otherwise the gcd certificate).
HyperellipticModel validateModel(const FiniteField& field, const FqPoly& f, const FqPoly& h);

/// |X(F_{q^m})| for the smooth projective model: the point at infinity plus
/// all affine solutions.
Integer countPoints(const HyperellipticModel& model, unsigned m, const Limits& limits = {});

/// The model over F_{q^m} = F_{p^{km}} together with the embedding used.
struct LiftedModel {
    FieldEmbedding embedding;
    HyperellipticModel model;
};
LiftedModel liftModel(const HyperellipticModel& model, unsigned m, const Limits& limits = {});

/// A closed point. Affine places carry the Mumford-style pair (u, v) with u
/// monic irreducible, deg u = degree, deg v < deg u and v^2 + h v == f (mod u).
/// An inert place is a whole x-fibre: u is irreducible of degree degree/2,
/// y is not defined over the residue field of u, and v is zero.
struct Place {
    enum class Kind { affine, inert, infinite };
    Kind kind;
    FqPoly u;
    FqPoly v;
    int degree;

    bool isInfinite() const { return kind == Kind::infinite; }
    bool isInert() const { return kind == Kind::inert; }
};

struct PlaceTable {
    int maxDegree = 0;
    /// byDegree[d] lists the places of degree d (index 0 unused). The
    /// infinite place comes first in byDegree[1]; affine places follow in
    /// (u, v) lex order.
    std::vector<std::vector<Place>> byDegree;

    std::size_t count(int d) const { return byDegree.at(static_cast<std::size_t>(d)).size(); }
};

PlaceTable enumeratePlaces(const HyperellipticModel& model, int maxDegree, const Limits& limits = {});

}  // namespace bizeta
