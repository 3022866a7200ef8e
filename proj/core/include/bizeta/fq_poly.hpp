#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "bizeta/finite_field.hpp"

namespace bizeta {

/// Dense univariate polynomial over a FiniteField. Coefficients low to high,
/// never carrying trailing zeros; the zero polynomial has no coefficients.
class FqPoly {
  public:
    explicit FqPoly(FiniteField field) : field_(std::move(field)) {}
    FqPoly(FiniteField field, std::vector<Fq> coeffs);
    /// Integer coefficients reduced into the prime subfield.
    static FqPoly fromInts(const FiniteField& field, std::initializer_list<std::int64_t> coeffs);
    static FqPoly constant(const FiniteField& field, Fq c);
    static FqPoly x(const FiniteField& field);
    /// The monic polynomial whose coefficient of x^i (i < d) is digit i of
    /// `index` in base q; enumerates monic degree-d polynomials in lex order.
    static FqPoly monicFromIndex(const FiniteField& field, unsigned d, std::uint64_t index);

    const FiniteField& field() const { return field_; }
    const std::vector<Fq>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool isZero() const { return c_.empty(); }
    bool isOne() const { return c_.size() == 1 && c_[0] == field_.one(); }
    Fq operator[](std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
    Fq leading() const { return c_.empty() ? field_.zero() : c_.back(); }

    FqPoly& operator+=(const FqPoly& o);
    FqPoly& operator-=(const FqPoly& o);
    FqPoly& operator*=(const FqPoly& o);
    FqPoly operator-() const;
    FqPoly scaled(Fq s) const;
    FqPoly monic() const;
    FqPoly derivative() const;
    Fq eval(Fq a) const;

    /// Quotient and remainder; throws DivisionByZeroError for a zero divisor.
    std::pair<FqPoly, FqPoly> divmod(const FqPoly& d) const;

    /// Lexicographic order: degree first, then coefficients from the top down.
    int compare(const FqPoly& o) const;
    bool operator==(const FqPoly& o) const { return c_ == o.c_; }

    /// e.g. `x^2+(a+1)*x+2`, with `a` the class of the field generator.
    std::string toString(char var = 'x') const;

  private:
    void trim();
    FiniteField field_;
    std::vector<Fq> c_;
};

FqPoly operator+(FqPoly a, const FqPoly& b);
FqPoly operator-(FqPoly a, const FqPoly& b);
FqPoly operator*(FqPoly a, const FqPoly& b);
FqPoly operator/(const FqPoly& a, const FqPoly& b);
FqPoly operator%(const FqPoly& a, const FqPoly& b);

/// Monic gcd (zero when both inputs are zero).
FqPoly gcd(FqPoly a, FqPoly b);

struct FqXgcd {
    FqPoly g, s, t;  // g = s*a + t*b, g monic
};
FqXgcd xgcd(const FqPoly& a, const FqPoly& b);

/// base^e mod m.
FqPoly powMod(const FqPoly& base, std::uint64_t e, const FqPoly& m);

/// Image of a polynomial under a field embedding.
FqPoly mapCoefficients(const FqPoly& f, const FieldEmbedding& emb);

/// Monic irreducibility over the coefficient field (Rabin-style test against x^{q^j} - x).
bool isIrreducible(const FqPoly& f);

/// All monic irreducible degree-d polynomials, in lex order.
/// Throws CapacityError when q^d exceeds the bound.
std::vector<FqPoly> listMonicIrreducibles(const FiniteField& field, unsigned d, const Limits& limits = {});

}  // namespace bizeta
