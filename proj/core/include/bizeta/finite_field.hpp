#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "bizeta/error.hpp"

namespace bizeta {

/// An element of some F_{p^k}, encoded as sum c_i p^i where c_i is the
/// coefficient of x^i in the residue class modulo the field's modulus.
/// Only meaningful together with the FiniteField it came from.
struct Fq {
    std::uint32_t rep = 0;
    friend constexpr auto operator<=>(Fq, Fq) = default;
};

bool isPrime(std::uint64_t n);

/// The field F_p[x]/(modulus) with modulus the lexicographically smallest
/// monic irreducible of degree k. Cheap to copy (shared, immutable tables).
class FiniteField {
  public:
    /// Throws NotPrimeError, PreconditionError (k == 0) or CapacityError.
    static FiniteField make(std::uint64_t p, unsigned k, const Limits& limits = {});

    std::uint32_t characteristic() const;
    unsigned degree() const;
    std::uint32_t order() const;
    /// Coefficients over F_p, low to high, monic, length k + 1.
    const std::vector<std::uint32_t>& modulus() const;

    Fq zero() const { return Fq{0}; }
    Fq one() const { return Fq{1}; }
    /// The residue class of x (a primitive-basis generator; equals an integer for k = 1).
    Fq gen() const;
    Fq fromInt(std::int64_t v) const;
    Fq fromCoefficients(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coefficients(Fq a) const;
    Fq element(std::uint32_t rep) const { return Fq{rep}; }

    Fq add(Fq a, Fq b) const;
    Fq sub(Fq a, Fq b) const;
    Fq neg(Fq a) const;
    Fq mul(Fq a, Fq b) const;
    /// Throws DivisionByZeroError for a == 0.
    Fq inv(Fq a) const;
    Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
    Fq pow(Fq a, std::uint64_t e) const;
    Fq frobenius(Fq a) const { return pow(a, characteristic()); }

    bool isSquare(Fq a) const;
    /// Some square root of a, or nothing; for p = 2 every element has exactly one.
    bool sqrt(Fq a, Fq& root) const;
    /// Absolute trace to F_p, returned as an integer residue.
    std::uint32_t trace(Fq a) const;

    /// Discrete logarithm with respect to the primitive element; a != 0.
    std::uint32_t log(Fq a) const;
    Fq primitive() const;

    std::string format(Fq a) const;

    bool operator==(const FiniteField& other) const;

  private:
    struct Tables;
    explicit FiniteField(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
    std::shared_ptr<const Tables> t_;
};

/// An injective field homomorphism small -> large, fixed by sending the
/// class of x to the smallest-encoded root of small's modulus in large.
class FieldEmbedding {
  public:
    FieldEmbedding(FiniteField small, FiniteField large);

    const FiniteField& source() const { return small_; }
    const FiniteField& target() const { return large_; }
    Fq operator()(Fq a) const { return image_[a.rep]; }
    /// Preimage of b, or false when b is not in the image.
    bool preimage(Fq b, Fq& a) const;

  private:
    FiniteField small_;
    FiniteField large_;
    std::vector<Fq> image_;
    std::vector<std::int64_t> back_;  // indexed by large rep, -1 when outside the image
};

}  // namespace bizeta
