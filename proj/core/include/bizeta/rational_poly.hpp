#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace bizeta {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial over Q, coefficients low to high, trimmed.
class QPoly {
  public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs);
    QPoly(std::initializer_list<long> coeffs);
    static QPoly constant(const Rational& c);
    static QPoly monomial(const Rational& c, unsigned degree);

    const std::vector<Rational>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool isZero() const { return c_.empty(); }
    bool isConstant() const { return c_.size() <= 1; }
    Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational& leading() const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    QPoly& operator*=(const Rational& s);
    QPoly operator-() const;
    QPoly derivative() const;
    QPoly monic() const;
    Rational eval(const Rational& x) const;
    /// f(x + shift).
    QPoly taylorShift(const Rational& shift) const;

    /// Throws DivisionByZeroError for a zero divisor.
    std::pair<QPoly, QPoly> divmod(const QPoly& d) const;

    bool operator==(const QPoly& o) const { return c_ == o.c_; }

    std::string toString(char var = 'x') const;

  private:
    void trim();
    std::vector<Rational> c_;
};

QPoly operator+(QPoly a, const QPoly& b);
QPoly operator-(QPoly a, const QPoly& b);
QPoly operator*(QPoly a, const QPoly& b);
QPoly operator*(QPoly a, const Rational& s);
/// Monic gcd; zero when both are zero.
QPoly gcd(QPoly a, QPoly b);
/// Exact quotient; throws NotDivisibleError when the remainder is nonzero.
QPoly exactDivide(const QPoly& a, const QPoly& b);

/// Dense polynomial in (T, u) over Q. Row i holds the coefficient of T^i as a
/// polynomial in u. Trailing zero rows are trimmed; each row is trimmed.
class BiPoly {
  public:
    BiPoly() = default;
    explicit BiPoly(std::vector<QPoly> rows);
    /// Build from a matrix m[i][j] = coefficient of T^i u^j.
    static BiPoly fromMatrix(const std::vector<std::vector<Rational>>& m);
    static BiPoly constant(const Rational& c);
    static BiPoly T();
    static BiPoly u();
    static BiPoly monomial(const Rational& c, unsigned tDeg, unsigned uDeg);

    const std::vector<QPoly>& rows() const { return rows_; }
    /// P_i(u), the coefficient of T^i.
    QPoly row(std::size_t i) const { return i < rows_.size() ? rows_[i] : QPoly(); }
    Rational coeff(std::size_t tDeg, std::size_t uDeg) const { return row(tDeg)[uDeg]; }
    int degreeT() const { return static_cast<int>(rows_.size()) - 1; }
    int degreeU() const;
    int totalDegree() const;
    bool isZero() const { return rows_.empty(); }

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const BiPoly& o);
    BiPoly& operator*=(const Rational& s);
    BiPoly operator-() const;

    BiPoly derivativeT() const;
    BiPoly derivativeU() const;
    /// Q(T, value) as a polynomial in T.
    QPoly evalU(const Rational& value) const;
    /// Q(value, u) as a polynomial in u.
    QPoly evalT(const Rational& value) const;
    Rational eval(const Rational& t, const Rational& uValue) const;
    /// Swap the roles of T and u.
    BiPoly transposed() const;
    /// f(T, u + c*T).
    BiPoly shearU(const Rational& c) const;
    /// f(T, u + shift).
    BiPoly shiftU(const Rational& shift) const;

    bool operator==(const BiPoly& o) const { return rows_ == o.rows_; }

    /// Human-readable form grouped by powers of T, e.g. `1 + (3 - u)*T + u*T^2`.
    std::string toString() const;

  private:
    void trim();
    std::vector<QPoly> rows_;
};

BiPoly operator+(BiPoly a, const BiPoly& b);
BiPoly operator-(BiPoly a, const BiPoly& b);
BiPoly operator*(BiPoly a, const BiPoly& b);
BiPoly operator*(BiPoly a, const Rational& s);

struct BiDivision {
    BiPoly quotient;
    BiPoly remainder;
};

/// Multivariate division with respect to lex order T > u.
BiDivision bivariateDivide(const BiPoly& num, const BiPoly& den);

/// Exact quotient num / den. Throws NotDivisibleError (naming the remainder)
/// when den does not divide num, DivisionByZeroError when den is zero.
BiPoly bivariateExactDivide(const BiPoly& num, const BiPoly& den);

/// First order+1 Taylor coefficients of num / prod_i (1 - c_i T).
std::vector<Rational> seriesExpandRational(const QPoly& num, const std::vector<Rational>& factorRoots, unsigned order);

}  // namespace bizeta
