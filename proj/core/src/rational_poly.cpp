#include "bizeta/rational_poly.hpp"

#include <algorithm>

#include "bizeta/error.hpp"

namespace bizeta {

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly::QPoly(std::initializer_list<long> coeffs) {
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

QPoly QPoly::constant(const Rational& c) { return QPoly(std::vector<Rational>{c}); }

QPoly QPoly::monomial(const Rational& c, unsigned degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& QPoly::leading() const {
    static const Rational zero(0);
    return c_.empty() ? zero : c_.back();
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const Rational& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

QPoly QPoly::derivative() const {
    std::vector<Rational> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * static_cast<long>(i));
    return QPoly(std::move(r));
}

QPoly QPoly::monic() const {
    if (c_.empty()) return *this;
    QPoly r = *this;
    const Rational inv = 1 / c_.back();
    return r *= inv;
}

Rational QPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

QPoly QPoly::taylorShift(const Rational& shift) const {
    // Horner in the ring: acc = acc * (x + shift) + c_i
    QPoly acc;
    const QPoly lin(std::vector<Rational>{shift, Rational(1)});
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc *= lin;
        acc += QPoly::constant(c_[i]);
    }
    return acc;
}

std::pair<QPoly, QPoly> QPoly::divmod(const QPoly& d) const {
    if (d.isZero()) throw DivisionByZeroError("polynomial division by zero");
    QPoly rem = *this;
    if (rem.degree() < d.degree()) return {QPoly(), rem};
    std::vector<Rational> quot(static_cast<std::size_t>(rem.degree() - d.degree() + 1));
    const auto dd = static_cast<std::size_t>(d.degree());
    const Rational lcInv = 1 / d.leading();
    for (std::size_t i = rem.c_.size(); i-- > dd;) {
        if (rem.c_[i] == 0) continue;
        const Rational c = rem.c_[i] * lcInv;
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) rem.c_[i - dd + j] -= c * d.c_[j];
    }
    rem.trim();
    return {QPoly(std::move(quot)), rem};
}

std::string QPoly::toString(char var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rational& c = c_[i];
        if (c == 0) continue;
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (i == 0) {
            out += a.get_str();
            continue;
        }
        if (a != 1) out += a.get_str() + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
QPoly operator*(QPoly a, const Rational& s) { return a *= s; }

QPoly gcd(QPoly a, QPoly b) {
    while (!b.isZero()) {
        QPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

QPoly exactDivide(const QPoly& a, const QPoly& b) {
    auto [q, r] = a.divmod(b);
    if (!r.isZero()) throw NotDivisibleError("remainder " + r.toString());
    return q;
}

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(std::vector<QPoly> rows) : rows_(std::move(rows)) { trim(); }

BiPoly BiPoly::fromMatrix(const std::vector<std::vector<Rational>>& m) {
    std::vector<QPoly> rows;
    rows.reserve(m.size());
    for (const auto& r : m) rows.emplace_back(r);
    return BiPoly(std::move(rows));
}

BiPoly BiPoly::constant(const Rational& c) { return BiPoly({QPoly::constant(c)}); }
BiPoly BiPoly::T() { return monomial(1, 1, 0); }
BiPoly BiPoly::u() { return monomial(1, 0, 1); }

BiPoly BiPoly::monomial(const Rational& c, unsigned tDeg, unsigned uDeg) {
    std::vector<QPoly> rows(tDeg + 1);
    rows[tDeg] = QPoly::monomial(c, uDeg);
    return BiPoly(std::move(rows));
}

void BiPoly::trim() {
    while (!rows_.empty() && rows_.back().isZero()) rows_.pop_back();
}

int BiPoly::degreeU() const {
    int d = -1;
    for (const auto& r : rows_) d = std::max(d, r.degree());
    return d;
}

int BiPoly::totalDegree() const {
    int d = -1;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (!rows_[i].isZero()) d = std::max(d, static_cast<int>(i) + rows_[i].degree());
    }
    return d;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
    for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] += o.rows_[i];
    trim();
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
    for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] -= o.rows_[i];
    trim();
    return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
    if (rows_.empty() || o.rows_.empty()) {
        rows_.clear();
        return *this;
    }
    std::vector<QPoly> r(rows_.size() + o.rows_.size() - 1);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].isZero()) continue;
        for (std::size_t j = 0; j < o.rows_.size(); ++j) r[i + j] += rows_[i] * o.rows_[j];
    }
    rows_ = std::move(r);
    trim();
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& s) {
    for (auto& r : rows_) r *= s;
    trim();
    return *this;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& row : r.rows_) row = -row;
    return r;
}

BiPoly BiPoly::derivativeT() const {
    std::vector<QPoly> r;
    for (std::size_t i = 1; i < rows_.size(); ++i) r.push_back(rows_[i] * Rational(static_cast<long>(i)));
    return BiPoly(std::move(r));
}

BiPoly BiPoly::derivativeU() const {
    std::vector<QPoly> r;
    r.reserve(rows_.size());
    for (const auto& row : rows_) r.push_back(row.derivative());
    return BiPoly(std::move(r));
}

QPoly BiPoly::evalU(const Rational& value) const {
    std::vector<Rational> c;
    c.reserve(rows_.size());
    for (const auto& row : rows_) c.push_back(row.eval(value));
    return QPoly(std::move(c));
}

QPoly BiPoly::evalT(const Rational& value) const {
    QPoly acc;
    for (std::size_t i = rows_.size(); i-- > 0;) {
        acc *= QPoly::constant(value);
        acc += rows_[i];
    }
    return acc;
}

Rational BiPoly::eval(const Rational& t, const Rational& uValue) const { return evalU(uValue).eval(t); }

BiPoly BiPoly::transposed() const {
    const int du = degreeU();
    if (du < 0) return {};
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(du + 1), std::vector<Rational>(rows_.size()));
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (std::size_t j = 0; j < rows_[i].coeffs().size(); ++j) m[j][i] = rows_[i].coeffs()[j];
    }
    return fromMatrix(m);
}

BiPoly BiPoly::shearU(const Rational& c) const {
    // sum_{i,j} a_ij T^i (u + cT)^j
    BiPoly out;
    const BiPoly lin = u() + monomial(c, 1, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        BiPoly pw = constant(1);
        const auto& row = rows_[i].coeffs();
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] != 0) out += monomial(row[j], static_cast<unsigned>(i), 0) * pw;
            pw *= lin;
        }
    }
    return out;
}

BiPoly BiPoly::shiftU(const Rational& shift) const {
    std::vector<QPoly> r;
    r.reserve(rows_.size());
    for (const auto& row : rows_) r.push_back(row.taylorShift(shift));
    return BiPoly(std::move(r));
}

std::string BiPoly::toString() const {
    if (rows_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const QPoly& row = rows_[i];
        if (row.isZero()) continue;
        std::string coef = row.toString('u');
        std::string mono = i == 0 ? "" : (i == 1 ? "T" : "T^" + std::to_string(i));
        const bool single = row.coeffs().size() == 1 || std::count_if(row.coeffs().begin(), row.coeffs().end(),
                                                                       [](const Rational& c) { return c != 0; }) == 1;
        std::string term;
        if (mono.empty()) {
            term = coef;
        } else if (coef == "1") {
            term = mono;
        } else if (coef == "-1") {
            term = "-" + mono;
        } else if (single) {
            term = coef + "*" + mono;
        } else {
            term = "(" + coef + ")*" + mono;
        }
        if (out.empty()) {
            out = term;
        } else if (term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }

BiDivision bivariateDivide(const BiPoly& num, const BiPoly& den) {
    if (den.isZero()) throw DivisionByZeroError("bivariate division by zero");
    const int lt = den.degreeT();
    const int lu = den.row(static_cast<std::size_t>(lt)).degree();
    const Rational lc = den.coeff(static_cast<std::size_t>(lt), static_cast<std::size_t>(lu));

    BiPoly rest = num;
    BiPoly quotient;
    BiPoly remainder;
    while (!rest.isZero()) {
        const int t = rest.degreeT();
        const int uu = rest.row(static_cast<std::size_t>(t)).degree();
        const Rational c = rest.coeff(static_cast<std::size_t>(t), static_cast<std::size_t>(uu));
        if (t >= lt && uu >= lu) {
            const BiPoly term = BiPoly::monomial(c / lc, static_cast<unsigned>(t - lt), static_cast<unsigned>(uu - lu));
            quotient += term;
            rest -= term * den;
        } else {
            const BiPoly term = BiPoly::monomial(c, static_cast<unsigned>(t), static_cast<unsigned>(uu));
            remainder += term;
            rest -= term;
        }
    }
    return {quotient, remainder};
}

BiPoly bivariateExactDivide(const BiPoly& num, const BiPoly& den) {
    auto [q, r] = bivariateDivide(num, den);
    if (!r.isZero()) throw NotDivisibleError("not divisible: remainder " + r.toString());
    return q;
}

std::vector<Rational> seriesExpandRational(const QPoly& num, const std::vector<Rational>& factorRoots, unsigned order) {
    std::vector<Rational> s(order + 1);
    for (unsigned n = 0; n <= order; ++n) s[n] = num[n];
    // multiply by 1/(1 - cT): s'_n = s_n + c s'_{n-1}
    for (const auto& c : factorRoots) {
        for (unsigned n = 1; n <= order; ++n) s[n] += c * s[n - 1];
    }
    return s;
}

}  // namespace bizeta
