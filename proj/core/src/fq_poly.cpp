#include "bizeta/fq_poly.hpp"

#include <algorithm>

namespace bizeta {

FqPoly::FqPoly(FiniteField field, std::vector<Fq> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

FqPoly FqPoly::fromInts(const FiniteField& field, std::initializer_list<std::int64_t> coeffs) {
    std::vector<Fq> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) c.push_back(field.fromInt(v));
    return FqPoly(field, std::move(c));
}

FqPoly FqPoly::constant(const FiniteField& field, Fq c) { return FqPoly(field, {c}); }

FqPoly FqPoly::x(const FiniteField& field) { return FqPoly(field, {field.zero(), field.one()}); }

FqPoly FqPoly::monicFromIndex(const FiniteField& field, unsigned d, std::uint64_t index) {
    std::vector<Fq> c(d + 1);
    const std::uint64_t q = field.order();
    for (unsigned i = 0; i < d; ++i) {
        c[i] = Fq{static_cast<std::uint32_t>(index % q)};
        index /= q;
    }
    c[d] = field.one();
    return FqPoly(field, std::move(c));
}

void FqPoly::trim() {
    while (!c_.empty() && c_.back().rep == 0) c_.pop_back();
}

FqPoly& FqPoly::operator+=(const FqPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
    trim();
    return *this;
}

FqPoly& FqPoly::operator-=(const FqPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
    trim();
    return *this;
}

FqPoly& FqPoly::operator*=(const FqPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Fq> r(c_.size() + o.c_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].rep == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
        }
    }
    c_ = std::move(r);
    trim();
    return *this;
}

FqPoly FqPoly::operator-() const {
    FqPoly r(field_, c_);
    for (auto& c : r.c_) c = field_.neg(c);
    return r;
}

FqPoly FqPoly::scaled(Fq s) const {
    FqPoly r(field_, c_);
    for (auto& c : r.c_) c = field_.mul(c, s);
    r.trim();
    return r;
}

FqPoly FqPoly::monic() const {
    if (c_.empty()) return *this;
    return scaled(field_.inv(c_.back()));
}

FqPoly FqPoly::derivative() const {
    std::vector<Fq> r;
    for (std::size_t i = 1; i < c_.size(); ++i) {
        r.push_back(field_.mul(field_.fromInt(static_cast<std::int64_t>(i % field_.characteristic())), c_[i]));
    }
    return FqPoly(field_, std::move(r));
}

Fq FqPoly::eval(Fq a) const {
    Fq acc = field_.zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, a), c_[i]);
    return acc;
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly& d) const {
    if (d.isZero()) throw DivisionByZeroError("polynomial division by zero");
    FqPoly rem(field_, c_);
    if (rem.degree() < d.degree()) return {FqPoly(field_), rem};
    std::vector<Fq> quot(static_cast<std::size_t>(rem.degree() - d.degree() + 1), field_.zero());
    const Fq lcInv = field_.inv(d.leading());
    const auto dd = static_cast<std::size_t>(d.degree());
    for (std::size_t i = rem.c_.size(); i-- > dd;) {
        const Fq c = field_.mul(rem.c_[i], lcInv);
        if (c.rep == 0) continue;
        quot[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) {
            rem.c_[i - dd + j] = field_.sub(rem.c_[i - dd + j], field_.mul(c, d.c_[j]));
        }
    }
    rem.trim();
    return {FqPoly(field_, std::move(quot)), rem};
}

int FqPoly::compare(const FqPoly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size() ? -1 : 1;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i] ? -1 : 1;
    }
    return 0;
}

std::string FqPoly::toString(char var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].rep == 0) continue;
        const std::string coef = field_.format(c_[i]);
        const bool compound = coef.find('+') != std::string::npos;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += coef;
            continue;
        }
        if (coef != "1") out += (compound ? "(" + coef + ")" : coef) + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

FqPoly operator+(FqPoly a, const FqPoly& b) { return a += b; }
FqPoly operator-(FqPoly a, const FqPoly& b) { return a -= b; }
FqPoly operator*(FqPoly a, const FqPoly& b) { return a *= b; }
FqPoly operator/(const FqPoly& a, const FqPoly& b) { return a.divmod(b).first; }
FqPoly operator%(const FqPoly& a, const FqPoly& b) { return a.divmod(b).second; }

FqPoly gcd(FqPoly a, FqPoly b) {
    while (!b.isZero()) {
        FqPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FqXgcd xgcd(const FqPoly& a, const FqPoly& b) {
    const auto& F = a.field();
    FqPoly r0 = a, r1 = b;
    FqPoly s0 = FqPoly::constant(F, F.one()), s1(F);
    FqPoly t0(F), t1 = FqPoly::constant(F, F.one());
    while (!r1.isZero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        FqPoly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        FqPoly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.isZero()) return {r0, s0, t0};
    const Fq inv = F.inv(r0.leading());
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

FqPoly powMod(const FqPoly& base, std::uint64_t e, const FqPoly& m) {
    const auto& F = base.field();
    FqPoly acc = FqPoly::constant(F, F.one()) % m;
    FqPoly b = base % m;
    for (; e > 0; e >>= 1) {
        if (e & 1) acc = (acc * b) % m;
        if (e > 1) b = (b * b) % m;
    }
    return acc;
}

FqPoly mapCoefficients(const FqPoly& f, const FieldEmbedding& emb) {
    std::vector<Fq> c;
    c.reserve(f.coeffs().size());
    for (auto a : f.coeffs()) c.push_back(emb(a));
    return FqPoly(emb.target(), std::move(c));
}

bool isIrreducible(const FqPoly& f) {
    const int d = f.degree();
    if (d < 1) return false;
    if (d == 1) return true;
    const auto& F = f.field();
    const FqPoly x = FqPoly::x(F);
    FqPoly xq = x;
    for (int j = 1; j <= d; ++j) {
        xq = powMod(xq, F.order(), f);
        if (j < d && d % j == 0 && gcd(f, xq - x).degree() != 0) return false;
    }
    return (xq - x) % f == FqPoly(F);
}

std::vector<FqPoly> listMonicIrreducibles(const FiniteField& field, unsigned d, const Limits& limits) {
    if (d == 0) throw PreconditionError("degree must be positive");
    const std::uint64_t n = saturatingPow(field.order(), d);
    requireCapacity(limits, n, "monic polynomials of degree " + std::to_string(d));
    std::vector<FqPoly> out;
    for (std::uint64_t i = 0; i < n; ++i) {
        FqPoly f = FqPoly::monicFromIndex(field, d, i);
        if (isIrreducible(f)) out.push_back(std::move(f));
    }
    return out;
}

}  // namespace bizeta
