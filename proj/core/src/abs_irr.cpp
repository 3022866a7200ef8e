#include "bizeta/abs_irr.hpp"

#include <map>
#include <optional>
#include <utility>

namespace bizeta {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Rank by fraction-free-ish Gaussian elimination over Q (rows are destroyed).
int rankOf(Matrix rows) {
    int rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < rows.size(); ++c) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
        const auto& pr = rows[static_cast<std::size_t>(rank)];
        for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            const Rational factor = rows[r][c] / pr[c];
            for (std::size_t k = c; k < cols; ++k) rows[r][k] -= factor * pr[k];
        }
        ++rank;
    }
    return rank;
}

Rational determinant(Matrix a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot][c] == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            std::swap(a[pivot], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            const Rational factor = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= factor * a[c][k];
        }
    }
    return det;
}

// Sylvester determinant of a (degree m) and b (degree m-1) with formal degrees.
Rational sylvester(const QPoly& a, const QPoly& b, int m) {
    const int n = m - 1;
    const std::size_t size = static_cast<std::size_t>(m + n);
    Matrix s(size, std::vector<Rational>(size, Rational(0)));
    for (int r = 0; r < n; ++r) {
        for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + m - i)] = a[static_cast<std::size_t>(i)];
    }
    for (int r = 0; r < m; ++r) {
        for (int i = 0; i <= n; ++i) {
            s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + n - i)] = b[static_cast<std::size_t>(i)];
        }
    }
    return determinant(std::move(s));
}

QPoly contentInU(const BiPoly& P) {
    QPoly c;
    for (const auto& row : P.rows()) c = gcd(c, row);
    return c;
}

BiPoly divideByContent(const BiPoly& P, const QPoly& c) {
    std::vector<QPoly> rows;
    for (const auto& row : P.rows()) rows.push_back(exactDivide(row, c));
    return BiPoly(std::move(rows));
}

// Number of distinct complex roots; throws when there is a repeated one.
int distinctRoots(const QPoly& c) {
    if (c.degree() <= 0) return 0;
    if (gcd(c, c.derivative()).degree() > 0) throw PreconditionError("input is not squarefree (repeated factor in u)");
    return c.degree();
}

int distinctRootsT(const BiPoly& P) {
    QPoly t;
    {
        std::vector<Rational> c;
        for (int i = 0; i <= P.degreeT(); ++i) c.push_back(P.coeff(static_cast<std::size_t>(i), 0));
        t = QPoly(std::move(c));
    }
    if (gcd(t, t.derivative()).degree() > 0) throw PreconditionError("input is not squarefree (repeated factor in T)");
    return t.degree();
}

// Nullity of g_u P - g P_u - h_T P + h P_T = 0 with deg g <= (m-1, n), deg h <= (m, n-1).
int gaoNullity(const BiPoly& P) {
    const int m = P.degreeT();
    const int n = P.degreeU();
    const BiPoly Pu = P.derivativeU();
    const BiPoly PT = P.derivativeT();
    std::vector<BiPoly> columns;
    for (int i = 0; i <= m - 1; ++i) {
        for (int j = 0; j <= n; ++j) {
            const BiPoly g = BiPoly::monomial(1, static_cast<unsigned>(i), static_cast<unsigned>(j));
            columns.push_back(g.derivativeU() * P - g * Pu);
        }
    }
    for (int i = 0; i <= m; ++i) {
        for (int j = 0; j <= n - 1; ++j) {
            const BiPoly h = BiPoly::monomial(1, static_cast<unsigned>(i), static_cast<unsigned>(j));
            columns.push_back(h * PT - h.derivativeT() * P);
        }
    }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> rowIndex;
    for (const auto& col : columns) {
        for (std::size_t i = 0; i < col.rows().size(); ++i) {
            for (std::size_t j = 0; j < col.rows()[i].coeffs().size(); ++j) rowIndex.emplace(std::make_pair(i, j), 0);
        }
    }
    std::size_t next = 0;
    for (auto& [key, index] : rowIndex) index = next++;
    Matrix M(rowIndex.size(), std::vector<Rational>(columns.size(), Rational(0)));
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const auto& rows = columns[c].rows();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& coeffs = rows[i].coeffs();
            for (std::size_t j = 0; j < coeffs.size(); ++j) M[rowIndex.at({i, j})][c] = coeffs[j];
        }
    }
    return static_cast<int>(columns.size()) - rankOf(std::move(M));
}

// ---- lifting oracle -------------------------------------------------------

// Arithmetic in E = Q[t]/(g) for monic squarefree g of degree d.
class Extension {
  public:
    explicit Extension(QPoly g) : g_(std::move(g)), d_(static_cast<std::size_t>(g_.degree())) {
        // Power sums of the roots of g by Newton's identities: traces of t^i.
        const auto& c = g_.coeffs();
        traces_.assign(2 * d_ + 1, Rational(0));
        traces_[0] = Rational(static_cast<long>(d_));
        for (std::size_t i = 1; i < traces_.size(); ++i) {
            Rational acc = 0;
            for (std::size_t j = 1; j <= std::min(i, d_); ++j) {
                const Rational e = c[d_ - j];  // coefficient of t^{d-j}
                if (j < i) acc -= e * traces_[i - j];
                else acc -= e * Rational(static_cast<long>(i));
            }
            traces_[i] = acc;
        }
    }
    using Elem = std::vector<Rational>;

    std::size_t degree() const { return d_; }
    Elem zero() const { return Elem(d_, Rational(0)); }
    Elem scalar(const Rational& a) const {
        Elem e = zero();
        e[0] = a;
        return e;
    }
    Elem gen() const {
        Elem e = zero();
        if (d_ == 1) e[0] = -g_[0];
        else e[1] = 1;
        return e;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        std::vector<Rational> prod(2 * d_, Rational(0));
        for (std::size_t i = 0; i < d_; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < d_; ++j) prod[i + j] += a[i] * b[j];
        }
        for (std::size_t k = prod.size(); k-- > d_;) {
            if (prod[k] == 0) continue;
            const Rational top = prod[k];
            for (std::size_t j = 0; j < d_; ++j) prod[k - d_ + j] -= top * g_[j];
            prod[k] = 0;
        }
        prod.resize(d_);
        return prod;
    }
    Elem inverse(const Elem& a) const {
        // Extended Euclid on (a, g).
        QPoly r0 = g_, r1 = QPoly(a), s0, s1 = QPoly{1};
        while (r1.degree() > 0) {
            auto [q, r] = r0.divmod(r1);
            QPoly s2 = s0 - q * s1;
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r1.isZero()) throw PreconditionError("element not invertible in the extension");
        s1 *= Rational(1) / r1[0];
        Elem out = zero();
        const QPoly reduced = s1.divmod(g_).second;
        for (std::size_t i = 0; i < d_; ++i) out[i] = reduced[i];
        return out;
    }
    Rational trace(const Elem& a) const {
        Rational t = 0;
        for (std::size_t i = 0; i < d_; ++i) t += a[i] * traces_[i];
        return t;
    }

  private:
    QPoly g_;
    std::size_t d_;
    std::vector<Rational> traces_;
};

using Series = std::vector<Extension::Elem>;

Series seriesMul(const Extension& E, const Series& a, const Series& b, std::size_t prec) {
    Series out(prec, E.zero());
    for (std::size_t i = 0; i < prec && i < a.size(); ++i) {
        for (std::size_t j = 0; i + j < prec && j < b.size(); ++j) {
            const auto p = E.mul(a[i], b[j]);
            for (std::size_t k = 0; k < p.size(); ++k) out[i + j][k] += p[k];
        }
    }
    return out;
}

Series seriesInverse(const Extension& E, const Series& a, std::size_t prec) {
    Series b(prec, E.zero());
    b[0] = E.inverse(a[0]);
    for (std::size_t n = 1; n < prec; ++n) {
        auto acc = E.zero();
        for (std::size_t i = 1; i <= n && i < a.size(); ++i) {
            const auto p = E.mul(a[i], b[n - i]);
            for (std::size_t k = 0; k < p.size(); ++k) acc[k] += p[k];
        }
        const auto v = E.mul(b[0], acc);
        for (std::size_t k = 0; k < v.size(); ++k) b[n][k] = -v[k];
    }
    return b;
}

// F(phi(s), s) mod s^prec, with F's T-rows polynomials in s over Q.
Series evaluate(const Extension& E, const BiPoly& F, const Series& phi, std::size_t prec) {
    Series acc(prec, E.zero());
    for (int i = F.degreeT(); i >= 0; --i) {
        acc = seriesMul(E, acc, phi, prec);
        const QPoly row = F.row(static_cast<std::size_t>(i));
        for (std::size_t j = 0; j < prec && j < row.coeffs().size(); ++j) acc[j][0] += row[j];
    }
    return acc;
}

}  // namespace

bool squarefreeCheck(const BiPoly& P) {
    if (P.isZero()) throw PreconditionError("squarefreeCheck of the zero polynomial");
    const int m = P.degreeT();
    if (m <= 0) return true;
    const int n = std::max(0, P.degreeU());
    const BiPoly PT = P.derivativeT();
    for (int k = 0; k <= (2 * m - 1) * n; ++k) {
        const Rational at(k);
        if (sylvester(P.evalU(at), PT.evalU(at), m) != 0) return true;
    }
    return false;
}

FactorReport absFactorCount(const BiPoly& P) {
    if (P.isZero()) throw PreconditionError("absFactorCount of the zero polynomial");
    FactorReport report;
    const QPoly content = contentInU(P);
    const BiPoly primitive = divideByContent(P, content);
    if (!squarefreeCheck(primitive)) throw PreconditionError("input is not squarefree");
    int count = distinctRoots(content);
    if (primitive.degreeT() > 0) {
        count += primitive.degreeU() <= 0 ? distinctRootsT(primitive) : gaoNullity(primitive);
    }
    report.absFactorCount = count;
    report.squarefree = true;
    return report;
}

int absFactorCountByLifting(const BiPoly& P) {
    if (P.isZero()) throw PreconditionError("absFactorCountByLifting of the zero polynomial");
    const int d = P.totalDegree();
    if (d <= 0) return 0;

    // Shear so the T^d coefficient is a non-zero constant.
    BiPoly F;
    for (long c = 1;; ++c) {
        F = P.shearU(Rational(c));
        if (F.degreeT() == d) break;
        if (c > d + 1) throw ConsistencyError("no shear makes the input monic in T");
    }
    F *= Rational(1) / F.coeff(static_cast<std::size_t>(d), 0);

    // A specialization u0 with F(T, u0) squarefree.
    const long attempts = static_cast<long>(d) * (2 * d - 2) + 2;
    long u0 = 0;
    QPoly g;
    for (;; ++u0) {
        if (u0 >= attempts) throw PreconditionError("input is not squarefree");
        g = F.evalU(Rational(u0));
        if (gcd(g, g.derivative()).degree() == 0) break;
    }
    F = F.shiftU(Rational(u0));

    const Extension E(g);
    const std::size_t J = static_cast<std::size_t>(3 * d + 3);
    const std::size_t prec = J + 1;
    const BiPoly FT = F.derivativeT();

    Series phi(prec, E.zero());
    phi[0] = E.gen();
    for (std::size_t have = 1; have < prec;) {
        have = std::min(prec, 2 * have);
        const Series num = evaluate(E, F, phi, have);
        const Series den = seriesInverse(E, evaluate(E, FT, phi, have), have);
        const Series step = seriesMul(E, num, den, have);
        for (std::size_t j = 0; j < have; ++j) {
            for (std::size_t k = 0; k < E.degree(); ++k) phi[j][k] -= step[j][k];
        }
    }

    Matrix rows;
    const auto t = E.gen();
    Series power(prec, E.zero());
    power[0] = E.scalar(1);
    for (int k = 1; k <= d; ++k) {
        power = seriesMul(E, power, phi, prec);
        for (std::size_t j = static_cast<std::size_t>(k) + 1; j <= J; ++j) {
            std::vector<Rational> row;
            auto c = power[j];
            for (std::size_t l = 0; l < E.degree(); ++l) {
                row.push_back(E.trace(c));
                c = E.mul(c, t);
            }
            rows.push_back(std::move(row));
        }
    }
    return d - rankOf(std::move(rows));
}

BiPoly reversedNumerator(const TwoVarZeta& z) {
    std::vector<QPoly> rows(static_cast<std::size_t>(2 * z.genus + 1));
    for (int i = 0; i <= 2 * z.genus; ++i) rows[static_cast<std::size_t>(i)] = z.P.row(static_cast<std::size_t>(2 * z.genus - i));
    return BiPoly(std::move(rows));
}

CheckReport verifyTheorem3(const TwoVarZeta& z, const Measure& m) {
    CheckReport r;
    if (z.genus < 1) {
        r.add("not applicable", true, "genus 0");
        return r;
    }
    const BiPoly& P = z.P;
    const BiPoly oneMinusT = BiPoly::constant(1) - BiPoly::T();

    bool irreducible = false;
    std::string countDetail;
    std::optional<int> gao;
    try {
        gao = absFactorCount(P).absFactorCount;
    } catch (const PreconditionError&) {
        countDetail = "not squarefree";
    }
    if (gao) {
        const int lifted = absFactorCountByLifting(P);
        r.add("factor count agrees with lifting oracle", *gao == lifted,
              "differential " + std::to_string(*gao) + ", lifting " + std::to_string(lifted));
        irreducible = *gao == 1;
        countDetail = "absolute factor count " + std::to_string(*gao);
    }

    if (m.pic0 == 0) {
        bool divides = true;
        try {
            (void)bivariateExactDivide(P, oneMinusT);
        } catch (const NotDivisibleError&) {
            divides = false;
        }
        r.add("(i) pic0 = 0 implies (1-T) | P", divides);
    } else {
        r.add("(ii) pic0 != 0 implies absolutely irreducible", irreducible, countDetail);
    }
    r.add("absolutely irreducible iff pic0 != 0", irreducible == (m.pic0 != 0), countDetail);

    const BiPoly F = reversedNumerator(z);
    const BiPoly Ft = F.transposed();
    r.add("(iii) F = (1-T) u^g + O(u^{g-1})", Ft.degreeT() == z.genus && Ft.row(static_cast<std::size_t>(z.genus)) == QPoly{1, -1},
          "u^g coefficient " + Ft.row(static_cast<std::size_t>(z.genus)).toString('T'));
    const QPoly atOne = F.evalT(1);
    r.add("(iii) F(1,u) = pic0", atOne == QPoly::constant(m.pic0), "F(1,u) = " + atOne.toString('u'));
    return r;
}

}  // namespace bizeta
