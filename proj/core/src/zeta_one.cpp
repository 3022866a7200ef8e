#include "bizeta/zeta_one.hpp"

namespace bizeta {

QPoly LPolynomial::toQPoly() const {
    std::vector<Rational> c(coeffs.begin(), coeffs.end());
    return QPoly(std::move(c));
}

LPolynomial lPolynomialFromCounts(const std::vector<Integer>& counts, const Integer& q, int genus) {
    if (genus < 0 || counts.size() != static_cast<std::size_t>(genus)) {
        throw PreconditionError("expected exactly g = " + std::to_string(genus) + " point counts");
    }
    const auto g = static_cast<std::size_t>(genus);
    std::vector<Integer> S(g + 1);
    Integer qm = 1;
    for (std::size_t m = 1; m <= g; ++m) {
        qm *= q;
        S[m] = counts[m - 1] - 1 - qm;
    }
    std::vector<Integer> c(2 * g + 1);
    c[0] = 1;
    for (std::size_t m = 1; m <= g; ++m) {
        Integer acc = 0;
        for (std::size_t i = 1; i <= m; ++i) acc += S[i] * c[m - i];
        if (acc % Integer(static_cast<unsigned long>(m)) != 0) {
            throw InconsistentCountsError("coefficient c_" + std::to_string(m) + " = " + acc.get_str() + "/" +
                                          std::to_string(m) + " is not an integer");
        }
        c[m] = acc / Integer(static_cast<unsigned long>(m));
    }
    if (g > 0 && c[1] * c[1] > 4 * Integer(static_cast<unsigned long>(g * g)) * q) {
        throw InconsistentCountsError("c_1 = " + c[1].get_str() + " violates the Weil bound");
    }
    for (std::size_t i = 0; i < g; ++i) {
        Integer qp;
        mpz_pow_ui(qp.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(g - i));
        c[2 * g - i] = qp * c[i];
    }
    return LPolynomial{std::move(c), q, genus};
}

std::vector<Integer> countsFromL(const LPolynomial& L, int count) {
    std::vector<Integer> S(static_cast<std::size_t>(count) + 1);
    std::vector<Integer> out;
    Integer qm = 1;
    for (std::size_t m = 1; m <= static_cast<std::size_t>(count); ++m) {
        Integer s = Integer(static_cast<unsigned long>(m)) * L[m];
        for (std::size_t i = 1; i < m; ++i) s -= S[i] * L[m - i];
        S[m] = s;
        qm *= L.q;
        out.push_back(qm + 1 + s);
    }
    return out;
}

LPolynomial baseChangeL(const LPolynomial& L, unsigned m) {
    const auto all = countsFromL(L, L.genus * static_cast<int>(m));
    std::vector<Integer> counts;
    for (int j = 1; j <= L.genus; ++j) counts.push_back(all[static_cast<std::size_t>(j) * m - 1]);
    Integer qm;
    mpz_pow_ui(qm.get_mpz_t(), L.q.get_mpz_t(), m);
    return lPolynomialFromCounts(counts, qm, L.genus);
}

Integer classNumber(const LPolynomial& L) {
    Integer h = 0;
    for (const auto& c : L.coeffs) h += c;
    return h;
}

std::vector<Integer> symmetricProductCounts(const LPolynomial& L, unsigned order) {
    const auto series = seriesExpandRational(L.toQPoly(), {Rational(1), Rational(L.q)}, order);
    std::vector<Integer> out;
    out.reserve(series.size());
    for (std::size_t n = 0; n < series.size(); ++n) {
        const Rational& s = series[n];
        if (s.get_den() != 1 || s < 0) {
            throw InconsistentCountsError("s_" + std::to_string(n) + " = " + s.get_str() +
                                          " is not a nonnegative integer");
        }
        out.push_back(s.get_num());
    }
    return out;
}

std::vector<Integer> effectiveDivisorCounts(const PlaceTable& places, int order) {
    if (order > places.maxDegree) {
        throw PreconditionError("place table depth " + std::to_string(places.maxDegree) + " is below degree " +
                                std::to_string(order));
    }
    std::vector<Integer> s(static_cast<std::size_t>(order) + 1);
    s[0] = 1;
    // prod_P 1/(1 - T^{deg P}): each place admits any multiplicity.
    for (int d = 1; d <= order; ++d) {
        for (std::size_t k = 0; k < places.count(d); ++k) {
            for (int n = d; n <= order; ++n) s[static_cast<std::size_t>(n)] += s[static_cast<std::size_t>(n - d)];
        }
    }
    return s;
}

Integer effectiveDivisorCount(const PlaceTable& places, int n) { return effectiveDivisorCounts(places, n).back(); }

}  // namespace bizeta
