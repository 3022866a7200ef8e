#include "bizeta/strata.hpp"

#include <functional>

namespace bizeta {

namespace {

struct FlatPlace {
    const Place* place;
    MumfordRep jac;
};

// Smallest nu >= 1 with 1 + q + ... + q^{nu-1} == size, or 0 when none exists.
int invertBucketSize(std::uint64_t size, const Integer& q) {
    Integer acc = 0;
    Integer power = 1;
    for (int nu = 1;; ++nu) {
        acc += power;
        if (acc == size) return nu;
        if (acc > size) return 0;
        power *= q;
    }
}

}  // namespace

int ClassStrata::h0(const DivisorClassKey& key) const {
    if (key.degree < 0 || static_cast<std::size_t>(key.degree) >= h0ByDegree.size()) return 0;
    const auto& m = h0ByDegree[static_cast<std::size_t>(key.degree)];
    const auto it = m.find(key);
    return it == m.end() ? 0 : it->second;
}

ClassStrata classifyEffectiveDivisors(const Jacobian& jac, const PlaceTable& places) {
    const int g = jac.genus();
    const int top = 2 * g - 2;
    ClassStrata out;
    if (top < 0) return out;
    if (places.maxDegree < top) {
        throw PreconditionError("place table depth " + std::to_string(places.maxDegree) + " below 2g-2 = " +
                                std::to_string(top));
    }

    std::vector<FlatPlace> flat;
    for (int d = 1; d <= top; ++d) {
        for (const auto& p : places.byDegree[static_cast<std::size_t>(d)]) flat.push_back({&p, jac.fromPlace(p)});
    }

    std::vector<std::map<DivisorClassKey, std::uint64_t>> buckets(static_cast<std::size_t>(top + 1));
    // Multisets over `flat` of total degree <= top, each visited once.
    std::function<void(std::size_t, int, const MumfordRep&)> visit = [&](std::size_t i, int degree,
                                                                         const MumfordRep& sum) {
        // Places are sorted by degree, so once the next one does not fit none does.
        if (i == flat.size() || degree + flat[i].place->degree > top) {
            ++buckets[static_cast<std::size_t>(degree)][DivisorClassKey{sum, degree}];
            return;
        }
        const int d = flat[i].place->degree;
        MumfordRep current = sum;
        for (int deg = degree; deg <= top; deg += d) {
            visit(i + 1, deg, current);
            if (deg + d <= top) current = jac.add(current, flat[i].jac);
        }
    };
    visit(0, 0, jac.identity());

    const Integer q = jac.model().field().order();
    out.h0ByDegree.resize(buckets.size());
    for (std::size_t n = 0; n < buckets.size(); ++n) {
        for (const auto& [key, size] : buckets[n]) {
            const int nu = invertBucketSize(size, q);
            if (nu == 0) {
                throw StratificationError("degree " + std::to_string(n) + " class " + key.jac.toString() + " has " +
                                          std::to_string(size) + " effective divisors, not of the form (q^nu-1)/(q-1)");
            }
            out.h0ByDegree[n].emplace(key, nu);
        }
    }
    return out;
}

StratumTable strataTable(const ClassStrata& classes, const Integer& q, int genus, const Integer& classNumber) {
    StratumTable t;
    t.genus = genus;
    t.q = q;
    t.classNumber = classNumber;
    const int rows = std::max(0, 2 * genus - 1);
    if (static_cast<int>(classes.h0ByDegree.size()) != rows) {
        throw StratificationError("classification covers " + std::to_string(classes.h0ByDegree.size()) +
                                  " degrees, expected " + std::to_string(rows));
    }
    t.b.assign(static_cast<std::size_t>(rows), std::vector<Integer>(static_cast<std::size_t>(genus + 1), Integer(0)));
    for (int n = 0; n < rows; ++n) {
        auto& row = t.b[static_cast<std::size_t>(n)];
        Integer special = 0;
        for (const auto& [key, nu] : classes.h0ByDegree[static_cast<std::size_t>(n)]) {
            if (nu > genus) {
                throw StratificationError("degree " + std::to_string(n) + " class with h0 = " + std::to_string(nu) +
                                          " > g");
            }
            row[static_cast<std::size_t>(nu)] += 1;
            special += 1;
        }
        if (special > classNumber) {
            throw StratificationError("degree " + std::to_string(n) + " has " + special.get_str() +
                                      " effective classes but h = " + classNumber.get_str());
        }
        row[0] = classNumber - special;
    }
    if (const auto v = stratumTableViolation(t); !v.empty()) throw StratificationError(v);
    return t;
}

StratumTable strataTable(const Jacobian& jac, const PlaceTable& places, const LPolynomial& L) {
    return strataTable(classifyEffectiveDivisors(jac, places), L.q, jac.genus(), classNumber(L));
}

std::string stratumTableViolation(const StratumTable& t) {
    const int g = t.genus;
    const int rows = std::max(0, 2 * g - 1);
    auto where = [](int n, int nu) { return "b[" + std::to_string(n) + "][" + std::to_string(nu) + "]"; };
    if (static_cast<int>(t.b.size()) != rows) return "shape: expected " + std::to_string(rows) + " rows";
    for (const auto& row : t.b) {
        if (static_cast<int>(row.size()) != g + 1) return "shape: expected rows of length " + std::to_string(g + 1);
    }
    for (int n = 0; n < rows; ++n) {
        Integer sum = 0;
        for (int nu = 0; nu <= g; ++nu) {
            if (t.at(n, nu) < 0) return "negative entry " + where(n, nu);
            sum += t.at(n, nu);
        }
        if (sum != t.classNumber) return "row sum: row " + std::to_string(n) + " sums to " + sum.get_str();
    }
    if (rows == 0) return {};
    if (t.at(0, 1) != 1) return "zero section: b[0][1] = " + t.at(0, 1).get_str();
    for (int nu = 2; nu <= g; ++nu) {
        if (t.at(0, nu) != 0) return "zero section: " + where(0, nu) + " = " + t.at(0, nu).get_str();
    }
    for (int n = 0; n < rows; ++n) {
        for (int nu = 0; nu <= g; ++nu) {
            const int n2 = 2 * g - 2 - n;
            const int nu2 = nu - n + g - 1;
            const Integer partner = (nu2 >= 0 && nu2 <= g) ? t.at(n2, nu2) : Integer(0);
            if (t.at(n, nu) != partner) {
                return "duality: " + where(n, nu) + " = " + t.at(n, nu).get_str() + " but " + where(n2, nu2) + " = " +
                       partner.get_str();
            }
            if (nu >= std::max(1, n - g + 2) && 2 * nu > n + 2 && t.at(n, nu) != 0) {
                return "Clifford: " + where(n, nu) + " = " + t.at(n, nu).get_str();
            }
            if (nu < std::max(0, n - g + 1) && t.at(n, nu) != 0) {
                return "Riemann-Roch: " + where(n, nu) + " = " + t.at(n, nu).get_str();
            }
        }
    }
    return {};
}

}  // namespace bizeta
