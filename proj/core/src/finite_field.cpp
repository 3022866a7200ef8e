#include "bizeta/finite_field.hpp"

#include <algorithm>
#include <limits>

namespace bizeta {

bool isPrime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

namespace {

using Digits = std::vector<std::uint32_t>;

// Minimal dense arithmetic over F_p used only to pick and certify the modulus.
void trimDigits(Digits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Digits polyMulMod(const Digits& a, const Digits& b, const Digits& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Digits r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
        }
    }
    // m is monic
    const std::size_t dm = m.size() - 1;
    for (std::size_t i = r.size(); i-- > dm;) {
        const std::uint64_t c = r[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dm; ++j) {
            r[i - dm + j] = static_cast<std::uint32_t>((r[i - dm + j] + (p - c) * m[j]) % p);
        }
    }
    trimDigits(r);
    return r;
}

std::uint64_t invMod(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
    while (nr != 0) {
        const std::int64_t qq = r / nr;
        std::tie(t, nt) = std::make_pair(nt, t - qq * nt);
        std::tie(r, nr) = std::make_pair(nr, r - qq * nr);
    }
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
}

Digits polyMod(Digits a, const Digits& b, std::uint64_t p) {
    trimDigits(a);
    const std::uint64_t inv = invMod(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t c = a.back() * inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
            a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p - c) * b[j] % p) % p);
        }
        trimDigits(a);
    }
    return a;
}

bool coprime(Digits a, Digits b, std::uint64_t p) {
    trimDigits(a);
    trimDigits(b);
    while (!b.empty()) {
        Digits r = polyMod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a.size() == 1;
}

bool primeFieldIrreducible(const Digits& f, std::uint64_t p) {
    const std::size_t d = f.size() - 1;
    Digits xp{0, 1};
    for (std::size_t j = 1; j <= d / 2; ++j) {
        // xp <- xp^p mod f
        Digits base = xp, acc{1};
        for (std::uint64_t e = p; e > 0; e >>= 1) {
            if (e & 1) acc = polyMulMod(acc, base, f, p);
            base = polyMulMod(base, base, f, p);
        }
        xp = acc;
        Digits diff = xp;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = static_cast<std::uint32_t>((diff[1] + p - 1) % p);
        if (!coprime(f, diff, p)) return false;
    }
    return true;
}

std::vector<std::uint64_t> primeFactors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

struct FiniteField::Tables {
    std::uint32_t p = 0;
    unsigned k = 0;
    std::uint32_t q = 0;
    Digits modulus;
    std::vector<std::uint32_t> exp;  // exp[i] = g^i, length 2(q-1) so sums of logs need no reduction
    std::vector<std::uint32_t> log;  // log[rep], rep != 0

    Digits decode(std::uint32_t rep) const {
        Digits d(k, 0);
        for (unsigned i = 0; i < k; ++i) {
            d[i] = rep % p;
            rep /= p;
        }
        return d;
    }
    std::uint32_t encode(const Digits& d) const {
        std::uint64_t r = 0;
        for (std::size_t i = d.size(); i-- > 0;) r = r * p + d[i];
        return static_cast<std::uint32_t>(r);
    }
    std::uint32_t slowMul(std::uint32_t a, std::uint32_t b) const {
        Digits da = decode(a), db = decode(b);
        trimDigits(da);
        trimDigits(db);
        return encode(polyMulMod(da, db, modulus, p));
    }
    std::uint32_t slowPow(std::uint32_t a, std::uint64_t e) const {
        std::uint32_t acc = 1;
        for (; e > 0; e >>= 1) {
            if (e & 1) acc = slowMul(acc, a);
            a = slowMul(a, a);
        }
        return acc;
    }
};

FiniteField FiniteField::make(std::uint64_t p, unsigned k, const Limits& limits) {
    if (!isPrime(p)) throw NotPrimeError(std::to_string(p) + " is not prime");
    if (k == 0) throw PreconditionError("extension degree must be at least 1");
    const std::uint64_t q = saturatingPow(p, k);
    if (q >= (std::uint64_t(1) << 31)) {
        throw CapacityError("field of order " + std::to_string(p) + "^" + std::to_string(k) + " is too large");
    }
    requireCapacity(limits, q, "field F_" + std::to_string(p) + "^" + std::to_string(k));

    auto t = std::make_shared<Tables>();
    t->p = static_cast<std::uint32_t>(p);
    t->k = k;
    t->q = static_cast<std::uint32_t>(q);

    if (k == 1) {
        t->modulus = {0, 1};
    } else {
        const std::uint64_t candidates = saturatingPow(p, k);
        for (std::uint64_t idx = 0; idx < candidates; ++idx) {
            Digits f(k + 1, 0);
            std::uint64_t rest = idx;
            for (unsigned i = 0; i < k; ++i) {
                f[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            f[k] = 1;
            if (f[0] == 0) continue;
            if (primeFieldIrreducible(f, p)) {
                t->modulus = std::move(f);
                break;
            }
        }
    }

    // Primitive element: smallest g whose order is exactly q-1.
    const std::uint64_t n = q - 1;
    const auto factors = primeFactors(n);
    std::uint32_t g = 1;
    if (n > 1) {
        for (g = 2; g < q; ++g) {
            bool primitive = t->slowPow(g, n) == 1;
            for (auto r : factors) {
                if (!primitive) break;
                primitive = t->slowPow(g, n / r) != 1;
            }
            if (primitive) break;
        }
    }
    t->exp.assign(2 * n, 0);
    t->log.assign(q, 0);
    std::uint32_t cur = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        t->exp[i] = cur;
        t->exp[i + n] = cur;
        t->log[cur] = static_cast<std::uint32_t>(i);
        cur = t->slowMul(cur, g);
    }
    return FiniteField(std::move(t));
}

std::uint32_t FiniteField::characteristic() const { return t_->p; }
unsigned FiniteField::degree() const { return t_->k; }
std::uint32_t FiniteField::order() const { return t_->q; }
const std::vector<std::uint32_t>& FiniteField::modulus() const { return t_->modulus; }

Fq FiniteField::gen() const { return t_->k == 1 ? Fq{0} : Fq{t_->p}; }

Fq FiniteField::fromInt(std::int64_t v) const {
    const std::int64_t p = t_->p;
    return Fq{static_cast<std::uint32_t>(((v % p) + p) % p)};
}

Fq FiniteField::fromCoefficients(std::span<const std::uint32_t> coeffs) const {
    Digits d(coeffs.begin(), coeffs.end());
    trimDigits(d);
    Digits r = d.size() > t_->k ? polyMod(d, t_->modulus, t_->p) : d;
    for (auto& c : r) c %= t_->p;
    return Fq{t_->encode(r)};
}

std::vector<std::uint32_t> FiniteField::coefficients(Fq a) const { return t_->decode(a.rep); }

Fq FiniteField::add(Fq a, Fq b) const {
    const std::uint32_t p = t_->p;
    if (p == 2) return Fq{a.rep ^ b.rep};
    if (t_->k == 1) {
        const std::uint32_t s = a.rep + b.rep;
        return Fq{s >= p ? s - p : s};
    }
    std::uint32_t x = a.rep, y = b.rep, r = 0, m = 1;
    while (x != 0 || y != 0) {
        const std::uint32_t s = x % p + y % p;
        r += (s >= p ? s - p : s) * m;
        x /= p;
        y /= p;
        m *= p;
    }
    return Fq{r};
}

Fq FiniteField::neg(Fq a) const {
    const std::uint32_t p = t_->p;
    if (p == 2) return a;
    if (t_->k == 1) return Fq{a.rep == 0 ? 0 : p - a.rep};
    std::uint32_t x = a.rep, r = 0, m = 1;
    while (x != 0) {
        const std::uint32_t d = x % p;
        r += (d == 0 ? 0 : p - d) * m;
        x /= p;
        m *= p;
    }
    return Fq{r};
}

Fq FiniteField::sub(Fq a, Fq b) const { return add(a, neg(b)); }

Fq FiniteField::mul(Fq a, Fq b) const {
    if (a.rep == 0 || b.rep == 0) return Fq{0};
    return Fq{t_->exp[t_->log[a.rep] + t_->log[b.rep]]};
}

Fq FiniteField::inv(Fq a) const {
    if (a.rep == 0) throw DivisionByZeroError("inverse of zero in F_" + std::to_string(t_->q));
    const std::uint32_t n = t_->q - 1;
    const std::uint32_t l = t_->log[a.rep];
    return Fq{t_->exp[l == 0 ? 0 : n - l]};
}

Fq FiniteField::pow(Fq a, std::uint64_t e) const {
    if (e == 0) return one();
    if (a.rep == 0) return zero();
    const std::uint64_t n = t_->q - 1;
    const std::uint64_t l = t_->log[a.rep];
    return Fq{t_->exp[static_cast<std::size_t>((l * (e % n)) % n)]};
}

bool FiniteField::isSquare(Fq a) const {
    if (a.rep == 0 || t_->p == 2) return true;
    return t_->log[a.rep] % 2 == 0;
}

bool FiniteField::sqrt(Fq a, Fq& root) const {
    if (a.rep == 0) {
        root = zero();
        return true;
    }
    const std::uint64_t n = t_->q - 1;
    const std::uint64_t l = t_->log[a.rep];
    if (t_->p == 2) {
        // x -> x^2 is a bijection; its inverse is x -> x^{q/2}.
        root = Fq{t_->exp[static_cast<std::size_t>((l * (t_->q / 2)) % n)]};
        return true;
    }
    if (l % 2 != 0) return false;
    root = Fq{t_->exp[l / 2]};
    return true;
}

std::uint32_t FiniteField::trace(Fq a) const {
    Fq acc = zero(), cur = a;
    for (unsigned i = 0; i < t_->k; ++i) {
        acc = add(acc, cur);
        cur = frobenius(cur);
    }
    return acc.rep;
}

std::uint32_t FiniteField::log(Fq a) const {
    if (a.rep == 0) throw DivisionByZeroError("logarithm of zero");
    return t_->log[a.rep];
}

Fq FiniteField::primitive() const { return Fq{t_->q == 2 ? 1u : t_->exp[1]}; }

std::string FiniteField::format(Fq a) const {
    if (t_->k == 1) return std::to_string(a.rep);
    const Digits d = t_->decode(a.rep);
    std::string out;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(d[i]);
            continue;
        }
        if (d[i] != 1) out += std::to_string(d[i]) + "*";
        out += "a";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

bool FiniteField::operator==(const FiniteField& other) const {
    return t_ == other.t_ || (t_->p == other.t_->p && t_->k == other.t_->k);
}

FieldEmbedding::FieldEmbedding(FiniteField small, FiniteField large)
    : small_(std::move(small)), large_(std::move(large)) {
    if (small_.characteristic() != large_.characteristic() || large_.degree() % small_.degree() != 0) {
        throw PreconditionError("no embedding of F_" + std::to_string(small_.order()) + " into F_" +
                                std::to_string(large_.order()));
    }
    // Root of small's modulus in large (only needed when small is not prime).
    Fq z = large_.zero();
    if (small_.degree() > 1) {
        const auto& mod = small_.modulus();
        bool found = false;
        for (std::uint32_t r = 0; r < large_.order() && !found; ++r) {
            Fq acc = large_.zero();
            for (std::size_t i = mod.size(); i-- > 0;) {
                acc = large_.add(large_.mul(acc, Fq{r}), large_.fromInt(mod[i]));
            }
            if (acc.rep == 0) {
                z = Fq{r};
                found = true;
            }
        }
        if (!found) throw ConsistencyError("modulus has no root in the extension field");
    }
    image_.resize(small_.order());
    back_.assign(large_.order(), -1);
    for (std::uint32_t r = 0; r < small_.order(); ++r) {
        const auto digits = small_.coefficients(Fq{r});
        Fq acc = large_.zero();
        for (std::size_t i = digits.size(); i-- > 0;) {
            acc = large_.add(large_.mul(acc, z), large_.fromInt(digits[i]));
        }
        image_[r] = acc;
        back_[acc.rep] = r;
    }
}

bool FieldEmbedding::preimage(Fq b, Fq& a) const {
    if (b.rep >= back_.size() || back_[b.rep] < 0) return false;
    a = Fq{static_cast<std::uint32_t>(back_[b.rep])};
    return true;
}

}  // namespace bizeta
