#include "bizeta/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "bizeta/poly_parse.hpp"
#include "json.hpp"

namespace bizeta {

namespace {

using json = nlohmann::json;

[[noreturn]] void parseFail(std::size_t line, std::size_t column, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg);
}

bool isBlank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

// A piece of the input with its 1-based position.
struct Segment {
    std::string_view text;
    std::size_t line;
    std::size_t column;
};

Segment trim(Segment s) {
    while (!s.text.empty() && isBlank(s.text.front())) {
        s.text.remove_prefix(1);
        ++s.column;
    }
    while (!s.text.empty() && isBlank(s.text.back())) s.text.remove_suffix(1);
    return s;
}

// Splits on ';' and '\n'.
std::vector<Segment> splitFields(std::string_view text) {
    std::vector<Segment> out;
    std::size_t line = 1, column = 1, start = 0, startColumn = 1;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        if (i == text.size() || text[i] == ';' || text[i] == '\n') {
            out.push_back(trim({text.substr(start, i - start), line, startColumn}));
            if (i < text.size() && text[i] == '\n') {
                ++line;
                column = 0;
            }
            start = i + 1;
            startColumn = column + 1;
        }
        ++column;
    }
    return out;
}

std::uint64_t parseUnsigned(const Segment& s, const std::string& what) {
    if (s.text.empty()) parseFail(s.line, s.column, "missing value for " + what);
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < s.text.size(); ++i) {
        const char c = s.text[i];
        if (c < '0' || c > '9') parseFail(s.line, s.column + i, "expected a non-negative integer for " + what);
        if (v > (UINT64_MAX - 9) / 10) parseFail(s.line, s.column, what + " is too large");
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return v;
}

Rational parseRational(const Segment& s, const std::string& what) {
    const std::string t(s.text);
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    const std::size_t digitsStart = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    bool ok = i > digitsStart;
    if (ok && i < t.size() && t[i] == '/') {
        const std::size_t denStart = ++i;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
        ok = i > denStart;
    }
    if (!ok || i != t.size()) parseFail(s.line, s.column, "expected a rational a/b for " + what + ", got '" + t + "'");
    const std::string clean = t[0] == '+' ? t.substr(1) : t;
    Rational r;
    r.set_str(clean, 10);
    if (r.get_den() == 0) parseFail(s.line, s.column, "zero denominator in " + what);
    r.canonicalize();
    return r;
}

std::string formatIntegerPoly(const std::vector<Integer>& c) {
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        const Integer mag = abs(c[i]);
        if (c[i] < 0) out += "-";
        else if (!out.empty()) out += "+";
        if (i == 0 || mag != 1) out += mag.get_str() + (i == 0 ? "" : "*");
        if (i > 0) out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

FqPoly toFqPoly(const FiniteField& F, const std::vector<Integer>& c) {
    std::vector<Fq> out;
    const Integer p(static_cast<unsigned long>(F.characteristic()));
    for (const auto& x : c) {
        Integer r = x % p;
        if (r < 0) r += p;
        out.push_back(F.fromInt(r.get_si()));
    }
    return FqPoly(F, std::move(out));
}

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool sameCoefficients(const std::vector<Integer>& a, const std::vector<Integer>& b) { return a == b; }

std::string joinIntegers(const std::vector<Integer>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + x.get_str();
    return s;
}

void analyzeGenusZero(AnalysisReport& r, const Integer& q, unsigned order) {
    r.genus = 0;
    r.q = q;
    r.L = LPolynomial{{Integer(1)}, q, 0};
    r.strata = StratumTable{0, q, Integer(1), {}};
    r.measure = countingMeasure(*r.strata);
    r.zeta = numeratorP(r.measure);
    r.theorem2 = verifyTheorem2(r.zeta, r.measure);
    r.theorem3 = verifyTheorem3(r.zeta, r.measure);
    r.kapranov = kapranovIdentityCheck(*r.strata, *r.L, order);
    r.consistency.add("P(T,q) = L", specializeU(r.zeta, Rational(q)) == r.L->toQPoly());
}

void analyzeCurve(AnalysisReport& r, const CurveSpec& spec, const RunConfig& config) {
    const Limits& limits = config.limits;
    const unsigned m = config.baseChange;
    if (m < 1) throw PreconditionError("base-change exponent must be >= 1");
    const FiniteField F = FiniteField::make(spec.p, spec.k, limits);
    const FqPoly f = toFqPoly(F, spec.f);
    const FqPoly h = toFqPoly(F, spec.h);

    if (f.degree() == 1 && h.degree() <= 0) {
        // y^2 + c y = a x + b is a conic: genus 0.
        Integer q;
        mpz_ui_pow_ui(q.get_mpz_t(), F.order(), m);
        analyzeGenusZero(r, q, config.seriesOrder.value_or(2));
        return;
    }

    const HyperellipticModel base = validateModel(F, f, h);
    const int g = base.genus();
    r.genus = g;

    std::optional<LiftedModel> lifted;
    if (m > 1) lifted = liftModel(base, m, limits);
    const HyperellipticModel& model = lifted ? lifted->model : base;
    const Integer q(static_cast<unsigned long>(model.field().order()));
    r.q = q;

    for (int i = 1; i <= 2 * g; ++i) r.pointCounts.push_back(countPoints(model, static_cast<unsigned>(i), limits));
    r.L = lPolynomialFromCounts({r.pointCounts.begin(), r.pointCounts.begin() + g}, q, g);
    const LPolynomial& L = *r.L;
    r.consistency.add("L reproduces a_1..a_2g", countsFromL(L, 2 * g) == r.pointCounts,
                      "a = " + joinIntegers(r.pointCounts));
    if (m > 1) {
        std::vector<Integer> baseCounts;
        for (int i = 1; i <= g; ++i) baseCounts.push_back(countPoints(base, static_cast<unsigned>(i), limits));
        const LPolynomial predicted = baseChangeL(lPolynomialFromCounts(baseCounts, Integer(static_cast<unsigned long>(F.order())), g), m);
        r.consistency.add("L over F_{q^m} = base change of L", sameCoefficients(predicted.coeffs, L.coeffs),
                          "predicted " + predicted.toQPoly().toString('T'));
    }

    const unsigned order = config.seriesOrder.value_or(static_cast<unsigned>(2 * g + 2));
    const int depth = std::max({1, 2 * g, static_cast<int>(order)});
    const PlaceTable places = enumeratePlaces(model, depth, limits);
    for (int n = 1; n <= 2 * g; ++n) {
        Integer sum = 0;
        for (int d = 1; d <= n; ++d) {
            if (n % d == 0) sum += Integer(d) * Integer(static_cast<unsigned long>(places.count(d)));
        }
        r.consistency.add("places: sum d N_d = a_" + std::to_string(n), sum == r.pointCounts[static_cast<std::size_t>(n - 1)],
                          sum.get_str() + " vs " + r.pointCounts[static_cast<std::size_t>(n - 1)].get_str());
    }
    const std::vector<Integer> effective = effectiveDivisorCounts(places, static_cast<int>(order));
    const std::vector<Integer> symmetric = symmetricProductCounts(L, order);
    for (unsigned n = 0; n <= order; ++n) {
        r.consistency.add("effective divisors of degree " + std::to_string(n) + " = s_n", effective[n] == symmetric[n],
                          effective[n].get_str() + " vs " + symmetric[n].get_str());
    }

    const Jacobian jac(model);
    const Integer h0 = classNumber(L);
    const Integer scanned(static_cast<unsigned long>(jacobianElements(jac, limits).size()));
    r.consistency.add("Jacobian scan = L(1)", scanned == h0, scanned.get_str() + " vs " + h0.get_str());

    r.strata = strataTable(jac, places, L);
    r.measure = countingMeasure(*r.strata);
    r.zeta = numeratorP(r.measure);
    r.theorem2 = verifyTheorem2(r.zeta, r.measure);
    r.theorem3 = verifyTheorem3(r.zeta, r.measure);
    r.kapranov = kapranovIdentityCheck(*r.strata, L, order);
    r.consistency.add("P(T,q) = L", specializeU(r.zeta, Rational(q)) == L.toQPoly(),
                      "P(T,q) = " + specializeU(r.zeta, Rational(q)).toString('T'));
}

json checksJson(const CheckReport& c) {
    json out = json::array();
    for (const auto& x : c.checks) out.push_back({{"name", x.name}, {"passed", x.passed}, {"detail", x.detail}});
    return out;
}

template <class T>
json matrixJson(const std::vector<std::vector<T>>& m) {
    json out = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& x : row) r.push_back(x.get_str());
        out.push_back(r);
    }
    return out;
}

std::string textChecks(const std::string& title, const CheckReport& c) {
    if (c.checks.empty()) return {};
    std::string s = title + ":\n";
    for (const auto& x : c.checks) {
        s += std::string("  [") + (x.passed ? "pass" : "FAIL") + "] " + x.name;
        if (!x.detail.empty()) s += "  (" + x.detail + ")";
        s += "\n";
    }
    return s;
}

BatchEntry runBatchLine(std::size_t lineNo, const std::string& line, const RunConfig& defaults) {
    BatchEntry e;
    e.line = lineNo;
    e.input = line;
    try {
        RunConfig config = defaults;
        config.measureTablePath.reset();
        config.timing = false;
        std::string specText = line;
        if (!line.empty() && line.front() == '{') {
            json j;
            try {
                j = json::parse(line);
            } catch (const json::exception& ex) {
                throw ParseError(std::string("bad JSON record: ") + ex.what());
            }
            if (j.contains("spec") && j["spec"].is_string()) specText = j["spec"].get<std::string>();
            else if (j.contains("source") && j["source"].is_string()) specText = j["source"].get<std::string>();
            else throw ParseError("JSON record has no \"spec\" string");
            if (j.contains("base_change")) {
                if (!j["base_change"].is_number_unsigned()) throw ParseError("\"base_change\" must be a positive integer");
                config.baseChange = j["base_change"].get<unsigned>();
            }
        }
        config.spec = parseCurveSpec(specText);
        const AnalysisReport r = runAnalyze(config);
        e.passed = r.allPassed();
        e.exitCode = e.passed ? 0 : 4;
        if (!e.passed) {
            for (const auto* c : {&r.consistency, &r.theorem2, &r.theorem3, &r.kapranov}) {
                for (const auto& x : c->checks) {
                    if (!x.passed && e.message.empty()) e.message = "check failed: " + x.name;
                }
            }
        }
    } catch (const std::exception& ex) {
        e.passed = false;
        e.exitCode = exitCodeFor(ex);
        e.message = ex.what();
    }
    return e;
}

}  // namespace

CurveSpec parseCurveSpec(std::string_view text) {
    CurveSpec spec;
    bool seen[4] = {false, false, false, false};
    static constexpr const char* keys[4] = {"p", "k", "f", "h"};
    for (const Segment& field : splitFields(text)) {
        if (field.text.empty()) continue;
        const std::size_t eq = field.text.find('=');
        if (eq == std::string_view::npos) parseFail(field.line, field.column, "expected key=value");
        const Segment key = trim({field.text.substr(0, eq), field.line, field.column});
        const Segment value = trim({field.text.substr(eq + 1), field.line, field.column + eq + 1});
        int which = -1;
        for (int i = 0; i < 4; ++i) {
            if (key.text == keys[i]) which = i;
        }
        if (which < 0) parseFail(key.line, key.column, "unknown key '" + std::string(key.text) + "' (expected p, k, f or h)");
        if (seen[which]) parseFail(key.line, key.column, "duplicate key '" + std::string(key.text) + "'");
        seen[which] = true;
        switch (which) {
            case 0:
                spec.p = parseUnsigned(value, "p");
                if (!isPrime(spec.p)) throw NotPrimeError("p=" + std::to_string(spec.p) + ": " + std::to_string(spec.p) + " is not prime");
                break;
            case 1: {
                const std::uint64_t k = parseUnsigned(value, "k");
                if (k < 1 || k > 64) parseFail(value.line, value.column, "k must be between 1 and 64");
                spec.k = static_cast<unsigned>(k);
                break;
            }
            case 2:
            case 3: {
                if (value.text.empty()) parseFail(value.line, value.column, "missing polynomial");
                auto poly = parseIntegerPoly(value.text, 'x', value.line, value.column - 1);
                (which == 2 ? spec.f : spec.h) = std::move(poly);
                break;
            }
        }
    }
    if (!seen[0]) parseFail(1, 1, "missing p");
    if (!seen[2]) parseFail(1, 1, "missing f");
    return spec;
}

HyperellipticModel buildModel(const CurveSpec& spec, const Limits& limits) {
    const FiniteField F = FiniteField::make(spec.p, spec.k, limits);
    return validateModel(F, toFqPoly(F, spec.f), toFqPoly(F, spec.h));
}

std::string formatCurveSpec(const CurveSpec& spec) {
    return "p=" + std::to_string(spec.p) + "; k=" + std::to_string(spec.k) + "; f=" + formatIntegerPoly(spec.f) +
           "; h=" + formatIntegerPoly(spec.h);
}

Measure parseMeasureTable(std::string_view text) {
    std::optional<int> genus;
    std::optional<Rational> pic0;
    std::vector<std::vector<Rational>> values;
    std::vector<std::vector<bool>> filled;
    std::size_t lineNo = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        ++lineNo;
        Segment line = trim({text.substr(pos, end - pos), lineNo, 1});
        pos = end + 1;
        if (line.text.empty() || line.text.front() == '#') {
            if (end == text.size()) break;
            continue;
        }
        if (!genus) {
            // Header: g=<int>; pic0=<rational>
            for (const Segment& raw : splitFields(line.text)) {
                const Segment field{raw.text, lineNo, raw.column};
                if (field.text.empty()) continue;
                const std::size_t eq = field.text.find('=');
                if (eq == std::string_view::npos) parseFail(lineNo, field.column, "expected key=value in header");
                const Segment key = trim({field.text.substr(0, eq), lineNo, field.column});
                const Segment value = trim({field.text.substr(eq + 1), lineNo, field.column + eq + 1});
                if (key.text == "g") {
                    const auto g = parseUnsigned(value, "g");
                    if (g > 64) parseFail(lineNo, value.column, "genus too large");
                    genus = static_cast<int>(g);
                } else if (key.text == "pic0") {
                    pic0 = parseRational(value, "pic0");
                } else {
                    parseFail(lineNo, key.column, "unknown header key '" + std::string(key.text) + "'");
                }
            }
            if (!genus || !pic0) parseFail(lineNo, 1, "header must be 'g=<int>; pic0=<rational>'");
            const std::size_t rows = static_cast<std::size_t>(std::max(0, 2 * *genus - 1));
            values.assign(rows, std::vector<Rational>(static_cast<std::size_t>(*genus + 1), Rational(0)));
            filled.assign(rows, std::vector<bool>(static_cast<std::size_t>(*genus + 1), false));
        } else {
            std::vector<Segment> tokens;
            std::size_t i = 0;
            while (i < line.text.size()) {
                while (i < line.text.size() && isBlank(line.text[i])) ++i;
                const std::size_t start = i;
                while (i < line.text.size() && !isBlank(line.text[i])) ++i;
                if (i > start) tokens.push_back({line.text.substr(start, i - start), lineNo, line.column + start});
            }
            if (tokens.size() != 3) parseFail(lineNo, line.column, "expected 'n nu value'");
            const auto n = parseUnsigned(tokens[0], "n");
            const auto nu = parseUnsigned(tokens[1], "nu");
            if (n >= values.size() || nu > static_cast<std::uint64_t>(*genus)) {
                parseFail(lineNo, tokens[0].column, "entry (" + std::to_string(n) + ", " + std::to_string(nu) +
                                                        ") outside 0 <= n <= 2g-2, 0 <= nu <= g");
            }
            if (filled[n][nu]) parseFail(lineNo, tokens[0].column, "duplicate entry");
            filled[n][nu] = true;
            values[n][nu] = parseRational(tokens[2], "value");
        }
        if (end == text.size()) break;
    }
    if (!genus) parseFail(lineNo == 0 ? 1 : lineNo, 1, "missing header 'g=<int>; pic0=<rational>'");
    return tableMeasure(*genus, std::move(values), *pic0);
}

bool AnalysisReport::allPassed() const {
    return theorem2.allPassed() && theorem3.allPassed() && kapranov.allPassed() && consistency.allPassed();
}

AnalysisReport runAnalyze(const RunConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    AnalysisReport r;
    r.baseChange = config.baseChange;
    if (config.measureTablePath) {
        if (config.spec) throw PreconditionError("give either a curve spec or a measure table, not both");
        const Measure m = parseMeasureTable(readFile(*config.measureTablePath));
        if (config.genus && *config.genus != m.genus) {
            throw PreconditionError("--genus " + std::to_string(*config.genus) + " disagrees with the table header g=" +
                                    std::to_string(m.genus));
        }
        r.source = "measure-table:" + *config.measureTablePath;
        r.genus = m.genus;
        r.measure = m;
        r.zeta = numeratorP(m);
        r.theorem2 = verifyTheorem2(r.zeta, m);
        r.theorem3 = verifyTheorem3(r.zeta, m);
    } else if (config.spec) {
        r.source = formatCurveSpec(*config.spec);
        analyzeCurve(r, *config.spec, config);
    } else {
        throw PreconditionError("no curve spec or measure table given");
    }
    if (config.timing) r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string renderText(const AnalysisReport& r) {
    std::ostringstream s;
    s << "source:        " << r.source << "\n";
    s << "genus:         " << r.genus << "\n";
    if (r.q) s << "q:             " << r.q->get_str() << (r.baseChange > 1 ? "  (base change m=" + std::to_string(r.baseChange) + ")" : "") << "\n";
    if (!r.pointCounts.empty()) s << "point counts:  " << joinIntegers(r.pointCounts) << "\n";
    if (r.L) s << "L(T):          " << r.L->toQPoly().toString('T') << "\n";
    s << "pic0:          " << r.measure.pic0.get_str() << "\n";
    if (!r.measure.values.empty()) {
        s << "strata v[n][nu] (rows n = 0.." << r.measure.values.size() - 1 << ", nu = 0.." << r.genus << "):\n";
        for (std::size_t n = 0; n < r.measure.values.size(); ++n) {
            s << "  n=" << n << ":";
            for (const auto& x : r.measure.values[n]) s << " " << x.get_str();
            s << "\n";
        }
    }
    s << "P(T,u):        " << r.zeta.P.toString() << "\n";
    s << textChecks("Theorem 2", r.theorem2) << textChecks("Theorem 3", r.theorem3)
      << textChecks("Kapranov identity", r.kapranov) << textChecks("consistency", r.consistency);
    s << "result:        " << (r.allPassed() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    if (r.seconds) s << "time:          " << *r.seconds << " s\n";
    return s.str();
}

std::string renderMachine(const AnalysisReport& r) {
    json j;
    j["all_passed"] = r.allPassed();
    j["base_change"] = r.baseChange;
    j["checks"] = {{"consistency", checksJson(r.consistency)},
                   {"kapranov", checksJson(r.kapranov)},
                   {"theorem2", checksJson(r.theorem2)},
                   {"theorem3", checksJson(r.theorem3)}};
    j["genus"] = r.genus;
    j["source"] = r.source;
    j["pic0"] = r.measure.pic0.get_str();
    j["lefschetz"] = r.measure.lefschetz ? json(r.measure.lefschetz->get_str()) : json(nullptr);
    j["q"] = r.q ? json(r.q->get_str()) : json(nullptr);
    j["measure"] = matrixJson(r.measure.values);
    j["strata"] = r.strata ? matrixJson(r.strata->b) : json(nullptr);
    json counts = json::array();
    for (const auto& a : r.pointCounts) counts.push_back(a.get_str());
    j["point_counts"] = counts;
    if (r.L) {
        json l = json::array();
        for (const auto& c : r.L->coeffs) l.push_back(c.get_str());
        j["l_polynomial"] = l;
    } else {
        j["l_polynomial"] = nullptr;
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : r.zeta.P.rows()) rows.push_back(row.coeffs());
    j["numerator"] = {{"coefficients", matrixJson(rows)}, {"text", r.zeta.P.toString()}};
    if (r.seconds) {
        std::ostringstream t;
        t.precision(6);
        t << std::fixed << *r.seconds;
        j["timing"] = {{"seconds", t.str()}};
    }
    return j.dump(2) + "\n";
}

std::string canonicalize(std::string_view machineReport) {
    try {
        return json::parse(machineReport).dump(2) + "\n";
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed machine report: ") + e.what());
    }
}

int exitCodeFor(const std::exception& e) {
    if (const auto* err = dynamic_cast<const Error*>(&e)) {
        switch (err->kind()) {
            case ErrorKind::input: return 2;
            case ErrorKind::capacity: return 3;
            case ErrorKind::consistency: return 4;
        }
    }
    return 1;
}

int runVerify(const RunConfig& config) { return runAnalyze(config).allPassed() ? 0 : 4; }

std::string BatchSummary::render() const {
    std::ostringstream s;
    for (const auto& e : entries) {
        s << "line " << e.line << ": " << (e.passed ? "PASS" : "FAIL (exit " + std::to_string(e.exitCode) + ")") << "  "
          << e.input;
        if (!e.message.empty()) s << "  -- " << e.message;
        s << "\n";
    }
    s << "curves: " << entries.size() << ", passed: " << passed << ", failed: " << failed << "\n";
    return s.str();
}

BatchSummary runBatch(const std::string& inputPath, const RunConfig& defaults, unsigned workers) {
    const std::string text = readFile(inputPath);
    std::vector<std::pair<std::size_t, std::string>> lines;
    std::istringstream in(text);
    std::string line;
    for (std::size_t n = 1; std::getline(in, line); ++n) {
        const Segment t = trim({line, n, 1});
        if (t.text.empty() || t.text.front() == '#') continue;
        lines.emplace_back(n, std::string(t.text));
    }

    BatchSummary summary;
    summary.entries.resize(lines.size());
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, lines.size())));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < lines.size(); i = next++) {
            summary.entries[i] = runBatchLine(lines[i].first, lines[i].second, defaults);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();

    for (const auto& e : summary.entries) (e.passed ? summary.passed : summary.failed) += 1;
    return summary;
}

}  // namespace bizeta
