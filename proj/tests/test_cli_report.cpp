#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "support.hpp"

using namespace bizeta;

namespace {

const std::string dataDir = BIZETA_TEST_DATA;

std::string readAll(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct CliResult {
    int code;
    std::string out;
};

CliResult cli(const std::string& args) {
    const auto out = std::filesystem::temp_directory_path() / ("bizeta_cli_" + std::to_string(::getpid()) + ".txt");
    const std::string cmd = std::string("\"") + BIZETA_CLI + "\" " + args + " > \"" + out.string() + "\" 2>&1";
    const int status = std::system(cmd.c_str());
    CliResult r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, readAll(out.string())};
    std::filesystem::remove(out);
    return r;
}

RunConfig specConfig(const std::string& spec) {
    RunConfig c;
    c.spec = parseCurveSpec(spec);
    c.timing = false;
    return c;
}

}  // namespace

TEST_CASE("curve spec parsing") {
    const auto s = parseCurveSpec("p=3; f=x^3+x");
    CHECK(s.p == 3);
    CHECK(s.k == 1);
    CHECK(s.f == std::vector<Integer>{0, 1, 0, 1});
    CHECK(s.h.empty());
    CHECK(formatCurveSpec(s) == "p=3; k=1; f=x^3+x; h=0");
    const auto t = parseCurveSpec("p = 2\nk=2\nf=x^5+x^3+1\nh=x");
    CHECK(t.p == 2);
    CHECK(t.k == 2);
    CHECK(formatCurveSpec(t) == "p=2; k=2; f=x^5+x^3+1; h=x");
    CHECK(formatCurveSpec(parseCurveSpec("p=5; f=x^3+7*x+6")) == "p=5; k=1; f=x^3+7*x+6; h=0");

    CHECK_THROWS_WITH_AS(parseCurveSpec("p=4; f=x^3+x"), "p=4: 4 is not prime", NotPrimeError);
    CHECK_THROWS_AS(parseCurveSpec("f=x^3+x"), ParseError);
    CHECK_THROWS_AS(parseCurveSpec("p=3"), ParseError);
    CHECK_THROWS_AS(parseCurveSpec("p=3; p=5; f=x^3+x"), ParseError);
    CHECK_THROWS_AS(parseCurveSpec("p=3; g=x; f=x^3+x"), ParseError);
    CHECK_THROWS_WITH_AS(parseCurveSpec("p=3; f="), doctest::Contains("line 1, column 8"), ParseError);
    CHECK_THROWS_WITH_AS(parseCurveSpec("p=3\nf=x^3+*x"), doctest::Contains("line 2"), ParseError);
}

TEST_CASE("models built from specs are validated") {
    CHECK(buildModel(parseCurveSpec("p=3; f=x^5+1")).genus() == 2);
    CHECK(buildModel(parseCurveSpec("p=3; k=2; f=x^3+x")).field().order() == 9);
    CHECK_THROWS_AS(buildModel(parseCurveSpec("p=3; f=x^3")), SingularCurveError);
    CHECK_THROWS_AS(buildModel(parseCurveSpec("p=3; f=x^4+1")), ModelShapeError);
    CHECK_THROWS_AS(buildModel(parseCurveSpec("p=3; f=2*x^3+1")), ModelShapeError);
}

TEST_CASE("measure table parsing") {
    const Measure m = parseMeasureTable(readAll(dataDir + "/euler_g1.txt"));
    CHECK(m.genus == 1);
    CHECK(m.pic0 == 0);
    CHECK(m.at(0, 0) == -1);
    CHECK(m.at(0, 1) == 1);
    const Measure r = parseMeasureTable("g=1; pic0=1/2\n0 0 -1/2\n0 1 1\n");
    CHECK(r.pic0 == Rational(1, 2));
    CHECK_THROWS_AS(parseMeasureTable("g=1; pic0=4\n0 1 1\n0 1 1\n"), ParseError);
    CHECK_THROWS_AS(parseMeasureTable("g=1; pic0=4\n1 0 1\n"), ParseError);
    CHECK_THROWS_AS(parseMeasureTable("g=1\n0 1 1\n"), ParseError);
    CHECK_THROWS_AS(parseMeasureTable("g=1; pic0=4\n0 1\n"), ParseError);
    CHECK_THROWS_WITH_AS(parseMeasureTable(readAll(dataDir + "/corrupted_g2.txt")), doctest::Contains("row sum"),
                         InvalidMeasureError);
}

TEST_CASE("analysis of y^2 = x^5 + 1 over F_3") {
    const auto r = runAnalyze(specConfig("p=3; f=x^5+1"));
    CHECK(r.allPassed());
    CHECK(r.genus == 2);
    CHECK(r.pointCounts == std::vector<Integer>{4, 10, 28, 118});
    CHECK(r.zeta.P.toString() == "1 + (3 - u)*T + (6 - 2*u)*T^2 + (3*u - u^2)*T^3 + u^2*T^4");
    CHECK(r.measure.pic0 == 10);
    CHECK(!r.seconds.has_value());
    const std::string text = renderText(r);
    CHECK(text.find("1 + (3 - u)*T") != std::string::npos);
}

TEST_CASE("measure tables reproduce the curve analysis") {
    RunConfig c;
    c.measureTablePath = dataDir + "/counting_g2.txt";
    c.timing = false;
    const auto fromTable = runAnalyze(c);
    const auto fromCurve = runAnalyze(specConfig("p=3; f=x^5+1"));
    CHECK(fromTable.allPassed());
    CHECK(fromTable.zeta.P == fromCurve.zeta.P);
    c.genus = 3;
    CHECK_THROWS_AS(runAnalyze(c), PreconditionError);
}

TEST_CASE("machine reports are canonical and deterministic") {
    const auto r = runAnalyze(specConfig("p=3; f=x^3+x"));
    const std::string a = renderMachine(r);
    CHECK(a == renderMachine(runAnalyze(specConfig("p=3; f=x^3+x"))));
    CHECK(canonicalize(a) == a);
    CHECK(a.back() == '\n');
    CHECK(a.find("\"timing\"") == std::string::npos);
    for (const char* key : {"\"all_passed\": true", "\"genus\": 1", "\"pic0\": \"4\"", "\"q\": \"3\"",
                            "\"text\": \"1 + (3 - u)*T + u*T^2\"", "\"source\": \"p=3; k=1; f=x^3+x; h=0\""}) {
        CAPTURE(key);
        CHECK(a.find(key) != std::string::npos);
    }
    // Reordering keys and whitespace does not change the canonical form.
    CHECK(canonicalize("{ \"b\": 1,\n\"a\": [2, \"3\"] }") == "{\n  \"a\": [\n    2,\n    \"3\"\n  ],\n  \"b\": 1\n}\n");
    auto timed = specConfig("p=3; f=x^3+x");
    timed.timing = true;
    CHECK(renderMachine(runAnalyze(timed)).find("\"seconds\"") != std::string::npos);
}

TEST_CASE("exit codes by error category") {
    CHECK(exitCodeFor(ParseError("x")) == 2);
    CHECK(exitCodeFor(NotPrimeError("x")) == 2);
    CHECK(exitCodeFor(SingularCurveError("x")) == 2);
    CHECK(exitCodeFor(CapacityError("x")) == 3);
    CHECK(exitCodeFor(InvalidMeasureError("x")) == 4);
    CHECK(exitCodeFor(ConsistencyError("x")) == 4);
    CHECK(exitCodeFor(std::runtime_error("x")) == 1);
    CHECK(runVerify(specConfig("p=5; f=x^3+x")) == 0);
}

TEST_CASE("batch runs") {
    const auto empty = runBatch(dataDir + "/batch_empty.txt", RunConfig{}, 2);
    CHECK(empty.entries.empty());
    CHECK(empty.render() == "curves: 0, passed: 0, failed: 0\n");

    const auto f3 = runBatch(dataDir + "/batch_f3.txt", RunConfig{}, 3);
    REQUIRE(f3.entries.size() == 4);
    CHECK(f3.passed == 4);
    CHECK(f3.entries[0].line == 2);
    CHECK(f3.entries[3].line == 6);

    const auto mixed = runBatch(dataDir + "/batch_mixed.txt", RunConfig{}, 1);
    REQUIRE(mixed.entries.size() == 3);
    CHECK(mixed.passed == 1);
    CHECK(mixed.failed == 2);
    CHECK(mixed.entries[1].exitCode == 2);
    CHECK(mixed.entries[2].message == "p=4: 4 is not prime");
    // Worker count does not change the outcome or the order.
    CHECK(runBatch(dataDir + "/batch_mixed.txt", RunConfig{}, 4).render() == mixed.render());

    CHECK_THROWS_AS(runBatch(dataDir + "/no_such_file.txt", RunConfig{}, 1), ParseError);
}

TEST_CASE("command-line exit codes") {
    CHECK(cli("analyze --spec \"p=3; f=x^3+x\"").code == 0);
    const auto verified = cli("verify --spec \"p=3; f=x^5+1\"");
    CHECK(verified.code == 0);
    CHECK(verified.out == "PASS p=3; k=1; f=x^5+1; h=0 (35 checks)\n");
    CHECK(cli("verify --spec \"p=3; f=x^3\"").code == 2);
    CHECK(cli("verify --spec \"p=6; f=x^3+x\"").code == 2);
    CHECK(cli("verify --spec \"p=3; f=\"").code == 2);
    CHECK(cli("verify").code == 2);
    CHECK(cli("frobnicate").code == 2);
    CHECK(cli("verify --measure-table \"" + dataDir + "/corrupted_g2.txt\"").code == 4);
    CHECK(cli("verify --measure-table \"" + dataDir + "/euler_g1.txt\"").code == 0);
    CHECK(cli("verify --spec \"p=5; f=x^7+x+1\" --max-work 1000").code == 3);
    CHECK(cli("batch \"" + dataDir + "/batch_f3.txt\"").code == 0);
    CHECK(cli("batch \"" + dataDir + "/batch_mixed.txt\"").code == 1);

    const auto machine = cli("analyze --spec \"p=3; f=x^3+x\" --format machine --no-timing");
    CHECK(machine.code == 0);
    CHECK(canonicalize(machine.out) == machine.out);
    CHECK(machine.out == renderMachine(runAnalyze(specConfig("p=3; f=x^3+x"))));
}
