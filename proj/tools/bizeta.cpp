// bizeta: two-variable zeta functions of odd-degree hyperelliptic curves.
//
//   bizeta analyze --spec "p=3; f=x^3+x"
//   bizeta verify  --spec "p=3; f=x^5+1" --base-change 2
//   bizeta analyze --measure-table euler_g1.txt --genus 1 --format machine
//   bizeta batch curves.txt

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bizeta/report.hpp"

namespace {

struct Options {
    std::string spec;
    std::string specFile;
    std::string measureTable;
    int genus = -1;
    unsigned baseChange = 1;
    int seriesOrder = -1;
    std::string format = "text";
    std::string out;
    std::uint64_t maxWork = bizeta::Limits{}.maxWork;
    bool noTiming = false;
    std::string batchInput;
    unsigned workers = 0;
};

void addRunOptions(CLI::App* cmd, Options& o) {
    auto* spec = cmd->add_option("--spec", o.spec, "curve spec, e.g. \"p=3; k=1; f=x^3+x; h=0\"");
    auto* file = cmd->add_option("--spec-file", o.specFile, "file holding a curve spec")->check(CLI::ExistingFile);
    auto* table = cmd->add_option("--measure-table", o.measureTable, "measure table file (g=..; pic0=.. then 'n nu value' lines)")
                      ->check(CLI::ExistingFile);
    spec->excludes(file)->excludes(table);
    file->excludes(table);
    cmd->add_option("--genus", o.genus, "genus of the measure table")->check(CLI::NonNegativeNumber);
    cmd->add_option("--base-change", o.baseChange, "work over F_{q^m}")->check(CLI::PositiveNumber);
    cmd->add_option("--series-order", o.seriesOrder, "divisor-count horizon N (default 2g+2)")->check(CLI::NonNegativeNumber);
    cmd->add_option("--format", o.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    cmd->add_option("--out", o.out, "write the report here instead of stdout");
    cmd->add_option("--max-work", o.maxWork, "bound on any exhaustive enumeration")->check(CLI::PositiveNumber);
    cmd->add_flag("--no-timing", o.noTiming, "omit timing from the report");
}

bizeta::RunConfig makeConfig(const Options& o) {
    bizeta::RunConfig c;
    if (!o.specFile.empty()) {
        std::ifstream in(o.specFile);
        if (!in) throw bizeta::ParseError("cannot read '" + o.specFile + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        c.spec = bizeta::parseCurveSpec(ss.str());
    } else if (!o.spec.empty()) {
        c.spec = bizeta::parseCurveSpec(o.spec);
    }
    if (!o.measureTable.empty()) c.measureTablePath = o.measureTable;
    if (o.genus >= 0) c.genus = o.genus;
    c.baseChange = o.baseChange;
    if (o.seriesOrder >= 0) c.seriesOrder = static_cast<unsigned>(o.seriesOrder);
    c.format = o.format == "machine" ? bizeta::OutputFormat::machine : bizeta::OutputFormat::text;
    c.timing = !o.noTiming;
    c.limits.maxWork = o.maxWork;
    return c;
}

void emit(const std::string& text, const std::string& out) {
    if (out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw bizeta::ParseError("cannot write '" + out + "'");
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-variable zeta functions of odd-degree hyperelliptic curves over finite fields"};
    app.require_subcommand(1);
    Options o;
    auto* analyze = app.add_subcommand("analyze", "run the full pipeline and print the report");
    auto* verify = app.add_subcommand("verify", "run the pipeline; exit 0 iff every check passes");
    auto* batch = app.add_subcommand("batch", "analyze one curve spec per line");
    addRunOptions(analyze, o);
    addRunOptions(verify, o);
    batch->add_option("input", o.batchInput, "file with one spec or JSON record per line")->required();
    batch->add_option("--workers", o.workers, "concurrent curves (default: hardware threads)");
    batch->add_option("--max-work", o.maxWork, "bound on any exhaustive enumeration")->check(CLI::PositiveNumber);
    batch->add_option("--out", o.out, "write the summary here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*batch) {
            bizeta::RunConfig defaults;
            defaults.limits.maxWork = o.maxWork;
            const auto summary = bizeta::runBatch(o.batchInput, defaults, o.workers);
            emit(summary.render(), o.out);
            return summary.failed == 0 ? 0 : 1;
        }
        const bizeta::RunConfig config = makeConfig(o);
        const bizeta::AnalysisReport report = bizeta::runAnalyze(config);
        if (*analyze) {
            emit(config.format == bizeta::OutputFormat::machine ? bizeta::renderMachine(report) : bizeta::renderText(report), o.out);
        } else if (!report.allPassed()) {
            std::cerr << "verification failed\n" << bizeta::renderText(report);
        } else {
            const std::size_t checks = report.theorem2.checks.size() + report.theorem3.checks.size() +
                                       report.kapranov.checks.size() + report.consistency.checks.size();
            emit("PASS " + report.source + " (" + std::to_string(checks) + " checks)\n", o.out);
        }
        return report.allPassed() ? 0 : 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return bizeta::exitCodeFor(e);
    }
}
