#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ggg/families.hpp"
#include "ggg/graph.hpp"
#include "ggg/report.hpp"

namespace ggg::cli {

namespace {

constexpr int kDefaultSurveyMax = 15;

struct Options {
    std::string family = "G";
    int m = 5;
    std::string format = "json";
    std::string checks = "all";
    int m_min = 5;
    int m_max = 13;
    std::string out;
    std::string in;
    std::uint64_t budget = certify::kDefaultBudget;
    bool unsafe_max = false;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t budget_from_env()
{
    const char* value = std::getenv("GGG_BUDGET");
    if (!value || !*value)
        return certify::kDefaultBudget;
    char* end = nullptr;
    auto parsed = std::strtoull(value, &end, 10);
    if (*end != '\0' || parsed == 0)
        throw UsageError(std::string("GGG_BUDGET must be a positive integer, got \"") + value + "\"");
    return parsed;
}

families::FamilySpec family_spec(const Options& opt)
{
    auto family = parse_family_tag(opt.family);
    if (!family || *family == Family::None || *family == Family::HAugmented)
        throw UsageError("--family must be one of G, H, C, M");
    return {*family, opt.m};
}

void emit(const Options& opt, const std::string& text, std::ostream& out)
{
    if (opt.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(opt.out, std::ios::binary);
    if (!file)
        throw UsageError("cannot open " + opt.out + " for writing");
    file << text;
    if (!file)
        throw UsageError("failed writing " + opt.out);
}

std::string render(const Graph& g, const std::string& format)
{
    return format == "dot" ? export_dot(g) : export_json(g);
}

int cmd_build(const Options& opt, std::ostream& out)
{
    auto g = families::build(family_spec(opt));
    emit(opt, render(g, opt.format), out);
    return kVerified;
}

int cmd_export(const Options& opt, std::ostream& out)
{
    std::ifstream file(opt.in, std::ios::binary);
    if (!file)
        throw UsageError("cannot read " + opt.in);
    std::stringstream buffer;
    buffer << file.rdbuf();
    emit(opt, render(import_json(buffer.str()), opt.format), out);
    return kVerified;
}

int cmd_verify(const Options& opt, std::ostream& out)
{
    auto spec = family_spec(opt);
    if (spec.family != Family::G && spec.family != Family::H)
        throw UsageError("verify supports --family G or H");
    auto checks = report::parse_checks(opt.checks);
    if (checks.empty())
        throw UsageError("--checks selects nothing");
    auto r = report::run_report(spec, checks, opt.budget);
    emit(opt, report::to_json(r), out);
    return report::exit_code(r);
}

int cmd_survey(const Options& opt, std::ostream& out)
{
    if (opt.m_min < 5 || opt.m_max < opt.m_min)
        throw UsageError("survey needs 5 <= --m-min <= --m-max");
    if (opt.m_max > kDefaultSurveyMax && !opt.unsafe_max)
        throw UsageError("--m-max above " + std::to_string(kDefaultSurveyMax) +
                         " needs --unsafe-max");
    auto rows = report::run_survey(opt.m_min, opt.m_max, opt.budget);
    emit(opt, report::survey_csv(rows), out);
    for (const auto& row : rows) {
        if (!row.report.inconclusive.empty())
            return kInconclusive;
    }
    return kVerified;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options opt;
    try {
        opt.budget = budget_from_env();
    } catch (const UsageError& e) {
        err << "ggg: error: " << e.what() << '\n';
        return kUsage;
    }

    CLI::App app{"Build and certify generalized Grotzsch graphs", "ggg"};
    app.require_subcommand(1);
    app.option_defaults()->always_capture_default();

    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--budget", opt.budget, "Step limit for exponential searches (env GGG_BUDGET)")
            ->check(CLI::PositiveNumber);
    };
    auto add_family = [&](CLI::App* cmd) {
        cmd->add_option("--family", opt.family, "G | H | C | M")->required();
        cmd->add_option("--m", opt.m, "Family parameter")->required();
    };

    auto* build = app.add_subcommand("build", "Write one family graph as DOT or JSON");
    add_family(build);
    build->add_option("--format", opt.format)->check(CLI::IsMember({"dot", "json"}));
    build->add_option("--out", opt.out, "Output file (default stdout)");

    auto* exporter = app.add_subcommand("export", "Re-export an adjacency-JSON graph");
    exporter->add_option("--in", opt.in, "Adjacency-JSON input")->required();
    exporter->add_option("--format", opt.format)->check(CLI::IsMember({"dot", "json"}));
    exporter->add_option("--out", opt.out, "Output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "Certify every claimed property of G_m or H_m");
    add_family(verify);
    verify->add_option("--checks", opt.checks,
                       "Comma list of color,triangle,maximal,hamilton,girth,planar,mycielski,remark1 or all");
    verify->add_option("--out", opt.out, "Report file (default stdout)");
    add_budget(verify);

    auto* survey = app.add_subcommand("survey", "Tabulate verdicts for a range of m as CSV");
    survey->add_option("--m-min", opt.m_min);
    survey->add_option("--m-max", opt.m_max);
    survey->add_option("--out", opt.out, "CSV file (default stdout)");
    survey->add_flag("--unsafe-max", opt.unsafe_max, "Allow --m-max above 15");
    add_budget(survey);

    std::vector<std::string> argv_storage{"ggg"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_storage)
        argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kVerified;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kVerified;
    } catch (const CLI::ParseError& e) {
        err << "ggg: error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*build)
            return cmd_build(opt, out);
        if (*exporter)
            return cmd_export(opt, out);
        if (*verify)
            return cmd_verify(opt, out);
        return cmd_survey(opt, out);
    } catch (const UsageError& e) {
        err << "ggg: error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "ggg: error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return e.kind() == ErrorKind::BudgetExceeded ? kInconclusive : kUsage;
    }
}

}  // namespace ggg::cli
