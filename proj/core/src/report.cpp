#include "ggg/report.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ggg::report {

namespace {

using json = nlohmann::ordered_json;

template <typename F>
double timed(F&& body)
{
    auto start = std::chrono::steady_clock::now();
    body();
    std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
    return elapsed.count();
}

DegreeSummary summarize_degrees(const Graph& g)
{
    DegreeSummary s;
    bool first = true, first_rim = true, first_spoke = true;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        auto d = g.degree(v);
        if (first) {
            s.min = s.max = d;
            first = false;
        }
        s.min = std::min(s.min, d);
        s.max = std::max(s.max, d);
        switch (g.label(v).kind()) {
        case LabelKind::Hub:
            s.hub = d;
            break;
        case LabelKind::Rim:
            s.rim_min = first_rim ? d : std::min(s.rim_min, d);
            s.rim_max = first_rim ? d : std::max(s.rim_max, d);
            first_rim = false;
            break;
        case LabelKind::Spoke:
            s.spoke_min = first_spoke ? d : std::min(s.spoke_min, d);
            s.spoke_max = first_spoke ? d : std::max(s.spoke_max, d);
            first_spoke = false;
            break;
        }
    }
    return s;
}

std::string label_of(const Graph& g, VertexIndex v) { return g.label(v).to_string(); }

json labels_json(const Graph& g, std::span<const VertexIndex> vertices)
{
    json out = json::array();
    for (auto v : vertices)
        out.push_back(label_of(g, v));
    return out;
}

json edge_json(const Graph& g, const Edge& e)
{
    return json::array({label_of(g, e.u), label_of(g, e.v)});
}

json coloring_json(const Graph& g, const certify::Coloring& c)
{
    json out = json::object();
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        out[label_of(g, v)] = c.colors[v];
    return out;
}

void run_color(PropertyReport& r, std::uint64_t budget)
{
    ColorEntry entry;
    entry.claimed = r.spec.family == Family::G ? 4 : 3;
    entry.lemma1 = certify::lemma1_coloring(r.spec);
    entry.lemma1_proper = certify::verify_coloring(r.graph, entry.lemma1).proper();
    try {
        auto result = certify::chromatic_number(r.graph, budget);
        entry.chromatic_number = result.chromatic_number;
        entry.coloring = std::move(result.coloring);
        entry.steps = result.steps;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded)
            throw;
        r.inconclusive.push_back(Check::Color);
        if (!entry.lemma1_proper)
            r.discrepancies.push_back({Check::Color, "constructive coloring is proper",
                                       "constructive coloring is improper"});
        return;
    }
    if (entry.chromatic_number != entry.claimed)
        r.discrepancies.push_back({Check::Color,
                                   "chromatic number " + std::to_string(entry.claimed),
                                   "chromatic number " + std::to_string(entry.chromatic_number)});
    if (!entry.lemma1_proper)
        r.discrepancies.push_back({Check::Color, "constructive coloring is proper",
                                   "constructive coloring is improper"});
    else if (entry.lemma1.color_count() != entry.claimed)
        r.discrepancies.push_back({Check::Color,
                                   "constructive coloring uses " + std::to_string(entry.claimed) +
                                       " colors",
                                   "it uses " + std::to_string(entry.lemma1.color_count())});
    r.color = std::move(entry);
}

void run_triangle(PropertyReport& r)
{
    auto check = certify::is_triangle_free(r.graph);
    r.triangle = TriangleEntry{check.triangle_free(), check.witness};
    if (!check.triangle_free())
        r.discrepancies.push_back({Check::Triangle, "triangle-free",
                                   "triangle " + certify::describe(r.graph, *check.witness)});
}

void run_maximal(PropertyReport& r)
{
    MaximalEntry entry;
    entry.claimed = r.spec.family == Family::G;
    try {
        auto report = certify::maximality_check(r.graph);
        entry.maximal = report.maximal;
        entry.addable = report.addable;
    } catch (const certify::TriangleError& e) {
        r.discrepancies.push_back({Check::Maximal, "maximal triangle-free",
                                   "not triangle-free: " + certify::describe(r.graph, e.witness())});
        r.maximal = entry;
        return;
    }
    if (entry.claimed && !entry.maximal)
        r.discrepancies.push_back({Check::Maximal, "maximal triangle-free",
                                   "non-edge " + certify::describe(r.graph, *entry.addable) +
                                       " closes no triangle"});
    r.maximal = entry;
}

void run_hamilton(PropertyReport& r, std::uint64_t budget)
{
    HamiltonEntry entry{certify::find_hamiltonian_cycle(r.graph, budget),
                        certify::check_lemma2_path(r.graph, r.spec.m)};
    switch (entry.search.status) {
    case certify::SearchStatus::Found:
        break;
    case certify::SearchStatus::NotFound:
        r.discrepancies.push_back({Check::Hamilton, "Hamiltonian", "exhaustive search found no Hamiltonian cycle"});
        break;
    case certify::SearchStatus::BudgetExceeded:
        r.inconclusive.push_back(Check::Hamilton);
        break;
    }
    r.hamilton = std::move(entry);
}

void run_girth(PropertyReport& r)
{
    auto g = certify::girth(r.graph);
    r.girth = g;
    if (g != 4)
        r.discrepancies.push_back(
            {Check::Girth, "girth 4", g ? "girth " + std::to_string(*g) : "acyclic"});
}

void run_planar(PropertyReport& r)
{
    r.planar = certify::nonplanarity_edge_bound(r.graph);
    if (!r.planar->certified)
        r.discrepancies.push_back({Check::Planar, "non-planar",
                                   "edge bound inconclusive (" + std::to_string(r.planar->edges) +
                                       " <= " + std::to_string(r.planar->bound) + ")"});
}

void run_mycielski(PropertyReport& r)
{
    if (r.spec.family != Family::G)
        return;
    r.mycielski = certify::mycielski_subgraph_check(r.graph);
    if (!r.mycielski->holds)
        r.discrepancies.push_back({Check::Mycielski, "contains M(C_m)",
                                   std::to_string(r.mycielski->missing.size()) + " edges missing"});
}

void run_remark1(PropertyReport& r)
{
    Remark1Entry entry;
    if (r.spec.family != Family::H) {
        r.remark1 = entry;
        return;
    }
    auto augmented = families::remark1_augment(r.graph);
    entry.added_edges = augmented.added.size();
    if (augmented.discrepancy) {
        entry.status = Remark1Status::TriangleIntroduced;
        entry.triangle = augmented.witness;
        r.discrepancies.push_back({Check::Remark1,
                                   "adding m/2 diametral chords gives a maximal triangle-free graph",
                                   "triangle " + certify::describe(augmented.graph, *augmented.witness)});
    } else {
        auto maximality = certify::maximality_check(augmented.graph);
        if (maximality.maximal) {
            entry.status = Remark1Status::Verified;
        } else {
            entry.status = Remark1Status::NotMaximal;
            entry.addable = maximality.addable;
            r.discrepancies.push_back(
                {Check::Remark1, "adding m/2 diametral chords gives a maximal triangle-free graph",
                 "non-edge " + certify::describe(augmented.graph, *maximality.addable) +
                     " still closes no triangle"});
        }
    }
    r.remark1 = entry;
}

}  // namespace

std::string_view check_name(Check check) noexcept
{
    switch (check) {
    case Check::Color: return "color";
    case Check::Triangle: return "triangle";
    case Check::Maximal: return "maximal";
    case Check::Hamilton: return "hamilton";
    case Check::Girth: return "girth";
    case Check::Planar: return "planar";
    case Check::Mycielski: return "mycielski";
    case Check::Remark1: return "remark1";
    }
    return "unknown";
}

CheckSet parse_checks(std::string_view list)
{
    CheckSet set;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        auto comma = list.find(',', pos);
        auto item = list.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!item.empty() && item.front() == ' ')
            item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ')
            item.remove_suffix(1);
        if (item == "all") {
            set = CheckSet::all();
        } else {
            auto it = std::find_if(std::begin(kAllChecks), std::end(kAllChecks),
                                   [&](Check c) { return check_name(c) == item; });
            if (it == std::end(kAllChecks))
                throw Error(ErrorKind::BadFormat, "unknown check \"" + std::string(item) + "\"");
            set.insert(*it);
        }
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return set;
}

std::string_view to_string(Remark1Status status) noexcept
{
    switch (status) {
    case Remark1Status::Verified: return "verified";
    case Remark1Status::TriangleIntroduced: return "triangle_introduced";
    case Remark1Status::NotMaximal: return "not_maximal";
    case Remark1Status::NotApplicable: return "not_applicable";
    }
    return "unknown";
}

PropertyReport run_report(const families::FamilySpec& spec, CheckSet checks, std::uint64_t budget)
{
    if (spec.family != Family::G && spec.family != Family::H)
        throw Error(ErrorKind::BadFamily, "reports cover families G and H only");

    PropertyReport r;
    r.spec = spec;
    r.graph = families::build(spec);
    r.checks = checks;
    r.degrees = summarize_degrees(r.graph);

    auto run = [&](Check check, auto&& body) {
        if (checks.contains(check))
            r.elapsed_ms.emplace_back(check, timed(body));
    };
    run(Check::Color, [&] { run_color(r, budget); });
    run(Check::Triangle, [&] { run_triangle(r); });
    run(Check::Maximal, [&] { run_maximal(r); });
    run(Check::Hamilton, [&] { run_hamilton(r, budget); });
    run(Check::Girth, [&] { run_girth(r); });
    run(Check::Planar, [&] { run_planar(r); });
    run(Check::Mycielski, [&] { run_mycielski(r); });
    run(Check::Remark1, [&] { run_remark1(r); });
    return r;
}

std::string to_json(const PropertyReport& r, bool with_timings)
{
    const auto& g = r.graph;
    json doc;
    doc["family"] = std::string(family_tag(r.spec.family));
    doc["m"] = r.spec.m;
    doc["n"] = g.vertex_count();
    doc["edge_count"] = g.edge_count();
    doc["degree_summary"] = {
        {"min", r.degrees.min},
        {"max", r.degrees.max},
        {"hub", r.degrees.hub},
        {"rim", json::array({r.degrees.rim_min, r.degrees.rim_max})},
        {"spoke", json::array({r.degrees.spoke_min, r.degrees.spoke_max})},
    };
    json checks = json::array();
    for (auto c : kAllChecks) {
        if (r.checks.contains(c))
            checks.push_back(std::string(check_name(c)));
    }
    doc["checks"] = checks;

    if (r.girth) {
        if (*r.girth)
            doc["girth"] = **r.girth;
        else
            doc["girth"] = "infinite";
    }
    if (r.color) {
        doc["chromatic_number"] = r.color->chromatic_number;
        doc["coloring"] = coloring_json(g, r.color->coloring);
        doc["lemma1_coloring"] = {
            {"proper", r.color->lemma1_proper},
            {"color_count", r.color->lemma1.color_count()},
            {"colors", coloring_json(g, r.color->lemma1)},
        };
    }
    if (r.triangle) {
        doc["triangle_free"] = r.triangle->triangle_free;
        if (r.triangle->witness)
            doc["triangle_witness"] = labels_json(g, r.triangle->witness->vertices);
    }
    if (r.maximal) {
        doc["maximal_triangle_free"] = r.maximal->maximal;
        doc["maximality_claimed"] = r.maximal->claimed;
        if (r.maximal->addable)
            doc["addable_non_edge"] = edge_json(g, *r.maximal->addable);
    }
    if (r.hamilton) {
        const auto& search = r.hamilton->search;
        doc["hamiltonian"] = search.status == certify::SearchStatus::Found;
        doc["hamiltonian_search"] = std::string(certify::to_string(search.status));
        doc["hamiltonian_steps"] = search.steps;
        if (search.cycle)
            doc["hamiltonian_cycle"] = labels_json(g, search.cycle->order);
        const auto& lemma2 = r.hamilton->lemma2;
        json audit = {
            {"edges_valid", lemma2.edges_valid},
            {"covers_all", lemma2.covers_all},
            {"distinct_vertices", lemma2.distinct_vertices},
            {"sequence", labels_json(g, lemma2.sequence)},
        };
        if (lemma2.first_non_edge)
            audit["first_non_edge"] = json::array(
                {label_of(g, lemma2.first_non_edge->first), label_of(g, lemma2.first_non_edge->second)});
        doc["lemma2_literal_path"] = audit;
    }
    if (r.planar) {
        doc["nonplanarity"] = {
            {"verdict", r.planar->certified ? "non_planar_certified" : "inconclusive"},
            {"triangle_free", r.planar->triangle_free},
            {"edges", r.planar->edges},
            {"bound", r.planar->bound},
        };
    }
    if (r.checks.contains(Check::Mycielski)) {
        if (r.mycielski) {
            json missing = json::array();
            auto mm = families::mycielskian(families::build_cycle(r.spec.m));
            for (const auto& e : r.mycielski->missing)
                missing.push_back(edge_json(mm, e));
            doc["mycielski_subgraph"] = {
                {"verdict", r.mycielski->holds ? "holds" : "fails"},
                {"extra_edges", r.mycielski->extra_edges},
                {"missing_edges", missing},
            };
        } else {
            doc["mycielski_subgraph"] = {{"verdict", "not_applicable"}};
        }
    }
    if (r.remark1) {
        json remark = {{"verdict", std::string(to_string(r.remark1->status))}};
        if (r.remark1->status != Remark1Status::NotApplicable)
            remark["added_edges"] = r.remark1->added_edges;
        if (r.remark1->triangle)
            remark["triangle_witness"] = labels_json(g, r.remark1->triangle->vertices);
        if (r.remark1->addable)
            remark["addable_non_edge"] = edge_json(g, *r.remark1->addable);
        doc["remark1"] = remark;
    }

    json discrepancies = json::array();
    for (const auto& d : r.discrepancies) {
        discrepancies.push_back({
            {"check", std::string(check_name(d.check))},
            {"claim", d.claim},
            {"observed", d.observed},
        });
    }
    doc["discrepancies"] = discrepancies;
    json inconclusive = json::array();
    for (auto c : r.inconclusive)
        inconclusive.push_back(std::string(check_name(c)));
    doc["inconclusive"] = inconclusive;

    if (with_timings) {
        json elapsed = json::object();
        for (const auto& [check, ms] : r.elapsed_ms)
            elapsed[std::string(check_name(check))] = ms;
        doc["elapsed_ms"] = elapsed;
    }
    return doc.dump(2) + "\n";
}

int exit_code(const PropertyReport& report)
{
    if (!report.discrepancies.empty())
        return 1;
    if (!report.inconclusive.empty())
        return 3;
    return 0;
}

std::vector<SurveyRow> run_survey(int m_min, int m_max, std::uint64_t budget)
{
    if (m_min < 5 || m_max < m_min)
        throw Error(ErrorKind::MTooSmall, "survey needs 5 <= m_min <= m_max");

    std::vector<std::future<SurveyRow>> pending;
    for (int m = m_min; m <= m_max; ++m) {
        pending.push_back(std::async(std::launch::async, [m, budget] {
            SurveyRow row;
            row.m = m;
            auto start = std::chrono::steady_clock::now();
            row.report = run_report({m % 2 == 1 ? Family::G : Family::H, m}, CheckSet::all(), budget);
            row.ms_elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
            return row;
        }));
    }
    std::vector<SurveyRow> rows;
    for (auto& f : pending)
        rows.push_back(f.get());
    return rows;
}

std::string survey_csv(const std::vector<SurveyRow>& rows, bool with_timing)
{
    auto boolean = [](bool b) { return b ? "true" : "false"; };
    std::ostringstream os;
    os << kSurveyHeader << '\n';
    for (const auto& row : rows) {
        const auto& r = row.report;
        os << row.m << ',' << family_tag(r.spec.family) << ',' << r.graph.vertex_count() << ','
           << r.graph.edge_count() << ',';
        if (r.girth && *r.girth)
            os << **r.girth;
        else
            os << "inf";
        os << ',';
        if (r.color)
            os << r.color->chromatic_number;
        else
            os << "budget_exceeded";
        os << ',' << boolean(r.triangle && r.triangle->triangle_free) << ','
           << boolean(r.maximal && r.maximal->maximal) << ',';
        if (r.hamilton && r.hamilton->search.status == certify::SearchStatus::BudgetExceeded)
            os << "budget_exceeded";
        else
            os << boolean(r.hamilton && r.hamilton->search.status == certify::SearchStatus::Found);
        os << ',' << boolean(r.planar && r.planar->certified) << ',';
        if (r.mycielski)
            os << boolean(r.mycielski->holds);
        else
            os << "not_applicable";
        os << ',' << to_string(r.remark1 ? r.remark1->status : Remark1Status::NotApplicable) << ',';
        if (with_timing)
            os << row.ms_elapsed;
        os << '\n';
    }
    return os.str();
}

}  // namespace ggg::report
