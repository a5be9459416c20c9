#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ggg/certify.hpp"
#include "ggg/families.hpp"
#include "ggg/graph.hpp"

namespace ggg::report {

enum class Check : unsigned {
    Color = 1u << 0,
    Triangle = 1u << 1,
    Maximal = 1u << 2,
    Hamilton = 1u << 3,
    Girth = 1u << 4,
    Planar = 1u << 5,
    Mycielski = 1u << 6,
    Remark1 = 1u << 7,
};

inline constexpr Check kAllChecks[] = {Check::Color,  Check::Triangle, Check::Maximal,
                                       Check::Hamilton, Check::Girth,  Check::Planar,
                                       Check::Mycielski, Check::Remark1};

std::string_view check_name(Check check) noexcept;

class CheckSet {
public:
    constexpr CheckSet() = default;

    static constexpr CheckSet all() noexcept { return CheckSet(0xffu); }

    constexpr bool contains(Check c) const noexcept { return (bits_ & static_cast<unsigned>(c)) != 0; }
    constexpr void insert(Check c) noexcept { bits_ |= static_cast<unsigned>(c); }
    constexpr bool empty() const noexcept { return bits_ == 0; }

    friend constexpr bool operator==(CheckSet, CheckSet) = default;

private:
    constexpr explicit CheckSet(unsigned bits) : bits_(bits) {}

    unsigned bits_ = 0;
};

/// Comma-separated names from {color, triangle, maximal, hamilton, girth,
/// planar, mycielski, remark1, all}. Throws Error{BadFormat}.
CheckSet parse_checks(std::string_view list);

enum class Remark1Status { Verified, TriangleIntroduced, NotMaximal, NotApplicable };

std::string_view to_string(Remark1Status status) noexcept;

struct ColorEntry {
    int chromatic_number = 0;
    int claimed = 0;
    certify::Coloring coloring;
    certify::Coloring lemma1;
    bool lemma1_proper = false;
    std::uint64_t steps = 0;
};

struct TriangleEntry {
    bool triangle_free = false;
    std::optional<TriangleWitness> witness;
};

struct MaximalEntry {
    bool maximal = false;
    bool claimed = false;  // only G_m is claimed maximal
    std::optional<Edge> addable;
};

struct HamiltonEntry {
    certify::HamiltonianSearch search;
    certify::Lemma2PathAudit lemma2;
};

struct Remark1Entry {
    Remark1Status status = Remark1Status::NotApplicable;
    std::size_t added_edges = 0;
    std::optional<TriangleWitness> triangle;  // in the augmented graph
    std::optional<Edge> addable;              // non-edge still addable after augmentation
};

struct Discrepancy {
    Check check = Check::Color;
    std::string claim;
    std::string observed;
};

struct DegreeSummary {
    std::size_t min = 0;
    std::size_t max = 0;
    std::size_t hub = 0;
    std::size_t rim_min = 0, rim_max = 0;
    std::size_t spoke_min = 0, spoke_max = 0;
};

/// Verdicts for one graph of family G or H. Absent entries were not run.
struct PropertyReport {
    families::FamilySpec spec;
    Graph graph;
    CheckSet checks;
    DegreeSummary degrees;

    std::optional<ColorEntry> color;
    std::optional<TriangleEntry> triangle;
    std::optional<MaximalEntry> maximal;
    std::optional<HamiltonEntry> hamilton;
    std::optional<std::optional<int>> girth;  // inner nullopt: acyclic
    std::optional<certify::NonplanarityVerdict> planar;
    std::optional<certify::MycielskiContainment> mycielski;  // G only
    std::optional<Remark1Entry> remark1;

    std::vector<Discrepancy> discrepancies;
    std::vector<Check> inconclusive;  // ran out of budget
    std::vector<std::pair<Check, double>> elapsed_ms;
};

/// Builds the graph and runs the selected checks. Family must be G or H.
PropertyReport run_report(const families::FamilySpec& spec, CheckSet checks,
                          std::uint64_t budget = certify::kDefaultBudget);

/// Report JSON; byte-identical across runs when timings are left out.
std::string to_json(const PropertyReport& report, bool with_timings = true);

/// 1 if a claim failed or a discrepancy fired, else 3 if a check ran out of
/// budget, else 0.
int exit_code(const PropertyReport& report);

struct SurveyRow {
    int m = 0;
    PropertyReport report;
    long long ms_elapsed = 0;
};

inline constexpr std::string_view kSurveyHeader =
    "m,family,n,edges,girth,chromatic,triangle_free,maximal_tf,hamiltonian,"
    "nonplanar_certified,mycielski_subgraph,remark1,ms_elapsed";

/// One full report per m in [m_min, m_max]: G_m for odd m, H_m for even m.
/// Rows are computed concurrently and returned in ascending m.
std::vector<SurveyRow> run_survey(int m_min, int m_max,
                                  std::uint64_t budget = certify::kDefaultBudget);

/// Header plus one line per row. Without timing the last column is left empty.
std::string survey_csv(const std::vector<SurveyRow>& rows, bool with_timing = true);

}  // namespace ggg::report
