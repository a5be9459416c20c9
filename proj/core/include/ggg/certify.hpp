#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ggg/families.hpp"
#include "ggg/graph.hpp"

/// Exact verifiers. Every positive or negative answer that can carry a
/// witness does, and every witness type has a checker here that does not
/// consult the search that produced it.
namespace ggg::certify {

/// Elementary-step limit shared by the exponential searches.
inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000ULL;

/// Error{InputHasTriangle} that keeps the offending triangle.
class TriangleError : public Error {
public:
    TriangleError(TriangleWitness witness, const std::string& message)
        : Error(ErrorKind::InputHasTriangle, message), witness_(witness) {}

    const TriangleWitness& witness() const noexcept { return witness_; }

private:
    TriangleWitness witness_;
};

TriangleError input_has_triangle(const Graph& g, const TriangleWitness& witness);

std::string describe(const Graph& g, const TriangleWitness& witness);
std::string describe(const Graph& g, const Edge& edge);

// -- triangles and girth ------------------------------------------------------

struct TriangleCheck {
    std::optional<TriangleWitness> witness;

    bool triangle_free() const noexcept { return !witness.has_value(); }
};

/// First triangle in canonical edge order (edge (u,v), then least common neighbour).
TriangleCheck is_triangle_free(const Graph& g);

bool is_triangle(const Graph& g, const TriangleWitness& witness);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// -- maximality ---------------------------------------------------------------

struct MaximalityReport {
    bool maximal = false;
    /// Set when not maximal: the first non-edge (canonical order) that closes no triangle.
    std::optional<Edge> addable;
    /// Audit mode only, when maximal: every non-edge with a triangle it would close.
    std::vector<std::pair<Edge, TriangleWitness>> audit;
};

/// Throws TriangleError when g already contains a triangle.
MaximalityReport maximality_check(const Graph& g, bool audit = false);

// -- Hamiltonicity ------------------------------------------------------------

struct CycleCertificate {
    std::vector<VertexIndex> order;
};

/// True iff `cycle` visits every vertex exactly once along edges, closing back.
bool is_hamiltonian_cycle(const Graph& g, const CycleCertificate& cycle);

enum class SearchStatus { Found, NotFound, BudgetExceeded };

std::string_view to_string(SearchStatus status) noexcept;

struct HamiltonianSearch {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<CycleCertificate> cycle;
    std::uint64_t steps = 0;
};

/// Backtracking from the hub (vertex 0 when there is none), neighbours in
/// ascending order. NotFound is a proof of non-Hamiltonicity; running out of
/// budget is reported separately.
HamiltonianSearch find_hamiltonian_cycle(const Graph& g, std::uint64_t budget = kDefaultBudget);

struct Lemma2PathAudit {
    std::vector<VertexIndex> sequence;
    bool edges_valid = false;  // consecutive pairs and the closing pair are edges
    bool covers_all = false;
    std::size_t distinct_vertices = 0;
    std::optional<std::pair<VertexIndex, VertexIndex>> first_non_edge;
};

/// Expands the closed walk p1 q2 p3 q4 ... p_{m-1} q_m a q1 p_m literally:
/// alternating p_j (j odd) / q_j (j even) for j = 1..m-2, then
/// p_{m-1} q_m a q_1 p_m. Reports edge validity and coverage, nothing more.
/// Throws Error{BadFamily} unless g is G_m or H_m.
Lemma2PathAudit check_lemma2_path(const Graph& g, int m);

// -- colouring ----------------------------------------------------------------

/// colors[v] is the colour of vertex v; colours are >= 1, 0 means unassigned.
struct Coloring {
    std::vector<int> colors;

    int color_count() const;
};

struct ColoringCheck {
    std::optional<Edge> violation;

    bool proper() const noexcept { return !violation.has_value(); }
};

/// Throws Error{MissingVertex} if some vertex has no colour.
ColoringCheck verify_coloring(const Graph& g, const Coloring& coloring);

struct ChromaticResult {
    int chromatic_number = 0;
    Coloring coloring;
    std::uint64_t steps = 0;
};

/// Exact chromatic number by branch and bound: DSATUR gives the upper bound,
/// bipartiteness the lower bound, and a DSATUR-ordered backtracking search
/// decides each k in between. Throws Error{BudgetExceeded}.
ChromaticResult chromatic_number(const Graph& g, std::uint64_t budget = kDefaultBudget);

/// Hub 1, spokes 2, rim alternating 1,3 (odd m: p_m gets 4).
/// Indexed like build_G / build_H. Throws Error{BadFamily, BadParity, MTooSmall}.
Coloring lemma1_coloring(const families::FamilySpec& spec);

// -- planarity ----------------------------------------------------------------

struct NonplanarityVerdict {
    bool certified = false;  // false means inconclusive, never "planar"
    bool triangle_free = false;
    std::size_t edges = 0;
    long long bound = 0;  // 2|V| - 4
};

/// Triangle-free planar graphs have at most 2|V|-4 edges.
NonplanarityVerdict nonplanarity_edge_bound(const Graph& g);

// -- Mycielski containment -----------------------------------------------------

struct MycielskiContainment {
    bool holds = false;
    EdgeList missing;  // edges of M(C_m) absent from G_m, indexed in M(C_m)
    std::size_t extra_edges = 0;  // edges of G_m outside M(C_m)
};

/// Compares G_m with M(C_m) under the identity label map.
/// Throws Error{BadFamily} unless gm is a G-family graph.
MycielskiContainment mycielski_subgraph_check(const Graph& gm);

// -- isomorphism --------------------------------------------------------------

enum class IsomorphismStatus { Isomorphic, NotIsomorphic, BudgetExceeded };

std::string_view to_string(IsomorphismStatus status) noexcept;

struct IsomorphismResult {
    IsomorphismStatus status = IsomorphismStatus::NotIsomorphic;
    std::vector<VertexIndex> mapping;  // mapping[v1] = v2
    std::uint64_t steps = 0;
};

IsomorphismResult isomorphism_check(const Graph& g1, const Graph& g2,
                                    std::uint64_t budget = kDefaultBudget);

/// Edge-preserving bijection in both directions.
bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<VertexIndex>& mapping);

}  // namespace ggg::certify
