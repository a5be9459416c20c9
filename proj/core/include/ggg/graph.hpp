#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ggg {

using VertexIndex = std::uint32_t;

enum class ErrorKind {
    SelfLoop,
    IndexOutOfRange,
    LabelsNotCanonical,
    BadFormat,
    BadParity,
    MTooSmall,
    BadFamily,
    EmptyGraph,
    NotAnHGraph,
    InputHasTriangle,
    MissingVertex,
    OverBudget,
    BudgetExceeded,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `kind()` is the machine-readable
/// reason; `what()` carries a one-line diagnostic.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

enum class LabelKind : std::uint8_t { Hub = 0, Rim = 1, Spoke = 2 };

/// Semantic identity of a vertex: the hub `a`, a rim vertex `p_i` or a
/// spoke tip `q_i` (indices 1-based). The defaulted ordering is the
/// canonical vertex order Hub < Rim(1..) < Spoke(1..).
class VertexLabel {
public:
    static constexpr VertexLabel hub() noexcept { return {LabelKind::Hub, 0}; }
    static VertexLabel rim(int i);
    static VertexLabel spoke(int i);

    constexpr LabelKind kind() const noexcept { return kind_; }
    constexpr int index() const noexcept { return index_; }

    /// "a", "p3", "q12".
    std::string to_string() const;
    static std::optional<VertexLabel> parse(std::string_view text);

    friend constexpr auto operator<=>(const VertexLabel&, const VertexLabel&) = default;

private:
    constexpr VertexLabel(LabelKind kind, int index) noexcept : kind_(kind), index_(index) {}

    LabelKind kind_ = LabelKind::Hub;
    int index_ = 0;
};

/// Which construction a graph came from. `None` marks ad-hoc graphs.
enum class Family { None, G, H, Cycle, MycielskiCycle, HAugmented };

/// Short tag used in exports and on the command line: G, H, C, M, HA, none.
std::string_view family_tag(Family family) noexcept;
std::optional<Family> parse_family_tag(std::string_view tag) noexcept;

struct Edge {
    VertexIndex u = 0;
    VertexIndex v = 0;

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Pairs with u < v, sorted, unique.
using EdgeList = std::vector<Edge>;

/// Three pairwise-adjacent vertices, ascending.
struct TriangleWitness {
    std::array<VertexIndex, 3> vertices{};

    friend constexpr auto operator<=>(const TriangleWitness&, const TriangleWitness&) = default;
};

struct GraphMeta {
    Family family = Family::None;
    int m = 0;

    friend bool operator==(const GraphMeta&, const GraphMeta&) = default;
};

/// Immutable finite simple undirected graph over dense indices 0..n-1.
/// Index i carries labels()[i]; neighbor lists are sorted ascending.
class Graph {
public:
    Graph() = default;

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    Family family() const noexcept { return meta_.family; }
    int m() const noexcept { return meta_.m; }
    const GraphMeta& meta() const noexcept { return meta_; }

    std::span<const VertexLabel> labels() const noexcept { return labels_; }
    const VertexLabel& label(VertexIndex v) const { return labels_.at(v); }
    std::optional<VertexIndex> index_of(const VertexLabel& label) const;

    std::span<const VertexIndex> neighbors(VertexIndex v) const { return adjacency_.at(v); }
    std::size_t degree(VertexIndex v) const { return adjacency_.at(v).size(); }
    bool has_edge(VertexIndex u, VertexIndex v) const;

    /// All edges in canonical (lexicographic) order.
    EdgeList edges() const;

    /// A new graph with `extra` edges added (duplicates of existing edges are ignored).
    Graph with_edges(std::span<const Edge> extra, GraphMeta meta) const;

    /// Structural equality: labels, adjacency and metadata.
    friend bool operator==(const Graph&, const Graph&) = default;

private:
    friend Graph build_graph(std::vector<VertexLabel>, EdgeList, GraphMeta);

    GraphMeta meta_;
    std::vector<VertexLabel> labels_;
    std::vector<std::vector<VertexIndex>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// Builds a graph from labels in strictly ascending canonical order and an
/// edge list in any order; duplicate and reversed pairs collapse silently.
/// Throws Error{SelfLoop, IndexOutOfRange, LabelsNotCanonical}.
Graph build_graph(std::vector<VertexLabel> labels, EdgeList edges, GraphMeta meta = {});

/// Convenience for ad-hoc graphs: vertices Rim(1..n), edges given by index.
Graph make_graph(std::size_t n, std::initializer_list<std::pair<VertexIndex, VertexIndex>> edges);

/// Vertex degrees, descending.
std::vector<std::size_t> degree_sequence(const Graph& g);

std::string export_dot(const Graph& g);
std::string export_json(const Graph& g);

/// Inverse of export_json. Throws Error{BadFormat} on malformed input.
Graph import_json(std::string_view text);

}  // namespace ggg
