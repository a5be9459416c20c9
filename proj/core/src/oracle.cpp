#include "ggg/oracle.hpp"

#include <string>

namespace ggg::oracle {

namespace {

using Matrix = std::vector<std::vector<bool>>;

Matrix to_matrix(const Graph& g)
{
    const auto n = g.vertex_count();
    Matrix adj(n, std::vector<bool>(n, false));
    for (const auto& e : g.edges())
        adj[e.u][e.v] = adj[e.v][e.u] = true;
    return adj;
}

void require_size(const Graph& g, std::size_t limit, const char* what)
{
    if (g.vertex_count() > limit)
        throw Error(ErrorKind::OverBudget, std::string(what) + " oracle is limited to " +
                                               std::to_string(limit) + " vertices, got " +
                                               std::to_string(g.vertex_count()));
}

std::vector<TriangleWitness> triangles_of(const Matrix& adj)
{
    const auto n = static_cast<VertexIndex>(adj.size());
    std::vector<TriangleWitness> out;
    for (VertexIndex a = 0; a < n; ++a)
        for (VertexIndex b = a + 1; b < n; ++b)
            for (VertexIndex c = b + 1; c < n; ++c)
                if (adj[a][b] && adj[b][c] && adj[a][c])
                    out.push_back({{a, b, c}});
    return out;
}

bool has_four_cycle(const Matrix& adj)
{
    const auto n = adj.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t d = c + 1; d < n; ++d) {
                    // The three distinct 4-cycles on {a,b,c,d}.
                    if (adj[a][b] && adj[b][c] && adj[c][d] && adj[d][a])
                        return true;
                    if (adj[a][b] && adj[b][d] && adj[d][c] && adj[c][a])
                        return true;
                    if (adj[a][c] && adj[c][b] && adj[b][d] && adj[d][a])
                        return true;
                }
    return false;
}

// Is there a simple cycle of exactly `length` through `start` whose other
// vertices all exceed `start`?
bool cycle_from(const Matrix& adj, std::size_t start, std::size_t current, std::size_t length,
                std::vector<bool>& on_path, std::size_t depth)
{
    const auto n = adj.size();
    if (depth == length)
        return adj[current][start];
    for (std::size_t next = start + 1; next < n; ++next) {
        if (!adj[current][next] || on_path[next])
            continue;
        on_path[next] = true;
        bool found = cycle_from(adj, start, next, length, on_path, depth + 1);
        on_path[next] = false;
        if (found)
            return true;
    }
    return false;
}

bool has_cycle_of_length(const Matrix& adj, std::size_t length)
{
    const auto n = adj.size();
    std::vector<bool> on_path(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        on_path[start] = true;
        bool found = cycle_from(adj, start, start, length, on_path, 1);
        on_path[start] = false;
        if (found)
            return true;
    }
    return false;
}

}  // namespace

int brute_force_chromatic(const Graph& g, const OracleBudget& budget)
{
    require_size(g, budget.chromatic_max_vertices, "chromatic");
    const auto n = g.vertex_count();
    if (n == 0)
        return 0;
    const auto edges = g.edges();

    for (int k = 1;; ++k) {
        // Odometer over colours of vertices 1..n-1 (vertex 0 stays 0). When
        // edge (u,v) is violated, every assignment sharing digits 0..v is too,
        // so the odometer advances at digit v directly.
        std::vector<int> color(n, 0);
        while (true) {
            std::size_t bad_digit = 0;
            for (const auto& e : edges) {
                if (color[e.u] == color[e.v] && (bad_digit == 0 || e.v < bad_digit))
                    bad_digit = e.v;
            }
            if (bad_digit == 0)
                return k;
            std::size_t digit = bad_digit;
            for (std::size_t i = digit + 1; i < n; ++i)
                color[i] = 0;
            while (digit > 0 && color[digit] == k - 1) {
                color[digit] = 0;
                --digit;
            }
            if (digit == 0)
                break;  // wrapped past vertex 1: no k-colouring
            ++color[digit];
        }
    }
}

std::vector<TriangleWitness> enumerate_triangles(const Graph& g, const OracleBudget& budget)
{
    require_size(g, budget.structural_max_vertices, "triangle");
    return triangles_of(to_matrix(g));
}

MaximalityVerdict exhaustive_maximality(const Graph& g, const OracleBudget& budget)
{
    require_size(g, budget.structural_max_vertices, "maximality");
    auto adj = to_matrix(g);
    if (!triangles_of(adj).empty())
        throw Error(ErrorKind::InputHasTriangle, "maximality oracle needs a triangle-free graph");

    const auto n = static_cast<VertexIndex>(adj.size());
    for (VertexIndex u = 0; u < n; ++u) {
        for (VertexIndex v = u + 1; v < n; ++v) {
            if (adj[u][v])
                continue;
            adj[u][v] = adj[v][u] = true;
            bool creates_triangle = !triangles_of(adj).empty();
            adj[u][v] = adj[v][u] = false;
            if (!creates_triangle)
                return {false, Edge{u, v}};
        }
    }
    return {true, std::nullopt};
}

GirthVerdict fixed_girth_check(const Graph& g, const OracleBudget& budget)
{
    require_size(g, budget.structural_max_vertices, "girth");
    const auto adj = to_matrix(g);
    if (!triangles_of(adj).empty())
        return {false, 3};
    if (has_four_cycle(adj))
        return {true, std::nullopt};
    for (std::size_t length = 5; length <= adj.size(); ++length) {
        if (has_cycle_of_length(adj, length))
            return {false, static_cast<int>(length)};
    }
    return {false, std::nullopt};
}

}  // namespace ggg::oracle
