#include "ggg/certify.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace ggg::certify {

namespace {

class BudgetCounter {
public:
    explicit BudgetCounter(std::uint64_t budget) : budget_(budget) {}

    /// False once the budget is spent.
    bool tick() noexcept { return ++steps_ <= budget_; }
    std::uint64_t steps() const noexcept { return steps_; }

private:
    std::uint64_t budget_;
    std::uint64_t steps_ = 0;
};

std::vector<std::vector<char>> adjacency_matrix(const Graph& g)
{
    const auto n = g.vertex_count();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (VertexIndex u = 0; u < n; ++u) {
        for (auto v : g.neighbors(u))
            adj[u][v] = 1;
    }
    return adj;
}

std::optional<VertexIndex> first_common_neighbor(const Graph& g, VertexIndex u, VertexIndex v)
{
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else
            return *i;
    }
    return std::nullopt;
}

TriangleWitness make_triangle(VertexIndex a, VertexIndex b, VertexIndex c)
{
    TriangleWitness t{{a, b, c}};
    std::sort(t.vertices.begin(), t.vertices.end());
    return t;
}

bool is_bipartite(const Graph& g)
{
    const auto n = g.vertex_count();
    std::vector<int> side(n, -1);
    for (VertexIndex root = 0; root < n; ++root) {
        if (side[root] != -1)
            continue;
        side[root] = 0;
        std::deque<VertexIndex> queue{root};
        while (!queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            for (auto w : g.neighbors(u)) {
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if (side[w] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

TriangleError input_has_triangle(const Graph& g, const TriangleWitness& witness)
{
    return TriangleError(witness, "input graph has a triangle " + describe(g, witness));
}

std::string describe(const Graph& g, const TriangleWitness& witness)
{
    return "{" + g.label(witness.vertices[0]).to_string() + ", " +
           g.label(witness.vertices[1]).to_string() + ", " +
           g.label(witness.vertices[2]).to_string() + "}";
}

std::string describe(const Graph& g, const Edge& edge)
{
    return g.label(edge.u).to_string() + "-" + g.label(edge.v).to_string();
}

// -- triangles and girth ------------------------------------------------------

TriangleCheck is_triangle_free(const Graph& g)
{
    for (VertexIndex u = 0; u < g.vertex_count(); ++u) {
        for (auto v : g.neighbors(u)) {
            if (v <= u)
                continue;
            if (auto w = first_common_neighbor(g, u, v))
                return {make_triangle(u, v, *w)};
        }
    }
    return {};
}

bool is_triangle(const Graph& g, const TriangleWitness& witness)
{
    const auto& [a, b, c] = witness.vertices;
    if (a == b || b == c || a == c)
        return false;
    return g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c);
}

std::optional<int> girth(const Graph& g)
{
    const auto n = g.vertex_count();
    std::optional<int> best;
    std::vector<int> dist(n);
    std::vector<VertexIndex> parent(n);

    for (VertexIndex root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[root] = 0;
        parent[root] = root;
        std::deque<VertexIndex> queue{root};
        while (!queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            // Any cycle closed from here has length >= 2 * dist[u].
            if (best && 2 * dist[u] >= *best)
                break;
            for (auto w : g.neighbors(u)) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if (parent[u] != w) {
                    int length = dist[u] + dist[w] + 1;
                    if (!best || length < *best)
                        best = length;
                }
            }
        }
        if (best && *best == 3)
            break;
    }
    return best;
}

// -- maximality ---------------------------------------------------------------

MaximalityReport maximality_check(const Graph& g, bool audit)
{
    if (auto check = is_triangle_free(g); !check.triangle_free())
        throw input_has_triangle(g, *check.witness);

    MaximalityReport report;
    for (VertexIndex u = 0; u < g.vertex_count(); ++u) {
        for (VertexIndex v = u + 1; v < g.vertex_count(); ++v) {
            if (g.has_edge(u, v))
                continue;
            auto w = first_common_neighbor(g, u, v);
            if (!w) {
                report.maximal = false;
                report.addable = Edge{u, v};
                report.audit.clear();
                return report;
            }
            if (audit)
                report.audit.emplace_back(Edge{u, v}, make_triangle(u, v, *w));
        }
    }
    report.maximal = true;
    return report;
}

// -- Hamiltonicity ------------------------------------------------------------

std::string_view to_string(SearchStatus status) noexcept
{
    switch (status) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NotFound: return "not_found";
    case SearchStatus::BudgetExceeded: return "budget_exceeded";
    }
    return "unknown";
}

bool is_hamiltonian_cycle(const Graph& g, const CycleCertificate& cycle)
{
    const auto n = g.vertex_count();
    if (n < 3 || cycle.order.size() != n)
        return false;
    std::vector<char> seen(n, 0);
    for (auto v : cycle.order) {
        if (v >= n || seen[v])
            return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!g.has_edge(cycle.order[i], cycle.order[(i + 1) % n]))
            return false;
    }
    return true;
}

namespace {

class HamiltonianSearcher {
public:
    HamiltonianSearcher(const Graph& g, std::uint64_t budget)
        : g_(g), n_(g.vertex_count()), adj_(adjacency_matrix(g)), visited_(n_, 0),
          free_neighbors_(n_, 0), budget_(budget)
    {
        for (VertexIndex v = 0; v < n_; ++v)
            free_neighbors_[v] = static_cast<int>(g.degree(v));
    }

    HamiltonianSearch run()
    {
        HamiltonianSearch result;
        if (n_ < 3 || std::any_of(free_neighbors_.begin(), free_neighbors_.end(),
                                  [](int d) { return d < 2; })) {
            result.status = SearchStatus::NotFound;
            return result;
        }
        visit(start_);
        bool found = extend(start_);
        result.steps = budget_.steps();
        if (exhausted_) {
            result.status = SearchStatus::BudgetExceeded;
        } else if (found) {
            result.status = SearchStatus::Found;
            result.cycle = CycleCertificate{path_};
        } else {
            result.status = SearchStatus::NotFound;
        }
        return result;
    }

private:
    void visit(VertexIndex v)
    {
        visited_[v] = 1;
        path_.push_back(v);
        for (auto w : g_.neighbors(v))
            --free_neighbors_[w];
    }

    void unvisit(VertexIndex v)
    {
        visited_[v] = 0;
        path_.pop_back();
        for (auto w : g_.neighbors(v))
            ++free_neighbors_[w];
    }

    // An unvisited vertex needs two cycle neighbours among the unvisited
    // vertices, the current path end and the start.
    bool feasible(VertexIndex end) const
    {
        for (VertexIndex v = 0; v < n_; ++v) {
            if (!visited_[v] && options(v, end) < 2)
                return false;
        }
        return true;
    }

    int options(VertexIndex v, VertexIndex end) const
    {
        return free_neighbors_[v] + adj_[v][end] + (end != start_ ? adj_[v][start_] : 0);
    }

    bool extend(VertexIndex end)
    {
        if (path_.size() == n_)
            return adj_[end][start_] != 0;

        // A vertex left with exactly two options, one of them `end`, must
        // follow `end` directly; two such vertices cannot both do so. Not at
        // the start, which still has both cycle slots open.
        std::vector<VertexIndex> candidates;
        std::optional<VertexIndex> forced;
        for (auto next : g_.neighbors(end)) {
            if (visited_[next])
                continue;
            if (end != start_ && options(next, end) == 2 && path_.size() + 1 < n_) {
                if (forced)
                    return false;
                forced = next;
            }
            candidates.push_back(next);
        }
        if (forced)
            candidates.assign(1, *forced);
        // Fewest onward options first; ties by index keep certificates deterministic.
        std::stable_sort(candidates.begin(), candidates.end(), [&](VertexIndex a, VertexIndex b) {
            return free_neighbors_[a] < free_neighbors_[b];
        });

        for (auto next : candidates) {
            if (!budget_.tick()) {
                exhausted_ = true;
                return false;
            }
            visit(next);
            if (feasible(next) && extend(next))
                return true;
            unvisit(next);
            if (exhausted_)
                return false;
        }
        return false;
    }

    const Graph& g_;
    std::size_t n_;
    std::vector<std::vector<char>> adj_;
    std::vector<char> visited_;
    std::vector<int> free_neighbors_;  // unvisited neighbours per vertex
    std::vector<VertexIndex> path_;
    VertexIndex start_ = 0;  // the hub, when present, sorts first
    BudgetCounter budget_;
    bool exhausted_ = false;
};

}  // namespace

HamiltonianSearch find_hamiltonian_cycle(const Graph& g, std::uint64_t budget)
{
    auto result = HamiltonianSearcher(g, budget).run();
    if (result.cycle && !is_hamiltonian_cycle(g, *result.cycle))
        throw std::logic_error("hamiltonian search produced an invalid certificate");
    return result;
}

Lemma2PathAudit check_lemma2_path(const Graph& g, int m)
{
    if ((g.family() != Family::G && g.family() != Family::H) || g.m() != m)
        throw Error(ErrorKind::BadFamily, "check_lemma2_path needs G_m or H_m with matching m");

    std::vector<VertexLabel> walk;
    for (int j = 1; j <= m - 2; ++j)
        walk.push_back(j % 2 == 1 ? VertexLabel::rim(j) : VertexLabel::spoke(j));
    walk.push_back(VertexLabel::rim(m - 1));
    walk.push_back(VertexLabel::spoke(m));
    walk.push_back(VertexLabel::hub());
    walk.push_back(VertexLabel::spoke(1));
    walk.push_back(VertexLabel::rim(m));

    Lemma2PathAudit audit;
    for (const auto& label : walk)
        audit.sequence.push_back(*g.index_of(label));

    audit.edges_valid = true;
    for (std::size_t i = 0; i < audit.sequence.size(); ++i) {
        auto a = audit.sequence[i];
        auto b = audit.sequence[(i + 1) % audit.sequence.size()];
        if (!g.has_edge(a, b)) {
            audit.edges_valid = false;
            audit.first_non_edge = std::pair{a, b};
            break;
        }
    }
    audit.distinct_vertices = std::set(audit.sequence.begin(), audit.sequence.end()).size();
    audit.covers_all = audit.distinct_vertices == g.vertex_count() &&
                       audit.sequence.size() == g.vertex_count();
    return audit;
}

// -- colouring ----------------------------------------------------------------

int Coloring::color_count() const
{
    std::set<int> used;
    for (int c : colors) {
        if (c > 0)
            used.insert(c);
    }
    return static_cast<int>(used.size());
}

ColoringCheck verify_coloring(const Graph& g, const Coloring& coloring)
{
    if (coloring.colors.size() != g.vertex_count())
        throw Error(ErrorKind::MissingVertex,
                    "coloring covers " + std::to_string(coloring.colors.size()) + " of " +
                        std::to_string(g.vertex_count()) + " vertices");
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        if (coloring.colors[v] < 1)
            throw Error(ErrorKind::MissingVertex,
                        "vertex " + g.label(v).to_string() + " has no color");
    }
    for (const auto& e : g.edges()) {
        if (coloring.colors[e.u] == coloring.colors[e.v])
            return {e};
    }
    return {};
}

namespace {

// Saturation bookkeeping shared by the greedy bound and the exact search.
class ColorState {
public:
    ColorState(const Graph& g, int max_colors)
        : g_(g), colors_(g.vertex_count(), 0),
          neighbor_colors_(g.vertex_count(), std::vector<int>(max_colors + 2, 0)),
          saturation_(g.vertex_count(), 0)
    {
    }

    int color(VertexIndex v) const { return colors_[v]; }
    bool allowed(VertexIndex v, int c) const { return neighbor_colors_[v][c] == 0; }
    const std::vector<int>& colors() const { return colors_; }

    void assign(VertexIndex v, int c)
    {
        colors_[v] = c;
        for (auto w : g_.neighbors(v)) {
            if (neighbor_colors_[w][c]++ == 0)
                ++saturation_[w];
        }
    }

    void clear(VertexIndex v)
    {
        int c = colors_[v];
        colors_[v] = 0;
        for (auto w : g_.neighbors(v)) {
            if (--neighbor_colors_[w][c] == 0)
                --saturation_[w];
        }
    }

    /// Uncoloured vertex of highest saturation, then highest degree, then lowest index.
    std::optional<VertexIndex> pick() const
    {
        std::optional<VertexIndex> best;
        for (VertexIndex v = 0; v < colors_.size(); ++v) {
            if (colors_[v] != 0)
                continue;
            if (!best || saturation_[v] > saturation_[*best] ||
                (saturation_[v] == saturation_[*best] && g_.degree(v) > g_.degree(*best)))
                best = v;
        }
        return best;
    }

private:
    const Graph& g_;
    std::vector<int> colors_;
    std::vector<std::vector<int>> neighbor_colors_;
    std::vector<int> saturation_;
};

Coloring dsatur_greedy(const Graph& g)
{
    const int n = static_cast<int>(g.vertex_count());
    ColorState state(g, n);
    while (auto v = state.pick()) {
        int c = 1;
        while (!state.allowed(*v, c))
            ++c;
        state.assign(*v, c);
    }
    return {state.colors()};
}

class KColorSearch {
public:
    KColorSearch(const Graph& g, int k, BudgetCounter& budget)
        : state_(g, k), k_(k), budget_(budget)
    {
    }

    /// nullopt when no k-colouring exists.
    std::optional<Coloring> run()
    {
        if (search(0))
            return Coloring{state_.colors()};
        return std::nullopt;
    }

private:
    // Colours are introduced in order, so a fresh colour is only ever
    // max_used + 1; the first vertex therefore always receives colour 1.
    bool search(int max_used)
    {
        auto v = state_.pick();
        if (!v)
            return true;
        const int limit = std::min(k_, max_used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (!state_.allowed(*v, c))
                continue;
            if (!budget_.tick())
                throw Error(ErrorKind::BudgetExceeded,
                            "chromatic number search exceeded " +
                                std::to_string(budget_.steps() - 1) + " steps");
            state_.assign(*v, c);
            if (search(std::max(max_used, c)))
                return true;
            state_.clear(*v);
        }
        return false;
    }

    ColorState state_;
    int k_;
    BudgetCounter& budget_;
};

}  // namespace

ChromaticResult chromatic_number(const Graph& g, std::uint64_t budget)
{
    const auto n = g.vertex_count();
    if (n == 0)
        return {};
    if (g.edge_count() == 0)
        return {1, Coloring{std::vector<int>(n, 1)}, 0};

    auto best = dsatur_greedy(g);
    int upper = best.color_count();
    int lower = is_bipartite(g) ? 2 : 3;

    BudgetCounter counter(budget);
    for (int k = lower; k < upper; ++k) {
        if (auto found = KColorSearch(g, k, counter).run()) {
            best = std::move(*found);
            upper = k;
            break;
        }
    }

    if (!verify_coloring(g, best).proper())
        throw std::logic_error("chromatic search produced an improper coloring");
    return {upper, std::move(best), counter.steps()};
}

Coloring lemma1_coloring(const families::FamilySpec& spec)
{
    if (spec.family != Family::G && spec.family != Family::H)
        throw Error(ErrorKind::BadFamily, "lemma1_coloring applies to families G and H only");
    families::validate(spec);

    const int m = spec.m;
    Coloring coloring;
    coloring.colors.assign(2 * static_cast<std::size_t>(m) + 1, 0);
    coloring.colors[0] = 1;
    for (int i = 1; i <= m; ++i) {
        coloring.colors[i] = (i % 2 == 1) ? 1 : 3;
        coloring.colors[m + i] = 2;
    }
    if (m % 2 == 1)
        coloring.colors[m] = 4;
    return coloring;
}

// -- planarity ----------------------------------------------------------------

NonplanarityVerdict nonplanarity_edge_bound(const Graph& g)
{
    NonplanarityVerdict verdict;
    verdict.triangle_free = is_triangle_free(g).triangle_free();
    verdict.edges = g.edge_count();
    verdict.bound = 2 * static_cast<long long>(g.vertex_count()) - 4;
    verdict.certified = verdict.triangle_free && g.vertex_count() >= 3 &&
                        static_cast<long long>(verdict.edges) > verdict.bound;
    return verdict;
}

// -- Mycielski containment -----------------------------------------------------

MycielskiContainment mycielski_subgraph_check(const Graph& gm)
{
    if (gm.family() != Family::G)
        throw Error(ErrorKind::BadFamily, "mycielski_subgraph_check needs a G-family graph");
    families::validate({Family::G, gm.m()});

    const auto mm = families::mycielskian(families::build_cycle(gm.m()));
    MycielskiContainment out;
    std::set<Edge> inside;
    for (const auto& e : mm.edges()) {
        auto u = gm.index_of(mm.label(e.u));
        auto v = gm.index_of(mm.label(e.v));
        if (!u || !v || !gm.has_edge(*u, *v)) {
            out.missing.push_back(e);
            continue;
        }
        inside.insert(Edge{std::min(*u, *v), std::max(*u, *v)});
    }
    for (const auto& e : gm.edges()) {
        if (!inside.contains(e))
            ++out.extra_edges;
    }
    out.holds = out.missing.empty();
    return out;
}

// -- isomorphism --------------------------------------------------------------

std::string_view to_string(IsomorphismStatus status) noexcept
{
    switch (status) {
    case IsomorphismStatus::Isomorphic: return "isomorphic";
    case IsomorphismStatus::NotIsomorphic: return "not_isomorphic";
    case IsomorphismStatus::BudgetExceeded: return "budget_exceeded";
    }
    return "unknown";
}

bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<VertexIndex>& mapping)
{
    const auto n = g1.vertex_count();
    if (g2.vertex_count() != n || mapping.size() != n || g1.edge_count() != g2.edge_count())
        return false;
    std::vector<char> hit(n, 0);
    for (auto image : mapping) {
        if (image >= n || hit[image])
            return false;
        hit[image] = 1;
    }
    for (const auto& e : g1.edges()) {
        if (!g2.has_edge(mapping[e.u], mapping[e.v]))
            return false;
    }
    std::vector<VertexIndex> inverse(n);
    for (VertexIndex v = 0; v < n; ++v)
        inverse[mapping[v]] = v;
    for (const auto& e : g2.edges()) {
        if (!g1.has_edge(inverse[e.u], inverse[e.v]))
            return false;
    }
    return true;
}

namespace {

class IsomorphismSearcher {
public:
    IsomorphismSearcher(const Graph& g1, const Graph& g2, std::uint64_t budget)
        : g1_(g1), g2_(g2), adj1_(adjacency_matrix(g1)), adj2_(adjacency_matrix(g2)),
          mapping_(g1.vertex_count(), kUnmapped), used_(g2.vertex_count(), 0), budget_(budget)
    {
        order_ = search_order();
    }

    IsomorphismResult run()
    {
        IsomorphismResult result;
        bool found = assign(0);
        result.steps = budget_.steps();
        if (exhausted_) {
            result.status = IsomorphismStatus::BudgetExceeded;
        } else if (found) {
            result.status = IsomorphismStatus::Isomorphic;
            result.mapping = mapping_;
        }
        return result;
    }

private:
    static constexpr VertexIndex kUnmapped = static_cast<VertexIndex>(-1);

    // Highest degree first, then the vertex most connected to those already placed.
    std::vector<VertexIndex> search_order() const
    {
        const auto n = g1_.vertex_count();
        std::vector<VertexIndex> order;
        std::vector<char> placed(n, 0);
        std::vector<int> links(n, 0);
        while (order.size() < n) {
            std::optional<VertexIndex> best;
            for (VertexIndex v = 0; v < n; ++v) {
                if (placed[v])
                    continue;
                if (!best || links[v] > links[*best] ||
                    (links[v] == links[*best] && g1_.degree(v) > g1_.degree(*best)))
                    best = v;
            }
            placed[*best] = 1;
            order.push_back(*best);
            for (auto w : g1_.neighbors(*best))
                ++links[w];
        }
        return order;
    }

    bool consistent(VertexIndex v, VertexIndex image, std::size_t depth) const
    {
        for (std::size_t i = 0; i < depth; ++i) {
            auto w = order_[i];
            if (adj1_[v][w] != adj2_[image][mapping_[w]])
                return false;
        }
        return true;
    }

    bool assign(std::size_t depth)
    {
        if (depth == order_.size())
            return true;
        auto v = order_[depth];
        for (VertexIndex image = 0; image < g2_.vertex_count(); ++image) {
            if (used_[image] || g2_.degree(image) != g1_.degree(v))
                continue;
            if (!budget_.tick()) {
                exhausted_ = true;
                return false;
            }
            if (!consistent(v, image, depth))
                continue;
            mapping_[v] = image;
            used_[image] = 1;
            if (assign(depth + 1))
                return true;
            used_[image] = 0;
            mapping_[v] = kUnmapped;
            if (exhausted_)
                return false;
        }
        return false;
    }

    const Graph& g1_;
    const Graph& g2_;
    std::vector<std::vector<char>> adj1_;
    std::vector<std::vector<char>> adj2_;
    std::vector<VertexIndex> order_;
    std::vector<VertexIndex> mapping_;
    std::vector<char> used_;
    BudgetCounter budget_;
    bool exhausted_ = false;
};

}  // namespace

IsomorphismResult isomorphism_check(const Graph& g1, const Graph& g2, std::uint64_t budget)
{
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() ||
        degree_sequence(g1) != degree_sequence(g2))
        return {};
    if (girth(g1) != girth(g2))
        return {};

    auto result = IsomorphismSearcher(g1, g2, budget).run();
    if (result.status == IsomorphismStatus::Isomorphic && !is_isomorphism(g1, g2, result.mapping))
        throw std::logic_error("isomorphism search produced an invalid mapping");
    return result;
}

}  // namespace ggg::certify
