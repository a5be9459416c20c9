#include "ggg/families.hpp"

#include <algorithm>
#include <string>

#include "ggg/certify.hpp"

namespace ggg::families {

namespace {

std::string describe(const FamilySpec& spec)
{
    return std::string(family_tag(spec.family)) + " with m=" + std::to_string(spec.m);
}

std::vector<VertexLabel> family_labels(int m, bool with_hub)
{
    std::vector<VertexLabel> labels;
    labels.reserve(2 * static_cast<std::size_t>(m) + 1);
    if (with_hub)
        labels.push_back(VertexLabel::hub());
    for (int i = 1; i <= m; ++i)
        labels.push_back(VertexLabel::rim(i));
    for (int i = 1; i <= m; ++i)
        labels.push_back(VertexLabel::spoke(i));
    return labels;
}

// Index layout of a hub/rim/spoke graph: hub 0, Rim(i) at i, Spoke(i) at m+i.
constexpr VertexIndex hub_index() { return 0; }
constexpr VertexIndex rim_index(int i) { return static_cast<VertexIndex>(i); }
constexpr VertexIndex spoke_index(int i, int m) { return static_cast<VertexIndex>(m + i); }

Graph build_offset_family(Family family, int m)
{
    validate({family, m});
    const auto offsets = edge_offsets(family, m);

    EdgeList edges;
    for (int i = 1; i <= m; ++i) {
        edges.push_back({hub_index(), spoke_index(i, m)});
        edges.push_back({rim_index(i), rim_index(i % m + 1)});
        for (int o : offsets.residues)
            edges.push_back({rim_index(i), spoke_index(offset_index(i, o, m), m)});
    }
    return build_graph(family_labels(m, true), std::move(edges), {family, m});
}

}  // namespace

void validate(const FamilySpec& spec)
{
    const int m = spec.m;
    switch (spec.family) {
    case Family::G:
        if (m % 2 == 0)
            throw Error(ErrorKind::BadParity, "family G needs odd m, got " + describe(spec));
        if (m < 5)
            throw Error(ErrorKind::MTooSmall, "family G needs m >= 5, got " + describe(spec));
        return;
    case Family::H:
    case Family::HAugmented:
        if (m % 2 != 0)
            throw Error(ErrorKind::BadParity, "family H needs even m, got " + describe(spec));
        if (m < 6)
            throw Error(ErrorKind::MTooSmall, "family H needs m >= 6, got " + describe(spec));
        return;
    case Family::Cycle:
    case Family::MycielskiCycle:
        if (m < 3)
            throw Error(ErrorKind::MTooSmall, "cycles need m >= 3, got " + describe(spec));
        return;
    case Family::None:
        break;
    }
    throw Error(ErrorKind::BadFamily, "no construction for family " + describe(spec));
}

OffsetSet edge_offsets(Family family, int m)
{
    if (family != Family::G && family != Family::H)
        throw Error(ErrorKind::BadFamily, "offsets exist only for families G and H");
    validate({family, m});

    const int k_max = family == Family::G ? (m - 3) / 2 : (m - 2) / 2;
    OffsetSet set{m, {}};
    for (int k = 0; k <= k_max; ++k)
        set.residues.push_back(((2 * k - 1) % m + m) % m);
    std::sort(set.residues.begin(), set.residues.end());
    set.residues.erase(std::unique(set.residues.begin(), set.residues.end()), set.residues.end());
    return set;
}

Graph build_G(int m) { return build_offset_family(Family::G, m); }

Graph build_H(int m) { return build_offset_family(Family::H, m); }

Graph build_cycle(int m)
{
    validate({Family::Cycle, m});
    std::vector<VertexLabel> labels;
    EdgeList edges;
    for (int i = 1; i <= m; ++i) {
        labels.push_back(VertexLabel::rim(i));
        edges.push_back({static_cast<VertexIndex>(i - 1), static_cast<VertexIndex>(i % m)});
    }
    return build_graph(std::move(labels), std::move(edges), {Family::Cycle, m});
}

Graph mycielskian(const Graph& g)
{
    const auto n = static_cast<int>(g.vertex_count());
    if (n == 0)
        throw Error(ErrorKind::EmptyGraph, "mycielskian of the empty graph is undefined");

    // Original vertex u (0-based) maps to Rim(u+1), its shadow to Spoke(u+1).
    EdgeList edges;
    for (const auto& e : g.edges()) {
        const int u = static_cast<int>(e.u) + 1;
        const int v = static_cast<int>(e.v) + 1;
        edges.push_back({rim_index(u), rim_index(v)});
        edges.push_back({spoke_index(u, n), rim_index(v)});
        edges.push_back({spoke_index(v, n), rim_index(u)});
    }
    for (int i = 1; i <= n; ++i)
        edges.push_back({hub_index(), spoke_index(i, n)});

    const auto family = g.family() == Family::Cycle ? Family::MycielskiCycle : Family::None;
    return build_graph(family_labels(n, true), std::move(edges), {family, n});
}

Graph build(const FamilySpec& spec)
{
    validate(spec);
    switch (spec.family) {
    case Family::G: return build_G(spec.m);
    case Family::H: return build_H(spec.m);
    case Family::Cycle: return build_cycle(spec.m);
    case Family::MycielskiCycle: return mycielskian(build_cycle(spec.m));
    case Family::HAugmented: return remark1_augment(build_H(spec.m)).graph;
    case Family::None: break;
    }
    throw Error(ErrorKind::BadFamily, "no construction for family none");
}

Remark1Augmentation remark1_augment(const Graph& h)
{
    const int m = h.m();
    const bool plausible = h.family() == Family::H && m >= 6 && m % 2 == 0;
    if (!plausible || h != build_H(m))
        throw Error(ErrorKind::NotAnHGraph, "remark1_augment needs an unmodified H_m graph");

    Remark1Augmentation out;
    for (int i = 1; i <= m / 2; ++i)
        out.added.push_back({rim_index(i), rim_index(i + m / 2)});
    out.graph = h.with_edges(out.added, {Family::HAugmented, m});

    auto triangle = certify::is_triangle_free(out.graph);
    out.discrepancy = !triangle.triangle_free();
    out.witness = triangle.witness;
    return out;
}

Completion maximal_completion(const Graph& g)
{
    if (auto check = certify::is_triangle_free(g); !check.triangle_free())
        throw certify::input_has_triangle(g, *check.witness);

    const auto n = g.vertex_count();
    std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
    for (const auto& e : g.edges())
        adjacent[e.u][e.v] = adjacent[e.v][e.u] = 1;

    Completion out;
    for (VertexIndex u = 0; u < n; ++u) {
        for (VertexIndex v = u + 1; v < n; ++v) {
            if (adjacent[u][v])
                continue;
            bool closes_triangle = false;
            for (VertexIndex w = 0; w < n && !closes_triangle; ++w)
                closes_triangle = adjacent[u][w] && adjacent[v][w];
            if (closes_triangle)
                continue;
            adjacent[u][v] = adjacent[v][u] = 1;
            out.added.push_back({u, v});
        }
    }

    auto meta = g.meta();
    if (!out.added.empty())
        meta.family = Family::None;
    out.graph = g.with_edges(out.added, meta);
    return out;
}

}  // namespace ggg::families
