#include "ggg/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <nlohmann/json.hpp>

namespace ggg {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::LabelsNotCanonical: return "LabelsNotCanonical";
    case ErrorKind::BadFormat: return "BadFormat";
    case ErrorKind::BadParity: return "BadParity";
    case ErrorKind::MTooSmall: return "MTooSmall";
    case ErrorKind::BadFamily: return "BadFamily";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::NotAnHGraph: return "NotAnHGraph";
    case ErrorKind::InputHasTriangle: return "InputHasTriangle";
    case ErrorKind::MissingVertex: return "MissingVertex";
    case ErrorKind::OverBudget: return "OverBudget";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    }
    return "Unknown";
}

VertexLabel VertexLabel::rim(int i)
{
    if (i < 1)
        throw Error(ErrorKind::IndexOutOfRange, "rim index must be >= 1, got " + std::to_string(i));
    return {LabelKind::Rim, i};
}

VertexLabel VertexLabel::spoke(int i)
{
    if (i < 1)
        throw Error(ErrorKind::IndexOutOfRange, "spoke index must be >= 1, got " + std::to_string(i));
    return {LabelKind::Spoke, i};
}

std::string VertexLabel::to_string() const
{
    switch (kind_) {
    case LabelKind::Hub: return "a";
    case LabelKind::Rim: return "p" + std::to_string(index_);
    case LabelKind::Spoke: return "q" + std::to_string(index_);
    }
    return {};
}

std::optional<VertexLabel> VertexLabel::parse(std::string_view text)
{
    if (text == "a")
        return hub();
    if (text.size() < 2 || (text[0] != 'p' && text[0] != 'q'))
        return std::nullopt;
    auto digits = text.substr(1);
    if (digits[0] == '0')
        return std::nullopt;
    int index = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc{} || end != digits.data() + digits.size() || index < 1)
        return std::nullopt;
    return VertexLabel(text[0] == 'p' ? LabelKind::Rim : LabelKind::Spoke, index);
}

std::string_view family_tag(Family family) noexcept
{
    switch (family) {
    case Family::None: return "none";
    case Family::G: return "G";
    case Family::H: return "H";
    case Family::Cycle: return "C";
    case Family::MycielskiCycle: return "M";
    case Family::HAugmented: return "HA";
    }
    return "none";
}

std::optional<Family> parse_family_tag(std::string_view tag) noexcept
{
    for (auto f : {Family::None, Family::G, Family::H, Family::Cycle, Family::MycielskiCycle,
                   Family::HAugmented}) {
        if (family_tag(f) == tag)
            return f;
    }
    return std::nullopt;
}

std::optional<VertexIndex> Graph::index_of(const VertexLabel& label) const
{
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        return std::nullopt;
    return static_cast<VertexIndex>(it - labels_.begin());
}

bool Graph::has_edge(VertexIndex u, VertexIndex v) const
{
    if (u >= adjacency_.size() || v >= adjacency_.size())
        return false;
    const auto& nu = adjacency_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

EdgeList Graph::edges() const
{
    EdgeList out;
    out.reserve(edge_count_);
    for (VertexIndex u = 0; u < adjacency_.size(); ++u) {
        for (auto v : adjacency_[u]) {
            if (u < v)
                out.push_back({u, v});
        }
    }
    return out;
}

Graph Graph::with_edges(std::span<const Edge> extra, GraphMeta meta) const
{
    auto all = edges();
    all.insert(all.end(), extra.begin(), extra.end());
    return build_graph(labels_, std::move(all), meta);
}

Graph build_graph(std::vector<VertexLabel> labels, EdgeList edges, GraphMeta meta)
{
    for (std::size_t i = 1; i < labels.size(); ++i) {
        if (!(labels[i - 1] < labels[i]))
            throw Error(ErrorKind::LabelsNotCanonical,
                        "labels must be strictly ascending in canonical order at position " +
                            std::to_string(i) + " (" + labels[i].to_string() + ")");
    }

    const auto n = labels.size();
    for (auto& e : edges) {
        if (e.u >= n || e.v >= n)
            throw Error(ErrorKind::IndexOutOfRange,
                        "edge endpoint " + std::to_string(std::max(e.u, e.v)) +
                            " out of range for " + std::to_string(n) + " vertices");
        if (e.u == e.v)
            throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + labels[e.u].to_string());
        if (e.u > e.v)
            std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.meta_ = meta;
    g.labels_ = std::move(labels);
    g.adjacency_.assign(n, {});
    for (const auto& e : edges) {
        g.adjacency_[e.u].push_back(e.v);
        g.adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : g.adjacency_)
        std::sort(nbrs.begin(), nbrs.end());
    g.edge_count_ = edges.size();
    return g;
}

Graph make_graph(std::size_t n, std::initializer_list<std::pair<VertexIndex, VertexIndex>> edges)
{
    std::vector<VertexLabel> labels;
    labels.reserve(n);
    for (std::size_t i = 1; i <= n; ++i)
        labels.push_back(VertexLabel::rim(static_cast<int>(i)));
    EdgeList list;
    for (auto [u, v] : edges)
        list.push_back({u, v});
    return build_graph(std::move(labels), std::move(list));
}

std::vector<std::size_t> degree_sequence(const Graph& g)
{
    std::vector<std::size_t> out;
    out.reserve(g.vertex_count());
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        out.push_back(g.degree(v));
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::string export_dot(const Graph& g)
{
    std::ostringstream os;
    os << "graph G {\n";
    for (const auto& label : g.labels())
        os << "  " << label.to_string() << ";\n";
    for (const auto& e : g.edges())
        os << "  " << g.label(e.u).to_string() << " -- " << g.label(e.v).to_string() << ";\n";
    os << "}\n";
    return os.str();
}

std::string export_json(const Graph& g)
{
    // Hand-rolled so the layout stays compact and byte-stable; labels never need escaping.
    std::ostringstream os;
    os << "{\n";
    os << "  \"family\": \"" << family_tag(g.family()) << "\",\n";
    os << "  \"m\": " << g.m() << ",\n";
    os << "  \"n\": " << g.vertex_count() << ",\n";
    os << "  \"vertices\": [";
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        os << (i ? ", " : "") << '"' << g.labels()[i].to_string() << '"';
    os << "],\n";
    os << "  \"edges\": [";
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        os << (i ? ",\n    " : "\n    ") << "[\"" << g.label(edges[i].u).to_string() << "\", \""
           << g.label(edges[i].v).to_string() << "\"]";
    }
    os << (edges.empty() ? "]\n" : "\n  ]\n");
    os << "}\n";
    return os.str();
}

Graph import_json(std::string_view text)
{
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::BadFormat, std::string("adjacency JSON: ") + e.what());
    }

    auto fail = [](const std::string& what) -> Error {
        return Error(ErrorKind::BadFormat, "adjacency JSON: " + what);
    };

    if (!doc.is_object())
        throw fail("top level must be an object");
    for (const char* key : {"family", "m", "n", "vertices", "edges"}) {
        if (!doc.contains(key))
            throw fail(std::string("missing field \"") + key + "\"");
    }
    if (!doc["family"].is_string() || !doc["m"].is_number_integer() ||
        !doc["n"].is_number_integer() || !doc["vertices"].is_array() || !doc["edges"].is_array())
        throw fail("field has the wrong type");

    auto family = parse_family_tag(doc["family"].get<std::string>());
    if (!family)
        throw fail("unknown family tag \"" + doc["family"].get<std::string>() + "\"");

    std::vector<VertexLabel> labels;
    for (const auto& item : doc["vertices"]) {
        if (!item.is_string())
            throw fail("vertex labels must be strings");
        auto label = VertexLabel::parse(item.get<std::string>());
        if (!label)
            throw fail("bad vertex label \"" + item.get<std::string>() + "\"");
        labels.push_back(*label);
    }
    if (doc["n"].get<long long>() != static_cast<long long>(labels.size()))
        throw fail("\"n\" does not match the vertex count");

    auto lookup = [&](const json& item) -> VertexIndex {
        if (!item.is_string())
            throw fail("edge endpoints must be strings");
        auto label = VertexLabel::parse(item.get<std::string>());
        if (!label)
            throw fail("bad edge endpoint \"" + item.get<std::string>() + "\"");
        auto it = std::lower_bound(labels.begin(), labels.end(), *label);
        if (it == labels.end() || *it != *label)
            throw fail("edge endpoint \"" + item.get<std::string>() + "\" is not a vertex");
        return static_cast<VertexIndex>(it - labels.begin());
    };

    std::vector<VertexLabel> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != labels)
        throw fail("vertices must be listed in canonical order");

    EdgeList edges;
    for (const auto& pair : doc["edges"]) {
        if (!pair.is_array() || pair.size() != 2)
            throw fail("each edge must be a two-element array");
        edges.push_back({lookup(pair[0]), lookup(pair[1])});
    }

    return build_graph(std::move(labels), std::move(edges),
                       GraphMeta{*family, doc["m"].get<int>()});
}

}  // namespace ggg
