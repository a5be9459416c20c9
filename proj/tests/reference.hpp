#pragma once

// Test-only reference enumeration of the hub/rim/spoke edge rule, written
// directly from the index conventions (q_0 is q_m, indices above m wrap by
// subtracting m) and independent of ggg::families arithmetic.

#include <set>
#include <string>
#include <utility>

#include "ggg/graph.hpp"

namespace ggg::ref {

using LabelEdge = std::pair<std::string, std::string>;

inline LabelEdge ordered(std::string a, std::string b)
{
    auto la = *VertexLabel::parse(a);
    auto lb = *VertexLabel::parse(b);
    return la < lb ? LabelEdge{a, b} : LabelEdge{b, a};
}

/// k runs 0..k_max; the rim-spoke edges are p_i q_{i+2k-1}.
inline std::set<LabelEdge> reference_edges(int m, int k_max)
{
    std::set<LabelEdge> edges;
    auto p = [](int i) { return "p" + std::to_string(i); };
    auto q = [](int i) { return "q" + std::to_string(i); };
    for (int i = 1; i <= m; ++i) {
        edges.insert(ordered("a", q(i)));
        int next = i + 1 > m ? i + 1 - m : i + 1;
        edges.insert(ordered(p(i), p(next)));
        for (int k = 0; k <= k_max; ++k) {
            int j = i + 2 * k - 1;
            if (j == 0)
                j = m;
            while (j > m)
                j -= m;
            edges.insert(ordered(p(i), q(j)));
        }
    }
    return edges;
}

inline std::set<LabelEdge> reference_G(int m) { return reference_edges(m, (m - 3) / 2); }
inline std::set<LabelEdge> reference_H(int m) { return reference_edges(m, (m - 2) / 2); }

inline std::set<LabelEdge> label_edges(const Graph& g)
{
    std::set<LabelEdge> out;
    for (const auto& e : g.edges())
        out.insert({g.label(e.u).to_string(), g.label(e.v).to_string()});
    return out;
}

inline VertexIndex idx(const Graph& g, const std::string& label)
{
    return *g.index_of(*VertexLabel::parse(label));
}

}  // namespace ggg::ref
