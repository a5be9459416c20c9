#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ggg/graph.hpp"

// Brute-force reference implementations. They read a graph only through its
// edge list and share no search code with ggg::certify.
namespace ggg::oracle {

/// Inputs above these sizes are refused with Error{OverBudget}.
struct OracleBudget {
    std::size_t chromatic_max_vertices = 15;
    std::size_t structural_max_vertices = 41;
};

/// Smallest k admitting a proper colouring, by enumerating colour
/// assignments in lexicographic order with vertex 0 fixed.
int brute_force_chromatic(const Graph& g, const OracleBudget& budget = {});

/// Every triangle once, vertices ascending, triangles in lexicographic order.
std::vector<TriangleWitness> enumerate_triangles(const Graph& g, const OracleBudget& budget = {});

struct MaximalityVerdict {
    bool maximal = false;
    std::optional<Edge> addable;  // first non-edge whose addition creates no triangle
};

/// Adds each non-edge in turn and re-enumerates triangles.
/// Throws Error{InputHasTriangle} when g is not triangle-free.
MaximalityVerdict exhaustive_maximality(const Graph& g, const OracleBudget& budget = {});

struct GirthVerdict {
    bool girth_is_4 = false;
    std::optional<int> other;  // actual girth when not 4; nullopt if acyclic
};

/// No triangle among all triples and some 4-cycle among all quadruples;
/// longer girths come from a simple-cycle enumeration.
GirthVerdict fixed_girth_check(const Graph& g, const OracleBudget& budget = {});

}  // namespace ggg::oracle
