#pragma once

#include <optional>
#include <vector>

#include "ggg/graph.hpp"

namespace ggg::families {

/// Names a constructible graph. Valid combinations:
///   G: m odd, m >= 5;  H, HAugmented: m even, m >= 6;  Cycle, MycielskiCycle: m >= 3.
struct FamilySpec {
    Family family = Family::G;
    int m = 5;
};

/// Throws Error{BadFamily, BadParity, MTooSmall} if `spec` names no graph.
void validate(const FamilySpec& spec);

/// Residues o (mod m) such that Rim(i) is adjacent to Spoke(i+o).
struct OffsetSet {
    int modulus = 0;
    std::vector<int> residues;  // ascending, in [0, modulus)
};

/// Offsets (2k-1) mod m, k = 0..(m-3)/2 for G and k = 0..(m-2)/2 for H.
OffsetSet edge_offsets(Family family, int m);

/// Spoke index reached from rim index i (1-based) by offset o, wrapping mod m.
constexpr int offset_index(int i, int offset, int m) noexcept
{
    return ((i - 1 + offset) % m + m) % m + 1;
}

Graph build_G(int m);
Graph build_H(int m);
Graph build_cycle(int m);

/// Mycielskian: vertex i becomes Rim(i+1), its shadow Spoke(i+1) is joined
/// to the rim images of its neighbours, and a hub is joined to every shadow.
/// Throws Error{EmptyGraph}.
Graph mycielskian(const Graph& g);

/// Dispatches on spec.family. HAugmented yields H_m plus its diametral rim chords.
Graph build(const FamilySpec& spec);

struct Remark1Augmentation {
    Graph graph;
    EdgeList added;  // diametral chords Rim(i)-Rim(i+m/2), i = 1..m/2
    bool discrepancy = false;  // the augmented graph contains a triangle
    std::optional<TriangleWitness> witness;
};

/// Adds the m/2 diametral rim chords to an unmodified H_m. Never fails on a
/// triangle; the discrepancy flag reports it. Throws Error{NotAnHGraph}.
Remark1Augmentation remark1_augment(const Graph& h);

struct Completion {
    Graph graph;
    EdgeList added;  // in scan order
};

/// Greedy maximal triangle-free supergraph: scans non-edges in canonical
/// order and keeps every one that closes no triangle.
/// Throws Error{InputHasTriangle}.
Completion maximal_completion(const Graph& g);

}  // namespace ggg::families
