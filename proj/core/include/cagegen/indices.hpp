#pragma once

#include <vector>

#include "cagegen/molecular.hpp"
#include "cagegen/rational.hpp"

namespace cagegen {

/// Topological quality record of one molecular map.
struct IndexReport {
    int largest_face = 0;
    Rational face_gap{0};     // (size1 - size2) / (2E/F), 0 when < 2 faces
    int class_count = 0;
    bool chiral = false;
    Rational min_sparsity{0};
};

struct FaceStats {
    int largest_face;
    Rational face_gap;
};

/// Face sizes from tracing; gap between the two largest divided by the mean
/// face size 2E/F.
FaceStats face_stats(const MolecularMap& map);

/// Minimum over all proper bipartitions of cut-size / min(|S1|,|S2|),
/// enumerated by a Gray code so each step updates the cut by one vertex
/// move. Throws TooLarge above `cap` vertices.
Rational sparsity_bruteforce(const MolecularMap& map, int cap = 20);

/// Planar sparsest cut through the dual: a proper cut with both sides
/// connected is a simple dual cycle; its smaller-side weight is the signed
/// sum, over the cycle's darts, of the spanning-subtree counts swept when
/// crossing primal tree edges. For each dual edge a breadth-first search
/// over (face, weight mod n) states finds the shortest closed walks through
/// it per weight class; walk minima equal simple-cycle minima by the mediant
/// inequality. `use_bound` enables the early exit when even the maximal
/// weight cannot beat the current minimum (never changes the result).
Rational sparsity_planar(const MolecularMap& map, bool use_bound = true);

} // namespace cagegen
