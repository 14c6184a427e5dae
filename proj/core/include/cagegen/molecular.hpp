#pragma once

#include <cstdint>
#include <vector>

#include "cagegen/map_of_motifs.hpp"

namespace cagegen {

/// The molecular map of a saturated map of motifs: one vertex per center,
/// one edge per bonded port pair (each center-port-port-center path of the
/// parent contracted to an edge), rotation order inherited from the motifs.
/// Multi-edges and loops are kept as such.
class MolecularMap {
public:
    MolecularMap() = default;

    int size() const { return static_cast<int>(names_.size()); }
    int degree(int v) const { return static_cast<int>(off_[v + 1] - off_[v]); }
    Dart peer(int v, int i) const { return adj_[off_[v] + i]; }
    MotifId vertex_name(int v) const { return names_[v]; }
    int edge_count() const { return static_cast<int>(adj_.size()) / 2; }

    /// Edge list with multiplicity; loops appear once.
    std::vector<std::pair<int, int>> edges() const;

    static MolecularMap build(std::vector<MotifId> names,
                              std::vector<std::vector<Dart>> adjacency);

private:
    std::vector<MotifId> names_;
    std::vector<std::uint32_t> off_{0};
    std::vector<Dart> adj_;
};

/// Derives the molecular map. Throws NotSaturated.
MolecularMap to_molecular_map(const MapOfMotifs& map);

} // namespace cagegen
