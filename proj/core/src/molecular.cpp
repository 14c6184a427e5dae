#include "cagegen/molecular.hpp"

#include "cagegen/errors.hpp"

namespace cagegen {

std::vector<std::pair<int, int>> MolecularMap::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 0; v < size(); ++v)
        for (int i = 0; i < degree(v); ++i) {
            Dart p = peer(v, i);
            if (Dart{v, i} < p) out.emplace_back(v, p.center);
        }
    return out;
}

MolecularMap MolecularMap::build(std::vector<MotifId> names,
                                 std::vector<std::vector<Dart>> adjacency) {
    MolecularMap m;
    m.names_ = std::move(names);
    for (auto& row : adjacency) {
        for (Dart d : row) m.adj_.push_back(d);
        m.off_.push_back(static_cast<std::uint32_t>(m.adj_.size()));
    }
    return m;
}

MolecularMap to_molecular_map(const MapOfMotifs& map) {
    if (!saturated(map)) throw NotSaturated("molecular map of an unsaturated map");
    std::vector<MotifId> names(map.size());
    std::vector<std::vector<Dart>> adj(map.size());
    for (int c = 0; c < map.size(); ++c) {
        names[c] = map.center_motif(c);
        adj[c].resize(map.degree(c));
        for (int i = 0; i < map.degree(c); ++i) {
            const RotEntry& e = map.at(c, i);
            adj[c][i] = {e.peer_center, e.peer_port};
        }
    }
    return MolecularMap::build(std::move(names), std::move(adj));
}

} // namespace cagegen
