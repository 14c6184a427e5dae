#include "cagegen/faces.hpp"

#include "cagegen/errors.hpp"
#include "cagegen/molecular.hpp"

namespace cagegen {
namespace {

// Shared orbit tracer over an abstract dart successor.
template <typename Succ>
std::vector<FaceWalk> trace(int centers, const std::vector<int>& degrees, Succ succ) {
    std::vector<std::vector<char>> seen(centers);
    for (int c = 0; c < centers; ++c) seen[c].assign(degrees[c], 0);
    std::vector<FaceWalk> out;
    for (int c = 0; c < centers; ++c)
        for (int i = 0; i < degrees[c]; ++i) {
            if (seen[c][i]) continue;
            FaceWalk walk;
            Dart d{c, i};
            while (!seen[d.center][d.port]) {
                seen[d.center][d.port] = 1;
                walk.push_back(d);
                d = succ(d);
            }
            out.push_back(std::move(walk));
        }
    return out;
}

} // namespace

std::vector<FaceWalk> faces(const MapOfMotifs& map) {
    std::vector<int> deg(map.size());
    for (int c = 0; c < map.size(); ++c) deg[c] = map.degree(c);
    auto walks = trace(map.size(), deg, [&](Dart d) -> Dart {
        const RotEntry& e = map.at(d.center, d.port);
        if (e.free()) return {d.center, (d.port + 1) % map.degree(d.center)};
        return {e.peer_center, (e.peer_port + 1) % map.degree(e.peer_center)};
    });
    // Euler on the full map including implicit port vertices reduces to
    // centers - bonds + faces = 2 for genus zero.
    if (map.size() > 0 &&
        map.size() - map.bond_count() + static_cast<int>(walks.size()) != 2)
        throw NonPlanar("rotation system has positive genus");
    return walks;
}

std::vector<FaceWalk> faces(const MolecularMap& map) {
    std::vector<int> deg(map.size());
    for (int v = 0; v < map.size(); ++v) deg[v] = map.degree(v);
    auto walks = trace(map.size(), deg, [&](Dart d) -> Dart {
        Dart p = map.peer(d.center, d.port);
        return {p.center, (p.port + 1) % map.degree(p.center)};
    });
    if (map.size() > 0 &&
        map.size() - map.edge_count() + static_cast<int>(walks.size()) != 2)
        throw NonPlanar("rotation system has positive genus");
    return walks;
}

} // namespace cagegen
