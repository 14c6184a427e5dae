#pragma once

#include <vector>

#include "cagegen/map_of_motifs.hpp"

namespace cagegen {

/// One face walk: the darts of the orbit of next(opposite(.)), in order.
using FaceWalk = std::vector<Dart>;

/// Traces every face of the rotation system. Free ports bounce (the implicit
/// leaf vertex is entered and left along the same edge) so they do not split
/// faces. Throws NonPlanar when Euler's formula fails, i.e. the rotation
/// system has positive genus.
std::vector<FaceWalk> faces(const MapOfMotifs& map);

class MolecularMap;
std::vector<FaceWalk> faces(const MolecularMap& map);

} // namespace cagegen
