#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cagegen/map_of_motifs.hpp"

namespace cagegen {

/// Where a metamotif port came from: either an untouched port of the core
/// motif, or the far end of a degree-2 motif chained onto a core port.
struct PortChain {
    std::uint8_t core_port;                 // port index of the core motif
    std::optional<MotifId> via;             // consumed degree-2 motif, if any
    std::uint8_t via_far_port = 0;          // its exposed end
    std::uint8_t via_near_port = 0;         // its consumed end
};

struct MetamotifInfo {
    MotifId core;                           // motif of the original base
    std::vector<PortChain> ports;           // one per metamotif port, in order
};

/// Records, per metamotif of the transformed base, the chain of original
/// motifs each port abbreviates.
struct ExpansionMap {
    std::vector<MetamotifInfo> motifs;      // indexed by transformed MotifId
};

struct Degree2Elimination {
    MotifBase base;                         // no degree-2 motifs
    ExpansionMap expansion;
};

/// Concatenates every degree-2 motif in every possible way onto the other
/// motifs and deletes it: each compatible port of a core motif either stays
/// or is replaced in place by the far-end color of a chained degree-2 motif,
/// one metamotif per rotation-distinct combination. Maximum degree is
/// unchanged. Throws NonTerminating when two degree-2 motifs of the base can
/// be concatenated (including one with itself), and EmptyBase when nothing
/// but degree-2 motifs exists.
Degree2Elimination eliminate_degree2(const MotifBase& base);

/// Re-inflates every metamotif of a saturated map into its recorded chain,
/// yielding a saturated map over the original base; size grows by the total
/// number of chained ports. Planarity and saturation are preserved.
MapOfMotifs expand(const MapOfMotifs& map, const ExpansionMap& expansion,
                   const MotifBase& original_base);

std::string serialize_expansion(const MotifBase& transformed, const MotifBase& original,
                                const ExpansionMap& expansion);

} // namespace cagegen
