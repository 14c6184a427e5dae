#pragma once

#include <cstdint>
#include <vector>

#include "cagegen/motif.hpp"

namespace cagegen {

/// A directed half-edge: port `port` of center `center`.
struct Dart {
    std::int32_t center;
    std::int32_t port;

    friend bool operator==(const Dart&, const Dart&) = default;
    friend auto operator<=>(const Dart&, const Dart&) = default;
};

/// One rotation-map slot. peer_center < 0 means the port vertex is free.
struct RotEntry {
    std::int32_t peer_center = -1;
    std::int32_t peer_port = 0;

    bool free() const { return peer_center < 0; }
};

/// A vertex-colored planar map assembled from motifs, stored as a rotation
/// map over center vertices: per center and port index, either Free or the
/// bonded peer (center, port). Port vertices exist only implicitly inside
/// the entries. Bond entries mirror each other and join complementary
/// colors; each center's port colors and cyclic order are its motif's.
///
/// Mutation (add/pop/bond/unbond) is a build-phase API used by the
/// generators and fold application; maps handed to consumers are treated as
/// immutable and are safe to share across threads read-only.
class MapOfMotifs {
public:
    explicit MapOfMotifs(const MotifBase* base) : base_(base) {}

    const MotifBase& base() const { return *base_; }
    int size() const { return static_cast<int>(centers_.size()); }
    MotifId center_motif(int c) const { return centers_[c]; }
    int degree(int c) const { return static_cast<int>(base_->motif(centers_[c]).degree()); }
    Color port_color(int c, int i) const { return base_->motif(centers_[c]).ports[i]; }
    const RotEntry& at(int c, int i) const { return rot_[off_[c] + i]; }
    int total_ports() const { return static_cast<int>(rot_.size()); }

    int bond_count() const;
    int free_count() const;

    // --- build phase ---
    int add_center(MotifId m);
    void pop_center();                  // last center must have no bonds
    void bond(Dart a, Dart b);          // throws InvalidPair
    void unbond(Dart a);

    friend bool operator==(const MapOfMotifs& x, const MapOfMotifs& y) {
        return x.centers_ == y.centers_ && x.rot_same(y);
    }

private:
    bool rot_same(const MapOfMotifs& y) const;

    const MotifBase* base_;
    std::vector<MotifId> centers_;
    std::vector<std::uint32_t> off_;
    std::vector<RotEntry> rot_;
};

/// True iff no rotation entry is free.
bool saturated(const MapOfMotifs& map);

/// Characteristic vector over all port vertices (bonded pairs cancel, so
/// this equals the sum of the member motifs' vectors).
std::vector<int> characteristic_vector(const MapOfMotifs& map);

} // namespace cagegen
