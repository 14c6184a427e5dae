#include "cagegen/map_of_motifs.hpp"

#include "cagegen/errors.hpp"

namespace cagegen {

int MapOfMotifs::add_center(MotifId m) {
    const int c = size();
    centers_.push_back(m);
    off_.push_back(static_cast<std::uint32_t>(rot_.size()));
    rot_.resize(rot_.size() + base_->motif(m).degree());
    return c;
}

void MapOfMotifs::pop_center() {
    rot_.resize(off_.back());
    off_.pop_back();
    centers_.pop_back();
}

void MapOfMotifs::bond(Dart a, Dart b) {
    RotEntry& ea = rot_[off_[a.center] + a.port];
    RotEntry& eb = rot_[off_[b.center] + b.port];
    if (!ea.free() || !eb.free())
        throw InvalidPair("port already bonded");
    if (port_color(a.center, a.port) != complement_of(port_color(b.center, b.port)))
        throw InvalidPair("bond colors are not complementary");
    ea = {b.center, b.port};
    eb = {a.center, a.port};
}

void MapOfMotifs::unbond(Dart a) {
    RotEntry& ea = rot_[off_[a.center] + a.port];
    RotEntry& eb = rot_[off_[ea.peer_center] + ea.peer_port];
    eb = RotEntry{};
    ea = RotEntry{};
}

int MapOfMotifs::bond_count() const {
    int bonded = 0;
    for (const RotEntry& e : rot_) bonded += !e.free();
    return bonded / 2;
}

int MapOfMotifs::free_count() const {
    int n = 0;
    for (const RotEntry& e : rot_) n += e.free();
    return n;
}

bool MapOfMotifs::rot_same(const MapOfMotifs& y) const {
    if (rot_.size() != y.rot_.size()) return false;
    for (std::size_t i = 0; i < rot_.size(); ++i)
        if (rot_[i].peer_center != y.rot_[i].peer_center || rot_[i].peer_port != y.rot_[i].peer_port)
            return false;
    return true;
}

bool saturated(const MapOfMotifs& map) { return map.free_count() == 0; }

std::vector<int> characteristic_vector(const MapOfMotifs& map) {
    std::vector<int> v(map.base().alphabet().k(), 0);
    for (int c = 0; c < map.size(); ++c) {
        const auto& cv = map.base().char_vector(map.center_motif(c));
        for (std::size_t i = 0; i < cv.size(); ++i) v[i] += cv[i];
    }
    return v;
}

} // namespace cagegen
