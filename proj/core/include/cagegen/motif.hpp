#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cagegen/colors.hpp"

namespace cagegen {

using MotifId = std::uint16_t;

/// A star map: one center of a motif color with an ordered (clockwise Next)
/// ring of colored ports. Port 0 is declaration order; rotational equivalence
/// is handled where it matters (attachment lists, root canonicalization).
struct Motif {
    std::string name;
    std::vector<Color> ports;

    int degree() const { return static_cast<int>(ports.size()); }
};

/// One attachable (motif, port) pair: the designated port is the one bonded
/// to the free vertex being extended.
struct Attachment {
    MotifId motif;
    std::uint8_t port;
};

/// The finite input set of motifs plus per-color attachment lists L_a and
/// per-motif data used by the generators (characteristic vectors, rotation
/// class representatives). Immutable after construction.
class MotifBase {
public:
    MotifBase(ColorAlphabet alphabet, std::vector<Motif> motifs);

    const ColorAlphabet& alphabet() const { return alphabet_; }
    int size() const { return static_cast<int>(motifs_.size()); }
    const Motif& motif(MotifId m) const { return motifs_[m]; }
    const std::vector<Motif>& motifs() const { return motifs_; }

    /// L_a: attachments whose designated port has color complement(a), one
    /// representative per cyclic-rotation class. Indexed directly by the free
    /// vertex color a, so lookup cost is independent of the base size.
    const std::vector<Attachment>& attachments_for(Color free_color) const {
        return attach_[free_color];
    }

    /// Rotation-class representatives of the motif's port positions
    /// (positions p, q are equivalent iff rotating by q-p preserves colors).
    const std::vector<std::uint8_t>& port_class_reps(MotifId m) const {
        return class_reps_[m];
    }

    /// Characteristic vector of the lone motif: per positive color,
    /// #ports labeled a_i minus #ports labeled ~a_i.
    const std::vector<int>& char_vector(MotifId m) const { return cvec_[m]; }

    /// Max number of same-colored ports in any one motif (the f of the
    /// reach-table coefficient bound).
    int max_same_color_ports() const { return max_same_color_; }

    int motif_index(const std::string& name) const; // -1 if absent

private:
    ColorAlphabet alphabet_;
    std::vector<Motif> motifs_;
    std::vector<std::vector<Attachment>> attach_;
    std::vector<std::vector<std::uint8_t>> class_reps_;
    std::vector<std::vector<int>> cvec_;
    int max_same_color_ = 0;
};

/// Validates and indexes a motif list. Throws UnknownColor, EmptyBase, and
/// DuplicateMotif when a name repeats or when two motifs' port sequences are
/// equal up to cyclic rotation (reflections are not identified: motifs are
/// oriented).
MotifBase build_base(ColorAlphabet alphabet, std::vector<Motif> motifs);

/// True iff the two port sequences are equal up to cyclic rotation.
bool cyclically_equal(const std::vector<Color>& a, const std::vector<Color>& b);

} // namespace cagegen
