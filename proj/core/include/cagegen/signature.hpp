#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "cagegen/map_of_motifs.hpp"

namespace cagegen {

/// Digit assignment shared by all maps of one size over one base:
/// center indices occupy [0, n), then positive colors, negative colors and
/// motif colors in declared order, so the radix is n + |Sigma| + |Sigma_M|.
class SignatureContext {
public:
    SignatureContext(const MotifBase& base, int n);

    int radix() const { return radix_; }
    int n() const { return n_; }
    std::uint8_t color_digit(Color c) const;
    std::uint8_t name_digit(MotifId m) const;

    const MotifBase& base() const { return *base_; }

private:
    const MotifBase* base_;
    int n_, radix_;
};

/// Canonical identifier of a saturated map: the digit sequence of the
/// minimal deterministic traversal, compared most-significant-first (all
/// sequences of one map have equal length, so lexicographic order matches
/// numeric order in base B).
struct Signature {
    std::vector<std::uint8_t> digits;

    friend bool operator==(const Signature&, const Signature&) = default;
    friend auto operator<=>(const Signature& a, const Signature& b) {
        return a.digits <=> b.digits;
    }
};

/// Renders as a hyphen-separated decimal digit list, e.g. "0-14-9-...".
std::string to_string(const Signature& sig);
Signature signature_from_string(const std::string& text);

/// The deterministic depth-first traversal from one start dart: at each new
/// center the next free index digit is assigned; every bond contributes six
/// digits (index and motif color of the near center, the two port colors,
/// motif color and index of the far center) at its first visit. `mirrored`
/// reverses every rotation order. Throws NotSaturated.
Signature signature_from(const SignatureContext& ctx, const MapOfMotifs& map, Dart start,
                         bool mirrored = false);

/// Minimum over start darts whose (center color, port color) pair is the
/// rarest nonzero pair of the map (declared-order lexicographic tie-break),
/// prefix-pruned against the running minimum. Isomorphic maps get equal
/// signatures; equal signatures reconstruct to isomorphic maps.
Signature canonical_signature(const SignatureContext& ctx, const MapOfMotifs& map,
                              bool mirrored = false);

/// Minimum over all start darts (no rarest-pair restriction); used by tests.
Signature canonical_signature_all_starts(const SignatureContext& ctx, const MapOfMotifs& map,
                                         bool mirrored = false);

/// Rebuilds a map from a signature. The result is isomorphic to the signed
/// map (center numbering and the rotational anchoring of each motif are not
/// recoverable, and need not be).
MapOfMotifs reconstruct(const SignatureContext& ctx, const Signature& sig);

/// Orbit partition of the centers under the automorphism group: c1 and c2
/// share a class iff some start at c1 and some start at c2 produce equal
/// digit sequences. Returns a class id per center.
std::vector<int> equivalence_classes(const SignatureContext& ctx, const MapOfMotifs& map);

/// A map is chiral iff it is not isomorphic to its mirror (all rotation
/// orders reversed).
bool is_chiral(const SignatureContext& ctx, const MapOfMotifs& map);

/// Signature-keyed insert-if-absent store; ordered, logarithmic, and
/// linearizable under concurrent insertion.
template <typename Payload>
class DedupStore {
public:
    bool insert(const Signature& sig, Payload payload) {
        std::lock_guard<std::mutex> lock(mu_);
        return map_.emplace(sig, std::move(payload)).second;
    }
    bool contains(const Signature& sig) const {
        std::lock_guard<std::mutex> lock(mu_);
        return map_.find(sig) != map_.end();
    }
    std::size_t size() const {
        std::lock_guard<std::mutex> lock(mu_);
        return map_.size();
    }
    /// Snapshot in signature order.
    std::vector<std::pair<Signature, Payload>> sorted_entries() const {
        std::lock_guard<std::mutex> lock(mu_);
        return {map_.begin(), map_.end()};
    }

private:
    mutable std::mutex mu_;
    std::map<Signature, Payload> map_;
};

} // namespace cagegen
