#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cagegen/errors.hpp"

namespace cagegen {

/// Port color. Positive colors are even, their complements odd, so the
/// complement involution is a single xor and has no fixed point.
using Color = std::uint8_t;

constexpr Color complement_of(Color c) { return static_cast<Color>(c ^ 1); }
constexpr bool is_positive(Color c) { return (c & 1) == 0; }
constexpr int positive_index(Color c) { return c >> 1; }

/// The color alphabet Sigma (2k port colors) plus the motif-name alphabet
/// Sigma_M. Names are fixed at construction; both alphabets are ordered by
/// declaration and disjoint.
class ColorAlphabet {
public:
    ColorAlphabet(std::vector<std::string> positive_names,
                  std::vector<std::string> motif_names);

    int k() const { return static_cast<int>(positive_.size()); }
    int num_colors() const { return 2 * k(); }
    int num_motif_colors() const { return static_cast<int>(motif_names_.size()); }

    /// Display name of a port color ("a" or "~a").
    std::string color_name(Color c) const;
    const std::string& positive_name(int i) const { return positive_[i]; }
    const std::string& motif_name(int i) const { return motif_names_[i]; }

    /// Parses "x" / "~x"; throws UnknownColor.
    Color parse_color(const std::string& token) const;

    int motif_color_index(const std::string& name) const; // -1 if absent

private:
    std::vector<std::string> positive_;
    std::vector<std::string> motif_names_;
};

} // namespace cagegen
