#pragma once

#include <iosfwd>
#include <string>

#include "cagegen/map_of_motifs.hpp"
#include "cagegen/motif.hpp"

namespace cagegen {

/// Motif-base file grammar (line oriented, '#' starts a comment):
///
///   colors: a b ...
///   motif NAME: p1 p2 ... pm
///
/// The colors line lists the positive colors; complements are written "~a".
/// Motif lines follow in declaration order. Throws ParseError with the
/// offending line number, plus whatever build_base throws.
MotifBase parse_base(std::istream& in);
MotifBase parse_base_file(const std::string& path);

std::string serialize_base(const MotifBase& base);

/// Serializes one map's rotation table as a bracketed list of
/// (center:motif,[entries]) with entries "port>peer.port" or "free:color".
std::string serialize_rotation(const MapOfMotifs& map);
MapOfMotifs parse_rotation(const std::string& text, const MotifBase& base);

} // namespace cagegen
