#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cagegen/indices.hpp"
#include "cagegen/map_of_motifs.hpp"
#include "cagegen/rational.hpp"
#include "cagegen/signature.hpp"

namespace cagegen {

enum class BackboneMode { Tree, Path, Cycle };

std::string to_string(BackboneMode m);
std::optional<BackboneMode> backbone_mode_from_string(const std::string& s);

struct RunConfig {
    std::string base_file;                 // path, used for the header hash
    int size = 0;
    BackboneMode mode = BackboneMode::Path;
    bool almost_foldable = false;
    bool metamotif = false;
    std::optional<Rational> min_sparsity;  // filter threshold (keep >=)
    int workers = 1;
    double budget_seconds = 300.0;
};

struct CatalogRecord {
    Signature signature;
    std::string rotation;                  // serialized rotation table
    std::vector<std::pair<std::string, int>> motif_counts;
    IndexReport report;
};

struct StageTimes {
    double backbone = 0, fold = 0, dedup = 0, indices = 0;
};

struct CatalogSummary {
    std::uint64_t backbones = 0;           // emissions (closure candidates in cycle mode)
    std::uint64_t saturated = 0;           // saturated emissions before dedup
    std::uint64_t unique_maps = 0;
    StageTimes times;
    bool complete = true;
};

struct Catalog {
    RunConfig config;
    int radix = 0;
    std::string base_hash;
    std::vector<CatalogRecord> records;    // sorted by signature
    CatalogSummary summary;
};

/// Full pipeline: generate backbones, fold, dedup by canonical signature,
/// expand metamotif maps back to the original base (re-deduping), score
/// every unique map, filter, sort. Respects the time budget: on overrun the
/// catalog is returned partial and flagged.
Catalog run(const RunConfig& config, const MotifBase& base);

/// Stable filter by a predicate over IndexReport fields. The expression
/// grammar is `field op value` with op in {<, <=, =, !=, >=, >} and fields
/// largest_face, face_gap, class_count, chiral, min_sparsity. Throws
/// UnknownField. Idempotent.
Catalog filter(const Catalog& catalog, const std::string& predicate);

std::string serialize_catalog(const Catalog& catalog);
std::string format_summary(const Catalog& catalog);

/// FNV-1a 64 of a file's bytes, hex; the catalog header pins the input base.
std::string file_hash_hex(const std::string& path);

} // namespace cagegen
