#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cagegen/map_of_motifs.hpp"

namespace cagegen {

/// Dynamic programs of the almost-foldable pruning.
///
/// F(s, a, C) is the set of colors a' such that some path of size s whose
/// first motif keeps a free port labeled a has characteristic vector C and
/// exposes a' on its last motif (the consumed attachment port excluded).
/// A(s, C) says whether some forest of size s has vector C; since bonds do
/// not change the vector, that is reachability of C as a sum of s motif
/// vectors. Both tables are dense over the clipped coefficient box
/// [-s*f, s*f] per coordinate.
class ReachTable {
public:
    ReachTable(const MotifBase& base, int n);

    int n() const { return n_; }

    /// Bitmask over colors; empty mask = no such path.
    std::uint32_t reach(int s, Color a, const std::vector<int>& vec) const;
    bool forest_feasible(int s, const std::vector<int>& vec) const;

private:
    friend class VecBox;
    int n_, k_, f_, side_, ncolors_;
    std::int64_t box_;
    std::vector<std::uint32_t> F_; // [s][a][box]
    std::vector<char> A_;          // [s][box]
    std::int64_t vec_index(const std::vector<int>& vec) const; // -1 out of box
};

ReachTable precompute_reach(const MotifBase& base, int n);

/// Work splitting for the generators: the recursion claims a ticket at each
/// branch of depth `split_depth` and descends only into tickets congruent to
/// `index` mod `count`. The default spec is the whole space.
struct ShardSpec {
    std::uint32_t index = 0;
    std::uint32_t count = 1;
    int split_depth = 2;
};

struct GenOptions {
    const ReachTable* prune = nullptr;        // almost-foldable pruning when set
    ShardSpec shard{};
    const std::atomic<bool>* cancel = nullptr; // checked during recursion
};

using BackboneSink = std::function<void(const MapOfMotifs&)>;

/// Emits every path backbone of size n exactly once per unrooted path, twice
/// when the motif-name sequence ties its own reversal (emit iff the forward
/// reading is lexicographically >= the reverse). With pruning, emits exactly
/// the almost-foldable subset. The map passed to the sink is reused storage.
void gen_paths(const MotifBase& base, int n, const GenOptions& opt, const BackboneSink& sink);

/// Emits tree backbones rooted at centers of the first-declared motif, one
/// emission per such center per tree. With pruning, extensions are gated by
/// the forest array on the partial tree; leaves are emitted unconditionally,
/// so pruned output is a superset of the zero-vector trees. When
/// `exhaustive_roots` is set, trees not containing motif 0 are additionally
/// emitted rooted at the first motif they do contain.
void gen_trees(const MotifBase& base, int n, const GenOptions& opt, const BackboneSink& sink,
               bool exhaustive_roots = false);

struct CycleStats {
    std::uint64_t closure_candidates = 0; // paths whose tail exposes one free port
    std::uint64_t rings = 0;
};

/// Emits cycle backbones: every path emission whose last center has exactly
/// one free port is closed against each complementary free port of the first
/// center (at most one closure bond per emitted ring; a ring is emitted at
/// most once per generating path). Every emission is 2-connected. Bases with
/// no degree-2 motif fall back to closing all complementary head/tail port
/// pairs.
CycleStats gen_cycles(const MotifBase& base, int n, const GenOptions& opt,
                      const BackboneSink& sink);

} // namespace cagegen
