#pragma once

#include <functional>
#include <vector>

#include "cagegen/map_of_motifs.hpp"

namespace cagegen {

/// The color word of one outline, linearized at the face walk's canonical
/// start (the lowest-indexed center's lowest free port on that face), with
/// the originating free dart kept per position.
struct Word {
    std::vector<Color> letters;
    std::vector<Dart> origin;

    int length() const { return static_cast<int>(letters.size()); }
};

/// One Word per face that contains at least one free port, in face order.
/// A tree or path has exactly one, a cycle two, a saturated map none.
std::vector<Word> outlines(const MapOfMotifs& map);

/// Linear-time foldability test: repeatedly delete adjacent complementary
/// letters in a doubly-linked scan, stepping back one position after each
/// deletion. Correct because the restricted reduction is confluent.
bool is_foldable(const std::vector<Color>& letters);
bool is_foldable(const Word& w);

/// M[i][j] = the subword w_i..w_j reduces to the empty word. Quadratic via
/// the smallest-k memo: a split exists iff the smallest foldable prefix
/// works. L[i] lists the j > i with w_i, w_j complementary and the strict
/// inside foldable; pairing (i,j) inside any foldable segment then keeps
/// both remaining segments foldable.
class FoldMatrix {
public:
    explicit FoldMatrix(const std::vector<Color>& letters);

    bool foldable(int i, int j) const { return i > j ? true : m_[idx(i, j)]; }
    int smallest_fold_end(int i) const { return jump_[i]; } // -1 if none
    const std::vector<int>& candidates(int i) const { return lists_[i]; }
    int length() const { return n_; }

private:
    int idx(int i, int j) const { return i * n_ + j; }
    int n_;
    std::vector<char> m_;
    std::vector<int> jump_;
    std::vector<std::vector<int>> lists_;
};

/// A complete folding of one word: a non-crossing perfect matching of the
/// positions into complementary pairs (i < j, 0-based).
using FoldResult = std::vector<std::pair<int, int>>;

using FoldSink = std::function<void(const FoldResult&)>;

/// Emits every distinct result of sequences of reductions exactly once,
/// with delay linear in |w|: the recursion always pairs the first unpaired
/// position against each candidate inside the current segment. Throws
/// NotFoldable when the word does not fold (the empty word folds once).
void enum_fold_results(const Word& w, const FoldSink& sink);
void enum_fold_results(const std::vector<Color>& letters, const FoldSink& sink);

/// Returns the map with every pair of `r` bonded. Throws InvalidPair when a
/// pair is not free or not complementary.
MapOfMotifs apply_result(const MapOfMotifs& map, const Word& outline, const FoldResult& r);

using MapSink = std::function<void(const MapOfMotifs&)>;

/// Emits every saturated map obtainable from the backbone by folds, one per
/// combination of per-outline results (outlines fold independently; pairs
/// never span faces). Backbones with a non-foldable outline emit nothing; an
/// already-saturated map emits itself once. The map passed to the sink is
/// reused storage: copy it to retain it.
void saturate_all(const MapOfMotifs& map, const MapSink& sink);

} // namespace cagegen
