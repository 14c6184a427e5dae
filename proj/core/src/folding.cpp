#include "cagegen/folding.hpp"

#include <algorithm>

#include "cagegen/errors.hpp"
#include "cagegen/faces.hpp"

namespace cagegen {

std::vector<Word> outlines(const MapOfMotifs& map) {
    std::vector<Word> out;
    for (const FaceWalk& walk : faces(map)) {
        std::vector<Dart> free_darts;
        for (Dart d : walk)
            if (map.at(d.center, d.port).free()) free_darts.push_back(d);
        if (free_darts.empty()) continue;
        // canonical cut: start at the lowest (center, port)
        auto mn = std::min_element(free_darts.begin(), free_darts.end());
        std::rotate(free_darts.begin(), mn, free_darts.end());
        Word w;
        w.origin = std::move(free_darts);
        w.letters.reserve(w.origin.size());
        for (Dart d : w.origin) w.letters.push_back(map.port_color(d.center, d.port));
        out.push_back(std::move(w));
    }
    return out;
}

bool is_foldable(const std::vector<Color>& letters) {
    const int n = static_cast<int>(letters.size());
    if (n % 2) return false;
    if (n == 0) return true;
    std::vector<int> prev(n), next(n);
    for (int i = 0; i < n; ++i) {
        prev[i] = i - 1;
        next[i] = i + 1 < n ? i + 1 : -1;
    }
    int head = 0, removed = 0, i = 0;
    while (removed < n) {
        int j = next[i];
        if (j < 0) return false;
        if (letters[i] == complement_of(letters[j])) {
            int before = prev[i], after = next[j];
            if (before >= 0) next[before] = after; else head = after;
            if (after >= 0) prev[after] = before;
            removed += 2;
            if (removed == n) return true;
            i = before >= 0 ? before : head;
        } else {
            i = j;
        }
    }
    return true;
}

bool is_foldable(const Word& w) { return is_foldable(w.letters); }

FoldMatrix::FoldMatrix(const std::vector<Color>& letters) : n_(static_cast<int>(letters.size())) {
    m_.assign(static_cast<std::size_t>(n_) * n_, 0);
    jump_.assign(n_, -1);
    lists_.assign(n_, {});
    for (int len = 2; len <= n_; len += 2)
        for (int i = 0; i + len <= n_; ++i) {
            const int j = i + len - 1;
            bool ok = letters[i] == complement_of(letters[j]) && (len == 2 || m_[idx(i + 1, j - 1)]);
            if (!ok && jump_[i] >= 0 && jump_[i] < j && m_[idx(jump_[i] + 1, j)]) ok = true;
            if (ok) {
                m_[idx(i, j)] = 1;
                if (jump_[i] < 0) jump_[i] = j;
            }
        }
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; j += 2)
            if (letters[i] == complement_of(letters[j]) && (j == i + 1 || m_[idx(i + 1, j - 1)]))
                lists_[i].push_back(j);
}

namespace {

struct Segment {
    int l, r;
};

// Pairs the first unpaired index of the top segment against each candidate
// inside it; every candidate leads to at least one emission, so the delay is
// bounded by the recursion depth.
void enum_impl(const FoldMatrix& fm, std::vector<Segment>& segs, FoldResult& acc,
               const FoldSink& sink) {
    if (segs.empty()) {
        FoldResult sorted = acc;
        std::sort(sorted.begin(), sorted.end());
        sink(sorted);
        return;
    }
    Segment s = segs.back();
    segs.pop_back();
    for (int j : fm.candidates(s.l)) {
        if (j > s.r) break;
        acc.emplace_back(s.l, j);
        std::size_t pushed = 0;
        if (j + 1 <= s.r) { segs.push_back({j + 1, s.r}); ++pushed; }
        if (s.l + 1 <= j - 1) { segs.push_back({s.l + 1, j - 1}); ++pushed; }
        enum_impl(fm, segs, acc, sink);
        segs.resize(segs.size() - pushed);
        acc.pop_back();
    }
    segs.push_back(s);
}

} // namespace

void enum_fold_results(const std::vector<Color>& letters, const FoldSink& sink) {
    const int n = static_cast<int>(letters.size());
    if (n == 0) {
        sink(FoldResult{});
        return;
    }
    FoldMatrix fm(letters);
    if (n % 2 || !fm.foldable(0, n - 1)) throw NotFoldable("word does not reduce to empty");
    std::vector<Segment> segs{{0, n - 1}};
    FoldResult acc;
    enum_impl(fm, segs, acc, sink);
}

void enum_fold_results(const Word& w, const FoldSink& sink) { enum_fold_results(w.letters, sink); }

MapOfMotifs apply_result(const MapOfMotifs& map, const Word& outline, const FoldResult& r) {
    MapOfMotifs out = map;
    for (auto [i, j] : r) out.bond(outline.origin[i], outline.origin[j]);
    return out;
}

namespace {

void saturate_rec(MapOfMotifs& work, const std::vector<Word>& words, std::size_t wi,
                  std::vector<std::vector<Dart>>& bonded, const MapSink& sink) {
    if (wi == words.size()) {
        sink(work);
        return;
    }
    const Word& w = words[wi];
    enum_fold_results(w, [&](const FoldResult& r) {
        auto& added = bonded[wi];
        for (auto [i, j] : r) {
            work.bond(w.origin[i], w.origin[j]);
            added.push_back(w.origin[i]);
        }
        saturate_rec(work, words, wi + 1, bonded, sink);
        for (Dart d : added) work.unbond(d);
        added.clear();
    });
}

} // namespace

void saturate_all(const MapOfMotifs& map, const MapSink& sink) {
    std::vector<Word> words = outlines(map);
    for (const Word& w : words)
        if (!is_foldable(w)) return;
    MapOfMotifs work = map;
    std::vector<std::vector<Dart>> bonded(words.size());
    saturate_rec(work, words, 0, bonded, sink);
}

} // namespace cagegen
