#include "cagegen/backbone.hpp"

#include <algorithm>
#include <cstdlib>

#include "cagegen/errors.hpp"

namespace cagegen {

ReachTable::ReachTable(const MotifBase& base, int n)
    : n_(n), k_(base.alphabet().k()), f_(base.max_same_color_ports()),
      side_(2 * n * base.max_same_color_ports() + 1), ncolors_(base.alphabet().num_colors()) {
    box_ = 1;
    for (int i = 0; i < k_; ++i) box_ *= side_;
    F_.assign(static_cast<std::size_t>(n_ + 1) * ncolors_ * box_, 0);
    A_.assign(static_cast<std::size_t>(n_ + 1) * box_, 0);

    const int half = n_ * f_;
    auto shift = [&](std::int64_t idx, const std::vector<int>& delta) -> std::int64_t {
        // moves a box index by a motif vector; -1 when out of the box
        std::int64_t out = idx, stride = 1;
        for (int i = 0; i < k_; ++i) {
            std::int64_t coord = (idx / stride) % side_ + delta[i];
            if (coord < 0 || coord >= side_) return -1;
            out += delta[i] * stride;
            stride *= side_;
        }
        return out;
    };
    std::int64_t origin = 0;
    {
        std::int64_t stride = 1;
        for (int i = 0; i < k_; ++i) { origin += static_cast<std::int64_t>(half) * stride; stride *= side_; }
    }

    auto fcell = [&](int s, Color a, std::int64_t b) -> std::uint32_t& {
        return F_[(static_cast<std::size_t>(s) * ncolors_ + a) * box_ + b];
    };

    // per motif and color: does a port of that color exist, and the labels of
    // the other ports once one instance of it is consumed
    std::vector<std::vector<char>> has_port(base.size(), std::vector<char>(ncolors_, 0));
    std::vector<std::vector<std::uint32_t>> expose(base.size(),
                                                   std::vector<std::uint32_t>(ncolors_, 0));
    for (MotifId m = 0; m < base.size(); ++m) {
        const auto& ports = base.motif(m).ports;
        std::uint32_t full = 0;
        std::vector<int> cnt(ncolors_, 0);
        for (Color c : ports) { full |= 1u << c; ++cnt[c]; }
        for (int c = 0; c < ncolors_; ++c) {
            if (!cnt[c]) continue;
            has_port[m][c] = 1;
            std::uint32_t mask = full;
            if (cnt[c] == 1) mask &= ~(1u << c);
            expose[m][c] = mask;
        }
    }

    // F(1, a, C_M) = labels of M's other ports, per port labeled a
    for (MotifId m = 0; m < base.size(); ++m) {
        std::int64_t b = shift(origin, base.char_vector(m));
        if (b < 0) continue;
        for (int a = 0; a < ncolors_; ++a)
            if (has_port[m][a])
                fcell(1, static_cast<Color>(a), b) |= expose[m][a];
    }

    for (int s = 1; s < n_; ++s)
        for (int a = 0; a < ncolors_; ++a)
            for (std::int64_t b = 0; b < box_; ++b) {
                std::uint32_t mask = fcell(s, static_cast<Color>(a), b);
                if (!mask) continue;
                for (int ap = 0; ap < ncolors_; ++ap) {
                    if (!(mask & (1u << ap))) continue;
                    const Color want = complement_of(static_cast<Color>(ap));
                    for (MotifId m = 0; m < base.size(); ++m) {
                        if (!has_port[m][want]) continue;
                        std::int64_t nb = shift(b, base.char_vector(m));
                        if (nb < 0) continue;
                        fcell(s + 1, static_cast<Color>(a), nb) |= expose[m][want];
                    }
                }
            }

    // A(s, C): C reachable as a sum of s motif vectors (forests ignore bonds)
    A_[origin] = 1;
    for (int s = 1; s <= n_; ++s) {
        const char* prev = &A_[static_cast<std::size_t>(s - 1) * box_];
        char* cur = &A_[static_cast<std::size_t>(s) * box_];
        for (std::int64_t b = 0; b < box_; ++b) {
            if (!prev[b]) continue;
            for (MotifId m = 0; m < base.size(); ++m) {
                std::int64_t nb = shift(b, base.char_vector(m));
                if (nb >= 0) cur[nb] = 1;
            }
        }
    }
}

std::int64_t ReachTable::vec_index(const std::vector<int>& vec) const {
    const int half = n_ * f_;
    std::int64_t idx = 0, stride = 1;
    for (int i = 0; i < k_; ++i) {
        const int coord = vec[i] + half;
        if (coord < 0 || coord >= side_) return -1;
        idx += static_cast<std::int64_t>(coord) * stride;
        stride *= side_;
    }
    return idx;
}

std::uint32_t ReachTable::reach(int s, Color a, const std::vector<int>& vec) const {
    if (s < 1 || s > n_) return 0;
    std::int64_t b = vec_index(vec);
    if (b < 0) return 0;
    return F_[(static_cast<std::size_t>(s) * ncolors_ + a) * box_ + b];
}

bool ReachTable::forest_feasible(int s, const std::vector<int>& vec) const {
    if (s < 0 || s > n_) return false;
    std::int64_t b = vec_index(vec);
    if (b < 0) return false;
    return A_[static_cast<std::size_t>(s) * box_ + b] != 0;
}

ReachTable precompute_reach(const MotifBase& base, int n) { return ReachTable(base, n); }

// ---------------------------------------------------------------------------

namespace {

struct GenCore {
    const MotifBase& base;
    const int n;
    const GenOptions& opt;
    MapOfMotifs map;
    std::vector<int> cvec, neg;
    std::uint64_t ticket = 0;

    GenCore(const MotifBase& b, int size, const GenOptions& o)
        : base(b), n(size), opt(o), map(&b), cvec(b.alphabet().k(), 0), neg(b.alphabet().k(), 0) {}

    bool cancelled() const {
        return opt.cancel && opt.cancel->load(std::memory_order_relaxed);
    }

    // claim the subtree rooted at the current recursion node
    bool owns_shard() {
        return (ticket++ % opt.shard.count) == opt.shard.index;
    }

    int attach(MotifId m, int port, int prev_center, int prev_port) {
        const int c = map.add_center(m);
        if (prev_center >= 0) map.bond({prev_center, prev_port}, {c, port});
        const auto& cv = base.char_vector(m);
        for (std::size_t i = 0; i < cv.size(); ++i) cvec[i] += cv[i];
        return c;
    }

    void detach(int prev_center, int prev_port) {
        const auto& cv = base.char_vector(map.center_motif(map.size() - 1));
        for (std::size_t i = 0; i < cv.size(); ++i) cvec[i] -= cv[i];
        if (prev_center >= 0) map.unbond({prev_center, prev_port});
        map.pop_center();
    }

    bool vector_zero() const {
        return std::all_of(cvec.begin(), cvec.end(), [](int v) { return v == 0; });
    }

    const std::vector<int>& negated() {
        for (std::size_t i = 0; i < cvec.size(); ++i) neg[i] = -cvec[i];
        return neg;
    }

    // forward motif-name sequence lexicographically >= its reversal
    bool palindrome_keep() const {
        const int sz = map.size();
        for (int i = 0; i < sz; ++i) {
            const MotifId a = map.center_motif(i), b = map.center_motif(sz - 1 - i);
            if (a != b) return a > b;
        }
        return true;
    }
};

struct PathGen : GenCore {
    const BackboneSink& sink;
    const std::function<void(PathGen&)>* cycle_emit = nullptr;
    const int claim_depth;

    PathGen(const MotifBase& b, int size, const GenOptions& o, const BackboneSink& s)
        : GenCore(b, size, o), sink(s),
          claim_depth(std::clamp(o.shard.split_depth, 2, std::max(size, 2))) {}

    void run() {
        if (n == 1) {
            if (opt.shard.index != 0) return;
            for (MotifId m = 0; m < base.size(); ++m) {
                if (opt.prune && !std::all_of(base.char_vector(m).begin(), base.char_vector(m).end(),
                                              [](int v) { return v == 0; }))
                    continue;
                attach(m, 0, -1, -1);
                emit();
                detach(-1, -1);
            }
            return;
        }
        for (MotifId m = 0; m < base.size(); ++m) {
            attach(m, 0, -1, -1);
            extend(0, -1, 1);
            detach(-1, -1);
        }
    }

    void emit() {
        if (!palindrome_keep()) return;
        if (opt.prune && !vector_zero()) return;
        if (cycle_emit)
            (*cycle_emit)(*this);
        else
            sink(map);
    }

    void extend(int last, int attach_port, int t) {
        if (cancelled()) return;
        if (t == claim_depth && !owns_shard()) return;
        if (t == n) {
            emit();
            return;
        }
        const MotifId m = map.center_motif(last);
        const int d = base.motif(m).degree();
        auto try_port = [&](int v) {
            const Color a = map.port_color(last, v);
            if (opt.prune && opt.prune->reach(n - t, complement_of(a), negated()) == 0) return;
            for (const Attachment& at : base.attachments_for(a)) {
                const int c2 = attach(at.motif, at.port, last, v);
                extend(c2, at.port, t + 1);
                detach(last, v);
            }
        };
        if (t == 1) {
            for (std::uint8_t v : base.port_class_reps(m)) try_port(v);
        } else {
            for (int off = 1; off < d; ++off) try_port((attach_port + off) % d);
        }
    }
};

} // namespace

void gen_paths(const MotifBase& base, int n, const GenOptions& opt, const BackboneSink& sink) {
    PathGen g(base, n, opt, sink);
    g.run();
}

// ---------------------------------------------------------------------------

namespace {

struct TreeGen : GenCore {
    const BackboneSink& sink;
    std::vector<Dart> pending;
    MotifId min_motif = 0; // attachments restricted to motifs >= this
    const int claim_depth;

    TreeGen(const MotifBase& b, int size, const GenOptions& o, const BackboneSink& s)
        : GenCore(b, size, o), sink(s),
          claim_depth(std::clamp(o.shard.split_depth, 2, std::max(size, 2))) {}

    void run(MotifId root, MotifId floor) {
        min_motif = floor;
        attach(root, 0, -1, -1);
        const int d = base.motif(root).degree();
        for (int j = d - 1; j >= 0; --j) pending.push_back({0, j});
        rec(1);
        pending.clear();
        detach(-1, -1);
    }

    void rec(int size) {
        if (cancelled()) return;
        if (size == n) {
            sink(map);
            return;
        }
        if (pending.empty()) return;
        if (opt.prune && !opt.prune->forest_feasible(n - size, negated())) return;
        const Dart dart = pending.back();
        pending.pop_back();
        rec(size); // leave the port free
        const Color a = map.port_color(dart.center, dart.port);
        for (const Attachment& at : base.attachments_for(a)) {
            if (at.motif < min_motif) continue;
            const int c2 = attach(at.motif, at.port, dart.center, dart.port);
            const int d2 = base.motif(at.motif).degree();
            const std::size_t mark = pending.size();
            for (int off = d2 - 1; off >= 1; --off)
                pending.push_back({c2, (at.port + off) % d2});
            if (size + 1 != claim_depth || owns_shard()) rec(size + 1);
            pending.resize(mark);
            detach(dart.center, dart.port);
        }
        pending.push_back(dart);
    }
};

} // namespace

void gen_trees(const MotifBase& base, int n, const GenOptions& opt, const BackboneSink& sink,
               bool exhaustive_roots) {
    if (n == 1) {
        // single-motif trees: one emission per (motif, first-port) cyclic class
        if (opt.shard.index != 0) return;
        MapOfMotifs map(&base);
        for (MotifId m = 0; m < base.size(); ++m) {
            if (opt.prune && !std::all_of(base.char_vector(m).begin(), base.char_vector(m).end(),
                                          [](int v) { return v == 0; }))
                continue;
            map.add_center(m);
            for (std::size_t r = 0; r < base.port_class_reps(m).size(); ++r) sink(map);
            map.pop_center();
        }
        return;
    }
    TreeGen g(base, n, opt, sink);
    g.run(0, 0);
    if (exhaustive_roots)
        for (MotifId r = 1; r < base.size(); ++r) g.run(r, r);
}

// ---------------------------------------------------------------------------

CycleStats gen_cycles(const MotifBase& base, int n, const GenOptions& opt,
                      const BackboneSink& sink) {
    CycleStats stats;
    if (n < 2) return stats;
    bool has_degree2 = false;
    for (MotifId m = 0; m < base.size(); ++m) has_degree2 |= base.motif(m).degree() == 2;

    PathGen g(base, n, opt, sink);
    std::function<void(PathGen&)> closer = [&](PathGen& pg) {
        MapOfMotifs& map = pg.map;
        const int tail = map.size() - 1;
        const int dt = map.degree(tail);
        int tail_free = -1, tail_frees = 0;
        for (int i = 0; i < dt; ++i)
            if (map.at(tail, i).free()) { tail_free = i; ++tail_frees; }
        if (has_degree2) {
            // close "the" free vertex of the last motif: requires exactly one
            if (tail_frees != 1) return;
            ++stats.closure_candidates;
            const Color tc = map.port_color(tail, tail_free);
            for (int u = 0; u < map.degree(0); ++u) {
                if (!map.at(0, u).free()) continue;
                if (map.port_color(0, u) != complement_of(tc)) continue;
                map.bond({0, u}, {tail, tail_free});
                ++stats.rings;
                sink(map);
                map.unbond({0, u});
            }
        } else {
            ++stats.closure_candidates;
            for (int v = 0; v < dt; ++v) {
                if (!map.at(tail, v).free()) continue;
                const Color tc = map.port_color(tail, v);
                for (int u = 0; u < map.degree(0); ++u) {
                    if (!map.at(0, u).free()) continue;
                    if (map.port_color(0, u) != complement_of(tc)) continue;
                    map.bond({0, u}, {tail, v});
                    ++stats.rings;
                    sink(map);
                    map.unbond({0, u});
                }
            }
        }
    };
    g.cycle_emit = &closer;
    g.run();
    return stats;
}

} // namespace cagegen
