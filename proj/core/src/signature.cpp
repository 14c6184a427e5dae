#include "cagegen/signature.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "cagegen/errors.hpp"

namespace cagegen {

SignatureContext::SignatureContext(const MotifBase& base, int n) : base_(&base), n_(n) {
    radix_ = n + base.alphabet().num_colors() + base.alphabet().num_motif_colors();
    if (radix_ > 255) throw TooLarge("signature radix exceeds one byte per digit");
}

std::uint8_t SignatureContext::color_digit(Color c) const {
    const int k = base_->alphabet().k();
    return static_cast<std::uint8_t>(n_ + (is_positive(c) ? positive_index(c)
                                                          : k + positive_index(c)));
}

std::uint8_t SignatureContext::name_digit(MotifId m) const {
    return static_cast<std::uint8_t>(n_ + base_->alphabet().num_colors() + m);
}

std::string to_string(const Signature& sig) {
    std::ostringstream out;
    for (std::size_t i = 0; i < sig.digits.size(); ++i) {
        if (i) out << '-';
        out << static_cast<int>(sig.digits[i]);
    }
    return out.str();
}

Signature signature_from_string(const std::string& text) {
    Signature sig;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, '-'))
        sig.digits.push_back(static_cast<std::uint8_t>(std::stoi(part)));
    return sig;
}

namespace {

// Depth-first sweep shared by signing, class computation and chirality.
// Emits six digits per bond at first visit; returns false when the running
// prefix exceeds the best-so-far (prefix pruning).
struct Traversal {
    const SignatureContext& ctx;
    const MapOfMotifs& map;
    const int dir; // +1 clockwise, -1 mirrored
    const std::vector<std::uint8_t>* best = nullptr; // prune target

    std::vector<int> index;
    std::vector<char> bond_seen;
    std::vector<std::uint8_t> out;
    int next_index = 0;
    bool smaller = false; // strictly below best at some position

    Traversal(const SignatureContext& c, const MapOfMotifs& m, bool mirrored,
              const std::vector<std::uint8_t>* prune)
        : ctx(c), map(m), dir(mirrored ? -1 : 1), best(prune),
          index(m.size(), -1), bond_seen(m.total_ports(), 0) {}

    int number(int c) {
        if (index[c] < 0) index[c] = next_index++;
        return index[c];
    }

    bool push(std::uint8_t digit) {
        out.push_back(digit);
        if (best && !smaller) {
            const std::size_t pos = out.size() - 1;
            if (pos >= best->size() || digit > (*best)[pos]) return false;
            if (digit < (*best)[pos]) smaller = true;
        }
        return true;
    }

    bool sweep(int c, int start, int count) {
        const int d = map.degree(c);
        for (int t = 0; t < count; ++t) {
            const int i = ((start + dir * t) % d + d) % d;
            const RotEntry& e = map.at(c, i);
            const int id = dart_offsets_[c] + i;
            if (bond_seen[id]) continue;
            const int pid = dart_offsets_[e.peer_center] + e.peer_port;
            bond_seen[id] = bond_seen[pid] = 1;
            const bool fresh = index[e.peer_center] < 0;
            if (!push(static_cast<std::uint8_t>(number(c)))) return false;
            if (!push(ctx.name_digit(map.center_motif(c)))) return false;
            if (!push(ctx.color_digit(map.port_color(c, i)))) return false;
            if (!push(ctx.color_digit(map.port_color(e.peer_center, e.peer_port)))) return false;
            if (!push(ctx.name_digit(map.center_motif(e.peer_center)))) return false;
            if (!push(static_cast<std::uint8_t>(number(e.peer_center)))) return false;
            if (fresh) {
                const int d2 = map.degree(e.peer_center);
                const int s2 = ((e.peer_port + dir) % d2 + d2) % d2;
                if (!sweep(e.peer_center, s2, d2 - 1)) return false;
            }
        }
        return true;
    }

    std::vector<int> dart_offsets_;

    bool run(Dart start) {
        dart_offsets_.resize(map.size());
        int acc = 0;
        for (int c = 0; c < map.size(); ++c) { dart_offsets_[c] = acc; acc += map.degree(c); }
        number(start.center);
        return sweep(start.center, start.port, map.degree(start.center));
    }
};

std::vector<Dart> all_darts(const MapOfMotifs& map) {
    std::vector<Dart> out;
    for (int c = 0; c < map.size(); ++c)
        for (int i = 0; i < map.degree(c); ++i) out.push_back({c, i});
    return out;
}

// Start darts restricted to the rarest (center color, port color) pair.
std::vector<Dart> rarest_starts(const SignatureContext& ctx, const MapOfMotifs& map) {
    std::map<std::pair<std::uint8_t, std::uint8_t>, int> counts;
    for (int c = 0; c < map.size(); ++c)
        for (int i = 0; i < map.degree(c); ++i)
            ++counts[{ctx.name_digit(map.center_motif(c)), ctx.color_digit(map.port_color(c, i))}];
    auto best = counts.end();
    for (auto it = counts.begin(); it != counts.end(); ++it)
        if (best == counts.end() || it->second < best->second) best = it;
        // ordered map: ties resolve to the lexicographically least pair
    std::vector<Dart> out;
    for (int c = 0; c < map.size(); ++c)
        for (int i = 0; i < map.degree(c); ++i)
            if (ctx.name_digit(map.center_motif(c)) == best->first.first &&
                ctx.color_digit(map.port_color(c, i)) == best->first.second)
                out.push_back({c, i});
    return out;
}

Signature min_over(const SignatureContext& ctx, const MapOfMotifs& map,
                   const std::vector<Dart>& starts, bool mirrored) {
    if (!saturated(map)) throw NotSaturated("signature of an unsaturated map");
    std::vector<std::uint8_t> best;
    for (Dart s : starts) {
        Traversal tr(ctx, map, mirrored, best.empty() ? nullptr : &best);
        if (tr.run(s) && (best.empty() || tr.out < best)) best = std::move(tr.out);
    }
    return Signature{std::move(best)};
}

} // namespace

Signature signature_from(const SignatureContext& ctx, const MapOfMotifs& map, Dart start,
                         bool mirrored) {
    if (!saturated(map)) throw NotSaturated("signature of an unsaturated map");
    Traversal tr(ctx, map, mirrored, nullptr);
    tr.run(start);
    return Signature{std::move(tr.out)};
}

Signature canonical_signature(const SignatureContext& ctx, const MapOfMotifs& map, bool mirrored) {
    if (!saturated(map)) throw NotSaturated("signature of an unsaturated map");
    return min_over(ctx, map, rarest_starts(ctx, map), mirrored);
}

Signature canonical_signature_all_starts(const SignatureContext& ctx, const MapOfMotifs& map,
                                         bool mirrored) {
    return min_over(ctx, map, all_darts(map), mirrored);
}

std::vector<int> equivalence_classes(const SignatureContext& ctx, const MapOfMotifs& map) {
    if (!saturated(map)) throw NotSaturated("equivalence classes of an unsaturated map");
    // equal start strings <=> an automorphism maps one start dart to the other
    std::vector<int> parent(map.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::map<std::vector<std::uint8_t>, int> owner;
    for (Dart d : all_darts(map)) {
        Traversal tr(ctx, map, false, nullptr);
        tr.run(d);
        auto [it, fresh] = owner.emplace(std::move(tr.out), d.center);
        if (!fresh) parent[find(d.center)] = find(it->second);
    }
    std::vector<int> cls(map.size(), -1);
    int next = 0;
    std::vector<int> label(map.size(), -1);
    for (int c = 0; c < map.size(); ++c) {
        const int r = find(c);
        if (label[r] < 0) label[r] = next++;
        cls[c] = label[r];
    }
    return cls;
}

bool is_chiral(const SignatureContext& ctx, const MapOfMotifs& map) {
    return canonical_signature(ctx, map, false) != canonical_signature(ctx, map, true);
}

// ---------------------------------------------------------------------------
// Reconstruction: replay the deterministic sweep, branching on the rotational
// anchoring ambiguities (start port, entry ports, back-edge target ports).
// Choice points snapshot the whole state; everything mutated beneath a failed
// choice is restored wholesale. Exponential only in pathological inputs; the
// signatures this sees are tiny.

namespace {

struct Rebuilder {
    const SignatureContext& ctx;
    const std::vector<std::uint8_t>& dig;
    MapOfMotifs map;
    std::vector<int> center_of_index; // signature index -> map center
    std::size_t cursor = 0;           // next group
    std::size_t ngroups;

    Rebuilder(const SignatureContext& c, const Signature& sig)
        : ctx(c), dig(sig.digits), map(&c.base()), ngroups(sig.digits.size() / 6) {}

    struct Snapshot {
        MapOfMotifs map;
        std::vector<int> centers;
        std::size_t cursor;
    };
    Snapshot save() const { return {map, center_of_index, cursor}; }
    void restore(Snapshot&& s) {
        map = std::move(s.map);
        center_of_index = std::move(s.centers);
        cursor = s.cursor;
    }

    MotifId name_at(std::size_t g, int slot) const {
        const int v = dig[g * 6 + slot] - ctx.n() - ctx.base().alphabet().num_colors();
        if (v < 0 || v >= ctx.base().size()) throw Error("signature: bad motif digit");
        return static_cast<MotifId>(v);
    }

    Color color_at(std::size_t g, int slot) const {
        int v = dig[g * 6 + slot] - ctx.n();
        const int k = ctx.base().alphabet().k();
        if (v < 0 || v >= 2 * k) throw Error("signature: bad color digit");
        return static_cast<Color>(v < k ? 2 * v : 2 * (v - k) + 1);
    }

    using Cont = std::function<bool()>;

    // Sweeps `count` rotation slots of center c beginning at `start`; calls
    // `done` when this center's sweep is exhausted.
    bool sweep(int c, int c_index, int start, int count, const Cont& done) {
        const int d = map.degree(c);
        for (int t = 0; t < count; ++t) {
            const int i = (start + t) % d;
            if (!map.at(c, i).free()) continue; // bond already known: silent
            if (cursor >= ngroups) return false;
            const std::size_t g = cursor;
            if (dig[g * 6] != c_index || dig[g * 6 + 1] != ctx.name_digit(map.center_motif(c)) ||
                dig[g * 6 + 2] != ctx.color_digit(map.port_color(c, i)))
                return false;
            const Color far = color_at(g, 3);
            if (far != complement_of(map.port_color(c, i))) return false;
            const MotifId m2 = name_at(g, 4);
            const int idx2 = dig[g * 6 + 5];
            Cont rest = [this, c, c_index, start, count, t, d, &done] {
                return sweep(c, c_index, (start + t + 1) % d, count - t - 1, done);
            };
            if (idx2 == static_cast<int>(center_of_index.size())) {
                const auto& ports = ctx.base().motif(m2).ports;
                for (int j = 0; j < static_cast<int>(ports.size()); ++j) {
                    if (ports[j] != far) continue;
                    Snapshot snap = save();
                    const int c2 = map.add_center(m2);
                    center_of_index.push_back(c2);
                    map.bond({c, i}, {c2, j});
                    ++cursor;
                    const int d2 = map.degree(c2);
                    if (sweep(c2, idx2, (j + 1) % d2, d2 - 1, rest)) return true;
                    restore(std::move(snap));
                }
                return false;
            }
            if (idx2 > static_cast<int>(center_of_index.size())) return false;
            const int c2 = center_of_index[idx2];
            if (map.center_motif(c2) != m2) return false;
            for (int j = 0; j < map.degree(c2); ++j) {
                if (!map.at(c2, j).free() || map.port_color(c2, j) != far) continue;
                Snapshot snap = save();
                map.bond({c, i}, {c2, j});
                ++cursor;
                if (rest()) return true;
                restore(std::move(snap));
            }
            return false;
        }
        return done();
    }
};

} // namespace

MapOfMotifs reconstruct(const SignatureContext& ctx, const Signature& sig) {
    if (sig.digits.empty() || sig.digits.size() % 6 != 0)
        throw Error("signature: length is not a multiple of six");
    Rebuilder probe(ctx, sig);
    const MotifId m0 = probe.name_at(0, 1);
    const Color col0 = probe.color_at(0, 2);
    const auto& ports = ctx.base().motif(m0).ports;
    for (int p0 = 0; p0 < static_cast<int>(ports.size()); ++p0) {
        if (ports[p0] != col0) continue;
        Rebuilder attempt(ctx, sig);
        const int root = attempt.map.add_center(m0);
        attempt.center_of_index.push_back(root);
        auto all_consumed = [&] { return attempt.cursor == attempt.ngroups; };
        if (attempt.sweep(root, 0, p0, attempt.map.degree(root), all_consumed) &&
            saturated(attempt.map))
            return attempt.map;
    }
    throw Error("signature does not reconstruct");
}

} // namespace cagegen
