#include "cagegen/indices.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>

#include "cagegen/errors.hpp"
#include "cagegen/faces.hpp"

namespace cagegen {

FaceStats face_stats(const MolecularMap& map) {
    auto walks = faces(map);
    std::vector<int> sizes;
    sizes.reserve(walks.size());
    for (const auto& w : walks) sizes.push_back(static_cast<int>(w.size()));
    std::sort(sizes.rbegin(), sizes.rend());
    FaceStats st{sizes.empty() ? 0 : sizes[0], Rational(0)};
    if (sizes.size() >= 2) {
        // mean face size is 2E/F
        const std::int64_t twoE = 2 * map.edge_count();
        st.face_gap = Rational(static_cast<std::int64_t>(sizes[0] - sizes[1]) *
                                   static_cast<std::int64_t>(sizes.size()),
                               twoE);
    }
    return st;
}

Rational sparsity_bruteforce(const MolecularMap& map, int cap) {
    const int n = map.size();
    if (n < 2) throw Error("sparsity needs at least two vertices");
    if (n > cap) throw TooLarge("brute-force sparsity beyond the configured cap");

    // adjacency with multiplicity, loops dropped (they never cross a cut)
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> mult(n, 0);
        for (int i = 0; i < map.degree(v); ++i) {
            const int u = map.peer(v, i).center;
            if (u != v) ++mult[u];
        }
        for (int u = 0; u < n; ++u)
            if (mult[u]) adj[v].emplace_back(u, mult[u]);
    }

    // reflected Gray code over subsets of {0..n-2}; vertex n-1 stays on side 0
    std::vector<char> side(n, 0);
    int cut = 0, in_s = 0;
    Rational best(0);
    bool have = false;
    const std::uint64_t steps = (1ull << (n - 1)) - 1;
    for (std::uint64_t t = 1; t <= steps; ++t) {
        const int v = std::countr_zero(t);
        const char ns = side[v] ^ 1;
        for (auto [u, m] : adj[v]) cut += (side[u] == ns) ? -m : m;
        side[v] = ns;
        in_s += ns ? 1 : -1;
        const Rational r(cut, std::min(in_s, n - in_s));
        if (!have || r < best) { best = r; have = true; }
    }
    return best;
}

namespace {

struct DualView {
    int n = 0, nfaces = 0;
    std::vector<int> dart_face;   // flat dart id -> face id
    std::vector<int> lambda;      // flat dart id -> signed swept subtree count
    std::vector<int> off;         // vertex -> flat dart base
    std::vector<std::vector<Dart>> face_darts;
    const MolecularMap* map = nullptr;

    int id(Dart d) const { return off[d.center] + d.port; }
};

DualView build_dual(const MolecularMap& map) {
    DualView dv;
    dv.map = &map;
    dv.n = map.size();
    dv.off.resize(map.size() + 1, 0);
    for (int v = 0; v < map.size(); ++v) dv.off[v + 1] = dv.off[v] + map.degree(v);

    auto walks = faces(map);
    dv.nfaces = static_cast<int>(walks.size());
    dv.dart_face.assign(dv.off.back(), -1);
    for (int f = 0; f < dv.nfaces; ++f)
        for (Dart d : walks[f]) dv.dart_face[dv.id(d)] = f;
    dv.face_darts = std::move(walks);

    // primal BFS spanning tree and subtree sizes
    std::vector<int> parent(map.size(), -2), parent_dart(map.size(), -1), order;
    parent[0] = -1;
    order.push_back(0);
    std::deque<int> q{0};
    std::vector<char> is_tree(dv.off.back(), 0);
    while (!q.empty()) {
        const int v = q.front();
        q.pop_front();
        for (int i = 0; i < map.degree(v); ++i) {
            const Dart p = map.peer(v, i);
            if (parent[p.center] != -2) continue;
            parent[p.center] = v;
            parent_dart[p.center] = dv.id(p);
            is_tree[dv.id({v, i})] = is_tree[dv.id(p)] = 1;
            order.push_back(p.center);
            q.push_back(p.center);
        }
    }
    if (static_cast<int>(order.size()) != map.size())
        throw Error("molecular map is not connected");

    std::vector<int> sub(map.size(), 1);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) sub[parent[*it]] += sub[*it];

    // crossing a tree edge sweeps the child's subtree, sign by direction
    dv.lambda.assign(dv.off.back(), 0);
    for (int v = 1; v < map.size(); ++v) {
        const int child_dart = parent_dart[v]; // dart at v pointing to parent
        dv.lambda[child_dart] = -sub[v];
        const Dart pd = map.peer(v, child_dart - dv.off[v]);
        dv.lambda[dv.id(pd)] = sub[v];
    }
    return dv;
}

} // namespace

Rational sparsity_planar(const MolecularMap& map, bool use_bound) {
    const int n = map.size();
    if (n < 2) throw Error("sparsity needs at least two vertices");
    DualView dv = build_dual(map);

    auto small_side = [n](int w) {
        w %= n;
        if (w < 0) w += n;
        return std::min(w, n - w);
    };
    const int max_weight = n / 2;

    Rational best(0);
    bool have = false;

    // one search per primal edge: shortest closed dual walks through it,
    // tracked per (face, enclosed weight mod n) state
    std::vector<int> dist(static_cast<std::size_t>(dv.nfaces) * n);
    std::vector<char> seen_edge(dv.off.back(), 0);
    std::deque<std::pair<int, int>> queue; // (state, dist)
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < map.degree(v); ++i) {
            const int d0 = dv.id({v, i});
            if (seen_edge[d0]) continue;
            const Dart opp = map.peer(v, i);
            seen_edge[d0] = seen_edge[dv.id(opp)] = 1;

            const int fS = dv.dart_face[d0];
            const int fT = dv.dart_face[dv.id(opp)];
            std::fill(dist.begin(), dist.end(), -1);
            queue.clear();
            int w0 = dv.lambda[d0] % n;
            if (w0 < 0) w0 += n;
            dist[static_cast<std::size_t>(fT) * n + w0] = 1;
            queue.emplace_back(fT * n + w0, 1);
            while (!queue.empty()) {
                auto [state, dcur] = queue.front();
                queue.pop_front();
                if (use_bound && have && Rational(dcur, max_weight) >= best) break;
                const int f = state / n, w = state % n;
                if (f == fS) {
                    const int wt = small_side(w);
                    if (wt > 0) {
                        const Rational r(dcur, wt);
                        if (!have || r < best) { best = r; have = true; }
                    }
                }
                for (Dart dart : dv.face_darts[f]) {
                    const Dart o = map.peer(dart.center, dart.port);
                    const int nf = dv.dart_face[dv.id(o)];
                    int nw = (w + dv.lambda[dv.id(dart)]) % n;
                    if (nw < 0) nw += n;
                    const std::size_t ns = static_cast<std::size_t>(nf) * n + nw;
                    if (dist[ns] < 0) {
                        dist[ns] = dcur + 1;
                        queue.emplace_back(static_cast<int>(ns), dcur + 1);
                    }
                }
            }
        }
    if (!have) throw Error("no proper cut found");
    return best;
}

} // namespace cagegen
