#include "cagegen/metamotif.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "cagegen/errors.hpp"

namespace cagegen {

namespace {

// one chaining option on a core port
struct Option {
    Color new_color;
    std::optional<MotifId> via;
    std::uint8_t near_port = 0, far_port = 0;
};

// color-preserving rotations of a port sequence
std::vector<int> symmetries(const std::vector<Color>& ports) {
    const int d = static_cast<int>(ports.size());
    std::vector<int> out;
    for (int r = 0; r < d; ++r) {
        bool ok = true;
        for (int i = 0; i < d && ok; ++i) ok = ports[i] == ports[(i + r) % d];
        if (ok) out.push_back(r);
    }
    return out;
}

} // namespace

Degree2Elimination eliminate_degree2(const MotifBase& base) {
    const auto& alpha = base.alphabet();
    std::vector<MotifId> deg2, core;
    for (MotifId m = 0; m < base.size(); ++m)
        (base.motif(m).degree() == 2 ? deg2 : core).push_back(m);

    if (core.empty() && !deg2.empty())
        throw EmptyBase("degree-2 elimination leaves no motifs");

    for (MotifId a : deg2)
        for (MotifId b : deg2)
            for (Color ca : base.motif(a).ports)
                for (Color cb : base.motif(b).ports)
                    if (ca == complement_of(cb))
                        throw NonTerminating("degree-2 motifs '" + base.motif(a).name + "' and '" +
                                             base.motif(b).name + "' can be concatenated");

    std::vector<Motif> out_motifs;
    std::vector<MetamotifInfo> infos;
    std::vector<std::string> names;

    for (MotifId m : core) {
        const auto& ports = base.motif(m).ports;
        const int d = static_cast<int>(ports.size());
        const std::vector<int> syms = symmetries(ports);

        // per port: keep, or chain each compatible (degree-2 motif, end) class
        std::vector<std::vector<Option>> options(d);
        for (int p = 0; p < d; ++p) {
            options[p].push_back({ports[p], std::nullopt, 0, 0});
            for (MotifId dm : deg2)
                for (std::uint8_t e : base.port_class_reps(dm)) {
                    if (base.motif(dm).ports[e] != complement_of(ports[p])) continue;
                    const std::uint8_t other = static_cast<std::uint8_t>(1 - e);
                    options[p].push_back({base.motif(dm).ports[other], dm, e, other});
                }
        }

        std::vector<int> pick(d, 0);
        auto decorated = [&](int rot) {
            // the (color, chain) sequence read from rotation offset rot
            std::vector<std::pair<Color, int>> seq(d);
            for (int i = 0; i < d; ++i) {
                const int p = (i + rot) % d;
                const Option& o = options[p][pick[p]];
                seq[i] = {o.new_color, o.via ? static_cast<int>(*o.via) * 4 + o.near_port : -1};
            }
            return seq;
        };
        std::function<void(int)> enumerate = [&](int p) {
            if (p == d) {
                // emit only the rotation-minimal representative
                auto id = decorated(0);
                for (int r : syms)
                    if (r != 0 && decorated(r) < id) return;
                Motif meta;
                MetamotifInfo info;
                info.core = m;
                for (int i = 0; i < d; ++i) {
                    const Option& o = options[i][pick[i]];
                    meta.ports.push_back(o.new_color);
                    PortChain chain;
                    chain.core_port = static_cast<std::uint8_t>(i);
                    chain.via = o.via;
                    chain.via_near_port = o.near_port;
                    chain.via_far_port = o.far_port;
                    info.ports.push_back(chain);
                }
                std::string sig;
                {
                    std::vector<std::string> cn;
                    for (Color c : meta.ports) cn.push_back(alpha.color_name(c));
                    std::sort(cn.begin(), cn.end());
                    for (const auto& s : cn) {
                        std::string t = s;
                        t.erase(std::remove(t.begin(), t.end(), '~'), t.end());
                        sig += (s[0] == '~' ? "n" : "") + t;
                    }
                }
                std::string name = base.motif(m).name + "_" + sig;
                while (std::find(names.begin(), names.end(), name) != names.end()) name += "x";
                meta.name = name;
                names.push_back(name);
                out_motifs.push_back(std::move(meta));
                infos.push_back(std::move(info));
                return;
            }
            for (pick[p] = 0; pick[p] < static_cast<int>(options[p].size()); ++pick[p]) enumerate(p + 1);
            pick[p] = 0;
        };
        enumerate(0);
    }

    ColorAlphabet alphabet(
        [&] {
            std::vector<std::string> pos;
            for (int i = 0; i < alpha.k(); ++i) pos.push_back(alpha.positive_name(i));
            return pos;
        }(),
        names);
    MotifBase out = build_base(std::move(alphabet), std::move(out_motifs));
    return {std::move(out), ExpansionMap{std::move(infos)}};
}

MapOfMotifs expand(const MapOfMotifs& map, const ExpansionMap& expansion,
                   const MotifBase& original_base) {
    MapOfMotifs out(&original_base);
    const int n = map.size();
    // per metamotif center: its core center id and one center per chained port
    std::vector<int> core_center(n);
    std::vector<std::vector<int>> chain_center(n);
    for (int c = 0; c < n; ++c) {
        const MetamotifInfo& info = expansion.motifs[map.center_motif(c)];
        core_center[c] = out.add_center(info.core);
        chain_center[c].assign(info.ports.size(), -1);
        for (std::size_t p = 0; p < info.ports.size(); ++p)
            if (info.ports[p].via) chain_center[c][p] = out.add_center(*info.ports[p].via);
    }
    // internal bonds of each chain
    for (int c = 0; c < n; ++c) {
        const MetamotifInfo& info = expansion.motifs[map.center_motif(c)];
        for (std::size_t p = 0; p < info.ports.size(); ++p)
            if (info.ports[p].via)
                out.bond({core_center[c], info.ports[p].core_port},
                         {chain_center[c][p], info.ports[p].via_near_port});
    }
    // metamotif bonds between resolved endpoints
    auto endpoint = [&](int c, int p) -> Dart {
        const MetamotifInfo& info = expansion.motifs[map.center_motif(c)];
        if (info.ports[p].via) return {chain_center[c][p], info.ports[p].via_far_port};
        return {core_center[c], info.ports[p].core_port};
    };
    for (int c = 0; c < n; ++c)
        for (int p = 0; p < map.degree(c); ++p) {
            const RotEntry& e = map.at(c, p);
            if (e.free() || Dart{e.peer_center, e.peer_port} < Dart{c, p}) continue;
            out.bond(endpoint(c, p), endpoint(e.peer_center, e.peer_port));
        }
    return out;
}

std::string serialize_expansion(const MotifBase& transformed, const MotifBase& original,
                                const ExpansionMap& expansion) {
    std::ostringstream out;
    out << "# metamotif expansion map\n";
    for (MotifId m = 0; m < transformed.size(); ++m) {
        const MetamotifInfo& info = expansion.motifs[m];
        out << "metamotif " << transformed.motif(m).name << ": core="
            << original.motif(info.core).name;
        for (std::size_t p = 0; p < info.ports.size(); ++p) {
            out << (p ? "," : " ports=");
            if (info.ports[p].via)
                out << p << ":via:" << original.motif(*info.ports[p].via).name << "."
                    << static_cast<int>(info.ports[p].via_near_port);
            else
                out << p << ":keep";
        }
        out << "\n";
    }
    return out.str();
}

} // namespace cagegen
