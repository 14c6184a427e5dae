#include "cagegen/base_io.hpp"

#include <fstream>
#include <sstream>

#include "cagegen/errors.hpp"

namespace cagegen {

namespace {

std::string strip(const std::string& line) {
    std::string s = line.substr(0, line.find('#'));
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

} // namespace

MotifBase parse_base(std::istream& in) {
    std::vector<std::string> positive;
    std::vector<std::pair<std::string, std::vector<std::string>>> raw_motifs;
    std::string line;
    int lineno = 0;
    bool have_colors = false;
    std::vector<int> motif_lines;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string s = strip(line);
        if (s.empty()) continue;
        if (!have_colors) {
            if (s.rfind("colors:", 0) != 0)
                throw ParseError(lineno, "expected 'colors: ...' first");
            positive = split_ws(s.substr(7));
            if (positive.empty()) throw ParseError(lineno, "no colors listed");
            have_colors = true;
            continue;
        }
        if (s.rfind("motif ", 0) != 0) throw ParseError(lineno, "expected 'motif NAME: ports'");
        const auto colon = s.find(':');
        if (colon == std::string::npos) throw ParseError(lineno, "missing ':' in motif line");
        const auto name_toks = split_ws(s.substr(6, colon - 6));
        if (name_toks.size() != 1) throw ParseError(lineno, "motif needs exactly one name");
        raw_motifs.emplace_back(name_toks[0], split_ws(s.substr(colon + 1)));
        motif_lines.push_back(lineno);
        if (raw_motifs.back().second.empty()) throw ParseError(lineno, "motif has no ports");
    }
    if (!have_colors) throw ParseError(lineno, "missing 'colors:' line");

    std::vector<std::string> names;
    for (const auto& [name, ports] : raw_motifs) names.push_back(name);
    ColorAlphabet alphabet(positive, names);

    std::vector<Motif> motifs;
    for (std::size_t i = 0; i < raw_motifs.size(); ++i) {
        Motif m;
        m.name = raw_motifs[i].first;
        try {
            for (const auto& tok : raw_motifs[i].second)
                m.ports.push_back(alphabet.parse_color(tok));
        } catch (const UnknownColor& e) {
            throw ParseError(motif_lines[i], e.what());
        }
        motifs.push_back(std::move(m));
    }
    return build_base(std::move(alphabet), std::move(motifs));
}

MotifBase parse_base_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open base file '" + path + "'");
    return parse_base(in);
}

std::string serialize_base(const MotifBase& base) {
    std::ostringstream out;
    out << "colors:";
    for (int i = 0; i < base.alphabet().k(); ++i) out << ' ' << base.alphabet().positive_name(i);
    out << '\n';
    for (const Motif& m : base.motifs()) {
        out << "motif " << m.name << ":";
        for (Color c : m.ports) out << ' ' << base.alphabet().color_name(c);
        out << '\n';
    }
    return out.str();
}

std::string serialize_rotation(const MapOfMotifs& map) {
    std::ostringstream out;
    out << '[';
    for (int c = 0; c < map.size(); ++c) {
        if (c) out << ',';
        out << '(' << c << ':' << map.base().motif(map.center_motif(c)).name << ",[";
        for (int i = 0; i < map.degree(c); ++i) {
            if (i) out << ' ';
            const RotEntry& e = map.at(c, i);
            if (e.free())
                out << "free:" << map.base().alphabet().color_name(map.port_color(c, i));
            else
                out << e.peer_center << '.' << e.peer_port;
        }
        out << "])";
    }
    out << ']';
    return out.str();
}

MapOfMotifs parse_rotation(const std::string& text, const MotifBase& base) {
    MapOfMotifs map(&base);
    std::size_t pos = 0;
    auto expect = [&](char c) {
        if (pos >= text.size() || text[pos] != c)
            throw Error("rotation parse: expected '" + std::string(1, c) + "' at " +
                        std::to_string(pos));
        ++pos;
    };
    auto read_until = [&](const std::string& stops) {
        std::string out;
        while (pos < text.size() && stops.find(text[pos]) == std::string::npos) out += text[pos++];
        return out;
    };
    struct PendingBond { int c, i, pc, pp; };
    std::vector<PendingBond> bonds;
    expect('[');
    while (pos < text.size() && text[pos] == '(') {
        expect('(');
        const int c = std::stoi(read_until(":"));
        expect(':');
        const std::string name = read_until(",");
        expect(',');
        expect('[');
        const int mi = base.motif_index(name);
        if (mi < 0) throw Error("rotation parse: unknown motif '" + name + "'");
        if (map.add_center(static_cast<MotifId>(mi)) != c)
            throw Error("rotation parse: centers out of order");
        int i = 0;
        while (pos < text.size() && text[pos] != ']') {
            if (text[pos] == ' ') { ++pos; continue; }
            const std::string tok = read_until(" ]");
            if (tok.rfind("free:", 0) == 0) {
                if (map.port_color(c, i) != base.alphabet().parse_color(tok.substr(5)))
                    throw Error("rotation parse: free color mismatch");
            } else {
                const auto dot = tok.find('.');
                if (dot == std::string::npos) throw Error("rotation parse: bad entry '" + tok + "'");
                const int pc = std::stoi(tok.substr(0, dot)), pp = std::stoi(tok.substr(dot + 1));
                if (pc > c || (pc == c && pp > i)) bonds.push_back({c, i, pc, pp});
            }
            ++i;
        }
        expect(']');
        expect(')');
        if (pos < text.size() && text[pos] == ',') ++pos;
    }
    expect(']');
    for (const auto& b : bonds) map.bond({b.c, b.i}, {b.pc, b.pp});
    return map;
}

} // namespace cagegen
