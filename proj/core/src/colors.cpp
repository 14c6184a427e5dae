#include "cagegen/colors.hpp"

#include <algorithm>
#include <set>

namespace cagegen {

ColorAlphabet::ColorAlphabet(std::vector<std::string> positive_names,
                             std::vector<std::string> motif_names)
    : positive_(std::move(positive_names)), motif_names_(std::move(motif_names)) {
    if (positive_.empty())
        throw UnknownColor("alphabet needs at least one positive color");
    std::set<std::string> seen;
    for (const auto& p : positive_) {
        if (p.empty() || p[0] == '~')
            throw UnknownColor("bad positive color name '" + p + "'");
        if (!seen.insert(p).second)
            throw UnknownColor("repeated color name '" + p + "'");
    }
    for (const auto& m : motif_names_) {
        if (m.empty())
            throw UnknownColor("empty motif name");
        if (seen.count(m))
            throw UnknownColor("motif name '" + m + "' collides with a color");
    }
}

std::string ColorAlphabet::color_name(Color c) const {
    const std::string& base = positive_[positive_index(c)];
    return is_positive(c) ? base : "~" + base;
}

Color ColorAlphabet::parse_color(const std::string& token) const {
    bool neg = !token.empty() && token[0] == '~';
    const std::string name = neg ? token.substr(1) : token;
    for (std::size_t i = 0; i < positive_.size(); ++i)
        if (positive_[i] == name)
            return static_cast<Color>(2 * i + (neg ? 1 : 0));
    throw UnknownColor("unknown color '" + token + "'");
}

int ColorAlphabet::motif_color_index(const std::string& name) const {
    auto it = std::find(motif_names_.begin(), motif_names_.end(), name);
    return it == motif_names_.end() ? -1 : static_cast<int>(it - motif_names_.begin());
}

} // namespace cagegen
