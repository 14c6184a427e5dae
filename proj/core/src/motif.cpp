#include "cagegen/motif.hpp"

#include <algorithm>

namespace cagegen {

bool cyclically_equal(const std::vector<Color>& a, const std::vector<Color>& b) {
    const std::size_t d = a.size();
    if (d != b.size()) return false;
    for (std::size_t r = 0; r < d; ++r) {
        bool eq = true;
        for (std::size_t i = 0; i < d && eq; ++i)
            eq = a[i] == b[(i + r) % d];
        if (eq) return true;
    }
    return false;
}

MotifBase::MotifBase(ColorAlphabet alphabet, std::vector<Motif> motifs)
    : alphabet_(std::move(alphabet)), motifs_(std::move(motifs)) {
    const int nc = alphabet_.num_colors();
    const int k = alphabet_.k();

    attach_.resize(nc);
    for (const Motif& m : motifs_) {
        std::vector<int> per_color(nc, 0);
        for (Color c : m.ports) ++per_color[c];
        max_same_color_ = std::max(max_same_color_, *std::max_element(per_color.begin(), per_color.end()));
    }

    for (MotifId mi = 0; mi < motifs_.size(); ++mi) {
        const auto& ports = motifs_[mi].ports;
        const int d = static_cast<int>(ports.size());
        // rotation classes of starting positions
        std::vector<std::uint8_t> reps;
        std::vector<char> grouped(d, 0);
        for (int p = 0; p < d; ++p) {
            if (grouped[p]) continue;
            reps.push_back(static_cast<std::uint8_t>(p));
            for (int q = p; q < d; ++q) {
                if (grouped[q]) continue;
                bool eq = true;
                for (int i = 0; i < d && eq; ++i)
                    eq = ports[(p + i) % d] == ports[(q + i) % d];
                if (eq) grouped[q] = 1;
            }
        }
        class_reps_.push_back(std::move(reps));

        std::vector<int> cv(k, 0);
        for (Color c : ports) cv[positive_index(c)] += is_positive(c) ? 1 : -1;
        cvec_.push_back(std::move(cv));
    }

    for (MotifId mi = 0; mi < motifs_.size(); ++mi)
        for (std::uint8_t p : class_reps_[mi]) {
            Color pc = motifs_[mi].ports[p];
            attach_[complement_of(pc)].push_back(Attachment{mi, p});
        }
}

int MotifBase::motif_index(const std::string& name) const {
    for (std::size_t i = 0; i < motifs_.size(); ++i)
        if (motifs_[i].name == name) return static_cast<int>(i);
    return -1;
}

MotifBase build_base(ColorAlphabet alphabet, std::vector<Motif> motifs) {
    if (motifs.empty()) throw EmptyBase("motif base is empty");
    for (const Motif& m : motifs) {
        if (m.ports.empty())
            throw UnknownColor("motif '" + m.name + "' has no ports");
        for (Color c : m.ports)
            if (c >= alphabet.num_colors())
                throw UnknownColor("motif '" + m.name + "' uses a color outside the alphabet");
        if (alphabet.motif_color_index(m.name) < 0)
            throw UnknownColor("motif name '" + m.name + "' missing from the alphabet");
    }
    for (std::size_t i = 0; i < motifs.size(); ++i)
        for (std::size_t j = i + 1; j < motifs.size(); ++j) {
            if (motifs[i].name == motifs[j].name)
                throw DuplicateMotif("repeated motif name '" + motifs[i].name + "'");
            if (cyclically_equal(motifs[i].ports, motifs[j].ports))
                throw DuplicateMotif("motifs '" + motifs[i].name + "' and '" + motifs[j].name +
                                     "' have the same cyclic port sequence");
        }
    return MotifBase(std::move(alphabet), std::move(motifs));
}

} // namespace cagegen
