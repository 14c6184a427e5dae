#include "cagegen/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "cagegen/backbone.hpp"
#include "cagegen/base_io.hpp"
#include "cagegen/errors.hpp"
#include "cagegen/folding.hpp"
#include "cagegen/metamotif.hpp"
#include "cagegen/molecular.hpp"

namespace cagegen {

std::string to_string(BackboneMode m) {
    switch (m) {
        case BackboneMode::Tree: return "tree";
        case BackboneMode::Path: return "path";
        case BackboneMode::Cycle: return "cycle";
    }
    return "?";
}

std::optional<BackboneMode> backbone_mode_from_string(const std::string& s) {
    if (s == "tree") return BackboneMode::Tree;
    if (s == "path") return BackboneMode::Path;
    if (s == "cycle") return BackboneMode::Cycle;
    return std::nullopt;
}

std::string file_hash_hex(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::uint64_t h = 1469598103934665603ull;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct StoredMap {
    std::vector<MotifId> centers;
    std::vector<std::pair<Dart, Dart>> bonds;
};

StoredMap snapshot(const MapOfMotifs& m) {
    StoredMap s;
    for (int c = 0; c < m.size(); ++c) s.centers.push_back(m.center_motif(c));
    for (int c = 0; c < m.size(); ++c)
        for (int i = 0; i < m.degree(c); ++i) {
            const RotEntry& e = m.at(c, i);
            if (!e.free() && Dart{c, i} < Dart{e.peer_center, e.peer_port})
                s.bonds.emplace_back(Dart{c, i}, Dart{e.peer_center, e.peer_port});
        }
    return s;
}

MapOfMotifs rebuild(const StoredMap& s, const MotifBase& base) {
    MapOfMotifs m(&base);
    for (MotifId c : s.centers) m.add_center(c);
    for (auto [a, b] : s.bonds) m.bond(a, b);
    return m;
}

// (expanded size, signature) — sizes differ across metamotif expansions
struct StoreKey {
    int n;
    Signature sig;
    friend auto operator<=>(const StoreKey&, const StoreKey&) = default;
};

} // namespace

Catalog run(const RunConfig& config, const MotifBase& base) {
    const auto t0 = Clock::now();
    Catalog cat;
    cat.config = config;
    cat.base_hash = config.base_file.empty() ? "-" : file_hash_hex(config.base_file);

    // metamotif transform rewires which base the generators run over
    std::optional<Degree2Elimination> elim;
    const MotifBase* gen_base = &base;
    if (config.metamotif) {
        elim = eliminate_degree2(base);
        gen_base = &elim->base;
    }
    const int n = config.size;
    SignatureContext gen_ctx(*gen_base, n);
    cat.radix = gen_ctx.radix();

    std::optional<ReachTable> reach;
    if (config.almost_foldable) reach = precompute_reach(*gen_base, n);

    std::atomic<std::uint64_t> backbones{0}, saturated_count{0}, cycle_candidates{0};
    std::atomic<bool> cancel{false};
    std::atomic<std::int64_t> fold_micros{0};
    DedupStore<StoredMap> store;
    const auto deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(config.budget_seconds));

    const int workers = std::max(1, config.workers);
    const double t_backbone_start = seconds_since(t0);

    auto worker_fn = [&](int wid) {
        std::uint64_t local_emissions = 0;
        std::int64_t local_fold_micros = 0;
        MapSink on_saturated = [&](const MapOfMotifs& sat) {
            saturated_count.fetch_add(1, std::memory_order_relaxed);
            Signature sig = canonical_signature(gen_ctx, sat);
            store.insert(sig, snapshot(sat));
        };
        BackboneSink on_backbone = [&](const MapOfMotifs& bb) {
            backbones.fetch_add(1, std::memory_order_relaxed);
            if ((++local_emissions & 1023) == 0 && Clock::now() > deadline)
                cancel.store(true, std::memory_order_relaxed);
            // zero characteristic vector is necessary for any fold to saturate
            auto cv = characteristic_vector(bb);
            if (!std::all_of(cv.begin(), cv.end(), [](int v) { return v == 0; })) return;
            const auto f0 = Clock::now();
            saturate_all(bb, on_saturated);
            local_fold_micros +=
                std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - f0).count();
        };
        GenOptions opt;
        opt.prune = reach ? &*reach : nullptr;
        opt.shard = {static_cast<std::uint32_t>(wid), static_cast<std::uint32_t>(workers), 2};
        opt.cancel = &cancel;
        switch (config.mode) {
            case BackboneMode::Path: gen_paths(*gen_base, n, opt, on_backbone); break;
            case BackboneMode::Tree: gen_trees(*gen_base, n, opt, on_backbone); break;
            case BackboneMode::Cycle: {
                CycleStats st = gen_cycles(*gen_base, n, opt, on_backbone);
                cycle_candidates.fetch_add(st.closure_candidates, std::memory_order_relaxed);
                break;
            }
        }
        fold_micros.fetch_add(local_fold_micros, std::memory_order_relaxed);
    };

    if (workers == 1) {
        worker_fn(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker_fn, w);
        for (auto& th : pool) th.join();
    }

    cat.summary.backbones = config.mode == BackboneMode::Cycle ? cycle_candidates.load()
                                                               : backbones.load();
    cat.summary.saturated = saturated_count.load();
    cat.summary.complete = !cancel.load();
    const double t_fold_done = seconds_since(t0);
    // folding streams inside generation; fold time is summed across workers
    cat.summary.times.fold = static_cast<double>(fold_micros.load()) * 1e-6;
    cat.summary.times.backbone =
        std::max(0.0, t_fold_done - t_backbone_start - cat.summary.times.fold / workers);

    // metamotif runs convert every unique map back to the original base and
    // dedup again there (isomorphism is decided over the original motifs)
    std::map<StoreKey, StoredMap> finals;
    if (config.metamotif) {
        for (auto& [sig, sm] : store.sorted_entries()) {
            MapOfMotifs meta = rebuild(sm, *gen_base);
            MapOfMotifs orig = expand(meta, elim->expansion, base);
            SignatureContext ctx(base, orig.size());
            Signature esig = canonical_signature(ctx, orig);
            finals.emplace(StoreKey{orig.size(), std::move(esig)}, snapshot(orig));
        }
    } else {
        for (auto& [sig, sm] : store.sorted_entries())
            finals.emplace(StoreKey{n, sig}, sm);
    }
    cat.summary.unique_maps = finals.size();
    const double t_dedup_done = seconds_since(t0);
    cat.summary.times.dedup = t_dedup_done - t_fold_done;

    // score everything (parallel chunks, pure work)
    const MotifBase& record_base = base;
    std::vector<std::pair<StoreKey, StoredMap>> ordered(finals.begin(), finals.end());
    std::vector<CatalogRecord> records(ordered.size());
    std::atomic<std::size_t> next{0};
    auto score_fn = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < ordered.size();) {
            const auto& [key, sm] = ordered[i];
            MapOfMotifs m = rebuild(sm, record_base);
            SignatureContext ctx(record_base, m.size());
            MolecularMap mol = to_molecular_map(m);
            CatalogRecord rec;
            rec.signature = key.sig;
            rec.rotation = serialize_rotation(m);
            std::map<std::string, int> counts;
            for (int c = 0; c < m.size(); ++c)
                ++counts[record_base.motif(m.center_motif(c)).name];
            rec.motif_counts.assign(counts.begin(), counts.end());
            FaceStats fs = face_stats(mol);
            rec.report.largest_face = fs.largest_face;
            rec.report.face_gap = fs.face_gap;
            auto cls = equivalence_classes(ctx, m);
            rec.report.class_count = *std::max_element(cls.begin(), cls.end()) + 1;
            rec.report.chiral = is_chiral(ctx, m);
            rec.report.min_sparsity = m.size() >= 2 ? sparsity_planar(mol) : Rational(0);
            records[i] = std::move(rec);
        }
    };
    if (workers == 1 || ordered.size() < 64) {
        score_fn();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(score_fn);
        for (auto& th : pool) th.join();
    }
    cat.summary.times.indices = seconds_since(t0) - t_dedup_done;

    if (config.min_sparsity) {
        std::vector<CatalogRecord> kept;
        for (auto& r : records)
            if (r.report.min_sparsity >= *config.min_sparsity) kept.push_back(std::move(r));
        records = std::move(kept);
    }
    cat.records = std::move(records);
    return cat;
}

namespace {

bool check(const Rational& lhs, const std::string& op, const Rational& rhs) {
    if (op == "<") return lhs < rhs;
    if (op == "<=") return lhs <= rhs;
    if (op == "=" || op == "==") return lhs == rhs;
    if (op == "!=") return lhs != rhs;
    if (op == ">=") return lhs >= rhs;
    if (op == ">") return lhs > rhs;
    throw UnknownField("bad comparison operator '" + op + "'");
}

} // namespace

Catalog filter(const Catalog& catalog, const std::string& predicate) {
    std::istringstream in(predicate);
    std::string field, op, value;
    in >> field >> op >> value;
    if (field.empty() || op.empty() || value.empty())
        throw UnknownField("predicate must be 'field op value'");

    auto eval = [&](const CatalogRecord& r) -> bool {
        if (field == "largest_face") return check(Rational(r.report.largest_face), op, parse_rational(value));
        if (field == "face_gap") return check(r.report.face_gap, op, parse_rational(value));
        if (field == "class_count") return check(Rational(r.report.class_count), op, parse_rational(value));
        if (field == "min_sparsity") return check(r.report.min_sparsity, op, parse_rational(value));
        if (field == "chiral") {
            bool want = value == "true" || value == "1";
            if (value != "true" && value != "false" && value != "0" && value != "1")
                throw UnknownField("chiral compares against true/false");
            return check(Rational(r.report.chiral ? 1 : 0), op, Rational(want ? 1 : 0));
        }
        throw UnknownField("unknown field '" + field + "'");
    };

    Catalog out = catalog;
    out.records.clear();
    for (const auto& r : catalog.records)
        if (eval(r)) out.records.push_back(r);
    return out;
}

std::string serialize_catalog(const Catalog& cat) {
    std::ostringstream out;
    out << "# cagegen catalog v1\n";
    out << "# base-hash: " << cat.base_hash << "\n";
    out << "# size: " << cat.config.size << "\n";
    out << "# mode: " << to_string(cat.config.mode) << "\n";
    out << "# almost-foldable: " << (cat.config.almost_foldable ? "true" : "false") << "\n";
    out << "# metamotif: " << (cat.config.metamotif ? "true" : "false") << "\n";
    out << "# radix: " << cat.radix << "\n";
    out << "# complete: " << (cat.summary.complete ? "true" : "false") << "\n";
    for (const auto& r : cat.records) {
        out << to_string(r.signature) << '\t';
        for (std::size_t i = 0; i < r.motif_counts.size(); ++i)
            out << (i ? "," : "") << r.motif_counts[i].first << ':' << r.motif_counts[i].second;
        out << '\t' << r.rotation << '\t' << r.report.largest_face << '\t'
            << to_string(r.report.face_gap) << '\t' << r.report.class_count << '\t'
            << (r.report.chiral ? 1 : 0) << '\t' << to_string(r.report.min_sparsity) << '\n';
    }
    return out.str();
}

std::string format_summary(const Catalog& cat) {
    std::ostringstream out;
    char buf[256];
    std::snprintf(buf, sizeof buf, "mode=%s size=%d a.f.=%s metamotif=%s\n",
                  to_string(cat.config.mode).c_str(), cat.config.size,
                  cat.config.almost_foldable ? "yes" : "no", cat.config.metamotif ? "yes" : "no");
    out << buf;
    std::snprintf(buf, sizeof buf, "%-12s %12llu  (%.2fs)\n", "backbones",
                  static_cast<unsigned long long>(cat.summary.backbones), cat.summary.times.backbone);
    out << buf;
    std::snprintf(buf, sizeof buf, "%-12s %12llu  (%.2fs fold)\n", "saturated",
                  static_cast<unsigned long long>(cat.summary.saturated), cat.summary.times.fold);
    out << buf;
    std::snprintf(buf, sizeof buf, "%-12s %12llu  (%.2fs dedup)\n", "unique maps",
                  static_cast<unsigned long long>(cat.summary.unique_maps), cat.summary.times.dedup);
    out << buf;
    std::snprintf(buf, sizeof buf, "%-12s %12zu  (%.2fs indices)\n", "records",
                  cat.records.size(), cat.summary.times.indices);
    out << buf;
    out << "complete     " << (cat.summary.complete ? "yes" : "no (budget)") << "\n";
    return out.str();
}

} // namespace cagegen
