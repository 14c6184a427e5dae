// Batch front end: parse a motif-base file, run generate -> fold -> dedup ->
// score, filter, and persist the catalog.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "cagegen/base_io.hpp"
#include "cagegen/catalog.hpp"
#include "cagegen/errors.hpp"
#include "cagegen/metamotif.hpp"

int main(int argc, char** argv) {
    CLI::App app{"cagegen: exhaustive generation of molecular cage candidates from motif bases"};

    std::string base_file, out_file, mode_str = "path", min_sparsity_str;
    int size = 0, workers = 1;
    double budget = 300.0;
    bool almost_foldable = false, metamotif = false, summary = false;

    app.add_option("--base", base_file, "motif base file")->required()->check(CLI::ExistingFile);
    app.add_option("--size", size, "number of centers to generate")->required()
        ->check(CLI::PositiveNumber);
    app.add_option("--backbone", mode_str, "backbone mode: tree | path | cycle")
        ->check(CLI::IsMember({"tree", "path", "cycle"}));
    app.add_flag("--almost-foldable", almost_foldable, "prune to almost-foldable backbones");
    app.add_flag("--metamotif", metamotif,
                 "eliminate degree-2 motifs, generate over metamotifs, expand back");
    app.add_option("--min-sparsity", min_sparsity_str, "keep maps with min sparsity >= P/Q");
    app.add_option("--out", out_file, "catalog output file (stdout when absent)");
    app.add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--budget", budget, "wall-clock budget in seconds (partial catalog beyond)");
    app.add_flag("--summary", summary, "print per-stage counts and times");

    CLI11_PARSE(app, argc, argv);

    try {
        cagegen::RunConfig config;
        config.base_file = base_file;
        config.size = size;
        config.mode = *cagegen::backbone_mode_from_string(mode_str);
        config.almost_foldable = almost_foldable;
        config.metamotif = metamotif;
        if (!min_sparsity_str.empty())
            config.min_sparsity = cagegen::parse_rational(min_sparsity_str);
        config.workers = workers;
        config.budget_seconds = budget;

        cagegen::MotifBase base = cagegen::parse_base_file(base_file);
        cagegen::Catalog cat = cagegen::run(config, base);

        const std::string payload = cagegen::serialize_catalog(cat);
        if (out_file.empty()) {
            std::cout << payload;
        } else {
            std::ofstream out(out_file, std::ios::binary);
            if (!out) throw cagegen::Error("cannot write '" + out_file + "'");
            out << payload;
            if (metamotif) {
                auto elim = cagegen::eliminate_degree2(base);
                std::ofstream exp(out_file + ".expansion");
                exp << cagegen::serialize_expansion(elim.base, base, elim.expansion);
            }
        }
        if (summary) std::cerr << cagegen::format_summary(cat);
        return cat.summary.complete ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
