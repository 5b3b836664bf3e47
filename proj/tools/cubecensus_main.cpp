// cubecensus: exact spectral census of small regular graphs.
//
//   cubecensus census --order 16            full census with annotations
//   cubecensus generate --order 12          dump graph6, one per line
//   cubecensus verify-pair report.json      check the distinguished pair
//   cubecensus gm-corpus --max-order 12     switching positive controls
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "cubecensus/census.hpp"
#include "cubecensus/genreg.hpp"

using namespace cubecensus;

namespace {

int default_jobs() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw GenregError(GenregError::Kind::FileError, "cannot write: " + path);
    out << text;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectral census of small regular graphs"};
    app.require_subcommand(1);

    // census
    auto* census = app.add_subcommand("census", "generate or ingest graphs, class by spectrum, annotate");
    int order = 0, degree = 3, jobs = default_jobs();
    bool all_graphs = false, full_annotation = false, stable_output = false;
    std::string input, format = "json", cache_dir, output;
    census->add_option("--order", order, "number of vertices (generation source)");
    census->add_option("--degree", degree, "regularity degree")->capture_default_str();
    bool connected_flag = false;
    auto* all_opt = census->add_flag("--all", all_graphs, "include disconnected graphs");
    census->add_flag("--connected-only", connected_flag, "restrict to connected graphs (default)")
        ->excludes(all_opt);
    census->add_option("--input", input, "graph6 file to census instead of generating");
    census->add_option("--jobs", jobs, "worker threads")->capture_default_str();
    census->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    census->add_option("--cache-dir", cache_dir, "reuse and store reports here");
    census->add_flag("--full-annotation", full_annotation, "annotate every graph, not only cospectral mates");
    census->add_option("--output", output, "output path (default stdout)");
    census->add_flag("--stable-output", stable_output, "zero out the runtime field for byte comparisons");

    // generate
    auto* gen = app.add_subcommand("generate", "dump the isomorph-free graph stream as graph6");
    int gorder = 0, gdegree = 3;
    bool gall = false;
    std::string goutput;
    gen->add_option("--order", gorder, "number of vertices")->required();
    gen->add_option("--degree", gdegree, "regularity degree")->capture_default_str();
    gen->add_flag("--all", gall, "include disconnected graphs");
    gen->add_option("--output", goutput, "output path (default stdout)");

    // verify-pair
    auto* verify = app.add_subcommand("verify-pair", "verify the order-16 census's differing pair");
    std::string report_path;
    verify->add_option("report", report_path, "census report (json)")->required();

    // gm-corpus
    auto* gm = app.add_subcommand("gm-corpus", "build switching controls and check the obstruction never fires");
    int max_order = 12, bases_per_order = 24, gm_jobs = default_jobs();
    long long min_pairs = 100;
    gm->add_option("--max-order", max_order, "largest base order")->capture_default_str();
    gm->add_option("--bases-per-order", bases_per_order, "bases taken per order")->capture_default_str();
    gm->add_option("--min-pairs", min_pairs, "required switched pairs")->capture_default_str();
    gm->add_option("--jobs", gm_jobs, "worker threads")->capture_default_str();

    try {
        app.parse(argc, argv);

        if (census->parsed()) {
            CensusOptions opts;
            opts.jobs = jobs;
            opts.full_annotation = full_annotation;
            opts.input_path = input;
            opts.cache_dir = cache_dir;
            CensusSource source = input.empty() ? CensusSource::Generate : CensusSource::Graph6File;
            if (source == CensusSource::Generate && order == 0)
                throw CLI::ValidationError("census", "--order is required without --input");
            GenSpec spec{order, degree, !all_graphs};
            CensusReport report = run_census(spec, source, opts);
            write_output(output, format == "json" ? report_to_json(report, !stable_output)
                                                  : report_to_csv(report));
            return 0;
        }
        if (gen->parsed()) {
            auto graphs = generate(GenSpec{gorder, gdegree, !gall}, default_jobs());
            std::string text;
            for (const auto& g : graphs) text += to_graph6(g) + "\n";
            write_output(goutput, text);
            return 0;
        }
        if (verify->parsed()) {
            std::ifstream in(report_path);
            if (!in) throw GenregError(GenregError::Kind::FileError, "cannot open: " + report_path);
            std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
            bool ok = verify_distinguished_pair(report_from_json(text));
            std::cout << (ok ? "PASS" : "FAIL")
                      << ": distinguished pair verification on " << report_path << "\n";
            return ok ? 0 : 1;
        }
        if (gm->parsed()) {
            GmCorpusStats stats = gm_corpus_run(max_order, bases_per_order, gm_jobs);
            std::cout << "bases: " << stats.bases << "\n"
                      << "valid partitions: " << stats.valid_partitions << "\n"
                      << "switched cospectral pairs: " << stats.switched_pairs << "\n"
                      << "nonisomorphic pairs: " << stats.nonisomorphic_pairs << "\n"
                      << "obstruction failures: " << stats.obstruction_failures << "\n";
            bool ok = stats.obstruction_failures == 0 && stats.switched_pairs >= min_pairs;
            std::cout << (ok ? "PASS" : "FAIL") << ": switching corpus control\n";
            return ok ? 0 : 1;
        }
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
