#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "cubecensus/census.hpp"
#include "cubecensus/canonical.hpp"
#include "cubecensus/charpoly.hpp"

using namespace cubecensus;

namespace {

struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const std::string& name) : path(std::filesystem::temp_directory_path() / name) {
        std::filesystem::remove_all(path);
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST_CASE("census of order 10: all classes are singletons") {
    CensusOptions opts;
    opts.jobs = 2;
    CensusReport r = run_census({10, 3, true}, CensusSource::Generate, opts);
    CHECK(r.total_graphs == 19);
    CHECK(r.pair_count == 0);
    CHECK(r.triple_count == 0);
    CHECK(r.classes.size() == 19);
    CHECK(r.differing_chromatic_index_classes.empty());
    long long members = 0;
    for (const auto& c : r.classes) members += c.members.size();
    CHECK(members == r.total_graphs);
    // singleton classes carry no annotations unless asked
    for (const auto& c : r.classes) CHECK(!c.members[0].chromatic_index.has_value());

    opts.full_annotation = true;
    CensusReport full = run_census({10, 3, true}, CensusSource::Generate, opts);
    for (const auto& c : full.classes) {
        REQUIRE(c.members[0].chromatic_index.has_value());
        CHECK((*c.members[0].chromatic_index == 3 || *c.members[0].chromatic_index == 4));
        REQUIRE(c.members[0].hamiltonian.has_value());
    }
}

TEST_CASE("census reports are byte-identical across worker counts") {
    std::string baseline;
    for (int jobs : {1, 2, 4}) {
        CensusOptions opts;
        opts.jobs = jobs;
        CensusReport r = run_census({12, 3, true}, CensusSource::Generate, opts);
        std::string text = report_to_json(r, false);
        if (baseline.empty()) baseline = text;
        CHECK(text == baseline);
    }
}

TEST_CASE("json round trip preserves the report") {
    CensusOptions opts;
    opts.jobs = 2;
    opts.full_annotation = true;
    CensusReport r = run_census({8, 3, true}, CensusSource::Generate, opts);
    CensusReport back = report_from_json(report_to_json(r));
    CHECK(report_to_json(back) == report_to_json(r));
}

TEST_CASE("csv has one row per member") {
    CensusOptions opts;
    opts.jobs = 1;
    CensusReport r = run_census({8, 3, true}, CensusSource::Generate, opts);
    std::string csv = report_to_csv(r);
    long long rows = std::count(csv.begin(), csv.end(), '\n') - 1; // minus header
    CHECK(rows == r.total_graphs);
}

TEST_CASE("file ingestion: duplicates and relabelings collapse") {
    TempDir tmp("cubecensus_test_ingest");
    std::string path = (tmp.path / "input.g6").string();
    {
        std::ofstream out(path);
        // K4 under two labelings plus an exact duplicate, and the 5-cycle
        out << ">>graph6<<C~\nC~\nC~\nDqK\n";
    }
    CensusOptions opts;
    opts.input_path = path;
    CensusReport r = run_census({}, CensusSource::Graph6File, opts);
    CHECK(r.total_graphs == 2);
    CHECK(r.source.substr(0, 7) == "graph6:");
    CHECK(r.spec.n == 0); // mixed orders: no census parameters recorded

    // homogeneous file: parameters recovered
    std::string path2 = (tmp.path / "cubic8.g6").string();
    {
        CensusOptions gen_opts;
        CensusReport base = run_census({8, 3, true}, CensusSource::Generate, gen_opts);
        std::ofstream out(path2);
        for (const auto& c : base.classes)
            for (const auto& m : c.members) out << m.graph6 << "\n";
    }
    CensusOptions opts2;
    opts2.input_path = path2;
    CensusReport r2 = run_census({}, CensusSource::Graph6File, opts2);
    CHECK(r2.spec.n == 8);
    CHECK(r2.spec.k == 3);
    CHECK(r2.spec.connected_only);
    CHECK(r2.total_graphs == 5);
}

TEST_CASE("the star and the cycle-plus-vertex form a reportable cospectral pair") {
    TempDir tmp("cubecensus_test_pair");
    std::string path = (tmp.path / "pair.g6").string();
    {
        Graph star = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
        Graph c4k1 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
        std::ofstream out(path);
        out << to_graph6(star) << "\n" << to_graph6(c4k1) << "\n";
    }
    CensusOptions opts;
    opts.input_path = path;
    CensusReport r = run_census({}, CensusSource::Graph6File, opts);
    CHECK(r.total_graphs == 2);
    CHECK(r.pair_count == 1);
    REQUIRE(r.classes.size() == 1);
    REQUIRE(r.classes[0].similarity.size() == 1);
    const SimilarityVerdict& v = r.classes[0].similarity[0].verdict;
    // norm ratio sqrt(2) at the simple eigenvalue -2 blocks any rational
    // orthogonal similarity between these two
    CHECK(v.kind == SimilarityVerdict::Kind::NoRationalSimilarity);
    CHECK(v.lambda == -2);
    CHECK(v.ratio_sq_num == BigInt(2));
    CHECK(v.ratio_sq_den == BigInt(1));
    // the star is not regular: no chromatic annotation, but it is connected
    int annotated = 0, ham = 0;
    for (const auto& m : r.classes[0].members) {
        if (m.chromatic_index) ++annotated;
        if (m.hamiltonian) ++ham;
    }
    CHECK(annotated == 0);
    CHECK(ham == 1); // only the star is connected; the cycle+K1 is not
    CHECK(r.differing_chromatic_index_classes.empty());
}

TEST_CASE("report cache: hit, miss, corruption") {
    TempDir tmp("cubecensus_test_cache");
    CensusOptions opts;
    opts.jobs = 2;
    opts.cache_dir = (tmp.path / "cache").string();

    CensusReport fresh = run_census({10, 3, true}, CensusSource::Generate, opts);
    // second run hits the cache and returns byte-identical content
    CensusReport cached = run_census({10, 3, true}, CensusSource::Generate, opts);
    CHECK(report_to_json(cached) == report_to_json(fresh));

    // recompute without cache and compare (stable serialization)
    CensusOptions no_cache;
    no_cache.jobs = 1;
    CensusReport recomputed = run_census({10, 3, true}, CensusSource::Generate, no_cache);
    CHECK(report_to_json(recomputed, false) == report_to_json(fresh, false));

    ReportCache cache(opts.cache_dir);
    CHECK(!cache.get("no-such-key").has_value());

    // corrupt every stored entry; the cache must shrug it off
    for (const auto& entry : std::filesystem::directory_iterator(opts.cache_dir)) {
        std::ofstream out(entry.path());
        out << "{ not json";
    }
    CensusReport survived = run_census({10, 3, true}, CensusSource::Generate, opts);
    CHECK(report_to_json(survived, false) == report_to_json(fresh, false));
}

TEST_CASE("witnesses embedded in a report re-validate against their graphs") {
    CensusOptions opts;
    opts.jobs = 2;
    CensusReport r = run_census({14, 3, true}, CensusSource::Generate, opts);
    CensusReport parsed = report_from_json(report_to_json(r));
    int colorings = 0, cycles = 0;
    for (const auto& cls : parsed.classes) {
        for (const auto& m : cls.members) {
            Graph g = parse_graph6(m.graph6);
            if (m.coloring) {
                ++colorings;
                REQUIRE(m.coloring->assignment.size() == static_cast<size_t>(g.edge_count()));
                for (size_t a = 0; a < m.coloring->assignment.size(); ++a) {
                    auto [e1, c1] = m.coloring->assignment[a];
                    CHECK(g.adjacent(e1.first, e1.second));
                    for (size_t b = a + 1; b < m.coloring->assignment.size(); ++b) {
                        auto [e2, c2] = m.coloring->assignment[b];
                        bool share = e1.first == e2.first || e1.first == e2.second ||
                                     e1.second == e2.first || e1.second == e2.second;
                        if (share) CHECK(c1 != c2);
                    }
                }
            }
            if (m.cycle) {
                ++cycles;
                REQUIRE(m.cycle->size() == static_cast<size_t>(g.order()));
                uint32_t seen = 0;
                for (int v : *m.cycle) seen |= 1u << v;
                CHECK(__builtin_popcount(seen) == g.order());
                for (size_t i = 0; i + 1 < m.cycle->size(); ++i)
                    CHECK(g.adjacent((*m.cycle)[i], (*m.cycle)[i + 1]));
                CHECK(g.adjacent(m.cycle->back(), m.cycle->front()));
            }
        }
    }
    CHECK(colorings == 6); // all six pair members are 3-edge-colorable
    CHECK(cycles > 0);
}

TEST_CASE("verify_distinguished_pair rejects reports of the wrong shape") {
    CensusOptions opts;
    CensusReport r10 = run_census({10, 3, true}, CensusSource::Generate, opts);
    CHECK_THROWS_AS(verify_distinguished_pair(r10), CensusError);
}

TEST_CASE("order-20 graphs enter through the file path") {
    TempDir tmp("cubecensus_test_order20");
    std::string path = (tmp.path / "c20.g6").string();
    {
        // cubic circulant: 20-cycle plus the antipodal perfect matching
        GraphBuilder b(20);
        for (int i = 0; i < 20; ++i) b.add_edge(i, (i + 1) % 20);
        for (int i = 0; i < 10; ++i) b.add_edge(i, i + 10);
        std::ofstream out(path);
        out << to_graph6(b.build()) << "\n";
    }
    CensusOptions opts;
    opts.input_path = path;
    opts.full_annotation = true;
    CensusReport r = run_census({}, CensusSource::Graph6File, opts);
    CHECK(r.total_graphs == 1);
    CHECK(r.spec.n == 20);
    CHECK(r.spec.k == 3);
    CHECK(r.spec.connected_only);
    REQUIRE(r.classes.size() == 1);
    CHECK(r.classes[0].members[0].chromatic_index == 3);
    CHECK(r.classes[0].members[0].hamiltonian == true);
}

TEST_CASE("switching corpus control at small orders") {
    GmCorpusStats stats = gm_corpus_run(8, 8, 2);
    CHECK(stats.bases > 0);
    CHECK(stats.valid_partitions > 0);
    CHECK(stats.switched_pairs > 0);
    CHECK(stats.obstruction_failures == 0);
}
