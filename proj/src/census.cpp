#include "cubecensus/census.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cubecensus/canonical.hpp"
#include "cubecensus/charpoly.hpp"
#include "cubecensus/parallel.hpp"

namespace cubecensus {

using ordered_json = nlohmann::ordered_json;

uint64_t fnv1a64(const void* data, size_t len) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    uint64_t h = 1469598103934665603ull;
    for (size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ull;
    }
    return h;
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw GenregError(GenregError::Kind::FileError, "cannot open: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string bytes = buf.str();
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes.data(), bytes.size())));
    return hex;
}

namespace {

bool annotatable_chromatic(const Graph& g) {
    int k = g.degree(0);
    return k >= 1 && g.is_regular(k);
}

bool annotatable_hamiltonian(const Graph& g) { return g.order() >= 3 && g.is_connected(); }

void annotate_member(const Graph& g, MemberReport& m) {
    if (annotatable_chromatic(g)) {
        auto res = chromatic_index(g);
        m.chromatic_index = res.value;
        if (res.witness) m.coloring = std::move(res.witness);
    }
    if (annotatable_hamiltonian(g)) {
        auto res = is_hamiltonian(g);
        m.hamiltonian = res.hamiltonian;
        if (res.cycle) m.cycle = std::move(res.cycle);
    }
}

} // namespace

CensusReport run_census(const GenSpec& spec, CensusSource source, const CensusOptions& opts) {
    auto t0 = std::chrono::steady_clock::now();

    CensusReport report;
    report.full_annotation = opts.full_annotation;

    std::optional<ReportCache> cache;
    if (!opts.cache_dir.empty()) cache.emplace(opts.cache_dir);

    std::vector<Graph> graphs;
    std::string key;
    if (source == CensusSource::Generate) {
        report.spec = spec;
        report.source = "generate";
        if (cache) {
            key = ReportCache::census_key(report.spec, report.source, report.full_annotation);
            if (auto hit = cache->get(key)) return *hit;
        }
        graphs = generate(spec, opts.jobs);
    } else {
        report.source = "graph6:" + file_digest(opts.input_path);
        std::vector<Graph> raw = read_graph6_file(opts.input_path);
        std::vector<Graph> canon(raw.begin(), raw.end());
        parallel_for(raw.size(), opts.jobs,
                     [&](size_t i) { canon[i] = canonical_form(raw[i]).graph; });
        std::sort(canon.begin(), canon.end(),
                  [](const Graph& a, const Graph& b) { return to_graph6(a) < to_graph6(b); });
        canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
        graphs = std::move(canon);
        // a homogeneous file documents its own census parameters
        report.spec = GenSpec{0, 0, false};
        if (!graphs.empty()) {
            int n = graphs[0].order(), k = graphs[0].degree(0);
            bool regular = true, connected = true;
            for (const auto& g : graphs) {
                regular &= g.order() == n && g.is_regular(k);
                connected &= g.is_connected();
            }
            if (regular) report.spec = GenSpec{n, k, connected};
        }
        if (cache) {
            key = ReportCache::census_key(report.spec, report.source, report.full_annotation);
            if (auto hit = cache->get(key)) return *hit;
        }
    }

    report.total_graphs = static_cast<long long>(graphs.size());

    auto classes = cospectral_classes(graphs, opts.jobs);

    // flatten the members that need annotation
    std::vector<Graph> flat;
    std::vector<std::pair<size_t, size_t>> where; // (class, member)
    report.classes.resize(classes.size());
    for (size_t c = 0; c < classes.size(); ++c) {
        ClassReport& cls = report.classes[c];
        for (const auto& coeff : classes[c].key.coeffs) cls.charpoly.push_back(coeff.to_string());
        cls.members.resize(classes[c].members.size());
        for (size_t m = 0; m < classes[c].members.size(); ++m) {
            cls.members[m].graph6 = to_graph6(classes[c].members[m]);
            if (classes[c].members.size() >= 2 || opts.full_annotation) {
                flat.push_back(classes[c].members[m]);
                where.emplace_back(c, m);
            }
        }
        if (classes[c].members.size() == 2) ++report.pair_count;
        if (classes[c].members.size() == 3) ++report.triple_count;
    }
    parallel_for(flat.size(), opts.jobs, [&](size_t i) {
        annotate_member(flat[i], report.classes[where[i].first].members[where[i].second]);
    });

    // similarity verdict for every cospectral pair
    std::vector<std::tuple<size_t, int, int>> pair_jobs;
    for (size_t c = 0; c < classes.size(); ++c) {
        int sz = static_cast<int>(classes[c].members.size());
        for (int i = 0; i < sz; ++i)
            for (int j = i + 1; j < sz; ++j) pair_jobs.emplace_back(c, i, j);
    }
    std::vector<PairVerdict> verdicts(pair_jobs.size());
    parallel_for(pair_jobs.size(), opts.jobs, [&](size_t t) {
        auto [c, i, j] = pair_jobs[t];
        verdicts[t] = PairVerdict{
            i, j, rational_similarity_obstruction(classes[c].members[i], classes[c].members[j])};
    });
    for (size_t t = 0; t < pair_jobs.size(); ++t)
        report.classes[std::get<0>(pair_jobs[t])].similarity.push_back(verdicts[t]);

    for (size_t c = 0; c < report.classes.size(); ++c) {
        const auto& members = report.classes[c].members;
        if (members.size() < 2) continue;
        int lo = 0, hi = 0;
        bool complete = true;
        for (const auto& m : members) {
            if (!m.chromatic_index) {
                complete = false;
                break;
            }
            int v = *m.chromatic_index;
            if (lo == 0 || v < lo) lo = v;
            if (v > hi) hi = v;
        }
        if (complete && lo != hi)
            report.differing_chromatic_index_classes.push_back(static_cast<int>(c));
    }

    report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    if (cache) cache->put(key, report);
    return report;
}

// ------------------------------------------------------------------ json --

namespace {

ordered_json verdict_to_json(const SimilarityVerdict& v) {
    ordered_json j;
    if (v.kind == SimilarityVerdict::Kind::NoRationalSimilarity) {
        j["verdict"] = "no_rational_similarity";
        j["lambda"] = v.lambda;
        j["ratio_sq"] = {v.ratio_sq_num.to_string(), v.ratio_sq_den.to_string()};
    } else {
        j["verdict"] = "inconclusive";
        j["reason"] = v.reason == SimilarityVerdict::Reason::AllRatiosRational
                          ? "all_ratios_rational"
                          : "no_common_simple_integral_eigenvalue";
    }
    return j;
}

SimilarityVerdict verdict_from_json(const ordered_json& j) {
    SimilarityVerdict v{SimilarityVerdict::Kind::Inconclusive,
                        SimilarityVerdict::Reason::None};
    if (j.at("verdict") == "no_rational_similarity") {
        v.kind = SimilarityVerdict::Kind::NoRationalSimilarity;
        v.lambda = j.at("lambda").get<long long>();
        v.ratio_sq_num = BigInt::from_string(j.at("ratio_sq")[0].get<std::string>());
        v.ratio_sq_den = BigInt::from_string(j.at("ratio_sq")[1].get<std::string>());
    } else {
        v.reason = j.at("reason") == "all_ratios_rational"
                       ? SimilarityVerdict::Reason::AllRatiosRational
                       : SimilarityVerdict::Reason::NoCommonSimpleIntegralEigenvalue;
    }
    return v;
}

} // namespace

std::string report_to_json(const CensusReport& report, bool include_runtime) {
    ordered_json j;
    j["schema"] = "cubecensus-report-v1";
    j["spec"] = {{"order", report.spec.n},
                 {"degree", report.spec.k},
                 {"connected_only", report.spec.connected_only}};
    j["source"] = report.source;
    j["total_graphs"] = report.total_graphs;
    j["pair_count"] = report.pair_count;
    j["triple_count"] = report.triple_count;
    j["full_annotation"] = report.full_annotation;
    j["runtime_ms"] = include_runtime ? report.runtime_ms : 0;
    j["classes"] = ordered_json::array();
    for (const auto& cls : report.classes) {
        ordered_json jc;
        jc["charpoly"] = cls.charpoly;
        jc["members"] = ordered_json::array();
        for (const auto& m : cls.members) {
            ordered_json jm;
            jm["graph6"] = m.graph6;
            if (m.chromatic_index) jm["chromatic_index"] = *m.chromatic_index;
            if (m.coloring) {
                ordered_json arr = ordered_json::array();
                for (const auto& [e, c] : m.coloring->assignment)
                    arr.push_back({e.first, e.second, c});
                jm["coloring"] = std::move(arr);
            }
            if (m.hamiltonian) jm["hamiltonian"] = *m.hamiltonian;
            if (m.cycle) jm["cycle"] = *m.cycle;
            jc["members"].push_back(std::move(jm));
        }
        if (!cls.similarity.empty()) {
            ordered_json arr = ordered_json::array();
            for (const auto& pv : cls.similarity) {
                ordered_json jp = verdict_to_json(pv.verdict);
                jp["i"] = pv.i;
                jp["j"] = pv.j;
                arr.push_back(std::move(jp));
            }
            jc["similarity"] = std::move(arr);
        }
        j["classes"].push_back(std::move(jc));
    }
    j["differing_chromatic_index_classes"] = report.differing_chromatic_index_classes;
    return j.dump(1) + "\n";
}

CensusReport report_from_json(const std::string& text) {
    ordered_json j = ordered_json::parse(text);
    if (j.at("schema") != "cubecensus-report-v1")
        throw CensusError(CensusError::Kind::BadReport, "unknown report schema");
    CensusReport r;
    r.spec.n = j.at("spec").at("order").get<int>();
    r.spec.k = j.at("spec").at("degree").get<int>();
    r.spec.connected_only = j.at("spec").at("connected_only").get<bool>();
    r.source = j.at("source").get<std::string>();
    r.total_graphs = j.at("total_graphs").get<long long>();
    r.pair_count = j.at("pair_count").get<int>();
    r.triple_count = j.at("triple_count").get<int>();
    r.full_annotation = j.at("full_annotation").get<bool>();
    r.runtime_ms = j.at("runtime_ms").get<long long>();
    for (const auto& jc : j.at("classes")) {
        ClassReport cls;
        for (const auto& s : jc.at("charpoly")) cls.charpoly.push_back(s.get<std::string>());
        for (const auto& jm : jc.at("members")) {
            MemberReport m;
            m.graph6 = jm.at("graph6").get<std::string>();
            if (jm.contains("chromatic_index")) m.chromatic_index = jm["chromatic_index"].get<int>();
            if (jm.contains("coloring")) {
                EdgeColoring w;
                for (const auto& t : jm["coloring"])
                    w.assignment.push_back({{t[0].get<int>(), t[1].get<int>()}, t[2].get<int>()});
                m.coloring = std::move(w);
            }
            if (jm.contains("hamiltonian")) m.hamiltonian = jm["hamiltonian"].get<bool>();
            if (jm.contains("cycle")) m.cycle = jm["cycle"].get<std::vector<int>>();
            cls.members.push_back(std::move(m));
        }
        if (jc.contains("similarity")) {
            for (const auto& jp : jc["similarity"]) {
                PairVerdict pv;
                pv.i = jp.at("i").get<int>();
                pv.j = jp.at("j").get<int>();
                pv.verdict = verdict_from_json(jp);
                cls.similarity.push_back(std::move(pv));
            }
        }
        r.classes.push_back(std::move(cls));
    }
    r.differing_chromatic_index_classes =
        j.at("differing_chromatic_index_classes").get<std::vector<int>>();
    return r;
}

std::string report_to_csv(const CensusReport& report) {
    std::ostringstream out;
    out << "class_index,class_size,member_index,graph6,chromatic_index,hamiltonian,charpoly\n";
    for (size_t c = 0; c < report.classes.size(); ++c) {
        const auto& cls = report.classes[c];
        std::string poly;
        for (size_t i = 0; i < cls.charpoly.size(); ++i) {
            if (i) poly += ' ';
            poly += cls.charpoly[i];
        }
        for (size_t m = 0; m < cls.members.size(); ++m) {
            const auto& mem = cls.members[m];
            out << c << ',' << cls.members.size() << ',' << m << ',' << mem.graph6 << ',';
            if (mem.chromatic_index) out << *mem.chromatic_index;
            out << ',';
            if (mem.hamiltonian) out << (*mem.hamiltonian ? "true" : "false");
            out << ',' << '"' << poly << '"' << '\n';
        }
    }
    return out.str();
}

// ----------------------------------------------------------------- cache --

std::string ReportCache::census_key(const GenSpec& spec, const std::string& source,
                                    bool full_annotation) {
    std::ostringstream key;
    key << "v1;n=" << spec.n << ";k=" << spec.k << ";connected=" << spec.connected_only
        << ";source=" << source << ";full=" << full_annotation;
    return key.str();
}

std::optional<CensusReport> ReportCache::get(const std::string& key) const {
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(key.data(), key.size())));
    std::filesystem::path path = std::filesystem::path(dir_) / (std::string(hex) + ".json");
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        ordered_json j = ordered_json::parse(in);
        if (j.at("key").get<std::string>() != key) {
            std::cerr << "cache: key mismatch in " << path.string() << ", ignoring\n";
            return std::nullopt;
        }
        return report_from_json(j.at("report").dump());
    } catch (const std::exception& e) {
        std::cerr << "cache: ignoring corrupt entry " << path.string() << ": " << e.what() << "\n";
        return std::nullopt;
    }
}

void ReportCache::put(const std::string& key, const CensusReport& report) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(key.data(), key.size())));
    std::filesystem::path path = std::filesystem::path(dir_) / (std::string(hex) + ".json");
    if (std::filesystem::exists(path)) return; // append-only
    ordered_json j;
    j["key"] = key;
    j["report"] = ordered_json::parse(report_to_json(report));
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << j.dump(1) << "\n";
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::cerr << "cache: failed to store " << path.string() << "\n";
}

// ---------------------------------------------------------- verification --

namespace {

// factored characteristic polynomial of the unique differing pair
Poly expected_pair_charpoly() {
    Poly acc = poly_from_ints({1});
    for (const Poly& f : {poly_from_ints({-3, 1}), poly_from_ints({0, 1}), poly_from_ints({2, 1}),
                          poly_from_ints({-2, 0, 1}), poly_from_ints({-3, -1, 1}),
                          poly_from_ints({-2, -4, 0, 1}), poly_from_ints({1, -4, 0, 1}),
                          poly_from_ints({-2, -2, 2, 1})})
        acc = poly_mul(acc, f);
    return acc;
}

} // namespace

bool verify_distinguished_pair(const CensusReport& report) {
    if (report.spec.n != 16 || report.spec.k != 3 || !report.spec.connected_only)
        throw CensusError(CensusError::Kind::WrongReport,
                          "expected the order-16 connected cubic census");

    if (report.differing_chromatic_index_classes.size() != 1) return false;
    int idx = report.differing_chromatic_index_classes[0];
    if (idx < 0 || idx >= static_cast<int>(report.classes.size())) return false;
    const ClassReport& cls = report.classes[idx];
    if (cls.members.size() != 2) return false;

    Graph a = parse_graph6(cls.members[0].graph6);
    Graph b = parse_graph6(cls.members[1].graph6);

    // recompute everything; the stored annotations are not trusted here
    int ca = chromatic_index(a).value;
    int cb = chromatic_index(b).value;
    if (std::min(ca, cb) != 3 || std::max(ca, cb) != 4) return false;
    const Graph& class1 = ca == 3 ? a : b; // 3-edge-colorable member
    const Graph& class2 = ca == 3 ? b : a;

    Poly expected = expected_pair_charpoly();
    if (poly_cmp(char_poly(a).coeffs, expected) != 0) return false;
    if (poly_cmp(char_poly(b).coeffs, expected) != 0) return false;
    std::vector<std::string> expected_str;
    for (const auto& c : expected) expected_str.push_back(c.to_string());
    if (cls.charpoly != expected_str) return false;

    if (!is_isomorphic(class2, triangle_replace(petersen(), 0b111))) return false;

    if (!is_hamiltonian(class1).hamiltonian) return false;
    if (is_hamiltonian(class2).hamiltonian) return false;

    PrimitiveIntVector xi = kernel_vector(class1, 0);
    PrimitiveIntVector eta = kernel_vector(class2, 0);
    if (xi.normsq != BigInt(8) || eta.normsq != BigInt(24)) return false;

    SimilarityVerdict v = rational_similarity_obstruction(class1, class2);
    return v.kind == SimilarityVerdict::Kind::NoRationalSimilarity && v.lambda == 0 &&
           v.ratio_sq_num == BigInt(3) && v.ratio_sq_den == BigInt(1);
}

// ------------------------------------------------------------- gm corpus --

GmCorpusStats gm_corpus_run(int max_order, int bases_per_order, int jobs) {
    GmCorpusStats stats;

    std::vector<Graph> bases;
    for (int n = 6; n <= max_order; n += 2) {
        auto gs = generate({n, 3, true}, jobs);
        int take = std::min<int>(bases_per_order, static_cast<int>(gs.size()));
        for (int i = 0; i < take; ++i) bases.push_back(gs[i]);
        // near-cubic variants: drop one edge, keep it connected
        for (int i = 0; i < take; i += 4) {
            GraphBuilder b(gs[i].order());
            auto es = gs[i].edges();
            for (size_t e = 1; e < es.size(); ++e) b.add_edge(es[e].first, es[e].second);
            Graph cut = b.build();
            if (cut.is_connected()) bases.push_back(cut);
        }
    }
    stats.bases = static_cast<long long>(bases.size());

    struct Found {
        Graph base, mate;
        Found(Graph b, Graph m) : base(std::move(b)), mate(std::move(m)) {}
    };
    std::vector<std::vector<Found>> found(bases.size());
    std::vector<std::array<long long, 2>> counts(bases.size(), {0, 0});
    parallel_for(bases.size(), jobs, [&](size_t bi) {
        const Graph& g = bases[bi];
        for (int cs : {2, 4, 6}) {
            int per_size = 0;
            for (const auto& p : gm_search(g, cs)) {
                ++counts[bi][0];
                if (per_size >= 4) continue; // cap the switch work per base
                Graph h = gm_switch(g, p);   // exact cospectrality checked inside
                if (h == g) continue;
                ++per_size;
                ++counts[bi][1];
                found[bi].emplace_back(g, h);
            }
        }
    });
    for (size_t bi = 0; bi < bases.size(); ++bi) {
        stats.valid_partitions += counts[bi][0];
        stats.switched_pairs += counts[bi][1];
    }

    std::vector<Found> pairs;
    for (auto& f : found)
        for (auto& x : f) pairs.push_back(std::move(x));
    std::vector<int> noniso(pairs.size(), 0), failures(pairs.size(), 0);
    parallel_for(pairs.size(), jobs, [&](size_t i) {
        if (!is_isomorphic(pairs[i].base, pairs[i].mate)) noniso[i] = 1;
        auto verdict = rational_similarity_obstruction(pairs[i].base, pairs[i].mate);
        if (verdict.kind == SimilarityVerdict::Kind::NoRationalSimilarity) failures[i] = 1;
    });
    for (size_t i = 0; i < pairs.size(); ++i) {
        stats.nonisomorphic_pairs += noniso[i];
        stats.obstruction_failures += failures[i];
    }
    return stats;
}

} // namespace cubecensus
