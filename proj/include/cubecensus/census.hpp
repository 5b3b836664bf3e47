#ifndef CUBECENSUS_CENSUS_HPP
#define CUBECENSUS_CENSUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cubecensus/edgecolor.hpp"
#include "cubecensus/genreg.hpp"
#include "cubecensus/graph.hpp"
#include "cubecensus/similarity.hpp"

namespace cubecensus {

struct CensusError : std::runtime_error {
    enum class Kind {
        WrongReport,
        BadReport,
    };
    Kind kind;
    CensusError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

struct MemberReport {
    std::string graph6;
    std::optional<int> chromatic_index;
    std::optional<EdgeColoring> coloring; // witness when class 1
    std::optional<bool> hamiltonian;
    std::optional<std::vector<int>> cycle; // witness when hamiltonian
};

struct PairVerdict {
    int i = 0, j = 0; // member indices within the class
    SimilarityVerdict verdict;
};

struct ClassReport {
    std::vector<std::string> charpoly; // decimal coefficients, constant term first
    std::vector<MemberReport> members;
    std::vector<PairVerdict> similarity; // one verdict per member pair, size >= 2 classes
};

struct CensusReport {
    GenSpec spec;
    std::string source; // "generate" or "graph6:<digest>"
    long long total_graphs = 0;
    int pair_count = 0;
    int triple_count = 0;
    bool full_annotation = false;
    long long runtime_ms = 0;
    std::vector<ClassReport> classes;
    std::vector<int> differing_chromatic_index_classes;
};

enum class CensusSource { Generate, Graph6File };

struct CensusOptions {
    int jobs = 1;
    bool full_annotation = false;
    std::string input_path; // for CensusSource::Graph6File
    std::string cache_dir;  // empty disables caching
};

// The whole pipeline: generate or ingest, class by exact characteristic
// polynomial, annotate nontrivial classes with chromatic index and
// Hamiltonicity, and attach a similarity verdict to every cospectral pair.
// Reports are deterministic for any job count.
CensusReport run_census(const GenSpec& spec, CensusSource source, const CensusOptions& opts);

// Checks the order-16 connected cubic census against the distinguishing
// facts of its unique chromatic-index-differing pair: the factored
// characteristic polynomial, the triangle-replacement construction of the
// class-2 member, Hamiltonicity of the class-1 member only, and the
// irrational kernel norm ratio at eigenvalue 0. Role-symmetric.
bool verify_distinguished_pair(const CensusReport& report);

std::string report_to_json(const CensusReport& report, bool include_runtime = true);
CensusReport report_from_json(const std::string& text);
std::string report_to_csv(const CensusReport& report);

// Append-only on-disk report store keyed by census parameters and input
// digest. Corrupt or mismatched entries are ignored with a warning.
class ReportCache {
public:
    explicit ReportCache(std::string dir) : dir_(std::move(dir)) {}
    std::optional<CensusReport> get(const std::string& key) const;
    void put(const std::string& key, const CensusReport& report) const;

    static std::string census_key(const GenSpec& spec, const std::string& source,
                                  bool full_annotation);

private:
    std::string dir_;
};

uint64_t fnv1a64(const void* data, size_t len);
std::string file_digest(const std::string& path); // hex fnv-1a of the bytes

// GM positive-control corpus: switch every valid single-cell partition on a
// deterministic family of cubic and near-cubic bases, confirm exact
// cospectrality throughout, and check that the rational-similarity
// obstruction never fires on a switched pair.
struct GmCorpusStats {
    long long bases = 0;
    long long valid_partitions = 0;
    long long switched_pairs = 0;       // switch changed the labeled graph
    long long nonisomorphic_pairs = 0;
    long long obstruction_failures = 0; // must remain 0
};
GmCorpusStats gm_corpus_run(int max_order, int bases_per_order, int jobs);

} // namespace cubecensus

#endif
