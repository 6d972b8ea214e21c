#pragma once

#include "ktwist/invariants.hpp"
#include "ktwist/moves.hpp"
#include "ktwist/twist.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ktwist {

inline constexpr const char* kCensusSchema = "ktwist.census.v1";

struct InvariantDigest {
    std::string determinant;
    std::string homology;
    std::string jones;

    bool operator==(const InvariantDigest& other) const {
        return determinant == other.determinant && homology == other.homology && jones == other.jones;
    }
};

enum class CensusVerdict { CosmeticCandidate, DistinguishedBy, NugatoryCertified, Unknown };

const char* census_verdict_name(CensusVerdict v);

struct CensusRecord {
    std::string knot_id;
    TwistSite site;
    int n = 0;
    CensusVerdict verdict = CensusVerdict::Unknown;
    std::string distinguished_by;  // invariant name for DistinguishedBy
    std::string note;              // resource errors and similar
    InvariantDigest input, output;

    std::string json_line() const;
    static std::optional<CensusRecord> from_json_line(const std::string& line);
    std::string key() const;  // knot|site|n
};

struct RunConfig {
    int n_min = -2;  // inclusive; 0 always skipped
    int n_max = 2;
    int max_crossings = kDefaultCrossingLimit;
    SimplifyBudget budget;
    int threads = 1;

    void validate() const;
};

struct NamedDiagram {
    std::string id;
    PlanarDiagram diagram;
};

InvariantDigest invariant_digest(const PlanarDiagram& d, int max_crossings);

// Every (diagram, site, n) triple in deterministic order.  Per-record
// resource failures become Unknown verdicts, never aborting the run.
std::vector<CensusRecord> census(const std::vector<NamedDiagram>& diagrams, const RunConfig& cfg);

// Streaming variant: appends JSON lines to `out_path` as records finish and
// skips records already present (so an interrupted run resumes to a
// byte-identical report), then writes a CSV summary next to it.
std::vector<CensusRecord> census_to_file(const std::vector<NamedDiagram>& diagrams, const RunConfig& cfg,
                                         const std::string& out_path);

std::string census_csv(const std::vector<CensusRecord>& records);

// Table ingestion: DT codes, one knot per line ("4 6 2" or "4,6,2").
std::vector<NamedDiagram> read_dt_table(const std::string& path);
std::vector<NamedDiagram> read_diagram_file(const std::string& path);

struct ReportLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct Report {
    std::vector<ReportLine> lines;

    bool all_pass() const;
    std::string to_string() const;
};

// Runs the bundled example configurations: the cosmetic order-one twist on
// the unknot, the figure-eight mirror twists, the twist-knot family, the
// trivial band, and the companion-circle checks.
Report verify_examples(const SimplifyBudget& budget = {});

struct Banding {
    PlanarDiagram diagram;
    Band band;
};

// For each banding on a certified unknot: checks that a cosmetic surgery
// satisfies the order-one companion identity and attempts the
// companion-circle unlinking certificate.  Throws NotUnknot when an input
// diagram is not certified trivial.
Report theorem3_check(const std::vector<Banding>& bandings, const SimplifyBudget& budget = {});

// Seeded banding generator: scrambled unknots with random band sites.
std::vector<Banding> random_unknot_bandings(int count, std::uint64_t seed, int max_crossings = 10);

}  // namespace ktwist
