#include "ktwist/census.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace ktwist {

using nlohmann::json;

const char* census_verdict_name(CensusVerdict v) {
    switch (v) {
        case CensusVerdict::CosmeticCandidate: return "CosmeticCandidate";
        case CensusVerdict::DistinguishedBy: return "DistinguishedBy";
        case CensusVerdict::NugatoryCertified: return "NugatoryCertified";
        case CensusVerdict::Unknown: return "Unknown";
    }
    return "?";
}

namespace {

CensusVerdict verdict_from_name(const std::string& name) {
    if (name == "CosmeticCandidate") return CensusVerdict::CosmeticCandidate;
    if (name == "DistinguishedBy") return CensusVerdict::DistinguishedBy;
    if (name == "NugatoryCertified") return CensusVerdict::NugatoryCertified;
    return CensusVerdict::Unknown;
}

json digest_json(const InvariantDigest& d) {
    return json{{"determinant", d.determinant}, {"homology", d.homology}, {"jones", d.jones}};
}

InvariantDigest digest_from_json(const json& j) {
    InvariantDigest d;
    d.determinant = j.value("determinant", "");
    d.homology = j.value("homology", "");
    d.jones = j.value("jones", "");
    return d;
}

}  // namespace

std::string CensusRecord::json_line() const {
    json j;
    j["schema"] = kCensusSchema;
    j["knot"] = knot_id;
    j["site"] = {{"arc_a", site.arc_a}, {"arc_b", site.arc_b}, {"face", site.face}};
    j["n"] = n;
    j["verdict"] = census_verdict_name(verdict);
    if (!distinguished_by.empty()) j["distinguished_by"] = distinguished_by;
    if (!note.empty()) j["note"] = note;
    j["input"] = digest_json(input);
    j["output"] = digest_json(output);
    return j.dump();
}

std::optional<CensusRecord> CensusRecord::from_json_line(const std::string& line) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;
    if (j.value("schema", "") != kCensusSchema) return std::nullopt;
    CensusRecord r;
    r.knot_id = j.value("knot", "");
    if (!j.contains("site") || !j.contains("n") || !j.contains("verdict")) return std::nullopt;
    r.site.arc_a = j["site"].value("arc_a", 0);
    r.site.arc_b = j["site"].value("arc_b", 0);
    r.site.face = j["site"].value("face", -1);
    r.n = j["n"].get<int>();
    r.verdict = verdict_from_name(j["verdict"].get<std::string>());
    r.distinguished_by = j.value("distinguished_by", "");
    r.note = j.value("note", "");
    if (j.contains("input")) r.input = digest_from_json(j["input"]);
    if (j.contains("output")) r.output = digest_from_json(j["output"]);
    return r;
}

std::string CensusRecord::key() const {
    std::ostringstream out;
    out << knot_id << "|" << site.arc_a << "," << site.arc_b << "," << site.face << "|" << n;
    return out.str();
}

void RunConfig::validate() const {
    if (n_min > n_max) throw Error(ErrorCode::MalformedCode, "empty twist range");
    if (n_min == 0 && n_max == 0) throw Error(ErrorCode::MalformedCode, "twist range must exclude 0 only");
    if (max_crossings <= 0 || threads <= 0) throw Error(ErrorCode::MalformedCode, "limits must be positive");
}

InvariantDigest invariant_digest(const PlanarDiagram& d, int max_crossings) {
    InvariantDigest out;
    out.determinant = determinant(d).str();
    out.homology = branched_cover_homology(d).to_string();
    out.jones = jones(d, max_crossings).to_string("t");
    return out;
}

namespace {

CensusRecord make_record(const std::string& id, const PlanarDiagram& d, const InvariantDigest& input,
                         const TwistSite& site, int n, const RunConfig& cfg) {
    CensusRecord r;
    r.knot_id = id;
    r.site = site;
    r.n = n;
    r.input = input;
    try {
        PlanarDiagram out = two_strand_twist(d, site, n);
        r.output = invariant_digest(out, cfg.max_crossings);
        if (nugatory_kink_certificate(d, site)) {
            r.verdict = CensusVerdict::NugatoryCertified;
        } else if (r.input == r.output) {
            r.verdict = CensusVerdict::CosmeticCandidate;
        } else {
            r.verdict = CensusVerdict::DistinguishedBy;
            if (r.input.determinant != r.output.determinant)
                r.distinguished_by = "determinant";
            else if (r.input.homology != r.output.homology)
                r.distinguished_by = "homology";
            else
                r.distinguished_by = "jones";
        }
    } catch (const Error& e) {
        r.verdict = CensusVerdict::Unknown;
        r.note = std::string(error_code_name(e.code())) + ": " + e.what();
    }
    return r;
}

struct Task {
    std::string id;
    const PlanarDiagram* diagram;
    const InvariantDigest* input;
    TwistSite site;
    int n;
};

}  // namespace

std::vector<CensusRecord> census(const std::vector<NamedDiagram>& diagrams, const RunConfig& cfg) {
    cfg.validate();
    std::vector<InvariantDigest> inputs;
    inputs.reserve(diagrams.size());
    for (const auto& nd : diagrams) inputs.push_back(invariant_digest(nd.diagram, cfg.max_crossings));

    std::vector<Task> tasks;
    for (size_t i = 0; i < diagrams.size(); ++i)
        for (const TwistSite& site : find_twist_sites(diagrams[i].diagram))
            for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
                if (n == 0) continue;
                tasks.push_back({diagrams[i].id, &diagrams[i].diagram, &inputs[i], site, n});
            }

    std::vector<CensusRecord> records(tasks.size());
    if (cfg.threads <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i)
            records[i] = make_record(tasks[i].id, *tasks[i].diagram, *tasks[i].input, tasks[i].site,
                                     tasks[i].n, cfg);
    } else {
        std::mutex mu;
        size_t next = 0;
        auto worker = [&]() {
            while (true) {
                size_t i;
                {
                    std::lock_guard<std::mutex> lock(mu);
                    if (next >= tasks.size()) return;
                    i = next++;
                }
                records[i] = make_record(tasks[i].id, *tasks[i].diagram, *tasks[i].input, tasks[i].site,
                                         tasks[i].n, cfg);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < cfg.threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return records;
}

std::vector<CensusRecord> census_to_file(const std::vector<NamedDiagram>& diagrams, const RunConfig& cfg,
                                         const std::string& out_path) {
    cfg.validate();
    // Collect completed records from a previous (possibly interrupted) run.
    std::map<std::string, CensusRecord> done;
    if (std::filesystem::exists(out_path)) {
        std::ifstream in(out_path);
        std::string line;
        while (std::getline(in, line)) {
            if (auto r = CensusRecord::from_json_line(line)) done[r->key()] = *r;
        }
    }

    std::vector<InvariantDigest> inputs;
    inputs.reserve(diagrams.size());
    for (const auto& nd : diagrams) inputs.push_back(invariant_digest(nd.diagram, cfg.max_crossings));

    std::vector<CensusRecord> records;
    std::ofstream out(out_path, std::ios::trunc);
    for (size_t i = 0; i < diagrams.size(); ++i)
        for (const TwistSite& site : find_twist_sites(diagrams[i].diagram))
            for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
                if (n == 0) continue;
                CensusRecord probe;
                probe.knot_id = diagrams[i].id;
                probe.site = site;
                probe.n = n;
                auto it = done.find(probe.key());
                CensusRecord r = (it != done.end())
                                     ? it->second
                                     : make_record(diagrams[i].id, diagrams[i].diagram, inputs[i], site, n, cfg);
                out << r.json_line() << "\n";
                out.flush();
                records.push_back(std::move(r));
            }
    out.close();

    std::ofstream csv(out_path + ".csv", std::ios::trunc);
    csv << census_csv(records);
    return records;
}

std::string census_csv(const std::vector<CensusRecord>& records) {
    std::ostringstream out;
    out << "knot,site,n,verdict,distinguished_by,input_determinant,output_determinant\n";
    for (const auto& r : records)
        out << r.knot_id << "," << r.site.arc_a << ":" << r.site.arc_b << ":" << r.site.face << "," << r.n
            << "," << census_verdict_name(r.verdict) << "," << r.distinguished_by << "," << r.input.determinant
            << "," << r.output.determinant << "\n";
    return out.str();
}

std::vector<NamedDiagram> read_dt_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::FixtureMissing, "cannot open " + path);
    std::vector<NamedDiagram> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::vector<long> code;
        std::string tok;
        std::istringstream ls(line);
        while (std::getline(ls, tok, ',')) {
            std::istringstream ts(tok);
            long v;
            while (ts >> v) code.push_back(v);
        }
        if (code.empty()) continue;
        std::ostringstream id;
        id << "dt(";
        for (size_t i = 0; i < code.size(); ++i) id << (i ? "," : "") << code[i];
        id << ")";
        out.push_back({id.str(), parse_dt(code)});
    }
    return out;
}

std::vector<NamedDiagram> read_diagram_file(const std::string& path) {
    if (path.size() > 3 && path.substr(path.size() - 3) == ".dt") return read_dt_table(path);
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::FixtureMissing, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return {{std::filesystem::path(path).filename().string(), parse_pd(buf.str())}};
}

bool Report::all_pass() const {
    for (const auto& l : lines)
        if (!l.pass) return false;
    return true;
}

std::string Report::to_string() const {
    std::ostringstream out;
    for (const auto& l : lines) {
        out << (l.pass ? "PASS" : "FAIL") << "  " << l.name;
        if (!l.detail.empty()) out << "  (" << l.detail << ")";
        out << "\n";
    }
    return out.str();
}

Report verify_examples(const SimplifyBudget& budget) {
    Report rep;
    auto add = [&](const std::string& name, bool pass, const std::string& detail = "") {
        rep.lines.push_back({name, pass, detail});
    };

    MarkedDiagram fx = unknot_twist_example();
    LaurentPoly fig8_jones = jones(twist_knot(2));

    {
        PlanarDiagram minus1 = two_strand_twist(fx.diagram, fx.site, -1);
        add("unknot example: -1-twist is again trivial", is_unknot(minus1, budget) == Verdict3::Yes);
        add("unknot example: +2-twist has the figure-eight Jones polynomial",
            jones(two_strand_twist(fx.diagram, fx.site, 2)) == fig8_jones);
        add("unknot example: -3-twist has the mirrored figure-eight Jones polynomial",
            jones(two_strand_twist(fx.diagram, fx.site, -3)) == fig8_jones.inverted_variable());
        add("unknot example: the twist is not nugatory (twists change the determinant)",
            determinant(two_strand_twist(fx.diagram, fx.site, 2)) == 5);
    }
    {
        MarkedDiagram f8 = figure_eight_twist_example();
        PlanarDiagram out = two_strand_twist(f8.diagram, f8.site, -5);
        add("figure-eight example: -5-twist keeps the Jones polynomial", jones(out) == jones(f8.diagram));
    }
    for (int k = 1; k <= 5; ++k) {
        FamilyCase fc = twist_family_case(k);
        PlanarDiagram out = two_strand_twist(fc.diagram, fc.site, fc.n);
        std::ostringstream name;
        name << "twist knot k=" << k << ": " << fc.n << "-twist mirrors the knot";
        add(name.str(), jones(out) == jones(fc.diagram).inverted_variable());
    }
    {
        BandExample be = trivial_band_example();
        PlanarDiagram out = band_surgery(be.diagram, be.band);
        bool same = determinant(out) == determinant(be.diagram) &&
                    branched_cover_homology(out) == branched_cover_homology(be.diagram) &&
                    jones(out) == jones(be.diagram);
        add("trivial band surgery fixes all invariants", same);
        TwistSite site = band_to_site(be.diagram, be.band);
        add("trivial band is certified nugatory", nugatory_kink_certificate(be.diagram, site));
    }
    {
        add("companion identity: +1 along the alternative circle matches the -1-twist",
            jones(companion_twist(fx.diagram, fx.site, 1)) == jones(two_strand_twist(fx.diagram, fx.site, -1)));
        add("companion identity: -1 along the alternative circle matches the +1-twist",
            jones(companion_twist(fx.diagram, fx.site, -1)) == jones(two_strand_twist(fx.diagram, fx.site, 1)));
        SimplifyBudget cert = budget;
        cert.max_r3_moves = std::max(cert.max_r3_moves, 20000);
        cert.max_crossings_explored = encircle_companion(fx.diagram, fx.site).crossing_count() + 4;
        add("companion circle unlinks from the example unknot",
            certify_unlink(encircle_companion(fx.diagram, fx.site), cert));
    }
    return rep;
}

Report theorem3_check(const std::vector<Banding>& bandings, const SimplifyBudget& budget) {
    Report rep;
    int idx = 0;
    for (const auto& banding : bandings) {
        ++idx;
        std::ostringstream name;
        name << "banding " << idx;
        if (is_unknot(banding.diagram, budget) != Verdict3::Yes)
            throw Error(ErrorCode::NotUnknot, "input diagram is not certified trivial");
        TwistSite site;
        try {
            site = band_to_site(banding.diagram, banding.band);
        } catch (const Error& e) {
            rep.lines.push_back({name.str() + ": invalid band", false, e.what()});
            continue;
        }
        int sign = band_twist_sign(banding.band);
        PlanarDiagram out = band_surgery(banding.diagram, banding.band);
        Verdict3 trivial = is_unknot(out, budget);
        if (trivial != Verdict3::Yes) {
            rep.lines.push_back({name.str() + ": surgery not certified cosmetic", true,
                                 std::string("is_unknot=") + verdict3_name(trivial)});
            continue;
        }
        if (nugatory_kink_certificate(banding.diagram, site)) {
            rep.lines.push_back({name.str() + ": nugatory (certified)", true, ""});
            continue;
        }
        bool identity = jones(companion_twist(banding.diagram, site, -sign)) == jones(out);
        SimplifyBudget cert = budget;
        cert.max_r3_moves = std::max(cert.max_r3_moves, 20000);
        cert.max_crossings_explored = banding.diagram.crossing_count() + 8;
        bool unlinked = certify_unlink(encircle_companion(banding.diagram, site), cert);
        std::ostringstream detail;
        detail << "companion identity " << (identity ? "holds" : "FAILS") << "; companion circle "
               << (unlinked ? "Certified" : "Unverified");
        rep.lines.push_back({name.str() + ": cosmetic banding is weakly nugatory", identity, detail.str()});
    }
    return rep;
}

std::vector<Banding> random_unknot_bandings(int count, std::uint64_t seed, int max_crossings) {
    std::vector<Banding> out;
    std::uint64_t s = seed;
    int attempts = 0;
    while (static_cast<int>(out.size()) < count && attempts < count * 50) {
        ++attempts;
        ++s;
        PlanarDiagram d = scramble(PlanarDiagram::unknot(), 6, s, max_crossings);
        auto sites = find_twist_sites(d);
        if (sites.empty()) continue;
        const TwistSite& site = sites[static_cast<size_t>(s % sites.size())];
        Band band{site.arc_a, site.arc_b, site.face, static_cast<int>(s % 2)};
        out.push_back({std::move(d), band});
    }
    return out;
}

}  // namespace ktwist
