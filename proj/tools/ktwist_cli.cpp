#include "ktwist/census.hpp"
#include "ktwist/diagram.hpp"
#include "ktwist/invariants.hpp"
#include "ktwist/moves.hpp"
#include "ktwist/slopes.hpp"
#include "ktwist/twist.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace ktwist;

PlanarDiagram load_one(const std::string& path) {
    auto diagrams = read_diagram_file(path);
    if (diagrams.size() != 1)
        throw Error(ErrorCode::MalformedCode, "expected exactly one diagram in " + path);
    return diagrams.front().diagram;
}

TwistSite parse_site(const std::string& text) {
    int a = 0, b = 0, f = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> a >> c1 >> b >> c2 >> f) || c1 != ',' || c2 != ',')
        throw Error(ErrorCode::MalformedCode, "site must be given as arcA,arcB,faceIndex");
    return {a, b, f};
}

void write_or_print(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::trunc);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ktwist: exact knot-diagram computation around two-strand twists"};
    app.require_subcommand(1);

    std::string in_path, out_path, site_text;
    int n = 0;
    int budget_moves = 2000;
    int explore_cap = 0;
    int max_crossings = kDefaultCrossingLimit;

    auto add_common = [&](CLI::App* cmd, bool needs_in) {
        if (needs_in) cmd->add_option("--in", in_path, "input diagram (.pd text or .dt table)")->required();
        cmd->add_option("--out", out_path, "output path (defaults to stdout)");
        cmd->add_option("--budget", budget_moves, "simplification search budget (states explored)");
        cmd->add_option("--explore", explore_cap, "allow intermediate diagrams up to this many crossings");
        cmd->add_option("--max-crossings", max_crossings, "polynomial evaluation crossing limit");
    };

    auto* twist_cmd = app.add_subcommand("twist", "apply a two-strand twist to a diagram");
    add_common(twist_cmd, true);
    twist_cmd->add_option("--site", site_text, "twist site as arcA,arcB,faceIndex")->required();
    twist_cmd->add_option("--n", n, "twist amount (nonzero)")->required();

    auto* jones_cmd = app.add_subcommand("jones", "Jones polynomial of a knot diagram");
    add_common(jones_cmd, true);

    auto* det_cmd = app.add_subcommand("det", "knot determinant via the Goeritz matrix");
    add_common(det_cmd, true);

    auto* cover_cmd = app.add_subcommand("cover", "first homology of the branched double cover");
    add_common(cover_cmd, true);

    auto* sites_cmd = app.add_subcommand("sites", "list the two-strand twist sites of a diagram");
    add_common(sites_cmd, true);

    int slope_lo = -6, slope_hi = 6;
    auto* slopes_cmd = app.add_subcommand("slopes", "surgery-slope table for a twist range (CSV)");
    slopes_cmd->add_option("--from", slope_lo, "smallest twist");
    slopes_cmd->add_option("--to", slope_hi, "largest twist");
    slopes_cmd->add_option("--out", out_path, "output path (defaults to stdout)");

    int n_min = -2, n_max = 2, threads = 1;
    auto* census_cmd = app.add_subcommand("census", "invariant census over sites and twists");
    add_common(census_cmd, true);
    census_cmd->add_option("--n-min", n_min, "smallest twist (inclusive)");
    census_cmd->add_option("--n-max", n_max, "largest twist (inclusive)");
    census_cmd->add_option("--threads", threads, "worker threads (file output stays deterministic)");

    auto* verify_cmd = app.add_subcommand("verify-paper", "run the bundled example regressions");
    verify_cmd->add_option("--budget", budget_moves, "simplification search budget");

    int gen_count = 0;
    unsigned long long gen_seed = 1;
    std::string bandings_path;
    auto* thm_cmd = app.add_subcommand("theorem3-check", "banding consistency checks on unknots");
    thm_cmd->add_option("--generate", gen_count, "number of random bandings to generate");
    thm_cmd->add_option("--seed", gen_seed, "generator seed");
    thm_cmd->add_option("--in", bandings_path, "bandings file (JSON)");
    thm_cmd->add_option("--budget", budget_moves, "simplification search budget");

    CLI11_PARSE(app, argc, argv);

    try {
        SimplifyBudget budget;
        budget.max_r3_moves = budget_moves;
        budget.max_crossings_explored = explore_cap;

        if (twist_cmd->parsed()) {
            PlanarDiagram d = load_one(in_path);
            PlanarDiagram t = two_strand_twist(d, parse_site(site_text), n);
            write_or_print(out_path, to_pd_text(t));
        } else if (jones_cmd->parsed()) {
            write_or_print(out_path, jones(load_one(in_path), max_crossings).to_string("t") + "\n");
        } else if (det_cmd->parsed()) {
            write_or_print(out_path, determinant(load_one(in_path)).str() + "\n");
        } else if (cover_cmd->parsed()) {
            write_or_print(out_path, branched_cover_homology(load_one(in_path)).to_string() + "\n");
        } else if (sites_cmd->parsed()) {
            std::ostringstream text;
            for (const auto& s : find_twist_sites(load_one(in_path)))
                text << s.arc_a << "," << s.arc_b << "," << s.face << "\n";
            write_or_print(out_path, text.str());
        } else if (slopes_cmd->parsed()) {
            std::ostringstream csv;
            csv << "n,surgery_slope,delta_with_meridian,unit_intersectors,classification\n";
            for (int k = slope_lo; k <= slope_hi; ++k) {
                if (k == 0) continue;
                TorusSlope mu_prime = surgery_slope(k);
                csv << k << "," << mu_prime.to_string() << "," << delta(meridian(), mu_prime) << ",\"";
                auto inter = unit_intersectors(mu_prime);
                for (size_t i = 0; i < inter.size(); ++i) csv << (i ? " " : "") << inter[i].to_string();
                csv << "\"," << nugatory_verdict_name(nugatory_slope_test(k)) << "\n";
            }
            write_or_print(out_path, csv.str());
        } else if (census_cmd->parsed()) {
            RunConfig cfg;
            cfg.n_min = n_min;
            cfg.n_max = n_max;
            cfg.max_crossings = max_crossings;
            cfg.budget = budget;
            cfg.threads = threads;
            auto diagrams = read_diagram_file(in_path);
            if (out_path.empty()) {
                for (const auto& r : census(diagrams, cfg)) std::cout << r.json_line() << "\n";
            } else {
                auto records = census_to_file(diagrams, cfg, out_path);
                std::cerr << records.size() << " records -> " << out_path << "\n";
            }
        } else if (verify_cmd->parsed()) {
            Report rep = verify_examples(budget);
            std::cout << rep.to_string();
            return rep.all_pass() ? 0 : 1;
        } else if (thm_cmd->parsed()) {
            std::vector<Banding> bandings;
            if (gen_count > 0) bandings = random_unknot_bandings(gen_count, gen_seed);
            if (!bandings_path.empty()) {
                std::ifstream in(bandings_path);
                if (!in) throw Error(ErrorCode::FixtureMissing, "cannot open " + bandings_path);
                nlohmann::json j;
                in >> j;
                for (const auto& item : j) {
                    Banding b;
                    b.diagram = parse_pd(item.at("pd").get<std::string>());
                    b.band.arc_a = item.at("band").at("arc_a").get<int>();
                    b.band.arc_b = item.at("band").at("arc_b").get<int>();
                    b.band.face = item.at("band").at("face").get<int>();
                    b.band.half_twist_parity = item.at("band").at("half_twist_parity").get<int>();
                    bandings.push_back(std::move(b));
                }
            }
            if (bandings.empty()) throw Error(ErrorCode::MalformedCode, "no bandings given");
            Report rep = theorem3_check(bandings, budget);
            std::cout << rep.to_string();
            return rep.all_pass() ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
