// Command-line front end: parses a complex, runs the requested pipeline and
// prints one deterministic JSON (or markdown-augmented) report on stdout.
// Exit codes: 0 ok, 2 parse error, 3 validation error, 4 failed cross-check.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "macforge/macforge.hpp"

namespace {

using namespace macforge;

struct Options {
    std::string input_path;
    std::string flavor = "motivic";
    std::string field = "generic";
    std::string model = "dual";
    bool allow_ghost = false;
    bool markdown = false;
    std::uint64_t seed = 1;
    int exhaustive_m = 0;
    std::vector<int> random_params;  // {count, m}
};

Flavor parse_flavor(const std::string& name) {
    if (name == "motivic") return Flavor::motivic;
    if (name == "complex") return Flavor::complex;
    return Flavor::real;
}

/// GW element under the requested field collapse: generic keeps the full
/// form, C applies <-1> = <1> (rank only), R keeps (rank, signature).
Json field_json(const GWElement& x, const std::string& field) {
    if (field == "C") return Json{{"field", "C"}, {"value", x.rank()}};
    if (field == "R") return Json{{"field", "R"}, {"rank", x.rank()}, {"signature", x.signature()}};
    return to_json(x);
}

Json check_entry(const std::string& name, bool passed) {
    return Json{{"name", name}, {"passed", passed}};
}

Json skipped_entry(const std::string& name, const std::string& reason) {
    return Json{{"name", name}, {"passed", true}, {"skipped", true}, {"reason", reason}};
}

/// Report envelope shared by every subcommand.  Nothing here depends on
/// thread count, time, or machine, so identical input and flags give
/// byte-identical output.
Json make_report(const std::string& subcommand, const Json& invocation) {
    Json report;
    report["tool"] = "macforge";
    report["subcommand"] = subcommand;
    report["invocation"] = invocation;
    return report;
}

void attach_input(Json& report, const SimplicialComplex& K) {
    Json input = complex_to_json(K);
    input["hash"] = input_hash(K);
    if (K.ghost_mask() != 0) input["ghost_vertices"] = vertices_json(K.ghost_mask());
    report["input"] = std::move(input);
}

int finish(Json& report, Json checks) {
    bool all_passed = true;
    for (const Json& c : checks)
        if (!c.value("passed", true)) all_passed = false;
    report["checks"] = std::move(checks);
    std::cout << report.dump(2) << "\n";
    return all_passed ? 0 : 4;
}

SimplicialComplex load(const Options& opt) {
    const SimplicialComplex K = parse_complex_file(opt.input_path, opt.allow_ghost);
    if (K.ghost_mask() != 0)
        std::cerr << "warning: ghost vertices "
                  << VertexSet(K.ghost_mask(), K.vertex_count()).to_string()
                  << " are excluded from all decomposition sums\n";
    return K;
}

/// Cross-checks every full report runs: the three Euler-characteristic
/// routes, the classical rank/signature shadows and the stratification
/// recount.  These can only fail on an implementation bug (exit 4).
Json euler_checks(const SimplicialComplex& K, bool allow_ghost) {
    Json checks = Json::array();
    const GWElement davis = chi_a1_davis(K);
    checks.push_back(check_entry("chi_a1 davis == splitting route",
                                 davis == chi_a1_splitting(K, allow_ghost)));
    if (K.ghost_mask() != 0) {
        checks.push_back(skipped_entry("chi_a1 davis == rebuilt from summands",
                                       "ghost vertices excluded from the splitting"));
    } else {
        checks.push_back(
            check_entry("chi_a1 davis == rebuilt from summands",
                        davis == chi_a1_from_summands(stable_splitting(K, Flavor::motivic))));
    }
    checks.push_back(
        check_entry("rank shadow: rank chi_a1 == chi(Z_K)",
                    davis.rank() == chi_classical_polyhedral(1, 0, K)));
    checks.push_back(
        check_entry("signature shadow: signature chi_a1 == chi(RZ_K)",
                    davis.signature() == chi_classical_polyhedral(1, 2, K)));
    checks.push_back(check_entry("stratification chi == davis",
                                 cellular_filtration_report(K).chi_from_strata == davis));
    return checks;
}

int cmd_invariants(const Options& opt) {
    const SimplicialComplex K = load(opt);
    Json report = make_report("invariants", Json{{"flavor", opt.flavor},
                                                 {"field", opt.field},
                                                 {"allow_ghost", opt.allow_ghost},
                                                 {"markdown", opt.markdown}});
    attach_input(report, K);

    const HochsterAtlas atlas = hochster_atlas(K, opt.allow_ghost);
    Json payload;
    payload["cellular_a1_homology"] = graded_sheaf_json(cellular_a1_homology(atlas));
    payload["a1_betti"] = to_json(a1_betti_numbers(atlas));
    if (opt.markdown) payload["a1_betti_markdown"] = bigraded_markdown(a1_betti_numbers(atlas));
    payload["euler"] = Json{{"chi_a1", field_json(chi_a1_davis(K), opt.field)},
                            {"chi_zk", chi_classical_polyhedral(1, 0, K)},
                            {"chi_rzk", chi_classical_polyhedral(1, 2, K)}};
    payload["splitting"] = to_json(stable_splitting(atlas, parse_flavor(opt.flavor)));
    report["payload"] = std::move(payload);

    return finish(report, euler_checks(K, opt.allow_ghost));
}

int cmd_splitting(const Options& opt) {
    const SimplicialComplex K = load(opt);
    Json report = make_report(
        "splitting", Json{{"flavor", opt.flavor}, {"allow_ghost", opt.allow_ghost}});
    attach_input(report, K);

    const DecompositionReport splitting =
        stable_splitting(hochster_atlas(K, opt.allow_ghost), parse_flavor(opt.flavor));
    report["payload"] = Json{{"splitting", to_json(splitting)}};

    Json checks = Json::array();
    if (K.ghost_mask() == 0 && parse_flavor(opt.flavor) == Flavor::motivic)
        checks.push_back(check_entry("chi_a1 davis == rebuilt from summands",
                                     chi_a1_davis(K) == chi_a1_from_summands(splitting)));
    return finish(report, std::move(checks));
}

int cmd_homology(const Options& opt) {
    const SimplicialComplex K = load(opt);
    Json report = make_report("homology", Json{{"allow_ghost", opt.allow_ghost}});
    attach_input(report, K);

    const HochsterAtlas atlas = hochster_atlas(K, opt.allow_ghost);
    const std::vector<AbelianGroup> zk = zk_cohomology_groups(atlas);
    const std::vector<AbelianGroup> rzk = rzk_homology_groups(atlas);
    Json payload;
    payload["zk_cohomology"] = graded_groups_json(zk);
    payload["rzk_homology"] = graded_groups_json(rzk);
    payload["cellular_a1_homology"] = graded_sheaf_json(cellular_a1_homology(atlas));
    payload["motivic_cohomology"] = to_json(motivic_cohomology_decomposition(atlas));
    report["payload"] = std::move(payload);

    Json checks = Json::array();
    if (K.ghost_mask() == 0) {
        long long zk_alternating = 0;
        for (std::size_t i = 0; i < zk.size(); ++i)
            zk_alternating += (i % 2 == 0 ? 1 : -1) * zk[i].rank;
        long long rzk_alternating = 1;  // unreduced H_0 before the reduced terms
        for (std::size_t i = 0; i < rzk.size(); ++i)
            rzk_alternating += (i % 2 == 0 ? 1 : -1) * rzk[i].rank;
        checks.push_back(check_entry("zk cohomology alternating ranks == chi(Z_K)",
                                     zk_alternating == chi_classical_polyhedral(1, 0, K)));
        checks.push_back(check_entry("rzk homology alternating ranks == chi(RZ_K)",
                                     rzk_alternating == chi_classical_polyhedral(1, 2, K)));
    } else {
        checks.push_back(skipped_entry("decomposition alternating-sum checks",
                                       "ghost vertices excluded from decomposition sums"));
    }
    return finish(report, std::move(checks));
}

int cmd_euler(const Options& opt) {
    const SimplicialComplex K = load(opt);
    Json report = make_report(
        "euler", Json{{"field", opt.field}, {"allow_ghost", opt.allow_ghost}});
    attach_input(report, K);

    const FiltrationReport filtration = cellular_filtration_report(K);
    Json payload;
    payload["chi_a1"] = field_json(chi_a1_davis(K), opt.field);
    payload["chi_zk"] = chi_classical_polyhedral(1, 0, K);
    payload["chi_rzk"] = chi_classical_polyhedral(1, 2, K);
    payload["chi_from_strata"] = field_json(filtration.chi_from_strata, opt.field);
    report["payload"] = std::move(payload);

    return finish(report, euler_checks(K, opt.allow_ghost));
}

int cmd_betti(const Options& opt) {
    const SimplicialComplex K = load(opt);
    Json report = make_report(
        "betti", Json{{"allow_ghost", opt.allow_ghost}, {"markdown", opt.markdown}});
    attach_input(report, K);

    const HochsterAtlas atlas = hochster_atlas(K, opt.allow_ghost);
    const BigradedTable a1 = a1_betti_numbers(atlas);
    const ClassicalBigradedBetti classical = classical_bigraded_betti(atlas);
    Json payload;
    payload["a1_betti"] = to_json(a1);
    payload["classical_tor"] = to_json(classical.tor_table);
    if (opt.markdown) {
        payload["a1_betti_markdown"] = bigraded_markdown(a1);
        payload["classical_tor_markdown"] = bigraded_markdown(classical.tor_table);
    }
    report["payload"] = std::move(payload);

    Json checks = Json::array();
    checks.push_back(check_entry("classical table reindexes to the a1 table",
                                 classical.reindexed_to_a1() == a1));
    return finish(report, std::move(checks));
}

int cmd_affine(const Options& opt) {
    const SimplicialComplex K = load(opt);
    Json report = make_report(
        "affine", Json{{"model", opt.model}, {"allow_ghost", opt.allow_ghost}});
    attach_input(report, K);

    const MonomialIdeal complement = complement_ideal(K);
    Json payload;
    Json checks = Json::array();
    if (opt.model == "dual") {
        payload["complement_ideal"] = to_json(complement);
        payload["presentation"] = to_json(jouanolou_presentation(complement));
        if (complement.is_unit())
            checks.push_back(skipped_entry(
                "complement ideal == stanley-reisner ideal of the dual",
                "full simplex: the dual is void, which collapses to {} here"));
        else
            checks.push_back(check_entry("complement ideal == stanley-reisner ideal of the dual",
                                         complement == minimal_non_faces(alexander_dual(K))));
    } else if (opt.model == "sr") {
        payload["minimal_non_faces"] = to_json(minimal_non_faces(K));
        payload["presentation"] = to_json(sr_cover_presentation(K));
    } else {  // complement: the raw arrangement data plus its stratification
        payload["complement_ideal"] = to_json(complement);
        payload["filtration"] = to_json(cellular_filtration_report(K));
        checks.push_back(check_entry("stratification chi == davis",
                                     cellular_filtration_report(K).chi_from_strata ==
                                         chi_a1_davis(K)));
    }
    report["payload"] = std::move(payload);
    return finish(report, std::move(checks));
}

/// One named oracle comparison, aggregated over a corpus: remembers the
/// first counterexample and how often it was skipped.
struct OracleCheck {
    explicit OracleCheck(std::string check_name) : name(std::move(check_name)) {}

    std::string name;
    long long ran = 0;
    long long skipped = 0;
    bool passed = true;
    Json counterexample;

    void record(const SimplicialComplex& K, bool ok, const std::string& detail) {
        ++ran;
        if (ok || !passed) return;
        passed = false;
        counterexample = complex_to_json(K);
        counterexample["detail"] = detail;
    }

    Json to_json() const {
        Json out{{"name", name}, {"passed", passed}, {"ran", ran}, {"skipped", skipped}};
        if (!passed) out["counterexample"] = counterexample;
        return out;
    }
};

/// The oracle suite on one complex: independent brute-force chain complexes
/// against every decomposition formula.  Ghosted inputs only exercise the
/// checks that stay valid there.
void oracle_pass(const SimplicialComplex& K, std::vector<OracleCheck>& checks) {
    OracleCheck& cubical_vs_rzk = checks[0];
    OracleCheck& koszul_vs_betti = checks[1];
    OracleCheck& euler_shadows = checks[2];
    OracleCheck& chi_routes = checks[3];
    OracleCheck& stratification = checks[4];

    if (K.ghost_mask() != 0) {
        for (OracleCheck& c : checks) ++c.skipped;
        return;
    }

    if (K.vertex_count() > cubical_max_vertices) {
        ++cubical_vs_rzk.skipped;
    } else {
        std::vector<AbelianGroup> expected = rzk_homology_groups(K);
        if (expected.empty()) expected.push_back(AbelianGroup::trivial());
        expected[0].rank += 1;  // unreduced degree 0
        std::vector<AbelianGroup> actual = cubical_homology(K);
        while (expected.size() < actual.size()) expected.push_back(AbelianGroup::trivial());
        while (actual.size() < expected.size()) actual.push_back(AbelianGroup::trivial());
        std::string detail;
        for (std::size_t i = 0; i < actual.size(); ++i)
            if (!(actual[i] == expected[i]))
                detail += "degree " + std::to_string(i) + ": cubical " + actual[i].to_string() +
                          " vs decomposition " + expected[i].to_string() + "; ";
        cubical_vs_rzk.record(K, detail.empty(), detail);
    }

    if (K.vertex_count() > 16) {
        ++koszul_vs_betti.skipped;
    } else {
        const BigradedTable tor = koszul_tor_ranks(K);
        const BigradedTable betti = a1_betti_numbers(K);
        koszul_vs_betti.record(K, tor == betti,
                               "koszul:\n" + tor.to_string() + "betti:\n" + betti.to_string());
    }

    const GWElement davis = chi_a1_davis(K);
    {
        const long long cells = cubical_euler_characteristic(K);
        const bool ok = cells == chi_classical_polyhedral(1, 2, K) &&
                        davis.signature() == cells &&
                        davis.rank() == chi_classical_polyhedral(1, 0, K);
        euler_shadows.record(K, ok,
                             "cubical euler " + std::to_string(cells) + ", chi_a1 " +
                                 davis.to_string());
    }
    {
        const GWElement split = chi_a1_splitting(K);
        const GWElement rebuilt = chi_a1_from_summands(stable_splitting(K, Flavor::motivic));
        chi_routes.record(K, davis == split && davis == rebuilt,
                          "davis " + davis.to_string() + ", splitting " + split.to_string() +
                              ", rebuilt " + rebuilt.to_string());
    }
    {
        const GWElement strata = cellular_filtration_report(K).chi_from_strata;
        stratification.record(K, strata == davis,
                              "strata " + strata.to_string() + ", davis " + davis.to_string());
    }
}

int cmd_oracle_verify(const Options& opt) {
    Json invocation{{"allow_ghost", opt.allow_ghost}};
    std::vector<SimplicialComplex> corpus;
    if (opt.exhaustive_m > 0) {
        invocation["mode"] = "exhaustive";
        invocation["max_vertices"] = opt.exhaustive_m;
        corpus = all_complexes_up_to(opt.exhaustive_m);
    } else if (!opt.random_params.empty()) {
        invocation["mode"] = "random";
        invocation["count"] = opt.random_params[0];
        invocation["m"] = opt.random_params[1];
        invocation["seed"] = opt.seed;
        corpus = random_complexes(opt.random_params[1],
                                  static_cast<std::size_t>(opt.random_params[0]), opt.seed);
    } else {
        invocation["mode"] = "file";
        corpus.push_back(load(opt));
    }

    Json report = make_report("oracle-verify", invocation);
    std::vector<OracleCheck> checks;
    checks.emplace_back("cubical homology == rzk decomposition");
    checks.emplace_back("koszul tor ranks == a1 betti table");
    checks.emplace_back("euler shadows (cubical, rank, signature)");
    checks.emplace_back("chi_a1 routes agree (davis, splitting, summands)");
    checks.emplace_back("stratification chi == davis");
    for (const SimplicialComplex& K : corpus) oracle_pass(K, checks);

    report["payload"] = Json{{"complexes_checked", corpus.size()}};
    Json table = Json::array();
    for (const OracleCheck& c : checks) table.push_back(c.to_json());
    return finish(report, std::move(table));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Moment-angle complex invariants with brute-force oracle checks"};
    app.require_subcommand(1);

    Options opt;
    const auto add_input = [&](CLI::App* cmd, bool required) {
        CLI::Option* o = cmd->add_option("input", opt.input_path,
                                         "complex file (JSON {\"m\",\"facets\"} or m=/facet text)");
        if (required) o->required();
        return o;
    };
    const auto add_ghost = [&](CLI::App* cmd) {
        cmd->add_flag("--allow-ghost", opt.allow_ghost,
                      "accept vertices in no face; they are excluded from decompositions");
    };

    CLI::App* invariants = app.add_subcommand(
        "invariants", "cellular A1-homology, Betti table, Euler characteristics, splitting");
    add_input(invariants, true);
    add_ghost(invariants);
    invariants->add_option("--flavor", opt.flavor, "splitting flavor")
        ->check(CLI::IsMember({"motivic", "complex", "real"}));
    invariants->add_option("--field", opt.field, "GW output mode")
        ->check(CLI::IsMember({"C", "R", "generic"}));
    invariants->add_flag("--markdown", opt.markdown, "add markdown-rendered tables");

    CLI::App* splitting = app.add_subcommand("splitting", "stable splitting summand list");
    add_input(splitting, true);
    add_ghost(splitting);
    splitting->add_option("--flavor", opt.flavor, "suspension bookkeeping flavor")
        ->check(CLI::IsMember({"motivic", "complex", "real"}));

    CLI::App* homology =
        app.add_subcommand("homology", "Z_K and RZ_K decompositions, cellular A1-homology");
    add_input(homology, true);
    add_ghost(homology);

    CLI::App* euler = app.add_subcommand("euler", "all Euler-characteristic routes");
    add_input(euler, true);
    add_ghost(euler);
    euler->add_option("--field", opt.field, "GW output mode")
        ->check(CLI::IsMember({"C", "R", "generic"}));

    CLI::App* betti = app.add_subcommand("betti", "bigraded A1 and classical Tor tables");
    add_input(betti, true);
    add_ghost(betti);
    betti->add_flag("--markdown", opt.markdown, "add markdown-rendered tables");

    CLI::App* affine = app.add_subcommand("affine", "affine scheme models");
    add_input(affine, true);
    add_ghost(affine);
    affine->add_option("--model", opt.model, "which presentation to emit")
        ->check(CLI::IsMember({"dual", "sr", "complement"}));

    CLI::App* verify =
        app.add_subcommand("oracle-verify", "brute-force oracle equivalence suite");
    CLI::Option* verify_input = add_input(verify, false);
    add_ghost(verify);
    CLI::Option* exhaustive =
        verify->add_option("--exhaustive", opt.exhaustive_m, "all complexes on up to m vertices")
            ->check(CLI::Range(1, 6));
    CLI::Option* random =
        verify->add_option("--random", opt.random_params, "COUNT complexes on M vertices")
            ->expected(2);
    verify->add_option("--seed", opt.seed, "random corpus seed");
    exhaustive->excludes(random)->excludes(verify_input);
    random->excludes(verify_input);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (invariants->parsed()) return cmd_invariants(opt);
        if (splitting->parsed()) return cmd_splitting(opt);
        if (homology->parsed()) return cmd_homology(opt);
        if (euler->parsed()) return cmd_euler(opt);
        if (betti->parsed()) return cmd_betti(opt);
        if (affine->parsed()) return cmd_affine(opt);
        if (verify->parsed()) {
            if (opt.input_path.empty() && opt.exhaustive_m == 0 && opt.random_params.empty()) {
                std::cerr << "error: oracle-verify needs an input file, --exhaustive or --random\n";
                return 2;
            }
            return cmd_oracle_verify(opt);
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const check_failure& e) {
        std::cerr << "cross-check failure (implementation bug): " << e.what() << "\n";
        return 4;
    }
    return 0;
}
