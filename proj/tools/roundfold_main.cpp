// Command-line front end: validate descriptors, build (H_k,R)-graphs, run the
// applicability checks, apply P-operations, solve circle-bundle homology and
// print the section-4 family reports. All output is deterministic for fixed
// inputs; --json switches every subcommand to a machine-readable form.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "roundfold/bundles.hpp"
#include "roundfold/foldmap.hpp"
#include "roundfold/graphs.hpp"
#include "roundfold/gysin.hpp"
#include "roundfold/pop.hpp"
#include "roundfold/textio.hpp"

namespace rf = roundfold;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomainFailure = 1;
constexpr int kExitUsage = 2;

std::vector<int> parse_vertex_set(const std::string& text) {
    std::vector<int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoi(item));
    }
    return out;
}

std::vector<int64_t> parse_int_list(const std::string& text) {
    std::vector<int64_t> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
    }
    return out;
}

json group_json(const rf::AbGroup& g) {
    return json{{"rank", g.rank}, {"torsion", g.torsion}, {"text", g.str()}};
}

json report_json(const rf::ApplicabilityReport& r) {
    json failed = json::array();
    for (const auto& f : r.failed_conditions)
        failed.push_back({{"condition", f.condition}, {"location", f.location}});
    return json{{"applicable", r.applicable},
                {"rule", r.rule},
                {"starting_set", r.starting_set_used},
                {"failed_conditions", failed}};
}

rf::ApplicabilityReport dispatch_rule(const std::string& rule, const rf::FoldMapDescriptor& d,
                                      const rf::BundleDescriptor& b, const std::vector<int>& s) {
    if (rule == "auto") return rf::check_auto(d, b, s);
    if (rule == "thm1") return rf::check_theorem_1(d, b, s);
    if (rule == "thm2") return rf::check_theorem_2(d, b, s);
    if (rule == "thm3") return rf::check_theorem_3(d, b, s);
    if (rule == "thm4") return rf::check_theorem_4(d, b, s);
    if (rule == "prop34") return rf::check_propositions_34(d, b);
    throw rf::DomainError("unknown rule '" + rule + "'");
}

int run(int argc, char** argv) {
    CLI::App app{"round fold map calculus"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    // validate
    auto* validate_cmd = app.add_subcommand("validate", "check a descriptor file");
    validate_cmd->fallthrough();
    std::string validate_file;
    validate_cmd->add_option("file", validate_file, "descriptor file")->required();

    // graph
    auto* graph_cmd = app.add_subcommand("graph", "build the (H_k,R)-graph of a descriptor");
    graph_cmd->fallthrough();
    std::string graph_file, graph_ring = "z";
    int graph_degree = 1;
    bool graph_dot = false;
    graph_cmd->add_option("file", graph_file, "descriptor file")->required();
    graph_cmd->add_option("--degree", graph_degree, "homology degree (0, 1 or 2)")->required();
    graph_cmd->add_option("--ring", graph_ring, "coefficient ring: z or z2")->required();
    graph_cmd->add_flag("--dot", graph_dot, "emit graphviz DOT");

    // check
    auto* check_cmd = app.add_subcommand("check", "run the applicability engine");
    check_cmd->fallthrough();
    std::string check_file, check_bundle, check_start = "0", check_rule = "auto";
    check_cmd->add_option("file", check_file, "descriptor file")->required();
    check_cmd->add_option("--bundle", check_bundle, "bundle file")->required();
    check_cmd->add_option("--start", check_start, "starting set, e.g. \"0,2\"");
    check_cmd->add_option("--rule", check_rule, "auto|thm1|thm2|thm3|thm4|prop34");

    // apply
    auto* apply_cmd = app.add_subcommand("apply", "apply a P-operation by a fiber");
    apply_cmd->fallthrough();
    std::string apply_file, apply_fiber, apply_bundle, apply_start = "0", apply_rule = "auto";
    apply_cmd->add_option("file", apply_file, "descriptor file")->required();
    apply_cmd->add_option("--fiber", apply_fiber, "fiber expression, e.g. sphere(1)")->required();
    apply_cmd->add_option("--bundle", apply_bundle, "bundle file; omitted = declared trivial");
    apply_cmd->add_option("--start", apply_start, "starting set for the applicability check");
    apply_cmd->add_option("--rule", apply_rule, "auto|thm1|thm2|thm3|thm4|prop34");

    // homology
    auto* homology_cmd = app.add_subcommand("homology", "circle-bundle homology over a 4-manifold");
    homology_cmd->fallthrough();
    std::string homology_file, homology_alpha;
    homology_cmd->add_option("--four-manifold", homology_file, "four-manifold file")->required();
    homology_cmd->add_option("--alpha", homology_alpha, "euler class coordinates, e.g. \"1,0\"")
        ->required();

    // catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "print a catalog descriptor");
    catalog_cmd->fallthrough();
    std::string catalog_name;
    std::vector<std::string> catalog_params;
    catalog_cmd->add_option("name", catalog_name, "catalog family name")->required();
    catalog_cmd->add_option("params", catalog_params, "family parameters");

    // report
    auto* report_cmd = app.add_subcommand("report", "section-4 family report (thm5..thm8)");
    report_cmd->fallthrough();
    std::string report_family;
    std::vector<std::string> report_params;
    int report_m = 0;
    report_cmd->add_option("family", report_family, "thm5|thm6|thm7|thm8")->required();
    report_cmd->add_option("params", report_params, "family parameters");
    report_cmd->add_option("--m", report_m, "source dimension for thm6/thm7/thm8 (default 5/6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*validate_cmd) {
            auto d = rf::parse_descriptor(rf::read_file(validate_file));
            auto diagnostics = rf::validate(d);
            if (as_json) {
                json out = json::array();
                for (const auto& diag : diagnostics)
                    out.push_back({{"field", diag.field}, {"message", diag.message}});
                std::cout << json{{"valid", diagnostics.empty()}, {"diagnostics", out}}.dump(2) << "\n";
            } else if (diagnostics.empty()) {
                std::cout << "valid\n";
            } else {
                for (const auto& diag : diagnostics)
                    std::cout << diag.field << ": " << diag.message << "\n";
            }
            return diagnostics.empty() ? kExitOk : kExitDomainFailure;
        }
        if (*graph_cmd) {
            auto d = rf::parse_descriptor(rf::read_file(graph_file));
            rf::Ring ring;
            if (graph_ring == "z")
                ring = rf::Ring::Integers;
            else if (graph_ring == "z2")
                ring = rf::Ring::ModTwo;
            else
                throw rf::DomainError("--ring must be z or z2");
            rf::RegionGraph g = rf::build_graph(d, graph_degree, ring);
            if (graph_dot) {
                std::cout << rf::export_dot(g);
            } else if (as_json) {
                json edges = json::array();
                for (const auto& [from, to] : g.edges) edges.push_back({from, to});
                std::cout << json{{"degree", g.degree},
                                  {"ring", graph_ring},
                                  {"vertices", g.vertex_count},
                                  {"edges", edges}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << g.kind << "-graph on " << g.vertex_count << " vertices\n";
                for (const auto& [from, to] : g.edges) std::cout << from << " -> " << to << "\n";
            }
            return kExitOk;
        }
        if (*check_cmd) {
            auto d = rf::parse_descriptor(rf::read_file(check_file));
            auto b = rf::parse_bundle(rf::read_file(check_bundle));
            auto report = dispatch_rule(check_rule, d, b, parse_vertex_set(check_start));
            if (as_json)
                std::cout << report_json(report).dump(2) << "\n";
            else
                std::cout << report.str() << "\n";
            return report.applicable ? kExitOk : kExitDomainFailure;
        }
        if (*apply_cmd) {
            auto d = rf::parse_descriptor(rf::read_file(apply_file));
            auto fiber = rf::parse_homology_expression(apply_fiber);
            rf::POperationResult result;
            if (apply_bundle.empty()) {
                result = rf::apply_p_operation_trivial(d, fiber);
            } else {
                auto b = rf::parse_bundle(rf::read_file(apply_bundle));
                auto report = dispatch_rule(apply_rule, d, b, parse_vertex_set(apply_start));
                if (!report.applicable) {
                    if (as_json)
                        std::cout << report_json(report).dump(2) << "\n";
                    else
                        std::cout << report.str() << "\n";
                    return kExitDomainFailure;
                }
                result = rf::apply_p_operation(d, fiber, report);
            }
            if (as_json) {
                std::cout << json{{"provenance", result.provenance},
                                  {"descriptor", rf::serialize(result.result)}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "# " << result.provenance << "\n";
                std::cout << rf::serialize(result.result);
            }
            return kExitOk;
        }
        if (*homology_cmd) {
            auto m = rf::parse_four_manifold(rf::read_file(homology_file));
            auto alpha = parse_int_list(homology_alpha);
            auto gysin = rf::gysin_h_star(m, alpha);
            bool simply = rf::is_simply_connected_total_space(m, alpha);
            bool constraint = rf::theorem5_alpha_constraint(m, alpha);
            if (as_json) {
                json out{{"alpha", alpha},
                         {"fiber_constraint", constraint},
                         {"simply_connected", simply},
                         {"h1", group_json(gysin.h1)},
                         {"h2", group_json(gysin.h2)}};
                json coh = json::array();
                for (const auto& g : gysin.cohomology) coh.push_back(group_json(g));
                out["cohomology"] = coh;
                if (simply) out["type"] = rf::classify_five_manifold(m, alpha).str();
                std::cout << out.dump(2) << "\n";
            } else {
                for (size_t k = 0; k < gysin.cohomology.size(); ++k)
                    std::cout << "H^" << k << "(M(alpha);Z): " << gysin.cohomology[k].str() << "\n";
                std::cout << "H_1(M(alpha);Z): " << gysin.h1.str() << "\n";
                std::cout << "H_2(M(alpha);Z): " << gysin.h2.str() << "\n";
                std::cout << "alpha vanishes on fiber classes: " << (constraint ? "true" : "false")
                          << "\n";
                std::cout << "simply connected: " << (simply ? "true" : "false") << "\n";
                if (simply)
                    std::cout << "diffeomorphism type: " << rf::classify_five_manifold(m, alpha).str()
                              << "\n";
            }
            return kExitOk;
        }
        if (*catalog_cmd) {
            auto d = rf::catalog(catalog_name, catalog_params);
            if (as_json)
                std::cout << json{{"name", catalog_name}, {"descriptor", rf::serialize(d)}}.dump(2)
                          << "\n";
            else
                std::cout << rf::serialize(d);
            return kExitOk;
        }
        if (*report_cmd) {
            rf::S1FamilyInput input;
            rf::FoldMapDescriptor d;
            if (report_family == "thm6") {
                if (report_params.size() != 1) throw rf::DomainError("report thm6 needs one parameter k");
                input.ks = {std::stoll(report_params[0])};
                d = rf::spun_torus_family(report_m > 0 ? report_m : 5, 2);
            } else if (report_family == "thm7") {
                if (report_params.size() != 1) throw rf::DomainError("report thm7 needs one parameter k");
                input.ks = {std::stoll(report_params[0])};
                d = rf::spun_disc_family(report_m > 0 ? report_m : 5, 2);
            } else if (report_family == "thm8") {
                if (report_params.size() != 2)
                    throw rf::DomainError("report thm8 needs two parameters k1 k2");
                input.ks = {std::stoll(report_params[0]), std::stoll(report_params[1])};
                d = rf::case3_connected_sum(report_m > 0 ? report_m : 6, 2);
            } else if (report_family == "thm5") {
                if (report_params.size() != 2)
                    throw rf::DomainError(
                        "report thm5 needs a factor list and alpha, e.g. thm5 trivial,trivial 0,1,0,0");
                std::vector<bool> twisted;
                std::istringstream factors(report_params[0]);
                std::string item;
                while (std::getline(factors, item, ',')) {
                    if (item == "trivial")
                        twisted.push_back(false);
                    else if (item == "twisted")
                        twisted.push_back(true);
                    else
                        throw rf::DomainError("factors are 'trivial' or 'twisted', got '" + item + "'");
                }
                input.base = rf::FourManifold::connected_sum_of_s2_bundles(twisted);
                input.alpha = parse_int_list(report_params[1]);
                d = rf::connected_sum_sphere_bundles(4, 2, static_cast<int>(twisted.size()));
            } else {
                throw rf::DomainError("unknown family '" + report_family + "'");
            }
            auto report = rf::s1_family_report(d, input);
            if (as_json) {
                json out{{"family", rf::family_name(report.family)}, {"text", report.text}};
                if (report.homology) {
                    out["h1"] = group_json(report.homology->h1);
                    json restrictions = json::array();
                    for (const auto& g : report.homology->restriction_h1)
                        restrictions.push_back(group_json(g));
                    out["restriction_h1"] = restrictions;
                    out["s_trivial"] = report.homology->s_trivial;
                }
                if (report.five_class) out["type"] = report.five_class->str();
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << report.text;
            }
            return kExitOk;
        }
    } catch (const rf::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainFailure;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
