#include "cutquad/catalog.hpp"
#include "cutquad/error.hpp"
#include "cutquad/methods.hpp"
#include "cutquad/study.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace cutquad;

namespace {

constexpr const char* kConvention =
    "Sign convention: the active region is {phi(x) <= 0}; phi > 0 is outside.";

std::vector<int> parse_int_list(const std::string& s)
{
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size())
            throw ParameterError("not an integer: '" + item + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw ParameterError("empty integer list");
    return out;
}

std::string join_params(const std::vector<int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

void write_rule_csv(const std::string& path, const QuadratureRule& rule)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw IoError("cannot open '" + path + "' for writing");
    f << "x,y,w\n";
    char buf[96];
    for (std::size_t i = 0; i < rule.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", rule.points()[i].x, rule.points()[i].y,
                      rule.weights()[i]);
        f << buf;
    }
    f.flush();
    if (!f)
        throw IoError("write to '" + path + "' failed");
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cut-cell quadrature rules and benchmark studies on a 2D test catalog."};
    app.footer(kConvention);
    app.require_subcommand(1);

    // catalog
    auto* catalog_cmd = app.add_subcommand("catalog", "Inspect the built-in test cases.");
    catalog_cmd->footer(kConvention);
    catalog_cmd->require_subcommand(1);
    auto* catalog_list = catalog_cmd->add_subcommand("list", "One line per case: id, boundary degree p, reference area.");
    catalog_list->footer(kConvention);
    auto* catalog_export = catalog_cmd->add_subcommand("export", "Write the catalog in its structured text format.");
    catalog_export->footer(kConvention);
    std::string export_out;
    catalog_export->add_option("--out", export_out, "Output path")->required();

    // rule
    auto* rule_cmd = app.add_subcommand("rule", "Write the quadrature points of one method as CSV (x,y,w).");
    rule_cmd->footer(kConvention);
    std::string rule_case, rule_method, rule_out;
    int rule_n = 2, rule_mesh = 1;
    std::optional<int> rule_level;
    rule_cmd->add_option("--case", rule_case, "Case id (see `catalog list`)")->required();
    rule_cmd->add_option("--method", rule_method,
                         "quadtree, tessellate, tessellate-direct, momentfit-lagrange, hmf, height or green")
        ->required();
    rule_cmd->add_option("--n", rule_n, "Points per direction n_set")->required();
    rule_cmd->add_option("--mesh", rule_mesh, "Elements per direction (ignored by green)")->capture_default_str();
    rule_cmd->add_option("--level", rule_level, "Subdivision level (quadtree, tessellate, momentfit-lagrange)");
    rule_cmd->add_option("--out", rule_out, "Output CSV path")->required();

    // study-nqp
    auto* nqp_cmd = app.add_subcommand("study-nqp", "Error versus n_set on a single element.");
    nqp_cmd->footer(kConvention);
    std::string nqp_case, nqp_methods, nqp_out, nqp_manifest;
    int nqp_q = 0;
    std::optional<int> nqp_nmax;
    nqp_cmd->add_option("--case", nqp_case, "Case id")->required();
    nqp_cmd->add_option("--methods", nqp_methods, "Comma-separated method ids")->required();
    nqp_cmd->add_option("--q", nqp_q, "Monomial degree of the integrand")->required();
    nqp_cmd->add_option("--n-max", nqp_nmax, "Largest n_set (default: exactness threshold + 1)");
    nqp_cmd->add_option("--out", nqp_out, "Output CSV path")->required();
    nqp_cmd->add_option("--manifest", nqp_manifest, "Optional JSON run manifest path");

    // study-href
    auto* href_cmd = app.add_subcommand("study-href", "Error versus mesh refinement at fixed n_set.");
    href_cmd->footer(kConvention);
    std::string href_case, href_methods, href_out, href_meshes = "1,2,4,8,16,32", href_manifest;
    int href_n = 2, href_q = 0;
    std::optional<int> href_level;
    href_cmd->add_option("--case", href_case, "Case id")->required();
    href_cmd->add_option("--methods", href_methods, "Comma-separated method ids")->required();
    href_cmd->add_option("--n", href_n, "Points per direction n_set")->required();
    href_cmd->add_option("--meshes", href_meshes, "Ascending elements per direction")->capture_default_str();
    href_cmd->add_option("--q", href_q, "Monomial degree of the integrand")->capture_default_str();
    href_cmd->add_option("--level", href_level, "Subdivision level for level-based methods");
    href_cmd->add_option("--out", href_out, "Output CSV path")->required();
    href_cmd->add_option("--manifest", href_manifest, "Optional JSON run manifest path");

    // study-sweep
    auto* sweep_cmd = app.add_subcommand("study-sweep", "Shifted-parabola robustness sweep on a fixed mesh.");
    sweep_cmd->footer(kConvention);
    std::string sweep_methods = "quadtree,tessellate,momentfit-lagrange,hmf,height", sweep_out, sweep_summary,
                sweep_manifest;
    int sweep_steps = 1000, sweep_mesh = 8, sweep_n = 2;
    sweep_cmd->add_option("--steps", sweep_steps, "Number of shifts (at least 2)")->capture_default_str();
    sweep_cmd->add_option("--methods", sweep_methods, "Comma-separated implicit method ids")->capture_default_str();
    sweep_cmd->add_option("--mesh", sweep_mesh, "Elements per direction")->capture_default_str();
    sweep_cmd->add_option("--n", sweep_n, "Points per direction n_set")->capture_default_str();
    sweep_cmd->add_option("--out", sweep_out, "Output CSV path")->required();
    sweep_cmd->add_option("--summary", sweep_summary, "Optional summary CSV path");
    sweep_cmd->add_option("--manifest", sweep_manifest, "Optional JSON run manifest path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*catalog_list) {
            for (const TestCase& tc : catalog()) {
                char line[160];
                std::snprintf(line, sizeof line, "%s p=%d area=%.17g", tc.id.c_str(), tc.degree,
                              tc.reference_area());
                std::cout << line << '\n';
            }
            return 0;
        }
        if (*catalog_export) {
            std::ofstream f(export_out, std::ios::binary);
            if (!f)
                throw IoError("cannot open '" + export_out + "' for writing");
            write_catalog(f, catalog());
            return 0;
        }
        if (*rule_cmd) {
            const TestCase& tc = find_case(rule_case);
            const MethodId m = parse_method(rule_method);
            MethodParams params{rule_n, rule_level};
            if (rule_method == "tessellate-direct")
                params.level = 0;
            const PipelineResult res = run_pipeline(m, tc, rule_mesh, params);
            write_rule_csv(rule_out, res.rule);
            return 0;
        }
        if (*nqp_cmd) {
            const TestCase& tc = find_case(nqp_case);
            const auto methods = parse_method_list(nqp_methods);
            const auto records = study_nqp(tc, methods, nqp_q, nqp_nmax);
            write_csv(nqp_out, records);
            const std::size_t failures = count_failures(records);
            if (!nqp_manifest.empty())
                write_manifest(nqp_manifest, "study-nqp",
                               {{"case", nqp_case},
                                {"methods", nqp_methods},
                                {"q", std::to_string(nqp_q)},
                                {"n_max", nqp_nmax ? std::to_string(*nqp_nmax) : "default"}},
                               records.size(), failures);
            return failures ? 1 : 0;
        }
        if (*href_cmd) {
            const TestCase& tc = find_case(href_case);
            const auto methods = parse_method_list(href_methods);
            const auto meshes = parse_int_list(href_meshes);
            const HrefResult res = study_href(tc, methods, href_n, meshes, href_q, href_level);
            write_csv(href_out, res.records);
            for (const auto& [m, fit] : res.fits) {
                if (fit)
                    std::cout << to_string(m) << " slope " << fit->slope << '\n';
                else
                    std::cout << to_string(m) << " slope n/a (fewer than 2 errors above the machine floor)\n";
            }
            const std::size_t failures = count_failures(res.records);
            if (!href_manifest.empty())
                write_manifest(href_manifest, "study-href",
                               {{"case", href_case},
                                {"methods", href_methods},
                                {"n", std::to_string(href_n)},
                                {"q", std::to_string(href_q)},
                                {"meshes", join_params(meshes)},
                                {"level", href_level ? std::to_string(*href_level) : "default"}},
                               res.records.size(), failures);
            return failures ? 1 : 0;
        }
        if (*sweep_cmd) {
            const auto methods = parse_method_list(sweep_methods);
            const SweepResult res = study_sweep(sweep_steps, methods, sweep_mesh, sweep_n);
            write_csv(sweep_out, res.records);
            if (!sweep_summary.empty())
                write_summary_csv(sweep_summary, res.summaries);
            write_summary_csv(std::cout, res.summaries);
            const std::size_t failures = count_failures(res.records);
            if (!sweep_manifest.empty())
                write_manifest(sweep_manifest, "study-sweep",
                               {{"steps", std::to_string(sweep_steps)},
                                {"methods", sweep_methods},
                                {"mesh", std::to_string(sweep_mesh)},
                                {"n", std::to_string(sweep_n)}},
                               res.records.size(), failures);
            return failures ? 1 : 0;
        }
    } catch (const UnsupportedCaseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
