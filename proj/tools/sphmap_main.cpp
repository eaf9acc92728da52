#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "sphmap/battery.hpp"
#include "sphmap/gallery.hpp"
#include "sphmap/parser.hpp"
#include "sphmap/report.hpp"

namespace {

using namespace sphmap;

constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitNotASphereMap = 3;
constexpr int kExitRouteDisagreement = 4;

int cmd_analyze(const std::string& source_text, bool human, std::uint64_t seed, int points,
                double tol) {
    MapSource source = parse_map_source(source_text);
    AnalysisReport report = classify(source.map, source.meta);
    NumericSummary numeric = numeric_summary(report, seed, points, tol);
    std::cout << (human ? report_to_human(report, source.description, numeric)
                        : report_to_json(report, source.description, numeric))
              << "\n";
    if (!report.route_agreement)
        throw RouteDisagreement("the specialized and general routes disagree");
    return 0;
}

int cmd_construct(const std::string& source_text, bool print_components) {
    MapSource source = parse_map_source(source_text);
    const SphereMapMeta& meta = source.meta;
    std::cout << "source: " << source.description << "\n";
    std::cout << "nvars: " << meta.nvars << ", components: " << source.map.size() << "\n";
    if (meta.is_homogeneous()) {
        std::cout << "kind: homogeneous, k = " << meta.homogeneous().k
                  << ", r^2 = " << meta.homogeneous().r_sq.str() << "\n";
    } else if (meta.is_diagonal()) {
        const auto& d = meta.diagonal();
        std::cout << "kind: diagonal, k1 = " << d.k1 << ", k2 = " << d.k2
                  << ", r1^2 = " << d.r1_sq.str() << ", r2^2 = " << d.r2_sq.str()
                  << ", split = " << d.split << "\n";
    } else {
        const auto& p = meta.product();
        std::cout << "kind: product, m1 = " << p.m1 << ", m2 = " << p.m2 << ", k1 = " << p.k1
                  << ", k2 = " << p.k2 << ", r1^2 = " << p.r1_sq.str()
                  << ", r2^2 = " << p.r2_sq.str() << ", split = " << p.split << "\n";
    }
    if (print_components)
        for (const auto& c : source.map.components()) std::cout << "  " << c.str() << "\n";
    return 0;
}

int cmd_verify_paper(const std::string& filter) {
    std::vector<CheckResult> results = run_battery(filter);
    int failures = 0;
    for (const auto& r : results) {
        std::cout << format_check(r) << "\n";
        if (!r.pass) ++failures;
    }
    std::cout << results.size() - failures << "/" << results.size() << " checks passed\n";
    return failures == 0 ? 0 : 1;
}

int cmd_emit_curve(const std::string& source_text, int samples, const std::string& out_path) {
    if (samples < 1) throw WrongDimensions("emit-curve needs at least one sample");
    MapSource source = parse_map_source(source_text);
    if (source.map.nvars() != 2 || source.map.size() != 4)
        throw WrongDimensions("emit-curve expects a circle domain and four components");

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw Error("cannot open output file " + out_path);
        os = &file;
    }
    *os << "t,u1,u2,u3,u4\n";
    char buf[64];
    for (int j = 0; j < samples; ++j) {
        double t = 2.0 * M_PI * j / samples;
        std::vector<double> point = {std::cos(t), std::sin(t)};
        std::vector<double> value = source.map.evaluate(point);
        std::snprintf(buf, sizeof buf, "%.17g", t);
        *os << buf;
        for (double v : value) {
            std::snprintf(buf, sizeof buf, "%.17g", v);
            *os << "," << buf;
        }
        *os << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tension/bitension analysis of polynomial sphere maps"};
    app.require_subcommand(1);

    std::string source_text;
    bool human = false, json = false;
    std::uint64_t seed = 42;
    int points = 200;
    double tol = 1e-9;
    auto* analyze = app.add_subcommand("analyze", "classify a map and print a report");
    analyze->add_option("source", source_text, "gallery name or construction expression")
        ->required();
    analyze->add_flag("--human", human, "render a prose report");
    analyze->add_flag("--json", json, "render JSON (default)");
    analyze->add_option("--seed", seed, "sampling seed for the numeric referee");
    analyze->add_option("--points", points, "sample count for the numeric referee");
    analyze->add_option("--tol", tol, "numeric zero tolerance");

    std::string construct_text;
    bool print_components = false;
    auto* construct = app.add_subcommand("construct", "build a map and print its metadata");
    construct->add_option("expr", construct_text, "construction expression")->required();
    construct->add_flag("--print", print_components, "print the component polynomials");

    std::string filter;
    auto* verify = app.add_subcommand("verify-paper", "run the built-in identity battery");
    verify->add_option("--filter", filter, "only run checks whose id contains this substring");

    std::string curve_text, out_path;
    int samples = 0;
    auto* emit = app.add_subcommand("emit-curve", "sample a circle-domain map into CSV");
    emit->add_option("source", curve_text, "map source with 4 components on the circle")
        ->required();
    emit->add_option("--samples", samples, "number of parameter samples")->required();
    emit->add_option("--out", out_path, "output file (stdout if omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(source_text, human && !json, seed, points, tol);
        if (construct->parsed()) return cmd_construct(construct_text, print_components);
        if (verify->parsed()) return cmd_verify_paper(filter);
        if (emit->parsed()) return cmd_emit_curve(curve_text, samples, out_path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const NotASphereMap& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNotASphereMap;
    } catch (const RouteDisagreement& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRouteDisagreement;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return 0;
}
