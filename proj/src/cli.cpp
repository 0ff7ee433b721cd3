#include "kmap/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kmap/errors.hpp"
#include "kmap/impulse.hpp"
#include "kmap/map_io.hpp"
#include "kmap/report.hpp"

namespace kmap {

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GlobalOptions {
    std::string format = "text";
    std::optional<double> normalize;
    std::size_t path_cap = kDefaultPathCap;
    std::size_t parallel = 1;
    std::string input_format;
};

ReportFormat report_format(const std::string& name) {
    if (name == "text")
        return ReportFormat::text;
    if (name == "csv")
        return ReportFormat::csv;
    return ReportFormat::json;
}

CognitiveMap load(const std::string& path, const GlobalOptions& g) {
    std::optional<MapFormat> fmt;
    if (g.input_format == "json")
        fmt = MapFormat::json;
    else if (g.input_format == "csv")
        fmt = MapFormat::csv_edges;
    return load_map(path, fmt);
}

std::vector<double> parse_list(std::string_view text, const char* flag) {
    std::vector<double> out;
    while (true) {
        const auto comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        while (!item.empty() && item.front() == ' ')
            item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ')
            item.remove_suffix(1);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
            throw UsageError(std::string(flag) + ": cannot parse '" + std::string(item) + "'");
        out.push_back(v);
        if (comma == std::string_view::npos)
            break;
        text = text.substr(comma + 1);
    }
    return out;
}

/// "all-ones", "unit" (concept 1), "unit:<k>" or a comma-separated list.
std::vector<double> parse_pulse(const std::string& spec, std::size_t n) {
    if (spec == "all-ones")
        return std::vector<double>(n, 1.0);
    if (spec == "unit" || spec.starts_with("unit:")) {
        std::size_t k = 1;
        if (spec.size() > 5) {
            const auto [ptr, ec] = std::from_chars(spec.data() + 5, spec.data() + spec.size(), k);
            if (ec != std::errc{} || ptr != spec.data() + spec.size())
                throw UsageError("--p0: cannot parse concept in '" + spec + "'");
        }
        if (k < 1 || k > n)
            throw UsageError("--p0: concept " + std::to_string(k) + " is out of range");
        std::vector<double> p(n, 0.0);
        p[k - 1] = 1.0;
        return p;
    }
    auto p = parse_list(spec, "--p0");
    if (p.size() != n)
        throw UsageError("--p0 needs " + std::to_string(n) + " entries");
    return p;
}

std::vector<double> parse_initial(const std::string& spec, std::size_t n) {
    if (spec == "zero")
        return std::vector<double>(n, 0.0);
    auto v = parse_list(spec, "--v-init");
    if (v.size() != n)
        throw UsageError("--v-init needs " + std::to_string(n) + " entries");
    return v;
}

std::string fmt_value(double v, ReportFormat format) {
    char buf[64];
    if (format == ReportFormat::text) {
        std::snprintf(buf, sizeof buf, "%.3f", v);
        return buf;
    }
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void print_vectors(std::ostream& out, const std::vector<std::pair<std::string, std::vector<double>>>& rows,
                   std::size_t n, ReportFormat format) {
    if (format == ReportFormat::json) {
        nlohmann::json doc = nlohmann::json::object();
        for (const auto& [name, values] : rows)
            doc[name] = values;
        out << doc.dump(2) << "\n";
        return;
    }
    const char* sep = format == ReportFormat::csv ? "," : "  ";
    out << (format == ReportFormat::csv ? "step" : "# step");
    for (std::size_t i = 0; i < n; ++i)
        out << sep << (format == ReportFormat::csv ? "" : "v") << i + 1;
    out << "\n";
    for (const auto& [name, values] : rows) {
        out << name;
        for (double v : values)
            out << sep << fmt_value(v, format);
        out << "\n";
    }
}

AnalysisReport bare_report(const CognitiveMap& map) {
    AnalysisReport r;
    r.map_name = map.name();
    for (const Concept& c : map.concepts())
        r.labels.push_back(c.label);
    return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cognitive map analysis: K-method and impulse method", "kmap"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    double normalize = 0.0;
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    auto* normalize_opt = app.add_option(
        "--normalize", normalize, "Divide W by c before impulse analysis (K-method uses raw W)");
    app.add_option("--path-cap", g.path_cap, "Maximum simple paths per concept pair")
        ->check(CLI::PositiveNumber);
    app.add_option("--parallel", g.parallel, "Worker threads for the K-matrix (0 = all cores)");
    app.add_option("--input-format", g.input_format, "Map format (default: from extension)")
        ->check(CLI::IsMember({"json", "csv"}));

    std::string map_path;
    auto add_map = [&](CLI::App* sub) {
        sub->add_option("map", map_path, "Map file (.json or .csv edge list)")->required();
    };

    auto* kmatrix = app.add_subcommand("kmatrix", "Print the K-matrix");
    add_map(kmatrix);

    std::string metric = "pressure";
    std::string method = "k";
    auto* rank = app.add_subcommand("rank", "Rank concepts by a collective characteristic");
    add_map(rank);
    rank->add_option("--metric", metric)
        ->check(CLI::IsMember({"pressure", "consequence", "amp-pressure", "amp-consequence"}));
    rank->add_option("--method", method)->check(CLI::IsMember({"k", "impulse", "both"}));

    auto* stability = app.add_subcommand("stability", "Spectral radius of W (or W/c)");
    add_map(stability);

    std::string p0_spec = "all-ones";
    std::string v_init_spec = "zero";
    std::optional<std::size_t> steps;
    auto* impulse = app.add_subcommand("impulse", "Impulse trajectory or closed-form limit");
    add_map(impulse);
    impulse->add_option("--p0", p0_spec, "Initial pulse: list, unit, unit:<k> or all-ones");
    impulse->add_option("--v-init", v_init_spec, "Initial values: list or zero");
    impulse->add_option("--steps", steps, "Iterate this many steps instead of the closed form");

    auto* compare = app.add_subcommand("compare", "Full K-method vs impulse report");
    add_map(compare);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }

    if (normalize_opt->count() > 0) {
        if (normalize == 0.0 || !std::isfinite(normalize))
            throw UsageError("--normalize must be a finite nonzero number");
        g.normalize = normalize;
    }
    const ReportFormat format = report_format(g.format);
    const CognitiveMap map = load(map_path, g);
    const KOptions k_options{g.path_cap, g.parallel};
    auto impulse_map = [&] { return g.normalize ? normalize_map(map, *g.normalize) : map; };

    if (kmatrix->parsed()) {
        AnalysisReport r = bare_report(map);
        r.k_matrix = k_matrix(map, k_options);
        out << render_report(r, format);
        return exit_code::ok;
    }

    if (stability->parsed()) {
        AnalysisReport r = bare_report(map);
        r.stability = spectral_radius(impulse_map().adjacency());
        r.normalization = g.normalize;
        out << render_report(r, format);
        return exit_code::ok;
    }

    if (rank->parsed() || compare->parsed()) {
        AnalysisOptions options;
        options.k = k_options;
        options.normalization = g.normalize;
        if (rank->parsed()) {
            options.method = method == "k" ? Method::k
                             : method == "impulse" ? Method::impulse
                                                   : Method::both;
            options.metrics = {*parse_metric(metric)};
            options.include_matrix = false;
        }
        AnalysisReport r = analyze(map, options);
        if (options.method != Method::k && !r.impulse_profile)
            throw Unstable(r.stability->spectral_radius);
        if (rank->parsed()) {
            r.k_profile.reset();
            r.impulse_profile.reset();
            if (options.method == Method::k) {
                r.stability.reset();
                r.normalization.reset();
            }
        }
        out << render_report(r, format);
        return exit_code::ok;
    }

    // impulse
    const CognitiveMap m = impulse_map();
    const auto p0 = parse_pulse(p0_spec, m.size());
    const auto v0 = parse_initial(v_init_spec, m.size());
    std::vector<std::pair<std::string, std::vector<double>>> rows;
    if (steps) {
        const ImpulseState s = impulse_simulate(m, v0, p0, *steps);
        for (std::size_t i = 0; i < s.trajectory.size(); ++i)
            rows.emplace_back(std::to_string(i), s.trajectory[i]);
        if (format == ReportFormat::json) {
            nlohmann::json doc = {{"trajectory", s.trajectory}, {"pulses", s.pulses}};
            out << doc.dump(2) << "\n";
            return exit_code::ok;
        }
    } else {
        rows.emplace_back(format == ReportFormat::json ? "limit" : "inf",
                          impulse_closed_form(m, v0, p0));
    }
    print_vectors(out, rows, m.size(), format);
    return exit_code::ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run(args, out, err);
    } catch (const UsageError& e) {
        err << "kmap: " << e.what() << "\n";
        return exit_code::usage;
    } catch (const ParseError& e) {
        err << "kmap: parse error: " << e.what() << "\n";
        return exit_code::parse;
    } catch (const InvalidMap& e) {
        err << "kmap: invalid map: " << e.what() << "\n";
        return exit_code::parse;
    } catch (const Unstable& e) {
        err << "kmap: " << e.what() << "\n";
        return exit_code::unstable;
    } catch (const DivergenceDetected& e) {
        err << "kmap: " << e.what() << "\n";
        return exit_code::unstable;
    } catch (const PathExplosion& e) {
        err << "kmap: " << e.what() << " (raise --path-cap)\n";
        return exit_code::path_explosion;
    } catch (const std::exception& e) {
        err << "kmap: " << e.what() << "\n";
        return exit_code::failure;
    }
}

}  // namespace kmap
