#include "kmap/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "kmap/ranking.hpp"

namespace kmap {

std::string_view metric_name(Metric metric) {
    switch (metric) {
    case Metric::pressure:
        return "pressure";
    case Metric::consequence:
        return "consequence";
    case Metric::amp_pressure:
        return "amp-pressure";
    case Metric::amp_consequence:
        return "amp-consequence";
    }
    return "";
}

std::optional<Metric> parse_metric(std::string_view name) {
    for (Metric m : {Metric::pressure, Metric::consequence, Metric::amp_pressure,
                     Metric::amp_consequence})
        if (metric_name(m) == name)
            return m;
    return std::nullopt;
}

std::string_view method_name(Method method) {
    switch (method) {
    case Method::k:
        return "k";
    case Method::impulse:
        return "impulse";
    case Method::both:
        return "both";
    }
    return "";
}

AnalysisReport analyze(const CognitiveMap& map, const AnalysisOptions& options) {
    AnalysisReport report;
    report.map_name = map.name();
    for (const Concept& c : map.concepts())
        report.labels.push_back(c.label);
    report.normalization = options.normalization;

    const bool want_k = options.method != Method::impulse;
    const bool want_impulse = options.method != Method::k;

    if (want_k) {
        KMatrix k = k_matrix(map, options.k);
        report.k_profile = influence_profile(k);
        if (options.include_matrix)
            report.k_matrix = std::move(k);
    }

    const CognitiveMap impulse_map =
        options.normalization ? normalize_map(map, *options.normalization) : map;
    report.stability = spectral_radius(impulse_map.adjacency());
    if (want_impulse && report.stability->stable)
        report.impulse_profile = impulse_profile(impulse_map, options.orientation);

    for (Metric m : options.metrics) {
        std::vector<RankEntry> k_rank;
        std::vector<RankEntry> impulse_rank;
        if (report.k_profile) {
            k_rank = rank_concepts(component(*report.k_profile, m));
            report.rank_tables.push_back({std::string(metric_name(m)) + "/k", k_rank});
        }
        if (report.impulse_profile) {
            impulse_rank = rank_concepts(component(*report.impulse_profile, m));
            report.rank_tables.push_back({std::string(metric_name(m)) + "/impulse", impulse_rank});
        }
        if (report.k_profile && report.impulse_profile)
            report.concordance.push_back(
                {std::string(metric_name(m)), compare_rankings(k_rank, impulse_rank)});
    }
    return report;
}

namespace {

using nlohmann::json;

std::string fixed3(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s(buf);
    if (s == "-0.000")
        s = "0.000";
    return s;
}

std::string exact(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string pad_left(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

const std::string& label_at(const AnalysisReport& r, ConceptId id) {
    static const std::string none;
    return id.value < r.labels.size() ? r.labels[id.value] : none;
}

const std::array<Metric, 4> kAllMetrics{Metric::pressure, Metric::consequence,
                                        Metric::amp_pressure, Metric::amp_consequence};

std::string render_text(const AnalysisReport& r) {
    std::string out = "# kmap report\n";
    if (!r.map_name.empty() || !r.labels.empty())
        out += "map: " + (r.map_name.empty() ? std::string("(unnamed)") : r.map_name) + " (" +
               std::to_string(r.labels.size()) + " concepts)\n";
    if (!r.labels.empty()) {
        out += "\n## concepts\n";
        for (std::size_t i = 0; i < r.labels.size(); ++i)
            out += pad_left(std::to_string(i + 1), 4) + "  " + r.labels[i] + "\n";
    }

    if (r.k_matrix) {
        const Matrix& k = r.k_matrix->values;
        out += "\n## K-matrix (row concept influences column concept)\n";
        out += "    ";
        for (std::size_t j = 0; j < k.cols(); ++j)
            out += pad_left(std::to_string(j + 1), 9);
        out += "\n";
        for (std::size_t i = 0; i < k.rows(); ++i) {
            out += pad_left(std::to_string(i + 1), 4);
            for (std::size_t j = 0; j < k.cols(); ++j)
                out += pad_left(fixed3(k(i, j)), 9);
            out += "\n";
        }
    }

    auto profile_block = [&](const char* title, const InfluenceProfile& p) {
        out += std::string("\n## ") + title + "\n";
        out += "   #";
        for (Metric m : kAllMetrics)
            out += pad_left(std::string(metric_name(m)), 17);
        out += "\n";
        for (std::size_t i = 0; i < p.pressure.size(); ++i) {
            out += pad_left(std::to_string(i + 1), 4);
            for (Metric m : kAllMetrics)
                out += pad_left(fixed3(component(p, m)[i]), 17);
            out += "\n";
        }
    };
    if (r.k_profile)
        profile_block("K-method profile", *r.k_profile);
    if (r.impulse_profile)
        profile_block("impulse profile", *r.impulse_profile);

    if (r.stability) {
        out += "\n## stability";
        if (r.normalization)
            out += " (W/" + exact(*r.normalization) + ")";
        out += "\nspectral radius: " + fixed3(r.stability->spectral_radius) +
               "\nstable: " + (r.stability->stable ? "yes" : "no") + "\n";
        if (!r.stability->converged)
            out += "warning: spectral radius estimate did not converge\n";
    }

    for (const RankTable& t : r.rank_tables) {
        out += "\n## rank: " + t.name + "\n";
        out += "rank  concept       value  label\n";
        for (std::size_t i = 0; i < t.entries.size(); ++i) {
            const RankEntry& e = t.entries[i];
            out += pad_left(std::to_string(i + 1), 4) + "  " +
                   pad_left(std::to_string(e.id.external()), 7) + "  " +
                   pad_left(fixed3(e.value), 10) + "  " + label_at(r, e.id) + "\n";
        }
    }

    if (!r.concordance.empty()) {
        out += "\n## concordance (Kendall tau, K-method vs impulse)\n";
        for (const Concordance& c : r.concordance)
            out += c.metric + ": " + fixed3(c.tau) + "\n";
    }
    return out;
}

std::string render_csv(const AnalysisReport& r) {
    std::string out = "section,name,row,col,value\n";
    auto line = [&](std::string_view section, std::string_view name, std::string row,
                    std::string col, const std::string& value) {
        out += std::string(section) + "," + std::string(name) + "," + row + "," + col + "," +
               value + "\n";
    };
    if (r.k_matrix) {
        const Matrix& k = r.k_matrix->values;
        for (std::size_t i = 0; i < k.rows(); ++i)
            for (std::size_t j = 0; j < k.cols(); ++j)
                line("k_matrix", "", std::to_string(i + 1), std::to_string(j + 1), exact(k(i, j)));
    }
    auto profile_rows = [&](std::string_view method, const InfluenceProfile& p) {
        for (Metric m : kAllMetrics) {
            const std::string name = std::string(metric_name(m)) + "/" + std::string(method);
            const auto values = component(p, m);
            for (std::size_t i = 0; i < values.size(); ++i)
                line("profile", name, "", std::to_string(i + 1), exact(values[i]));
        }
    };
    if (r.k_profile)
        profile_rows("k", *r.k_profile);
    if (r.impulse_profile)
        profile_rows("impulse", *r.impulse_profile);
    for (const RankTable& t : r.rank_tables)
        for (std::size_t i = 0; i < t.entries.size(); ++i)
            line("rank", t.name, std::to_string(i + 1), std::to_string(t.entries[i].id.external()),
                 exact(t.entries[i].value));
    if (r.stability) {
        line("stability", "spectral_radius", "", "", exact(r.stability->spectral_radius));
        line("stability", "stable", "", "", r.stability->stable ? "1" : "0");
        line("stability", "converged", "", "", r.stability->converged ? "1" : "0");
    }
    if (r.normalization)
        line("stability", "normalization", "", "", exact(*r.normalization));
    for (const Concordance& c : r.concordance)
        line("concordance", c.metric, "", "", exact(c.tau));
    return out;
}

json profile_json(const InfluenceProfile& p) {
    json j = json::object();
    for (Metric m : kAllMetrics) {
        const auto values = component(p, m);
        j[std::string(metric_name(m))] = std::vector<double>(values.begin(), values.end());
    }
    return j;
}

std::string render_json(const AnalysisReport& r) {
    json doc = json::object();
    doc["format"] = "kmap-report";
    doc["version"] = "1";
    if (!r.map_name.empty())
        doc["name"] = r.map_name;
    if (!r.labels.empty())
        doc["labels"] = r.labels;
    if (r.k_matrix) {
        json rows = json::array();
        const Matrix& k = r.k_matrix->values;
        for (std::size_t i = 0; i < k.rows(); ++i) {
            const auto row = k.row(i);
            rows.push_back(std::vector<double>(row.begin(), row.end()));
        }
        doc["k_matrix"] = std::move(rows);
    }
    if (r.k_profile || r.impulse_profile) {
        json profiles = json::object();
        if (r.k_profile)
            profiles["k"] = profile_json(*r.k_profile);
        if (r.impulse_profile)
            profiles["impulse"] = profile_json(*r.impulse_profile);
        doc["profiles"] = std::move(profiles);
    }
    if (!r.rank_tables.empty()) {
        json ranks = json::object();
        for (const RankTable& t : r.rank_tables) {
            json rows = json::array();
            for (std::size_t i = 0; i < t.entries.size(); ++i)
                rows.push_back({{"rank", i + 1},
                                {"id", t.entries[i].id.external()},
                                {"label", label_at(r, t.entries[i].id)},
                                {"value", t.entries[i].value}});
            ranks[t.name] = std::move(rows);
        }
        doc["ranks"] = std::move(ranks);
    }
    if (r.stability) {
        json s = {{"spectral_radius", r.stability->spectral_radius},
                  {"stable", r.stability->stable},
                  {"converged", r.stability->converged},
                  {"iterations", r.stability->iterations_used}};
        if (r.normalization)
            s["normalization"] = *r.normalization;
        doc["stability"] = std::move(s);
    }
    if (!r.concordance.empty()) {
        json c = json::object();
        for (const Concordance& e : r.concordance)
            c[e.metric] = e.tau;
        doc["concordance"] = std::move(c);
    }
    return doc.dump(2) + "\n";
}

}  // namespace

std::string render_report(const AnalysisReport& report, ReportFormat format) {
    switch (format) {
    case ReportFormat::text:
        return render_text(report);
    case ReportFormat::csv:
        return render_csv(report);
    case ReportFormat::json:
        return render_json(report);
    }
    return {};
}

}  // namespace kmap
