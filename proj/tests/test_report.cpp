#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include <json.hpp>

#include "kmap/errors.hpp"
#include "kmap/ranking.hpp"
#include "kmap/report.hpp"
#include "test_support.hpp"

using namespace kmap;
using kmap::testing::ids;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

std::vector<std::string> tokens(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    for (std::string t; in >> t;)
        out.push_back(t);
    return out;
}

// Lines following a "## <title>" header up to the next blank line.
std::vector<std::string> section(const std::string& text, const std::string& title) {
    const auto lines = lines_of(text);
    const auto it = std::find(lines.begin(), lines.end(), "## " + title);
    REQUIRE(it != lines.end());
    std::vector<std::string> out;
    for (auto l = it + 1; l != lines.end() && !l->empty(); ++l)
        out.push_back(*l);
    return out;
}

AnalysisReport full_report(const Matrix& w, std::optional<double> c, std::size_t workers = 1) {
    AnalysisOptions options;
    options.normalization = c;
    options.k.workers = workers;
    return analyze(map_from_adjacency(w), options);
}

}  // namespace

TEST_CASE("render_report: empty report is header only") {
    const AnalysisReport empty;
    CHECK(render_report(empty, ReportFormat::text) == "# kmap report\n");
    CHECK(render_report(empty, ReportFormat::csv) == "section,name,row,col,value\n");
    const auto doc = nlohmann::json::parse(render_report(empty, ReportFormat::json));
    CHECK(doc.size() == 2);
    CHECK(doc["format"] == "kmap-report");
    CHECK(doc["version"] == "1");
}

TEST_CASE("render_report: K-matrix text block to 3 decimals") {
    AnalysisReport r;
    r.k_matrix = k_matrix(map_from_adjacency(kmap::testing::health_signed_w()));
    const auto block = section(render_report(r, ReportFormat::text),
                               "K-matrix (row concept influences column concept)");
    REQUIRE(block.size() == 8);
    CHECK(tokens(block[0]) == std::vector<std::string>{"1", "2", "3", "4", "5", "6", "7"});
    const Matrix published = kmap::testing::published_k_signed();
    for (std::size_t i = 0; i < 7; ++i) {
        const auto row = tokens(block[i + 1]);
        REQUIRE(row.size() == 8);
        CHECK(row[0] == std::to_string(i + 1));
        for (std::size_t j = 0; j < 7; ++j) {
            const std::string& cell = row[j + 1];
            CHECK(cell.size() - cell.find('.') == 4);  // three decimals
            CHECK(std::abs(std::stod(cell) - published(i, j)) <= 1e-3 + 1e-12);
        }
    }
}

TEST_CASE("render_report: pressure table of the weighted map") {
    AnalysisOptions options;
    options.method = Method::k;
    options.metrics = {Metric::pressure};
    const AnalysisReport r = analyze(map_from_adjacency(kmap::testing::health_weighted_w()), options);
    const auto table = section(render_report(r, ReportFormat::text), "rank: pressure/k");
    REQUIRE(table.size() == 8);
    CHECK(tokens(table[1]) == std::vector<std::string>{"1", "5", "10.100", "C5"});
    CHECK(tokens(table[2]) == std::vector<std::string>{"2", "2", "7.867", "C2"});
}

TEST_CASE("render_report: machine formats carry full precision") {
    const AnalysisReport r = full_report(kmap::testing::health_weighted_w(), std::nullopt);
    const auto doc = nlohmann::json::parse(render_report(r, ReportFormat::json));
    for (const char* key : {"k_matrix", "profiles", "ranks", "stability", "concordance"})
        CHECK(doc.contains(key));
    CHECK(doc["k_matrix"][4][0].get<double>() == r.k_matrix->values(4, 0));
    CHECK(doc["profiles"]["impulse"]["pressure"][4].get<double>() ==
          r.impulse_profile->pressure[4]);
    CHECK(doc["stability"]["stable"] == true);
    CHECK(doc["ranks"]["pressure/k"].size() == 7);

    const auto csv = lines_of(render_report(r, ReportFormat::csv));
    CHECK(csv[0] == "section,name,row,col,value");
    CHECK(std::count_if(csv.begin(), csv.end(),
                        [](const std::string& l) { return l.starts_with("k_matrix,"); }) == 49);
    const std::string first = csv[1];
    CHECK(first.starts_with("k_matrix,,1,1,"));
}

TEST_CASE("analyze: impulse fields only when W/c is stable") {
    const AnalysisReport raw = full_report(kmap::testing::health_signed_w(), std::nullopt);
    CHECK_FALSE(raw.stability->stable);
    CHECK_FALSE(raw.impulse_profile.has_value());
    CHECK(raw.concordance.empty());
    for (const RankTable& t : raw.rank_tables)
        CHECK(t.name.ends_with("/k"));

    const AnalysisReport scaled = full_report(kmap::testing::health_signed_w(), 1.2);
    CHECK(scaled.stability->stable);
    CHECK(scaled.impulse_profile.has_value());
    CHECK(scaled.concordance.size() == 4);
    CHECK(scaled.rank_tables.size() == 8);

    // every rank table is a permutation of the concepts
    for (const RankTable& t : scaled.rank_tables) {
        auto order = order_of(t.entries);
        std::sort(order.begin(), order.end());
        CHECK(order == ids({1, 2, 3, 4, 5, 6, 7}));
    }
}

TEST_CASE("reports are byte-identical across worker counts") {
    std::mt19937_64 rng(17);
    std::vector<Matrix> maps{kmap::testing::health_signed_w(), kmap::testing::health_weighted_w()};
    for (int i = 0; i < 5; ++i)
        maps.push_back(kmap::testing::random_map(rng, 8, 0.4).adjacency());
    for (const Matrix& w : maps)
        for (ReportFormat f : {ReportFormat::text, ReportFormat::csv, ReportFormat::json}) {
            const std::string serial = render_report(full_report(w, 12.0, 1), f);
            CHECK(render_report(full_report(w, 12.0, 1), f) == serial);
            for (std::size_t workers : {2u, 5u, 0u})
                CHECK(render_report(full_report(w, 12.0, workers), f) == serial);
        }
}

TEST_CASE("normalization never changes K-method output") {
    std::mt19937_64 rng(23);
    std::vector<Matrix> maps{kmap::testing::health_signed_w(), kmap::testing::health_weighted_w()};
    for (int i = 0; i < 10; ++i)
        maps.push_back(kmap::testing::random_map(rng, 7).adjacency());
    for (const Matrix& w : maps) {
        const AnalysisReport base = full_report(w, std::nullopt);
        for (double c : {1.2, 12.0, -3.0}) {
            const AnalysisReport r = full_report(w, c);
            CHECK(r.k_matrix->values == base.k_matrix->values);
            for (const RankTable& t : r.rank_tables) {
                if (!t.name.ends_with("/k"))
                    continue;
                const auto match = std::find_if(base.rank_tables.begin(), base.rank_tables.end(),
                                                 [&](const RankTable& b) { return b.name == t.name; });
                REQUIRE(match != base.rank_tables.end());
                CHECK(order_of(t.entries) == order_of(match->entries));
            }
        }
    }
}

TEST_CASE("compare_rankings") {
    const auto forward = ids({1, 2, 3, 4, 5, 6, 7});
    const auto backward = ids({7, 6, 5, 4, 3, 2, 1});
    CHECK(compare_rankings(forward, forward) == 1.0);
    CHECK(compare_rankings(forward, backward) == -1.0);

    const auto psi = ids({5, 2, 6, 7, 3, 4, 1});
    const auto psi_imp = ids({4, 1, 2, 5, 3, 7, 6});
    const double tau = compare_rankings(psi, psi_imp);
    CHECK(tau == doctest::Approx(kmap::testing::kendall_pairs(psi, psi_imp)).epsilon(1e-15));
    CHECK(tau == doctest::Approx(-1.0 / 3.0));

    CHECK(compare_rankings(ids({3}), ids({3})) == 1.0);
    CHECK(compare_rankings(std::vector<ConceptId>{}, std::vector<ConceptId>{}) == 1.0);

    CHECK_THROWS_AS(compare_rankings(ids({1, 2, 3}), ids({1, 2})), RankingMismatch);
    CHECK_THROWS_AS(compare_rankings(ids({1, 2, 3}), ids({1, 2, 4})), RankingMismatch);
    CHECK_THROWS_AS(compare_rankings(ids({1, 1, 3}), ids({1, 2, 3})), RankingMismatch);
    CHECK_THROWS_AS(compare_rankings(ids({1, 2, 3}), ids({3, 3, 1})), RankingMismatch);

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 29);
        std::vector<ConceptId> a(n);
        for (std::size_t i = 0; i < n; ++i)
            a[i] = ConceptId{i * 3};  // sparse ids
        std::vector<ConceptId> b = a;
        std::shuffle(a.begin(), a.end(), rng);
        std::shuffle(b.begin(), b.end(), rng);
        const double t = compare_rankings(a, b);
        CHECK(t >= -1.0);
        CHECK(t <= 1.0);
        CHECK(t == doctest::Approx(kmap::testing::kendall_pairs(a, b)).epsilon(1e-14));
        CHECK(compare_rankings(b, a) == t);
    }
}

TEST_CASE("metric names") {
    for (Metric m : {Metric::pressure, Metric::consequence, Metric::amp_pressure,
                     Metric::amp_consequence})
        CHECK(parse_metric(metric_name(m)) == m);
    CHECK_FALSE(parse_metric("pressure ").has_value());
    CHECK(method_name(Method::both) == "both");
}
