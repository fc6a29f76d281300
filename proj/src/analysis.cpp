#include "mmgan/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

namespace mmgan {

double segment_distance(const Segment& x, const Segment& y) {
    int differ = 0;
    const auto& a = x.tiles();
    const auto& b = y.tiles();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++differ;
    return static_cast<double>(differ) / static_cast<double>(kSegmentTiles);
}

double segment_novelty(const Segment& x, const std::vector<Segment>& pool) {
    if (pool.empty()) throw ContractViolation("novelty needs a non-empty reference collection");
    double total = 0.0;
    for (const auto& y : pool) total += segment_distance(x, y);
    return total / static_cast<double>(pool.size());
}

namespace {

/// Mean over i of the mean distance from member i to the others (positional).
double mean_leave_one_out(const std::vector<Segment>& s) {
    const std::size_t n = s.size();
    if (n < 2) return 0.0;
    std::vector<double> row_sum(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = segment_distance(s[i], s[j]);
            row_sum[i] += d;
            row_sum[j] += d;
        }
    double total = 0.0;
    for (double r : row_sum) total += r / static_cast<double>(n - 1);
    return total / static_cast<double>(n);
}

}  // namespace

double level_novelty(const std::vector<Segment>& level, RemovalMode mode) {
    if (level.size() < 2) throw ContractViolation("level novelty needs at least two segments");
    if (mode == RemovalMode::Positional) return mean_leave_one_out(level);

    double total = 0.0;
    for (const auto& x : level) {
        std::vector<Segment> rest;
        for (const auto& y : level)
            if (!(y == x)) rest.push_back(y);
        total += rest.empty() ? 0.0 : segment_novelty(x, rest);
    }
    return total / static_cast<double>(level.size());
}

SummaryStats summarize(const std::vector<double>& values) {
    SummaryStats s;
    s.count = values.size();
    if (values.empty()) return s;
    double sum = 0.0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(values.size());
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.stdev = values.size() > 1 ? std::sqrt(sq / static_cast<double>(values.size() - 1)) : 0.0;
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    s.min = *lo;
    s.max = *hi;
    return s;
}

std::vector<Segment> unique_segments(const std::vector<Segment>& segments) {
    std::set<Segment> seen;
    std::vector<Segment> out;
    for (const auto& s : segments)
        if (seen.insert(s).second) out.push_back(s);
    return out;
}

DistinctStats distinct_stats(const std::vector<Segment>& segments) {
    if (segments.empty()) throw ContractViolation("distinct statistics need at least one segment");
    DistinctStats d;
    const auto set = unique_segments(segments);
    d.segments = segments.size();
    d.distinct = set.size();
    d.distinct_percent = 100.0 * static_cast<double>(d.distinct) / static_cast<double>(d.segments);
    d.novelty_all = mean_leave_one_out(segments);
    d.novelty_set = mean_leave_one_out(set);
    return d;
}

std::vector<CornerRow> corner_breakdown(const std::vector<Level>& levels) {
    std::vector<CornerRow> rows;
    for (auto t : {SegmentType::LowerLeft, SegmentType::LowerRight, SegmentType::UpperRight, SegmentType::UpperLeft}) {
        std::vector<Segment> group;
        for (const auto& level : levels)
            for (const auto& p : level.placements)
                if (p.type == t) group.push_back(p.segment);
        CornerRow row{t, std::nullopt};
        if (!group.empty()) row.stats = distinct_stats(group);
        rows.push_back(row);
    }
    return rows;
}

NoveltyReport novelty_report(const std::string& label, const std::vector<std::vector<Segment>>& levels,
                             RemovalMode mode) {
    NoveltyReport r;
    r.label = label;
    std::vector<Segment> all;
    for (const auto& level : levels) {
        if (level.size() >= 2) r.level_novelty.push_back(level_novelty(level, mode));
        all.insert(all.end(), level.begin(), level.end());
    }
    r.level_summary = summarize(r.level_novelty);
    if (!all.empty()) r.collection = distinct_stats(all);
    return r;
}

json report_to_json(const NoveltyReport& r) {
    const auto& s = r.level_summary;
    const auto& c = r.collection;
    json doc = {{"label", r.label},
                {"level_novelty", r.level_novelty},
                {"level_summary", {{"count", s.count}, {"mean", s.mean}, {"stdev", s.stdev}, {"min", s.min}, {"max", s.max}}},
                {"segments", c.segments},
                {"distinct", c.distinct},
                {"distinct_percent", c.distinct_percent},
                {"novelty_all", c.novelty_all},
                {"novelty_set", c.novelty_set}};
    json corners = json::array();
    for (const auto& row : r.corners) {
        json j = {{"type", type_key(row.type)}};
        if (row.stats) {
            j["segments"] = row.stats->segments;
            j["distinct"] = row.stats->distinct;
            j["distinct_percent"] = row.stats->distinct_percent;
            j["novelty_all"] = row.stats->novelty_all;
            j["novelty_set"] = row.stats->novelty_set;
        } else {
            j["note"] = "no segments of this type";
        }
        corners.push_back(std::move(j));
    }
    doc["corners"] = std::move(corners);
    return doc;
}

std::string report_to_tsv(const std::vector<NoveltyReport>& reports) {
    std::ostringstream out;
    out << std::fixed;
    out << "# level novelty\nType\tN\tMean\tStDev\tMin\tMax\n";
    for (const auto& r : reports) {
        const auto& s = r.level_summary;
        out << r.label << '\t' << s.count << '\t' << std::setprecision(4) << s.mean << '\t' << s.stdev << '\t' << s.min
            << '\t' << s.max << '\n';
    }
    out << "\n# distinct segments\nType\tSegments\tDistinct\tPercent\tNoveltyAll\tNoveltySet\n";
    for (const auto& r : reports) {
        const auto& c = r.collection;
        out << r.label << '\t' << c.segments << '\t' << c.distinct << '\t' << std::setprecision(1) << c.distinct_percent
            << '\t' << std::setprecision(4) << c.novelty_all << '\t' << c.novelty_set << '\n';
    }
    bool header = false;
    for (const auto& r : reports) {
        for (const auto& row : r.corners) {
            if (!header) {
                out << "\n# corners\nSource\tCorner\tSegments\tDistinct\tPercent\tNoveltyAll\tNoveltySet\n";
                header = true;
            }
            out << r.label << '\t' << type_name(row.type) << '\t';
            if (!row.stats) {
                out << "-\t-\t-\t-\t-\t# no segments\n";
                continue;
            }
            const auto& c = *row.stats;
            out << c.segments << '\t' << c.distinct << '\t' << std::setprecision(1) << c.distinct_percent << '\t'
                << std::setprecision(4) << c.novelty_all << '\t' << c.novelty_set << '\n';
        }
    }
    return out.str();
}

}  // namespace mmgan
