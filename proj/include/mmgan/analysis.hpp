#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mmgan/assembly.hpp"
#include "mmgan/json_io.hpp"

namespace mmgan {

/// Fraction of the 224 positions whose tile codes differ.
double segment_distance(const Segment& x, const Segment& y);

/// Mean distance from x to every member of `pool` (which must be non-empty).
double segment_novelty(const Segment& x, const std::vector<Segment>& pool);

enum class RemovalMode {
    Positional,  // drop only x's own slot; duplicates of x stay (distance 0)
    AllCopies,   // drop every segment equal to x
};

/// Mean over members of their novelty with respect to the rest of the level.
/// Needs at least two segments. In AllCopies mode a member with no distinct
/// partner contributes 0.
double level_novelty(const std::vector<Segment>& level, RemovalMode mode = RemovalMode::Positional);

struct SummaryStats {
    std::size_t count = 0;
    double mean = 0.0;
    double stdev = 0.0;  // sample standard deviation (n - 1)
    double min = 0.0;
    double max = 0.0;
};

SummaryStats summarize(const std::vector<double>& values);

struct DistinctStats {
    std::size_t segments = 0;
    std::size_t distinct = 0;
    double distinct_percent = 0.0;
    double novelty_all = 0.0;  // mean of N(x, S - {x}) over the collection
    double novelty_set = 0.0;  // same over the duplicate-free collection
};

/// Needs a non-empty collection. A one-element collection (or set) has
/// novelty 0.
DistinctStats distinct_stats(const std::vector<Segment>& segments);

std::vector<Segment> unique_segments(const std::vector<Segment>& segments);

struct CornerRow {
    SegmentType type = SegmentType::LowerLeft;
    std::optional<DistinctStats> stats;  // empty when no segment of this corner exists
};

/// Per corner type (LowerLeft, LowerRight, UpperRight, UpperLeft order),
/// distinct-segment statistics of the segments generated for it.
std::vector<CornerRow> corner_breakdown(const std::vector<Level>& levels);

struct NoveltyReport {
    std::string label;
    std::vector<double> level_novelty;
    SummaryStats level_summary;
    DistinctStats collection;
    std::vector<CornerRow> corners;  // only filled for generated levels
};

/// Level novelty per level plus distinct statistics over every segment of
/// every level.
NoveltyReport novelty_report(const std::string& label, const std::vector<std::vector<Segment>>& levels,
                             RemovalMode mode = RemovalMode::Positional);

json report_to_json(const NoveltyReport& r);

/// Tab-separated tables: level novelty, distinct segments, corners.
std::string report_to_tsv(const std::vector<NoveltyReport>& reports);

}  // namespace mmgan
