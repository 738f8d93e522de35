#pragma once

#include <optional>
#include <string>
#include <vector>

#include "segarr/bounds.hpp"
#include "segarr/buffon.hpp"
#include "segarr/efl.hpp"

namespace segarr {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A segment file holds either "segments" or "lines" (exactly one), with
// coordinates as integers or "p/q" strings. Unknown fields are rejected.
struct SegmentFileContent {
    std::optional<SegmentSet> segments;
    std::optional<std::vector<Line>> lines;
};

SegmentFileContent parse_segment_file(const std::string& text);
SegmentFileContent load_segment_file(const std::string& path);

std::string serialize_segments(const SegmentSet& M);
std::string serialize_lines(const std::vector<Line>& lines);

// Full analysis report: stats, classification, bound checks. Stable key
// order, machine-parseable.
std::string analysis_report(const SegmentSet& M);

struct ColoringOutcome {
    std::string algorithm;
    EflColoring coloring;
    bool valid = false;
    bool fallback_used = false;
    long long w = 0;
    long long m = 0;
};

std::string coloring_report(const ColoringOutcome& outcome);

std::string buffon_summary_line(const BuffonSummary& s);
std::string scaling_table(const std::vector<ScalingRow>& rows);

}  // namespace segarr
