#pragma once

#include <vector>

#include "segarr/geometry.hpp"

namespace segarr {

// Canonicalized universe of segments: collinear intersecting segments merged,
// duplicates collapsed, deterministic order. Immutable after construction.
class SegmentSet {
  public:
    SegmentSet() = default;
    explicit SegmentSet(std::vector<Segment> segments)
        : segments_(merge_collinear(std::move(segments))) {}

    const std::vector<Segment>& segments() const { return segments_; }
    const Segment& operator[](size_t i) const { return segments_[i]; }
    size_t m() const { return segments_.size(); }
    bool empty() const { return segments_.empty(); }

    bool operator==(const SegmentSet& o) const { return segments_ == o.segments_; }

  private:
    std::vector<Segment> segments_;
};

SegmentSet clip_lines_to_segments(const std::vector<Line>& lines);

}  // namespace segarr
