#include "segarr/segment_set.hpp"

namespace segarr {

SegmentSet clip_lines_to_segments(const std::vector<Line>& lines) {
    return SegmentSet(clip_lines(lines));
}

}  // namespace segarr
