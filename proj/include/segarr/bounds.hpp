#pragma once

#include <string>
#include <vector>

#include "segarr/families.hpp"

namespace segarr {

enum class Quantity { P, C, PMinusC, E, N, M };
enum class Direction { Lower, Upper, Equal };

// One bound instantiated at concrete (m, k1, k2).
struct BoundRecord {
    std::string family;
    std::string name;
    Quantity quantity;
    Direction direction;
    long long value = 0;
    bool conjecture = false;  // recorded but never checked
};

// All bounds applicable to the given family at (m, k1, k2). Known family
// tags: any, tree, forest, unicyclic, cactus, halin, k3free, k3free-trimmed,
// max-planar, max-outerplanar.
std::vector<BoundRecord> bound_table(const std::string& family, long long m, long long k1,
                                     long long k2);

const std::vector<std::string>& known_families();

struct BoundCheck {
    BoundRecord record;
    long long actual = 0;
    long long slack = 0;  // actual - bound
    bool satisfied = false;
};

struct BoundCheckReport {
    ArrangementStats stats;
    FamilyReport families;
    bool trimmed = false;  // trim(M) == M
    std::vector<BoundCheck> checks;

    bool all_satisfied() const {
        for (const auto& c : checks)
            if (!c.satisfied) return false;
        return true;
    }
};

// Evaluates the unconditional bounds plus every family bound whose classifier
// flag holds. A violation marks the check unsatisfied; since the bounds are
// theorems, any violation indicates a bug in the toolkit.
BoundCheckReport check_instance(const SegmentSet& M);

std::string quantity_name(Quantity q);
std::string direction_name(Direction d);

}  // namespace segarr
