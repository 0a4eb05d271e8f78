#ifndef BINPACK_HEURISTICS_HPP
#define BINPACK_HEURISTICS_HPP

#include <optional>
#include <string>
#include <vector>

#include "binpack/geometry.hpp"

// Baseline online placement policies (first-fit and best-fit over extreme
// points) plus the candidate-point generation shared by every policy.

namespace binpack {

enum class Provenance : std::uint8_t { Origin, ExtremePoint, FullGrid };

struct CandidatePoint {
    int bin_index = 1;
    Vec3i point;
    Provenance provenance = Provenance::ExtremePoint;
};

struct PlacementDecision {
    std::string box_id;
    Placement placement;
    std::string policy_name;
    std::optional<double> score;
};

// Extreme points of one bin: the origin for an empty bin; otherwise, for
// each placed box, its three advanced corners plus their projections toward
// the walls/boxes along the two remaining axes. Deduplicated and sorted by
// (z, y, x). Points buried inside placed boxes or flush with the far walls
// are dropped.
std::vector<CandidatePoint> extreme_points(const BinState& bin);

// First feasible placement scanning bins in opening order, candidate points
// in (z, y, x) order and orientations in their declared order.
std::optional<PlacementDecision> first_fit(const Dims& box,
                                           const std::vector<BinState>& bins,
                                           const RobotConfig& cfg);

// Like first_fit, but among bins that admit a feasible placement picks the
// one with the highest current fill-rate (ties to the lower index).
std::optional<PlacementDecision> best_fit(const Dims& box,
                                          const std::vector<BinState>& bins,
                                          const RobotConfig& cfg);

// Oriented extents to try for a box, in canonical orientation order with
// duplicate extents removed (duplicates arise from equal sides).
std::vector<std::pair<Orientation, Vec3i>> distinct_orientations(
    const Dims& box, const RobotConfig& cfg);

}  // namespace binpack

#endif  // BINPACK_HEURISTICS_HPP
