#include "binpack/heuristics.hpp"

#include <algorithm>

namespace binpack {

namespace {

bool point_covered(const Vec3i& p, const Placement& q) {
    return p.x >= q.x() && p.x < q.xe() &&  //
           p.y >= q.y() && p.y < q.ye() &&  //
           p.z >= q.z() && p.z < q.ze();
}

bool point_covered_by_any(const Vec3i& p, const BinState& bin) {
    for (const Placement& q : bin.placements) {
        if (point_covered(p, q)) return true;
    }
    return false;
}

// Slides the point toward the origin along one axis until it lands on a box
// face or the bin wall. The ray keeps its other two coordinates; a box
// blocks it when the ray passes through the box's cross-section.
Vec3i project_down(Vec3i p, int axis, const BinState& bin) {
    int* coord = axis == 0 ? &p.x : axis == 1 ? &p.y : &p.z;
    const int u = axis == 0 ? p.y : p.x;
    const int v = axis == 2 ? p.y : p.z;
    int best = 0;
    for (const Placement& q : bin.placements) {
        int lo_u, hi_u, lo_v, hi_v, face;
        if (axis == 0) {
            lo_u = q.y(); hi_u = q.ye(); lo_v = q.z(); hi_v = q.ze();
            face = q.xe();
        } else if (axis == 1) {
            lo_u = q.x(); hi_u = q.xe(); lo_v = q.z(); hi_v = q.ze();
            face = q.ye();
        } else {
            lo_u = q.x(); hi_u = q.xe(); lo_v = q.y(); hi_v = q.ye();
            face = q.ze();
        }
        if (u >= lo_u && u < hi_u && v >= lo_v && v < hi_v &&
            face <= *coord) {
            best = std::max(best, face);
        }
    }
    *coord = best;
    return p;
}

void push_point(std::vector<Vec3i>& pts, const Vec3i& p,
                const BinState& bin) {
    if (p.x >= bin.length || p.y >= bin.breadth || p.z >= bin.height) return;
    if (point_covered_by_any(p, bin)) return;
    pts.push_back(p);
}

}  // namespace

std::vector<CandidatePoint> extreme_points(const BinState& bin) {
    std::vector<CandidatePoint> out;
    if (bin.placements.empty()) {
        out.push_back({bin.index, {0, 0, 0}, Provenance::Origin});
        return out;
    }

    std::vector<Vec3i> pts;
    if (!point_covered_by_any({0, 0, 0}, bin)) pts.push_back({0, 0, 0});
    for (const Placement& q : bin.placements) {
        const Vec3i seeds[3] = {{q.xe(), q.y(), q.z()},
                                {q.x(), q.ye(), q.z()},
                                {q.x(), q.y(), q.ze()}};
        const int advanced[3] = {0, 1, 2};
        for (int s = 0; s < 3; ++s) {
            push_point(pts, seeds[s], bin);
            for (int axis = 0; axis < 3; ++axis) {
                if (axis == advanced[s]) continue;
                push_point(pts, project_down(seeds[s], axis, bin), bin);
            }
        }
    }

    std::sort(pts.begin(), pts.end(), [](const Vec3i& a, const Vec3i& b) {
        return std::tie(a.z, a.y, a.x) < std::tie(b.z, b.y, b.x);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    out.reserve(pts.size());
    for (const Vec3i& p : pts) {
        const bool origin = p == Vec3i{0, 0, 0};
        out.push_back({bin.index, p,
                       origin ? Provenance::Origin : Provenance::ExtremePoint});
    }
    return out;
}

std::vector<std::pair<Orientation, Vec3i>> distinct_orientations(
    const Dims& box, const RobotConfig& cfg) {
    std::vector<std::pair<Orientation, Vec3i>> out;
    for (Orientation o : kAllOrientations) {
        if (!orientation_allowed(box, o, cfg)) continue;
        const auto e = orient(box, o);
        const Vec3i ext{e[0], e[1], e[2]};
        bool seen = false;
        for (const auto& [prev_o, prev_e] : out) {
            if (prev_e == ext) {
                seen = true;
                break;
            }
        }
        if (!seen) out.emplace_back(o, ext);
    }
    return out;
}

namespace {

// Shared scan for FF/BF: first feasible placement in one bin, candidate
// points in (z, y, x) order, orientations in declared order.
std::optional<Placement> first_feasible_in_bin(const Dims& box,
                                               const BinState& bin,
                                               const RobotConfig& cfg) {
    const auto orientations = distinct_orientations(box, cfg);
    if (orientations.empty()) return std::nullopt;
    for (const CandidatePoint& cand : extreme_points(bin)) {
        for (const auto& [o, ext] : orientations) {
            Placement p = Placement::make(box, bin.index, cand.point, o);
            if (is_feasible(bin, p, cfg).ok()) return p;
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<PlacementDecision> first_fit(const Dims& box,
                                           const std::vector<BinState>& bins,
                                           const RobotConfig& cfg) {
    for (const BinState& bin : bins) {
        if (auto p = first_feasible_in_bin(box, bin, cfg)) {
            return PlacementDecision{box.id, *p, "FF", std::nullopt};
        }
    }
    return std::nullopt;
}

std::optional<PlacementDecision> best_fit(const Dims& box,
                                          const std::vector<BinState>& bins,
                                          const RobotConfig& cfg) {
    std::optional<PlacementDecision> best;
    double best_fill = -1.0;
    for (const BinState& bin : bins) {
        auto p = first_feasible_in_bin(box, bin, cfg);
        if (!p) continue;
        const double fill = bin.fill_rate();
        if (fill > best_fill) {
            best_fill = fill;
            best = PlacementDecision{box.id, *p, "BF", fill};
        }
    }
    return best;
}

}  // namespace binpack
