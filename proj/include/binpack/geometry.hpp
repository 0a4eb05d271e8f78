#ifndef BINPACK_GEOMETRY_HPP
#define BINPACK_GEOMETRY_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Geometry, feasibility and stability primitives on an integer-centimeter
// grid. Everything here is a plain value type; placement legality has a
// single entry point, is_feasible().

namespace binpack {

struct Vec3i {
    int x = 0;
    int y = 0;
    int z = 0;

    friend bool operator==(const Vec3i&, const Vec3i&) = default;
};

// Cuboid dimensions of a box (or a bin), in whole centimeters. Boxes coming
// from data with decimal dimensions keep their exact volume in true_volume;
// l/b/h are the ceiling-rounded grid dimensions used for placement.
struct Dims {
    int l = 0;
    int b = 0;
    int h = 0;
    std::string id;
    std::optional<double> true_volume;

    bool valid() const { return l >= 1 && b >= 1 && h >= 1; }

    std::int64_t grid_volume() const {
        return std::int64_t(l) * std::int64_t(b) * std::int64_t(h);
    }

    // Volume used for fill-rate accounting: pre-rounding volume when known.
    double accounting_volume() const {
        return true_volume ? *true_volume : double(grid_volume());
    }

    int max_side() const { return l > b ? (l > h ? l : h) : (b > h ? b : h); }
    int min_side() const { return l < b ? (l < h ? l : h) : (b < h ? b : h); }

    friend bool operator==(const Dims&, const Dims&) = default;
};

// One of the six axis-aligned rotations. The name lists which box side lies
// along the bin's x, y and z axes: LBH is the identity (l->x, b->y, h->z).
enum class Orientation : std::uint8_t { LBH = 0, LHB, BLH, BHL, HLB, HBL };

inline constexpr std::array<Orientation, 6> kAllOrientations = {
    Orientation::LBH, Orientation::LHB, Orientation::BLH,
    Orientation::BHL, Orientation::HLB, Orientation::HBL};

// Extent of the box along each bin axis under the given rotation.
std::array<int, 3> orient(const Dims& dims, Orientation o);

// Which box side ('l', 'b' or 'h') lies along the bin's vertical axis.
char side_along_z(Orientation o);

// Three-letter form, sides along (x, y, z): "lbh", "lhb", ...
std::string_view to_string(Orientation o);
std::optional<Orientation> orientation_from_string(std::string_view s);

// Arm/gripper limits that turn geometric placements into robot-packable ones.
struct RobotConfig {
    std::array<bool, 6> allowed_orientations = {true, true, true,
                                                true, true, true};
    bool forbid_largest_dim_vertical = false;
    int min_supported_vertices = 3;  // 1..4
    bool require_cep = false;        // >=2 lateral contacts per new box

    bool orientation_enabled(Orientation o) const {
        return allowed_orientations[static_cast<std::size_t>(o)];
    }
};

// A box's resolved pose inside one open bin. corner is the front-left-bottom
// point; the far corner is corner + extent.
struct Placement {
    Dims box;
    int bin_index = 1;  // 1-based open-bin index, smaller = opened earlier
    Vec3i corner;
    Orientation orientation = Orientation::LBH;
    Vec3i extent;  // oriented dimensions, cached

    static Placement make(Dims box, int bin_index, Vec3i corner,
                          Orientation o);

    int x() const { return corner.x; }
    int y() const { return corner.y; }
    int z() const { return corner.z; }
    int xe() const { return corner.x + extent.x; }
    int ye() const { return corner.y + extent.y; }
    int ze() const { return corner.z + extent.z; }
};

// One open bin: fixed dimensions plus the append-only list of placements.
// Placed boxes are never moved or removed; a close discards the whole value.
struct BinState {
    int length = 0;   // along x
    int breadth = 0;  // along y
    int height = 0;   // along z
    int index = 1;    // 1-based open-bin index (reset on close/open cycles)
    int serial = 1;   // stable id across the whole episode, for traces
    std::vector<Placement> placements;
    std::int64_t packed_volume_grid = 0;
    double packed_volume_true = 0.0;

    BinState() = default;
    BinState(int l, int b, int h, int idx, int ser)
        : length(l), breadth(b), height(h), index(idx), serial(ser) {}

    std::int64_t volume() const {
        return std::int64_t(length) * std::int64_t(breadth) *
               std::int64_t(height);
    }

    // Fill-rate of the bin, percent, using true volumes where available.
    double fill_rate() const {
        return volume() == 0 ? 0.0
                             : 100.0 * packed_volume_true / double(volume());
    }

    void place(const Placement& p);
    // Removes the most recent placement; used by search code that
    // backtracks. Episode state never calls this.
    void unplace_last();
};

// Failed feasibility clauses, reported all at once.
enum class Violation : unsigned {
    Containment = 1u << 0,
    Overlap = 1u << 1,
    OrientationNotAllowed = 1u << 2,
    Stability = 1u << 3,
    Cep = 1u << 4,
};

struct Feasibility {
    unsigned violations = 0;

    bool ok() const { return violations == 0; }
    bool has(Violation v) const {
        return (violations & static_cast<unsigned>(v)) != 0;
    }
    void add(Violation v) { violations |= static_cast<unsigned>(v); }
};

std::string describe(const Feasibility& f);

// False when the orientation is disabled, or when the strictly largest box
// side would point along z while cfg forbids that. A tie for largest (two or
// more equal maximal sides) is always allowed.
bool orientation_allowed(const Dims& dims, Orientation o,
                         const RobotConfig& cfg);

// Open-interior intersection on all three axes; face or edge contact is not
// an overlap.
bool overlaps(const Placement& a, const Placement& b);

// Number of supported base vertices, 0..4. Floor placements (z == 0) count
// as 4. A vertex is supported when it lies on the closed top face of a
// placement whose top is exactly at the vertex height.
int support_count(const Placement& p, const BinState& bin);

// Distinct lateral contact directions among {x-, x+, y-, y+}: a face flush
// with a bin wall, or positive-area face contact with an existing placement.
int cep_contacts(const Placement& p, const BinState& bin);

// The single source of truth for placement legality. Checks containment,
// overlap, orientation, vertical stability and (optionally) CEP, and reports
// every failed clause.
Feasibility is_feasible(const BinState& bin, const Placement& p,
                        const RobotConfig& cfg);

}  // namespace binpack

#endif  // BINPACK_GEOMETRY_HPP
