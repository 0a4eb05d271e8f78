#include "binpack/geometry.hpp"

#include <algorithm>

namespace binpack {

namespace {

// perm[o][axis] = which side (0=l, 1=b, 2=h) lies along that axis.
constexpr int kPerm[6][3] = {
    {0, 1, 2},  // LBH
    {0, 2, 1},  // LHB
    {1, 0, 2},  // BLH
    {1, 2, 0},  // BHL
    {2, 0, 1},  // HLB
    {2, 1, 0},  // HBL
};

constexpr std::string_view kOrientationNames[6] = {"lbh", "lhb", "blh",
                                                   "bhl", "hlb", "hbl"};

}  // namespace

std::array<int, 3> orient(const Dims& dims, Orientation o) {
    const int sides[3] = {dims.l, dims.b, dims.h};
    const int* p = kPerm[static_cast<int>(o)];
    return {sides[p[0]], sides[p[1]], sides[p[2]]};
}

char side_along_z(Orientation o) {
    return "lbh"[kPerm[static_cast<int>(o)][2]];
}

std::string_view to_string(Orientation o) {
    return kOrientationNames[static_cast<int>(o)];
}

std::optional<Orientation> orientation_from_string(std::string_view s) {
    for (int i = 0; i < 6; ++i) {
        if (s == kOrientationNames[i]) return static_cast<Orientation>(i);
    }
    return std::nullopt;
}

Placement Placement::make(Dims box, int bin_index, Vec3i corner,
                          Orientation o) {
    Placement p;
    const auto ext = orient(box, o);
    p.box = std::move(box);
    p.bin_index = bin_index;
    p.corner = corner;
    p.orientation = o;
    p.extent = {ext[0], ext[1], ext[2]};
    return p;
}

void BinState::place(const Placement& p) {
    packed_volume_grid += p.box.grid_volume();
    packed_volume_true += p.box.accounting_volume();
    placements.push_back(p);
}

void BinState::unplace_last() {
    const Placement& p = placements.back();
    packed_volume_grid -= p.box.grid_volume();
    packed_volume_true -= p.box.accounting_volume();
    placements.pop_back();
}

std::string describe(const Feasibility& f) {
    if (f.ok()) return "ok";
    std::string out;
    auto append = [&out](std::string_view name) {
        if (!out.empty()) out += ",";
        out += name;
    };
    if (f.has(Violation::Containment)) append("containment");
    if (f.has(Violation::Overlap)) append("overlap");
    if (f.has(Violation::OrientationNotAllowed)) append("orientation");
    if (f.has(Violation::Stability)) append("stability");
    if (f.has(Violation::Cep)) append("cep");
    return out;
}

bool orientation_allowed(const Dims& dims, Orientation o,
                         const RobotConfig& cfg) {
    if (!cfg.orientation_enabled(o)) return false;
    if (!cfg.forbid_largest_dim_vertical) return true;
    const int maxv = dims.max_side();
    int ties = 0;
    if (dims.l == maxv) ++ties;
    if (dims.b == maxv) ++ties;
    if (dims.h == maxv) ++ties;
    if (ties > 1) return true;  // no strictly largest side
    return orient(dims, o)[2] != maxv;
}

bool overlaps(const Placement& a, const Placement& b) {
    return a.x() < b.xe() && b.x() < a.xe() &&  //
           a.y() < b.ye() && b.y() < a.ye() &&  //
           a.z() < b.ze() && b.z() < a.ze();
}

int support_count(const Placement& p, const BinState& bin) {
    if (p.z() == 0) return 4;  // floor supports the whole base
    const int vx[4] = {p.x(), p.xe(), p.x(), p.xe()};
    const int vy[4] = {p.y(), p.y(), p.ye(), p.ye()};
    int count = 0;
    for (int v = 0; v < 4; ++v) {
        for (const Placement& q : bin.placements) {
            if (&q == &p) continue;
            if (q.ze() != p.z()) continue;
            if (vx[v] >= q.x() && vx[v] <= q.xe() && vy[v] >= q.y() &&
                vy[v] <= q.ye()) {
                ++count;
                break;
            }
        }
    }
    return count;
}

namespace {

// Positive-area rectangle intersection of two placements projected on the
// plane orthogonal to the contact axis.
bool lateral_face_contact_area(const Placement& p, const Placement& q) {
    const bool y_overlap = std::max(p.y(), q.y()) < std::min(p.ye(), q.ye());
    const bool z_overlap = std::max(p.z(), q.z()) < std::min(p.ze(), q.ze());
    return y_overlap && z_overlap;
}

bool lateral_face_contact_area_y(const Placement& p, const Placement& q) {
    const bool x_overlap = std::max(p.x(), q.x()) < std::min(p.xe(), q.xe());
    const bool z_overlap = std::max(p.z(), q.z()) < std::min(p.ze(), q.ze());
    return x_overlap && z_overlap;
}

}  // namespace

int cep_contacts(const Placement& p, const BinState& bin) {
    bool xneg = p.x() == 0;
    bool xpos = p.xe() == bin.length;
    bool yneg = p.y() == 0;
    bool ypos = p.ye() == bin.breadth;
    for (const Placement& q : bin.placements) {
        if (&q == &p) continue;
        if (!xneg && q.xe() == p.x() && lateral_face_contact_area(p, q))
            xneg = true;
        if (!xpos && q.x() == p.xe() && lateral_face_contact_area(p, q))
            xpos = true;
        if (!yneg && q.ye() == p.y() && lateral_face_contact_area_y(p, q))
            yneg = true;
        if (!ypos && q.y() == p.ye() && lateral_face_contact_area_y(p, q))
            ypos = true;
    }
    return int(xneg) + int(xpos) + int(yneg) + int(ypos);
}

Feasibility is_feasible(const BinState& bin, const Placement& p,
                        const RobotConfig& cfg) {
    Feasibility f;
    if (p.x() < 0 || p.y() < 0 || p.z() < 0 || p.xe() > bin.length ||
        p.ye() > bin.breadth || p.ze() > bin.height) {
        f.add(Violation::Containment);
    }
    for (const Placement& q : bin.placements) {
        if (overlaps(p, q)) {
            f.add(Violation::Overlap);
            break;
        }
    }
    if (!orientation_allowed(p.box, p.orientation, cfg)) {
        f.add(Violation::OrientationNotAllowed);
    }
    if (support_count(p, bin) < cfg.min_supported_vertices) {
        f.add(Violation::Stability);
    }
    if (cfg.require_cep && cep_contacts(p, bin) < 2) {
        f.add(Violation::Cep);
    }
    return f;
}

}  // namespace binpack
