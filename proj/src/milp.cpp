#include "binpack/milp.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace binpack {

int MilpModel::add_var(std::string name, VarKind kind, double lb, double ub) {
    vars.push_back({std::move(name), kind, lb, ub, 0.0, std::nullopt});
    return int(vars.size()) - 1;
}

void MilpModel::add_con(std::string name, std::vector<LinTerm> terms,
                        ConSense sense, double rhs, std::string tag) {
    cons.push_back(
        {std::move(name), std::move(terms), sense, rhs, std::move(tag)});
}

int MilpModel::objective_terms() const {
    int n = 0;
    for (const MilpVar& v : vars) {
        if (v.obj != 0.0) ++n;
    }
    return n;
}

int MilpModel::count_tagged(std::string_view tag) const {
    int n = 0;
    for (const MilpConstraint& c : cons) {
        if (c.tag == tag) ++n;
    }
    return n;
}

namespace {

const char kAxisNames[3] = {'x', 'y', 'z'};
const char kSideNames[3] = {'l', 'b', 'h'};

// Per-box variable handles inside the step model.
struct BoxVars {
    int lo[3];      // x, y, z
    int hi[3];      // xe, ye, ze
    int p_first;    // p_i_1 .. p_i_NB, contiguous
    int r[3][3];    // r[axis][side]
};

struct Builder {
    MilpModel model;
    int nb = 0;
    int dims[3] = {0, 0, 0};  // L, B, H

    std::string coord_name(const char* base, int i) {
        return std::string(base) + "_" + std::to_string(i);
    }

    BoxVars add_box_vars(int i) {
        BoxVars bv{};
        const char* lo_names[3] = {"x", "y", "z"};
        const char* hi_names[3] = {"xe", "ye", "ze"};
        for (int a = 0; a < 3; ++a) {
            bv.lo[a] = model.add_var(coord_name(lo_names[a], i),
                                     VarKind::Continuous, 0, dims[a]);
            bv.hi[a] = model.add_var(coord_name(hi_names[a], i),
                                     VarKind::Continuous, 0, dims[a]);
        }
        bv.p_first = int(model.vars.size());
        for (int j = 1; j <= nb; ++j) {
            model.add_var("p_" + std::to_string(i) + "_" + std::to_string(j),
                          VarKind::Binary, 0, 1);
        }
        for (int a = 0; a < 3; ++a) {
            for (int s = 0; s < 3; ++s) {
                bv.r[a][s] = model.add_var(std::string("r_") +
                                               std::to_string(i) + "_" +
                                               kAxisNames[a] + "_" +
                                               kSideNames[s],
                                           VarKind::Binary, 0, 1);
            }
        }
        return bv;
    }
};

// Permutation matrix entries of an orientation: perm(axis) = side.
int orientation_side_on_axis(Orientation o, int axis) {
    const Dims probe{2, 3, 5, "", std::nullopt};
    const int got = orient(probe, o)[std::size_t(axis)];
    return got == 2 ? 0 : got == 3 ? 1 : 2;
}

}  // namespace

MilpModel build_milp(const std::vector<BinState>& committed,
                     const std::vector<Dims>& window, const RobotConfig& cfg,
                     const Weights& w) {
    if (window.empty()) {
        throw std::invalid_argument("build_milp: empty look-ahead window");
    }
    if (committed.empty()) {
        throw std::invalid_argument("build_milp: no open bins");
    }

    Builder bld;
    bld.nb = int(committed.size());
    bld.dims[0] = committed.front().length;
    bld.dims[1] = committed.front().breadth;
    bld.dims[2] = committed.front().height;
    const int min_bin_side =
        std::min({bld.dims[0], bld.dims[1], bld.dims[2]});

    // Box list: committed boxes in bin/commit order, then the window.
    struct BoxEntry {
        Dims dims;
        const Placement* fixed = nullptr;  // null for look-ahead boxes
        int window_pos = -1;
    };
    std::vector<BoxEntry> boxes;
    for (const BinState& bin : committed) {
        for (const Placement& p : bin.placements) {
            boxes.push_back({p.box, &p, -1});
        }
    }
    const int n_committed = int(boxes.size());
    for (std::size_t t = 0; t < window.size(); ++t) {
        if (!window[t].valid()) {
            throw std::invalid_argument("build_milp: invalid box dimensions");
        }
        if (window[t].max_side() > min_bin_side) {
            throw std::invalid_argument(
                "build_milp: box '" + window[t].id +
                "' violates packability (max side exceeds min bin side)");
        }
        boxes.push_back({window[t], nullptr, int(t)});
    }
    const int n = int(boxes.size());

    MilpModel& m = bld.model;
    m.notes.push_back("online bin packing rolling-horizon step model");
    m.notes.push_back("bins: " + std::to_string(bld.nb) + " open, " +
                      std::to_string(bld.dims[0]) + "x" +
                      std::to_string(bld.dims[1]) + "x" +
                      std::to_string(bld.dims[2]));

    std::vector<int> u(std::size_t(bld.nb));
    for (int j = 1; j <= bld.nb; ++j) {
        u[std::size_t(j - 1)] =
            m.add_var("u_" + std::to_string(j), VarKind::Binary, 0, 1);
    }

    std::vector<BoxVars> bv;
    bv.reserve(std::size_t(n));
    for (int i = 1; i <= n; ++i) {
        bv.push_back(bld.add_box_vars(i));
        const BoxEntry& e = boxes[std::size_t(i - 1)];
        m.notes.push_back(
            "box " + std::to_string(i) + " = '" + e.dims.id + "' " +
            (e.fixed ? "(committed)"
                     : "(look-ahead pos " + std::to_string(e.window_pos + 1) +
                           ")"));
    }

    // Objective over the look-ahead boxes only.
    for (int i = n_committed; i < n; ++i) {
        const BoxVars& v = bv[std::size_t(i)];
        m.vars[std::size_t(v.lo[0])].obj += w.w1;
        m.vars[std::size_t(v.lo[1])].obj += w.w1;
        m.vars[std::size_t(v.hi[2])].obj += w.w2;
        for (int j = 1; j <= bld.nb; ++j) {
            m.vars[std::size_t(v.p_first + j - 1)].obj += w.w3 * j;
        }
    }

    // Geometric constraints: assignment, bin usage, containment, orientation.
    for (int i = 1; i <= n; ++i) {
        const BoxVars& v = bv[std::size_t(i - 1)];
        const Dims& d = boxes[std::size_t(i - 1)].dims;
        const std::string si = std::to_string(i);

        std::vector<LinTerm> assign;
        for (int j = 0; j < bld.nb; ++j) assign.push_back({v.p_first + j, 1});
        m.add_con("assign_" + si, std::move(assign), ConSense::EQ, 1,
                  "geometric");

        for (int j = 0; j < bld.nb; ++j) {
            m.add_con("use_" + si + "_" + std::to_string(j + 1),
                      {{v.p_first + j, 1}, {u[std::size_t(j)], -1}},
                      ConSense::LE, 0, "geometric");
        }

        for (int a = 0; a < 3; ++a) {
            std::vector<LinTerm> contain{{v.hi[a], 1}};
            for (int j = 0; j < bld.nb; ++j) {
                contain.push_back({v.p_first + j, -double(bld.dims[a])});
            }
            m.add_con(std::string("contain_") + kAxisNames[a] + "_" + si,
                      std::move(contain), ConSense::LE, 0, "geometric");
        }

        const double sides[3] = {double(d.l), double(d.b), double(d.h)};
        for (int a = 0; a < 3; ++a) {
            std::vector<LinTerm> extent{{v.hi[a], 1}, {v.lo[a], -1}};
            for (int s = 0; s < 3; ++s) {
                extent.push_back({v.r[a][s], -sides[s]});
            }
            m.add_con(std::string("extent_") + kAxisNames[a] + "_" + si,
                      std::move(extent), ConSense::EQ, 0, "geometric");
        }
        for (int a = 0; a < 3; ++a) {
            std::vector<LinTerm> row, col;
            for (int s = 0; s < 3; ++s) {
                row.push_back({v.r[a][s], 1});
                col.push_back({v.r[s][a], 1});
            }
            m.add_con(std::string("orient_row_") + kAxisNames[a] + "_" + si,
                      std::move(row), ConSense::EQ, 1, "geometric");
            m.add_con(std::string("orient_col_") + kSideNames[a] + "_" + si,
                      std::move(col), ConSense::EQ, 1, "geometric");
        }

        const BoxEntry& e = boxes[std::size_t(i - 1)];
        if (!e.fixed) {
            // Orientation restrictions: r entries unreachable by any allowed
            // rotation are pinned to zero.
            bool reachable[3][3] = {};
            for (Orientation o : kAllOrientations) {
                if (!orientation_allowed(d, o, cfg)) continue;
                for (int a = 0; a < 3; ++a) {
                    reachable[a][orientation_side_on_axis(o, a)] = true;
                }
            }
            for (int a = 0; a < 3; ++a) {
                for (int s = 0; s < 3; ++s) {
                    if (!reachable[a][s]) {
                        m.vars[std::size_t(v.r[a][s])].fixed = 0.0;
                    }
                }
            }
        }
    }

    // Fixing constraints for committed boxes.
    for (int i = 1; i <= n_committed; ++i) {
        const BoxVars& v = bv[std::size_t(i - 1)];
        const Placement& p = *boxes[std::size_t(i - 1)].fixed;
        const std::string si = std::to_string(i);
        const int lo_vals[3] = {p.x(), p.y(), p.z()};
        const int hi_vals[3] = {p.xe(), p.ye(), p.ze()};
        for (int a = 0; a < 3; ++a) {
            m.add_con(std::string("fix_") + kAxisNames[a] + "_" + si,
                      {{v.lo[a], 1}}, ConSense::EQ, lo_vals[a], "fixing");
            m.add_con(std::string("fix_") + kAxisNames[a] + "e_" + si,
                      {{v.hi[a], 1}}, ConSense::EQ, hi_vals[a], "fixing");
        }
        for (int j = 0; j < bld.nb; ++j) {
            m.add_con("fix_p_" + si + "_" + std::to_string(j + 1),
                      {{v.p_first + j, 1}}, ConSense::EQ,
                      p.bin_index == j + 1 ? 1 : 0, "fixing");
        }
        for (int a = 0; a < 3; ++a) {
            const int side = orientation_side_on_axis(p.orientation, a);
            for (int s = 0; s < 3; ++s) {
                m.add_con(std::string("fix_r_") + si + "_" +
                             kAxisNames[a] + "_" + kSideNames[s],
                          {{v.r[a][s], 1}}, ConSense::EQ, s == side ? 1 : 0,
                          "fixing");
            }
        }
    }

    // Pairwise non-overlap via relative-position binaries; pairs touching at
    // least one look-ahead box (committed-committed pairs are pinned anyway).
    const double bigm[3] = {double(bld.dims[0]), double(bld.dims[1]),
                            double(bld.dims[2])};
    std::vector<std::vector<std::array<int, 3>>> sep(
        std::size_t(n), std::vector<std::array<int, 3>>(std::size_t(n)));
    auto pair_active = [&](int i, int k) {
        return i != k && (i > n_committed || k > n_committed);
    };
    for (int i = 1; i <= n; ++i) {
        for (int k = 1; k <= n; ++k) {
            if (!pair_active(i, k)) continue;
            for (int a = 0; a < 3; ++a) {
                const std::string name = std::string("s_") + kAxisNames[a] +
                                         "_" + std::to_string(i) + "_" +
                                         std::to_string(k);
                const int var = bld.model.add_var(name, VarKind::Binary, 0, 1);
                sep[std::size_t(i - 1)][std::size_t(k - 1)][std::size_t(a)] =
                    var;
                // s = 1  =>  lo_i >= hi_k.
                m.add_con("sep_" + name,
                          {{bv[std::size_t(k - 1)].hi[a], 1},
                           {bv[std::size_t(i - 1)].lo[a], -1},
                           {var, bigm[a]}},
                          ConSense::LE, bigm[a], "geometric");
            }
        }
    }
    for (int i = 1; i <= n; ++i) {
        for (int k = i + 1; k <= n; ++k) {
            if (!pair_active(i, k)) continue;
            for (int j = 0; j < bld.nb; ++j) {
                std::vector<LinTerm> dis;
                for (int a = 0; a < 3; ++a) {
                    dis.push_back(
                        {sep[std::size_t(i - 1)][std::size_t(k - 1)]
                            [std::size_t(a)],
                         -1});
                    dis.push_back(
                        {sep[std::size_t(k - 1)][std::size_t(i - 1)]
                            [std::size_t(a)],
                         -1});
                }
                dis.push_back({bv[std::size_t(i - 1)].p_first + j, 1});
                dis.push_back({bv[std::size_t(k - 1)].p_first + j, 1});
                m.add_con("noverlap_" + std::to_string(i) + "_" +
                             std::to_string(k) + "_" + std::to_string(j + 1),
                          std::move(dis), ConSense::LE, 1, "geometric");
            }
        }
    }

    // Vertical stability for look-ahead boxes: on the floor, or at least
    // min_supported_vertices base vertices resting on coplanar box tops.
    for (int i = n_committed + 1; i <= n; ++i) {
        const BoxVars& v = bv[std::size_t(i - 1)];
        const std::string si = std::to_string(i);
        if (n == 1) {
            // No potential supporters: the box must sit on the floor.
            m.add_con("floor_" + si, {{v.lo[2], 1}}, ConSense::EQ, 0,
                      "stability");
            continue;
        }
        const int g = m.add_var("g_" + si, VarKind::Binary, 0, 1);
        // g = 1  =>  z_i = 0.
        m.add_con("floor_" + si, {{v.lo[2], 1}, {g, bigm[2]}},
                  ConSense::LE, bigm[2], "stability");

        std::vector<int> vertex_supported;
        for (int vert = 0; vert < 4; ++vert) {
            vertex_supported.push_back(
                m.add_var("sup_" + si + "_" + std::to_string(vert + 1),
                          VarKind::Binary, 0, 1));
        }
        // Vertex coordinates: (x|xe, y|ye) per corner of the base.
        const int vx[4] = {v.lo[0], v.hi[0], v.lo[0], v.hi[0]};
        const int vy[4] = {v.lo[1], v.lo[1], v.hi[1], v.hi[1]};

        std::vector<std::vector<LinTerm>> sup_cover(4);
        for (int k = 1; k <= n; ++k) {
            if (k == i) continue;
            const BoxVars& kv = bv[std::size_t(k - 1)];
            const std::string sk = std::to_string(k);
            for (int vert = 0; vert < 4; ++vert) {
                const std::string name =
                    "b_" + si + "_" + sk + "_" + std::to_string(vert + 1);
                const int b = m.add_var(name, VarKind::Binary, 0, 1);
                sup_cover[std::size_t(vert)].push_back({b, -1});
                // b = 1 => vertex inside k's top face and z_i = ze_k.
                m.add_con("von_xlo_" + name,
                          {{kv.lo[0], 1}, {vx[vert], -1}, {b, bigm[0]}},
                          ConSense::LE, bigm[0], "stability");
                m.add_con("von_xhi_" + name,
                          {{vx[vert], 1}, {kv.hi[0], -1}, {b, bigm[0]}},
                          ConSense::LE, bigm[0], "stability");
                m.add_con("von_ylo_" + name,
                          {{kv.lo[1], 1}, {vy[vert], -1}, {b, bigm[1]}},
                          ConSense::LE, bigm[1], "stability");
                m.add_con("von_yhi_" + name,
                          {{vy[vert], 1}, {kv.hi[1], -1}, {b, bigm[1]}},
                          ConSense::LE, bigm[1], "stability");
                m.add_con("von_zlo_" + name,
                          {{kv.hi[2], 1}, {v.lo[2], -1}, {b, bigm[2]}},
                          ConSense::LE, bigm[2], "stability");
                m.add_con("von_zhi_" + name,
                          {{v.lo[2], 1}, {kv.hi[2], -1}, {b, bigm[2]}},
                          ConSense::LE, bigm[2], "stability");
                for (int j = 0; j < bld.nb; ++j) {
                    m.add_con("von_bin1_" + name + "_" +
                                 std::to_string(j + 1),
                              {{v.p_first + j, 1},
                               {kv.p_first + j, -1},
                               {b, 1}},
                              ConSense::LE, 1, "stability");
                    m.add_con("von_bin2_" + name + "_" +
                                 std::to_string(j + 1),
                              {{kv.p_first + j, 1},
                               {v.p_first + j, -1},
                               {b, 1}},
                              ConSense::LE, 1, "stability");
                }
            }
        }
        for (int vert = 0; vert < 4; ++vert) {
            std::vector<LinTerm> cover = sup_cover[std::size_t(vert)];
            cover.push_back({vertex_supported[std::size_t(vert)], 1});
            m.add_con("sup_cover_" + si + "_" + std::to_string(vert + 1),
                      std::move(cover), ConSense::LE, 0, "stability");
        }
        std::vector<LinTerm> need;
        for (int vert = 0; vert < 4; ++vert) {
            need.push_back({vertex_supported[std::size_t(vert)], 1});
        }
        need.push_back({g, double(cfg.min_supported_vertices)});
        m.add_con("support_" + si, std::move(need), ConSense::GE,
                  cfg.min_supported_vertices, "stability");
    }

    // Constraints for efficient packing: per look-ahead box, at least two of
    // the four lateral directions {x-, x+, y-, y+} carry a wall contact or a
    // positive-area face contact with another box. Declared in two passes so
    // a pair's single contact binary serves both partners.
    if (cfg.require_cep) {
        // contact_var[{i, k, axis}] = dn binary: box i's minus face on axis
        // rests against box k's plus face.
        std::vector<std::vector<std::array<int, 2>>> dn(
            std::size_t(n), std::vector<std::array<int, 2>>(
                                std::size_t(n), {{-1, -1}}));
        std::vector<std::vector<std::array<int, 2>>> dp = dn;
        // wall[{i, j, w}]: box i on wall w of bin j (1: x=0, 2: y=0,
        // 3: x=L, 4: y=B).
        std::vector<std::vector<std::array<int, 4>>> wall(
            std::size_t(n), std::vector<std::array<int, 4>>(
                                std::size_t(bld.nb), {{-1, -1, -1, -1}}));

        auto add_contact = [&](int i, int k, int axis, bool minus_face_of_i) {
            const BoxVars& v = bv[std::size_t(i - 1)];
            const BoxVars& kv = bv[std::size_t(k - 1)];
            const std::string name =
                std::string("d") + (minus_face_of_i ? "n" : "p") + "_" +
                kAxisNames[axis] + "_" + std::to_string(i) + "_" +
                std::to_string(k);
            const int d = m.add_var(name, VarKind::Binary, 0, 1);
            // Face coincidence: lo_i = hi_k (minus face) or hi_i = lo_k.
            const int face_i = minus_face_of_i ? v.lo[axis] : v.hi[axis];
            const int face_k = minus_face_of_i ? kv.hi[axis] : kv.lo[axis];
            m.add_con("cep_eq1_" + name,
                      {{face_i, 1}, {face_k, -1}, {d, bigm[axis]}},
                      ConSense::LE, bigm[axis], "cep");
            m.add_con("cep_eq2_" + name,
                      {{face_k, 1}, {face_i, -1}, {d, bigm[axis]}},
                      ConSense::LE, bigm[axis], "cep");
            // Positive contact area on the two remaining axes.
            for (int o = 0; o < 3; ++o) {
                if (o == axis) continue;
                m.add_con("cep_a1_" + name + "_" + kAxisNames[o],
                          {{v.lo[o], 1}, {kv.hi[o], -1}, {d, bigm[o]}},
                          ConSense::LE, bigm[o] - 1, "cep");
                m.add_con("cep_a2_" + name + "_" + kAxisNames[o],
                          {{kv.lo[o], 1}, {v.hi[o], -1}, {d, bigm[o]}},
                          ConSense::LE, bigm[o] - 1, "cep");
            }
            // Contact requires sharing a bin.
            for (int j = 0; j < bld.nb; ++j) {
                m.add_con("cep_bin1_" + name + "_" + std::to_string(j + 1),
                          {{v.p_first + j, 1}, {kv.p_first + j, -1}, {d, 1}},
                          ConSense::LE, 1, "cep");
                m.add_con("cep_bin2_" + name + "_" + std::to_string(j + 1),
                          {{kv.p_first + j, 1}, {v.p_first + j, -1}, {d, 1}},
                          ConSense::LE, 1, "cep");
            }
            return d;
        };

        for (int i = n_committed + 1; i <= n; ++i) {
            const BoxVars& v = bv[std::size_t(i - 1)];
            const std::string si = std::to_string(i);
            for (int k = 1; k <= n; ++k) {
                if (k == i) continue;
                for (int axis = 0; axis < 2; ++axis) {
                    dn[std::size_t(i - 1)][std::size_t(k - 1)]
                      [std::size_t(axis)] = add_contact(i, k, axis, true);
                    // A look-ahead partner's own dn binary covers this box's
                    // plus face; committed partners need a dedicated one.
                    if (k <= n_committed) {
                        dp[std::size_t(i - 1)][std::size_t(k - 1)]
                          [std::size_t(axis)] =
                            add_contact(i, k, axis, false);
                    }
                }
            }
            for (int j = 0; j < bld.nb; ++j) {
                const std::string sj = std::to_string(j + 1);
                int wv[4];
                for (int wnum = 0; wnum < 4; ++wnum) {
                    wv[wnum] = m.add_var(
                        "dw_" + si + "_" + sj + "_" + std::to_string(wnum + 1),
                        VarKind::Binary, 0, 1);
                    wall[std::size_t(i - 1)][std::size_t(j)]
                        [std::size_t(wnum)] = wv[wnum];
                }
                // Wall coincidence plus bin membership.
                m.add_con("cep_w1_" + si + "_" + sj,
                          {{v.lo[0], 1}, {wv[0], bigm[0]}}, ConSense::LE,
                          bigm[0], "cep");
                m.add_con("cep_w2_" + si + "_" + sj,
                          {{v.lo[1], 1}, {wv[1], bigm[1]}}, ConSense::LE,
                          bigm[1], "cep");
                m.add_con("cep_w3_" + si + "_" + sj,
                          {{wv[2], bigm[0]}, {v.hi[0], -1}}, ConSense::LE, 0,
                          "cep");
                m.add_con("cep_w4_" + si + "_" + sj,
                          {{wv[3], bigm[1]}, {v.hi[1], -1}}, ConSense::LE, 0,
                          "cep");
                for (int wnum = 0; wnum < 4; ++wnum) {
                    m.add_con(m.vars[std::size_t(wv[wnum])].name + "_member",
                              {{wv[wnum], 1}, {v.p_first + j, -1}},
                              ConSense::LE, 0, "cep");
                }
            }
        }

        for (int i = n_committed + 1; i <= n; ++i) {
            const std::string si = std::to_string(i);
            // dir 0: x-, 1: x+, 2: y-, 3: y+
            std::vector<std::vector<LinTerm>> dir_cover(4);
            for (int k = 1; k <= n; ++k) {
                if (k == i) continue;
                for (int axis = 0; axis < 2; ++axis) {
                    const int minus_dir = axis == 0 ? 0 : 2;
                    const int plus_dir = axis == 0 ? 1 : 3;
                    dir_cover[std::size_t(minus_dir)].push_back(
                        {dn[std::size_t(i - 1)][std::size_t(k - 1)]
                            [std::size_t(axis)],
                         -1});
                    const int plus_var =
                        k <= n_committed
                            ? dp[std::size_t(i - 1)][std::size_t(k - 1)]
                                [std::size_t(axis)]
                            : dn[std::size_t(k - 1)][std::size_t(i - 1)]
                                [std::size_t(axis)];
                    dir_cover[std::size_t(plus_dir)].push_back({plus_var, -1});
                }
            }
            for (int j = 0; j < bld.nb; ++j) {
                const auto& wj = wall[std::size_t(i - 1)][std::size_t(j)];
                dir_cover[0].push_back({wj[0], -1});
                dir_cover[2].push_back({wj[1], -1});
                dir_cover[1].push_back({wj[2], -1});
                dir_cover[3].push_back({wj[3], -1});
            }
            // Direction indicators capped by their contact sums; two needed.
            std::vector<LinTerm> need;
            const char* dname[4] = {"xn", "xp", "yn", "yp"};
            for (int dir = 0; dir < 4; ++dir) {
                const int e = m.add_var(
                    std::string("e_") + si + "_" + dname[dir],
                    VarKind::Binary, 0, 1);
                std::vector<LinTerm> cover = dir_cover[std::size_t(dir)];
                cover.push_back({e, 1});
                m.add_con(std::string("cep_dir_") + si + "_" + dname[dir],
                          std::move(cover), ConSense::LE, 0, "cep");
                need.push_back({e, 1});
            }
            m.add_con("cep_two_" + si, std::move(need), ConSense::GE, 2,
                      "cep");
        }
    }

    return bld.model;
}

namespace {

std::string format_num(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
        return buf;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void append_terms(std::string& out, const MilpModel& m,
                  const std::vector<LinTerm>& terms) {
    bool first = true;
    for (const LinTerm& t : terms) {
        const double c = t.coeff;
        if (c == 0.0) continue;
        if (first) {
            if (c < 0) out += "- ";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        const double a = std::abs(c);
        if (a != 1.0) {
            out += format_num(a);
            out += " ";
        }
        out += m.vars[std::size_t(t.var)].name;
    }
    if (first) out += "0";
}

void append_wrapped(std::string& out, const std::string& line) {
    // LP readers accept breaks between tokens; keep lines below ~78 cols.
    const std::size_t limit = 78;
    if (line.size() <= limit) {
        out += line;
        out += "\n";
        return;
    }
    std::size_t start = 0;
    while (start < line.size()) {
        std::size_t end = std::min(start + limit, line.size());
        if (end < line.size()) {
            std::size_t brk = line.rfind(' ', end);
            if (brk == std::string::npos || brk <= start) brk = end;
            end = brk;
        }
        if (start > 0) out += "   ";
        out.append(line, start, end - start);
        out += "\n";
        while (end < line.size() && line[end] == ' ') ++end;
        start = end;
    }
}

}  // namespace

std::string export_model_text(const MilpModel& model) {
    if (model.objective_terms() == 0) {
        throw std::invalid_argument(
            "export_model: model has an empty objective");
    }
    std::string out;
    for (const std::string& note : model.notes) {
        out += "\\ " + note + "\n";
    }
    out += "Minimize\n";
    {
        std::string line = " obj: ";
        std::vector<LinTerm> obj;
        for (int i = 0; i < int(model.vars.size()); ++i) {
            if (model.vars[std::size_t(i)].obj != 0.0) {
                obj.push_back({i, model.vars[std::size_t(i)].obj});
            }
        }
        append_terms(line, model, obj);
        append_wrapped(out, line);
    }
    out += "Subject To\n";
    for (const MilpConstraint& c : model.cons) {
        std::string line = " " + c.name + ": ";
        append_terms(line, model, c.terms);
        line += c.sense == ConSense::LE   ? " <= "
                : c.sense == ConSense::GE ? " >= "
                                          : " = ";
        line += format_num(c.rhs);
        append_wrapped(out, line);
    }
    out += "Bounds\n";
    for (const MilpVar& v : model.vars) {
        if (v.fixed) {
            out += " " + v.name + " = " + format_num(*v.fixed) + "\n";
        } else if (v.kind == VarKind::Continuous) {
            out += " " + format_num(v.lb) + " <= " + v.name +
                   " <= " + format_num(v.ub) + "\n";
        }
    }
    out += "Binary\n";
    {
        std::string line = " ";
        for (const MilpVar& v : model.vars) {
            if (v.kind != VarKind::Binary) continue;
            if (line.size() > 1) line += " ";
            line += v.name;
            if (line.size() > 70) {
                out += line + "\n";
                line = " ";
            }
        }
        if (line.size() > 1) out += line + "\n";
    }
    out += "End\n";
    return out;
}

void export_model(const MilpModel& model, const std::string& path) {
    const std::string text = export_model_text(model);
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("export_model: cannot open '" + path + "'");
    }
    f << text;
    if (!f) {
        throw std::runtime_error("export_model: write failed for '" + path +
                                 "'");
    }
}

ModelSummary summarize_model(const MilpModel& model) {
    return {int(model.vars.size()), int(model.cons.size()),
            model.objective_terms()};
}

namespace {

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

ModelSummary parse_lp_summary(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        throw std::runtime_error("parse_lp_summary: cannot open '" + path +
                                 "'");
    }
    enum Section { None, Objective, Constraints, Bounds, Binaries, Done };
    Section section = None;
    std::set<std::string> vars;
    int n_cons = 0;
    int n_obj_terms = 0;
    std::string line;
    auto lower = [](std::string s) {
        for (char& c : s) c = char(std::tolower(static_cast<unsigned char>(c)));
        return s;
    };
    while (std::getline(f, line)) {
        if (!line.empty() && line[0] == '\\') continue;
        const std::string trimmed_lower = lower(line);
        auto starts = [&](std::string_view kw) {
            auto pos = trimmed_lower.find_first_not_of(" \t");
            return pos != std::string::npos &&
                   trimmed_lower.compare(pos, kw.size(), kw) == 0;
        };
        if (starts("minimize") || starts("maximize")) {
            section = Objective;
            continue;
        }
        if (starts("subject to") || starts("st")) {
            section = Constraints;
            continue;
        }
        if (starts("bounds")) {
            section = Bounds;
            continue;
        }
        if (starts("binary") || starts("binaries") || starts("general")) {
            section = Binaries;
            continue;
        }
        if (starts("end")) {
            section = Done;
            continue;
        }
        if (section == None || section == Done) continue;

        // Tokenize identifiers; a name followed by ':' labels a row.
        for (std::size_t i = 0; i < line.size();) {
            if (!is_ident_start(line[i])) {
                ++i;
                continue;
            }
            std::size_t j = i;
            while (j < line.size() && is_ident_char(line[j])) ++j;
            std::string ident = line.substr(i, j - i);
            std::size_t k = j;
            while (k < line.size() && line[k] == ' ') ++k;
            const bool is_label = k < line.size() && line[k] == ':';
            if (is_label) {
                if (section == Constraints) ++n_cons;
                i = k + 1;
                continue;
            }
            if (section == Objective) {
                ++n_obj_terms;
                vars.insert(std::move(ident));
            } else {
                vars.insert(std::move(ident));
            }
            i = j;
        }
    }
    return {int(vars.size()), n_cons, n_obj_terms};
}

}  // namespace binpack
