#include "binpack/opack.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <numeric>

namespace binpack {

double score(const Placement& p, const Weights& w) {
    return w.w1 * double(p.x() + p.y()) + w.w2 * double(p.ze()) +
           w.w3 * double(p.bin_index);
}

std::vector<int> sorted_window_order(const std::vector<Dims>& window) {
    std::vector<int> order(window.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const auto va = window[a].grid_volume();
        const auto vb = window[b].grid_volume();
        if (va != vb) return va > vb;
        return window[a].h > window[b].h;
    });
    return order;
}

std::vector<Dims> sort_lookahead(const std::vector<Dims>& window) {
    std::vector<Dims> out;
    out.reserve(window.size());
    for (int i : sorted_window_order(window)) out.push_back(window[i]);
    return out;
}

std::optional<Placement> packrule_mpl(const std::vector<BinState>& bins,
                                      const Dims& box, const RobotConfig& cfg,
                                      const Weights& w, CandidateMode mode) {
    std::optional<Placement> best;
    double best_score = std::numeric_limits<double>::infinity();
    // Iteration follows the tie-break order (bin, z, y, x, orientation), so
    // keeping the first strict improvement realizes the lexicographic rule.
    auto consider = [&](const BinState& bin, const Vec3i& pt,
                        Orientation o) {
        Placement p = Placement::make(box, bin.index, pt, o);
        const double s = score(p, w);
        if (s >= best_score) return;
        if (is_feasible(bin, p, cfg).ok()) {
            best_score = s;
            best = std::move(p);
        }
    };

    for (const BinState& bin : bins) {
        const auto orientations = distinct_orientations(box, cfg);
        if (orientations.empty()) continue;
        if (mode == CandidateMode::ExtremePoints) {
            for (const CandidatePoint& cand : extreme_points(bin)) {
                for (const auto& [o, ext] : orientations) {
                    consider(bin, cand.point, o);
                }
            }
        } else {
            for (int z = 0; z < bin.height; ++z) {
                for (int y = 0; y < bin.breadth; ++y) {
                    for (int x = 0; x < bin.length; ++x) {
                        for (const auto& [o, ext] : orientations) {
                            if (x + ext.x > bin.length ||
                                y + ext.y > bin.breadth ||
                                z + ext.z > bin.height) {
                                continue;
                            }
                            consider(bin, {x, y, z}, o);
                        }
                    }
                }
            }
        }
    }
    return best;
}

PackRule make_first_fit_rule() {
    return [](const std::vector<BinState>& bins, const Dims& box,
              const RobotConfig& cfg,
              const Weights&) -> std::optional<Placement> {
        auto d = first_fit(box, bins, cfg);
        if (!d) return std::nullopt;
        return d->placement;
    };
}

PackRule make_best_fit_rule() {
    return [](const std::vector<BinState>& bins, const Dims& box,
              const RobotConfig& cfg,
              const Weights&) -> std::optional<Placement> {
        auto d = best_fit(box, bins, cfg);
        if (!d) return std::nullopt;
        return d->placement;
    };
}

PackRule make_mpl_rule(CandidateMode mode) {
    return [mode](const std::vector<BinState>& bins, const Dims& box,
                  const RobotConfig& cfg,
                  const Weights& w) -> std::optional<Placement> {
        return packrule_mpl(bins, box, cfg, w, mode);
    };
}

std::optional<OpackChoice> boxpack_select(
    const std::vector<OpackCandidate>& candidates,
    const std::vector<BinState>& committed, const RobotConfig& cfg,
    const Weights& w, const BoxpackOptions& opts) {
    std::vector<const OpackCandidate*> stable;
    for (const OpackCandidate& c : candidates) {
        const BinState& bin = committed[std::size_t(c.placement.bin_index - 1)];
        // Support must come from already committed boxes or the bin itself,
        // never from other look-ahead boxes.
        if (support_count(c.placement, bin) >= cfg.min_supported_vertices) {
            stable.push_back(&c);
        }
    }
    if (stable.empty()) return std::nullopt;

    const OpackCandidate* pick = nullptr;
    if (opts.fill_aware) {
        // Alternative selection: prefer large boxes while bins are mostly
        // empty, small ones once the mean open fill passes the threshold.
        double mean_fill = 0.0;
        for (const BinState& b : committed) mean_fill += b.fill_rate();
        if (!committed.empty()) mean_fill /= double(committed.size());
        const bool want_large = mean_fill < opts.fill_threshold_pct;
        for (const OpackCandidate* c : stable) {
            if (!pick) {
                pick = c;
                continue;
            }
            const auto vc = c->box.grid_volume();
            const auto vp = pick->box.grid_volume();
            const bool better = want_large ? vc > vp : vc < vp;
            const bool tie = vc == vp && c->window_pos < pick->window_pos;
            if (better || tie) pick = c;
        }
    } else {
        double best = std::numeric_limits<double>::infinity();
        for (const OpackCandidate* c : stable) {
            const double s = w.w1 * double(c->placement.x() +
                                           c->placement.y()) +
                             w.w2 * double(c->placement.ze());
            if (s < best ||
                (s == best && pick && c->window_pos < pick->window_pos)) {
                best = s;
                pick = c;
            }
        }
    }
    return OpackChoice{pick->window_pos, pick->placement};
}

std::optional<OpackChoice> opack_step(const PackRule& rule,
                                      const std::vector<BinState>& committed,
                                      const std::vector<Dims>& window,
                                      const RobotConfig& cfg, const Weights& w,
                                      const BoxpackOptions& opts) {
    if (window.empty()) return std::nullopt;

    std::vector<BinState> virtual_bins = committed;
    std::vector<OpackCandidate> candidates;
    candidates.reserve(window.size());
    for (int pos : sorted_window_order(window)) {
        const Dims& box = window[std::size_t(pos)];
        auto loc = rule(virtual_bins, box, cfg, w);
        if (!loc) continue;  // box stays on the conveyor this step
        assert(loc->bin_index >= 1 &&
               loc->bin_index <= int(virtual_bins.size()));
        virtual_bins[std::size_t(loc->bin_index - 1)].place(*loc);
        candidates.push_back({box, pos, *loc});
    }
    return boxpack_select(candidates, committed, cfg, w, opts);
}

}  // namespace binpack
