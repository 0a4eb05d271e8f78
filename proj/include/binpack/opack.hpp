#ifndef BINPACK_OPACK_HPP
#define BINPACK_OPACK_HPP

#include <functional>
#include <optional>
#include <vector>

#include "binpack/geometry.hpp"
#include "binpack/heuristics.hpp"

// The look-ahead adaptation framework: a pack rule is applied to a virtual
// copy of the open bins, every conveyor box in the look-ahead is packed
// virtually, and exactly one box — picked by the box-selection rule — is
// committed for real.

namespace binpack {

// Objective weights: w1 scales the footprint spread term (x + y), w2 the top
// height, w3 the open-bin index. w3 is kept large so bin preference
// dominates the coordinate terms.
struct Weights {
    double w1 = 1.0;
    double w2 = 1.0;
    double w3 = 100.0;
};

// w1*(x + y) + w2*z_top + w3*bin_index for a resolved placement.
double score(const Placement& p, const Weights& w);

enum class CandidateMode : std::uint8_t { ExtremePoints, FullGrid };

// Look-ahead boxes ordered for virtual packing: volume descending, ties by
// height descending, then by conveyor position (stable).
std::vector<Dims> sort_lookahead(const std::vector<Dims>& window);
std::vector<int> sorted_window_order(const std::vector<Dims>& window);

// The MPackLite pack rule: over all open bins, candidate points and allowed
// orientations, the feasible placement minimizing score(); ties resolved by
// (bin index, z, y, x, orientation order). CEP participates only when
// cfg.require_cep is set.
std::optional<Placement> packrule_mpl(const std::vector<BinState>& bins,
                                      const Dims& box, const RobotConfig& cfg,
                                      const Weights& w, CandidateMode mode);

// A policy's single-box placement rule evaluated against a (virtual) bin
// state.
using PackRule = std::function<std::optional<Placement>(
    const std::vector<BinState>&, const Dims&, const RobotConfig&,
    const Weights&)>;

PackRule make_first_fit_rule();
PackRule make_best_fit_rule();
PackRule make_mpl_rule(CandidateMode mode);

struct OpackCandidate {
    Dims box;
    int window_pos = 0;  // original conveyor position, 0-based
    Placement placement;
};

struct OpackChoice {
    int window_pos = 0;
    Placement placement;
};

// Box-selection options. The alternative rule (large box while the target
// fill is low, small box once it is high) sits behind fill_aware.
struct BoxpackOptions {
    bool fill_aware = false;
    double fill_threshold_pct = 50.0;
};

// Box selection among virtually packed candidates: keeps only placements
// that are stand-alone stable against the committed bins (no support from
// other look-ahead boxes), then minimizes w1*(x+y) + w2*z_top with ties to
// the earlier conveyor position.
std::optional<OpackChoice> boxpack_select(
    const std::vector<OpackCandidate>& candidates,
    const std::vector<BinState>& committed, const RobotConfig& cfg,
    const Weights& w, const BoxpackOptions& opts = {});

// One framework step: sort the window, virtually pack every box with the
// rule (boxes the rule cannot place stay on the conveyor), then select one
// stand-alone-stable candidate. nullopt means exhausted — no box obtained a
// stable location and the caller should cycle a bin.
std::optional<OpackChoice> opack_step(const PackRule& rule,
                                      const std::vector<BinState>& committed,
                                      const std::vector<Dims>& window,
                                      const RobotConfig& cfg, const Weights& w,
                                      const BoxpackOptions& opts = {});

}  // namespace binpack

#endif  // BINPACK_OPACK_HPP
