#ifndef BINPACK_MPACK_HPP
#define BINPACK_MPACK_HPP

#include <functional>
#include <optional>
#include <vector>

#include "binpack/geometry.hpp"
#include "binpack/milp.hpp"
#include "binpack/opack.hpp"

// The rolling-horizon benchmark solver: a joint optimum over every
// look-ahead box per step, found by exact discrete branch-and-bound over
// (bin, point, orientation) assignments. True MILP solving stays external —
// models are exported, never solved in-repo.

namespace binpack {

inline constexpr long kDefaultNodeBudget = 10'000'000;

enum class SolveStatus : std::uint8_t { Optimal, Infeasible, BudgetExhausted };

struct JointSolution {
    // One placement per window box, parallel to the window.
    std::vector<Placement> placements;
    double objective = 0.0;
};

struct JointSolveResult {
    SolveStatus status = SolveStatus::Infeasible;
    std::optional<JointSolution> best;  // incumbent, present on Optimal and
                                        // possibly on BudgetExhausted
    long nodes = 0;
};

// Global minimum of the step objective over joint assignments of the whole
// window, subject to containment, non-overlap, orientation, stability and
// (when cfg asks) CEP. Feasibility is evaluated on the complete
// configuration, so a box may rest on another window box placed after it in
// search order. With full-grid candidates this is the exact optimum at grid
// resolution.
JointSolveResult solve_joint_exact(const std::vector<BinState>& committed,
                                   const std::vector<Dims>& window,
                                   const RobotConfig& cfg, const Weights& w,
                                   CandidateMode mode,
                                   long node_budget = kDefaultNodeBudget);

// Bin-manager hook: close the highest-fill-rate open bin and open a fresh
// one in place, reindexing the survivors. Provided by the simulator.
class BinCycler {
  public:
    virtual ~BinCycler() = default;
    virtual void cycle() = 0;
};

// Receives the model of each step's successful solve for export.
using MilpSink = std::function<void(const MilpModel&, int lookahead)>;

struct MpackStepOutcome {
    int window_pos = 0;
    Placement placement;
    int cycles = 0;            // close/open events performed by the step
    bool budget_exhausted = false;
    int solved_lookahead = 0;  // window size of the solve that produced it
};

// One step: solve the full window; on failure drop the farthest box and
// retry; at window size one evaluate each conveyor box individually; if
// still nothing, cycle a bin and start over. Termination is guaranteed by
// packability — the lone box always fits an empty bin. `bins` must alias the
// cycler's open-bin storage so cycles are visible here.
MpackStepOutcome mpack_step(std::vector<BinState>& bins,
                            const std::vector<Dims>& window,
                            const RobotConfig& cfg, const Weights& w,
                            CandidateMode mode, long node_budget,
                            BinCycler& cycler,
                            const MilpSink& milp_sink = nullptr);

}  // namespace binpack

#endif  // BINPACK_MPACK_HPP
