#ifndef BINPACK_MILP_HPP
#define BINPACK_MILP_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "binpack/geometry.hpp"
#include "binpack/opack.hpp"

// Solver-agnostic symbolic MILP for one rolling-horizon step: committed
// boxes enter with their variables pinned, look-ahead boxes carry the
// objective. Models are exported in LP interchange text for external
// solvers; nothing in-repo solves them.

namespace binpack {

enum class VarKind : std::uint8_t { Continuous, Binary };

struct MilpVar {
    std::string name;
    VarKind kind = VarKind::Continuous;
    double lb = 0.0;
    double ub = 0.0;
    double obj = 0.0;
    std::optional<double> fixed;
};

struct LinTerm {
    int var = 0;
    double coeff = 0.0;
};

enum class ConSense : std::uint8_t { LE, GE, EQ };

struct MilpConstraint {
    std::string name;
    std::vector<LinTerm> terms;
    ConSense sense = ConSense::LE;
    double rhs = 0.0;
    std::string tag;  // geometric | stability | cep | fixing
};

struct MilpModel {
    std::vector<MilpVar> vars;
    std::vector<MilpConstraint> cons;
    std::vector<std::string> notes;  // comment lines for the export header

    int add_var(std::string name, VarKind kind, double lb, double ub);
    void add_con(std::string name, std::vector<LinTerm> terms, ConSense sense,
                 double rhs, std::string tag);

    int objective_terms() const;
    int count_tagged(std::string_view tag) const;
};

struct ModelSummary {
    int n_vars = 0;
    int n_cons = 0;
    int n_obj_terms = 0;

    friend bool operator==(const ModelSummary&, const ModelSummary&) = default;
};

// Builds the step model over all committed boxes plus the look-ahead window.
// Throws std::invalid_argument on an empty window or a box that cannot fit
// any bin.
MilpModel build_milp(const std::vector<BinState>& committed,
                     const std::vector<Dims>& window, const RobotConfig& cfg,
                     const Weights& w);

ModelSummary summarize_model(const MilpModel& model);

// LP interchange text. export_model refuses models without objective terms.
std::string export_model_text(const MilpModel& model);
void export_model(const MilpModel& model, const std::string& path);

// Re-parses an exported file into counts; used to round-trip-check exports.
ModelSummary parse_lp_summary(const std::string& path);

}  // namespace binpack

#endif  // BINPACK_MILP_HPP
