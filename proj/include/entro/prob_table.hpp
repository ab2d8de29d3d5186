#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entro/entropy_diagram.hpp"
#include "entro/log_base.hpp"

namespace entro {

struct Variable {
    std::string label;
    std::size_t size = 0;  // alphabet size, >= 1
};

// Dense joint distribution over named finite-alphabet variables, row-major
// over the variable order. Construction renormalizes drift up to 1e-9 in the
// weight sum and rejects anything worse; negative weights are rejected
// outright.
class ProbTable {
public:
    ProbTable(std::vector<Variable> variables, std::vector<double> weights);

    const std::vector<Variable>& variables() const { return variables_; }
    const std::vector<double>& weights() const { return weights_; }
    std::size_t config_count() const { return weights_.size(); }

    std::size_t variable_index(std::string_view label) const;
    // Resolves labels to positions, rejecting unknowns and duplicates; the
    // result is sorted in table order.
    std::vector<std::size_t> variable_indices(std::span<const std::string> labels) const;

    // Marginal over the given labels, variables kept in table order.
    ProbTable marginal(std::span<const std::string> labels) const;

    // Dense-representation cap; larger joint spaces belong to the sparse
    // equilibration path.
    static constexpr std::size_t kMaxCells = std::size_t{1} << 20;

private:
    std::vector<Variable> variables_;
    std::vector<double> weights_;
};

double shannon_entropy(const ProbTable& table, std::span<const std::string> subset,
                       LogBase base = LogBase::bits);

// H(target | given) = H(target, given) - H(given); never negative.
double conditional_entropy(const ProbTable& table, std::span<const std::string> target,
                           std::span<const std::string> given, LogBase base = LogBase::bits);

// H(x : y) = H(x) + H(y) - H(x, y); symmetric, never negative.
double mutual_entropy(const ProbTable& table, std::span<const std::string> x,
                      std::span<const std::string> y, LogBase base = LogBase::bits);

// sum_i H(A_i) - H(A_1...A_n) over all variables of the table; needs n >= 2.
double correlation_entropy(const ProbTable& table, LogBase base = LogBase::bits);

// Venn decomposition over 2 or 3 disjoint label groups; variables outside
// the groups are marginalized away first.
EntropyDiagram venn_classical(const ProbTable& table,
                              const std::vector<std::vector<std::string>>& parties,
                              LogBase base = LogBase::bits);

struct GibbsSpec {
    std::vector<double> levels;  // energies E_i, model units
    double beta = 0.0;           // inverse temperature, >= 0
    std::optional<std::vector<double>> observable;  // A_i aligned with levels
};

struct GibbsResult {
    ProbTable table;                     // p_i = exp(-beta E_i) / Z
    double partition_function = 0.0;     // Z
    std::optional<double> free_energy;   // F = -ln(Z)/beta; absent at beta = 0
    double entropy = 0.0;                // in the requested base
};

GibbsResult gibbs_table(const GibbsSpec& spec, LogBase base = LogBase::bits,
                        const std::string& label = "X");

// <A> = Z^-1 sum_i A_i exp(-beta E_i); requires the observable.
double thermo_average(const GibbsSpec& spec);

struct MeasurementDemo {
    EntropyDiagram before;  // device in its reference state: {H(S), 0, 0}
    EntropyDiagram after;   // from the joint p(s, m = readout(s))
    ProbTable joint;        // the post-measurement joint table
};

// readout[i] is the pointer value for system configuration i; it must cover
// every configuration (a total map). The system marginal is checked to be
// untouched and H(S) = H(S|M) + H(S:M) to 1e-12.
MeasurementDemo measurement_demo(const ProbTable& system, std::span<const std::size_t> readout,
                                 const std::string& m_label = "M", LogBase base = LogBase::bits);

struct EquilibrationPoint {
    std::size_t step = 0;
    double marginal_sum = 0.0;        // sum_i H(A_i)
    double joint_entropy = 0.0;       // H(A_1...A_n), constant under bijections
    double correlation_entropy = 0.0; // marginal_sum - joint_entropy
};

// The shipped reversible lattice rule: particles update one at a time, each
// shifting its cell by 1 plus its partner's parity (mod total_cells). Every
// sub-step is a cyclic shift in one coordinate, so the composition is a
// bijection on the joint configuration space.
std::vector<std::size_t> parity_shift_rule(std::size_t n, std::size_t total_cells);

// n particles start uniformly spread over the first initial_cells of
// total_cells, uncorrelated; dynamics is a permutation of the joint
// configuration indices and is validated as such. Returns steps + 1 points.
std::vector<EquilibrationPoint> equilibration_demo(std::size_t n, std::size_t initial_cells,
                                                   std::size_t total_cells,
                                                   std::span<const std::size_t> dynamics,
                                                   std::size_t steps,
                                                   LogBase base = LogBase::bits);

// Same, with the shipped parity-shift rule.
std::vector<EquilibrationPoint> equilibration_demo(std::size_t n, std::size_t initial_cells,
                                                   std::size_t total_cells, std::size_t steps,
                                                   LogBase base = LogBase::bits);

}  // namespace entro
