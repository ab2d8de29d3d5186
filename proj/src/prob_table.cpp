#include "entro/prob_table.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "entro/error.hpp"

namespace entro {

namespace {

constexpr double kRenormDrift = 1e-9;

// Row-major strides for a list of alphabet sizes.
std::vector<std::size_t> strides_for(const std::vector<Variable>& vars) {
    std::vector<std::size_t> s(vars.size(), 1);
    for (std::size_t i = vars.size(); i-- > 1;) s[i - 1] = s[i] * vars[i].size;
    return s;
}

void check_disjoint(const ProbTable& t, std::span<const std::string> a,
                    std::span<const std::string> b) {
    const auto ia = t.variable_indices(a);
    const auto ib = t.variable_indices(b);
    std::set<std::size_t> seen(ia.begin(), ia.end());
    for (std::size_t i : ib)
        if (seen.count(i))
            throw ValidationError("label groups must be disjoint; '" + t.variables()[i].label +
                                  "' appears in both");
}

}  // namespace

ProbTable::ProbTable(std::vector<Variable> variables, std::vector<double> weights)
    : variables_(std::move(variables)), weights_(std::move(weights)) {
    if (variables_.empty()) throw ValidationError("ProbTable needs at least one variable");
    std::set<std::string> labels;
    std::size_t cells = 1;
    for (const auto& v : variables_) {
        if (v.size < 1) throw ValidationError("variable '" + v.label + "' has alphabet size 0");
        if (!labels.insert(v.label).second)
            throw ValidationError("duplicate variable label '" + v.label + "'");
        if (cells > kMaxCells / v.size)
            throw ValidationError("ProbTable exceeds the dense cell cap (2^20)");
        cells *= v.size;
    }
    if (cells != weights_.size())
        throw ValidationError("weight count does not match the product of alphabet sizes");

    double sum = 0.0;
    for (double w : weights_) {
        if (w < 0.0) throw ValidationError("negative weight in ProbTable");
        sum += w;
    }
    if (std::abs(sum - 1.0) > kRenormDrift)
        throw ValidationError("weights sum to " + std::to_string(sum) +
                              ", outside the 1e-9 renormalization window");
    if (sum != 1.0)
        for (double& w : weights_) w /= sum;
}

std::size_t ProbTable::variable_index(std::string_view label) const {
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i].label == label) return i;
    throw ValidationError("unknown variable label '" + std::string(label) + "'");
}

std::vector<std::size_t> ProbTable::variable_indices(std::span<const std::string> labels) const {
    if (labels.empty()) throw ValidationError("empty label set");
    std::set<std::size_t> idx;
    for (const auto& l : labels)
        if (!idx.insert(variable_index(l)).second)
            throw ValidationError("duplicate label '" + l + "' in label set");
    return {idx.begin(), idx.end()};
}

ProbTable ProbTable::marginal(std::span<const std::string> labels) const {
    const auto keep = variable_indices(labels);
    if (keep.size() == variables_.size()) return *this;

    std::vector<Variable> kept_vars;
    for (std::size_t i : keep) kept_vars.push_back(variables_[i]);
    const auto out_strides = strides_for(kept_vars);
    const auto in_strides = strides_for(variables_);

    std::size_t out_cells = 1;
    for (const auto& v : kept_vars) out_cells *= v.size;
    std::vector<double> out(out_cells, 0.0);

    for (std::size_t idx = 0; idx < weights_.size(); ++idx) {
        if (weights_[idx] == 0.0) continue;
        std::size_t o = 0;
        for (std::size_t k = 0; k < keep.size(); ++k) {
            const std::size_t digit = (idx / in_strides[keep[k]]) % variables_[keep[k]].size;
            o += digit * out_strides[k];
        }
        out[o] += weights_[idx];
    }
    // bypass renormalization: marginal sums are exactly the table's sums
    ProbTable m(std::move(kept_vars), std::move(out));
    return m;
}

double shannon_entropy(const ProbTable& table, std::span<const std::string> subset, LogBase base) {
    const ProbTable m = table.marginal(subset);
    return distribution_entropy(m.weights(), base);
}

double conditional_entropy(const ProbTable& table, std::span<const std::string> target,
                           std::span<const std::string> given, LogBase base) {
    check_disjoint(table, target, given);
    std::vector<std::string> joint(target.begin(), target.end());
    joint.insert(joint.end(), given.begin(), given.end());
    const double h = shannon_entropy(table, joint, base) - shannon_entropy(table, given, base);
    return detail::clamp_tiny_negative(h);
}

double mutual_entropy(const ProbTable& table, std::span<const std::string> x,
                      std::span<const std::string> y, LogBase base) {
    check_disjoint(table, x, y);
    std::vector<std::string> joint(x.begin(), x.end());
    joint.insert(joint.end(), y.begin(), y.end());
    const double i = shannon_entropy(table, x, base) + shannon_entropy(table, y, base) -
                     shannon_entropy(table, joint, base);
    return detail::clamp_tiny_negative(i);
}

double correlation_entropy(const ProbTable& table, LogBase base) {
    if (table.variables().size() < 2)
        throw ValidationError("correlation_entropy needs at least two variables");
    double marginals = 0.0;
    for (const auto& v : table.variables())
        marginals += shannon_entropy(table, std::vector<std::string>{v.label}, base);
    return detail::clamp_tiny_negative(marginals - distribution_entropy(table.weights(), base));
}

EntropyDiagram venn_classical(const ProbTable& table,
                              const std::vector<std::vector<std::string>>& parties, LogBase base) {
    if (parties.size() != 2 && parties.size() != 3)
        throw ValidationError("venn_classical takes 2 or 3 label groups");
    for (std::size_t i = 0; i < parties.size(); ++i)
        for (std::size_t j = i + 1; j < parties.size(); ++j)
            check_disjoint(table, parties[i], parties[j]);

    std::vector<std::string> labels;
    for (const auto& group : parties) {
        if (group.empty()) throw ValidationError("empty party in venn_classical");
        std::string l;
        for (const auto& s : group) l += s;
        labels.push_back(l);
    }
    const auto subset_entropy = [&](unsigned mask) {
        std::vector<std::string> sel;
        for (std::size_t i = 0; i < parties.size(); ++i)
            if (mask & (1u << i)) sel.insert(sel.end(), parties[i].begin(), parties[i].end());
        return shannon_entropy(table, sel, base);
    };
    return diagram_from_subset_entropy(std::move(labels), subset_entropy, base);
}

GibbsResult gibbs_table(const GibbsSpec& spec, LogBase base, const std::string& label) {
    if (spec.levels.empty()) throw ValidationError("GibbsSpec has no energy levels");
    if (spec.beta < 0.0) throw ValidationError("GibbsSpec has negative beta");
    if (spec.observable && spec.observable->size() != spec.levels.size())
        throw ValidationError("observable length does not match the level count");

    // log-sum-exp stabilization around the ground state
    const double e_min = *std::min_element(spec.levels.begin(), spec.levels.end());
    std::vector<double> w(spec.levels.size());
    double zs = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        w[i] = std::exp(-spec.beta * (spec.levels[i] - e_min));
        zs += w[i];
    }
    for (double& x : w) x /= zs;

    GibbsResult out{ProbTable({{label, w.size()}}, w), 0.0, std::nullopt, 0.0};
    out.partition_function = std::exp(-spec.beta * e_min) * zs;
    if (spec.beta > 0.0) out.free_energy = e_min - std::log(zs) / spec.beta;
    out.entropy = distribution_entropy(out.table.weights(), base);
    return out;
}

double thermo_average(const GibbsSpec& spec) {
    if (!spec.observable) throw ValidationError("thermo_average requires observable values");
    const GibbsResult g = gibbs_table(spec);
    const auto& p = g.table.weights();
    double avg = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) avg += (*spec.observable)[i] * p[i];
    return avg;
}

MeasurementDemo measurement_demo(const ProbTable& system, std::span<const std::size_t> readout,
                                 const std::string& m_label, LogBase base) {
    if (readout.size() != system.config_count())
        throw ValidationError("readout map must cover every system configuration (got " +
                              std::to_string(readout.size()) + " entries for " +
                              std::to_string(system.config_count()) + " configurations)");
    for (const auto& v : system.variables())
        if (v.label == m_label)
            throw ValidationError("device label '" + m_label + "' collides with a system variable");

    const std::size_t m_count = *std::max_element(readout.begin(), readout.end()) + 1;

    std::vector<Variable> joint_vars = system.variables();
    joint_vars.push_back({m_label, m_count});

    // before: device parked in its reference value 0
    std::vector<double> before_w(system.config_count() * m_count, 0.0);
    for (std::size_t s = 0; s < system.config_count(); ++s)
        before_w[s * m_count] = system.weights()[s];
    const ProbTable before_table(joint_vars, std::move(before_w));

    // after: pointer copies the readout value
    std::vector<double> after_w(system.config_count() * m_count, 0.0);
    for (std::size_t s = 0; s < system.config_count(); ++s)
        after_w[s * m_count + readout[s]] = system.weights()[s];
    ProbTable after_table(joint_vars, std::move(after_w));

    std::vector<std::string> s_labels;
    for (const auto& v : system.variables()) s_labels.push_back(v.label);
    const std::vector<std::vector<std::string>> parties = {s_labels, {m_label}};

    MeasurementDemo demo{venn_classical(before_table, parties, base),
                         venn_classical(after_table, parties, base), std::move(after_table)};

    // the measurement only redistributes H(S) between the conditional and
    // shared cells; check both halves of that statement
    const double hs = shannon_entropy(system, s_labels, base);
    const double hs_after = demo.after.marginal(0);
    if (std::abs(hs - hs_after) > 1e-12)
        throw std::logic_error("measurement_demo: system marginal entropy drifted");
    if (std::abs((demo.after.cells[0] + demo.after.cells[1]) - hs) > 1e-12)
        throw std::logic_error("measurement_demo: H(S|M) + H(S:M) != H(S)");
    return demo;
}

std::vector<std::size_t> parity_shift_rule(std::size_t n, std::size_t total_cells) {
    std::size_t space = 1;
    for (std::size_t i = 0; i < n; ++i) space *= total_cells;
    std::vector<std::size_t> perm(space);
    std::vector<std::size_t> cells(n);
    for (std::size_t idx = 0; idx < space; ++idx) {
        std::size_t rem = idx;
        for (std::size_t i = n; i-- > 0;) {
            cells[i] = rem % total_cells;
            rem /= total_cells;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t shift = 1 + (n > 1 ? cells[(i + 1) % n] % 2 : 0);
            cells[i] = (cells[i] + shift) % total_cells;
        }
        std::size_t out = 0;
        for (std::size_t i = 0; i < n; ++i) out = out * total_cells + cells[i];
        perm[idx] = out;
    }
    return perm;
}

std::vector<EquilibrationPoint> equilibration_demo(std::size_t n, std::size_t initial_cells,
                                                   std::size_t total_cells,
                                                   std::span<const std::size_t> dynamics,
                                                   std::size_t steps, LogBase base) {
    if (n == 0) throw ValidationError("equilibration_demo needs at least one particle");
    if (initial_cells == 0 || initial_cells > total_cells)
        throw ValidationError("equilibration_demo requires 1 <= v <= V");
    std::size_t space = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (space > ProbTable::kMaxCells / total_cells)
            throw ValidationError("joint configuration space exceeds the 2^20 cap");
        space *= total_cells;
    }
    if (dynamics.size() != space)
        throw ValidationError("dynamics must map all " + std::to_string(space) +
                              " joint configurations");
    std::vector<bool> seen(space, false);
    for (std::size_t to : dynamics) {
        if (to >= space || seen[to])
            throw ValidationError("dynamics is not invertible on the joint configuration space");
        seen[to] = true;
    }

    // sparse state: configuration index -> probability
    std::map<std::size_t, double> state;
    const double p0 = 1.0 / std::pow(static_cast<double>(initial_cells), static_cast<double>(n));
    std::vector<std::size_t> cells(n, 0);
    for (;;) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < n; ++i) idx = idx * total_cells + cells[i];
        state[idx] = p0;
        std::size_t i = n;
        while (i-- > 0) {
            if (++cells[i] < initial_cells) break;
            cells[i] = 0;
            if (i == 0) goto filled;
        }
        if (cells == std::vector<std::size_t>(n, 0)) break;
    }
filled:

    const auto observe = [&](std::size_t step) {
        EquilibrationPoint pt;
        pt.step = step;
        std::vector<std::vector<double>> marg(n, std::vector<double>(total_cells, 0.0));
        for (const auto& [idx, p] : state) {
            pt.joint_entropy += entropy_term(p, base);
            std::size_t rem = idx;
            for (std::size_t i = n; i-- > 0;) {
                marg[i][rem % total_cells] += p;
                rem /= total_cells;
            }
        }
        for (const auto& m : marg) pt.marginal_sum += distribution_entropy(m, base);
        pt.correlation_entropy = detail::clamp_tiny_negative(pt.marginal_sum - pt.joint_entropy);
        return pt;
    };

    std::vector<EquilibrationPoint> trajectory;
    trajectory.reserve(steps + 1);
    trajectory.push_back(observe(0));
    for (std::size_t s = 1; s <= steps; ++s) {
        std::map<std::size_t, double> next;
        for (const auto& [idx, p] : state) next[dynamics[idx]] = p;
        state.swap(next);
        trajectory.push_back(observe(s));
    }
    return trajectory;
}

std::vector<EquilibrationPoint> equilibration_demo(std::size_t n, std::size_t initial_cells,
                                                   std::size_t total_cells, std::size_t steps,
                                                   LogBase base) {
    const auto rule = parity_shift_rule(n, total_cells);
    return equilibration_demo(n, initial_cells, total_cells, rule, steps, base);
}

}  // namespace entro
