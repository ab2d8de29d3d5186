#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "entro/log_base.hpp"

namespace entro {

// Venn-diagram decomposition of a joint entropy over 2 or 3 parties.
//
// Cell order, arity 2: {A|B, A:B, B|A}.
// Cell order, arity 3: {A|BC, B|AC, C|AB, A:B|C, A:C|B, B:C|A, A:B:C},
// i.e. conditioned singles, conditioned pairs, then the center.
// Quantum cells may be negative; the struct stores whatever the
// inclusion-exclusion arithmetic produced.
struct EntropyDiagram {
    int arity = 2;
    std::vector<std::string> labels;  // one display label per party
    std::vector<double> cells;        // 3 or 7, canonical order above
    LogBase base = LogBase::bits;

    // Canonical cell names built from the party labels ("A|B", "A:B:C", ...).
    std::vector<std::string> cell_names() const;
    double cell(std::string_view name) const;

    double total() const;                      // sum of all cells = joint entropy
    double marginal(std::size_t party) const;  // one party's entropy from its cells
};

// Builds the inclusion-exclusion cells from a subset-entropy callback;
// bit i of the mask selects party i.
EntropyDiagram diagram_from_subset_entropy(std::vector<std::string> labels,
                                           const std::function<double(unsigned)>& subset_entropy,
                                           LogBase base);

}  // namespace entro
