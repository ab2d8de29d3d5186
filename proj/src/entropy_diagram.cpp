#include "entro/entropy_diagram.hpp"

#include <numeric>

#include "entro/error.hpp"

namespace entro {

std::vector<std::string> EntropyDiagram::cell_names() const {
    const auto& L = labels;
    if (arity == 2)
        return {L[0] + "|" + L[1], L[0] + ":" + L[1], L[1] + "|" + L[0]};
    return {L[0] + "|" + L[1] + L[2],       L[1] + "|" + L[0] + L[2],
            L[2] + "|" + L[0] + L[1],       L[0] + ":" + L[1] + "|" + L[2],
            L[0] + ":" + L[2] + "|" + L[1], L[1] + ":" + L[2] + "|" + L[0],
            L[0] + ":" + L[1] + ":" + L[2]};
}

double EntropyDiagram::cell(std::string_view name) const {
    const auto names = cell_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return cells[i];
    throw ValidationError("entropy diagram has no cell named '" + std::string(name) + "'");
}

double EntropyDiagram::total() const {
    return std::accumulate(cells.begin(), cells.end(), 0.0);
}

double EntropyDiagram::marginal(std::size_t party) const {
    if (arity == 2) {
        if (party == 0) return cells[0] + cells[1];
        if (party == 1) return cells[2] + cells[1];
    } else {
        if (party == 0) return cells[0] + cells[3] + cells[4] + cells[6];
        if (party == 1) return cells[1] + cells[3] + cells[5] + cells[6];
        if (party == 2) return cells[2] + cells[4] + cells[5] + cells[6];
    }
    throw ValidationError("entropy diagram party index out of range");
}

EntropyDiagram diagram_from_subset_entropy(std::vector<std::string> labels,
                                           const std::function<double(unsigned)>& S,
                                           LogBase base) {
    const std::size_t n = labels.size();
    if (n != 2 && n != 3) throw ValidationError("entropy diagrams support 2 or 3 parties");

    EntropyDiagram d;
    d.arity = static_cast<int>(n);
    d.labels = std::move(labels);
    d.base = base;

    if (n == 2) {
        const double sa = S(0b01), sb = S(0b10), sab = S(0b11);
        d.cells = {sab - sb, sa + sb - sab, sab - sa};
        return d;
    }

    const double sa = S(0b001), sb = S(0b010), sc = S(0b100);
    const double sab = S(0b011), sac = S(0b101), sbc = S(0b110);
    const double sabc = S(0b111);
    const double center = sa + sb + sc - sab - sac - sbc + sabc;
    d.cells = {sabc - sbc,              // A|BC
               sabc - sac,              // B|AC
               sabc - sab,              // C|AB
               sac + sbc - sc - sabc,   // A:B|C
               sab + sbc - sb - sabc,   // A:C|B
               sab + sac - sa - sabc,   // B:C|A
               center};
    return d;
}

}  // namespace entro
