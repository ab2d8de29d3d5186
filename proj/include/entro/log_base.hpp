#pragma once

#include <cmath>
#include <span>

namespace entro {

// Entropy unit: base-2 logarithms ("bits", the default everywhere except the
// black-hole ledger, which works in nats).
enum class LogBase { bits, nats };

inline double log_in_base(double x, LogBase base) {
    return base == LogBase::bits ? std::log2(x) : std::log(x);
}

inline double exp_in_base(double x, LogBase base) {
    return base == LogBase::bits ? std::exp2(x) : std::exp(x);
}

// -p log p with the 0 log 0 := 0 continuity convention. Values at or below
// zero contribute nothing, which also absorbs the -1e-10-scale eigenvalue
// noise of PSD matrices.
inline double entropy_term(double p, LogBase base) {
    return p > 0.0 ? -p * log_in_base(p, base) : 0.0;
}

inline double distribution_entropy(std::span<const double> p, LogBase base) {
    double h = 0.0;
    for (double x : p) h += entropy_term(x, base);
    return h;
}

namespace detail {

// Clamps rounding-level negatives to zero; anything genuinely negative is
// left alone so it can trip downstream checks.
inline double clamp_tiny_negative(double x, double tol = 1e-12) {
    return (x < 0.0 && x > -tol) ? 0.0 : x;
}

}  // namespace detail

}  // namespace entro
