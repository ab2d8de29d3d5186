#pragma once

#include <functional>
#include <vector>

#include "entro/complex_matrix.hpp"
#include "entro/log_base.hpp"

namespace entro {

// Eigensystem of a Hermitian matrix. Eigenvalues are real and sorted
// descending; eigenvectors are the matching orthonormal columns, each with
// its first significant component rotated real positive so repeated runs
// and platforms produce the same decomposition.
struct SpectralDecomp {
    std::vector<double> eigenvalues;
    CMatrix eigenvectors;  // column k pairs with eigenvalues[k]

    std::vector<cd> column(std::size_t k) const;
};

// Cyclic Jacobi sweeps on the (hermitized) input. Converges when the
// off-diagonal Frobenius mass drops below 1e-12, hard cap 100 sweeps.
// Inputs with hermiticity defect above 1e-10 are rejected.
SpectralDecomp hermitian_eig(const CMatrix& m);

// V f(lambda) V^dagger.
CMatrix spectral_map(const SpectralDecomp& d, const std::function<double(double)>& f);

// Eigenvalues at or below this cutoff count as kernel for all on-support
// matrix functions.
inline constexpr double kSupportCutoff = 1e-12;

// log(rho) on the support of rho, zero on the kernel. Requires rho PSD up to
// the usual -1e-10 eigenvalue tolerance.
CMatrix matrix_log_on_support(const CMatrix& psd, LogBase base = LogBase::bits);

// exp(h) in the given base over the full space (the kernel of h maps to 1).
CMatrix matrix_exp_hermitian(const CMatrix& herm, LogBase base = LogBase::bits);

}  // namespace entro
