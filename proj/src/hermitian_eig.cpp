#include "entro/hermitian_eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "entro/error.hpp"

namespace entro {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kOffDiagTarget = 1e-12;
constexpr int kMaxSweeps = 100;

double offdiag_frobenius(const CMatrix& a) {
    double s = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

// One complex Jacobi rotation zeroing a(p,q). The 2x2 unitary is a phase
// absorbing arg a(p,q) followed by the classic real rotation.
void rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q) {
    const cd apq = a(p, q);
    const double r = std::abs(apq);
    if (r == 0.0) return;

    const cd phase = apq / r;  // a(p,q) = r * phase
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = (aqq - app) / (2.0 * r);
    const double sgn = theta >= 0.0 ? 1.0 : -1.0;
    const double t = sgn / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    const double cs = 1.0 / std::sqrt(t * t + 1.0);
    const double sn = t * cs;

    // U = diag(1, conj(phase)) * [[cs, sn], [-sn, cs]] acting on columns (p, q)
    const cd u00 = cs;
    const cd u01 = sn;
    const cd u10 = -sn * std::conj(phase);
    const cd u11 = cs * std::conj(phase);

    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {  // A <- A U
        const cd akp = a(k, p), akq = a(k, q);
        a(k, p) = akp * u00 + akq * u10;
        a(k, q) = akp * u01 + akq * u11;
    }
    for (std::size_t k = 0; k < n; ++k) {  // A <- U^dagger A
        const cd apk = a(p, k), aqk = a(q, k);
        a(p, k) = std::conj(u00) * apk + std::conj(u10) * aqk;
        a(q, k) = std::conj(u01) * apk + std::conj(u11) * aqk;
    }
    for (std::size_t k = 0; k < n; ++k) {  // V <- V U
        const cd vkp = v(k, p), vkq = v(k, q);
        v(k, p) = vkp * u00 + vkq * u10;
        v(k, q) = vkp * u01 + vkq * u11;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
}

}  // namespace

std::vector<cd> SpectralDecomp::column(std::size_t k) const {
    std::vector<cd> out(eigenvectors.rows());
    for (std::size_t r = 0; r < out.size(); ++r) out[r] = eigenvectors(r, k);
    return out;
}

SpectralDecomp hermitian_eig(const CMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw ValidationError("hermitian_eig: matrix must be square and non-empty");
    if (m.hermiticity_defect() > kHermTol)
        throw ValidationError("hermitian_eig: matrix is not Hermitian within 1e-10");

    const std::size_t n = m.rows();
    CMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)  // hermitize to kill the sub-tolerance defect
        for (std::size_t c = 0; c < n; ++c)
            a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
    CMatrix v = CMatrix::identity(n);

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (offdiag_frobenius(a) < kOffDiagTarget) break;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

    SpectralDecomp out;
    out.eigenvalues.resize(n);
    out.eigenvectors = CMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = order[k];
        out.eigenvalues[k] = a(src, src).real();
        // phase fix: first significant component real positive
        cd fix = 1.0;
        for (std::size_t r = 0; r < n; ++r) {
            const cd z = v(r, src);
            if (std::abs(z) > 1e-12) {
                fix = std::conj(z) / std::abs(z);
                break;
            }
        }
        for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, src) * fix;
    }
    return out;
}

CMatrix spectral_map(const SpectralDecomp& d, const std::function<double(double)>& f) {
    const std::size_t n = d.eigenvalues.size();
    CMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double fk = f(d.eigenvalues[k]);
        if (fk == 0.0) continue;
        for (std::size_t r = 0; r < n; ++r) {
            const cd vr = d.eigenvectors(r, k);
            if (vr == cd{}) continue;
            for (std::size_t c = 0; c < n; ++c)
                out(r, c) += fk * vr * std::conj(d.eigenvectors(c, k));
        }
    }
    return out;
}

CMatrix matrix_log_on_support(const CMatrix& psd, LogBase base) {
    SpectralDecomp d = hermitian_eig(psd);
    if (!d.eigenvalues.empty() && d.eigenvalues.back() < -kHermTol)
        throw ValidationError("matrix_log_on_support: matrix is not PSD within 1e-10");
    return spectral_map(
        d, [base](double x) { return x > kSupportCutoff ? log_in_base(x, base) : 0.0; });
}

CMatrix matrix_exp_hermitian(const CMatrix& herm, LogBase base) {
    return spectral_map(hermitian_eig(herm), [base](double x) { return exp_in_base(x, base); });
}

}  // namespace entro
