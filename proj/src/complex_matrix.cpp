#include "entro/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "entro/error.hpp"

namespace entro {

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix CMatrix::adjoint() const {
    CMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

cd CMatrix::trace() const {
    cd t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double CMatrix::max_abs() const {
    double m = 0.0;
    for (const cd& z : a_) m = std::max(m, std::abs(z));
    return m;
}

double CMatrix::hermiticity_defect() const {
    if (rows_ != cols_) return std::numeric_limits<double>::infinity();
    double d = 0.0;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r; c < cols_; ++c)
            d = std::max(d, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return d;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix shape mismatch in addition");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ValidationError("matrix shape mismatch in subtraction");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

CMatrix& CMatrix::operator*=(cd s) {
    for (cd& z : a_) z *= s;
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols() != b.rows()) throw ValidationError("matrix shape mismatch in product");
    CMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const cd arx = a(r, k);
            if (arx == cd{}) continue;
            for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += arx * b(k, c);
        }
    }
    return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cd aij = a(i, j);
            if (aij == cd{}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return std::numeric_limits<double>::infinity();
    double m = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
    return m;
}

bool is_unitary(const CMatrix& u, double tol) {
    if (u.rows() != u.cols() || u.rows() == 0) return false;
    return max_abs_diff(u.adjoint() * u, CMatrix::identity(u.rows())) <= tol;
}

}  // namespace entro
