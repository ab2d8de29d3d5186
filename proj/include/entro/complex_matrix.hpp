#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace entro {

using cd = std::complex<double>;

// Dense row-major complex matrix, sized for desk-scale states (dim <= ~64).
// No blocking, no expression templates; everything is O(n^3) and obvious.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static CMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    cd& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const cd& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::span<const cd> data() const { return a_; }

    CMatrix adjoint() const;
    cd trace() const;
    double max_abs() const;             // entrywise max modulus
    double hermiticity_defect() const;  // max |a(i,j) - conj(a(j,i))|

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(cd s);

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(cd s, CMatrix m) { return m *= s; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<cd> a_;
};

CMatrix operator*(const CMatrix& a, const CMatrix& b);

// Kronecker product, row-major block convention: out((i*p+k),(j*q+l)) = a(i,j) b(k,l).
CMatrix kron(const CMatrix& a, const CMatrix& b);

double max_abs_diff(const CMatrix& a, const CMatrix& b);

bool is_unitary(const CMatrix& u, double tol);

}  // namespace entro
