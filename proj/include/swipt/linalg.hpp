// SPDX-License-Identifier: Apache-2.0
//
// Small dense complex matrices and a one-sided Jacobi SVD. Sized for MIMO
// channel matrices (a handful of antennas per side), not general workloads.
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace swipt {

using Complex = std::complex<double>;

/// Row-major dense complex matrix. Entries are always finite.
class ComplexMatrix
{
  public:
    ComplexMatrix() = default;
    /// Zero-filled rows x cols matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Takes ownership of row-major entries; throws InvalidArgument if the
    /// length is not rows*cols or any entry is non-finite.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

    Complex operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    std::span<const Complex> entries() const noexcept { return data_; }

    double frobenius_norm() const;

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix hermitian_transpose(const ComplexMatrix& a);
ComplexMatrix scale(const ComplexMatrix& a, Complex c);
ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b);

/// Largest |entry| of a - b. Dimensions must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Reduced SVD h = u * diag(singular_values) * v^H.
struct SvdResult
{
    ComplexMatrix u;                     // rows(h) x k
    std::vector<double> singular_values; // descending, k = min(rows, cols)
    ComplexMatrix v;                     // cols(h) x k
    std::size_t rank = 0;                // number of nonzero singular values
    int sweeps = 0;
};

struct SvdOptions
{
    int max_sweeps = 100;
    /// Columns p, q count as orthogonal once |a_p^H a_q| <= tol * |a_p| |a_q|.
    double orthogonality_tol = 1e-14;
    /// Singular values below rank_tol * sigma_max are set to exactly zero.
    double rank_tol = 1e-12;
};

/// One-sided (Hestenes) Jacobi SVD.
///
/// Works on the tall orientation internally (h^H when h is wide). Singular
/// vectors belonging to clamped zero singular values are completed to an
/// orthonormal set by Gram-Schmidt, so u and v always have orthonormal columns.
///
/// Throws InvalidArgument for an empty input and NumericalFailure, carrying
/// the largest remaining normalized column inner product, if max_sweeps is hit.
SvdResult reduced_svd(const ComplexMatrix& h, const SvdOptions& options = {});

} // namespace swipt
