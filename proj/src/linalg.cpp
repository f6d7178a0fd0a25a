// SPDX-License-Identifier: Apache-2.0
#include "swipt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "swipt/errors.hpp"

namespace swipt {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries))
{
    if (data_.size() != rows_ * cols_) {
        throw InvalidArgument(fmt::format("ComplexMatrix: {} entries given for a {}x{} matrix",
                                          data_.size(), rows_, cols_));
    }
    for (const auto& z : data_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InvalidArgument("ComplexMatrix: non-finite entry");
        }
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n)
{
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag)
{
    ComplexMatrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

double ComplexMatrix::frobenius_norm() const
{
    double sum = 0.0;
    for (const auto& z : data_) sum += std::norm(z);
    return std::sqrt(sum);
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b)
{
    if (a.cols() != b.rows()) {
        throw InvalidArgument(fmt::format("matmul: inner dimensions differ ({}x{} times {}x{})",
                                          a.rows(), a.cols(), b.rows(), b.cols()));
    }
    ComplexMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

ComplexMatrix hermitian_transpose(const ComplexMatrix& a)
{
    ComplexMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = std::conj(a(i, j));
    return t;
}

ComplexMatrix scale(const ComplexMatrix& a, Complex c)
{
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) *= c;
    return out;
}

ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InvalidArgument("subtract: dimension mismatch");
    }
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) -= b(i, j);
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InvalidArgument("max_abs_diff: dimension mismatch");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i)
        worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
    return worst;
}

namespace {

struct TallSvd
{
    ComplexMatrix u; // m x n
    std::vector<double> sigma;
    ComplexMatrix v; // n x n
    std::size_t rank = 0;
    int sweeps = 0;
};

// Replace column `col` of q with a unit vector orthogonal to every column in
// `filled`. Tries the standard basis in order, so the result is deterministic.
void complete_column(ComplexMatrix& q, std::size_t col, const std::vector<std::size_t>& filled)
{
    const std::size_t m = q.rows();
    for (std::size_t trial = 0; trial < m; ++trial) {
        std::vector<Complex> x(m, 0.0);
        x[trial] = 1.0;
        // Two passes of classical Gram-Schmidt.
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t f : filled) {
                Complex dot = 0.0;
                for (std::size_t i = 0; i < m; ++i) dot += std::conj(q(i, f)) * x[i];
                for (std::size_t i = 0; i < m; ++i) x[i] -= dot * q(i, f);
            }
        }
        double nrm = 0.0;
        for (const auto& z : x) nrm += std::norm(z);
        nrm = std::sqrt(nrm);
        if (nrm > 0.5) {
            for (std::size_t i = 0; i < m; ++i) q(i, col) = x[i] / nrm;
            return;
        }
    }
    throw NumericalFailure("reduced_svd: could not complete orthonormal basis", 1.0);
}

TallSvd jacobi_tall(const ComplexMatrix& h, const SvdOptions& opt)
{
    const std::size_t m = h.rows();
    const std::size_t n = h.cols();
    ComplexMatrix a = h;
    ComplexMatrix v = ComplexMatrix::identity(n);

    int sweep = 0;
    double off = 0.0;
    bool converged = (n < 2);
    while (!converged && sweep < opt.max_sweeps) {
        ++sweep;
        off = 0.0;
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double alpha = 0.0, beta = 0.0;
                Complex gamma = 0.0;
                for (std::size_t i = 0; i < m; ++i) {
                    alpha += std::norm(a(i, p));
                    beta += std::norm(a(i, q));
                    gamma += std::conj(a(i, p)) * a(i, q);
                }
                const double g = std::abs(gamma);
                if (alpha == 0.0 || beta == 0.0 || g == 0.0) continue;
                const double rel = g / std::sqrt(alpha * beta);
                off = std::max(off, rel);
                if (rel <= opt.orthogonality_tol) continue;
                rotated = true;

                // Rotate the phase out of gamma, then apply a real Jacobi rotation.
                const Complex phase_conj = std::conj(gamma) / g;
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (std::size_t i = 0; i < m; ++i) {
                    const Complex ap = a(i, p);
                    const Complex bq = a(i, q) * phase_conj;
                    a(i, p) = c * ap - s * bq;
                    a(i, q) = s * ap + c * bq;
                }
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex vp = v(i, p);
                    const Complex vq = v(i, q) * phase_conj;
                    v(i, p) = c * vp - s * vq;
                    v(i, q) = s * vp + c * vq;
                }
            }
        }
        converged = !rotated;
    }
    if (!converged) {
        throw NumericalFailure(
            fmt::format("reduced_svd: no convergence after {} sweeps (residual {:.3e})", sweep, off), off);
    }

    std::vector<double> norms(n);
    for (std::size_t k = 0; k < n; ++k) {
        double s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += std::norm(a(i, k));
        norms[k] = std::sqrt(s);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    // Stable so equal singular values keep their column order.
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

    TallSvd out{ComplexMatrix(m, n), std::vector<double>(n), ComplexMatrix(n, n), 0, sweep};
    const double sigma_max = n > 0 ? norms[order[0]] : 0.0;
    std::vector<std::size_t> filled;
    std::vector<std::size_t> missing;
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = order[k];
        for (std::size_t i = 0; i < n; ++i) out.v(i, k) = v(i, src);
        double sigma = norms[src];
        if (sigma_max == 0.0 || sigma < opt.rank_tol * sigma_max) sigma = 0.0;
        out.sigma[k] = sigma;
        if (sigma > 0.0) {
            for (std::size_t i = 0; i < m; ++i) out.u(i, k) = a(i, src) / sigma;
            filled.push_back(k);
            ++out.rank;
        } else {
            missing.push_back(k);
        }
    }
    for (std::size_t k : missing) {
        complete_column(out.u, k, filled);
        filled.push_back(k);
    }
    return out;
}

} // namespace

SvdResult reduced_svd(const ComplexMatrix& h, const SvdOptions& options)
{
    if (h.empty()) throw InvalidArgument("reduced_svd: empty matrix");

    if (h.rows() >= h.cols()) {
        TallSvd t = jacobi_tall(h, options);
        return SvdResult{std::move(t.u), std::move(t.sigma), std::move(t.v), t.rank, t.sweeps};
    }
    // h^H = U' S V'^H  =>  h = V' S U'^H.
    TallSvd t = jacobi_tall(hermitian_transpose(h), options);
    return SvdResult{std::move(t.v), std::move(t.sigma), std::move(t.u), t.rank, t.sweeps};
}

} // namespace swipt
