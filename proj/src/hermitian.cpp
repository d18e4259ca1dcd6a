#include "bnpick/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bnpick {

namespace {

double off_diagonal_mass(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j) s += std::norm(a.at(i, j));
    return std::sqrt(s);
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
    ComplexMatrix h(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            h.at(i, j) = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
    return h;
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix& m, const Tolerances& tol) {
    if (m.rows() != m.cols()) raise(ErrorCode::NotHermitian, "matrix is not square");
    if (!m.all_finite()) raise(ErrorCode::NotHermitian, "matrix has non-finite entries");
    const double defect = m.hermitian_defect();
    if (defect > tol.tol_herm)
        raise(ErrorCode::NotHermitian,
              "hermitian defect " + std::to_string(defect) + " exceeds tolerance");

    const std::size_t n = m.rows();
    ComplexMatrix a = hermitian_part(m);
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double scale = std::max(a.frobenius(), 1e-300);
    const int max_sweeps = 64;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_mass(a) <= tol.tol_eig * scale) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a.at(p, q);
                const double g = std::abs(apq);
                if (g <= 1e-300) continue;
                const Complex phase = apq / g;  // e^{i phi}
                const double alpha = a.at(p, p).real();
                const double beta = a.at(q, q).real();
                const double tau = (beta - alpha) / (2.0 * g);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex se_pos = s * phase;             // s e^{i phi}
                const Complex se_neg = s * std::conj(phase);  // s e^{-i phi}

                // rows p,q: A <- G* A
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a.at(p, k), aqk = a.at(q, k);
                    a.at(p, k) = c * apk - se_pos * aqk;
                    a.at(q, k) = se_neg * apk + c * aqk;
                }
                // columns p,q: A <- A G
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a.at(k, p), akq = a.at(k, q);
                    a.at(k, p) = c * akp - se_neg * akq;
                    a.at(k, q) = se_pos * akp + c * akq;
                }
                // accumulate V <- V G
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v.at(k, p), vkq = v.at(k, q);
                    v.at(k, p) = c * vkp - se_neg * vkq;
                    v.at(k, q) = se_pos * vkp + c * vkq;
                }
                a.at(p, q) = 0.0;
                a.at(q, p) = 0.0;
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a.at(i, i).real() < a.at(j, j).real(); });

    HermitianEigen out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = a.at(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors.at(i, j) = v.at(i, order[j]);
    }
    return out;
}

Signature signature_of_eigenvalues(const std::vector<double>& values, double zero_tol) {
    Signature s;
    for (double lam : values) {
        if (lam < -zero_tol)
            ++s.n_neg;
        else if (lam > zero_tol)
            ++s.n_pos;
        else
            ++s.n_zero;
    }
    return s;
}

Signature signature(const ComplexMatrix& m, double zero_tol, const Tolerances& tol) {
    const HermitianEigen eig = hermitian_eigen(m, tol);
    double cut = zero_tol;
    if (cut < 0.0) {
        double lmax = 0.0;
        for (double lam : eig.values) lmax = std::max(lmax, std::abs(lam));
        cut = tol.zero_tol * lmax;
    }
    return signature_of_eigenvalues(eig.values, cut);
}

namespace {

ComplexMatrix invert_general(const ComplexMatrix& m, const Tolerances& tol) {
    const std::size_t n = m.rows();
    ComplexMatrix a = m;
    ComplexMatrix inv = ComplexMatrix::identity(n);
    const double pivot_floor = tol.zero_tol * std::max(m.max_abs(), 1e-300);

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a.at(r, col)) > std::abs(a.at(piv, col))) piv = r;
        if (std::abs(a.at(piv, col)) <= pivot_floor)
            raise(ErrorCode::Singular, "pivot below threshold in elimination");
        if (piv != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        }
        const Complex d = a.at(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) /= d;
            inv.at(col, j) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const Complex f = a.at(r, col);
            if (f == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                a.at(r, j) -= f * a.at(col, j);
                inv.at(r, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

}  // namespace

ComplexMatrix invert(const ComplexMatrix& m, const Tolerances& tol) {
    if (m.rows() != m.cols()) raise(ErrorCode::Singular, "matrix is not square");
    if (m.rows() == 0) return m;

    if (m.hermitian_defect() <= tol.tol_herm) {
        const HermitianEigen eig = hermitian_eigen(m, tol);
        double lmax = 0.0;
        for (double lam : eig.values) lmax = std::max(lmax, std::abs(lam));
        const double cut = tol.zero_tol * std::max(lmax, 1e-300);
        for (double lam : eig.values)
            if (std::abs(lam) <= cut)
                raise(ErrorCode::Singular, "eigenvalue below zero threshold");
        const std::size_t n = m.rows();
        ComplexMatrix inv(n, n);
        // V diag(1/lambda) V*
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j <= i; ++j) {
                Complex s = 0.0;
                for (std::size_t k = 0; k < n; ++k)
                    s += eig.vectors.at(i, k) * std::conj(eig.vectors.at(j, k)) / eig.values[k];
                inv.at(i, j) = s;
                inv.at(j, i) = std::conj(s);
            }
        for (std::size_t i = 0; i < n; ++i) inv.at(i, i) = inv.at(i, i).real();
        return inv;
    }
    return invert_general(m, tol);
}

ComplexMatrix schur_complement(const ComplexMatrix& m, std::size_t split, const Tolerances& tol) {
    if (m.rows() != m.cols()) raise(ErrorCode::Singular, "matrix is not square");
    if (split == 0 || split > m.rows())
        raise(ErrorCode::Singular, "invalid split for Schur complement");
    const std::size_t n = m.rows();
    const std::size_t tail = n - split;
    const ComplexMatrix m11 = m.block(0, 0, split, split);
    const ComplexMatrix m12 = m.block(0, split, split, tail);
    const ComplexMatrix m21 = m.block(split, 0, tail, split);
    const ComplexMatrix m22 = m.block(split, split, tail, tail);
    const ComplexMatrix inv11 = invert(m11, tol);
    return m22 - m21 * inv11 * m12;
}

}  // namespace bnpick
