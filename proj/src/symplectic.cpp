// Copyright 2026 The Symplectica Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "symplectica/symplectic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include "symplectica/rng.hpp"

namespace symplectica {

double max_abs(const RealMatrix& a) {
    return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

bool all_finite(const RealMatrix& a) {
    return a.allFinite();
}

double asymmetry(const RealMatrix& a) {
    if (a.rows() != a.cols()) {
        throw DimensionError("asymmetry: matrix is not square");
    }
    return max_abs(a - a.transpose());
}

bool is_symmetric(const RealMatrix& a, const Tolerance& tol) {
    return a.rows() == a.cols() && asymmetry(a) <= tol.bound(max_abs(a));
}

void require_square(const RealMatrix& a, const char* who) {
    if (a.rows() != a.cols() || a.rows() == 0) {
        throw DimensionError(std::string(who) + ": expected a nonempty square matrix, got " +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
}

void require_even_order(const RealMatrix& a, const char* who) {
    require_square(a, who);
    if (a.rows() % 2 != 0) {
        throw DimensionError(std::string(who) + ": order must be even, got " +
                             std::to_string(a.rows()));
    }
}

RealMatrix symplectic_form(Index n_modes) {
    if (n_modes < 1) {
        throw DimensionError("symplectic_form: mode count must be positive, got " +
                             std::to_string(n_modes));
    }
    RealMatrix j = RealMatrix::Zero(2 * n_modes, 2 * n_modes);
    for (Index k = 0; k < n_modes; ++k) {
        j(2 * k, 2 * k + 1) = -1.0;
        j(2 * k + 1, 2 * k) = 1.0;
    }
    return j;
}

double symplecticity_residual(const RealMatrix& L) {
    require_even_order(L, "symplecticity_residual");
    const RealMatrix j = symplectic_form(L.rows() / 2);
    return max_abs(L.transpose() * j * L - j);
}

bool is_symplectic(const RealMatrix& L, const Tolerance& tol) {
    return symplecticity_residual(L) <= tol.bound(1.0);
}

RealMatrix symplectic_inverse(const RealMatrix& L) {
    require_even_order(L, "symplectic_inverse");
    const RealMatrix j = symplectic_form(L.rows() / 2);
    return -j * L.transpose() * j;
}

RealMatrix direct_sum(const std::vector<RealMatrix>& blocks) {
    if (blocks.empty()) {
        throw InvalidArgumentError("direct_sum: at least one block required");
    }
    Index total = 0;
    for (const RealMatrix& b : blocks) {
        require_square(b, "direct_sum");
        total += b.rows();
    }
    RealMatrix out = RealMatrix::Zero(total, total);
    Index at = 0;
    for (const RealMatrix& b : blocks) {
        out.block(at, at, b.rows(), b.rows()) = b;
        at += b.rows();
    }
    return out;
}

RealMatrix mode_permutation(const std::vector<Index>& perm) {
    const Index n = static_cast<Index>(perm.size());
    if (n < 1) {
        throw InvalidArgumentError("mode_permutation: empty permutation");
    }
    std::vector<bool> seen(perm.size(), false);
    for (Index image : perm) {
        if (image < 0 || image >= n || seen[static_cast<std::size_t>(image)]) {
            throw InvalidArgumentError("mode_permutation: not a permutation of 0.." +
                                       std::to_string(n - 1));
        }
        seen[static_cast<std::size_t>(image)] = true;
    }
    RealMatrix p = RealMatrix::Zero(2 * n, 2 * n);
    for (Index j = 0; j < n; ++j) {
        p(2 * perm[static_cast<std::size_t>(j)], 2 * j) = 1.0;
        p(2 * perm[static_cast<std::size_t>(j)] + 1, 2 * j + 1) = 1.0;
    }
    return p;
}

RealMatrix random_symplectic(Index n_modes, std::uint64_t seed) {
    if (n_modes < 1) {
        throw DimensionError("random_symplectic: mode count must be positive");
    }
    SplitMix64 rng(seed);
    const Index d = 2 * n_modes;
    RealMatrix h(d, d);
    for (Index i = 0; i < d; ++i) {
        for (Index j = i; j < d; ++j) {
            const double v = rng.uniform_symmetric();
            h(i, j) = v;
            h(j, i) = v;
        }
    }
    // J H lies in the symplectic Lie algebra, so the exponential lands in the
    // group exactly; only rounding is left for the self-check below.
    const RealMatrix x = symplectic_form(n_modes) * h;
    RealMatrix L = x.exp();
    const double residual = symplecticity_residual(L);
    if (residual > 100.0 * Tolerance{}.bound(1.0)) {
        throw NumericalError("random_symplectic: exponential lost symplecticity, residual " +
                             std::to_string(residual));
    }
    return L;
}

RealMatrix random_spd(Index order, std::uint64_t seed) {
    if (order < 1) {
        throw DimensionError("random_spd: order must be positive");
    }
    SplitMix64 rng(seed);
    RealMatrix g(order, order);
    for (Index i = 0; i < order; ++i) {
        for (Index j = 0; j < order; ++j) {
            g(i, j) = rng.uniform_symmetric();
        }
    }
    RealMatrix a = g.transpose() * g + 0.5 * RealMatrix::Identity(order, order);
    return 0.5 * (a + a.transpose());
}

double hermitian_min_eigenvalue(const RealMatrix& X, const RealMatrix& Y,
                                const Tolerance& tol) {
    require_even_order(X, "hermitian_min_eigenvalue");
    if (Y.rows() != X.rows() || Y.cols() != X.cols()) {
        throw DimensionError("hermitian_min_eigenvalue: X and Y must have equal shape");
    }
    if (asymmetry(X) > tol.bound(max_abs(X))) {
        throw InvalidArgumentError("hermitian_min_eigenvalue: X is not symmetric");
    }
    if (max_abs(Y + Y.transpose()) > tol.bound(max_abs(Y))) {
        throw InvalidArgumentError("hermitian_min_eigenvalue: Y is not antisymmetric");
    }
    const Index d = X.rows();
    RealMatrix embedding(2 * d, 2 * d);
    embedding.topLeftCorner(d, d) = X;
    embedding.topRightCorner(d, d) = -Y;
    embedding.bottomLeftCorner(d, d) = Y;
    embedding.bottomRightCorner(d, d) = X;
    embedding = 0.5 * (embedding + embedding.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(embedding, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

bool hermitian_psd_check(const RealMatrix& X, const RealMatrix& Y, const Tolerance& tol) {
    return hermitian_min_eigenvalue(X, Y, tol) >= -tol.bound(max_abs(X));
}

namespace {

// Eigenvectors and inverse square root / square root of a symmetric positive
// definite matrix, with the positivity gate shared by williamson and
// symplectic_spectrum.
struct SpdRoots {
    RealMatrix inv_sqrt;
    RealMatrix sqrt;
};

SpdRoots spd_roots(const RealMatrix& A, const Tolerance& tol, const char* who) {
    require_even_order(A, who);
    if (asymmetry(A) > tol.bound(max_abs(A))) {
        throw DimensionError(std::string(who) + ": matrix is not symmetric");
    }
    const RealMatrix sym = 0.5 * (A + A.transpose());
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(sym);
    const RealVector lam = es.eigenvalues();
    const double lam_max = lam.maxCoeff();
    if (lam.minCoeff() <= 1e-12 * lam_max || lam_max <= 0.0) {
        throw NotPositiveDefiniteError(std::string(who) +
                                       ": matrix is not (numerically) positive definite");
    }
    SpdRoots roots;
    roots.inv_sqrt = es.eigenvectors() * lam.cwiseSqrt().cwiseInverse().asDiagonal() *
                     es.eigenvectors().transpose();
    roots.sqrt = es.eigenvectors() * lam.cwiseSqrt().asDiagonal() * es.eigenvectors().transpose();
    return roots;
}

}  // namespace

WilliamsonDecomposition williamson(const RealMatrix& A, const Tolerance& tol) {
    const Index n = A.rows() / 2;
    const RealMatrix inv_sqrt = spd_roots(A, tol, "williamson").inv_sqrt;
    const RealMatrix j = symplectic_form(n);

    RealMatrix k = inv_sqrt * j * inv_sqrt;
    k = 0.5 * (k - k.transpose()).eval();

    // Real Schur form of a skew matrix is block diagonal with 2x2 blocks
    // [[0, b], [-b, 0]]; |b| is the reciprocal of a Williamson parameter.
    Eigen::RealSchur<RealMatrix> schur(k);
    if (schur.info() != Eigen::Success) {
        throw NumericalError("williamson: Schur decomposition did not converge");
    }
    const RealMatrix& t = schur.matrixT();
    RealMatrix u = schur.matrixU();

    struct Pair {
        double kappa;
        Index col;  // first column of the normalized pair in u
    };
    std::vector<Pair> pairs;
    pairs.reserve(static_cast<std::size_t>(n));
    for (Index i = 0; i < 2 * n;) {
        if (i + 1 >= 2 * n || t(i + 1, i) == 0.0) {
            throw NumericalError("williamson: unexpected 1x1 Schur block for a "
                                 "nonsingular skew matrix");
        }
        const double omega = 0.5 * (t(i, i + 1) - t(i + 1, i));
        if (!(std::abs(omega) > 0.0)) {
            throw NumericalError("williamson: degenerate Schur block");
        }
        // Normalize the pair so its block is +kappa^{-1} [[0, -1], [1, 0]]:
        // the (i, i+1) entry must be negative.
        if (omega > 0.0) {
            u.col(i).swap(u.col(i + 1));
        }
        pairs.push_back({1.0 / std::abs(omega), i});
        i += 2;
    }
    std::stable_sort(pairs.begin(), pairs.end(),
                     [](const Pair& a, const Pair& b) { return a.kappa > b.kappa; });

    RealMatrix q(2 * n, 2 * n);
    RealVector sqrt_kappa(2 * n);
    std::vector<double> kappas;
    kappas.reserve(pairs.size());
    for (std::size_t r = 0; r < pairs.size(); ++r) {
        const Index dst = static_cast<Index>(2 * r);
        q.col(dst) = u.col(pairs[r].col);
        q.col(dst + 1) = u.col(pairs[r].col + 1);
        const double root = std::sqrt(pairs[r].kappa);
        sqrt_kappa(dst) = root;
        sqrt_kappa(dst + 1) = root;
        kappas.push_back(pairs[r].kappa);
    }

    WilliamsonDecomposition result;
    result.L = inv_sqrt * q * sqrt_kappa.asDiagonal();
    result.kappas = std::move(kappas);

    RealMatrix normal = RealMatrix::Zero(2 * n, 2 * n);
    for (Index r = 0; r < n; ++r) {
        normal(2 * r, 2 * r) = result.kappas[static_cast<std::size_t>(r)];
        normal(2 * r + 1, 2 * r + 1) = result.kappas[static_cast<std::size_t>(r)];
    }
    const double recon = max_abs(result.L.transpose() * A * result.L - normal);
    const double symp = symplecticity_residual(result.L);
    if (recon > 100.0 * tol.bound(max_abs(A)) || symp > 100.0 * tol.bound(1.0)) {
        throw NumericalError("williamson: self-check failed, residuals " +
                             std::to_string(recon) + " / " + std::to_string(symp));
    }
    return result;
}

std::vector<double> symplectic_spectrum(const RealMatrix& A, const Tolerance& tol) {
    const Index n = A.rows() / 2;
    const RealMatrix sqrt = spd_roots(A, tol, "symplectic_spectrum").sqrt;
    const RealMatrix j = symplectic_form(n);
    RealMatrix k = sqrt * j * sqrt;  // skew; eigenvalue moduli match J A
    k = 0.5 * (k - k.transpose()).eval();
    Eigen::JacobiSVD<RealMatrix> svd(k);
    const RealVector sigma = svd.singularValues();  // descending, each kappa twice
    std::vector<double> kappas(static_cast<std::size_t>(n));
    for (Index r = 0; r < n; ++r) {
        kappas[static_cast<std::size_t>(r)] = 0.5 * (sigma(2 * r) + sigma(2 * r + 1));
    }
    return kappas;
}

}  // namespace symplectica
