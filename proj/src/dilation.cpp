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

#include "symplectica/dilation.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace symplectica {

double block_recovery_residual(const Dilation& d) {
    return max_abs(d.matrix.topLeftCorner(2 * d.n, 2 * d.n) - d.target);
}

bool dilation_valid(const Dilation& d, const Tolerance& tol) {
    if (d.n < 1 || d.m < 0 || d.matrix.rows() != d.order() ||
        d.matrix.cols() != d.order() || d.target.rows() != 2 * d.n ||
        d.target.cols() != 2 * d.n) {
        return false;
    }
    return is_symplectic(d.matrix, tol) &&
           block_recovery_residual(d) <= tol.bound(max_abs(d.target));
}

Dilation checked_dilation(RealMatrix matrix, RealMatrix target, Index n, Index m,
                          const Tolerance& tol) {
    if (n < 1 || m < 0) {
        throw DimensionError("checked_dilation: need n >= 1 and m >= 0");
    }
    require_even_order(matrix, "checked_dilation");
    if (matrix.rows() != 2 * (n + m)) {
        throw DimensionError("checked_dilation: matrix order does not match n + m");
    }
    if (target.rows() != 2 * n || target.cols() != 2 * n) {
        throw DimensionError("checked_dilation: target must be 2n x 2n");
    }
    Dilation d{std::move(matrix), std::move(target), n, m};
    const double symp = symplecticity_residual(d.matrix);
    const double recovery = block_recovery_residual(d);
    if (symp > 100.0 * tol.bound(1.0) || recovery > 100.0 * tol.bound(max_abs(d.target))) {
        throw NumericalError("checked_dilation: invariants failed, residuals " +
                             std::to_string(symp) + " / " + std::to_string(recovery));
    }
    return d;
}

Dilation trivial_dilation(const RealMatrix& L, const Tolerance& tol) {
    if (!is_symplectic(L, tol)) {
        throw InvalidArgumentError("trivial_dilation: matrix is not symplectic");
    }
    return checked_dilation(L, L, L.rows() / 2, 0, tol);
}

RealMatrix canonical_matrix(const CanonicalForm& form) {
    if (form.kind != CanonicalFormKind::Zero && !(form.alpha > 0.0)) {
        throw InvalidArgumentError("canonical_matrix: alpha must be positive");
    }
    RealMatrix a = RealMatrix::Zero(2, 2);
    switch (form.kind) {
        case CanonicalFormKind::Zero:
            break;
        case CanonicalFormKind::RankOne:
            a(0, 0) = form.alpha;
            break;
        case CanonicalFormKind::PlusPlus:
            a(0, 0) = form.alpha;
            a(1, 1) = form.alpha;
            break;
        case CanonicalFormKind::PlusMinus:
            a(0, 0) = form.alpha;
            a(1, 1) = -form.alpha;
            break;
    }
    return a;
}

Dilation elementary_dilation(const CanonicalForm& form) {
    const double alpha = form.alpha;
    if (form.kind != CanonicalFormKind::Zero && !(alpha > 0.0)) {
        throw InvalidArgumentError("elementary_dilation: alpha must be positive");
    }
    RealMatrix m = RealMatrix::Zero(4, 4);
    switch (form.kind) {
        case CanonicalFormKind::Zero:
            // Swap of system and ancilla, both couplings the identity.
            m(0, 2) = m(1, 3) = m(2, 0) = m(3, 1) = 1.0;
            break;
        case CanonicalFormKind::RankOne: {
            // x = -1, y = 1 solve the closure condition 1 + xy = 0.
            m(0, 0) = alpha;
            m(0, 3) = -1.0;
            m(1, 2) = 1.0;
            m(2, 1) = -1.0;
            m(2, 2) = alpha;
            m(3, 0) = 1.0;
            break;
        }
        case CanonicalFormKind::PlusPlus: {
            // x y = 1 - alpha^2; pick real x, y of matching sign.
            double x, y;
            if (alpha <= 1.0) {
                x = y = std::sqrt(1.0 - alpha * alpha);
            } else {
                x = std::sqrt(alpha * alpha - 1.0);
                y = -x;
            }
            m(0, 0) = alpha;
            m(0, 2) = x;
            m(1, 1) = alpha;
            m(1, 3) = y;
            m(2, 0) = -y;
            m(2, 2) = alpha;
            m(3, 1) = -x;
            m(3, 3) = alpha;
            break;
        }
        case CanonicalFormKind::PlusMinus: {
            // x y = 1 + alpha^2, always solvable with x = y.
            const double x = std::sqrt(1.0 + alpha * alpha);
            m(0, 0) = alpha;
            m(0, 2) = x;
            m(1, 1) = -alpha;
            m(1, 3) = x;
            m(2, 0) = x;
            m(2, 2) = alpha;
            m(3, 1) = x;
            m(3, 3) = -alpha;
            break;
        }
    }
    return checked_dilation(m, canonical_matrix(form), 1, 1);
}

namespace {

// Unit-determinant inverse of an SL(2, R) matrix via its adjugate.
RealMatrix sl2_inverse(const RealMatrix& a) {
    RealMatrix inv(2, 2);
    inv(0, 0) = a(1, 1);
    inv(0, 1) = -a(0, 1);
    inv(1, 0) = -a(1, 0);
    inv(1, 1) = a(0, 0);
    return inv;
}

}  // namespace

Sl2NormalForm sl2_normal_form(const RealMatrix& A, const Tolerance& tol) {
    if (A.rows() != 2 || A.cols() != 2) {
        throw DimensionError("sl2_normal_form: expected a 2x2 matrix");
    }
    if (!all_finite(A)) {
        throw InvalidArgumentError("sl2_normal_form: entries must be finite");
    }

    Eigen::JacobiSVD<RealMatrix> svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
    RealMatrix u = svd.matrixU();
    RealMatrix v = svd.matrixV();
    const double sigma1 = svd.singularValues()(0);
    const double sigma2 = svd.singularValues()(1);

    // Push any reflection into the second singular value so u, v land in
    // SO(2): A = u diag(sigma1, s * sigma2) v^T with s in {+1, -1}.
    double s = 1.0;
    if (u.determinant() < 0.0) {
        u.col(1) *= -1.0;
        s = -s;
    }
    if (v.determinant() < 0.0) {
        v.col(1) *= -1.0;
        s = -s;
    }

    Sl2NormalForm nf;
    if (sigma1 == 0.0) {
        nf.left = RealMatrix::Identity(2, 2);
        nf.right = RealMatrix::Identity(2, 2);
        nf.form = {CanonicalFormKind::Zero, 0.0};
        return nf;
    }
    if (sigma2 <= 1e-12 * sigma1) {
        nf.left = u.transpose();
        nf.right = v;
        nf.form = {CanonicalFormKind::RankOne, sigma1};
    } else {
        // Symmetric rescaling diag(a, 1/a) on both sides maps
        // diag(sigma1, s sigma2) to alpha diag(1, s); splitting the scale
        // keeps both factors as small as possible.
        const double alpha = std::sqrt(sigma1 * sigma2);
        const double a = std::pow(sigma2 / sigma1, 0.25);
        RealMatrix scale = RealMatrix::Zero(2, 2);
        scale(0, 0) = a;
        scale(1, 1) = 1.0 / a;
        nf.left = scale * u.transpose();
        nf.right = v * scale;
        nf.form = {s > 0.0 ? CanonicalFormKind::PlusPlus : CanonicalFormKind::PlusMinus, alpha};
    }

    const double residual = max_abs(nf.left * A * nf.right - canonical_matrix(nf.form));
    if (residual > 100.0 * tol.bound(max_abs(A))) {
        throw NumericalError("sl2_normal_form: canonical residual " + std::to_string(residual));
    }
    return nf;
}

Dilation conjugate_dilation(const Dilation& d, const RealMatrix& left,
                            const RealMatrix& right, const Tolerance& tol) {
    if (left.rows() != 2 * d.n || left.cols() != 2 * d.n || right.rows() != 2 * d.n ||
        right.cols() != 2 * d.n) {
        throw DimensionError("conjugate_dilation: factors must have order 2n");
    }
    if (!is_symplectic(left, tol) || !is_symplectic(right, tol)) {
        throw InvalidArgumentError("conjugate_dilation: factors must be symplectic");
    }
    const Index total = d.order();
    RealMatrix big_left = RealMatrix::Identity(total, total);
    big_left.topLeftCorner(2 * d.n, 2 * d.n) = left;
    RealMatrix big_right = RealMatrix::Identity(total, total);
    big_right.topLeftCorner(2 * d.n, 2 * d.n) = right;
    return checked_dilation(big_left * d.matrix * big_right, left * d.target * right,
                            d.n, d.m, tol);
}

Dilation dilate_2x2(const RealMatrix& A, const Tolerance& tol) {
    if (A.rows() != 2 || A.cols() != 2) {
        throw DimensionError("dilate_2x2: expected a 2x2 matrix");
    }
    const Sl2NormalForm nf = sl2_normal_form(A, tol);
    const Dilation elem = elementary_dilation(nf.form);
    const Dilation conj = conjugate_dilation(elem, sl2_inverse(nf.left),
                                             sl2_inverse(nf.right), tol);
    // Stamp the exact input as the target; the conjugation recovered it only
    // up to rounding.
    return checked_dilation(conj.matrix, A, 1, 1, tol);
}

Dilation dilate_direct_sum(const std::vector<Dilation>& parts, const Tolerance& tol) {
    if (parts.empty()) {
        throw InvalidArgumentError("dilate_direct_sum: at least one part required");
    }
    Index n_total = 0;
    Index m_total = 0;
    std::vector<RealMatrix> matrices;
    std::vector<RealMatrix> targets;
    matrices.reserve(parts.size());
    targets.reserve(parts.size());
    for (const Dilation& d : parts) {
        n_total += d.n;
        m_total += d.m;
        matrices.push_back(d.matrix);
        targets.push_back(d.target);
    }
    // The plain direct sum interleaves [sys_1, anc_1, sys_2, anc_2, ...];
    // conjugate by the mode permutation sending it to [systems, ancillas].
    std::vector<Index> perm(static_cast<std::size_t>(n_total + m_total));
    Index at = 0;
    Index next_system = 0;
    Index next_ancilla = n_total;
    for (const Dilation& d : parts) {
        for (Index s = 0; s < d.n; ++s) {
            perm[static_cast<std::size_t>(at++)] = next_system++;
        }
        for (Index a = 0; a < d.m; ++a) {
            perm[static_cast<std::size_t>(at++)] = next_ancilla++;
        }
    }
    const RealMatrix p = mode_permutation(perm);
    return checked_dilation(p * direct_sum(matrices) * p.transpose(), direct_sum(targets),
                            n_total, m_total, tol);
}

Dilation pad_dilation(const Dilation& d, Index target_m) {
    if (target_m < d.m) {
        throw InvalidArgumentError("pad_dilation: cannot drop ancilla modes");
    }
    if (target_m == d.m) {
        return d;
    }
    const Index extra = 2 * (target_m - d.m);
    RealMatrix padded = RealMatrix::Identity(d.order() + extra, d.order() + extra);
    padded.topLeftCorner(d.order(), d.order()) = d.matrix;
    return checked_dilation(std::move(padded), d.target, d.n, target_m);
}

RealMatrix orthogonal_from_unit_row(const std::vector<double>& p, const Tolerance& tol) {
    const Index k = static_cast<Index>(p.size());
    if (k < 1) {
        throw InvalidArgumentError("orthogonal_from_unit_row: empty weight vector");
    }
    double sum = 0.0;
    for (double w : p) {
        if (!(w > 0.0)) {
            throw InvalidArgumentError("orthogonal_from_unit_row: weights must be positive");
        }
        sum += w;
    }
    if (std::abs(sum - 1.0) > tol.bound(1.0)) {
        throw InvalidArgumentError("orthogonal_from_unit_row: weights must sum to 1, got " +
                                   std::to_string(sum));
    }
    RealVector root(k);
    for (Index i = 0; i < k; ++i) {
        root(i) = std::sqrt(p[static_cast<std::size_t>(i)]);
    }
    RealVector v = root;
    v(0) -= 1.0;
    const double vv = v.squaredNorm();
    if (vv < 1e-30) {
        return RealMatrix::Identity(k, k);
    }
    // Householder reflection swapping e_1 and sqrt(p); symmetric orthogonal.
    return RealMatrix::Identity(k, k) - (2.0 / vv) * (v * v.transpose());
}

Dilation dilate_convex_combination(const std::vector<Dilation>& parts,
                                   const std::vector<double>& p, const Tolerance& tol) {
    if (parts.empty() || parts.size() != p.size()) {
        throw InvalidArgumentError("dilate_convex_combination: need matching nonempty "
                                   "dilation and weight lists");
    }
    const Index n = parts.front().n;
    const Index m = parts.front().m;
    for (const Dilation& d : parts) {
        if (d.n != n || d.m != m) {
            throw InvalidArgumentError("dilate_convex_combination: all parts must share "
                                       "the same system and ancilla counts");
        }
    }
    const RealMatrix s = orthogonal_from_unit_row(p, tol);
    const Index k = static_cast<Index>(parts.size());
    const Index block = 2 * (n + m);

    // S L S^T for S = s (x) I and block diagonal L; blockwise this is
    // out_{ab} = sum_i s_{ai} s_{bi} part_i.
    RealMatrix out = RealMatrix::Zero(k * block, k * block);
    for (Index a = 0; a < k; ++a) {
        for (Index b = 0; b < k; ++b) {
            RealMatrix acc = RealMatrix::Zero(block, block);
            for (Index i = 0; i < k; ++i) {
                acc += s(a, i) * s(b, i) * parts[static_cast<std::size_t>(i)].matrix;
            }
            out.block(a * block, b * block, block, block) = acc;
        }
    }
    RealMatrix target = RealMatrix::Zero(2 * n, 2 * n);
    for (Index i = 0; i < k; ++i) {
        target += p[static_cast<std::size_t>(i)] * parts[static_cast<std::size_t>(i)].target;
    }
    return checked_dilation(std::move(out), std::move(target), n, k * (n + m) - n, tol);
}

Dilation dilate_positive_definite(const RealMatrix& A, const Tolerance& tol) {
    const WilliamsonDecomposition wd = williamson(A, tol);
    const Index n = A.rows() / 2;
    std::vector<Dilation> parts;
    parts.reserve(wd.kappas.size());
    for (double kappa : wd.kappas) {
        parts.push_back(elementary_dilation({CanonicalFormKind::PlusPlus, kappa}));
    }
    const Dilation normal = dilate_direct_sum(parts, tol);
    const RealMatrix l_inv = symplectic_inverse(wd.L);
    const Dilation conj = conjugate_dilation(normal, l_inv.transpose(), l_inv, tol);
    return checked_dilation(conj.matrix, A, n, n, tol);
}

Dilation dilate_symmetric(const RealMatrix& A, const Tolerance& tol) {
    require_even_order(A, "dilate_symmetric");
    if (asymmetry(A) > tol.bound(max_abs(A))) {
        throw InvalidArgumentError("dilate_symmetric: matrix is not symmetric");
    }
    const Index n = A.rows() / 2;
    const RealMatrix sym = 0.5 * (A + A.transpose());
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(sym, Eigen::EigenvaluesOnly);
    const double lambda = es.eigenvalues().cwiseAbs().maxCoeff() + 1.0;
    const RealMatrix shift = lambda * RealMatrix::Identity(2 * n, 2 * n);

    const Dilation plus = dilate_positive_definite(sym + shift, tol);
    const Dilation minus = dilate_positive_definite(shift - sym, tol);
    // Negating a symplectic matrix keeps it symplectic and negates the target.
    const Dilation minus_negated =
        checked_dilation(-minus.matrix, sym - shift, minus.n, minus.m, tol);

    const Dilation combined =
        dilate_convex_combination({plus, minus_negated}, {0.5, 0.5}, tol);
    return checked_dilation(combined.matrix, A, combined.n, combined.m, tol);
}

Dilation dilate_skew_pair(const RealMatrix& D, const Tolerance& tol) {
    if (D.rows() != 2 || D.cols() != 2) {
        throw DimensionError("dilate_skew_pair: expected a 2x2 block");
    }
    const Dilation base = dilate_2x2(D, tol);
    const RealMatrix d_blk = base.matrix.block(0, 0, 2, 2);
    const RealMatrix e_blk = base.matrix.block(0, 2, 2, 2);
    const RealMatrix f_blk = base.matrix.block(2, 0, 2, 2);
    const RealMatrix g_blk = base.matrix.block(2, 2, 2, 2);

    RealMatrix m = RealMatrix::Zero(8, 8);
    m.block(0, 2, 2, 2) = d_blk;
    m.block(0, 4, 2, 2) = e_blk;
    m.block(2, 0, 2, 2) = -d_blk.transpose();
    m.block(2, 6, 2, 2) = -f_blk.transpose();
    m.block(4, 2, 2, 2) = f_blk;
    m.block(4, 4, 2, 2) = g_blk;
    m.block(6, 0, 2, 2) = -e_blk.transpose();
    m.block(6, 6, 2, 2) = -g_blk.transpose();

    RealMatrix target = RealMatrix::Zero(4, 4);
    target.block(0, 2, 2, 2) = D;
    target.block(2, 0, 2, 2) = -D.transpose();
    return checked_dilation(std::move(m), std::move(target), 2, 2, tol);
}

EdgeColoring one_factorization(int n_vertices) {
    if (n_vertices < 2) {
        throw InvalidArgumentError("one_factorization: need at least 2 vertices");
    }
    EdgeColoring coloring;
    coloring.n_vertices = n_vertices;
    if (n_vertices % 2 == 0) {
        // Round-robin rotation: vertex 0 in the center, 1..n-1 on a regular
        // (n-1)-gon. Round r pairs the center with vertex r and adds the
        // chords perpendicular to that spoke.
        const int ring = n_vertices - 1;
        for (int r = 1; r < n_vertices; ++r) {
            std::vector<std::pair<int, int>> cls;
            cls.emplace_back(0, r);
            const int pos = r - 1;
            for (int i = 1; i <= (n_vertices - 2) / 2; ++i) {
                const int a = 1 + (pos + i) % ring;
                const int b = 1 + ((pos - i) % ring + ring) % ring;
                cls.emplace_back(std::min(a, b), std::max(a, b));
            }
            coloring.classes.push_back(std::move(cls));
        }
    } else {
        // Odd order: run the even construction one vertex larger and drop
        // every edge that meets the phantom vertex.
        const EdgeColoring even = one_factorization(n_vertices + 1);
        for (const auto& cls : even.classes) {
            std::vector<std::pair<int, int>> kept;
            for (const auto& e : cls) {
                if (e.first != n_vertices && e.second != n_vertices) {
                    kept.push_back(e);
                }
            }
            coloring.classes.push_back(std::move(kept));
        }
    }
    return coloring;
}

Index general_order_bound(Index n_modes) {
    if (n_modes < 1) {
        throw DimensionError("general_order_bound: mode count must be positive");
    }
    if (n_modes == 1) {
        return 4;
    }
    return n_modes % 2 == 0 ? 4 * n_modes * (n_modes + 2) : 4 * n_modes * (n_modes + 3);
}

namespace {

// 2x2 block of `a` at mode row i, mode column j.
RealMatrix block2(const RealMatrix& a, Index i, Index j) {
    return a.block(2 * i, 2 * j, 2, 2);
}

// Dilation of one off-diagonal class sum: skew pairs on the matched modes,
// a zero-target mode for the unmatched one (odd order only), direct-summed
// and permuted back to the natural mode order.
Dilation dilate_class_sum(const RealMatrix& A, double scale,
                          const std::vector<std::pair<int, int>>& cls, Index n,
                          const Tolerance& tol) {
    std::vector<Dilation> parts;
    std::vector<Index> order;
    std::vector<bool> covered(static_cast<std::size_t>(n), false);
    RealMatrix target = RealMatrix::Zero(2 * n, 2 * n);
    for (const auto& [i, j] : cls) {
        const RealMatrix d_blk =
            scale * 0.5 * (block2(A, i, j) - block2(A, j, i).transpose());
        parts.push_back(dilate_skew_pair(d_blk, tol));
        order.push_back(i);
        order.push_back(j);
        covered[static_cast<std::size_t>(i)] = true;
        covered[static_cast<std::size_t>(j)] = true;
        target.block(2 * i, 2 * j, 2, 2) = d_blk;
        target.block(2 * j, 2 * i, 2, 2) = -d_blk.transpose();
    }
    for (Index v = 0; v < n; ++v) {
        if (!covered[static_cast<std::size_t>(v)]) {
            parts.push_back(dilate_2x2(RealMatrix::Zero(2, 2), tol));
            order.push_back(v);
        }
    }
    const Dilation summed = dilate_direct_sum(parts, tol);
    std::vector<Index> perm(order.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        perm[pos] = order[pos];
    }
    const RealMatrix q = mode_permutation(perm);
    const Dilation conj = conjugate_dilation(summed, q, q.transpose(), tol);
    return checked_dilation(conj.matrix, std::move(target), n, conj.m, tol);
}

}  // namespace

Dilation dilate_general(const RealMatrix& A, const Tolerance& tol) {
    require_even_order(A, "dilate_general");
    if (!all_finite(A)) {
        throw InvalidArgumentError("dilate_general: entries must be finite");
    }
    const Index n = A.rows() / 2;
    if (n == 1) {
        return dilate_2x2(A, tol);
    }

    const double scale = static_cast<double>(n % 2 == 0 ? n + 2 : n + 3);
    const RealMatrix sym = 0.5 * (A + A.transpose());

    // Positive and negative parts of the symmetric half, both shifted by I
    // so each is strictly positive definite.
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(sym);
    const RealVector lam = es.eigenvalues();
    const RealMatrix vt = es.eigenvectors().transpose();
    const RealMatrix plus_part =
        es.eigenvectors() * lam.cwiseMax(0.0).asDiagonal() * vt;
    const RealMatrix minus_part =
        es.eigenvectors() * (-lam.cwiseMin(0.0).eval()).asDiagonal() * vt;
    const RealMatrix eye = RealMatrix::Identity(2 * n, 2 * n);

    std::vector<Dilation> terms;
    terms.push_back(dilate_positive_definite(scale * (plus_part + eye), tol));

    const Dilation minus_dil = dilate_positive_definite(scale * (minus_part + eye), tol);
    terms.push_back(checked_dilation(-minus_dil.matrix, -minus_dil.target, minus_dil.n,
                                     minus_dil.m, tol));

    // Per-mode skew diagonal blocks.
    {
        std::vector<Dilation> diag_parts;
        RealMatrix diag_target = RealMatrix::Zero(2 * n, 2 * n);
        for (Index v = 0; v < n; ++v) {
            const RealMatrix blk = block2(A, v, v);
            const RealMatrix skew = scale * 0.5 * (blk - blk.transpose());
            diag_parts.push_back(dilate_2x2(skew, tol));
            diag_target.block(2 * v, 2 * v, 2, 2) = skew;
        }
        const Dilation diag_sum = dilate_direct_sum(diag_parts, tol);
        terms.push_back(checked_dilation(diag_sum.matrix, std::move(diag_target),
                                         diag_sum.n, diag_sum.m, tol));
    }

    // Off-diagonal skew pairs, grouped so each class is a matching.
    const EdgeColoring coloring = one_factorization(static_cast<int>(n));
    for (const auto& cls : coloring.classes) {
        terms.push_back(dilate_class_sum(A, scale, cls, n, tol));
    }

    const std::vector<double> weights(terms.size(), 1.0 / scale);
    const Dilation combined = dilate_convex_combination(terms, weights, tol);
    const Dilation result = checked_dilation(combined.matrix, A, combined.n, combined.m, tol);
    if (result.order() != general_order_bound(n)) {
        throw NumericalError("dilate_general: order " + std::to_string(result.order()) +
                             " does not match the bound " +
                             std::to_string(general_order_bound(n)));
    }
    return result;
}

Dilation dilate_product(const Dilation& a, const Dilation& b, const Tolerance& tol) {
    if (a.n != b.n) {
        throw InvalidArgumentError("dilate_product: system mode counts differ");
    }
    const Index n2 = 2 * a.n;
    const Index l2 = 2 * b.m;
    const Index m2 = 2 * a.m;
    const Index total = n2 + l2 + m2;

    // b's matrix extended by identity on a's ancillas.
    RealMatrix b_ext = RealMatrix::Identity(total, total);
    b_ext.topLeftCorner(n2 + l2, n2 + l2) = b.matrix;

    // a's matrix extended by identity on b's ancillas, which sit between
    // a's system block and a's ancilla block.
    RealMatrix a_ext = RealMatrix::Identity(total, total);
    a_ext.topLeftCorner(n2, n2) = a.matrix.topLeftCorner(n2, n2);
    a_ext.block(0, n2 + l2, n2, m2) = a.matrix.topRightCorner(n2, m2);
    a_ext.block(n2 + l2, 0, m2, n2) = a.matrix.bottomLeftCorner(m2, n2);
    a_ext.block(n2 + l2, n2 + l2, m2, m2) = a.matrix.bottomRightCorner(m2, m2);

    return checked_dilation(a_ext * b_ext, a.target * b.target, a.n, a.m + b.m, tol);
}

}  // namespace symplectica
