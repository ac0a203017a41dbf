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

#pragma once

#include <utility>
#include <vector>

#include "symplectica/symplectic.hpp"

namespace symplectica {

/// A symplectic matrix of order 2(n + m) whose top-left 2n x 2n block equals
/// `target`. Modes are laid out system-first: coordinates 0..2n-1 belong to
/// the n system modes, the rest to the m ancilla modes.
struct Dilation {
    RealMatrix matrix;
    RealMatrix target;
    Index n = 0;  // system modes
    Index m = 0;  // ancilla modes

    Index order() const { return 2 * (n + m); }
};

/// max|top-left 2n x 2n block of matrix - target|.
double block_recovery_residual(const Dilation& d);

/// Both invariants within `tol`: matrix symplectic, block recovered.
bool dilation_valid(const Dilation& d, const Tolerance& tol = {});

/// Gate used by every constructor below: shape checks, then both invariants
/// at 100x `tol`. Throws NumericalError when a residual blows past that.
Dilation checked_dilation(RealMatrix matrix, RealMatrix target, Index n, Index m,
                          const Tolerance& tol = {});

/// Ancilla-free wrapper around a matrix that is already symplectic.
Dilation trivial_dilation(const RealMatrix& L, const Tolerance& tol = {});

enum class CanonicalFormKind { Zero, RankOne, PlusPlus, PlusMinus };

/// Canonical 2x2 shapes reachable by an SL(2,R) x SL(2,R) equivalence:
///   Zero      0
///   RankOne   [[alpha, 0], [0, 0]]
///   PlusPlus  alpha I_2
///   PlusMinus diag(alpha, -alpha)
/// with alpha > 0 for every kind except Zero.
struct CanonicalForm {
    CanonicalFormKind kind = CanonicalFormKind::Zero;
    double alpha = 0.0;
};

RealMatrix canonical_matrix(const CanonicalForm& form);

struct Sl2NormalForm {
    RealMatrix left;     // in SL(2,R)
    RealMatrix right;    // in SL(2,R)
    CanonicalForm form;  // left * A * right = canonical_matrix(form)
};

/// Reduces an arbitrary real 2x2 matrix to canonical form by unit-determinant
/// factors built from its SVD; the determinant's sign picks PlusPlus versus
/// PlusMinus, and singular values below 1e-12 * sigma_max count as zero.
Sl2NormalForm sl2_normal_form(const RealMatrix& A, const Tolerance& tol = {});

/// Closed-form order-4 dilation of canonical_matrix(form), one mode plus one
/// ancilla. Throws InvalidArgumentError when alpha <= 0 (except Zero).
Dilation elementary_dilation(const CanonicalForm& form);

/// (left + I) d.matrix (right + I) as block diagonals over the ancillas;
/// the target becomes left * d.target * right. Both factors must be
/// symplectic of order 2 d.n.
Dilation conjugate_dilation(const Dilation& d, const RealMatrix& left,
                            const RealMatrix& right, const Tolerance& tol = {});

/// Order-4 dilation of an arbitrary real 2x2 matrix: normal form, elementary
/// dilation, then conjugation by the inverted factors.
Dilation dilate_2x2(const RealMatrix& A, const Tolerance& tol = {});

/// Direct sum of dilations with modes regrouped system-first; the target is
/// the direct sum of targets.
Dilation dilate_direct_sum(const std::vector<Dilation>& parts, const Tolerance& tol = {});

/// Appends identity ancilla modes until the ancilla count reaches target_m.
Dilation pad_dilation(const Dilation& d, Index target_m);

/// Symmetric orthogonal matrix (a Householder reflection) whose first row is
/// the entrywise square root of a strictly positive probability vector.
RealMatrix orthogonal_from_unit_row(const std::vector<double>& p, const Tolerance& tol = {});

/// Dilation of sum_i p_i target_i from k dilations of equal shape (n, m):
/// S (d_1.matrix + ... + d_k.matrix) S^T with S = orthogonal_from_unit_row(p)
/// Kronecker the identity of order 2(n+m). Resulting order: 2k(n+m).
Dilation dilate_convex_combination(const std::vector<Dilation>& parts,
                                   const std::vector<double>& p, const Tolerance& tol = {});

/// Order-4n dilation of a symmetric positive definite matrix through its
/// Williamson normal form.
Dilation dilate_positive_definite(const RealMatrix& A, const Tolerance& tol = {});

/// Order-8n dilation of an arbitrary symmetric matrix: A is split as the
/// difference of the shifted positive definite halves A + lambda I and
/// lambda I - A with lambda = ||A||_2 + 1, each dilated and combined with
/// equal weights.
Dilation dilate_symmetric(const RealMatrix& A, const Tolerance& tol = {});

/// Order-8 dilation of [[0, D], [-D^T, 0]] for an arbitrary real 2x2 block D.
Dilation dilate_skew_pair(const RealMatrix& D, const Tolerance& tol = {});

/// Proper edge coloring of the complete graph on vertices 0..n-1 (n >= 2):
/// n-1 perfect matchings for even n (round-robin rotation with vertex 0 in
/// the center and 1..n-1 on a regular polygon), and for odd n the even
/// construction on n+1 vertices with every edge meeting the phantom vertex
/// removed, leaving n near-perfect matchings.
struct EdgeColoring {
    int n_vertices = 0;
    // Each class is a matching; edges are (i, j) with i < j, 0-based.
    std::vector<std::vector<std::pair<int, int>>> classes;
};

EdgeColoring one_factorization(int n_vertices);

/// Dilation order produced by dilate_general for n system modes:
/// 4 for n = 1, 4n(n+2) for even n, 4n(n+3) for odd n >= 3.
Index general_order_bound(Index n_modes);

/// Symplectic dilation of an arbitrary real matrix of even order 2n.
///
/// The matrix is split into a symmetric part (dilated through its positive
/// and negative shifted halves), the per-mode skew diagonal blocks, and the
/// off-diagonal skew pair sums grouped by a one-factorization of the mode
/// graph; every piece is dilated to order 4n and the pieces are recombined
/// as an equal-weight convex combination. Term order is fixed, so the output
/// is deterministic per input.
Dilation dilate_general(const RealMatrix& A, const Tolerance& tol = {});

/// Dilation of a.target * b.target of order 2(a.n + b.m + a.m) from two
/// dilations with the same system count. Ancillas stack [b's, a's].
Dilation dilate_product(const Dilation& a, const Dilation& b, const Tolerance& tol = {});

}  // namespace symplectica
