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

#include <cstdint>
#include <optional>
#include <variant>

#include "symplectica/dilation.hpp"
#include "symplectica/gaussian.hpp"

namespace symplectica {

/// Classical noise injection: S -> S + C for symmetric PSD C; means fixed.
struct BosonicChannel {
    Index n = 0;
    RealMatrix noise;  // C, 2n x 2n
};

/// Conjugation by a symplectic matrix of order 2(n + k) with the k ancilla
/// modes prepared in vacuum and traced out afterwards:
///   S -> M11^T S M11 + (1/2) M21^T M21,  mu -> M11^T mu,
/// where M11 is the top-left 2n x 2n block and M21 the lower-left 2k x 2n.
struct SymplecticChannel {
    Index n = 0;
    Index k = 0;       // ancilla modes
    RealMatrix matrix;  // M, order 2(n + k)
};

/// General parameter-level map S -> A^T S A + (1/2) B, mu -> A^T mu,
/// admissible exactly when B + i(A^T J A - J) >= 0.
struct QuasifreeChannel {
    Index n = 0;
    RealMatrix linear;  // A
    RealMatrix noise;   // B
};

using GaussianChannel = std::variant<BosonicChannel, SymplecticChannel, QuasifreeChannel>;

Index channel_modes(const GaussianChannel& ch);

/// Kind-specific invariant: C symmetric PSD / M symplectic / (A, B) admissible.
bool channel_valid(const GaussianChannel& ch, const Tolerance& tol = {});

/// Throws InvalidArgumentError (with the failed condition) when invalid.
void require_valid(const GaussianChannel& ch, const Tolerance& tol = {});

/// Admissibility of the quasifree pair: B symmetric within `tol` (violations
/// throw InvalidArgumentError) and B + i(A^T J A - J) >= 0 up to `tol`.
bool quasifree_valid(const RealMatrix& linear, const RealMatrix& noise,
                     const Tolerance& tol = {});

/// Applies the channel to a state on matching mode count; the output is
/// revalidated through new_state.
GaussianState apply(const GaussianChannel& ch, const GaussianState& state,
                    const Tolerance& tol = {});

/// One symplectic channel acting like outer after inner. The combined matrix
/// is assembled blockwise on the layout [system, outer ancillas, inner
/// ancillas] and self-checked for symplecticity.
SymplecticChannel compose_symplectic(const SymplecticChannel& outer,
                                     const SymplecticChannel& inner,
                                     const Tolerance& tol = {});

/// The quasifree parameters (A, B) = (M11, M21^T M21) realizing the same map.
QuasifreeChannel symplectic_to_quasifree(const SymplecticChannel& ch);

/// Quasifree channel induced by a dilation: A = target, B = Q^T Q with Q the
/// lower-left 2m x 2n block of the dilation matrix. Admissible by the block
/// identity of symplectic matrices.
QuasifreeChannel dilation_to_channel(const Dilation& d);

/// Membership of S in the cone of valid covariances: symmetric, PSD, and
/// 2S - iJ >= 0, each up to `tol`.
bool in_K(const RealMatrix& S, const Tolerance& tol = {});

/// Noise pairs admissible for the linear part: B symmetric PSD and
/// B + i(A^T J A - J) >= 0, each up to `tol`.
bool in_F0(const RealMatrix& linear, const RealMatrix& noise, const Tolerance& tol = {});

struct MembershipVerdict {
    bool member = true;
    std::optional<RealMatrix> counterexample;  // present iff member is false
    int trials = 0;                            // trials actually run
};

/// Randomized check that A^T S A + (1/2) B stays a valid covariance across
/// sampled valid S. Trial 0 always probes the vacuum covariance I/2; later
/// trials mix random thermal conjugates (70%) and pure boundary covariances
/// (30%), each from a per-trial derived seed, so the verdict is deterministic
/// per seed and trivially shardable. Stops at the first failure.
MembershipVerdict sample_F_membership(const RealMatrix& linear, const RealMatrix& noise,
                                      int trials, std::uint64_t seed,
                                      const Tolerance& tol = {});

}  // namespace symplectica
