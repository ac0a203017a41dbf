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
//
// Acceptance gate: eight release criteria, one pass/fail line each. The
// tolerances are pinned here and nowhere else; loosening one is a release
// decision, not a test tweak. Exit code 0 only if every criterion holds.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "subprocess.hpp"
#include "symplectica/channels.hpp"
#include "symplectica/dilation.hpp"
#include "symplectica/errors.hpp"
#include "symplectica/gaussian.hpp"
#include "symplectica/json_io.hpp"
#include "symplectica/symplectic.hpp"

using namespace symplectica;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2g", x);
    return buf;
}

double elapsed_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Criterion 1: the general construction dilates 200 random matrices per mode
// count in {1, 2, 3, 4} with residuals at most 1e-7, lands exactly on the
// advertised order, and finishes inside 30 seconds.
Outcome criterion_general_dilation() {
    constexpr double kResidualTol = 1e-7;
    constexpr double kTimeBudget = 30.0;
    const auto t0 = std::chrono::steady_clock::now();

    double worst_symp = 0.0;
    double worst_block = 0.0;
    int cases = 0;
    for (Index n : {1, 2, 3, 4}) {
        SplitMix64 rng(SplitMix64::derive(101, static_cast<std::uint64_t>(n)));
        for (int trial = 0; trial < 200; ++trial) {
            const RealMatrix a = oracles::random_matrix(2 * n, 2 * n, rng, 3.0);
            const Dilation d = dilate_general(a);
            if (d.order() != general_order_bound(n)) {
                return {false, "order " + std::to_string(d.order()) + " for n = " +
                                   std::to_string(n)};
            }
            worst_symp = std::max(worst_symp, symplecticity_residual(d.matrix));
            worst_block = std::max(worst_block, block_recovery_residual(d));
            ++cases;
        }
    }
    const double secs = elapsed_since(t0);
    const bool pass = worst_symp <= kResidualTol && worst_block <= kResidualTol &&
                      secs < kTimeBudget;
    return {pass, std::to_string(cases) + " matrices, max symplecticity " + sci(worst_symp) +
                      ", max block recovery " + sci(worst_block) + ", " + sci(secs) + " s"};
}

// Criterion 2: the four closed-form one-mode dilations over a parameter grid
// and the eight-by-eight skew pair assembly over 100 random couplings stay
// symplectic to 1e-12.
Outcome criterion_closed_forms() {
    constexpr double kTol = 1e-12;
    double worst = 0.0;
    int cases = 0;

    worst = std::max(worst,
                     symplecticity_residual(elementary_dilation({CanonicalFormKind::Zero, 0.0})
                                                .matrix));
    ++cases;
    for (double alpha : {0.25, 0.5, 1.0, 2.0, 4.0}) {
        for (CanonicalFormKind kind : {CanonicalFormKind::RankOne, CanonicalFormKind::PlusPlus,
                                       CanonicalFormKind::PlusMinus}) {
            worst = std::max(worst,
                             symplecticity_residual(elementary_dilation({kind, alpha}).matrix));
            ++cases;
        }
    }

    SplitMix64 rng(102);
    for (int trial = 0; trial < 100; ++trial) {
        const RealMatrix d = oracles::random_matrix(2, 2, rng, 2.0);
        worst = std::max(worst, symplecticity_residual(dilate_skew_pair(d).matrix));
        ++cases;
    }
    return {worst <= kTol,
            std::to_string(cases) + " matrices, max residual " + sci(worst)};
}

// Criterion 3: normal form of 200 random spd matrices (up to six modes)
// reconstructs to 1e-7 with a symplectic transform to 1e-8, the parameters
// are congruence invariants to 1e-7, and diag(4, 1) yields 2 within 1e-10.
Outcome criterion_normal_form() {
    constexpr double kRoundTrip = 1e-7;
    constexpr double kSymplectic = 1e-8;
    constexpr double kInvariance = 1e-7;
    constexpr double kPinned = 1e-10;

    double worst_recon = 0.0;
    double worst_symp = 0.0;
    double worst_drift = 0.0;
    SplitMix64 rng(103);
    for (int trial = 0; trial < 200; ++trial) {
        const Index n = 1 + static_cast<Index>(rng.next() % 6);
        const RealMatrix a = random_spd(2 * n, rng.next());
        const WilliamsonDecomposition w = williamson(a);
        RealMatrix d = RealMatrix::Zero(2 * n, 2 * n);
        for (Index i = 0; i < n; ++i) {
            d(2 * i, 2 * i) = w.kappas[static_cast<std::size_t>(i)];
            d(2 * i + 1, 2 * i + 1) = w.kappas[static_cast<std::size_t>(i)];
        }
        worst_recon =
            std::max(worst_recon, max_abs(RealMatrix(w.L.transpose() * a * w.L - d)));
        worst_symp = std::max(worst_symp, symplecticity_residual(w.L));

        const RealMatrix g = random_symplectic(n, rng.next());
        const auto moved = williamson(RealMatrix(g.transpose() * a * g)).kappas;
        for (std::size_t i = 0; i < moved.size(); ++i) {
            worst_drift = std::max(worst_drift, std::abs(moved[i] - w.kappas[i]));
        }
    }

    RealMatrix pinned = RealMatrix::Zero(2, 2);
    pinned.diagonal() << 4.0, 1.0;
    const double kappa = williamson(pinned).kappas.at(0);

    const bool pass = worst_recon <= kRoundTrip && worst_symp <= kSymplectic &&
                      worst_drift <= kInvariance && std::abs(kappa - 2.0) <= kPinned;
    return {pass, "200 matrices, max round trip " + sci(worst_recon) + ", max symplecticity " +
                      sci(worst_symp) + ", max parameter drift " + sci(worst_drift) +
                      ", diag(4,1) offset " + sci(std::abs(kappa - 2.0))};
}

// Criterion 4: the closed entropy formula matches the spectral series to
// 1e-10 on a parameter grid, the one-mode thermal value hits 0.954771 within
// 1e-5 nats, and entropy is additive, displacement invariant, and symplectic
// invariant to 1e-9 over 200 random states.
Outcome criterion_entropy() {
    constexpr double kSeries = 1e-10;
    constexpr double kThermal = 1e-5;
    constexpr double kInvariance = 1e-9;

    double worst_series = 0.0;
    for (double kappa : {0.5, 0.6, 1.0, 2.0, 10.0}) {
        worst_series =
            std::max(worst_series, std::abs(mode_entropy(kappa) - oracles::entropy_series(kappa)));
    }
    const double thermal_offset = std::abs(von_neumann_entropy(thermal_state(1.0)) - 0.954771);

    double worst_law = 0.0;
    SplitMix64 rng(104);
    for (int pair = 0; pair < 100; ++pair) {
        const Index na = 1 + static_cast<Index>(rng.next() % 3);
        const Index nb = 1 + static_cast<Index>(rng.next() % 3);
        const GaussianState a = random_state(na, rng.next());
        const GaussianState b = random_state(nb, rng.next());
        const double ha = von_neumann_entropy(a);
        const double hb = von_neumann_entropy(b);

        worst_law = std::max(worst_law,
                             std::abs(von_neumann_entropy(tensor(a, b)) - ha - hb));

        std::vector<std::complex<double>> u(static_cast<std::size_t>(na));
        for (auto& amp : u) {
            amp = {2.0 * rng.uniform_symmetric(), 2.0 * rng.uniform_symmetric()};
        }
        worst_law =
            std::max(worst_law, std::abs(von_neumann_entropy(displace(a, u)) - ha));

        const RealMatrix l = random_symplectic(nb, rng.next());
        worst_law = std::max(
            worst_law, std::abs(von_neumann_entropy(symplectic_transform(b, l)) - hb));
    }

    const bool pass =
        worst_series <= kSeries && thermal_offset <= kThermal && worst_law <= kInvariance;
    return {pass, "series offset " + sci(worst_series) + ", thermal offset " +
                      sci(thermal_offset) + ", max law violation " + sci(worst_law)};
}

// Criterion 5: composed symplectic channels match sequential application on
// 20 probes per pair to 1e-8 across 100 pairs, quasifree parameters
// reproduce the action to 1e-9, and every dilation in the corpus induces an
// admissible noise pair with no exception.
Outcome criterion_channel_laws() {
    constexpr double kCompose = 1e-8;
    constexpr double kEquivalence = 1e-9;

    const auto distance = [](const GaussianState& a, const GaussianState& b) {
        double worst = max_abs(RealMatrix(a.covariance - b.covariance));
        worst = std::max(worst, max_abs(RealMatrix(a.mean_momentum - b.mean_momentum)));
        return std::max(worst, max_abs(RealMatrix(a.mean_position - b.mean_position)));
    };

    double worst_compose = 0.0;
    double worst_equiv = 0.0;
    SplitMix64 rng(105);
    for (int pair = 0; pair < 100; ++pair) {
        const Index n = 1 + static_cast<Index>(rng.next() % 3);
        SymplecticChannel outer;
        outer.n = n;
        outer.k = static_cast<Index>(rng.next() % 3);
        outer.matrix = random_symplectic(n + outer.k, rng.next());
        SymplecticChannel inner;
        inner.n = n;
        inner.k = static_cast<Index>(rng.next() % 3);
        inner.matrix = random_symplectic(n + inner.k, rng.next());

        const SymplecticChannel fused = compose_symplectic(outer, inner);
        const QuasifreeChannel q = symplectic_to_quasifree(outer);
        for (int probe = 0; probe < 20; ++probe) {
            const GaussianState s = random_state(n, rng.next());
            const GaussianState sequential =
                symplectica::apply(GaussianChannel(outer), symplectica::apply(GaussianChannel(inner), s));
            worst_compose =
                std::max(worst_compose, distance(symplectica::apply(GaussianChannel(fused), s), sequential));
            worst_equiv = std::max(worst_equiv, distance(symplectica::apply(GaussianChannel(q), s),
                                                         symplectica::apply(GaussianChannel(outer), s)));
        }
    }

    // Dilation corpus: every constructor, several shapes each.
    std::vector<Dilation> corpus;
    SplitMix64 crng(106);
    for (Index n : {1, 2, 3, 4}) {
        for (int trial = 0; trial < 15; ++trial) {
            corpus.push_back(dilate_general(oracles::random_matrix(2 * n, 2 * n, crng, 3.0)));
        }
    }
    for (int trial = 0; trial < 30; ++trial) {
        corpus.push_back(dilate_2x2(oracles::random_matrix(2, 2, crng, 3.0)));
        corpus.push_back(dilate_skew_pair(oracles::random_matrix(2, 2, crng, 2.0)));
    }
    for (Index n : {1, 2, 3}) {
        for (int trial = 0; trial < 10; ++trial) {
            corpus.push_back(dilate_positive_definite(random_spd(2 * n, crng.next())));
            RealMatrix sym = oracles::random_matrix(2 * n, 2 * n, crng, 2.0);
            sym = 0.5 * (sym + sym.transpose()).eval();
            corpus.push_back(dilate_symmetric(sym));
        }
    }
    for (int trial = 0; trial < 10; ++trial) {
        const RealMatrix a = oracles::random_matrix(4, 4, crng, 2.0);
        const RealMatrix b = oracles::random_matrix(4, 4, crng, 2.0);
        corpus.push_back(dilate_product(dilate_general(a), dilate_general(b)));
    }
    for (double alpha : {0.25, 1.0, 4.0}) {
        for (CanonicalFormKind kind : {CanonicalFormKind::RankOne, CanonicalFormKind::PlusPlus,
                                       CanonicalFormKind::PlusMinus}) {
            corpus.push_back(elementary_dilation({kind, alpha}));
        }
    }

    int admissible = 0;
    for (const Dilation& d : corpus) {
        const QuasifreeChannel q = dilation_to_channel(d);
        if (in_F0(q.linear, q.noise)) {
            ++admissible;
        }
    }

    const bool pass = worst_compose <= kCompose && worst_equiv <= kEquivalence &&
                      admissible == static_cast<int>(corpus.size());
    return {pass, "max composition gap " + sci(worst_compose) + ", max action gap " +
                      sci(worst_equiv) + ", " + std::to_string(admissible) + "/" +
                      std::to_string(corpus.size()) + " dilations admissible"};
}

// Criterion 6: for 100 admissible pairs the 500-trial sampler finds no
// counterexample, and the hand-built inadmissible pair (identity, minus
// identity) is rejected with a concrete witness.
Outcome criterion_containment() {
    constexpr int kTrials = 500;
    SplitMix64 rng(107);
    int clean = 0;
    for (int i = 0; i < 100; ++i) {
        const Index n = 1 + static_cast<Index>(rng.next() % 3);
        SymplecticChannel ch;
        ch.n = n;
        ch.k = static_cast<Index>(rng.next() % 3);
        ch.matrix = random_symplectic(n + ch.k, rng.next());
        const QuasifreeChannel q = symplectic_to_quasifree(ch);
        if (!in_F0(q.linear, q.noise)) {
            return {false, "fixture " + std::to_string(i) + " unexpectedly inadmissible"};
        }
        const MembershipVerdict verdict =
            sample_F_membership(q.linear, q.noise, kTrials, rng.next());
        if (verdict.member && verdict.trials == kTrials) {
            ++clean;
        }
    }

    const RealMatrix i2 = RealMatrix::Identity(2, 2);
    const MembershipVerdict rejected = sample_F_membership(i2, RealMatrix(-i2), kTrials, 1);
    const bool witness = !rejected.member && rejected.counterexample.has_value() &&
                         max_abs(RealMatrix(*rejected.counterexample - 0.5 * i2)) == 0.0;

    const bool pass = clean == 100 && witness;
    return {pass, std::to_string(clean) + "/100 admissible pairs clean over " +
                      std::to_string(kTrials) + " trials each, invalid pair " +
                      (witness ? "rejected with witness" : "NOT rejected")};
}

// Criterion 7: 500 random states stay valid under displace, transform,
// tensor, and marginal; purity detection is correct on 100 boundary
// covariances and 100 thermal mixtures.
Outcome criterion_state_closure() {
    SplitMix64 rng(108);
    int closed = 0;
    GaussianState previous = vacuum_state(1);
    for (int trial = 0; trial < 500; ++trial) {
        const Index n = 1 + static_cast<Index>(rng.next() % 4);
        const GaussianState s = random_state(n, rng.next());

        std::vector<std::complex<double>> u(static_cast<std::size_t>(n));
        for (auto& amp : u) {
            amp = {2.0 * rng.uniform_symmetric(), 2.0 * rng.uniform_symmetric()};
        }
        const GaussianState shifted = displace(s, u);

        const GaussianState moved =
            symplectic_transform(shifted, random_symplectic(n, rng.next()));
        const GaussianState joint = tensor(moved, previous);
        const std::vector<Index> keep = {
            static_cast<Index>(rng.next() % static_cast<std::uint64_t>(joint.n))};
        const GaussianState part = marginal(joint, keep);

        if (state_valid(shifted) && state_valid(moved) && state_valid(joint) &&
            state_valid(part)) {
            ++closed;
        }
        previous = part;
    }

    int pure_right = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const Index n = 1 + static_cast<Index>(rng.next() % 3);
        const RealMatrix l = random_symplectic(n, rng.next());
        const GaussianState boundary = new_state(
            RealVector::Zero(n), RealVector::Zero(n), RealMatrix(0.5 * l.transpose() * l));
        if (is_pure(boundary)) {
            ++pure_right;
        }
    }
    int mixed_right = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const Index n = 1 + static_cast<Index>(rng.next() % 2);
        GaussianState mixed = thermal_state(0.6 + 1.9 * rng.uniform());
        for (Index mode = 1; mode < n; ++mode) {
            mixed = tensor(mixed, thermal_state(0.6 + 1.9 * rng.uniform()));
        }
        mixed = symplectic_transform(mixed, random_symplectic(n, rng.next()));
        if (!is_pure(mixed)) {
            ++mixed_right;
        }
    }

    const bool pass = closed == 500 && pure_right == 100 && mixed_right == 100;
    return {pass, std::to_string(closed) + "/500 closed, " + std::to_string(pure_right) +
                      "/100 boundary covariances pure, " + std::to_string(mixed_right) +
                      "/100 mixtures impure"};
}

// Criterion 8: CLI fixtures round trip (gen output passes its validator,
// serialization is byte stable) and the exit-code contract holds on a matrix
// of good and bad inputs.
Outcome criterion_cli() {
    using subprocess::RunResult;
    using subprocess::Scratch;
    using subprocess::run_cli;
    const Scratch scratch;
    std::vector<std::string> failures;
    const auto expect = [&failures](bool ok, const std::string& label) {
        if (!ok) {
            failures.push_back(label);
        }
    };

    // Every gen kind feeds its own validator.
    for (const std::string seed : {"1", "2", "3"}) {
        const std::string sym = scratch.path("sym_" + seed + ".json");
        expect(run_cli(scratch, {"gen", "symplectic", "--n", "2", "--seed", seed, "--out", sym})
                       .exit_code == 0,
               "gen symplectic");
        expect(run_cli(scratch, {"verify", sym}).exit_code == 0, "verify gen symplectic");

        const std::string spd = scratch.path("spd_" + seed + ".json");
        expect(run_cli(scratch, {"gen", "spd", "--n", "2", "--seed", seed, "--out", spd})
                       .exit_code == 0,
               "gen spd");
        const std::string dil = scratch.path("dil_" + seed + ".json");
        expect(run_cli(scratch, {"dilate", spd, "--mode", "pd", "--out", dil}).exit_code == 0,
               "pd dilation of gen spd");
        expect(run_cli(scratch, {"verify", dil}).exit_code == 0, "verify pd dilation");

        const std::string st = scratch.path("st_" + seed + ".json");
        expect(run_cli(scratch, {"gen", "state", "--n", "2", "--seed", seed, "--out", st})
                       .exit_code == 0,
               "gen state");
        expect(run_cli(scratch, {"state", "validate", st}).exit_code == 0,
               "validate gen state");

        const std::string ch = scratch.path("ch_" + seed + ".json");
        expect(run_cli(scratch, {"gen", "channel", "--n", "2", "--k", "1", "--seed", seed,
                                 "--out", ch})
                       .exit_code == 0,
               "gen channel");
        expect(run_cli(scratch, {"channel", "check", ch}).exit_code == 0,
               "check gen channel");
    }

    // Byte-stable serialization.
    const RunResult once = run_cli(scratch, {"gen", "state", "--n", "3", "--seed", "9"});
    const RunResult twice = run_cli(scratch, {"gen", "state", "--n", "3", "--seed", "9"});
    expect(once.exit_code == 0 && once.out == twice.out, "gen bytes stable");
    const std::string rt = scratch.write("rt.json", once.out);
    const RunResult keep_all = run_cli(scratch, {"state", "marginal", rt, "--keep", "0,1,2"});
    expect(keep_all.exit_code == 0 && keep_all.out == once.out,
           "parse and serialize round trip");

    // Exit-code contract.
    expect(run_cli(scratch, {"verify", "-"},
                   "[[0,-1,0,0],[1,0,0,0],[0,0,0,-1],[0,0,1,0]]")
                   .exit_code == 0,
           "exit 0 on pass");
    expect(run_cli(scratch, {"verify", "-"}, "[[2,0],[0,2]]").exit_code == 1,
           "exit 1 on verification failure");
    expect(run_cli(scratch, {"state", "validate", "-"},
                   "{\"n\":1,\"l\":[0],\"m\":[0],\"S\":[[0.25,0],[0,0.25]]}")
                   .exit_code == 1,
           "exit 1 on invalid covariance");
    expect(run_cli(scratch, {"dilate", "-", "--mode", "pd"}, "[[1,0],[0,-1]]").exit_code == 1,
           "exit 1 on indefinite pd input");
    expect(run_cli(scratch, {"verify", "-"}, "not json").exit_code == 2, "exit 2 on bad json");
    expect(run_cli(scratch, {"verify", scratch.path("absent.json")}).exit_code == 2,
           "exit 2 on missing file");
    expect(run_cli(scratch, {"dilate", "-"}, "[[1,2,3],[4,5,6],[7,8,9]]").exit_code == 2,
           "exit 2 on odd order");
    expect(run_cli(scratch, {"gen", "state", "--n", "1"}).exit_code == 2,
           "exit 2 on missing seed");
    expect(run_cli(scratch, {"dilate", "-", "--mode", "banana"}, "[[0,0],[0,0]]").exit_code ==
               2,
           "exit 2 on unknown mode");
    expect(run_cli(scratch, {"verify", "-"}, "[[2,0],[0,2]]", "SYMPLECTICA_TOL=rubbish")
                   .exit_code == 2,
           "exit 2 on malformed tolerance");
    expect(run_cli(scratch, {"verify", "-"}, "[[2,0],[0,2]]", "SYMPLECTICA_TOL=10")
                   .exit_code == 0,
           "tolerance env var honored");

    if (failures.empty()) {
        return {true, "all fixtures round tripped, exit codes as contracted"};
    }
    std::ostringstream detail;
    detail << failures.size() << " check(s) failed: ";
    for (std::size_t i = 0; i < failures.size() && i < 4; ++i) {
        detail << (i ? "; " : "") << failures[i];
    }
    return {false, detail.str()};
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"general dilation residuals and orders", criterion_general_dilation},
        {"one-mode closed forms and skew pair assembly", criterion_closed_forms},
        {"normal form round trips", criterion_normal_form},
        {"entropy against the series oracle", criterion_entropy},
        {"channel composition and induced noise pairs", criterion_channel_laws},
        {"sampled noise-set containment", criterion_containment},
        {"state calculus closure and purity", criterion_state_closure},
        {"CLI round trips and exit codes", criterion_cli},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] criterion %zu: %s (%s)\n", outcome.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].name, outcome.detail.c_str());
        std::fflush(stdout);
        if (!outcome.pass) {
            ++failed;
        }
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", criteria.size() - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
