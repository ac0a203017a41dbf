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
// Command line front end. All payloads are JSON, read from file arguments
// ("-" means stdin) and written to stdout or --out. Exit codes form a stable
// contract: 0 success, 1 mathematical failure, 2 I/O, schema, or usage
// failure. Machine-readable errors go to stderr as {"error", "kind"}.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symplectica/channels.hpp"
#include "symplectica/dilation.hpp"
#include "symplectica/errors.hpp"
#include "symplectica/gaussian.hpp"
#include "symplectica/json_io.hpp"
#include "symplectica/rng.hpp"
#include "symplectica/symplectic.hpp"

namespace sy = symplectica;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMath = 1;
constexpr int kExitSchema = 2;

// I/O failures share the schema exit code but keep their own error kind.
class IoError : public sy::Error {
  public:
    using Error::Error;
};

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

std::string read_bytes(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin),
                           std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

sy::Json parse_json(const std::string& bytes, const std::string& origin) {
    sy::Json j = sy::Json::parse(bytes, nullptr, false);
    if (j.is_discarded()) {
        throw sy::SchemaError("invalid JSON in '" + origin + "'");
    }
    return j;
}

struct Input {
    sy::Json json;
    std::string bytes;
};

Input load(const std::string& path) {
    Input in;
    in.bytes = read_bytes(path);
    in.json = parse_json(in.bytes, path);
    return in;
}

// Serializes with a fixed layout so identical objects produce identical bytes.
std::string render(const sy::Json& j) { return j.dump(2) + "\n"; }

void emit(const sy::Json& j, const std::string& out_path) {
    const std::string text = render(j);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out || !(out << text)) {
        throw IoError("cannot write '" + out_path + "'");
    }
}

sy::Tolerance env_tolerance() {
    sy::Tolerance tol;
    if (const char* raw = std::getenv("SYMPLECTICA_TOL")) {
        char* end = nullptr;
        const double v = std::strtod(raw, &end);
        if (end == raw || *end != '\0' || !(v > 0.0)) {
            throw sy::SchemaError("SYMPLECTICA_TOL must be a positive number");
        }
        tol.abs = v;
    }
    return tol;
}

double noise_block_margin(const sy::Dilation& d) {
    if (d.m == 0) {
        return 0.0;
    }
    const sy::RealMatrix q = d.matrix.bottomLeftCorner(2 * d.m, 2 * d.n);
    const sy::RealMatrix b = q.transpose() * q;
    const sy::RealMatrix sym = 0.5 * (b + b.transpose());
    return sy::hermitian_min_eigenvalue(sym, sy::RealMatrix::Zero(sym.rows(), sym.cols()));
}

sy::RealMatrix square_matrix_input(const sy::Json& j, const char* what) {
    const sy::RealMatrix a = sy::matrix_from_json(j, what);
    if (a.rows() != a.cols() || a.rows() % 2 != 0 || a.rows() == 0) {
        throw sy::SchemaError(std::string(what) + ": expected a square matrix of even order");
    }
    return a;
}

// dilate: matrix in, dilation plus run report out.
int cmd_dilate(const std::string& input_path, const std::string& mode,
               const std::string& out_path) {
    const Timer timer;
    const sy::Tolerance tol = env_tolerance();
    const Input in = load(input_path);
    const sy::RealMatrix a = square_matrix_input(in.json, "dilate input");

    sy::Dilation d;
    if (mode == "general") {
        d = sy::dilate_general(a, tol);
    } else if (mode == "pd") {
        d = sy::dilate_positive_definite(a, tol);
    } else if (mode == "symmetric") {
        d = sy::dilate_symmetric(a, tol);
    } else {
        if (a.rows() != 2) {
            throw sy::SchemaError("dilate --mode 2x2 needs a 2x2 input");
        }
        d = sy::dilate_2x2(a, tol);
    }

    sy::Json report;
    report["command"] = "dilate";
    report["mode"] = mode;
    report["input_digest"] = sy::digest_hex(in.bytes);
    report["residuals"] = {{"symplecticity", sy::symplecticity_residual(d.matrix)},
                           {"block_recovery", sy::block_recovery_residual(d)},
                           {"psd_margin", noise_block_margin(d)}};
    report["order"] = d.order();
    report["order_bound"] = sy::general_order_bound(d.n);
    report["elapsed_seconds"] = timer.seconds();

    if (out_path.empty()) {
        report["outputs"] = sy::Json::array({"stdout"});
        sy::Json combined;
        combined["report"] = report;
        combined["dilation"] = sy::dilation_to_json(d);
        emit(combined, "");
    } else {
        report["outputs"] = sy::Json::array({out_path});
        emit(sy::dilation_to_json(d), out_path);
        emit(report, "");
    }
    return kExitOk;
}

// verify: symplectic membership for a bare matrix, both invariants plus the
// noise block margin for a dilation. Residuals are always reported; the exit
// code says whether they clear the tolerance.
int cmd_verify(const std::string& input_path, std::optional<double> abs_flag,
               std::optional<double> rel_flag) {
    const Timer timer;
    sy::Tolerance tol = env_tolerance();
    if (abs_flag) {
        tol.abs = *abs_flag;
    }
    if (rel_flag) {
        tol.rel = *rel_flag;
    }

    const Input in = load(input_path);
    sy::Json report;
    report["command"] = "verify";
    report["input_digest"] = sy::digest_hex(in.bytes);
    report["outputs"] = sy::Json::array({"stdout"});

    bool pass = false;
    if (in.json.is_array()) {
        const sy::RealMatrix a = square_matrix_input(in.json, "verify input");
        const double residual = sy::symplecticity_residual(a);
        report["residuals"] = {{"symplecticity", residual},
                               {"block_recovery", nullptr},
                               {"psd_margin", nullptr}};
        report["order"] = a.rows();
        report["order_bound"] = nullptr;
        pass = residual <= tol.bound(1.0);
    } else if (in.json.is_object()) {
        const sy::Json& body =
            in.json.contains("dilation") ? in.json.at("dilation") : in.json;
        const sy::Dilation d = sy::dilation_from_json(body);
        const double symp = sy::symplecticity_residual(d.matrix);
        const double block = sy::block_recovery_residual(d);
        const double margin = noise_block_margin(d);
        report["residuals"] = {{"symplecticity", symp},
                               {"block_recovery", block},
                               {"psd_margin", margin}};
        report["order"] = d.order();
        report["order_bound"] = sy::general_order_bound(d.n);
        pass = symp <= tol.bound(1.0) &&
               block <= tol.bound(std::max(1.0, sy::max_abs(d.target))) &&
               margin >= -tol.bound(1.0);
    } else {
        throw sy::SchemaError("verify input: expected a matrix or a dilation object");
    }

    report["pass"] = pass;
    report["elapsed_seconds"] = timer.seconds();
    emit(report, "");
    return pass ? kExitOk : kExitMath;
}

int cmd_state_validate(const std::string& input_path) {
    const sy::Tolerance tol = env_tolerance();
    const Input in = load(input_path);
    const sy::GaussianState raw = sy::state_from_json(in.json);
    try {
        const sy::GaussianState s =
            sy::new_state(raw.mean_momentum, raw.mean_position, raw.covariance, tol);
        sy::Json out;
        out["valid"] = true;
        out["margin"] = sy::covariance_margin(s.covariance);
        emit(out, "");
        return kExitOk;
    } catch (const sy::CovarianceError& e) {
        sy::Json err;
        err["error"] = e.what();
        err["kind"] = "covariance";
        err["margin"] = e.margin;
        std::cerr << render(err);
        return kExitMath;
    }
}

int cmd_state_entropy(const std::string& input_path) {
    const sy::Tolerance tol = env_tolerance();
    const Input in = load(input_path);
    const sy::GaussianState raw = sy::state_from_json(in.json);
    const sy::GaussianState s =
        sy::new_state(raw.mean_momentum, raw.mean_position, raw.covariance, tol);
    std::printf("%.12g\n", sy::von_neumann_entropy(s));
    return kExitOk;
}

int cmd_state_transform(const std::string& input_path, const std::string& by_path,
                        const std::string& out_path) {
    const sy::Tolerance tol = env_tolerance();
    const sy::GaussianState s = sy::state_from_json(load(input_path).json);
    const sy::RealMatrix l = square_matrix_input(load(by_path).json, "transform matrix");
    emit(sy::state_to_json(sy::symplectic_transform(s, l, tol)), out_path);
    return kExitOk;
}

int cmd_state_tensor(const std::string& a_path, const std::string& b_path,
                     const std::string& out_path) {
    const sy::GaussianState a = sy::state_from_json(load(a_path).json);
    const sy::GaussianState b = sy::state_from_json(load(b_path).json);
    emit(sy::state_to_json(sy::tensor(a, b)), out_path);
    return kExitOk;
}

int cmd_state_marginal(const std::string& input_path, const std::vector<sy::Index>& keep,
                       const std::string& out_path) {
    const sy::GaussianState s = sy::state_from_json(load(input_path).json);
    emit(sy::state_to_json(sy::marginal(s, keep)), out_path);
    return kExitOk;
}

int cmd_channel_apply(const std::string& channel_path, const std::string& state_path,
                      const std::string& out_path) {
    const sy::Tolerance tol = env_tolerance();
    const sy::GaussianChannel ch = sy::channel_from_json(load(channel_path).json);
    sy::require_valid(ch, tol);
    const sy::GaussianState raw = sy::state_from_json(load(state_path).json);
    const sy::GaussianState s =
        sy::new_state(raw.mean_momentum, raw.mean_position, raw.covariance, tol);
    emit(sy::state_to_json(sy::apply(ch, s, tol)), out_path);
    return kExitOk;
}

int cmd_channel_compose(const std::string& outer_path, const std::string& inner_path,
                        const std::string& out_path) {
    const sy::Tolerance tol = env_tolerance();
    const sy::GaussianChannel outer = sy::channel_from_json(load(outer_path).json);
    const sy::GaussianChannel inner = sy::channel_from_json(load(inner_path).json);
    const auto* o = std::get_if<sy::SymplecticChannel>(&outer);
    const auto* i = std::get_if<sy::SymplecticChannel>(&inner);
    if (o == nullptr || i == nullptr) {
        throw sy::InvalidArgumentError("compose needs two symplectic channels");
    }
    sy::require_valid(outer, tol);
    sy::require_valid(inner, tol);
    emit(sy::channel_to_json(sy::compose_symplectic(*o, *i, tol)), out_path);
    return kExitOk;
}

int cmd_channel_check(const std::string& channel_path) {
    const sy::Tolerance tol = env_tolerance();
    const sy::GaussianChannel ch = sy::channel_from_json(load(channel_path).json);
    const bool valid = sy::channel_valid(ch, tol);
    sy::Json out;
    out["valid"] = valid;
    out["n"] = sy::channel_modes(ch);
    if (const auto* q = std::get_if<sy::QuasifreeChannel>(&ch)) {
        out["kind"] = "quasifree";
        out["in_F0"] = sy::in_F0(q->linear, q->noise, tol);
    } else if (std::holds_alternative<sy::BosonicChannel>(ch)) {
        out["kind"] = "bosonic";
    } else {
        out["kind"] = "symplectic";
    }
    emit(out, "");
    return valid ? kExitOk : kExitMath;
}

int cmd_channel_from_dilation(const std::string& input_path, const std::string& out_path) {
    const Input in = load(input_path);
    const sy::Json& body = in.json.contains("dilation") ? in.json.at("dilation") : in.json;
    const sy::Dilation d = sy::dilation_from_json(body);
    emit(sy::channel_to_json(sy::dilation_to_channel(d)), out_path);
    return kExitOk;
}

// gen: seeded fixtures. Deterministic bytes per (kind, n, seed, flags).
int cmd_gen(const std::string& kind, sy::Index n, std::uint64_t seed, sy::Index k,
            const std::string& channel_kind, const std::string& out_path) {
    if (n < 1) {
        throw sy::SchemaError("gen: --n must be positive");
    }
    if (kind == "symplectic") {
        emit(sy::matrix_to_json(sy::random_symplectic(n, seed)), out_path);
        return kExitOk;
    }
    if (kind == "spd") {
        emit(sy::matrix_to_json(sy::random_spd(2 * n, seed)), out_path);
        return kExitOk;
    }
    if (kind == "state") {
        emit(sy::state_to_json(sy::random_state(n, seed)), out_path);
        return kExitOk;
    }
    if (kind == "channel") {
        if (k < 0) {
            throw sy::SchemaError("gen: --k must be nonnegative");
        }
        if (channel_kind == "bosonic") {
            sy::BosonicChannel b;
            b.n = n;
            b.noise = sy::random_spd(2 * n, seed);
            emit(sy::channel_to_json(sy::GaussianChannel(b)), out_path);
            return kExitOk;
        }
        sy::SymplecticChannel s;
        s.n = n;
        s.k = k;
        s.matrix = sy::random_symplectic(n + k, seed);
        if (channel_kind == "symplectic") {
            emit(sy::channel_to_json(sy::GaussianChannel(s)), out_path);
            return kExitOk;
        }
        if (channel_kind == "quasifree") {
            emit(sy::channel_to_json(sy::GaussianChannel(sy::symplectic_to_quasifree(s))),
                 out_path);
            return kExitOk;
        }
        throw sy::SchemaError("gen: --channel-kind must be bosonic, symplectic, or quasifree");
    }
    throw sy::SchemaError("gen: kind must be symplectic, spd, state, or channel");
}

int error_exit(const std::string& message, const std::string& kind, int code) {
    sy::Json err;
    err["error"] = message;
    err["kind"] = kind;
    std::cerr << render(err);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Symplectic dilations and Gaussian state/channel calculus over JSON"};
    app.require_subcommand(1);

    // dilate
    auto* dilate = app.add_subcommand("dilate", "Dilate an even-order matrix");
    std::string dilate_input = "-";
    std::string dilate_mode = "general";
    std::string dilate_out;
    dilate->add_option("input", dilate_input, "Matrix JSON file, '-' for stdin");
    dilate->add_option("--mode", dilate_mode, "general, pd, symmetric, or 2x2")
        ->check(CLI::IsMember({"general", "pd", "symmetric", "2x2"}));
    dilate->add_option("--out", dilate_out, "Write the dilation JSON here");

    // verify
    auto* verify = app.add_subcommand("verify", "Check a matrix or dilation");
    std::string verify_input = "-";
    std::optional<double> verify_abs;
    std::optional<double> verify_rel;
    verify->add_option("input", verify_input, "Matrix or dilation JSON file");
    verify->add_option("--abs", verify_abs, "Absolute tolerance");
    verify->add_option("--rel", verify_rel, "Relative tolerance");

    // state
    auto* state = app.add_subcommand("state", "Gaussian state operations");
    state->require_subcommand(1);
    auto* validate = state->add_subcommand("validate", "Check the covariance inequality");
    std::string validate_input = "-";
    validate->add_option("input", validate_input, "State JSON file");
    auto* entropy = state->add_subcommand("entropy", "Von Neumann entropy in nats");
    std::string entropy_input = "-";
    entropy->add_option("input", entropy_input, "State JSON file");
    auto* transform = state->add_subcommand("transform", "Apply a symplectic matrix");
    std::string transform_input = "-";
    std::string transform_by;
    std::string transform_out;
    transform->add_option("input", transform_input, "State JSON file");
    transform->add_option("--by", transform_by, "Symplectic matrix JSON file")->required();
    transform->add_option("--out", transform_out, "Output path");
    auto* tensor_cmd = state->add_subcommand("tensor", "Product of two states");
    std::string tensor_a;
    std::string tensor_b;
    std::string tensor_out;
    tensor_cmd->add_option("a", tensor_a, "First state JSON file")->required();
    tensor_cmd->add_option("b", tensor_b, "Second state JSON file")->required();
    tensor_cmd->add_option("--out", tensor_out, "Output path");
    auto* marginal_cmd = state->add_subcommand("marginal", "Reduce to selected modes");
    std::string marginal_input = "-";
    std::vector<sy::Index> marginal_keep;
    std::string marginal_out;
    marginal_cmd->add_option("input", marginal_input, "State JSON file");
    marginal_cmd->add_option("--keep", marginal_keep, "Mode indices to keep")
        ->required()
        ->delimiter(',');
    marginal_cmd->add_option("--out", marginal_out, "Output path");

    // channel
    auto* channel = app.add_subcommand("channel", "Gaussian channel operations");
    channel->require_subcommand(1);
    auto* apply_cmd = channel->add_subcommand("apply", "Apply a channel to a state");
    std::string apply_channel;
    std::string apply_state;
    std::string apply_out;
    apply_cmd->add_option("channel", apply_channel, "Channel JSON file")->required();
    apply_cmd->add_option("state", apply_state, "State JSON file")->required();
    apply_cmd->add_option("--out", apply_out, "Output path");
    auto* compose = channel->add_subcommand(
        "compose", "Compose symplectic channels; the result acts as OUTER after INNER");
    std::string compose_outer;
    std::string compose_inner;
    std::string compose_out;
    compose->add_option("outer", compose_outer, "Outer channel JSON file")->required();
    compose->add_option("inner", compose_inner, "Inner channel JSON file")->required();
    compose->add_option("--out", compose_out, "Output path");
    auto* check = channel->add_subcommand("check", "Validate a channel object");
    std::string check_input = "-";
    check->add_option("input", check_input, "Channel JSON file");
    auto* from_dilation = channel->add_subcommand("from-dilation",
                                                  "Quasifree channel of a dilation");
    std::string fd_input = "-";
    std::string fd_out;
    from_dilation->add_option("input", fd_input, "Dilation JSON file");
    from_dilation->add_option("--out", fd_out, "Output path");

    // gen
    auto* gen = app.add_subcommand("gen", "Seeded random fixtures");
    std::string gen_kind;
    sy::Index gen_n = 0;
    std::uint64_t gen_seed = 0;
    sy::Index gen_k = 1;
    std::string gen_channel_kind = "symplectic";
    std::string gen_out;
    gen->add_option("kind", gen_kind, "symplectic, spd, state, or channel")->required();
    gen->add_option("--n", gen_n, "Mode count")->required();
    gen->add_option("--seed", gen_seed, "RNG seed; mandatory, no ambient entropy")->required();
    gen->add_option("--k", gen_k, "Ancilla modes (gen channel)");
    gen->add_option("--channel-kind", gen_channel_kind, "Channel kind (gen channel)")
        ->check(CLI::IsMember({"bosonic", "symplectic", "quasifree"}));
    gen->add_option("--out", gen_out, "Output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return error_exit(e.what(), "usage", kExitSchema);
    }

    try {
        if (dilate->parsed()) {
            return cmd_dilate(dilate_input, dilate_mode, dilate_out);
        }
        if (verify->parsed()) {
            return cmd_verify(verify_input, verify_abs, verify_rel);
        }
        if (state->parsed()) {
            if (validate->parsed()) {
                return cmd_state_validate(validate_input);
            }
            if (entropy->parsed()) {
                return cmd_state_entropy(entropy_input);
            }
            if (transform->parsed()) {
                return cmd_state_transform(transform_input, transform_by, transform_out);
            }
            if (tensor_cmd->parsed()) {
                return cmd_state_tensor(tensor_a, tensor_b, tensor_out);
            }
            return cmd_state_marginal(marginal_input, marginal_keep, marginal_out);
        }
        if (channel->parsed()) {
            if (apply_cmd->parsed()) {
                return cmd_channel_apply(apply_channel, apply_state, apply_out);
            }
            if (compose->parsed()) {
                return cmd_channel_compose(compose_outer, compose_inner, compose_out);
            }
            if (check->parsed()) {
                return cmd_channel_check(check_input);
            }
            return cmd_channel_from_dilation(fd_input, fd_out);
        }
        return cmd_gen(gen_kind, gen_n, gen_seed, gen_k, gen_channel_kind, gen_out);
    } catch (const sy::SchemaError& e) {
        return error_exit(e.what(), "schema", kExitSchema);
    } catch (const IoError& e) {
        return error_exit(e.what(), "io", kExitSchema);
    } catch (const sy::DimensionError& e) {
        return error_exit(e.what(), "dimension", kExitSchema);
    } catch (const sy::NotPositiveDefiniteError& e) {
        return error_exit(e.what(), "not_positive_definite", kExitMath);
    } catch (const sy::CovarianceError& e) {
        return error_exit(e.what(), "covariance", kExitMath);
    } catch (const sy::NumericalError& e) {
        return error_exit(e.what(), "numerical", kExitMath);
    } catch (const sy::Error& e) {
        return error_exit(e.what(), "invalid_argument", kExitMath);
    } catch (const std::exception& e) {
        return error_exit(e.what(), "internal", kExitMath);
    }
}
