/*
 * Copyright (C) 2026 The ecc160 Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * Command-line front end. Exit codes: 0 success, 1 operational failure,
 * 2 usage error (bad flags, unknown curve or benchmark op).
 */

#pragma once

#include "ecc160/bench.hpp"
#include "ecc160/protocols.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace ecc160::cli {

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::invalid_encoding, "cannot read '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Two lines: d=<hex> and Q=<SEC1 hex>.
inline std::string keyfile_text(const CurveParams& c, const KeyPair& kp) {
    return "d=" + kp.d.to_hex(c.scalar_bytes()) + "\nQ=" + point_to_hex(c, kp.Q) + "\n";
}

inline KeyPair keyfile_parse(const CurveParams& c, std::string_view text) {
    std::optional<std::string> d_hex, q_hex;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.starts_with("d="))
            d_hex = line.substr(2);
        else if (line.starts_with("Q="))
            q_hex = line.substr(2);
        else if (!line.empty())
            throw Error(Errc::invalid_encoding, "unexpected key file line '" + line + "'");
    }
    if (!d_hex || !q_hex)
        throw Error(Errc::invalid_encoding, "key file needs both d= and Q= lines");
    KeyPair kp = keypair_from_private(c, Nat::from_hex(*d_hex, c.n().limb_count(), c.n().limb_width()));
    if (!(point_from_hex(c, *q_hex) == kp.Q))
        throw Error(Errc::invalid_point, "key file Q does not match d*G");
    return kp;
}

inline const CurveParams& curve_or_usage(const std::string& name) {
    try {
        return registry_get(name);
    } catch (const Error& e) {
        if (e.code() == Errc::unknown_curve)
            throw UsageError(e.what());
        throw;
    }
}

inline DigestFn digest_by_name(const std::string& name) {
    if (name == "sha1")
        return sha1_digest_fn;
    if (name == "identity")
        return identity_digest_fn;
    throw UsageError("unknown digest '" + name + "' (expected sha1 or identity)");
}

inline std::string hex(std::span<const std::uint8_t> b) { return bytes_to_hex(b); }

inline int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"ecc160: prime-field elliptic-curve toolkit (Montgomery arithmetic, Jacobian points)"};
    app.require_subcommand(1);

    std::string curve_name;
    auto curve_opt = [&](CLI::App* sub) { sub->add_option("--curve", curve_name, "curve name")->required(); };

    auto* keygen = app.add_subcommand("keygen", "generate a key pair");
    curve_opt(keygen);
    std::optional<std::uint64_t> seed;
    std::string out_path;
    keygen->add_option("--seed", seed, "deterministic seed (default: random_device)");
    keygen->add_option("--out", out_path, "key file to write")->required();

    auto* ecdh = app.add_subcommand("ecdh", "derive an ECDH shared secret");
    curve_opt(ecdh);
    std::string priv_path, peer_hex;
    ecdh->add_option("--priv", priv_path, "own key file")->required();
    ecdh->add_option("--peer", peer_hex, "peer public key, SEC1 hex")->required();

    auto* sign = app.add_subcommand("sign", "ECDSA-sign a message file");
    curve_opt(sign);
    std::string msg_path, nonce_hex, digest_name = "sha1";
    sign->add_option("--priv", priv_path, "signer key file")->required();
    sign->add_option("--msg", msg_path, "message file")->required();
    sign->add_option("--nonce", nonce_hex, "explicit nonce k, hex");
    sign->add_option("--seed", seed, "seed for the nonce generator");
    sign->add_option("--digest", digest_name, "sha1 (default) or identity");

    auto* verify = app.add_subcommand("verify", "verify an ECDSA signature; prints OK or FAIL");
    curve_opt(verify);
    std::string pub_hex, sig_hex;
    verify->add_option("--pub", pub_hex, "public key, SEC1 hex")->required();
    verify->add_option("--msg", msg_path, "message file")->required();
    verify->add_option("--sig", sig_hex, "signature r||s, fixed-width hex")->required();
    verify->add_option("--digest", digest_name, "sha1 (default) or identity");

    auto* mqv = app.add_subcommand("mqv", "derive an ECMQV shared secret");
    curve_opt(mqv);
    std::string static_path, eph_path, peer_static_hex, peer_eph_hex;
    mqv->add_option("--static", static_path, "own static key file")->required();
    mqv->add_option("--eph", eph_path, "own ephemeral key file")->required();
    mqv->add_option("--peer-static", peer_static_hex, "peer static public key, SEC1 hex")->required();
    mqv->add_option("--peer-eph", peer_eph_hex, "peer ephemeral public key, SEC1 hex")->required();

    auto* bench = app.add_subcommand("bench", "benchmark operations; CSV on stdout");
    curve_opt(bench);
    std::string op_name, csv_path;
    std::uint64_t iters = 100;
    std::uint64_t bench_seed = 1;
    bool cross_check = false;
    bench->add_option("--op", op_name, "single operation (default: all)");
    bench->add_option("--iters", iters, "iterations per operation");
    bench->add_option("--csv", csv_path, "also write the CSV to this file");
    bench->add_option("--seed", bench_seed, "input generator seed");
    bench->add_flag("--check", cross_check, "cross-check scalar_mult against the reference ladder");

    auto* validate = app.add_subcommand("validate", "validate a curve's domain parameters");
    curve_opt(validate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        const CurveParams& c = curve_or_usage(curve_name);

        if (keygen->parsed()) {
            KeyPair kp;
            if (seed) {
                std::mt19937_64 rng(*seed);
                kp = ecc160::keygen(c, rng);
            } else {
                std::random_device rd;
                std::mt19937_64 rng((std::uint64_t{rd()} << 32) ^ rd());
                kp = ecc160::keygen(c, rng);
            }
            std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
            if (!f)
                throw Error(Errc::invalid_encoding, "cannot write '" + out_path + "'");
            f << keyfile_text(c, kp);
            out << point_to_hex(c, kp.Q) << "\n";
            return 0;
        }

        if (ecdh->parsed()) {
            KeyPair kp = keyfile_parse(c, read_file(priv_path));
            out << hex(ecdh_shared(c, kp, point_from_hex(c, peer_hex))) << "\n";
            return 0;
        }

        if (sign->parsed()) {
            const DigestFn digest = digest_by_name(digest_name);
            KeyPair kp = keyfile_parse(c, read_file(priv_path));
            const std::string msg = read_file(msg_path);
            Nat e = digest_for_curve(std::span(reinterpret_cast<const std::uint8_t*>(msg.data()), msg.size()), c, digest);
            Signature sig;
            if (!nonce_hex.empty()) {
                sig = ecdsa_sign(c, kp, e, Nat::from_hex(nonce_hex, Nat::kMaxLimbs));
            } else {
                std::random_device rd;
                std::mt19937_64 rng(seed ? *seed : ((std::uint64_t{rd()} << 32) ^ rd()));
                sig = ecdsa_sign_random(c, kp, e, rng);
            }
            out << signature_to_hex(c, sig) << "\n";
            return 0;
        }

        if (verify->parsed()) {
            const DigestFn digest = digest_by_name(digest_name);
            const std::string msg = read_file(msg_path);
            Nat e = digest_for_curve(std::span(reinterpret_cast<const std::uint8_t*>(msg.data()), msg.size()), c, digest);
            bool ok = false;
            try {
                ok = ecdsa_verify(c, point_from_hex(c, pub_hex), e, signature_from_hex(c, sig_hex));
            } catch (const Error& e2) {
                err << "error: " << e2.what() << "\n";
                ok = false;
            }
            out << (ok ? "OK" : "FAIL") << "\n";
            return ok ? 0 : 1;
        }

        if (mqv->parsed()) {
            KeyPair st = keyfile_parse(c, read_file(static_path));
            KeyPair ep = keyfile_parse(c, read_file(eph_path));
            out << hex(ecmqv_shared(c, st, ep, point_from_hex(c, peer_static_hex), point_from_hex(c, peer_eph_hex)))
                << "\n";
            return 0;
        }

        if (bench->parsed()) {
            std::vector<std::string_view> ops;
            if (op_name.empty()) {
                ops.assign(kBenchOps.begin(), kBenchOps.end());
            } else if (std::find(kBenchOps.begin(), kBenchOps.end(), op_name) != kBenchOps.end()) {
                ops.push_back(op_name);
            } else {
                throw UsageError("unknown benchmark op '" + op_name + "'");
            }
            BenchOptions opt;
            opt.seed = bench_seed;
            opt.cross_check = cross_check;
            std::string csv = bench_csv_header() + "\n";
            std::uint64_t mismatches = 0;
            for (auto op : ops) {
                BenchReport rep = bench_run(c, op, iters, opt);
                csv += bench_csv_row(rep) + "\n";
                mismatches += rep.oracle_mismatches;
            }
            out << "# " << c.name() << ": jacobian double = " << kDoubleCost.mont_muls << " mont_mul + "
                << kDoubleCost.field_adds << " add + " << kDoubleCost.field_subs << " sub; jacobian add = "
                << kAddCost.mont_muls << " mont_mul + " << kAddCost.field_adds << " add + " << kAddCost.field_subs
                << " sub\n"
                << csv;
            if (!csv_path.empty()) {
                std::ofstream f(csv_path, std::ios::trunc);
                if (!f)
                    throw Error(Errc::invalid_encoding, "cannot write '" + csv_path + "'");
                f << csv;
            }
            if (mismatches != 0) {
                err << "error: " << mismatches << " scalar_mult results disagree with the reference\n";
                return 1;
            }
            return 0;
        }

        if (validate->parsed()) {
            ValidationReport rep = validate_params(c);
            out << params_to_text(c.spec);
            for (const auto& chk : rep.checks)
                out << (chk.passed ? "PASS " : "FAIL ") << chk.name << ": " << chk.detail << "\n";
            return rep.ok() ? 0 : 1;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << app.help();
    return 2;
}

inline int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("ecc160");
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ecc160::cli
