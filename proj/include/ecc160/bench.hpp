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

#pragma once

#include "ecc160/cost_model.hpp"
#include "ecc160/params.hpp"
#include "ecc160/reference.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ecc160 {

inline constexpr std::array<std::string_view, 9> kBenchOps{
    "field_add", "field_sub", "mont_mul", "point_add", "point_double", "scalar_mult",
    "to_mont",   "from_mont", "inversion",
};

struct BenchReport {
    std::string curve;
    std::string op;
    std::uint64_t iters = 0;
    double ns_per_op = 0;
    OpCounters counters;  // totals over the timed iterations
    // Operations without a table row (conversions, inversion) leave these empty.
    std::optional<std::uint64_t> predicted_paper_cycles;
    std::optional<std::uint64_t> paper_cycles;
    std::optional<double> rel_error;
    // Field cost of the Jacobian formulas, fixed for every input.
    FormulaCost double_cost = kDoubleCost;
    FormulaCost add_cost = kAddCost;
    // Scalar-mult cross-check against the reference ladder, when requested.
    std::uint64_t oracle_mismatches = 0;

    double mont_muls_per_op() const {
        return iters == 0 ? 0.0 : static_cast<double>(counters.mont_muls) / static_cast<double>(iters);
    }
};

inline std::string bench_csv_header() {
    return "op,iters,ns_per_op,mont_muls_per_op,predicted_paper_cycles,paper_cycles,rel_error";
}

inline std::string bench_csv_row(const BenchReport& r) {
    char buf[256];
    std::string row = r.op + "," + std::to_string(r.iters) + ",";
    std::snprintf(buf, sizeof buf, "%.1f,%.2f,", r.ns_per_op, r.mont_muls_per_op());
    row += buf;
    row += r.predicted_paper_cycles ? std::to_string(*r.predicted_paper_cycles) : "";
    row += ",";
    row += r.paper_cycles ? std::to_string(*r.paper_cycles) : "";
    row += ",";
    if (r.rel_error) {
        std::snprintf(buf, sizeof buf, "%.6f", *r.rel_error);
        row += buf;
    }
    return row;
}

struct BenchOptions {
    std::uint64_t seed = 1;
    std::uint64_t warmup = 3;
    bool cross_check = false;
    CostTable costs{};
};

namespace detail {

template <class F>
double time_loop(std::uint64_t iters, F&& body) {
    auto start = std::chrono::steady_clock::now();
    for (std::uint64_t i = 0; i < iters; ++i)
        body(i);
    auto stop = std::chrono::steady_clock::now();
    return iters == 0 ? 0.0 : std::chrono::duration<double, std::nano>(stop - start).count() / static_cast<double>(iters);
}

inline FieldElem random_field_elem(const CurveParams& c, std::mt19937_64& rng) {
    const Nat& p = c.curve.p();
    return {c.curve.field(), reduce(*c.curve.field(), random_bits(p.bit_length(), p.limb_count(), p.limb_width(), rng))};
}

inline Nat random_scalar(const CurveParams& c, std::mt19937_64& rng) {
    for (;;) {
        Nat k = random_bits(c.n().bit_length(), c.n().limb_count(), c.n().limb_width(), rng);
        if (!k.is_zero() && compare(k, c.n()) == std::strong_ordering::less)
            return k;
    }
}

}  // namespace detail

/// Times `op` over `iters` iterations on seeded inputs and prices the
/// recorded counters with the cost table.
inline BenchReport bench_run(const CurveParams& c, std::string_view op, std::uint64_t iters,
                             const BenchOptions& opt = {}) {
    if (std::find(kBenchOps.begin(), kBenchOps.end(), op) == kBenchOps.end())
        throw Error(Errc::unknown_op, "unknown benchmark op '" + std::string(op) + "'");

    BenchReport rep;
    rep.curve = c.name();
    rep.op = std::string(op);
    rep.iters = iters;
    rep.paper_cycles = opt.costs.cycles_for(op);

    std::mt19937_64 rng(opt.seed);
    const std::uint64_t n_inputs = std::max<std::uint64_t>(iters + opt.warmup, 1);
    const Curve& curve = c.curve;

    auto run = [&](auto&& body) {
        OpCounters warm;
        for (std::uint64_t i = 0; i < opt.warmup; ++i)
            body(warm, i % n_inputs);
        rep.ns_per_op = detail::time_loop(iters, [&](std::uint64_t i) { body(rep.counters, i); });
    };

    if (op == "field_add" || op == "field_sub" || op == "mont_mul" || op == "to_mont" || op == "from_mont" ||
        op == "inversion") {
        std::vector<FieldElem> xs, ys;
        for (std::uint64_t i = 0; i < n_inputs; ++i) {
            xs.push_back(detail::random_field_elem(c, rng));
            FieldElem y = detail::random_field_elem(c, rng);
            ys.push_back(y.is_zero() ? FieldElem::one(curve.field()) : y);
        }
        volatile bool sink = false;
        if (op == "field_add")
            run([&](OpCounters& ctr, std::uint64_t i) { sink = detail::CountingField{ctr}.add(xs[i], ys[i]).is_zero(); });
        else if (op == "field_sub")
            run([&](OpCounters& ctr, std::uint64_t i) { sink = detail::CountingField{ctr}.sub(xs[i], ys[i]).is_zero(); });
        else if (op == "mont_mul")
            run([&](OpCounters& ctr, std::uint64_t i) { sink = detail::CountingField{ctr}.mul(xs[i], ys[i]).is_zero(); });
        else if (op == "to_mont")
            run([&](OpCounters&, std::uint64_t i) { sink = to_mont(curve.field(), xs[i].value()).is_zero(); });
        else if (op == "from_mont")
            run([&](OpCounters&, std::uint64_t i) { sink = from_mont(xs[i]).is_zero(); });
        else
            run([&](OpCounters& ctr, std::uint64_t i) {
                ++ctr.inversions;
                sink = mont_inv(ys[i]).is_zero();
            });
        (void)sink;
        if (rep.paper_cycles) {
            rep.predicted_paper_cycles = *rep.paper_cycles;
            rep.rel_error = 0.0;
        }
        return rep;
    }

    if (op == "point_add" || op == "point_double") {
        std::vector<JacobianPoint> ps, qs;
        for (std::uint64_t i = 0; i < n_inputs; ++i) {
            ps.push_back(to_jacobian(curve, scalar_mult(curve, detail::random_scalar(c, rng), c.G)));
            qs.push_back(to_jacobian(curve, scalar_mult(curve, detail::random_scalar(c, rng), c.G)));
        }
        volatile bool sink = false;
        if (op == "point_add")
            run([&](OpCounters& ctr, std::uint64_t i) { sink = point_add(curve, ps[i], qs[i], ctr).is_infinity(); });
        else
            run([&](OpCounters& ctr, std::uint64_t i) { sink = point_double(curve, ps[i], ctr).is_infinity(); });
        (void)sink;
        if (iters > 0) {
            rep.predicted_paper_cycles = predict_field_cycles(opt.costs, rep.counters) / iters;
            rep.rel_error = relative_error(static_cast<double>(*rep.predicted_paper_cycles),
                                           static_cast<double>(*rep.paper_cycles));
        }
        return rep;
    }

    // scalar_mult
    std::vector<Nat> ks;
    for (std::uint64_t i = 0; i < n_inputs; ++i)
        ks.push_back(detail::random_scalar(c, rng));
    std::vector<AffinePoint> results(n_inputs);
    run([&](OpCounters& ctr, std::uint64_t i) { results[i] = scalar_mult(curve, ks[i], c.G, ctr); });
    if (iters > 0) {
        std::uint64_t bits = 0, weight = 0;
        for (std::uint64_t i = 0; i < iters; ++i) {
            bits += ks[i].bit_length();
            weight += ks[i].hamming_weight();
        }
        rep.predicted_paper_cycles = predict_scalar_cycles(opt.costs, bits, weight) / iters;
        rep.rel_error = relative_error(static_cast<double>(*rep.predicted_paper_cycles),
                                       static_cast<double>(*rep.paper_cycles));
    }
    if (opt.cross_check)
        for (std::uint64_t i = 0; i < iters; ++i)
            if (!(results[i] == reference_scalar_mult(curve, ks[i], c.G)))
                ++rep.oracle_mismatches;
    return rep;
}

}  // namespace ecc160
