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
 * Cycle-cost model of 160-bit ECC on a 160 MHz 16-bit fixed-point DSP
 * (TMS320VC5416). Costs are measured CPU cycles per operation; only the
 * double/add composition of scalar multiplication is modelled, the
 * Montgomery conversions and the final inversion are not.
 */

#pragma once

#include "ecc160/curve.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <string_view>

namespace ecc160 {

struct CostTable {
    std::uint64_t field_add = 315;
    std::uint64_t field_sub = 357;
    std::uint64_t mont_mul = 2860;
    std::uint64_t point_add = 33049;
    std::uint64_t point_double = 40737;
    std::uint64_t scalar_mult = 10148863;
    double clock_hz = 160e6;

    double seconds(std::uint64_t cycles) const { return static_cast<double>(cycles) / clock_hz; }

    /// Measured cycles for a named operation, if the table has a row for it.
    std::optional<std::uint64_t> cycles_for(std::string_view op) const {
        if (op == "field_add") return field_add;
        if (op == "field_sub") return field_sub;
        if (op == "mont_mul") return mont_mul;
        if (op == "point_add") return point_add;
        if (op == "point_double") return point_double;
        if (op == "scalar_mult") return scalar_mult;
        return std::nullopt;
    }
};

/// k_bits doublings plus k_weight additions, priced from the table.
inline std::uint64_t predict_scalar_cycles(const CostTable& model, std::uint64_t k_bits, std::uint64_t k_weight) {
    if (k_weight > k_bits)
        throw Error(Errc::out_of_range, "hamming weight exceeds bit length");
    return k_bits * model.point_double + k_weight * model.point_add;
}

/// Field-level pricing of whatever a counting session recorded.
inline std::uint64_t predict_field_cycles(const CostTable& model, const OpCounters& c) {
    return c.mont_muls * model.mont_mul + c.field_adds * model.field_add + c.field_subs * model.field_sub;
}

inline double relative_error(double predicted, double reference) { return std::abs(predicted - reference) / reference; }

}  // namespace ecc160
