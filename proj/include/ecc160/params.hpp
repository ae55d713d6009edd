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
 * Domain parameters (p, a, b, G, n, h), the built-in registry, parameter
 * validation and key generation.
 */

#pragma once

#include "ecc160/curve.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace ecc160 {

/// Plain-integer domain parameters, as transcribed or parsed from text.
struct CurveSpec {
    std::string name;
    Nat p, a, b, gx, gy, n;
    std::uint32_t h = 1;
    bool standard = false;  // a published named curve rather than a test curve
};

/// Field sizes (bits of p) offered for prime-field curves.
inline constexpr std::array<unsigned, 9> kStandardPrimeFieldBits{112, 128, 160, 192, 224, 256, 384, 512, 1024};

inline bool field_size_is_standard(unsigned bits) {
    return std::find(kStandardPrimeFieldBits.begin(), kStandardPrimeFieldBits.end(), bits) !=
           kStandardPrimeFieldBits.end();
}

/// Ready-to-use parameters: Montgomery contexts for the field and for
/// scalars mod n, plus the base point in Montgomery form.
struct CurveParams {
    CurveSpec spec;
    Curve curve;
    AffinePoint G;
    MontCtxPtr scalar;  // null when n is even (such parameters fail validation anyway)

    const std::string& name() const noexcept { return spec.name; }
    const Nat& n() const noexcept { return spec.n; }
    std::uint32_t h() const noexcept { return spec.h; }
    unsigned bits() const noexcept { return static_cast<unsigned>(spec.p.bit_length()); }

    Nat scalar_zero() const { return Nat(spec.n.limb_count(), spec.n.limb_width()); }
    Nat scalar_from_u64(std::uint64_t v) const { return Nat::from_u64(v, spec.n.limb_count(), spec.n.limb_width()); }
    std::size_t scalar_bytes() const noexcept { return (spec.n.bit_length() + 7) / 8; }
};

namespace detail {

inline std::size_t limbs_for(std::size_t bits, unsigned w) { return std::max<std::size_t>(1, (bits + w - 1) / w); }

}  // namespace detail

/// Builds a spec from hex strings, sizing each limb vector to its value.
inline CurveSpec make_curve_spec(std::string name, std::string_view p, std::string_view a, std::string_view b,
                                 std::string_view gx, std::string_view gy, std::string_view n, std::uint32_t h,
                                 bool standard = false, unsigned w = Nat::kDefaultWidth) {
    // Parse wide first, then shrink to the field / scalar shapes.
    const std::size_t wide = Nat::kMaxLimbs;
    Nat pw = Nat::from_hex(p, wide, w);
    Nat nw = Nat::from_hex(n, wide, w);
    const std::size_t tf = detail::limbs_for(pw.bit_length(), w);
    const std::size_t ts = detail::limbs_for(nw.bit_length(), w);
    auto field = [&](std::string_view s) { return Nat::from_hex(s, tf, w); };
    return {std::move(name), pw.reshaped(tf, w), field(a), field(b), field(gx), field(gy),
            nw.reshaped(ts, w), h, standard};
}

/// Throws when the spec cannot even be represented (even p, coordinates >= p).
inline CurveParams build_curve(const CurveSpec& s) {
    auto field = mont_ctx_new(s.p);
    Curve curve(field, s.a, s.b);
    AffinePoint G = AffinePoint::from_plain(curve, s.gx, s.gy);
    MontCtxPtr scalar = (!s.n.is_zero() && s.n.is_odd()) ? mont_ctx_new(s.n) : nullptr;
    return {s, std::move(curve), std::move(G), std::move(scalar)};
}

// ------------------------------------------------------------------------
// Random values

/// Uniform generators producing full 64-bit words.
template <class G>
concept WordSource = std::uniform_random_bit_generator<G> && (G::min() == 0) &&
                     (G::max() == std::numeric_limits<std::uint64_t>::max());

/// A `bits`-bit value in the given shape, least-significant word drawn first.
template <WordSource G>
Nat random_bits(std::size_t bits, std::size_t limbs, unsigned width, G& rng) {
    Nat r(limbs, width);
    for (std::size_t i = 0; i < bits; i += 64) {
        const std::uint64_t word = rng();
        for (std::size_t k = 0; k < 64 && i + k < bits; ++k)
            if ((word >> k) & 1u) {
                const std::size_t pos = i + k;
                r.set_limb(pos / width, r.limb(pos / width) | (Nat::Limb{1} << (pos % width)));
            }
    }
    return r;
}

// ------------------------------------------------------------------------
// Primality

namespace detail {

inline std::uint64_t mod_small(const Nat& v, std::uint64_t q) {
    std::uint64_t r = 0;
    for (std::size_t i = v.limb_count(); i-- > 0;)
        r = ((r << v.limb_width()) + v.limb(i)) % q;
    return r;
}

inline bool is_prime_u64(std::uint64_t v) {
    if (v < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0)
            return false;
    return true;
}

}  // namespace detail

/// Exact trial division for values below 2^32; otherwise small-prime
/// sieving followed by Miller-Rabin with bases from a fixed-seed generator.
inline bool is_probable_prime(const Nat& v, unsigned rounds = 64, std::uint64_t seed = 0x3c6ef372fe94f82bULL) {
    if (v.bit_length() <= 32)
        return detail::is_prime_u64(v.to_u64());
    if (!v.is_odd())
        return false;
    for (std::uint64_t q = 3; q < 2000; q += 2)
        if (detail::is_prime_u64(q) && detail::mod_small(v, q) == 0)
            return false;

    const std::size_t t = v.limb_count();
    const unsigned w = v.limb_width();
    Nat one = Nat::from_u64(1, t, w);
    Nat v_minus_1 = sub(v, one).value;
    Nat d = v_minus_1;
    std::size_t s = 0;
    while (!d.is_odd()) {
        d = shr1(d).value;
        ++s;
    }

    auto ctx = mont_ctx_new(v);
    const FieldElem mont_one = FieldElem::one(ctx);
    const FieldElem mont_minus_one = to_mont(ctx, v_minus_1);
    std::mt19937_64 rng(seed);
    const std::size_t bits = v.bit_length();

    for (unsigned round = 0; round < rounds; ++round) {
        Nat a(t, w);
        do {
            a = reduce(*ctx, random_bits(bits, t, w, rng));
        } while (a.bit_length() < 2 || a == v_minus_1);  // a in [2, v-2]

        FieldElem x = mont_pow(to_mont(ctx, a), d);
        if (x == mont_one || x == mont_minus_one)
            continue;
        bool witness = true;
        for (std::size_t r = 1; r < s; ++r) {
            x = mont_mul(x, x);
            if (x == mont_minus_one) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

// ------------------------------------------------------------------------
// Validation

struct ValidationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::string curve;
    std::vector<ValidationCheck> checks;

    bool ok() const {
        return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
    }
    const ValidationCheck* find(std::string_view name) const {
        for (const auto& c : checks)
            if (c.name == name)
                return &c;
        return nullptr;
    }
};

inline constexpr std::string_view kCheckPrimeP = "p_prime";
inline constexpr std::string_view kCheckNonsingular = "nonsingular";
inline constexpr std::string_view kCheckGOnCurve = "g_on_curve";
inline constexpr std::string_view kCheckOrder = "n_times_g_is_infinity";
inline constexpr std::string_view kCheckPrimeN = "n_prime";

/// Runs all five checks; a check that cannot run because an earlier one
/// made the field unusable is reported as failed.
inline ValidationReport validate_params(const CurveSpec& s) {
    ValidationReport rep{s.name, {}};
    auto record = [&](std::string_view name, bool ok, std::string detail) {
        rep.checks.push_back({std::string(name), ok, std::move(detail)});
    };

    const bool p_ok = s.p.is_odd() && is_probable_prime(s.p);
    record(kCheckPrimeP, p_ok, p_ok ? "p is odd and passes Miller-Rabin" : "p is not an odd prime");

    std::optional<CurveParams> built;
    std::string build_error;
    if (s.p.is_odd() && !s.p.is_zero()) {
        try {
            built = build_curve(s);
        } catch (const Error& e) {
            build_error = e.what();
        }
    } else {
        build_error = "field unusable: p is even or zero";
    }

    if (built) {
        const Curve& c = built->curve;
        // 4a^3 + 27b^2 mod p
        FieldElem a3 = mont_mul(mont_mul(c.a(), c.a()), c.a());
        FieldElem b2 = mont_mul(c.b(), c.b());
        auto small = [&](std::uint64_t v) { return to_mont_reduced(c.field(), Nat::from_u64(v, 1, 16)); };
        FieldElem disc = mod_add(mont_mul(small(4), a3), mont_mul(small(27), b2));
        record(kCheckNonsingular, !disc.is_zero(), disc.is_zero() ? "4a^3 + 27b^2 = 0 mod p" : "4a^3 + 27b^2 != 0 mod p");

        const bool on = is_on_curve(c, built->G);
        record(kCheckGOnCurve, on, on ? "G satisfies the curve equation" : "G is not on the curve");

        const bool annihilated = scalar_mult(c, s.n, built->G).infinity;
        record(kCheckOrder, annihilated, annihilated ? "n*G = infinity" : "n*G != infinity");
    } else {
        record(kCheckNonsingular, false, build_error);
        record(kCheckGOnCurve, false, build_error);
        record(kCheckOrder, false, build_error);
    }

    const bool n_ok = is_probable_prime(s.n);
    record(kCheckPrimeN, n_ok, n_ok ? "n passes Miller-Rabin" : "n is not prime");
    return rep;
}

inline ValidationReport validate_params(const CurveParams& c) { return validate_params(c.spec); }

// ------------------------------------------------------------------------
// Text interchange: one key=value per line, values big-endian hex.

inline std::string params_to_text(const CurveSpec& s) {
    std::ostringstream os;
    os << "name=" << s.name << '\n'
       << "p=" << s.p.to_hex() << '\n'
       << "a=" << s.a.to_hex() << '\n'
       << "b=" << s.b.to_hex() << '\n'
       << "gx=" << s.gx.to_hex() << '\n'
       << "gy=" << s.gy.to_hex() << '\n'
       << "n=" << s.n.to_hex() << '\n'
       << "h=" << Nat::from_u64(s.h, 2, 16).to_hex() << '\n';
    return os.str();
}

inline CurveSpec params_from_text(std::string_view text) {
    std::map<std::string, std::string, std::less<>> kv;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(Errc::invalid_encoding, "expected key=value, got '" + line + "'");
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    auto need = [&](const char* key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end())
            throw Error(Errc::invalid_encoding, std::string("missing key '") + key + "'");
        return it->second;
    };
    const std::uint64_t h = Nat::from_hex(need("h"), 4, 16).to_u64();
    if (h == 0 || h > std::numeric_limits<std::uint32_t>::max())
        throw Error(Errc::out_of_range, "cofactor out of range");
    std::string name = kv.count("name") ? kv["name"] : "custom";
    return make_curve_spec(name, need("p"), need("a"), need("b"), need("gx"), need("gy"), need("n"),
                           static_cast<std::uint32_t>(h));
}

// ------------------------------------------------------------------------
// Registry

inline std::vector<CurveSpec> builtin_curve_specs() {
    return {
        make_curve_spec("secp160r1",
                        "ffffffffffffffffffffffffffffffff7fffffff",
                        "ffffffffffffffffffffffffffffffff7ffffffc",
                        "1c97befc54bd7a8b65acf89f81d4d4adc565fa45",
                        "4a96b5688ef573284664698968c38bb913cbfc82",
                        "23a628553168947d59dcc912042351377ac5fb32",
                        "0100000000000000000001f4c8f927aed3ca752257", 1, true),
        // y^2 = x^3 + 2x + 2 over GF(17), 19 points
        make_curve_spec("toy-e17", "11", "02", "02", "05", "01", "13", 1),
        // y^2 = x^3 + x + 4 over GF(23), 29 points
        make_curve_spec("toy-e23", "17", "01", "04", "00", "02", "1d", 1),
    };
}

namespace detail {

inline const std::map<std::string, CurveParams, std::less<>>& registry() {
    static const auto reg = [] {
        std::map<std::string, CurveParams, std::less<>> m;
        for (const auto& s : builtin_curve_specs()) {
            auto rep = validate_params(s);
            if (!rep.ok())
                throw std::logic_error("built-in curve " + s.name + " failed validation");
            m.emplace(s.name, build_curve(s));
        }
        return m;
    }();
    return reg;
}

}  // namespace detail

/// Built-in parameters, validated once on first use.
inline const CurveParams& registry_get(std::string_view name) {
    const auto& reg = detail::registry();
    auto it = reg.find(name);
    if (it == reg.end())
        throw Error(Errc::unknown_curve, "no curve named '" + std::string(name) + "'");
    return it->second;
}

inline std::vector<std::string> registry_names() {
    std::vector<std::string> names;
    for (const auto& [k, v] : detail::registry())
        names.push_back(k);
    return names;
}

// ------------------------------------------------------------------------
// Keys

struct KeyPair {
    Nat d;
    AffinePoint Q;
    std::string curve;
};

inline KeyPair keypair_from_private(const CurveParams& c, const Nat& d) {
    Nat ds = d.reshaped(c.n().limb_count(), c.n().limb_width());
    if (ds.is_zero() || compare(ds, c.n()) != std::strong_ordering::less)
        throw Error(Errc::out_of_range, "private key must be in [1, n-1]");
    AffinePoint Q = scalar_mult(c.curve, ds, c.G);
    if (Q.infinity)
        throw Error(Errc::degenerate_result, "public key is the point at infinity");
    return {ds, Q, c.name()};
}

/// d drawn by rejection sampling on bitlen(n)-bit values until 1 <= d <= n-1.
template <WordSource G>
KeyPair keygen(const CurveParams& c, G& rng, unsigned max_attempts = 4096) {
    const std::size_t bits = c.n().bit_length();
    for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
        Nat d = random_bits(bits, c.n().limb_count(), c.n().limb_width(), rng);
        if (d.is_zero() || compare(d, c.n()) != std::strong_ordering::less)
            continue;
        return keypair_from_private(c, d);
    }
    throw Error(Errc::rng_failure, "no in-range key after " + std::to_string(max_attempts) + " draws");
}

}  // namespace ecc160
