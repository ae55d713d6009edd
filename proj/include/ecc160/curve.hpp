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
 * Short Weierstrass curves y^2 = x^3 + ax + b over GF(p).
 *
 * All coordinates live in the Montgomery domain. Group operations use
 * Jacobian coordinates (x = X/Z^2, y = Y/Z^3, Z = 0 is the identity) with
 * the general-a doubling and the 12M+4S addition from Hankerson, Menezes
 * and Vanstone. Scalar multiplication is MSB-first double-and-add that
 * doubles on every bit, including the leading one.
 */

#pragma once

#include "ecc160/montgomery.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace ecc160 {

/// Per-session operation tally; callers own it, nothing global is counted.
struct OpCounters {
    std::uint64_t mont_muls = 0;
    std::uint64_t field_adds = 0;
    std::uint64_t field_subs = 0;
    std::uint64_t point_doubles = 0;
    std::uint64_t point_adds = 0;
    std::uint64_t inversions = 0;

    friend bool operator==(const OpCounters&, const OpCounters&) = default;

    friend OpCounters operator-(const OpCounters& a, const OpCounters& b) {
        return {a.mont_muls - b.mont_muls,         a.field_adds - b.field_adds,
                a.field_subs - b.field_subs,       a.point_doubles - b.point_doubles,
                a.point_adds - b.point_adds,       a.inversions - b.inversions};
    }
};

/// Field cost of one Jacobian doubling / addition as implemented below.
/// These never depend on the input (degenerate Θ / 2-torsion cases aside).
struct FormulaCost {
    std::uint64_t mont_muls;
    std::uint64_t field_adds;
    std::uint64_t field_subs;
};
inline constexpr FormulaCost kDoubleCost{10, 9, 4};
inline constexpr FormulaCost kAddCost{16, 1, 6};

class Curve {
public:
    Curve(MontCtxPtr field, const Nat& a, const Nat& b)
        : field_(std::move(field)),
          a_plain_(a),
          b_plain_(b),
          a_(to_mont(field_, a)),
          b_(to_mont(field_, b)) {}

    const MontCtxPtr& field() const noexcept { return field_; }
    const Nat& p() const noexcept { return field_->modulus(); }
    const Nat& a_plain() const noexcept { return a_plain_; }
    const Nat& b_plain() const noexcept { return b_plain_; }
    const FieldElem& a() const noexcept { return a_; }
    const FieldElem& b() const noexcept { return b_; }

    /// Byte length of an encoded coordinate.
    std::size_t field_bytes() const noexcept { return (p().bit_length() + 7) / 8; }

    FieldElem elem(const Nat& plain) const { return to_mont(field_, plain.reshaped(p().limb_count(), p().limb_width())); }
    FieldElem elem(std::uint64_t plain) const { return elem(Nat::from_u64(plain, p().limb_count(), p().limb_width())); }

private:
    MontCtxPtr field_;
    Nat a_plain_;
    Nat b_plain_;
    FieldElem a_;
    FieldElem b_;
};

struct AffinePoint {
    FieldElem x;
    FieldElem y;
    bool infinity = true;

    static AffinePoint at_infinity(const Curve& c) {
        return {FieldElem::zero(c.field()), FieldElem::zero(c.field()), true};
    }
    /// From plain (non-Montgomery) coordinates.
    static AffinePoint from_plain(const Curve& c, const Nat& x, const Nat& y) { return {c.elem(x), c.elem(y), false}; }
    static AffinePoint from_plain(const Curve& c, std::uint64_t x, std::uint64_t y) {
        return {c.elem(x), c.elem(y), false};
    }

    Nat x_plain() const { return from_mont(x); }
    Nat y_plain() const { return from_mont(y); }

    friend bool operator==(const AffinePoint& p, const AffinePoint& q) {
        if (p.infinity || q.infinity)
            return p.infinity == q.infinity;
        return p.x == q.x && p.y == q.y;
    }
};

struct JacobianPoint {
    FieldElem X;
    FieldElem Y;
    FieldElem Z;

    bool is_infinity() const noexcept { return Z.is_zero(); }

    static JacobianPoint at_infinity(const Curve& c) {
        return {FieldElem::one(c.field()), FieldElem::one(c.field()), FieldElem::zero(c.field())};
    }
};

namespace detail {

/// Field operations that tally into an OpCounters.
struct CountingField {
    OpCounters& ctr;

    FieldElem mul(const FieldElem& x, const FieldElem& y) const {
        ++ctr.mont_muls;
        return mont_mul(x, y);
    }
    FieldElem sqr(const FieldElem& x) const { return mul(x, x); }
    FieldElem add(const FieldElem& x, const FieldElem& y) const {
        ++ctr.field_adds;
        return mod_add(x, y);
    }
    FieldElem sub(const FieldElem& x, const FieldElem& y) const {
        ++ctr.field_subs;
        return mod_sub(x, y);
    }
};

inline JacobianPoint double_formula(const Curve& c, const JacobianPoint& P, OpCounters& ctr) {
    if (P.is_infinity() || P.Y.is_zero())
        return JacobianPoint::at_infinity(c);
    CountingField f{ctr};
    FieldElem yy = f.sqr(P.Y);
    FieldElem s = f.mul(P.X, yy);
    s = f.add(s, s);
    s = f.add(s, s);  // S = 4*X*Y^2
    FieldElem xx = f.sqr(P.X);
    FieldElem m = f.add(f.add(xx, xx), xx);
    FieldElem zz = f.sqr(P.Z);
    FieldElem zzzz = f.sqr(zz);
    m = f.add(m, f.mul(c.a(), zzzz));  // M = 3*X^2 + a*Z^4
    FieldElem x3 = f.sub(f.sub(f.sqr(m), s), s);
    FieldElem y8 = f.sqr(yy);
    y8 = f.add(y8, y8);
    y8 = f.add(y8, y8);
    y8 = f.add(y8, y8);  // 8*Y^4
    FieldElem y3 = f.sub(f.mul(m, f.sub(s, x3)), y8);
    FieldElem z3 = f.mul(P.Y, P.Z);
    z3 = f.add(z3, z3);
    return {x3, y3, z3};
}

}  // namespace detail

inline JacobianPoint to_jacobian(const Curve& c, const AffinePoint& P) {
    if (P.infinity)
        return JacobianPoint::at_infinity(c);
    return {P.x, P.y, FieldElem::one(c.field())};
}

inline AffinePoint to_affine(const Curve& c, const JacobianPoint& P, OpCounters& ctr) {
    if (P.is_infinity())
        return AffinePoint::at_infinity(c);
    detail::CountingField f{ctr};
    ++ctr.inversions;
    FieldElem zinv = mont_inv(P.Z);
    FieldElem zinv2 = f.sqr(zinv);
    FieldElem zinv3 = f.mul(zinv2, zinv);
    return {f.mul(P.X, zinv2), f.mul(P.Y, zinv3), false};
}

inline AffinePoint to_affine(const Curve& c, const JacobianPoint& P) {
    OpCounters scratch;
    return to_affine(c, P, scratch);
}

inline JacobianPoint point_double(const Curve& c, const JacobianPoint& P, OpCounters& ctr) {
    ++ctr.point_doubles;
    return detail::double_formula(c, P, ctr);
}

/// Handles P = Θ, Q = Θ, P = Q (doubling formulas, still tallied as an add)
/// and P = -Q explicitly.
inline JacobianPoint point_add(const Curve& c, const JacobianPoint& P, const JacobianPoint& Q, OpCounters& ctr) {
    ++ctr.point_adds;
    if (P.is_infinity())
        return Q;
    if (Q.is_infinity())
        return P;
    detail::CountingField f{ctr};
    FieldElem z1z1 = f.sqr(P.Z);
    FieldElem z2z2 = f.sqr(Q.Z);
    FieldElem u1 = f.mul(P.X, z2z2);
    FieldElem u2 = f.mul(Q.X, z1z1);
    FieldElem s1 = f.mul(f.mul(P.Y, Q.Z), z2z2);
    FieldElem s2 = f.mul(f.mul(Q.Y, P.Z), z1z1);
    FieldElem h = f.sub(u2, u1);
    FieldElem r = f.sub(s2, s1);
    if (h.is_zero()) {
        if (r.is_zero())
            return detail::double_formula(c, P, ctr);
        return JacobianPoint::at_infinity(c);
    }
    FieldElem hh = f.sqr(h);
    FieldElem hhh = f.mul(h, hh);
    FieldElem v = f.mul(u1, hh);
    FieldElem x3 = f.sub(f.sub(f.sqr(r), hhh), f.add(v, v));
    FieldElem y3 = f.sub(f.mul(r, f.sub(v, x3)), f.mul(s1, hhh));
    FieldElem z3 = f.mul(f.mul(P.Z, Q.Z), h);
    return {x3, y3, z3};
}

inline JacobianPoint point_double(const Curve& c, const JacobianPoint& P) {
    OpCounters scratch;
    return point_double(c, P, scratch);
}
inline JacobianPoint point_add(const Curve& c, const JacobianPoint& P, const JacobianPoint& Q) {
    OpCounters scratch;
    return point_add(c, P, Q, scratch);
}

/// k*P: scan k from its top set bit down to bit 0, doubling every step and
/// adding P where the bit is 1. k = 0 gives Θ. Any shape of k is accepted.
inline JacobianPoint scalar_mult_jacobian(const Curve& c, const Nat& k, const AffinePoint& P, OpCounters& ctr) {
    const JacobianPoint base = to_jacobian(c, P);
    JacobianPoint acc = JacobianPoint::at_infinity(c);
    for (std::size_t i = k.bit_length(); i-- > 0;) {
        acc = point_double(c, acc, ctr);
        if (k.bit(i))
            acc = point_add(c, acc, base, ctr);
    }
    return acc;
}

inline AffinePoint scalar_mult(const Curve& c, const Nat& k, const AffinePoint& P, OpCounters& ctr) {
    return to_affine(c, scalar_mult_jacobian(c, k, P, ctr), ctr);
}

inline AffinePoint scalar_mult(const Curve& c, const Nat& k, const AffinePoint& P) {
    OpCounters scratch;
    return scalar_mult(c, k, P, scratch);
}

/// Affine sum via the Jacobian formulas.
inline AffinePoint affine_add(const Curve& c, const AffinePoint& P, const AffinePoint& Q) {
    return to_affine(c, point_add(c, to_jacobian(c, P), to_jacobian(c, Q)));
}

inline AffinePoint negate(const AffinePoint& P) {
    if (P.infinity)
        return P;
    return {P.x, mod_neg(P.y), false};
}

inline bool is_on_curve(const Curve& c, const AffinePoint& P) {
    if (P.infinity)
        return true;
    if (!P.x.same_field(c.a()) || !P.y.same_field(c.a()))
        return false;
    FieldElem lhs = mont_mul(P.y, P.y);
    FieldElem rhs = mod_add(mod_add(mont_mul(mont_mul(P.x, P.x), P.x), mont_mul(c.a(), P.x)), c.b());
    return lhs == rhs;
}

/// Uncompressed SEC1 encoding: 04 || x || y, Θ as the single byte 00.
inline std::vector<std::uint8_t> encode_point(const Curve& c, const AffinePoint& P) {
    if (P.infinity)
        return {0x00};
    std::vector<std::uint8_t> out{0x04};
    auto x = P.x_plain().to_bytes(c.field_bytes());
    auto y = P.y_plain().to_bytes(c.field_bytes());
    out.insert(out.end(), x.begin(), x.end());
    out.insert(out.end(), y.begin(), y.end());
    return out;
}

/// Parses the encoding above. Coordinates must be < p; curve membership is
/// left to the caller.
inline AffinePoint decode_point(const Curve& c, std::span<const std::uint8_t> bytes) {
    if (bytes.size() == 1 && bytes[0] == 0x00)
        return AffinePoint::at_infinity(c);
    const std::size_t len = c.field_bytes();
    if (bytes.size() != 1 + 2 * len || bytes[0] != 0x04)
        throw Error(Errc::invalid_encoding, "expected 04 || x || y with " + std::to_string(len) + "-byte coordinates");
    const std::size_t t = c.p().limb_count();
    const unsigned w = c.p().limb_width();
    Nat x = Nat::from_bytes(bytes.subspan(1, len), t, w);
    Nat y = Nat::from_bytes(bytes.subspan(1 + len, len), t, w);
    if (compare(x, c.p()) != std::strong_ordering::less || compare(y, c.p()) != std::strong_ordering::less)
        throw Error(Errc::invalid_encoding, "coordinate not reduced mod p");
    return AffinePoint::from_plain(c, x, y);
}

}  // namespace ecc160
