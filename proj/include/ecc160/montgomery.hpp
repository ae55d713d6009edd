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
 * Montgomery-domain arithmetic modulo an odd p < R = 2^(w*t).
 *
 * Conversion into the domain is the shift-and-subtract doubling loop,
 * multiplication is the limb-serial product with per-limb reduction by
 * pbar = -p^-1 mod 2^w, and conversion out is the halving loop. The r2
 * and multiply-by-one routes exist only as cross-checks.
 */

#pragma once

#include "ecc160/bigmath.hpp"

#include <memory>
#include <stdexcept>

namespace ecc160 {

class MontCtx;
using MontCtxPtr = std::shared_ptr<const MontCtx>;

class MontCtx {
public:
    /// Shape (t, w) is taken from p. Throws on zero, even, or p >= R.
    static MontCtxPtr create(const Nat& p) { return std::shared_ptr<const MontCtx>(new MontCtx(p)); }

    const Nat& modulus() const noexcept { return p_; }
    std::size_t limb_count() const noexcept { return p_.limb_count(); }
    unsigned limb_width() const noexcept { return p_.limb_width(); }
    /// Number of doublings/halvings in the conversion loops, w*t.
    std::size_t n_bits() const noexcept { return p_.capacity_bits(); }
    Nat::Limb pbar() const noexcept { return pbar_; }
    const Nat& r2() const noexcept { return r2_; }
    /// R mod p, i.e. 1 in Montgomery form.
    const Nat& r_mod_p() const noexcept { return one_; }

    Nat zero_nat() const { return Nat(p_.limb_count(), p_.limb_width()); }

    /// x -> x*2^count mod p by repeated doubling with conditional subtraction.
    Nat double_mod(Nat x, std::size_t count) const {
        for (std::size_t i = 0; i < count; ++i) {
            auto [d, carry] = shl1(x);
            if (carry || compare(d, p_) != std::strong_ordering::less)
                d = sub(d, p_).value;
            x = d;
        }
        return x;
    }

private:
    explicit MontCtx(const Nat& p) : p_(p) {
        if (p.is_zero())
            throw Error(Errc::zero_modulus, "modulus is zero");
        if (!p.is_odd())
            throw Error(Errc::even_modulus, "modulus must be odd (gcd(R, p) = 1)");
        // p < 2^(wt) holds for any Nat of this shape, so p < R is automatic.

        const Nat::Limb mask = p.limb_mask();
        const std::uint64_t p0 = p.limb(0);
        std::uint64_t inv = 1;  // Newton: inv <- inv*(2 - p0*inv), doubles correct bits each step
        for (int i = 0; i < 6; ++i)
            inv = (inv * (2 - p0 * inv)) & mask;
        pbar_ = static_cast<Nat::Limb>((std::uint64_t{mask} + 1 - inv) & mask);

        Nat one = zero_nat();
        one.set_limb(0, 1);
        if (compare(one, p_) != std::strong_ordering::less)  // p == 1
            one = zero_nat();
        one_ = double_mod(one, n_bits());
        r2_ = double_mod(one_, n_bits());
    }

    Nat p_;
    Nat::Limb pbar_{};
    Nat r2_;
    Nat one_;
};

/// A residue in Montgomery form, value = x*R mod p, bound to its context.
class FieldElem {
public:
    FieldElem() = default;

    FieldElem(MontCtxPtr ctx, Nat mont_value) : ctx_(std::move(ctx)), value_(std::move(mont_value)) {
        if (!ctx_)
            throw Error(Errc::context_mismatch, "null Montgomery context");
        if (!value_.same_shape(ctx_->modulus()))
            throw Error(Errc::shape_mismatch, "field element shape differs from modulus");
        if (compare(value_, ctx_->modulus()) != std::strong_ordering::less)
            throw Error(Errc::out_of_range, "field element must be < p");
    }

    static FieldElem zero(const MontCtxPtr& ctx) { return {ctx, ctx->zero_nat()}; }
    static FieldElem one(const MontCtxPtr& ctx) { return {ctx, ctx->r_mod_p()}; }

    const Nat& value() const noexcept { return value_; }
    const MontCtx& ctx() const noexcept { return *ctx_; }
    const MontCtxPtr& ctx_ptr() const noexcept { return ctx_; }
    bool is_zero() const noexcept { return value_.is_zero(); }

    bool same_field(const FieldElem& o) const noexcept {
        return ctx_ == o.ctx_ || (ctx_ && o.ctx_ && ctx_->modulus() == o.ctx_->modulus());
    }

    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        return a.same_field(b) && a.value_ == b.value_;
    }

private:
    MontCtxPtr ctx_;
    Nat value_;
};

namespace detail {

inline void require_same_field(const FieldElem& x, const FieldElem& y) {
    if (!x.same_field(y))
        throw Error(Errc::context_mismatch, "operands belong to different Montgomery contexts");
}

inline void require_reduced(const MontCtx& ctx, const Nat& x) {
    if (!x.same_shape(ctx.modulus()))
        throw Error(Errc::shape_mismatch, "value shape differs from modulus");
    if (compare(x, ctx.modulus()) != std::strong_ordering::less)
        throw Error(Errc::out_of_range, "value must be < p");
}

}  // namespace detail

inline MontCtxPtr mont_ctx_new(const Nat& p) { return MontCtx::create(p); }

/// X = x*R mod p via w*t doublings, each followed by "if X >= p, X -= p".
inline FieldElem to_mont(const MontCtxPtr& ctx, const Nat& x) {
    detail::require_reduced(*ctx, x);
    return {ctx, ctx->double_mod(x, ctx->n_bits())};
}

/// Z = X*Y*R^-1 mod p, one reduction step per limb of X.
inline FieldElem mont_mul(const FieldElem& X, const FieldElem& Y) {
    detail::require_same_field(X, Y);
    const MontCtx& ctx = X.ctx();
    const std::size_t t = ctx.limb_count();
    const unsigned w = ctx.limb_width();
    const std::uint64_t mask = ctx.modulus().limb_mask();
    const std::uint64_t pbar = ctx.pbar();
    auto x = X.value().limbs();
    auto y = Y.value().limbs();
    auto p = ctx.modulus().limbs();

    std::array<std::uint64_t, Nat::kMaxLimbs + 1> z{};
    for (std::size_t j = 0; j < t; ++j) {
        const std::uint64_t xj = x[j];
        const std::uint64_t u = (((z[0] + xj * y[0]) & mask) * pbar) & mask;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < t; ++i) {
            const std::uint64_t s = z[i] + xj * y[i] + u * p[i] + carry;
            if (i == 0) {
                // exact division by b: u was chosen to clear this limb
                if ((s & mask) != 0)
                    throw std::logic_error("mont_mul: low limb not cleared by u*p");
            } else {
                z[i - 1] = s & mask;
            }
            carry = s >> w;
        }
        const std::uint64_t s = z[t] + carry;
        z[t - 1] = s & mask;
        z[t] = s >> w;
    }

    Nat r(t, w);
    for (std::size_t i = 0; i < t; ++i)
        r.set_limb(i, static_cast<Nat::Limb>(z[i]));
    if (z[t] != 0 || compare(r, ctx.modulus()) != std::strong_ordering::less)
        r = sub(r, ctx.modulus()).value;
    return {X.ctx_ptr(), r};
}

/// x = X*R^-1 mod p via w*t halvings ("x/2 if even, else (x+p)/2").
inline Nat from_mont(const FieldElem& X) {
    const MontCtx& ctx = X.ctx();
    Nat x = X.value();
    for (std::size_t i = 0; i < ctx.n_bits(); ++i) {
        if (!x.is_odd()) {
            x = shr1(x).value;
        } else {
            auto [s, carry] = add(x, ctx.modulus());
            x = shr1(s, carry).value;
        }
    }
    return x;
}

/// Cross-check route for to_mont: mont_mul(x, R^2 mod p).
inline FieldElem to_mont_via_r2(const MontCtxPtr& ctx, const Nat& x) {
    detail::require_reduced(*ctx, x);
    return mont_mul(FieldElem(ctx, x), FieldElem(ctx, ctx->r2()));
}

/// Cross-check route for from_mont: mont_mul(X, 1).
inline Nat from_mont_via_mul(const FieldElem& X) {
    Nat one = X.ctx().zero_nat();
    one.set_limb(0, 1);
    if (compare(one, X.ctx().modulus()) != std::strong_ordering::less)
        return X.ctx().zero_nat();
    return mont_mul(X, FieldElem(X.ctx_ptr(), one)).value();
}

inline FieldElem mod_add(const FieldElem& X, const FieldElem& Y) {
    detail::require_same_field(X, Y);
    const Nat& p = X.ctx().modulus();
    auto [s, carry] = add(X.value(), Y.value());
    if (carry || compare(s, p) != std::strong_ordering::less)
        s = sub(s, p).value;
    return {X.ctx_ptr(), s};
}

inline FieldElem mod_sub(const FieldElem& X, const FieldElem& Y) {
    detail::require_same_field(X, Y);
    auto [d, borrow] = sub(X.value(), Y.value());
    if (borrow)
        d = add(d, X.ctx().modulus()).value;
    return {X.ctx_ptr(), d};
}

inline FieldElem mod_neg(const FieldElem& X) { return mod_sub(FieldElem::zero(X.ctx_ptr()), X); }

/// X^e in the Montgomery domain, left-to-right square-and-multiply.
inline FieldElem mont_pow(const FieldElem& X, const Nat& e) {
    FieldElem acc = FieldElem::one(X.ctx_ptr());
    for (std::size_t i = e.bit_length(); i-- > 0;) {
        acc = mont_mul(acc, acc);
        if (e.bit(i))
            acc = mont_mul(acc, X);
    }
    return acc;
}

/// X^(p-2); p must be prime for this to be the inverse.
inline FieldElem mont_inv(const FieldElem& X) {
    if (X.is_zero())
        throw Error(Errc::not_invertible, "zero has no inverse");
    Nat two = X.ctx().zero_nat();
    two.set_limb(0, 2);
    return mont_pow(X, sub(X.ctx().modulus(), two).value);
}

/// v mod p for v of any shape, by MSB-first doubling and conditional subtraction.
inline Nat reduce(const MontCtx& ctx, const Nat& v) {
    const Nat& p = ctx.modulus();
    Nat r = ctx.zero_nat();
    Nat one = ctx.zero_nat();
    one.set_limb(0, 1);
    for (std::size_t i = v.bit_length(); i-- > 0;) {
        auto [d, carry] = shl1(r);
        if (carry || compare(d, p) != std::strong_ordering::less)
            d = sub(d, p).value;
        if (v.bit(i)) {
            auto [s, c2] = add(d, one);
            if (c2 || compare(s, p) != std::strong_ordering::less)
                s = sub(s, p).value;
            d = s;
        }
        r = d;
    }
    return r;
}

/// Plain integer -> Montgomery element, reducing first when v >= p.
inline FieldElem to_mont_reduced(const MontCtxPtr& ctx, const Nat& v) { return to_mont(ctx, reduce(*ctx, v)); }

}  // namespace ecc160
