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

#include "ecc160/curve.hpp"
#include "ecc160/hex.hpp"
#include "ecc160/params.hpp"
#include "ecc160/reference.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace ecc160;

namespace {

// y^2 = x^3 + 2x + 2 over GF(17)
struct E17 {
    MontCtxPtr field = mont_ctx_new(Nat::from_u64(17, 1, 16));
    Curve curve{field, Nat::from_u64(2, 1, 16), Nat::from_u64(2, 1, 16)};
    oracle::SmallCurve small{17, 2, 2};

    AffinePoint pt(std::uint64_t x, std::uint64_t y) const { return AffinePoint::from_plain(curve, x, y); }
    AffinePoint inf() const { return AffinePoint::at_infinity(curve); }
    AffinePoint from_small(const oracle::SmallPt& P) const {
        return P.inf ? inf() : pt(static_cast<std::uint64_t>(P.x), static_cast<std::uint64_t>(P.y));
    }
    std::vector<AffinePoint> all() const {
        std::vector<AffinePoint> out;
        for (const auto& P : small.points())
            out.push_back(from_small(P));
        return out;
    }
    Nat k(std::uint64_t v) const { return Nat::from_u64(v, 1, 16); }
};

using XY = std::pair<std::uint64_t, std::uint64_t>;

XY plain(const AffinePoint& P) {
    return {P.x_plain().to_u64(), P.y_plain().to_u64()};
}

}  // namespace

TEST(CurveE17, PointCount) {
    E17 e;
    EXPECT_EQ(e.all().size(), 19u);  // 18 finite points plus infinity
}

TEST(CurveE17, ToJacobian) {
    E17 e;
    JacobianPoint inf = to_jacobian(e.curve, e.inf());
    EXPECT_TRUE(inf.is_infinity());
    EXPECT_EQ(from_mont(inf.X).to_u64(), 1u);
    EXPECT_EQ(from_mont(inf.Y).to_u64(), 1u);

    JacobianPoint j = to_jacobian(e.curve, e.pt(5, 1));
    EXPECT_EQ(from_mont(j.X).to_u64(), 5u);
    EXPECT_EQ(from_mont(j.Y).to_u64(), 1u);
    EXPECT_EQ(from_mont(j.Z).to_u64(), 1u);

    for (const auto& P : e.all())
        EXPECT_EQ(to_affine(e.curve, to_jacobian(e.curve, P)), P);
}

TEST(CurveE17, ToAffine) {
    E17 e;
    JacobianPoint j{e.curve.elem(7), e.curve.elem(7), e.curve.elem(2)};
    OpCounters ctr;
    AffinePoint a = to_affine(e.curve, j, ctr);
    EXPECT_EQ(plain(a), XY(6, 3));
    EXPECT_EQ(ctr.inversions, 1u);

    JacobianPoint z0{e.curve.elem(3), e.curve.elem(9), e.curve.elem(0)};
    EXPECT_TRUE(to_affine(e.curve, z0).infinity);

    JacobianPoint z1{e.curve.elem(5), e.curve.elem(1), e.curve.elem(1)};
    EXPECT_EQ(plain(to_affine(e.curve, z1)), XY(5, 1));
}

TEST(CurveE17, ToAffineIgnoresScaling) {
    E17 e;
    for (const auto& P : e.all()) {
        if (P.infinity)
            continue;
        for (std::uint64_t lam = 1; lam < 17; ++lam) {
            FieldElem l = e.curve.elem(lam);
            FieldElem l2 = mont_mul(l, l);
            JacobianPoint j{mont_mul(P.x, l2), mont_mul(P.y, mont_mul(l2, l)), l};
            ASSERT_EQ(to_affine(e.curve, j), P);
        }
    }
}

TEST(CurveE17, Double) {
    E17 e;
    auto dbl = [&](const AffinePoint& P) { return to_affine(e.curve, point_double(e.curve, to_jacobian(e.curve, P))); };
    EXPECT_TRUE(dbl(e.inf()).infinity);
    EXPECT_EQ(plain(dbl(e.pt(5, 1))), XY(6, 3));
    EXPECT_EQ(plain(dbl(e.pt(6, 3))), XY(3, 1));
}

TEST(CurveE17, Add) {
    E17 e;
    AffinePoint P = e.pt(5, 1);
    EXPECT_EQ(affine_add(e.curve, P, e.inf()), P);
    EXPECT_EQ(affine_add(e.curve, e.inf(), P), P);
    EXPECT_EQ(plain(affine_add(e.curve, P, e.pt(6, 3))), XY(10, 6));
    EXPECT_TRUE(affine_add(e.curve, P, e.pt(5, 16)).infinity);
    // P + P goes through the doubling route
    EXPECT_EQ(plain(affine_add(e.curve, P, P)), XY(6, 3));
}

TEST(CurveE17, ScalarMult) {
    E17 e;
    AffinePoint G = e.pt(5, 1);
    EXPECT_TRUE(scalar_mult(e.curve, e.k(0), G).infinity);
    EXPECT_EQ(scalar_mult(e.curve, e.k(1), G), G);
    EXPECT_EQ(plain(scalar_mult(e.curve, e.k(5), G)), XY(9, 16));
    EXPECT_TRUE(scalar_mult(e.curve, e.k(19), G).infinity);

    OpCounters one;
    scalar_mult(e.curve, e.k(1), G, one);
    EXPECT_EQ(one.point_doubles, 1u);
    EXPECT_EQ(one.point_adds, 1u);
}

TEST(CurveE17, IsOnCurve) {
    E17 e;
    EXPECT_TRUE(is_on_curve(e.curve, e.inf()));
    EXPECT_TRUE(is_on_curve(e.curve, e.pt(5, 1)));
    EXPECT_FALSE(is_on_curve(e.curve, e.pt(5, 2)));
}

TEST(CurveE17, ReferenceAgreesExhaustively) {
    E17 e;
    for (const auto& P : e.all())
        for (std::uint64_t k = 0; k <= 40; ++k)
            ASSERT_EQ(scalar_mult(e.curve, e.k(k), P), reference_scalar_mult(e.curve, e.k(k), P)) << k;
    EXPECT_TRUE(reference_scalar_mult(e.curve, e.k(0), e.pt(5, 1)).infinity);
}

TEST(CurveE17, ScalarMultMatchesRepeatedAddition) {
    E17 e;
    oracle::SmallPt G{5, 1, false};
    for (std::uint64_t k = 0; k <= 38; ++k)
        ASSERT_EQ(scalar_mult(e.curve, e.k(k), e.pt(5, 1)), e.from_small(e.small.mul(k, G))) << k;
}

TEST(CurveE17, GroupLawsExhaustive) {
    E17 e;
    const auto pts = e.all();
    const AffinePoint O = e.inf();
    for (const auto& P : pts) {
        ASSERT_EQ(affine_add(e.curve, P, O), P);
        ASSERT_TRUE(affine_add(e.curve, P, negate(P)).infinity);
        for (const auto& Q : pts) {
            AffinePoint pq = affine_add(e.curve, P, Q);
            ASSERT_TRUE(is_on_curve(e.curve, pq));
            ASSERT_EQ(pq, affine_add(e.curve, Q, P));
            for (const auto& S : pts)
                ASSERT_EQ(affine_add(e.curve, pq, S), affine_add(e.curve, P, affine_add(e.curve, Q, S)));
        }
    }
}

TEST(CurveE17, JacobianMatchesAffineOracle) {
    E17 e;
    for (const auto& P : e.small.points())
        for (const auto& Q : e.small.points()) {
            ASSERT_EQ(affine_add(e.curve, e.from_small(P), e.from_small(Q)), e.from_small(e.small.add(P, Q)));
            ASSERT_EQ(to_affine(e.curve, point_double(e.curve, to_jacobian(e.curve, e.from_small(P)))),
                      e.from_small(e.small.add(P, P)));
        }
}

TEST(CurveE17, Sec1Encoding) {
    E17 e;
    EXPECT_EQ(bytes_to_hex(encode_point(e.curve, e.inf())), "00");
    EXPECT_EQ(bytes_to_hex(encode_point(e.curve, e.pt(6, 3))), "040603");
    for (const auto& P : e.all())
        EXPECT_EQ(decode_point(e.curve, encode_point(e.curve, P)), P);
    auto code_of = [&](const std::string& hex) {
        try {
            decode_point(e.curve, hex_to_bytes(hex));
        } catch (const Error& err) {
            return err.code();
        }
        return Errc::unknown_op;
    };
    EXPECT_EQ(code_of("0406"), Errc::invalid_encoding);
    EXPECT_EQ(code_of("050603"), Errc::invalid_encoding);
    EXPECT_EQ(code_of("041103"), Errc::invalid_encoding);  // x = 17 not reduced
}

TEST(CurveE17, TwoTorsionDoublesToInfinity) {
    // y^2 = x^3 + x has (0, 0) of order 2 over GF(17)
    MontCtxPtr f = mont_ctx_new(Nat::from_u64(17, 1, 16));
    Curve c(f, Nat::from_u64(1, 1, 16), Nat::from_u64(0, 1, 16));
    AffinePoint T = AffinePoint::from_plain(c, 0, 0);
    ASSERT_TRUE(is_on_curve(c, T));
    EXPECT_TRUE(to_affine(c, point_double(c, to_jacobian(c, T))).infinity);
    EXPECT_TRUE(scalar_mult(c, Nat::from_u64(2, 1, 16), T).infinity);
}

// --- properties on the registered curves -------------------------------

class RegisteredCurves : public ::testing::TestWithParam<std::string> {};

TEST_P(RegisteredCurves, OrderAnnihilates) {
    const auto& c = registry_get(GetParam());
    EXPECT_TRUE(scalar_mult(c.curve, c.n(), c.G).infinity);
}

TEST_P(RegisteredCurves, Distributivity) {
    const auto& c = registry_get(GetParam());
    std::mt19937_64 rng(99);
    const std::size_t bits = c.n().bit_length();
    for (int i = 0; i < 100; ++i) {
        Nat j = random_bits(bits, c.n().limb_count(), c.n().limb_width(), rng);
        Nat k = random_bits(bits, c.n().limb_count(), c.n().limb_width(), rng);
        Nat jw = j.reshaped(c.n().limb_count() + 1, c.n().limb_width());
        Nat kw = k.reshaped(c.n().limb_count() + 1, c.n().limb_width());
        Nat sum = add(jw, kw).value;
        AffinePoint lhs = scalar_mult(c.curve, sum, c.G);
        AffinePoint rhs = affine_add(c.curve, scalar_mult(c.curve, j, c.G), scalar_mult(c.curve, k, c.G));
        ASSERT_EQ(lhs, rhs);
        ASSERT_TRUE(is_on_curve(c.curve, lhs));
    }
}

TEST_P(RegisteredCurves, CounterLaw) {
    const auto& c = registry_get(GetParam());
    std::mt19937_64 rng(6);
    for (int i = 0; i < 200; ++i) {
        Nat k = random_bits(c.n().bit_length(), c.n().limb_count(), c.n().limb_width(), rng);
        OpCounters ctr;
        scalar_mult(c.curve, k, c.G, ctr);
        ASSERT_EQ(ctr.point_doubles, k.bit_length());
        ASSERT_EQ(ctr.point_adds, k.hamming_weight());
    }
}

TEST_P(RegisteredCurves, FormulaCostsAreInputIndependent) {
    const auto& c = registry_get(GetParam());
    std::mt19937_64 rng(1000);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        Nat a = random_bits(c.n().bit_length(), c.n().limb_count(), c.n().limb_width(), rng);
        Nat b = random_bits(c.n().bit_length(), c.n().limb_count(), c.n().limb_width(), rng);
        // keep P, Q projective (Z != 1) so the general formulas are exercised
        OpCounters scratch;
        JacobianPoint P = scalar_mult_jacobian(c.curve, a, c.G, scratch);
        JacobianPoint Q = scalar_mult_jacobian(c.curve, b, c.G, scratch);
        if (P.is_infinity() || Q.is_infinity() || P.Y.is_zero())
            continue;
        AffinePoint pa = to_affine(c.curve, P), qa = to_affine(c.curve, Q);
        if (pa.x == qa.x)
            continue;  // exceptional cases are routed separately
        OpCounters d, s;
        JacobianPoint D = point_double(c.curve, P, d);
        JacobianPoint S = point_add(c.curve, P, Q, s);
        ASSERT_EQ(d.mont_muls, kDoubleCost.mont_muls);
        ASSERT_EQ(d.field_adds, kDoubleCost.field_adds);
        ASSERT_EQ(d.field_subs, kDoubleCost.field_subs);
        ASSERT_EQ(s.mont_muls, kAddCost.mont_muls);
        ASSERT_EQ(s.field_adds, kAddCost.field_adds);
        ASSERT_EQ(s.field_subs, kAddCost.field_subs);
        ASSERT_TRUE(is_on_curve(c.curve, to_affine(c.curve, D)));
        ASSERT_TRUE(is_on_curve(c.curve, to_affine(c.curve, S)));
        ++checked;
    }
    EXPECT_GT(checked, 100);
}

TEST_P(RegisteredCurves, ReferenceAgreesOnRandomScalars) {
    const auto& c = registry_get(GetParam());
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20; ++i) {
        Nat k = random_bits(c.n().bit_length(), c.n().limb_count(), c.n().limb_width(), rng);
        ASSERT_EQ(scalar_mult(c.curve, k, c.G), reference_scalar_mult(c.curve, k, c.G));
    }
}

INSTANTIATE_TEST_SUITE_P(All, RegisteredCurves, ::testing::Values("toy-e17", "toy-e23", "secp160r1"),
                         [](const auto& info) {
                             std::string s = info.param;
                             std::replace(s.begin(), s.end(), '-', '_');
                             return s;
                         });
