#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "lorentz/error.hpp"
#include "lorentz/homspace.hpp"
#include "test_support.hpp"

using namespace lorentz;
using namespace testing_support;
using OTag = FourVectorOrbit::Tag;
using Kind = CovariantMapAnswer::Kind;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

SubgroupDescriptor fam(Family f, SubgroupParams p = {}) { return SubgroupDescriptor::make(f, p); }

// x^k sigma_k built from the Pauli oracle.
M2 oracle_fourvector(const FourVector& x) {
    return x.x0 * sigma(0) + x.x1 * sigma(1) + x.x2 * sigma(2) + x.x3 * sigma(3);
}

double fv_distance(const FourVector& x, const FourVector& y) {
    return FourVector{x.x0 - y.x0, x.x1 - y.x1, x.x2 - y.x2, x.x3 - y.x3}.norm();
}

FourVector scaled(double s, const FourVector& x) { return {s * x.x0, s * x.x1, s * x.x2, s * x.x3}; }

FourVector random_fourvector(Rng& rng) {
    return {uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3)};
}

Spinor random_spinor(Rng& rng) {
    return {{uniform(rng, -2, 2), uniform(rng, -2, 2)}, {uniform(rng, -2, 2), uniform(rng, -2, 2)}};
}

}  // namespace

TEST(Homspace, FourVectorMatrixMatchesPauliOracle) {
    auto rng = make_rng(41);
    for (int i = 0; i < 100; ++i) {
        const FourVector x = random_fourvector(rng);
        EXPECT_LT((eig(x.matrix()) - oracle_fourvector(x)).norm(), 1e-14);
        EXPECT_NEAR(x.matrix().det().real(), x.minkowski_norm(), 1e-12);
        EXPECT_LT(fv_distance(FourVector::from_matrix(x.matrix()), x), 1e-14);
    }
}

TEST(Homspace, ActionPreservesMinkowskiNorm) {
    auto rng = make_rng(42);
    EXPECT_LT(fv_distance(act_fourvector(GroupElement::identity(), {1, 2, 3, 4}), {1, 2, 3, 4}), 1e-15);
    for (double t : {0.3, 1.0, -2.0}) {
        const FourVector y = act_fourvector(exp(t * AlgebraElement::L(3)), {1, 0, 0, 0});
        EXPECT_GE(y.x0, 1.0);
        EXPECT_NEAR(y.minkowski_norm(), 1.0, 1e-12);
        EXPECT_NEAR(y.x0, std::cosh(2.0 * t), 1e-12);
        EXPECT_NEAR(y.x3, std::sinh(2.0 * t), 1e-12);
    }
    for (int i = 0; i < 200; ++i) {
        const GroupElement g = random_sl2c(rng, 3.0);
        const FourVector x = random_fourvector(rng);
        const FourVector y = act_fourvector(g, x);
        const M2 m = eig(g.matrix());
        const M2 expected = m * oracle_fourvector(x) * m.adjoint();
        EXPECT_LT((eig(y.matrix()) - expected).norm(), 1e-10 * (1.0 + expected.norm()));
        EXPECT_NEAR(y.minkowski_norm(), x.minkowski_norm(), 1e-9 * (1.0 + y.norm() * y.norm()));
    }
}

TEST(Homspace, ClassifyRepresentatives) {
    const auto r0 = classify_fourvector({1, 0, 0, 0});
    EXPECT_EQ(r0.orbit.tag, OTag::TimelikeFuture);
    EXPECT_EQ(r0.stabilizer, fam(Family::H3Plus));
    EXPECT_EQ(r0.label.name(), "Pi3Plus");
    const auto r1 = classify_fourvector({1, 0, 0, 1});
    EXPECT_EQ(r1.orbit.tag, OTag::Lightlike);
    EXPECT_EQ(r1.stabilizer, fam(Family::H3Zero));
    EXPECT_EQ(r1.label.name(), "Pi3Zero");
    const auto r2 = classify_fourvector({0, 0, 0, 1});
    EXPECT_EQ(r2.orbit.tag, OTag::Spacelike);
    EXPECT_EQ(r2.stabilizer, fam(Family::H3Minus));
    EXPECT_EQ(r2.label.name(), "Pi3Minus");
    EXPECT_EQ(classify_fourvector({-2, 0, 0, 0}).orbit.tag, OTag::TimelikePast);
    const auto past_light = classify_fourvector({-1, 1, 0, 0});
    EXPECT_EQ(past_light.orbit.tag, OTag::Lightlike);
    EXPECT_EQ(past_light.orbit.cone, -1);
    EXPECT_THROW(classify_fourvector({0, 0, 0, 0}), Error);
}

TEST(Homspace, WitnessMapsToScaledRepresentative) {
    auto rng = make_rng(43);
    for (int i = 0; i < 500; ++i) {
        FourVector x = random_fourvector(rng);
        if (i % 4 == 0) {
            // lightlike inputs on either cone
            const FourVector z = lightcone_from_spinor(random_spinor(rng));
            x = scaled(i % 8 == 0 ? 1.0 : -1.0, z);
        }
        const FourVectorReport r = classify_fourvector(x);
        const FourVector y = act_fourvector(r.witness, x);
        const FourVector rep = scaled(r.orbit.scale, orbit_representative(r.orbit.tag));
        EXPECT_LT(fv_distance(y, rep), 1e-9 * (1.0 + x.norm())) << to_string(r.orbit.tag);
        // stabilizer of x itself is the conjugate subgroup
        const GroupElement h = random_member(r.stabilizer, rng);
        const GroupElement h_x = r.witness.inverse() * h * r.witness;
        EXPECT_TRUE(contains(r.stabilizer_of_input(), h_x));
        EXPECT_LT(fv_distance(act_fourvector(h_x, x), x), 1e-7 * (1.0 + x.norm()));
    }
}

TEST(Homspace, StabilizersCertified) {
    auto rng = make_rng(44);
    for (OTag t : {OTag::TimelikeFuture, OTag::Lightlike, OTag::Spacelike}) {
        const FourVector x = orbit_representative(t);
        const SubgroupDescriptor stab = classify_fourvector(x).stabilizer;
        for (int i = 0; i < 200; ++i) {
            const GroupElement h = random_member(stab, rng);
            EXPECT_LT(fv_distance(act_fourvector(h, x), x), 1e-9 * (1.0 + h.matrix().norm() * h.matrix().norm()));
            const GroupElement g = random_sl2c(rng, 4.0);
            if (contains(stab, g)) continue;
            EXPECT_GT(fv_distance(act_fourvector(g, x), x), 1e-9);
        }
    }
}

TEST(Homspace, VelocityScaleLaws) {
    auto rng = make_rng(45);
    const FourVector e{1, 0, 0, 0}, s3{0, 0, 0, 1}, light{1, 0, 0, 1};
    EXPECT_EQ(classify_velocity(e).label.name(), "Pi3Plus");
    EXPECT_EQ(classify_velocity({-2, 0, 0, 0}).label.name(), "Pi3Plus");
    EXPECT_EQ(classify_velocity(s3).stabilizer, fam(Family::H3Minus_plus));
    EXPECT_EQ(classify_velocity(s3).label.name(), "Pi3Minus_plus");
    EXPECT_EQ(classify_velocity(light).stabilizer, fam(Family::H2));
    EXPECT_EQ(classify_velocity(light).label.name(), "Pi2");

    const GroupElement is2(Mat2{0.0, 1.0, -1.0, 0.0});
    for (int i = 0; i < 200; ++i) {
        const auto c_plus = velocity_scale(random_member(fam(Family::H3Plus), rng), e);
        ASSERT_TRUE(c_plus.has_value());
        EXPECT_NEAR(*c_plus, 1.0, 1e-9);

        const GroupElement h = random_connected_member({SubalgebraClass::Tag::H3Minus}, rng);
        const auto c_minus = velocity_scale(h, s3);
        ASSERT_TRUE(c_minus.has_value());
        EXPECT_NEAR(*c_minus, 1.0, 1e-9);
        const auto c_flip = velocity_scale(is2 * h, s3);
        ASSERT_TRUE(c_flip.has_value());
        EXPECT_NEAR(*c_flip, -1.0, 1e-9);

        const GroupElement t = random_member(fam(Family::H2), rng);
        const auto c_light = velocity_scale(t, light);
        ASSERT_TRUE(c_light.has_value());
        EXPECT_GT(*c_light, 0.0);
        EXPECT_NEAR(*c_light, std::norm(t.matrix().a), 1e-9 * (1.0 + *c_light));

        EXPECT_FALSE(velocity_scale(random_sl2c(rng, 4.0), e).has_value());
    }
}

TEST(Homspace, CelestialAction) {
    auto rng = make_rng(46);
    const Spinor north{1.0, 0.0};
    const GroupElement is2(Mat2{0.0, 1.0, -1.0, 0.0});
    EXPECT_TRUE(same_ray(act_celestial(is2, north), {0.0, 1.0}));
    for (int i = 0; i < 200; ++i) {
        EXPECT_TRUE(same_ray(act_celestial(random_member(fam(Family::H2), rng), north), north));
        const GroupElement g = random_sl2c(rng, 3.0), h = random_sl2c(rng, 3.0);
        const Spinor p = random_spinor(rng);
        EXPECT_TRUE(same_ray(act_celestial(g * h, p), act_celestial(g, act_celestial(h, p))));
        EXPECT_NEAR(act_celestial(g, p).norm(), 1.0, 1e-12);
    }
    EXPECT_THROW(act_celestial(is2, {0.0, 0.0}), Error);
}

TEST(Homspace, SpinorStabilizers) {
    using SKind = MultiplicativeGroup::Kind;
    EXPECT_EQ(spinor_stabilizer({SKind::UnitCircle}), fam(Family::H3Zero));
    EXPECT_EQ(space_label(spinor_stabilizer({SKind::UnitCircle})).name(), "Pi3Zero");
    EXPECT_EQ(spinor_stabilizer({SKind::Trivial}), fam(Family::H4N));
    EXPECT_EQ(space_label(spinor_stabilizer({SKind::Trivial})).name(), "Pi4N");
    EXPECT_EQ(spinor_stabilizer({SKind::NonzeroComplex}), fam(Family::H2));
    EXPECT_EQ(spinor_stabilizer({SKind::PositiveReals}), fam(Family::H3Inf));
    SubgroupParams p;
    p.lambda = 0.4;
    EXPECT_EQ(spinor_stabilizer({SKind::Spiral, 0.4}), fam(Family::H3Lambda, p));
    p.n = 3;
    EXPECT_EQ(spinor_stabilizer({SKind::SpiralRoots, 0.4, 3}), fam(Family::H3Lambda_n, p));
    EXPECT_THROW(spinor_stabilizer({SKind::Spiral, 0.0}), Error);
    try {
        spinor_stabilizer({SKind::RootsOfUnity, 0.0, 1});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::UnsupportedS);
    }

    // Members send (1, 0) to s (1, 0) with s in S.
    auto rng = make_rng(47);
    const Spinor z{1.0, 0.0};
    const auto scalar = [&](const GroupElement& h) {
        const Spinor w = act_spinor(h, z);
        EXPECT_LT(std::abs(w.z2), 1e-12);
        return w.z1;
    };
    for (int i = 0; i < 100; ++i) {
        EXPECT_NEAR(std::abs(scalar(random_member(spinor_stabilizer({SKind::UnitCircle}), rng))), 1.0, 1e-12);
        EXPECT_LT(std::abs(scalar(random_member(spinor_stabilizer({SKind::Trivial}), rng)) - 1.0), 1e-12);
        const Complex pos = scalar(random_member(spinor_stabilizer({SKind::PositiveReals}), rng));
        EXPECT_LT(std::abs(pos.imag()), 1e-12);
        EXPECT_GT(pos.real(), 0.0);
        const Complex root = scalar(random_member(spinor_stabilizer({SKind::RootsOfUnity, 0.0, 5}), rng));
        EXPECT_LT(std::abs(std::pow(root, 5) - 1.0), 1e-10);
        const Complex sp = scalar(random_member(spinor_stabilizer({SKind::Spiral, 0.4}), rng));
        const double t = std::log(std::abs(sp)) / 0.4;
        EXPECT_LT(std::abs(sp - std::exp(Complex{0.4, -1.0} * t)), 1e-9);
    }
}

TEST(Homspace, LightconeFromSpinor) {
    // z z^dagger = diag(1, 0), half of e + sigma3
    const FourVector x = lightcone_from_spinor({1.0, 0.0});
    EXPECT_LT(fv_distance(scaled(2.0, x), {1, 0, 0, 1}), 1e-15);
    EXPECT_EQ(classify_fourvector(x).label.name(), "Pi3Zero");
    for (double theta : {0.1, 1.0, 2.5, -3.0}) {
        EXPECT_LT(fv_distance(lightcone_from_spinor({std::polar(1.0, theta), 0.0}), x), 1e-15);
    }
    EXPECT_THROW(lightcone_from_spinor({0.0, 0.0}), Error);
    auto rng = make_rng(48);
    for (int i = 0; i < 1000; ++i) {
        const GroupElement g = random_sl2c(rng, 4.0);
        const Spinor z = random_spinor(rng);
        const FourVector lhs = lightcone_from_spinor(act_spinor(g, z));
        const FourVector rhs = act_fourvector(g, lightcone_from_spinor(z));
        EXPECT_LT(fv_distance(lhs, rhs), 1e-9 * (1.0 + lhs.norm()));
        EXPECT_NEAR(lhs.minkowski_norm(), 0.0, 1e-9 * (1.0 + lhs.norm() * lhs.norm()));
        const Complex phase = std::polar(1.0, uniform(rng, 0, 2 * kPi));
        EXPECT_LT(fv_distance(lightcone_from_spinor({phase * z.z1, phase * z.z2}), lightcone_from_spinor(z)), 1e-12);
    }
}

TEST(Homspace, SU2Transport) {
    auto rng = make_rng(49);
    for (int i = 0; i < 300; ++i) {
        const Spinor z = random_spinor(rng), w = random_spinor(rng);
        const GroupElement u = su2_transport(z, w);
        EXPECT_TRUE(contains(fam(Family::H3Plus), u));
        const Spinor uz = act_spinor(u, z);
        EXPECT_LT(std::abs(uz.z1 / z.norm() - w.z1 / w.norm()) + std::abs(uz.z2 / z.norm() - w.z2 / w.norm()), 1e-12);
    }
    EXPECT_THROW(su2_transport({0.0, 0.0}, {1.0, 0.0}), Error);
}

TEST(Homspace, AdjointOrbitLabels) {
    EXPECT_EQ(adjoint_orbit_label(AlgebraElement::M(3)).name(), "Pi4");
    EXPECT_EQ(adjoint_orbit_label(AlgebraElement::M(1) + AlgebraElement::L(2)).name(), "Pi4N_n:n=2");
    auto rng = make_rng(50);
    for (int i = 0; i < 50; ++i) {
        EXPECT_EQ(adjoint_orbit_label(adjoint(random_sl2c(rng), AlgebraElement::L(3))).name(), "Pi4");
        EXPECT_EQ(adjoint_orbit_label(random_nilpotent(rng)).name(), "Pi4N_n:n=2");
    }
    EXPECT_THROW(adjoint_orbit_label(AlgebraElement{}), Error);
    // the nilpotent stabilizer fixes M1 + L2 under conjugation
    const SpaceLabel label = adjoint_orbit_label(AlgebraElement::M(1) + AlgebraElement::L(2));
    for (int i = 0; i < 50; ++i) {
        const GroupElement h = random_member(label.stabilizer, rng);
        const AlgebraElement n = AlgebraElement::M(1) + AlgebraElement::L(2);
        EXPECT_LT(distance(adjoint(h, n), n), 1e-9);
    }
}

TEST(Homspace, CovariantMapExamples) {
    EXPECT_EQ(covariant_map_exists(fam(Family::H3Plus), fam(Family::H3Plus)).kind, Kind::UniqueInclusionLike);
    EXPECT_EQ(covariant_map_exists(fam(Family::H3Minus), fam(Family::H3Minus_plus)).kind, Kind::UniqueInclusionLike);
    EXPECT_EQ(covariant_map_exists(fam(Family::H3Plus), fam(Family::H3Minus)).kind, Kind::None);
    SubgroupParams p;
    p.lambda = 0.7;
    EXPECT_EQ(covariant_map_exists(fam(Family::H3Lambda, p), fam(Family::H2)).kind, Kind::UniqueInclusionLike);
    EXPECT_EQ(to_string(Kind::None), "none");
    EXPECT_EQ(to_string(Kind::UniqueInclusionLike), "unique");

    const auto h4 = covariant_map_exists(fam(Family::H4), fam(Family::H4));
    EXPECT_EQ(h4.kind, Kind::Multiple);
    EXPECT_EQ(h4.count, 2);
    const auto h5 = covariant_map_exists(fam(Family::H5Zero), fam(Family::H5Zero));
    EXPECT_EQ(h5.kind, Kind::Multiple);
    EXPECT_FALSE(h5.count.has_value());
    // more components than the target
    EXPECT_EQ(covariant_map_exists(fam(Family::H3Minus_plus), fam(Family::H3Minus)).kind, Kind::None);
    const auto finite = SubgroupDescriptor::finite({GroupElement(Mat2{0.0, 1.0, -1.0, 0.0})});
    try {
        covariant_map_exists(finite, fam(Family::H0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::Unsupported);
    }
}

// From three-dimensional spaces into the velocity orbits.
TEST(Homspace, CovariantMapDecisionTable) {
    std::vector<SubgroupDescriptor> sources;
    for (const auto& d : sample_descriptors()) {
        if (d.identity_class().dim() == 3) sources.push_back(d);
    }
    const std::vector<SubgroupDescriptor> targets{fam(Family::H3Plus), fam(Family::H3Minus_plus), fam(Family::H2)};
    const auto is = [](const SubgroupDescriptor& d, Family f) { return d.family() == f; };
    for (const auto& h : sources) {
        for (const auto& t : targets) {
            const auto answer = covariant_map_exists(h, t);
            bool expected = false;
            if (is(t, Family::H3Plus)) expected = is(h, Family::H3Plus);
            if (is(t, Family::H3Minus_plus)) expected = is(h, Family::H3Minus) || is(h, Family::H3Minus_plus);
            if (is(t, Family::H2)) {
                expected = !is(h, Family::H3Plus) && !is(h, Family::H3Minus) && !is(h, Family::H3Minus_plus);
            }
            EXPECT_EQ(answer.kind, expected ? Kind::UniqueInclusionLike : Kind::None)
                << h.name() << " -> " << t.name() << ": " << answer.reason;
        }
    }
}
