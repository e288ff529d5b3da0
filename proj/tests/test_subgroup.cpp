#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "lorentz/error.hpp"
#include "lorentz/subgroup.hpp"
#include "test_support.hpp"

using namespace lorentz;
using namespace testing_support;
using Tag = SubalgebraClass::Tag;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

SubgroupDescriptor fam(Family f, SubgroupParams p = {}) { return SubgroupDescriptor::make(f, p); }

GroupElement mat(Complex a, Complex b, Complex c, Complex d) { return GroupElement(Mat2{a, b, c, d}); }

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::Parse;  // nothing thrown
}

}  // namespace

TEST(Subgroup, FamilyNamesRoundTrip) {
    EXPECT_EQ(all_families().size(), 41u);
    for (Family f : all_families()) {
        const auto parsed = parse_family(to_string(f));
        ASSERT_TRUE(parsed.has_value());
        EXPECT_EQ(*parsed, f);
    }
    EXPECT_FALSE(parse_family("H7").has_value());
    SubgroupParams p;
    p.lambda = 0.5;
    p.n = 4;
    EXPECT_EQ(fam(Family::H5Lambda_n, p).name(), "H5Lambda_n:lambda=0.5,n=4");
    EXPECT_EQ(fam(Family::H3Plus).name(), "H3Plus");
}

TEST(Subgroup, ContainsExamples) {
    EXPECT_TRUE(contains(fam(Family::H5Zero), mat(std::polar(1.0, -kPi / 3), 0.0, 0.0, std::polar(1.0, kPi / 3))));
    EXPECT_TRUE(contains(fam(Family::H5N), mat(1.0, 5.0 * kI, 0.0, 1.0)));
    EXPECT_FALSE(contains(fam(Family::H5N), mat(1.0, 5.0, 0.0, 1.0)));
    EXPECT_TRUE(contains(fam(Family::H3Plus), GroupElement::minus_identity()));
    EXPECT_FALSE(contains(fam(Family::H2), mat(1.0, 0.0, 1.0, 1.0)));
    EXPECT_TRUE(contains(fam(Family::H0), mat(1.0, 0.0, 1.0, 1.0)));
    EXPECT_TRUE(contains(fam(Family::H6), GroupElement::identity()));
    EXPECT_FALSE(contains(fam(Family::H6), GroupElement::minus_identity()));
    // H5^inf needs a positive diagonal
    EXPECT_TRUE(contains(fam(Family::H5Inf), mat(2.0, 0.0, 0.0, 0.5)));
    EXPECT_FALSE(contains(fam(Family::H5Inf), mat(-2.0, 0.0, 0.0, -0.5)));
}

TEST(Subgroup, ComponentOfExamples) {
    SubgroupParams p;
    p.lambda = 0.5;
    p.n = 4;
    const SubgroupDescriptor h5 = fam(Family::H5Lambda_n, p);
    const GroupElement spiral = exp(0.8 * (AlgebraElement::M(3) + 0.5 * AlgebraElement::L(3)));
    const ComponentId id = component_of(h5, mat(kI, 0.0, 0.0, -kI) * spiral);
    EXPECT_EQ(id.nu, 1);

    SubgroupParams q;
    q.k = 2.0;
    EXPECT_EQ(component_of(fam(Family::H5Zero_k, q), mat(2.0, 0.0, 0.0, 0.5)).m, 1);
    EXPECT_EQ(component_of(fam(Family::H5Zero_k, q), mat(0.25 * kI, 0.0, 0.0, -4.0 * kI)).m, -2);

    auto rng = make_rng(31);
    for (Tag t : all_subalgebra_tags()) {
        const SubalgebraClass c{t, 0.7};
        const SubgroupDescriptor d = connected_from_class(c);
        EXPECT_EQ(component_of(d, random_connected_member(c, rng)), ComponentId{});
    }
    EXPECT_EQ(code_of([&] { component_of(fam(Family::H2), mat(1.0, 0.0, 1.0, 1.0)); }), ErrorCode::NotMember);
}

TEST(Subgroup, EnumerateComponentsExamples) {
    const auto h4 = enumerate_components(fam(Family::H4_plus), 3);
    ASSERT_EQ(h4.size(), 2u);
    EXPECT_LT((h4[0].representative.matrix() - Mat2::identity()).norm(), 1e-15);
    EXPECT_LT((h4[1].representative.matrix() - Mat2{0.0, 1.0, -1.0, 0.0}).norm(), 1e-15);

    SubgroupParams p;
    p.h = 1.0;
    const auto h5 = enumerate_components(fam(Family::H5N_1_h, p), 3);
    ASSERT_EQ(h5.size(), 4u);
    const std::vector<Mat2> expected{Mat2::identity(), -Mat2::identity(), Mat2{kI, kI, 0.0, -kI},
                                     -1.0 * Mat2{kI, kI, 0.0, -kI}};
    for (const Mat2& e : expected) {
        int hits = 0;
        for (const auto& c : h5) hits += (c.representative.matrix() - e).norm() < 1e-14;
        EXPECT_EQ(hits, 1);
    }

    SubgroupParams q;
    q.k = 2.0;
    q.h = 0.0;
    q.nu = 0;
    const auto h5n = enumerate_components(fam(Family::H5N_k_h_nu, q), 1);
    ASSERT_EQ(h5n.size(), 3u);
    for (const auto& c : h5n) {
        EXPECT_EQ(std::abs(c.representative.matrix().b), 0.0);
        EXPECT_EQ(std::abs(c.representative.matrix().c), 0.0);
    }
}

TEST(Subgroup, EnumeratedRepresentativesAreMembersOfTheirComponent) {
    for (const auto& d : sample_descriptors()) {
        for (const auto& c : enumerate_components(d, 2)) {
            ASSERT_TRUE(contains(d, c.representative)) << d.name();
            EXPECT_EQ(component_of(d, c.representative), c.id) << d.name();
        }
        const auto count = component_count(d);
        if (count) {
            EXPECT_EQ(static_cast<long>(enumerate_components(d, 2).size()), *count) << d.name();
        }
    }
}

TEST(Subgroup, NormalizerExamples) {
    EXPECT_EQ(normalizer(fam(Family::H3Plus)), fam(Family::H3Plus));
    EXPECT_EQ(normalizer(fam(Family::H3Minus)), fam(Family::H3Minus_plus));
    EXPECT_EQ(normalizer(fam(Family::H4)), fam(Family::H4_plus));
    EXPECT_EQ(normalizer(fam(Family::H2)), fam(Family::H2));
    EXPECT_EQ(normalizer(fam(Family::H4_plus)), fam(Family::H4_plus));
    EXPECT_EQ(normalizer(fam(Family::H3Minus_plus)), fam(Family::H3Minus_plus));
    SubgroupParams p;
    p.h = 1.0;
    EXPECT_EQ(code_of([&] { normalizer(fam(Family::H5N_1_h, p)); }), ErrorCode::Unsupported);
    // The SU(1,1) normalizer has the i sigma2 coset, and i sigma2 is not in SU(1,1).
    const GroupElement is2 = mat(0.0, 1.0, -1.0, 0.0);
    EXPECT_FALSE(contains(fam(Family::H3Minus), is2));
    EXPECT_TRUE(contains(fam(Family::H3Minus_plus), is2));
}

TEST(Subgroup, NormalizersCertifiedBySampling) {
    auto rng = make_rng(32);
    for (Tag t : all_subalgebra_tags()) {
        const SubgroupDescriptor d = connected_from_class({t, 0.7});
        const SubgroupDescriptor n = normalizer(d);
        for (int i = 0; i < 100; ++i) {
            const GroupElement g = random_member(n, rng);
            const GroupElement h = random_connected_member(d.identity_class(), rng);
            ASSERT_TRUE(contains(n, g)) << n.name();
            EXPECT_TRUE(contains(d, g * h * g.inverse())) << d.name();
        }
        if (n == fam(Family::H0)) continue;
        for (int i = 0; i < 100; ++i) {
            GroupElement g = random_sl2c(rng, 4.0);
            // half the trials perturb a normalizer element slightly
            if (i % 2) g = random_member(n, rng) * exp(random_element(rng, 0.05));
            if (contains(n, g)) continue;
            bool moved = false;
            for (int j = 0; j < 50 && !moved; ++j) {
                const GroupElement h = random_connected_member(d.identity_class(), rng);
                moved = !contains(d, g * h * g.inverse());
            }
            EXPECT_TRUE(moved) << d.name();
        }
    }
}

TEST(Subgroup, GroupClosure) {
    auto rng = make_rng(33);
    for (const auto& d : sample_descriptors()) {
        for (int i = 0; i < 200; ++i) {
            const GroupElement g = random_member(d, rng), h = random_member(d, rng);
            ASSERT_TRUE(contains(d, g)) << d.name();
            EXPECT_TRUE(contains(d, g * h)) << d.name();
            EXPECT_TRUE(contains(d, g.inverse())) << d.name();
        }
    }
}

TEST(Subgroup, ComponentArithmetic) {
    auto rng = make_rng(34);
    const auto check = [&](const SubgroupDescriptor& d, auto&& law) {
        for (int i = 0; i < 200; ++i) {
            const GroupElement g1 = random_member(d, rng), g2 = random_member(d, rng);
            const ComponentId a = component_of(d, g1), b = component_of(d, g2);
            EXPECT_EQ(component_of(d, g1 * g2), law(a, b)) << d.name();
        }
    };
    SubgroupParams p;
    p.lambda = 0.5;
    p.n = 5;
    const auto add_nu = [&](int n) {
        return [n](ComponentId a, ComponentId b) {
            return ComponentId{0, (a.nu + b.nu) % n, 1, false};
        };
    };
    check(fam(Family::H5Lambda_n, p), add_nu(5));
    check(fam(Family::H3Lambda_n, p), add_nu(5));
    check(fam(Family::H5Inf_n, p), add_nu(5));
    check(fam(Family::H4N_n, p), add_nu(5));
    SubgroupParams q;
    q.k = 1.7;
    const auto add_m = [](ComponentId a, ComponentId b) { return ComponentId{a.m + b.m, 0, 1, false}; };
    check(fam(Family::H3Zero_k, q), add_m);
    check(fam(Family::H5Zero_k, q), add_m);
    q.h = 0.8;
    check(fam(Family::H5N_1_h_0, q), add_m);
    q.n = 3;
    q.eta = 0.25;
    check(fam(Family::H4N_k_n_eta, q), [](ComponentId a, ComponentId b) {
        return ComponentId{a.m + b.m, (a.nu + b.nu) % 3, 1, false};
    });
    check(fam(Family::H4_plus), [](ComponentId a, ComponentId b) { return ComponentId{0, 0, 1, a.flip != b.flip}; });
}

TEST(Subgroup, ExpConsistency) {
    auto rng = make_rng(35);
    for (Tag t : all_subalgebra_tags()) {
        for (double l : {0.5, -2.0}) {
            const SubalgebraClass c{t, l};
            const SubgroupDescriptor d = connected_from_class(c);
            for (const auto& x : catalog_generators(c)) {
                for (int i = 0; i < 20; ++i) {
                    EXPECT_TRUE(contains(d, exp(uniform(rng, -2.0, 2.0) * x))) << d.name();
                }
            }
            AlgebraElement y;
            for (const auto& x : catalog_generators(c)) y += uniform(rng, -1.0, 1.0) * x;
            EXPECT_TRUE(contains(d, exp(y))) << d.name();
        }
    }
}

TEST(Subgroup, ConnectedFromClass) {
    EXPECT_EQ(connected_from_class({Tag::H5Zero}), fam(Family::H5Zero));
    EXPECT_EQ(connected_from_class({Tag::H5Inf}), fam(Family::H5Inf));
    EXPECT_EQ(connected_from_class({Tag::H0}), fam(Family::H0));
    SubgroupParams p;
    p.lambda = -1.5;
    EXPECT_EQ(connected_from_class({Tag::H3Lambda, -1.5}), fam(Family::H3Lambda, p));
    for (Tag t : all_subalgebra_tags()) EXPECT_TRUE(connected_from_class({t, 1.0}).is_connected());
}

TEST(Subgroup, ContainsMinusE) {
    EXPECT_TRUE(contains_minus_e(fam(Family::H3Plus)));
    EXPECT_FALSE(contains_minus_e(fam(Family::H5N)));
    SubgroupParams p;
    p.h = 0.0;
    EXPECT_TRUE(contains_minus_e(fam(Family::H5N_1_h_0plus, p)));
    p.h = 1.0;
    EXPECT_TRUE(contains_minus_e(fam(Family::H5N_1_h_0plus, p)));
    EXPECT_FALSE(contains_minus_e(fam(Family::H5N_1_h_0, p)));
    EXPECT_TRUE(contains_minus_e(fam(Family::H5Zero)));
    EXPECT_FALSE(contains_minus_e(fam(Family::H5Inf)));
    EXPECT_TRUE(contains_minus_e(fam(Family::H4Inf_plus)));
}

TEST(Subgroup, TriangularDiscreteExamples) {
    const auto h = validate_triangular_discrete({mat(2.0, 1.5, 0.0, 0.5), mat(4.0, 3.75, 0.0, 0.25)});
    ASSERT_TRUE(h.has_value());
    EXPECT_LT(std::abs(*h - 1.0), 1e-12);
    const auto trivial = validate_triangular_discrete({GroupElement::identity()});
    ASSERT_TRUE(trivial.has_value());
    EXPECT_EQ(*trivial, Complex{0.0});
    EXPECT_FALSE(validate_triangular_discrete({mat(2.0, 1.5, 0.0, 0.5), mat(4.0, 0.0, 0.0, 0.25)}).has_value());
    EXPECT_EQ(code_of([&] { validate_triangular_discrete({mat(1.0, 0.0, 1.0, 1.0)}); }), ErrorCode::NotTriangular);
}

TEST(Subgroup, TriangularDiscreteLaw) {
    auto rng = make_rng(36);
    const auto element = [&](Complex h) {
        const Complex a = std::polar(uniform(rng, 1.1, 4.0), uniform(rng, 0.0, 2.0 * kPi));
        return mat(a, (a - 1.0 / a) * h, 0.0, 1.0 / a);
    };
    for (int i = 0; i < 300; ++i) {
        const Complex h{uniform(rng, -3, 3), uniform(rng, -3, 3)};
        const auto got = validate_triangular_discrete({element(h), element(h)});
        ASSERT_TRUE(got.has_value());
        EXPECT_LT(std::abs(*got - h), 1e-9);
        const Complex other = h + std::polar(uniform(rng, 0.01, 1.0), uniform(rng, 0.0, 2.0 * kPi));
        EXPECT_FALSE(validate_triangular_discrete({element(h), element(other)}).has_value());
    }
}

TEST(Subgroup, DescriptorValidation) {
    const auto invalid = [](Family f, SubgroupParams p) {
        return code_of([&] { SubgroupDescriptor::make(f, p); }) == ErrorCode::InvalidParameter;
    };
    EXPECT_TRUE(invalid(Family::H5Lambda, {}));
    EXPECT_TRUE(invalid(Family::H5Lambda_n_eta, {0.5, 3, 0.2, 0, 0, 0}));
    EXPECT_TRUE(invalid(Family::H5Lambda_n_eta, {0.5, 4, 1.0, 0, 0, 0}));
    EXPECT_TRUE(invalid(Family::H5Zero_k_h, {0, 0, 0, 2.0, 3.0, 0}));
    EXPECT_TRUE(invalid(Family::H5Zero_k_h, {0, 0, 0, 2.0, 0.5, 0}));
    EXPECT_TRUE(invalid(Family::H5Zero_k, {0, 0, 0, 1.0, 0, 0}));
    EXPECT_TRUE(invalid(Family::H5N_k_h_nu, {0, 0, 0, 2.0, 0.5, 4}));
    EXPECT_TRUE(invalid(Family::H5N_k_h_nu_plus, {0, 0, 0, 2.0, 0.5, 2}));
    EXPECT_TRUE(invalid(Family::H5N_1_h_0, {}));
    EXPECT_TRUE(invalid(Family::H5Inf_n, {0, 1, 0, 0, 0, 0}));
    EXPECT_TRUE(invalid(Family::H6_finite, {}));
    EXPECT_FALSE(invalid(Family::H5Zero_k_h, {0, 0, 0, 2.0, 1.0, 0}));
    EXPECT_FALSE(invalid(Family::H5N_1_h_0plus, {}));
}

TEST(Subgroup, FiniteGroups) {
    const GroupElement is2 = mat(0.0, 1.0, -1.0, 0.0);
    const GroupElement i3 = mat(kI, 0.0, 0.0, -kI);
    const SubgroupDescriptor c4 = SubgroupDescriptor::finite({is2});
    EXPECT_EQ(component_count(c4), 4);
    EXPECT_TRUE(contains_minus_e(c4));
    const SubgroupDescriptor q8 = SubgroupDescriptor::finite({is2, i3});
    EXPECT_EQ(component_count(q8), 8);
    EXPECT_TRUE(contains(q8, is2 * i3));
    EXPECT_FALSE(contains(q8, mat(2.0, 0.0, 0.0, 0.5)));
    EXPECT_EQ(q8.identity_class().tag, Tag::H6);
    EXPECT_FALSE(q8.is_connected());
    EXPECT_EQ(code_of([&] { SubgroupDescriptor::finite({mat(2.0, 0.0, 0.0, 0.5)}, 64); }), ErrorCode::Unsupported);
    EXPECT_EQ(code_of([&] { normalizer(q8); }), ErrorCode::Unsupported);
    // closure under products
    for (const auto& a : q8.elements()) {
        for (const auto& b : q8.elements()) EXPECT_TRUE(contains(q8, a * b));
    }
}
