#include "lorentz/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lorentz {

namespace {

constexpr double kPi = std::numbers::pi;

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Complex random_complex(Rng& rng, double half_width) {
    return {uniform(rng, -half_width, half_width), uniform(rng, -half_width, half_width)};
}

GroupElement unimodular_diag(Complex x) { return GroupElement(Mat2::diag(x, 1.0 / x)); }

GroupElement translation(Complex b) { return GroupElement(Mat2{1.0, b, 0.0, 1.0}); }

// exp((lambda - i) t) with |lambda t| kept moderate.
GroupElement spiral(double lambda, Rng& rng) {
    const double span = std::min(10.0, 2.0 / std::abs(lambda));
    return unimodular_diag(std::exp(Complex{lambda, -1.0} * uniform(rng, -span, span)));
}

GroupElement rotation(Rng& rng) { return unimodular_diag(std::polar(1.0, uniform(rng, 0.0, 2.0 * kPi))); }

GroupElement boost(Rng& rng) { return unimodular_diag(std::exp(uniform(rng, -2.0, 2.0))); }

}  // namespace

GroupElement random_su2(Rng& rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    double q[4];
    double norm = 0.0;
    do {
        norm = 0.0;
        for (double& x : q) {
            x = n(rng);
            norm += x * x;
        }
    } while (norm < 1e-12);
    norm = std::sqrt(norm);
    const Complex alpha{q[0] / norm, q[1] / norm};
    const Complex beta{q[2] / norm, q[3] / norm};
    return GroupElement::normalized({alpha, -std::conj(beta), beta, std::conj(alpha)});
}

GroupElement random_sl2c(Rng& rng, double max_norm) {
    // r^2 + r^-2 <= max_norm^2
    const double n2 = max_norm * max_norm;
    const double r_max = std::sqrt(std::max(1.0, (n2 + std::sqrt(std::max(0.0, n2 * n2 - 4.0))) / 2.0));
    const double r = uniform(rng, 1.0, r_max);
    return random_su2(rng) * unimodular_diag(r) * random_su2(rng);
}

AlgebraElement random_algebra_element(Rng& rng, double scale) {
    std::normal_distribution<double> n(0.0, scale);
    Coords6 v;
    for (int i = 0; i < 6; ++i) v(i) = n(rng);
    return AlgebraElement::from_coords(v);
}

GroupElement random_connected_member(const SubalgebraClass& cls, Rng& rng) {
    using Tag = SubalgebraClass::Tag;
    switch (cls.tag) {
        case Tag::H6: return GroupElement::identity();
        case Tag::H5Lambda: return spiral(cls.lambda, rng);
        case Tag::H5Zero: return rotation(rng);
        case Tag::H5Inf: return boost(rng);
        case Tag::H5N: return translation({0.0, uniform(rng, -3.0, 3.0)});
        case Tag::H4N: return translation(random_complex(rng, 3.0));
        case Tag::H4: return rotation(rng) * boost(rng);
        case Tag::H2: return rotation(rng) * boost(rng) * translation(random_complex(rng, 3.0));
        case Tag::H0: return random_sl2c(rng, 6.0);
        case Tag::H3Lambda: return spiral(cls.lambda, rng) * translation(random_complex(rng, 3.0));
        case Tag::H3Plus: return random_su2(rng);
        case Tag::H3Minus: {
            const double r = uniform(rng, 0.0, 2.0);
            const Complex alpha = std::polar(std::cosh(r), uniform(rng, 0.0, 2.0 * kPi));
            const Complex beta = std::polar(std::sinh(r), uniform(rng, 0.0, 2.0 * kPi));
            return GroupElement::normalized({alpha, std::conj(beta), beta, std::conj(alpha)});
        }
        case Tag::H3Zero: return rotation(rng) * translation(random_complex(rng, 3.0));
        case Tag::H4Inf: return boost(rng) * translation({0.0, uniform(rng, -3.0, 3.0)});
        case Tag::H3Inf: return boost(rng) * translation(random_complex(rng, 3.0));
    }
    return GroupElement::identity();
}

GroupElement random_member(const SubgroupDescriptor& d, Rng& rng, int bound) {
    const auto components = enumerate_components(d, bound);
    std::uniform_int_distribution<std::size_t> pick(0, components.size() - 1);
    return components[pick(rng)].representative * random_connected_member(d.identity_class(), rng);
}

}  // namespace lorentz
