#pragma once

#include <random>

#include "lorentz/algebra.hpp"
#include "lorentz/subalgebra.hpp"
#include "lorentz/subgroup.hpp"

namespace lorentz {

using Rng = std::mt19937_64;

/// Haar-distributed element of SU(2).
GroupElement random_su2(Rng& rng);

/// u diag(r, 1/r) v with u, v in SU(2) and Frobenius norm at most max_norm.
GroupElement random_sl2c(Rng& rng, double max_norm = 10.0);

/// Gaussian coordinates with standard deviation scale.
AlgebraElement random_algebra_element(Rng& rng, double scale = 1.0);

/// Element of the connected subgroup exp(h) with moderate parameters.
GroupElement random_connected_member(const SubalgebraClass& cls, Rng& rng);

/// Representative of a component with |m| <= bound times a connected member.
GroupElement random_member(const SubgroupDescriptor& d, Rng& rng, int bound = 2);

}  // namespace lorentz
