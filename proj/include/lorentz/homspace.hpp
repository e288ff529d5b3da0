#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lorentz/algebra.hpp"
#include "lorentz/subgroup.hpp"

namespace lorentz {

/// Minkowski four-vector, realized as the Hermitian matrix x^k sigma_k.
struct FourVector {
    double x0 = 0.0, x1 = 0.0, x2 = 0.0, x3 = 0.0;

    Mat2 matrix() const;
    /// Reads the Hermitian part of m.
    static FourVector from_matrix(const Mat2& m);
    /// x0^2 - |x|^2, equal to det(matrix()).
    double minkowski_norm() const;
    double norm() const;  // Euclidean, for tolerances
};

/// g x g^dagger.
FourVector act_fourvector(const GroupElement& g, const FourVector& x);

/// Homogeneous space G/H, named after its stabilizer: H3Plus -> Pi3Plus.
struct SpaceLabel {
    SubgroupDescriptor stabilizer;

    std::string name() const;
};

SpaceLabel space_label(const SubgroupDescriptor& stabilizer);

/// The subgroup conjugator^-1 H conjugator, H a catalog descriptor.
struct ConjugateSubgroup {
    SubgroupDescriptor descriptor;
    GroupElement conjugator;
};

bool contains(const ConjugateSubgroup& s, const GroupElement& g, const Tolerances& tol = {});

struct FourVectorOrbit {
    enum class Tag { Zero, TimelikeFuture, TimelikePast, Lightlike, Spacelike };

    Tag tag = Tag::Zero;
    int cone = 0;        // +1 future, -1 past for lightlike vectors
    double scale = 0.0;  // x is conjugate to scale * representative
};

std::string_view to_string(FourVectorOrbit::Tag tag);

/// e, e + sigma3 or sigma3 as four-vectors.
FourVector orbit_representative(FourVectorOrbit::Tag tag);

struct FourVectorReport {
    FourVectorOrbit orbit;
    SubgroupDescriptor stabilizer;  // of the representative
    SpaceLabel label;
    GroupElement witness;  // act_fourvector(witness, x) == scale * representative
    /// Stabilizer of x itself.
    ConjugateSubgroup stabilizer_of_input() const { return {stabilizer, witness}; }
};

/// Throws ZeroVector when |x| <= tol.alg.
FourVectorReport classify_fourvector(const FourVector& x, const Tolerances& tol = {});

/// Orbit of the ray through x in the velocity space: Pi3Plus, Pi3Minus_plus or Pi2.
struct VelocityReport {
    FourVectorOrbit::Tag tag;
    SubgroupDescriptor stabilizer;
    SpaceLabel label;
};

VelocityReport classify_velocity(const FourVector& x, const Tolerances& tol = {});

/// c with h x h^dagger = c x, or nullopt if h does not preserve the ray.
std::optional<double> velocity_scale(const GroupElement& h, const FourVector& x, const Tolerances& tol = {});

struct Spinor {
    Complex z1, z2;

    double norm() const;
};

Spinor act_spinor(const GroupElement& g, const Spinor& z);

/// Action on the projective line; the result is normalized to unit length.
/// Throws ZeroSpinor.
Spinor act_celestial(const GroupElement& g, const Spinor& p);

/// Whether p and q span the same complex ray.
bool same_ray(const Spinor& p, const Spinor& q, double tol = 1e-9);

/// Subgroup S of C^* acting on spinors by scalar multiplication.
struct MultiplicativeGroup {
    enum class Kind {
        Trivial,            // {1}
        UnitCircle,         // |s| = 1
        PositiveReals,      // s > 0
        NonzeroComplex,     // C^*
        Spiral,             // exp((lambda - i) t)
        SpiralRoots,        // spiral times n-th roots of unity
        PositiveRealRoots,  // R_+ times n-th roots of unity
        RootsOfUnity,       // n-th roots of unity
    };

    Kind kind = Kind::Trivial;
    double lambda = 0.0;
    int n = 0;
};

/// Stabilizer of the class of (1, 0) in C^2 / S. Throws UnsupportedS.
SubgroupDescriptor spinor_stabilizer(const MultiplicativeGroup& s);

/// z z^dagger as a four-vector. Throws ZeroSpinor.
FourVector lightcone_from_spinor(const Spinor& z);

/// u in SU(2) with u z / |z| = w / |w|. Throws ZeroSpinor.
GroupElement su2_transport(const Spinor& z, const Spinor& w);

/// Semisimple orbits are Pi4, the nilpotent orbit is Pi4N_n with n = 2.
/// Throws ZeroElement.
SpaceLabel adjoint_orbit_label(const AlgebraElement& x, const Tolerances& tol = {});

struct CovariantMapAnswer {
    enum class Kind { None, UniqueInclusionLike, Multiple };

    Kind kind = Kind::None;
    std::string reason;
    /// Number of distinct maps for Multiple answers when N/H is finite.
    std::optional<long> count;
    bool resolved = true;
};

std::string_view to_string(CovariantMapAnswer::Kind kind);

/// Whether a covariant map G/H -> G/H' exists and how many. Throws
/// Unsupported for user-supplied finite groups.
CovariantMapAnswer covariant_map_exists(const SubgroupDescriptor& h, const SubgroupDescriptor& h_prime);

}  // namespace lorentz
