#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "lorentz/algebra.hpp"

namespace lorentz {

/// Conjugacy class of a subalgebra of sl(2,C). The digit in the tag is the
/// codimension, which is the dimension of the homogeneous space.
struct SubalgebraClass {
    enum class Tag {
        H6,         // {0}
        H5Lambda,   // M3 + lambda L3, lambda != 0
        H5Zero,     // M3
        H5Inf,      // L3
        H5N,        // M1 + L2
        H4N,        // M1 + L2, M2 - L1
        H4,         // M3, L3
        H2,         // M3, L3, M1 + L2, M2 - L1
        H0,         // sl(2,C)
        H3Lambda,   // M3 + lambda L3, M1 + L2, M2 - L1
        H3Plus,     // su(2): M3, M1, M2
        H3Minus,    // su(1,1): M3, L1, L2
        H3Zero,     // e(2): M3, M1 + L2, M2 - L1
        H4Inf,      // L3, M1 + L2
        H3Inf,      // L3, M1 + L2, M2 - L1
    };

    Tag tag = Tag::H6;
    double lambda = 0.0;  // meaningful for H5Lambda and H3Lambda only

    bool has_lambda() const { return tag == Tag::H5Lambda || tag == Tag::H3Lambda; }
    int dim() const;
};

std::string_view to_string(SubalgebraClass::Tag tag);
std::optional<SubalgebraClass::Tag> parse_subalgebra_tag(std::string_view name);
std::string describe(const SubalgebraClass& cls);
const std::vector<SubalgebraClass::Tag>& all_subalgebra_tags();

/// Same tag and, for parametric classes, |lambda - lambda'| <= tol (1 + |lambda|).
bool same_class(const SubalgebraClass& x, const SubalgebraClass& y, double tol = 1e-9);

/// Real subspace of sl(2,C) held as an orthonormal basis in the 6-dim
/// coordinate space. closure() produces bracket-closed ones; span() does not
/// check closure.
class Subalgebra {
public:
    Subalgebra() = default;

    static Subalgebra span(const std::vector<AlgebraElement>& vectors, const Tolerances& tol = {});

    const std::vector<AlgebraElement>& basis() const { return basis_; }
    int dim() const { return static_cast<int>(basis_.size()); }

    Eigen::Matrix<double, 6, Eigen::Dynamic> matrix() const;
    AlgebraElement project(const AlgebraElement& x) const;
    /// Distance of x / |x| from the subspace.
    double relative_distance(const AlgebraElement& x) const;

private:
    std::vector<AlgebraElement> basis_;
};

/// The generators listed for the class, not orthonormalized.
std::vector<AlgebraElement> catalog_generators(const SubalgebraClass& cls);
Subalgebra catalog_basis(const SubalgebraClass& cls);

/// Smallest bracket-closed subspace containing the generators.
Subalgebra closure(const std::vector<AlgebraElement>& generators, const Tolerances& tol = {});

bool is_closed(const Subalgebra& s, const Tolerances& tol = {});
Subalgebra derived_algebra(const Subalgebra& s, const Tolerances& tol = {});
bool all_nilpotent(const Subalgebra& s, const Tolerances& tol = {});
bool is_solvable(const Subalgebra& s, const Tolerances& tol = {});
/// Killing form of s itself, tr(ad_s(b_i) ad_s(b_j)), in its own basis.
Eigen::MatrixXd killing_form(const Subalgebra& s);
/// Non-degenerate Killing form; false for the zero subalgebra.
bool is_semisimple(const Subalgebra& s, const Tolerances& tol = {});

Subalgebra conjugate(const GroupElement& g, const Subalgebra& s);

/// Largest relative distance of a basis vector of inner from outer.
double inclusion_residual(const Subalgebra& inner, const Subalgebra& outer);

struct Identification {
    SubalgebraClass cls;
    GroupElement witness;  // adjoint(witness, s) == span(catalog_basis(cls))
    double residual = 0.0;
};

/// Identifies s against the catalog. Throws NotASubalgebra when s is not
/// closed or its structure fits no class, UnclassifiableDimension for dim 5.
Identification identify(const Subalgebra& s, const Tolerances& tol = {});

/// Stored arrow inner -> outer: adjoint(witness, catalog span of inner) lies
/// in the catalog span of outer.
struct InclusionEdge {
    SubalgebraClass::Tag inner;
    SubalgebraClass::Tag outer;
    Mat2 witness;
    bool same_lambda = false;  // both parametric, arrow only for equal lambda
};

const std::vector<InclusionEdge>& inclusion_edges();

/// Composed witness along a chain of arrows, if outer contains a conjugate of inner.
std::optional<GroupElement> inclusion_witness(const SubalgebraClass& inner,
                                              const SubalgebraClass& outer);
bool includes(const SubalgebraClass& inner, const SubalgebraClass& outer);

}  // namespace lorentz
