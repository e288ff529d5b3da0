#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lorentz/algebra.hpp"
#include "lorentz/subalgebra.hpp"

namespace lorentz {

/// Closed subgroups of SL(2,C). The first fifteen are the connected groups
/// exp(h) of the subalgebra catalog; the rest add connected components,
/// named after their identity component with the extra indices spelled out.
enum class Family {
    // connected
    H6, H5Lambda, H5Zero, H5Inf, H5N, H4N, H4, H2, H0,
    H3Lambda, H3Plus, H3Minus, H3Zero, H4Inf, H3Inf,
    // over H5^lambda
    H5Lambda_n, H5Lambda_n_eta,
    // over H5^0
    H5Zero_k, H5Zero_k_h, H5Zero_1_h,
    // over H5^inf
    H5Inf_n, H5Inf_n_eta,
    // over H5^N
    H5N_k_h_nu, H5N_k_h_nu_plus, H5N_k_h_plusplus,
    H5N_1_h_0, H5N_1_h_2, H5N_1_h_0plus, H5N_1_h_1plus, H5N_1_h, H5N_1_h_plusplus,
    // over H4^N
    H4N_n, H4N_k_n_eta,
    // over H4, H3^lambda, H3^-, H3^0, H4^inf, H3^inf
    H4_plus, H3Lambda_n, H3Minus_plus, H3Zero_k, H4Inf_plus, H4Inf_plusplus, H3Inf_n,
    // a finite group given by its elements (discrete, identity component trivial)
    H6_finite,
};

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);
const std::vector<Family>& all_families();

/// Parameters of a family; which ones are meaningful depends on the family.
struct SubgroupParams {
    double lambda = 0.0;
    int n = 0;
    double eta = 0.0;
    double k = 0.0;
    double h = 0.0;
    int nu = 0;
};

enum ParamFlag : unsigned {
    kLambda = 1u << 0,
    kN = 1u << 1,
    kEta = 1u << 2,
    kK = 1u << 3,
    kH = 1u << 4,
    kNu = 1u << 5,
};

/// Bitmask of ParamFlag values used by a family.
unsigned family_params(Family f);
/// Human-readable parameter domain, e.g. "k > h >= 1".
std::string_view family_domain(Family f);

class SubgroupDescriptor {
public:
    /// Validates the parameter domain; throws InvalidParameter.
    static SubgroupDescriptor make(Family f, const SubgroupParams& p = {});
    static SubgroupDescriptor connected(const SubalgebraClass& cls);
    /// Finite group generated by the given elements; throws Unsupported when
    /// more than max_order distinct elements appear.
    static SubgroupDescriptor finite(const std::vector<GroupElement>& generators,
                                     std::size_t max_order = 1024, const Tolerances& tol = {});

    Family family() const { return family_; }
    const SubgroupParams& params() const { return params_; }
    const std::vector<GroupElement>& elements() const { return elements_; }

    bool is_connected() const;
    SubalgebraClass identity_class() const;
    SubgroupDescriptor identity_component() const;
    /// e.g. "H5Lambda_n(lambda=0.5,n=4)".
    std::string name() const;

    friend bool operator==(const SubgroupDescriptor& x, const SubgroupDescriptor& y);

private:
    SubgroupDescriptor(Family f, const SubgroupParams& p) : family_(f), params_(p) {}

    Family family_ = Family::H6;
    SubgroupParams params_;
    std::vector<GroupElement> elements_;
};

/// Coset index of a component. Which fields are used depends on the family:
/// m for Z-indexed families, nu for root-of-unity or listed indices, sign
/// for the +- variants, flip for the antidiagonal components.
struct ComponentId {
    long m = 0;
    int nu = 0;
    int sign = 1;
    bool flip = false;

    friend bool operator==(const ComponentId&, const ComponentId&) = default;
};

bool contains(const SubgroupDescriptor& d, const GroupElement& g, const Tolerances& tol = {});

/// Throws NotMember when g is not in d.
ComponentId component_of(const SubgroupDescriptor& d, const GroupElement& g, const Tolerances& tol = {});

/// Coset representative of a component.
GroupElement component_representative(const SubgroupDescriptor& d, const ComponentId& id);

struct Component {
    ComponentId id;
    GroupElement representative;
};

/// Printed representatives; Z-indexed families truncated to |m| <= bound.
std::vector<Component> enumerate_components(const SubgroupDescriptor& d, int bound);

/// Number of connected components, or nullopt when infinite.
std::optional<long> component_count(const SubgroupDescriptor& d);

/// Normalizer in SL(2,C). Throws Unsupported when not determined.
SubgroupDescriptor normalizer(const SubgroupDescriptor& d);

/// Common h with b = (a - 1/a) h for upper-triangular elements, or nullopt
/// when none exists. Throws NotTriangular.
std::optional<std::complex<double>> validate_triangular_discrete(const std::vector<GroupElement>& elements,
                                                                 const Tolerances& tol = {});

bool contains_minus_e(const SubgroupDescriptor& d, const Tolerances& tol = {});

SubgroupDescriptor connected_from_class(const SubalgebraClass& cls);

}  // namespace lorentz
