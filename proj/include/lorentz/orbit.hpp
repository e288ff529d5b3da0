#pragma once

#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "lorentz/algebra.hpp"

namespace lorentz {

/// Adjoint orbit type of an element, with the (mu, nu) of its representative.
struct ElementClass {
    enum class Tag { Zero, Rotation, Boost, Mixed, Nilpotent };

    Tag tag = Tag::Zero;
    double mu = 0.0;
    double nu = 0.0;

    bool semisimple() const { return tag == Tag::Rotation || tag == Tag::Boost || tag == Tag::Mixed; }
};

std::string_view to_string(ElementClass::Tag tag);

/// Result of canonical_form: adjoint(conjugator, input) == representative.
struct OrbitReport {
    ElementClass element_class;
    AlgebraElement representative;
    GroupElement conjugator;
    Invariants invariants;
};

ElementClass classify_element(const AlgebraElement& x, const Tolerances& tol = {});

/// Representative of the orbit: mu M3 + nu L3, mu M3, nu L3, or M1 + L2.
AlgebraElement representative(const ElementClass& cls);

/// Conjugates x to its representative. Throws ZeroElement for x = 0.
OrbitReport canonical_form(const AlgebraElement& x, const Tolerances& tol = {});

/// |adjoint(report.conjugator, x) - report.representative|.
double canonical_residual(const AlgebraElement& x, const OrbitReport& report);

using ComplexCoords6 = Eigen::Matrix<std::complex<double>, 6, 1>;

struct Eigenpair {
    std::complex<double> value;
    ComplexCoords6 vector;
};

/// The six eigenpairs of [mu M3 + nu L3, .] on the complexified algebra,
/// with the eigenvectors M3, L3, M1 + L2 -+ i(M2 - L1), M1 - L2 -+ i(M2 + L1).
std::vector<Eigenpair> adjoint_spectrum(double mu, double nu);

}  // namespace lorentz
