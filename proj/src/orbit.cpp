#include "lorentz/orbit.hpp"

#include <cmath>
#include <limits>

#include "lorentz/error.hpp"

namespace lorentz {

std::string_view to_string(ElementClass::Tag tag) {
    switch (tag) {
        case ElementClass::Tag::Zero: return "zero";
        case ElementClass::Tag::Rotation: return "rotation";
        case ElementClass::Tag::Boost: return "boost";
        case ElementClass::Tag::Mixed: return "mixed";
        case ElementClass::Tag::Nilpotent: return "nilpotent";
    }
    return "unknown";
}

ElementClass classify_element(const AlgebraElement& x, const Tolerances& tol) {
    using Tag = ElementClass::Tag;
    const double norm = x.norm();
    if (norm <= tol.alg) return {Tag::Zero, 0.0, 0.0};

    const auto [c1, c2] = invariants(x);
    const double scale = 1.0 + norm * norm;
    if (std::abs(c1) <= tol.cls * scale && std::abs(c2) <= tol.cls * scale) {
        return {Tag::Nilpotent, 0.0, 0.0};
    }

    // c2 is compared against c1 (a conjugation-invariant ratio) plus the
    // rounding floor of evaluating alpha . beta.
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * norm * norm;
    if (std::abs(c2) <= tol.cls * std::abs(c1) + floor) {
        if (c1 > 0.0) return {Tag::Rotation, std::sqrt(c1), 0.0};
        return {Tag::Boost, 0.0, std::sqrt(-c1)};
    }

    // det(to_matrix(x)) = c1 + 2i c2 = (mu + i nu)^2, principal root has mu > 0.
    const Complex root = std::sqrt(Complex{c1, 2.0 * c2});
    return {Tag::Mixed, root.real(), root.imag()};
}

AlgebraElement representative(const ElementClass& cls) {
    using Tag = ElementClass::Tag;
    switch (cls.tag) {
        case Tag::Zero: return {};
        case Tag::Nilpotent: return AlgebraElement::M(1) + AlgebraElement::L(2);
        case Tag::Rotation:
        case Tag::Boost:
        case Tag::Mixed: return cls.mu * AlgebraElement::M(3) + cls.nu * AlgebraElement::L(3);
    }
    return {};
}

namespace {

struct Spinor2 {
    Complex x, y;
    double norm() const { return std::sqrt(std::norm(x) + std::norm(y)); }
};

// Null vector of the singular 2x2 matrix [[a, b], [c, d]], picking the
// better-conditioned of the two row-based candidates.
Spinor2 null_vector(Complex a, Complex b, Complex c, Complex d) {
    const Spinor2 from_row1{b, -a};
    const Spinor2 from_row2{d, -c};
    return from_row1.norm() >= from_row2.norm() ? from_row1 : from_row2;
}

// Eigenvector of the traceless matrix m for eigenvalue lambda.
Spinor2 eigenvector(const Mat2& m, Complex lambda) {
    return null_vector(m.a - lambda, m.b, m.c, m.d - lambda);
}

// Unitary, unimodular matrix whose first column is v / |v|.
Mat2 unitary_completion(const Spinor2& v) {
    const double n = v.norm();
    const Complex x = v.x / n;
    const Complex y = v.y / n;
    return {x, -std::conj(y), y, std::conj(x)};
}

}  // namespace

OrbitReport canonical_form(const AlgebraElement& x, const Tolerances& tol) {
    const ElementClass cls = classify_element(x, tol);
    if (cls.tag == ElementClass::Tag::Zero) {
        throw Error(ErrorCode::ZeroElement, "canonical_form of the zero element");
    }
    const Mat2 m = to_matrix(x);
    const AlgebraElement rep = representative(cls);

    GroupElement conj;
    if (cls.semisimple()) {
        // Representative matrix is diag(kappa, -kappa), kappa = nu - i mu.
        const Complex kappa{cls.nu, -cls.mu};
        // Use the exact eigenvalue of m nearest to kappa for the eigenvectors.
        Complex root = std::sqrt(-m.det());
        if (std::abs(root - kappa) > std::abs(root + kappa)) root = -root;
        const Spinor2 vp = eigenvector(m, root);
        const Spinor2 vm = eigenvector(m, -root);
        Mat2 p{vp.x / vp.norm(), vm.x / vm.norm(), vp.y / vp.norm(), vm.y / vm.norm()};
        p *= 1.0 / std::sqrt(p.det());
        conj = GroupElement::normalized(p.inverse());
    } else {
        // Nilpotent: send the kernel line to (1, 0), then rescale the
        // remaining upper-right entry to -2i, the matrix of M1 + L2.
        const Spinor2 k = null_vector(m.a, m.b, m.c, m.d);
        const Mat2 p = unitary_completion(k);
        const Mat2 p_inv = p.dagger();
        const Mat2 t = p_inv * m * p;
        const Complex s = std::sqrt(Complex{0.0, -2.0} / t.b);
        conj = GroupElement::normalized(Mat2::diag(s, 1.0 / s) * p_inv);
    }
    return {cls, rep, conj, invariants(x)};
}

double canonical_residual(const AlgebraElement& x, const OrbitReport& report) {
    return distance(adjoint(report.conjugator, x), report.representative);
}

std::vector<Eigenpair> adjoint_spectrum(double mu, double nu) {
    if (mu == 0.0 && nu == 0.0) {
        throw Error(ErrorCode::DegenerateInput, "adjoint_spectrum needs (mu, nu) != (0, 0)");
    }
    constexpr Complex i{0.0, 1.0};
    auto vec = [](Complex m1, Complex m2, Complex m3, Complex l1, Complex l2, Complex l3) {
        ComplexCoords6 v;
        v << m1, m2, m3, l1, l2, l3;
        return v;
    };
    return {
        {0.0, vec(0, 0, 1, 0, 0, 0)},
        {0.0, vec(0, 0, 0, 0, 0, 1)},
        {i * mu + nu, vec(1, -i, 0, i, 1, 0)},    // M1 + L2 - iM2 + iL1
        {-i * mu + nu, vec(1, i, 0, -i, 1, 0)},   // M1 + L2 + iM2 - iL1
        {i * mu - nu, vec(1, -i, 0, -i, -1, 0)},  // M1 - L2 - iM2 - iL1
        {-i * mu - nu, vec(1, i, 0, i, -1, 0)},   // M1 - L2 + iM2 + iL1
    };
}

}  // namespace lorentz
