#include "lorentz/algebra.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "lorentz/error.hpp"

namespace lorentz {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonTraceless: return "NonTraceless";
        case ErrorCode::NotUnimodular: return "NotUnimodular";
        case ErrorCode::NonFinite: return "NonFinite";
        case ErrorCode::ZeroElement: return "ZeroElement";
        case ErrorCode::DegenerateInput: return "DegenerateInput";
        case ErrorCode::NotASubalgebra: return "NotASubalgebra";
        case ErrorCode::UnclassifiableDimension: return "UnclassifiableDimension";
        case ErrorCode::InvalidParameter: return "InvalidParameter";
        case ErrorCode::NotMember: return "NotMember";
        case ErrorCode::NotTriangular: return "NotTriangular";
        case ErrorCode::Unsupported: return "Unsupported";
        case ErrorCode::UnsupportedS: return "UnsupportedS";
        case ErrorCode::ZeroVector: return "ZeroVector";
        case ErrorCode::ZeroSpinor: return "ZeroSpinor";
        case ErrorCode::Parse: return "Parse";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// Mat2

Mat2 Mat2::inverse() const {
    const Complex det_m = det();
    if (std::abs(det_m) == 0.0) {
        throw Error(ErrorCode::NotUnimodular, "singular 2x2 matrix has no inverse");
    }
    return {d / det_m, -b / det_m, -c / det_m, a / det_m};
}

double Mat2::norm() const {
    return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
}

bool Mat2::finite() const {
    auto ok = [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
    return ok(a) && ok(b) && ok(c) && ok(d);
}

Mat2& Mat2::operator+=(const Mat2& o) {
    a += o.a; b += o.b; c += o.c; d += o.d;
    return *this;
}

Mat2& Mat2::operator-=(const Mat2& o) {
    a -= o.a; b -= o.b; c -= o.c; d -= o.d;
    return *this;
}

Mat2& Mat2::operator*=(Complex s) {
    a *= s; b *= s; c *= s; d *= s;
    return *this;
}

Mat2 operator+(Mat2 x, const Mat2& y) { return x += y; }
Mat2 operator-(Mat2 x, const Mat2& y) { return x -= y; }
Mat2 operator-(const Mat2& x) { return {-x.a, -x.b, -x.c, -x.d}; }
Mat2 operator*(Complex s, Mat2 x) { return x *= s; }
Mat2 operator*(Mat2 x, Complex s) { return x *= s; }

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
    return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
}

Mat2 pauli(int k) {
    constexpr Complex i{0.0, 1.0};
    switch (k) {
        case 0: return Mat2::identity();
        case 1: return {0.0, 1.0, 1.0, 0.0};
        case 2: return {0.0, -i, i, 0.0};
        case 3: return {1.0, 0.0, 0.0, -1.0};
        default: throw Error(ErrorCode::InvalidParameter, "pauli index must be 0..3");
    }
}

// ---------------------------------------------------------------------------
// AlgebraElement

AlgebraElement AlgebraElement::M(int r) {
    if (r < 1 || r > 3) throw Error(ErrorCode::InvalidParameter, "basis index must be 1..3");
    AlgebraElement x;
    x.alpha[r - 1] = 1.0;
    return x;
}

AlgebraElement AlgebraElement::L(int r) {
    if (r < 1 || r > 3) throw Error(ErrorCode::InvalidParameter, "basis index must be 1..3");
    AlgebraElement x;
    x.beta[r - 1] = 1.0;
    return x;
}

AlgebraElement AlgebraElement::from_coords(const Coords6& v) {
    return {{v(0), v(1), v(2)}, {v(3), v(4), v(5)}};
}

Coords6 AlgebraElement::coords() const {
    Coords6 v;
    v << alpha[0], alpha[1], alpha[2], beta[0], beta[1], beta[2];
    return v;
}

double AlgebraElement::norm() const { return coords().norm(); }

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    for (int r = 0; r < 3; ++r) {
        alpha[r] += o.alpha[r];
        beta[r] += o.beta[r];
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    for (int r = 0; r < 3; ++r) {
        alpha[r] -= o.alpha[r];
        beta[r] -= o.beta[r];
    }
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(double s) {
    for (int r = 0; r < 3; ++r) {
        alpha[r] *= s;
        beta[r] *= s;
    }
    return *this;
}

AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y) { return x += y; }
AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y) { return x -= y; }
AlgebraElement operator-(AlgebraElement x) { return x *= -1.0; }
AlgebraElement operator*(double s, AlgebraElement x) { return x *= s; }
AlgebraElement operator*(AlgebraElement x, double s) { return x *= s; }

std::ostream& operator<<(std::ostream& os, const AlgebraElement& x) {
    return os << "alpha=(" << x.alpha[0] << ", " << x.alpha[1] << ", " << x.alpha[2]
              << ") beta=(" << x.beta[0] << ", " << x.beta[1] << ", " << x.beta[2] << ")";
}

double distance(const AlgebraElement& x, const AlgebraElement& y) { return (x - y).norm(); }

// ---------------------------------------------------------------------------
// GroupElement

GroupElement::GroupElement(const Mat2& m, const Tolerances& tol) : m_(m) {
    if (!m.finite()) throw Error(ErrorCode::NonFinite, "group element has non-finite entries");
    if (std::abs(m.det() - 1.0) > tol.det) {
        throw Error(ErrorCode::NotUnimodular, "matrix determinant differs from 1");
    }
}

GroupElement GroupElement::normalized(const Mat2& m) {
    if (!m.finite()) throw Error(ErrorCode::NonFinite, "group element has non-finite entries");
    const Complex det_m = m.det();
    if (std::abs(det_m) == 0.0) throw Error(ErrorCode::NotUnimodular, "singular matrix");
    // det of a large matrix cancels badly; when it is 1 up to that rounding,
    // rescaling would only add error.
    const double floor = 64.0 * std::numeric_limits<double>::epsilon() * m.norm() * m.norm();
    if (std::abs(det_m - 1.0) <= floor) return {m, Unchecked{}};
    return {m * (1.0 / std::sqrt(det_m)), Unchecked{}};
}

GroupElement GroupElement::minus_identity() { return {-Mat2::identity(), Unchecked{}}; }

GroupElement GroupElement::inverse() const {
    return {{m_.d, -m_.b, -m_.c, m_.a}, Unchecked{}};
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
    return {g.m_ * h.m_, GroupElement::Unchecked{}};
}

std::ostream& operator<<(std::ostream& os, const GroupElement& g) { return os << g.matrix(); }

// ---------------------------------------------------------------------------
// Matrix realization

Mat2 basis(BasisName name) { return to_matrix(basis_element(name)); }

AlgebraElement basis_element(BasisName name) {
    switch (name) {
        case BasisName::M1: return AlgebraElement::M(1);
        case BasisName::M2: return AlgebraElement::M(2);
        case BasisName::M3: return AlgebraElement::M(3);
        case BasisName::L1: return AlgebraElement::L(1);
        case BasisName::L2: return AlgebraElement::L(2);
        case BasisName::L3: return AlgebraElement::L(3);
    }
    return {};
}

// alpha_r M_r + beta_r L_r = w_r sigma_r with w_r = beta_r - i alpha_r.
Mat2 to_matrix(const AlgebraElement& x) {
    const Complex w1{x.beta[0], -x.alpha[0]};
    const Complex w2{x.beta[1], -x.alpha[1]};
    const Complex w3{x.beta[2], -x.alpha[2]};
    constexpr Complex i{0.0, 1.0};
    return {w3, w1 - i * w2, w1 + i * w2, -w3};
}

AlgebraElement from_matrix(const Mat2& m, const Tolerances& tol) {
    if (std::abs(m.trace()) > tol.alg * (1.0 + m.norm())) {
        throw Error(ErrorCode::NonTraceless, "matrix is not traceless");
    }
    constexpr Complex i{0.0, 1.0};
    const Complex w1 = 0.5 * (m.b + m.c);
    const Complex w2 = (m.c - m.b) / (2.0 * i);
    const Complex w3 = 0.5 * (m.a - m.d);
    return {{-w1.imag(), -w2.imag(), -w3.imag()}, {w1.real(), w2.real(), w3.real()}};
}

namespace {

Vec3 cross(const Vec3& u, const Vec3& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

double dot(const Vec3& u, const Vec3& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

}  // namespace

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
    // [a.M + b.L, c.M + d.L] = (a x c - b x d).M + (a x d + b x c).L
    const Vec3 ac = cross(x.alpha, y.alpha);
    const Vec3 bd = cross(x.beta, y.beta);
    const Vec3 ad = cross(x.alpha, y.beta);
    const Vec3 bc = cross(x.beta, y.alpha);
    AlgebraElement out;
    for (int r = 0; r < 3; ++r) {
        out.alpha[r] = ac[r] - bd[r];
        out.beta[r] = ad[r] + bc[r];
    }
    return out;
}

Invariants invariants(const AlgebraElement& x) {
    return {dot(x.alpha, x.alpha) - dot(x.beta, x.beta), dot(x.alpha, x.beta)};
}

AlgebraElement adjoint(const GroupElement& g, const AlgebraElement& x) {
    const Mat2& m = g.matrix();
    const Mat2 m_inv{m.d, -m.b, -m.c, m.a};
    Mat2 y = m * to_matrix(x) * m_inv;
    // Exact tracelessness; the residual trace is pure rounding.
    const Complex half_trace = 0.5 * y.trace();
    y.a -= half_trace;
    y.d -= half_trace;
    return from_matrix(y, Tolerances::uniform(1.0));
}

AdMatrix ad_operator(const AlgebraElement& x) {
    AdMatrix ad;
    for (int j = 0; j < 6; ++j) {
        Coords6 e = Coords6::Zero();
        e(j) = 1.0;
        ad.col(j) = bracket(x, AlgebraElement::from_coords(e)).coords();
    }
    return ad;
}

GroupElement exp(const AlgebraElement& x) {
    const Mat2 m = to_matrix(x);
    const Complex q = -m.det();  // m^2 = q e
    Complex c_part;
    Complex s_part;  // sinh(r)/r with r^2 = q
    if (std::abs(q) < 1e-8) {
        // Series in q: cosh r = sum q^k/(2k)!, sinh r / r = sum q^k/(2k+1)!
        c_part = 1.0;
        s_part = 1.0;
        Complex term_c = 1.0;
        Complex term_s = 1.0;
        for (int k = 1; k <= 4; ++k) {
            term_c *= q / static_cast<double>((2 * k - 1) * (2 * k));
            term_s *= q / static_cast<double>((2 * k) * (2 * k + 1));
            c_part += term_c;
            s_part += term_s;
        }
    } else {
        const Complex r = std::sqrt(q);
        c_part = std::cosh(r);
        s_part = std::sinh(r) / r;
    }
    return GroupElement::normalized(c_part * Mat2::identity() + s_part * m);
}

}  // namespace lorentz
