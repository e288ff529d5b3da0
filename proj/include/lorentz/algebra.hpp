#pragma once

#include <array>
#include <complex>
#include <iosfwd>

#include <Eigen/Core>

#include "lorentz/tolerance.hpp"

namespace lorentz {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;
using Coords6 = Eigen::Matrix<double, 6, 1>;
using AdMatrix = Eigen::Matrix<double, 6, 6>;

/// General complex 2x2 matrix, row-major entries [[a, b], [c, d]].
struct Mat2 {
    Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

    static Mat2 identity() { return {}; }
    static Mat2 zero() { return {0.0, 0.0, 0.0, 0.0}; }
    static Mat2 diag(Complex x, Complex y) { return {x, 0.0, 0.0, y}; }

    Complex det() const { return a * d - b * c; }
    Complex trace() const { return a + d; }
    Mat2 dagger() const { return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }
    /// Inverse for a general invertible matrix.
    Mat2 inverse() const;
    double norm() const;  // Frobenius
    bool finite() const;

    Mat2& operator+=(const Mat2& o);
    Mat2& operator-=(const Mat2& o);
    Mat2& operator*=(Complex s);
};

Mat2 operator+(Mat2 x, const Mat2& y);
Mat2 operator-(Mat2 x, const Mat2& y);
Mat2 operator-(const Mat2& x);
Mat2 operator*(const Mat2& x, const Mat2& y);
Mat2 operator*(Complex s, Mat2 x);
Mat2 operator*(Mat2 x, Complex s);
std::ostream& operator<<(std::ostream& os, const Mat2& m);

/// Pauli matrices sigma_0 = e, sigma_1..3.
Mat2 pauli(int k);

/// Element alpha_r M_r + beta_r L_r of sl(2,C), as a real 6-vector.
struct AlgebraElement {
    Vec3 alpha{0.0, 0.0, 0.0};
    Vec3 beta{0.0, 0.0, 0.0};

    static AlgebraElement M(int r);  // r = 1, 2, 3
    static AlgebraElement L(int r);
    static AlgebraElement from_coords(const Coords6& v);

    /// Coordinates in the basis order (M1, M2, M3, L1, L2, L3).
    Coords6 coords() const;
    double norm() const;

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    AlgebraElement& operator*=(double s);
};

AlgebraElement operator+(AlgebraElement x, const AlgebraElement& y);
AlgebraElement operator-(AlgebraElement x, const AlgebraElement& y);
AlgebraElement operator-(AlgebraElement x);
AlgebraElement operator*(double s, AlgebraElement x);
AlgebraElement operator*(AlgebraElement x, double s);
std::ostream& operator<<(std::ostream& os, const AlgebraElement& x);

double distance(const AlgebraElement& x, const AlgebraElement& y);

/// Unimodular complex 2x2 matrix. The determinant is checked on construction.
class GroupElement {
public:
    GroupElement() = default;
    explicit GroupElement(const Mat2& m, const Tolerances& tol = {});

    /// Rescales an invertible matrix by a square root of its determinant.
    static GroupElement normalized(const Mat2& m);
    static GroupElement identity() { return {}; }
    static GroupElement minus_identity();

    const Mat2& matrix() const { return m_; }
    GroupElement inverse() const;

    friend GroupElement operator*(const GroupElement& g, const GroupElement& h);

private:
    struct Unchecked {};
    GroupElement(const Mat2& m, Unchecked) : m_(m) {}

    Mat2 m_;
};

std::ostream& operator<<(std::ostream& os, const GroupElement& g);

struct Invariants {
    double c1 = 0.0;  // |alpha|^2 - |beta|^2
    double c2 = 0.0;  // alpha . beta
};

enum class BasisName { M1, M2, M3, L1, L2, L3 };

/// Matrix of a basis element: L_r = sigma_r, M_r = -i sigma_r.
Mat2 basis(BasisName name);
AlgebraElement basis_element(BasisName name);

Mat2 to_matrix(const AlgebraElement& x);
/// Throws NonTraceless when |trace m| exceeds tol.alg * (1 + |m|).
AlgebraElement from_matrix(const Mat2& m, const Tolerances& tol = {});

/// Lie bracket with the structure constants
///   [M_r, M_s] = e_rst M_t, [M_r, L_s] = e_rst L_t, [L_r, L_s] = -e_rst M_t.
/// In the matrix realization this is half the commutator.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

Invariants invariants(const AlgebraElement& x);

/// Adjoint action x -> g x g^-1.
AlgebraElement adjoint(const GroupElement& g, const AlgebraElement& x);

/// Matrix of y -> [x, y] in the (M1, M2, M3, L1, L2, L3) basis.
AdMatrix ad_operator(const AlgebraElement& x);

/// exp(to_matrix(x)), evaluated in closed form via X^2 = -det(X) e.
GroupElement exp(const AlgebraElement& x);

inline GroupElement group_mul(const GroupElement& g, const GroupElement& h) { return g * h; }
inline GroupElement group_inv(const GroupElement& g) { return g.inverse(); }

}  // namespace lorentz
