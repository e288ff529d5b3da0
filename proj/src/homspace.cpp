#include "lorentz/homspace.hpp"

#include <cmath>

#include "lorentz/error.hpp"
#include "lorentz/orbit.hpp"

namespace lorentz {

using Tag = SubalgebraClass::Tag;

namespace {

constexpr Complex kI{0.0, 1.0};

// Unitary, unimodular matrix with first column (x, y) / |(x, y)|.
Mat2 unitary_with_column(Complex x, Complex y) {
    const double n = std::sqrt(std::norm(x) + std::norm(y));
    x /= n;
    y /= n;
    return {x, -std::conj(y), y, std::conj(x)};
}

}  // namespace

Mat2 FourVector::matrix() const { return {x0 + x3, Complex{x1, -x2}, Complex{x1, x2}, x0 - x3}; }

FourVector FourVector::from_matrix(const Mat2& m) {
    return {0.5 * (m.a + m.d).real(), 0.5 * (m.b + m.c).real(), 0.5 * (m.c - m.b).imag(), 0.5 * (m.a - m.d).real()};
}

double FourVector::minkowski_norm() const { return x0 * x0 - x1 * x1 - x2 * x2 - x3 * x3; }

double FourVector::norm() const { return std::sqrt(x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3); }

FourVector act_fourvector(const GroupElement& g, const FourVector& x) {
    const Mat2& m = g.matrix();
    return FourVector::from_matrix(m * x.matrix() * m.dagger());
}

std::string SpaceLabel::name() const {
    std::string n = stabilizer.name();
    return "Pi" + n.substr(1);
}

SpaceLabel space_label(const SubgroupDescriptor& stabilizer) { return {stabilizer}; }

bool contains(const ConjugateSubgroup& s, const GroupElement& g, const Tolerances& tol) {
    return contains(s.descriptor, s.conjugator * g * s.conjugator.inverse(), tol);
}

std::string_view to_string(FourVectorOrbit::Tag tag) {
    switch (tag) {
        case FourVectorOrbit::Tag::Zero: return "zero";
        case FourVectorOrbit::Tag::TimelikeFuture: return "timelike-future";
        case FourVectorOrbit::Tag::TimelikePast: return "timelike-past";
        case FourVectorOrbit::Tag::Lightlike: return "lightlike";
        case FourVectorOrbit::Tag::Spacelike: return "spacelike";
    }
    return "unknown";
}

FourVector orbit_representative(FourVectorOrbit::Tag tag) {
    switch (tag) {
        case FourVectorOrbit::Tag::TimelikeFuture:
        case FourVectorOrbit::Tag::TimelikePast: return {1.0, 0.0, 0.0, 0.0};
        case FourVectorOrbit::Tag::Lightlike: return {1.0, 0.0, 0.0, 1.0};
        case FourVectorOrbit::Tag::Spacelike: return {0.0, 0.0, 0.0, 1.0};
        case FourVectorOrbit::Tag::Zero: break;
    }
    return {};
}

namespace {

FourVectorOrbit orbit_of(const FourVector& x, const Tolerances& tol) {
    using OTag = FourVectorOrbit::Tag;
    const double n = x.norm();
    if (n <= tol.alg) throw Error(ErrorCode::ZeroVector, "four-vector is zero");
    const double det = x.minkowski_norm();
    if (std::abs(det) <= tol.cls * n * n) return {OTag::Lightlike, x.x0 > 0.0 ? 1 : -1, x.x0};
    if (det > 0.0) {
        const double s = std::sqrt(det);
        return x.x0 > 0.0 ? FourVectorOrbit{OTag::TimelikeFuture, 0, s} : FourVectorOrbit{OTag::TimelikePast, 0, -s};
    }
    return {OTag::Spacelike, 0, std::sqrt(-det)};
}

SubgroupDescriptor stabilizer_of(FourVectorOrbit::Tag tag) {
    switch (tag) {
        case FourVectorOrbit::Tag::TimelikeFuture:
        case FourVectorOrbit::Tag::TimelikePast: return SubgroupDescriptor::make(Family::H3Plus);
        case FourVectorOrbit::Tag::Lightlike: return SubgroupDescriptor::make(Family::H3Zero);
        default: return SubgroupDescriptor::make(Family::H3Minus);
    }
}

}  // namespace

FourVectorReport classify_fourvector(const FourVector& x, const Tolerances& tol) {
    using OTag = FourVectorOrbit::Tag;
    const FourVectorOrbit orbit = orbit_of(x, tol);
    const Mat2 m = x.matrix();

    Mat2 w;
    if (orbit.tag == OTag::TimelikeFuture || orbit.tag == OTag::TimelikePast) {
        // y = +-x is positive definite; w = s^(1/2) y^(-1/2) gives w y w^+ = s e.
        const double s = std::abs(orbit.scale);
        const Mat2 y = (orbit.scale > 0.0 ? 1.0 : -1.0) * m;
        const Mat2 root = (1.0 / std::sqrt(y.trace().real() + 2.0 * s)) * (y + s * Mat2::identity());
        w = std::sqrt(s) * root.inverse();
    } else if (orbit.tag == OTag::Spacelike) {
        // m = u diag(l+, l-) u^+ with l+ > 0 > l-.
        const double p = m.a.real();
        const double r = m.d.real();
        const Complex q = m.b;
        const double mean = 0.5 * (p + r);
        const double half = std::sqrt(0.25 * (p - r) * (p - r) + std::norm(q));
        const double lp = mean + half;
        const double lm = mean - half;
        const Complex ax = q, ay = lp - p;
        const Complex bx = lp - r, by = std::conj(q);
        const bool first = std::norm(ax) + std::norm(ay) >= std::norm(bx) + std::norm(by);
        const Mat2 u = first ? unitary_with_column(ax, ay) : unitary_with_column(bx, by);
        const double s = orbit.scale;
        w = Mat2::diag(std::sqrt(s / lp), std::sqrt(s / -lm)) * u.dagger();
    } else {
        // +-m = v v^+; rotate v onto (|v|, 0).
        const Mat2 y = static_cast<double>(orbit.cone) * m;
        const Mat2 u = y.a.real() >= y.d.real() ? unitary_with_column(y.a, y.c) : unitary_with_column(y.b, y.d);
        w = u.dagger();
    }
    const SubgroupDescriptor stab = stabilizer_of(orbit.tag);
    return {orbit, stab, space_label(stab), GroupElement::normalized(w)};
}

VelocityReport classify_velocity(const FourVector& x, const Tolerances& tol) {
    const FourVectorOrbit orbit = orbit_of(x, tol);
    SubgroupDescriptor stab = SubgroupDescriptor::make(Family::H2);
    if (orbit.tag == FourVectorOrbit::Tag::TimelikeFuture || orbit.tag == FourVectorOrbit::Tag::TimelikePast) {
        stab = SubgroupDescriptor::make(Family::H3Plus);
    } else if (orbit.tag == FourVectorOrbit::Tag::Spacelike) {
        stab = SubgroupDescriptor::make(Family::H3Minus_plus);
    }
    return {orbit.tag, stab, space_label(stab)};
}

std::optional<double> velocity_scale(const GroupElement& h, const FourVector& x, const Tolerances& tol) {
    const FourVector y = act_fourvector(h, x);
    const double xx = x.x0 * x.x0 + x.x1 * x.x1 + x.x2 * x.x2 + x.x3 * x.x3;
    if (xx == 0.0) throw Error(ErrorCode::ZeroVector, "four-vector is zero");
    const double c = (y.x0 * x.x0 + y.x1 * x.x1 + y.x2 * x.x2 + y.x3 * x.x3) / xx;
    const FourVector r{y.x0 - c * x.x0, y.x1 - c * x.x1, y.x2 - c * x.x2, y.x3 - c * x.x3};
    if (r.norm() > tol.member * (1.0 + y.norm())) return std::nullopt;
    return c;
}

double Spinor::norm() const { return std::sqrt(std::norm(z1) + std::norm(z2)); }

Spinor act_spinor(const GroupElement& g, const Spinor& z) {
    const Mat2& m = g.matrix();
    return {m.a * z.z1 + m.b * z.z2, m.c * z.z1 + m.d * z.z2};
}

Spinor act_celestial(const GroupElement& g, const Spinor& p) {
    if (p.norm() == 0.0) throw Error(ErrorCode::ZeroSpinor, "spinor is zero");
    const Spinor q = act_spinor(g, p);
    const double n = q.norm();
    return {q.z1 / n, q.z2 / n};
}

bool same_ray(const Spinor& p, const Spinor& q, double tol) {
    return std::abs(p.z1 * q.z2 - p.z2 * q.z1) <= tol * p.norm() * q.norm();
}

SubgroupDescriptor spinor_stabilizer(const MultiplicativeGroup& s) {
    using Kind = MultiplicativeGroup::Kind;
    const bool spiral_ok = std::isfinite(s.lambda) && s.lambda != 0.0;
    SubgroupParams p;
    p.lambda = s.lambda;
    p.n = s.n;
    switch (s.kind) {
        case Kind::Trivial: return SubgroupDescriptor::make(Family::H4N);
        case Kind::UnitCircle: return SubgroupDescriptor::make(Family::H3Zero);
        case Kind::PositiveReals: return SubgroupDescriptor::make(Family::H3Inf);
        case Kind::NonzeroComplex: return SubgroupDescriptor::make(Family::H2);
        case Kind::Spiral:
            if (spiral_ok) return SubgroupDescriptor::make(Family::H3Lambda, p);
            break;
        case Kind::SpiralRoots:
            if (spiral_ok && s.n >= 2) return SubgroupDescriptor::make(Family::H3Lambda_n, p);
            break;
        case Kind::PositiveRealRoots:
            if (s.n >= 2) return SubgroupDescriptor::make(Family::H3Inf_n, p);
            break;
        case Kind::RootsOfUnity:
            if (s.n >= 2) return SubgroupDescriptor::make(Family::H4N_n, p);
            break;
    }
    throw Error(ErrorCode::UnsupportedS, "unsupported multiplicative group parameters");
}

FourVector lightcone_from_spinor(const Spinor& z) {
    if (z.norm() == 0.0) throw Error(ErrorCode::ZeroSpinor, "spinor is zero");
    const Mat2 outer{std::norm(z.z1), z.z1 * std::conj(z.z2), z.z2 * std::conj(z.z1), std::norm(z.z2)};
    return FourVector::from_matrix(outer);
}

GroupElement su2_transport(const Spinor& z, const Spinor& w) {
    if (z.norm() == 0.0 || w.norm() == 0.0) throw Error(ErrorCode::ZeroSpinor, "spinor is zero");
    const Mat2 uz = unitary_with_column(z.z1, z.z2);
    const Mat2 uw = unitary_with_column(w.z1, w.z2);
    return GroupElement::normalized(uw * uz.dagger());
}

SpaceLabel adjoint_orbit_label(const AlgebraElement& x, const Tolerances& tol) {
    const ElementClass cls = classify_element(x, tol);
    if (cls.tag == ElementClass::Tag::Zero) throw Error(ErrorCode::ZeroElement, "zero algebra element");
    if (cls.semisimple()) return space_label(SubgroupDescriptor::make(Family::H4));
    SubgroupParams p;
    p.n = 2;
    return space_label(SubgroupDescriptor::make(Family::H4N_n, p));
}

std::string_view to_string(CovariantMapAnswer::Kind kind) {
    switch (kind) {
        case CovariantMapAnswer::Kind::None: return "none";
        case CovariantMapAnswer::Kind::UniqueInclusionLike: return "unique";
        case CovariantMapAnswer::Kind::Multiple: return "multiple";
    }
    return "unknown";
}

namespace {

// Identity component contains H4N: the off-diagonal entry is free.
bool free_triangular(Tag t) {
    return t == Tag::H4N || t == Tag::H3Lambda || t == Tag::H3Zero || t == Tag::H3Inf || t == Tag::H2;
}

CovariantMapAnswer unresolved(std::string reason) {
    return {CovariantMapAnswer::Kind::Multiple, std::move(reason), std::nullopt, false};
}

}  // namespace

CovariantMapAnswer covariant_map_exists(const SubgroupDescriptor& h, const SubgroupDescriptor& h_prime) {
    using Kind = CovariantMapAnswer::Kind;
    if (h.family() == Family::H6_finite || h_prime.family() == Family::H6_finite) {
        throw Error(ErrorCode::Unsupported, "covariant maps between user-supplied finite groups");
    }
    const SubalgebraClass inner = h.identity_class();
    const SubalgebraClass outer = h_prime.identity_class();
    if (!includes(inner, outer)) {
        return {Kind::None, "no conjugate of the subalgebra of H lies in that of H'", std::nullopt, true};
    }
    if (inner.dim() == outer.dim()) {
        // A conjugate of H inside H' has the same identity component, so the
        // component group of H must embed in that of H'.
        const auto ch = component_count(h);
        const auto chp = component_count(h_prime);
        if (chp && (!ch || *ch > *chp)) {
            return {Kind::None, "H has more components than H'", std::nullopt, true};
        }
    }

    if (h == h_prime) {
        SubgroupDescriptor n = h;
        try {
            n = normalizer(h);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::Unsupported) throw;
            return unresolved("automorphisms: normalizer not determined");
        }
        if (n == h) return {Kind::UniqueInclusionLike, "trivial automorphism only (N = H)", 1, true};
        if (n.identity_class().dim() > h.identity_class().dim()) {
            return {Kind::Multiple, "automorphisms: N/H is a continuous group", std::nullopt, true};
        }
        const auto cn = component_count(n);
        const auto ch = component_count(h);
        if (cn && ch) {
            const long k = *cn / *ch;
            return {Kind::Multiple, "automorphisms: N/H has " + std::to_string(k) + " elements", k, true};
        }
        return {Kind::Multiple, "automorphisms: N/H is infinite", std::nullopt, true};
    }

    if (h.is_connected() && h_prime.identity_component() == h) {
        if (normalizer(h) == h_prime) return {Kind::UniqueInclusionLike, "covering (N(H) = H')", 1, true};
        return unresolved("covering; N(H) differs from H'");
    }

    if (h_prime.family() == Family::H2 && free_triangular(inner.tag)) {
        return {Kind::UniqueInclusionLike, "inclusion into H2", 1, true};
    }
    return unresolved("maps exist, count not determined");
}

}  // namespace lorentz
