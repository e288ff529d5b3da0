#include "lorentz/subalgebra.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "lorentz/error.hpp"
#include "lorentz/orbit.hpp"

namespace lorentz {

using Tag = SubalgebraClass::Tag;

namespace {

constexpr std::array<std::pair<Tag, std::string_view>, 15> kTagNames{{
    {Tag::H6, "H6"},
    {Tag::H5Lambda, "H5Lambda"},
    {Tag::H5Zero, "H5Zero"},
    {Tag::H5Inf, "H5Inf"},
    {Tag::H5N, "H5N"},
    {Tag::H4N, "H4N"},
    {Tag::H4, "H4"},
    {Tag::H2, "H2"},
    {Tag::H0, "H0"},
    {Tag::H3Lambda, "H3Lambda"},
    {Tag::H3Plus, "H3Plus"},
    {Tag::H3Minus, "H3Minus"},
    {Tag::H3Zero, "H3Zero"},
    {Tag::H4Inf, "H4Inf"},
    {Tag::H3Inf, "H3Inf"},
}};

AlgebraElement M(int r) { return AlgebraElement::M(r); }
AlgebraElement L(int r) { return AlgebraElement::L(r); }

using Basis6 = Eigen::Matrix<double, 6, Eigen::Dynamic>;

// Orthonormal basis of the column span, dropping singular values below
// max(rel * sigma_max, abs).
std::vector<AlgebraElement> orthonormal_span(const Basis6& columns, double rel, double abs) {
    std::vector<AlgebraElement> out;
    if (columns.cols() == 0) return out;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(columns, Eigen::ComputeThinU);
    const auto& sigma = svd.singularValues();
    if (sigma.size() == 0) return out;
    const double cut = std::max(rel * sigma(0), abs);
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        if (sigma(i) > cut) {
            out.push_back(AlgebraElement::from_coords(svd.matrixU().col(i)));
        }
    }
    return out;
}

Basis6 stack(const std::vector<AlgebraElement>& vectors) {
    Basis6 m(6, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        m.col(static_cast<Eigen::Index>(j)) = vectors[j].coords();
    }
    return m;
}

std::vector<AlgebraElement> pairwise_brackets(const std::vector<AlgebraElement>& b) {
    std::vector<AlgebraElement> out;
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i + 1; j < b.size(); ++j) out.push_back(bracket(b[i], b[j]));
    }
    return out;
}

}  // namespace

int SubalgebraClass::dim() const {
    switch (tag) {
        case Tag::H6: return 0;
        case Tag::H5Lambda:
        case Tag::H5Zero:
        case Tag::H5Inf:
        case Tag::H5N: return 1;
        case Tag::H4N:
        case Tag::H4:
        case Tag::H4Inf: return 2;
        case Tag::H3Lambda:
        case Tag::H3Plus:
        case Tag::H3Minus:
        case Tag::H3Zero:
        case Tag::H3Inf: return 3;
        case Tag::H2: return 4;
        case Tag::H0: return 6;
    }
    return 0;
}

std::string_view to_string(Tag tag) {
    for (const auto& [t, name] : kTagNames) {
        if (t == tag) return name;
    }
    return "unknown";
}

std::optional<Tag> parse_subalgebra_tag(std::string_view name) {
    for (const auto& [t, n] : kTagNames) {
        if (n == name) return t;
    }
    return std::nullopt;
}

std::string describe(const SubalgebraClass& cls) {
    std::ostringstream os;
    os << to_string(cls.tag);
    if (cls.has_lambda()) os << "(lambda=" << cls.lambda << ")";
    return os.str();
}

const std::vector<Tag>& all_subalgebra_tags() {
    static const std::vector<Tag> tags = [] {
        std::vector<Tag> t;
        for (const auto& entry : kTagNames) t.push_back(entry.first);
        return t;
    }();
    return tags;
}

bool same_class(const SubalgebraClass& x, const SubalgebraClass& y, double tol) {
    if (x.tag != y.tag) return false;
    if (!x.has_lambda()) return true;
    return std::abs(x.lambda - y.lambda) <= tol * (1.0 + std::abs(x.lambda));
}

// ---------------------------------------------------------------------------
// Subalgebra

Subalgebra Subalgebra::span(const std::vector<AlgebraElement>& vectors, const Tolerances& tol) {
    Subalgebra s;
    s.basis_ = orthonormal_span(stack(vectors), tol.rank, tol.alg);
    return s;
}

Eigen::Matrix<double, 6, Eigen::Dynamic> Subalgebra::matrix() const { return stack(basis_); }

AlgebraElement Subalgebra::project(const AlgebraElement& x) const {
    Coords6 out = Coords6::Zero();
    const Coords6 v = x.coords();
    for (const auto& b : basis_) {
        const Coords6 bc = b.coords();
        out += bc.dot(v) * bc;
    }
    return AlgebraElement::from_coords(out);
}

double Subalgebra::relative_distance(const AlgebraElement& x) const {
    const double n = x.norm();
    if (n == 0.0) return 0.0;
    return distance(x, project(x)) / n;
}

// ---------------------------------------------------------------------------
// Catalog

std::vector<AlgebraElement> catalog_generators(const SubalgebraClass& cls) {
    const AlgebraElement nil1 = M(1) + L(2);
    const AlgebraElement nil2 = M(2) - L(1);
    switch (cls.tag) {
        case Tag::H6: return {};
        case Tag::H5Lambda: return {M(3) + cls.lambda * L(3)};
        case Tag::H5Zero: return {M(3)};
        case Tag::H5Inf: return {L(3)};
        case Tag::H5N: return {nil1};
        case Tag::H4N: return {nil1, nil2};
        case Tag::H4: return {M(3), L(3)};
        case Tag::H2: return {M(3), L(3), nil1, nil2};
        case Tag::H0: return {M(1), M(2), M(3), L(1), L(2), L(3)};
        case Tag::H3Lambda: return {M(3) + cls.lambda * L(3), nil1, nil2};
        case Tag::H3Plus: return {M(3), M(1), M(2)};
        case Tag::H3Minus: return {M(3), L(1), L(2)};
        case Tag::H3Zero: return {M(3), nil1, nil2};
        case Tag::H4Inf: return {L(3), nil1};
        case Tag::H3Inf: return {L(3), nil1, nil2};
    }
    return {};
}

Subalgebra catalog_basis(const SubalgebraClass& cls) {
    return Subalgebra::span(catalog_generators(cls));
}

// ---------------------------------------------------------------------------
// Structure

Subalgebra closure(const std::vector<AlgebraElement>& generators, const Tolerances& tol) {
    Subalgebra s = Subalgebra::span(generators, tol);
    // dim <= 6 forces stabilization within six growth passes.
    for (int pass = 0; pass < 8 && s.dim() > 1; ++pass) {
        std::vector<AlgebraElement> grown = s.basis();
        const auto brackets = pairwise_brackets(s.basis());
        grown.insert(grown.end(), brackets.begin(), brackets.end());
        Subalgebra next = Subalgebra::span(grown, tol);
        const bool stable = next.dim() == s.dim();
        s = std::move(next);
        if (stable) break;
    }
    return s;
}

bool is_closed(const Subalgebra& s, const Tolerances& tol) {
    for (const auto& b : pairwise_brackets(s.basis())) {
        if (distance(b, s.project(b)) > tol.rank * (1.0 + b.norm())) return false;
    }
    return true;
}

Subalgebra derived_algebra(const Subalgebra& s, const Tolerances& tol) {
    Subalgebra d;
    const auto brackets = pairwise_brackets(s.basis());
    if (brackets.empty()) return d;
    // Brackets of an orthonormal basis: anything below tol.rank is rounding.
    Tolerances cut = tol;
    cut.alg = tol.rank;
    return Subalgebra::span(brackets, cut);
}

bool all_nilpotent(const Subalgebra& s, const Tolerances& tol) {
    // Both invariants are quadratic forms, so vanishing on the basis and on
    // pairwise sums forces them to vanish on the whole span.
    auto nil_or_zero = [&](const AlgebraElement& x) {
        const auto tag = classify_element(x, tol).tag;
        return tag == ElementClass::Tag::Nilpotent || tag == ElementClass::Tag::Zero;
    };
    const auto& b = s.basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (!nil_or_zero(b[i])) return false;
        for (std::size_t j = i + 1; j < b.size(); ++j) {
            if (!nil_or_zero(b[i] + b[j])) return false;
        }
    }
    return true;
}

bool is_solvable(const Subalgebra& s, const Tolerances& tol) {
    Subalgebra current = s;
    for (int step = 0; step < 7; ++step) {
        if (current.dim() == 0) return true;
        Subalgebra next = derived_algebra(current, tol);
        if (next.dim() == current.dim()) return false;
        current = std::move(next);
    }
    return current.dim() == 0;
}

Eigen::MatrixXd killing_form(const Subalgebra& s) {
    const int n = s.dim();
    const auto& b = s.basis();
    std::vector<Eigen::MatrixXd> ad(static_cast<std::size_t>(n), Eigen::MatrixXd::Zero(n, n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Coords6 br = bracket(b[i], b[j]).coords();
            for (int k = 0; k < n; ++k) ad[i](k, j) = b[k].coords().dot(br);
        }
    }
    Eigen::MatrixXd kf(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) kf(i, j) = (ad[i] * ad[j]).trace();
    }
    return kf;
}

bool is_semisimple(const Subalgebra& s, const Tolerances& tol) {
    if (s.dim() == 0) return false;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(killing_form(s));
    const auto& sigma = svd.singularValues();
    return sigma(0) > 0.0 && sigma(sigma.size() - 1) > tol.rank * sigma(0);
}

Subalgebra conjugate(const GroupElement& g, const Subalgebra& s) {
    std::vector<AlgebraElement> images;
    for (const auto& b : s.basis()) images.push_back(adjoint(g, b));
    return Subalgebra::span(images);
}

double inclusion_residual(const Subalgebra& inner, const Subalgebra& outer) {
    double worst = 0.0;
    for (const auto& b : inner.basis()) worst = std::max(worst, outer.relative_distance(b));
    return worst;
}

// ---------------------------------------------------------------------------
// Identification

namespace {

struct Spinor2 {
    Complex x, y;
};

// Kernel line of a nonzero nilpotent matrix.
Spinor2 kernel_line(const Mat2& m) {
    const Spinor2 r1{m.b, -m.a};
    const Spinor2 r2{m.d, -m.c};
    const double n1 = std::norm(r1.x) + std::norm(r1.y);
    const double n2 = std::norm(r2.x) + std::norm(r2.y);
    return n1 >= n2 ? r1 : r2;
}

// Unitary P^-1 where P has first column along k; P^-1 X P is upper
// triangular for every X fixing the line k.
Mat2 triangularizer(const AlgebraElement& nilpotent) {
    const Spinor2 k = kernel_line(to_matrix(nilpotent));
    const double n = std::sqrt(std::norm(k.x) + std::norm(k.y));
    const Complex x = k.x / n;
    const Complex y = k.y / n;
    const Mat2 p{x, -std::conj(y), y, std::conj(x)};
    return p.dagger();
}

// Upper unipotent u with u m u^-1 diagonal, for upper-triangular m with
// nonzero diagonal.
Mat2 diagonalizing_shear(const Mat2& m) {
    const Complex t = m.b / (2.0 * m.a);
    return {1.0, t, 0.0, 1.0};
}

// Element of s with the largest component orthogonal to sub.
AlgebraElement complement_element(const Subalgebra& s, const Subalgebra& sub) {
    AlgebraElement best;
    double best_norm = -1.0;
    for (const auto& b : s.basis()) {
        const AlgebraElement r = b - sub.project(b);
        if (r.norm() > best_norm) {
            best_norm = r.norm();
            best = r;
        }
    }
    return best * (1.0 / best_norm);
}

AlgebraElement largest_semisimple(const Subalgebra& s) {
    // In a Cartan subalgebra every nonzero element is semisimple; pick the
    // one furthest from the nilpotent cone among a few probes.
    std::vector<AlgebraElement> probes = s.basis();
    if (s.dim() == 2) {
        probes.push_back(s.basis()[0] + s.basis()[1]);
        probes.push_back(s.basis()[0] - s.basis()[1]);
    }
    AlgebraElement best;
    double best_score = -1.0;
    for (const auto& p : probes) {
        const auto [c1, c2] = invariants(p);
        const double score = std::hypot(c1, 2.0 * c2) / std::max(p.norm() * p.norm(), 1e-300);
        if (score > best_score) {
            best_score = score;
            best = p;
        }
    }
    return best;
}

[[noreturn]] void unexpected_structure(const char* what) {
    throw Error(ErrorCode::NotASubalgebra, std::string("subalgebra structure matches no class: ") + what);
}

// Witness for a three-dimensional simple subalgebra: the invariant
// Hermitian form Q with Y^+ Q + Q Y = 0 is definite (su(2) type) or of
// signature (1, 1) (su(1,1) type); w with w^+ J w = Q conjugates s onto the
// algebra preserving J = e or sigma_3.
std::pair<Tag, Mat2> simple_witness(const Subalgebra& s) {
    const std::array<Mat2, 4> unit_q{Mat2::identity(), pauli(1), pauli(2), pauli(3)};
    Eigen::MatrixXd system(8 * s.dim(), 4);
    for (int j = 0; j < s.dim(); ++j) {
        const Mat2 y = to_matrix(s.basis()[j]);
        for (int col = 0; col < 4; ++col) {
            const Mat2 r = y.dagger() * unit_q[col] + unit_q[col] * y;
            const std::array<Complex, 4> e{r.a, r.b, r.c, r.d};
            for (int k = 0; k < 4; ++k) {
                system(8 * j + 2 * k, col) = e[k].real();
                system(8 * j + 2 * k + 1, col) = e[k].imag();
            }
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(system, Eigen::ComputeFullV);
    const Eigen::Vector4d q = svd.matrixV().col(3);
    Mat2 form = q(0) * unit_q[0] + q(1) * unit_q[1] + q(2) * unit_q[2] + q(3) * unit_q[3];
    const double det_q = form.det().real();

    Eigen::Matrix2cd herm;
    herm << form.a, form.b, form.c, form.d;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> eig(herm);
    Eigen::Vector2d lam = eig.eigenvalues();
    Eigen::Matrix2cd u = eig.eigenvectors();

    Tag tag;
    if (det_q > 0.0) {
        tag = Tag::H3Plus;
        if (lam(0) < 0.0) lam = -lam;
    } else {
        tag = Tag::H3Minus;
        // Positive eigenvalue first so that w^+ sigma_3 w = Q.
        std::swap(lam(0), lam(1));
        u.col(0).swap(u.col(1));
    }
    const Eigen::Matrix2cd ud = u.adjoint();
    const double s0 = std::sqrt(std::abs(lam(0)));
    const double s1 = std::sqrt(std::abs(lam(1)));
    Mat2 w{s0 * ud(0, 0), s0 * ud(0, 1), s1 * ud(1, 0), s1 * ud(1, 1)};
    return {tag, w};
}

}  // namespace

Identification identify(const Subalgebra& s, const Tolerances& tol) {
    if (!is_closed(s, tol)) {
        throw Error(ErrorCode::NotASubalgebra, "subspace is not closed under the bracket");
    }
    SubalgebraClass cls;
    Mat2 witness = Mat2::identity();

    switch (s.dim()) {
        case 0:
            cls.tag = Tag::H6;
            break;
        case 1: {
            const OrbitReport rep = canonical_form(s.basis()[0], tol);
            witness = rep.conjugator.matrix();
            switch (rep.element_class.tag) {
                case ElementClass::Tag::Nilpotent: cls.tag = Tag::H5N; break;
                case ElementClass::Tag::Rotation: cls.tag = Tag::H5Zero; break;
                case ElementClass::Tag::Boost: cls.tag = Tag::H5Inf; break;
                case ElementClass::Tag::Mixed:
                    cls = {Tag::H5Lambda, rep.element_class.nu / rep.element_class.mu};
                    break;
                case ElementClass::Tag::Zero: unexpected_structure("zero basis vector");
            }
            break;
        }
        case 2: {
            if (all_nilpotent(s, tol)) {
                cls.tag = Tag::H4N;
                witness = triangularizer(s.basis()[0]);
                break;
            }
            const Subalgebra derived = derived_algebra(s, tol);
            if (derived.dim() == 0) {
                cls.tag = Tag::H4;
                witness = canonical_form(largest_semisimple(s), tol).conjugator.matrix();
            } else if (derived.dim() == 1) {
                const AlgebraElement nil = derived.basis()[0];
                if (classify_element(nil, tol).tag != ElementClass::Tag::Nilpotent) {
                    unexpected_structure("two-dimensional with non-nilpotent derived algebra");
                }
                cls.tag = Tag::H4Inf;
                const Mat2 p_inv = triangularizer(nil);
                const AlgebraElement a = complement_element(s, derived);
                const Mat2 shear = diagonalizing_shear(p_inv * to_matrix(a) * p_inv.inverse());
                const Mat2 n_up = p_inv * to_matrix(nil) * p_inv.inverse();
                const Complex scale = std::sqrt(Complex{0.0, -2.0} / n_up.b);
                witness = Mat2::diag(scale, 1.0 / scale) * shear * p_inv;
            } else {
                unexpected_structure("two-dimensional with two-dimensional derived algebra");
            }
            break;
        }
        case 3: {
            const Subalgebra derived = derived_algebra(s, tol);
            if (derived.dim() == 3) {
                auto [tag, w] = simple_witness(s);
                cls.tag = tag;
                witness = w;
            } else if (derived.dim() == 2 && all_nilpotent(derived, tol)) {
                const Mat2 p_inv = triangularizer(derived.basis()[0]);
                const AlgebraElement a = complement_element(s, derived);
                const ElementClass ac = classify_element(a, tol);
                switch (ac.tag) {
                    case ElementClass::Tag::Rotation: cls.tag = Tag::H3Zero; break;
                    case ElementClass::Tag::Boost: cls.tag = Tag::H3Inf; break;
                    case ElementClass::Tag::Mixed: cls = {Tag::H3Lambda, ac.nu / ac.mu}; break;
                    default: unexpected_structure("three-dimensional nilpotent");
                }
                witness = diagonalizing_shear(p_inv * to_matrix(a) * p_inv.inverse()) * p_inv;
            } else {
                unexpected_structure("three-dimensional");
            }
            break;
        }
        case 4: {
            const Subalgebra derived = derived_algebra(s, tol);
            if (derived.dim() != 2 || !all_nilpotent(derived, tol)) {
                unexpected_structure("four-dimensional");
            }
            cls.tag = Tag::H2;
            witness = triangularizer(derived.basis()[0]);
            break;
        }
        case 5:
            throw Error(ErrorCode::UnclassifiableDimension,
                        "closure reached dimension 5, which no subalgebra has (numerical rank failure)");
        case 6:
            cls.tag = Tag::H0;
            break;
        default:
            unexpected_structure("dimension out of range");
    }

    Identification out{cls, GroupElement::normalized(witness), 0.0};
    out.residual = inclusion_residual(conjugate(out.witness, s), catalog_basis(cls));
    if (out.residual > 1e-6) {
        throw Error(ErrorCode::NotASubalgebra, "identification witness failed verification");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Inclusion arrows

namespace {

// exp((pi/4) M2): real rotation taking L3 -> L1, M1 -> -M3, fixing L2.
Mat2 quarter_rotation() {
    const double c = std::numbers::sqrt2 / 2.0;
    return {c, -c, c, c};
}

}  // namespace

const std::vector<InclusionEdge>& inclusion_edges() {
    static const std::vector<InclusionEdge> edges = [] {
        const Mat2 id = Mat2::identity();
        const Mat2 rot = quarter_rotation();
        return std::vector<InclusionEdge>{
            {Tag::H6, Tag::H5Lambda, id},
            {Tag::H6, Tag::H5Zero, id},
            {Tag::H6, Tag::H5Inf, id},
            {Tag::H6, Tag::H5N, id},
            {Tag::H5Lambda, Tag::H4, id},
            {Tag::H5Lambda, Tag::H3Lambda, id, true},
            {Tag::H5Zero, Tag::H4, id},
            {Tag::H5Zero, Tag::H3Plus, id},
            {Tag::H5Zero, Tag::H3Minus, id},
            {Tag::H5Zero, Tag::H3Zero, id},
            {Tag::H5Inf, Tag::H4, id},
            {Tag::H5Inf, Tag::H4Inf, id},
            {Tag::H5N, Tag::H4N, id},
            {Tag::H5N, Tag::H4Inf, id},
            {Tag::H4N, Tag::H3Lambda, id},
            {Tag::H4N, Tag::H3Zero, id},
            {Tag::H4N, Tag::H3Inf, id},
            {Tag::H4Inf, Tag::H3Inf, id},
            {Tag::H4Inf, Tag::H3Minus, rot},
            {Tag::H4, Tag::H2, id},
            {Tag::H3Lambda, Tag::H2, id},
            {Tag::H3Zero, Tag::H2, id},
            {Tag::H3Inf, Tag::H2, id},
            {Tag::H3Plus, Tag::H0, id},
            {Tag::H3Minus, Tag::H0, id},
            {Tag::H2, Tag::H0, id},
        };
    }();
    return edges;
}

namespace {

bool search(Tag at, const SubalgebraClass& inner, const SubalgebraClass& outer, Mat2 acc,
            Mat2& found) {
    if (at == outer.tag) {
        found = acc;
        return true;
    }
    for (const auto& e : inclusion_edges()) {
        if (e.inner != at) continue;
        // A lambda-preserving arrow only constrains lambda when it lands on
        // the requested outer class; intermediate nodes pick lambda freely.
        if (e.same_lambda && inner.tag == e.inner && e.outer == outer.tag &&
            !same_class(SubalgebraClass{e.inner, inner.lambda}, SubalgebraClass{e.inner, outer.lambda})) {
            continue;
        }
        if (search(e.outer, inner, outer, e.witness * acc, found)) return true;
    }
    return false;
}

}  // namespace

std::optional<GroupElement> inclusion_witness(const SubalgebraClass& inner, const SubalgebraClass& outer) {
    if (inner.tag == outer.tag) {
        if (same_class(inner, outer)) return GroupElement::identity();
        return std::nullopt;
    }
    Mat2 found;
    if (search(inner.tag, inner, outer, Mat2::identity(), found)) {
        return GroupElement::normalized(found);
    }
    return std::nullopt;
}

bool includes(const SubalgebraClass& inner, const SubalgebraClass& outer) {
    return inclusion_witness(inner, outer).has_value();
}

}  // namespace lorentz
