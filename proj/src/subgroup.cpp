#include "lorentz/subgroup.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numbers>

#include "lorentz/error.hpp"

namespace lorentz {

using Tag = SubalgebraClass::Tag;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

struct FamilyInfo {
    Family family;
    std::string_view name;
    Tag base;
    unsigned params;
    std::string_view domain;
};

// clang-format off
constexpr std::array<FamilyInfo, 41> kFamilies{{
    {Family::H6, "H6", Tag::H6, 0, ""},
    {Family::H5Lambda, "H5Lambda", Tag::H5Lambda, kLambda, "lambda != 0"},
    {Family::H5Zero, "H5Zero", Tag::H5Zero, 0, ""},
    {Family::H5Inf, "H5Inf", Tag::H5Inf, 0, ""},
    {Family::H5N, "H5N", Tag::H5N, 0, ""},
    {Family::H4N, "H4N", Tag::H4N, 0, ""},
    {Family::H4, "H4", Tag::H4, 0, ""},
    {Family::H2, "H2", Tag::H2, 0, ""},
    {Family::H0, "H0", Tag::H0, 0, ""},
    {Family::H3Lambda, "H3Lambda", Tag::H3Lambda, kLambda, "lambda != 0"},
    {Family::H3Plus, "H3Plus", Tag::H3Plus, 0, ""},
    {Family::H3Minus, "H3Minus", Tag::H3Minus, 0, ""},
    {Family::H3Zero, "H3Zero", Tag::H3Zero, 0, ""},
    {Family::H4Inf, "H4Inf", Tag::H4Inf, 0, ""},
    {Family::H3Inf, "H3Inf", Tag::H3Inf, 0, ""},
    {Family::H5Lambda_n, "H5Lambda_n", Tag::H5Lambda, kLambda | kN, "lambda != 0, n >= 2"},
    {Family::H5Lambda_n_eta, "H5Lambda_n_eta", Tag::H5Lambda, kLambda | kN | kEta, "lambda != 0, n = 2, 4, 6, ..., 0 <= eta < 1"},
    {Family::H5Zero_k, "H5Zero_k", Tag::H5Zero, kK, "k > 1"},
    {Family::H5Zero_k_h, "H5Zero_k_h", Tag::H5Zero, kK | kH, "k > h >= 1"},
    {Family::H5Zero_1_h, "H5Zero_1_h", Tag::H5Zero, kH, "h > 0"},
    {Family::H5Inf_n, "H5Inf_n", Tag::H5Inf, kN, "n >= 2"},
    {Family::H5Inf_n_eta, "H5Inf_n_eta", Tag::H5Inf, kN | kEta, "n = 2, 4, 6, ..., 0 <= eta < 1"},
    {Family::H5N_k_h_nu, "H5N_k_h_nu", Tag::H5N, kK | kH | kNu, "k > 1, h real, nu = 0, 1, 2, 3"},
    {Family::H5N_k_h_nu_plus, "H5N_k_h_nu_plus", Tag::H5N, kK | kH | kNu, "k > 1, h real, nu = 0, 1"},
    {Family::H5N_k_h_plusplus, "H5N_k_h_plusplus", Tag::H5N, kK | kH, "k > 1, h real"},
    {Family::H5N_1_h_0, "H5N_1_h_0", Tag::H5N, kH, "h > 0"},
    {Family::H5N_1_h_2, "H5N_1_h_2", Tag::H5N, kH, "h > 0"},
    {Family::H5N_1_h_0plus, "H5N_1_h_0plus", Tag::H5N, kH, "h >= 0"},
    {Family::H5N_1_h_1plus, "H5N_1_h_1plus", Tag::H5N, kH, "h > 0"},
    {Family::H5N_1_h, "H5N_1_h", Tag::H5N, kH, "h >= 0"},
    {Family::H5N_1_h_plusplus, "H5N_1_h_plusplus", Tag::H5N, kH, "h > 0"},
    {Family::H4N_n, "H4N_n", Tag::H4N, kN, "n >= 2"},
    {Family::H4N_k_n_eta, "H4N_k_n_eta", Tag::H4N, kK | kN | kEta, "k > 1, n >= 1, 0 <= eta < 1"},
    {Family::H4_plus, "H4_plus", Tag::H4, 0, ""},
    {Family::H3Lambda_n, "H3Lambda_n", Tag::H3Lambda, kLambda | kN, "lambda != 0, n >= 2"},
    {Family::H3Minus_plus, "H3Minus_plus", Tag::H3Minus, 0, ""},
    {Family::H3Zero_k, "H3Zero_k", Tag::H3Zero, kK, "k > 1"},
    {Family::H4Inf_plus, "H4Inf_plus", Tag::H4Inf, 0, ""},
    {Family::H4Inf_plusplus, "H4Inf_plusplus", Tag::H4Inf, 0, ""},
    {Family::H3Inf_n, "H3Inf_n", Tag::H3Inf, kN, "n >= 2"},
    {Family::H6_finite, "H6_finite", Tag::H6, 0, "finite list of generators"},
}};
// clang-format on

constexpr bool table_in_enum_order() {
    for (std::size_t i = 0; i < kFamilies.size(); ++i) {
        if (static_cast<std::size_t>(kFamilies[i].family) != i) return false;
    }
    return true;
}
static_assert(table_in_enum_order());

const FamilyInfo& info(Family f) { return kFamilies[static_cast<std::size_t>(f)]; }

bool has(Family f, unsigned flag) { return (info(f).params & flag) != 0; }

[[noreturn]] void bad_param(Family f, const std::string& what) {
    throw Error(ErrorCode::InvalidParameter,
                std::string(info(f).name) + ": " + what + " (domain: " + std::string(info(f).domain) + ")");
}

void validate(Family f, const SubgroupParams& p) {
    if (f == Family::H6_finite) {
        throw Error(ErrorCode::InvalidParameter, "H6_finite is built with SubgroupDescriptor::finite");
    }
    const auto finite = [](double x) { return std::isfinite(x); };
    if (has(f, kLambda) && (!finite(p.lambda) || p.lambda == 0.0)) bad_param(f, "lambda");
    if (has(f, kEta) && (!finite(p.eta) || p.eta < 0.0 || p.eta >= 1.0)) bad_param(f, "eta");
    if (has(f, kK) && (!finite(p.k) || p.k <= 1.0)) bad_param(f, "k");
    if (has(f, kH) && !finite(p.h)) bad_param(f, "h");

    switch (f) {
        case Family::H5Lambda_n:
        case Family::H5Inf_n:
        case Family::H4N_n:
        case Family::H3Lambda_n:
        case Family::H3Inf_n:
            if (p.n < 2) bad_param(f, "n");
            break;
        case Family::H5Lambda_n_eta:
        case Family::H5Inf_n_eta:
            if (p.n < 2 || p.n % 2 != 0) bad_param(f, "n");
            break;
        case Family::H4N_k_n_eta:
            if (p.n < 1) bad_param(f, "n");
            break;
        case Family::H5Zero_k_h:
            if (!(p.h >= 1.0 && p.h < p.k)) bad_param(f, "h");
            break;
        case Family::H5Zero_1_h:
        case Family::H5N_1_h_0:
        case Family::H5N_1_h_2:
        case Family::H5N_1_h_1plus:
        case Family::H5N_1_h_plusplus:
            if (!(p.h > 0.0)) bad_param(f, "h");
            break;
        case Family::H5N_1_h_0plus:
        case Family::H5N_1_h:
            if (!(p.h >= 0.0)) bad_param(f, "h");
            break;
        case Family::H5N_k_h_nu:
            if (p.nu < 0 || p.nu > 3) bad_param(f, "nu");
            break;
        case Family::H5N_k_h_nu_plus:
            if (p.nu < 0 || p.nu > 1) bad_param(f, "nu");
            break;
        default:
            break;
    }
}

// Keeps only the parameters the family uses, so equality is structural.
SubgroupParams restrict_params(Family f, const SubgroupParams& p) {
    SubgroupParams out;
    if (has(f, kLambda)) out.lambda = p.lambda;
    if (has(f, kN)) out.n = p.n;
    if (has(f, kEta)) out.eta = p.eta;
    if (has(f, kK)) out.k = p.k;
    if (has(f, kH)) out.h = p.h;
    if (has(f, kNu)) out.nu = p.nu;
    return out;
}

std::string format_double(double x) {
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), end);
}

bool nearly(double x, double y) { return std::abs(x - y) <= 1e-12 * (1.0 + std::abs(x) + std::abs(y)); }

// ---- matrix building blocks ----

Complex ipow(long m) {
    switch (((m % 4) + 4) % 4) {
        case 0: return 1.0;
        case 1: return kI;
        case 2: return -1.0;
        default: return -kI;
    }
}

Complex cis(double x) { return std::polar(1.0, x); }

Mat2 unimodular_diag(Complex x) { return Mat2::diag(x, 1.0 / x); }

// Eq. Q2 element.
Mat2 root(int n, long nu) { return unimodular_diag(cis(2.0 * kPi * static_cast<double>(nu) / n)); }

// Antidiagonal [[0, -1/x], [x, 0]].
Mat2 antidiag(Complex x) { return {0.0, -1.0 / x, x, 0.0}; }

Mat2 i_sigma2() { return {0.0, 1.0, -1.0, 0.0}; }

Mat2 translation(Complex b) { return {1.0, b, 0.0, 1.0}; }

// [[x, (x - y) h], [0, y]] with y = 1/x by default.
Mat2 discrete_triangular(Complex x, Complex y, double h) { return {x, (x - y) * h, 0.0, y}; }

long mod(long a, long n) { return ((a % n) + n) % n; }

long nearest_index(double angle, int n, double shift = 0.0) {
    return mod(std::lround(angle * n / (2.0 * kPi) - shift), n);
}

// Phase left over after removing the spiral exp((lambda - i) t) with |.| = |a|.
double spiral_phase(Complex a, double lambda) {
    const double t = std::log(std::abs(a)) / lambda;
    return std::arg(a * std::exp(Complex{-lambda, 1.0} * t));
}

long nearest_power(double x, double k) { return std::lround(std::log(x) / std::log(k)); }

bool usable(Complex x) { return std::abs(x) > 1e-300 && std::isfinite(std::abs(x)); }

// ---- connected families ----

bool close(Complex x, Complex y, double eps) { return std::abs(x - y) <= eps; }

bool in_connected(Tag tag, double lambda, const Mat2& m, double eps) {
    const bool upper = std::abs(m.c) <= eps;
    const bool diagonal = upper && std::abs(m.b) <= eps;
    const auto positive = [&](Complex x) { return std::abs(x.imag()) <= eps && x.real() > 0.0; };
    const auto unit = [&](Complex x) { return std::abs(std::abs(x) - 1.0) <= eps; };
    const auto on_spiral = [&](Complex x) {
        if (!usable(x)) return false;
        const double t = std::log(std::abs(x)) / lambda;
        return close(x, std::exp(Complex{lambda, -1.0} * t), eps);
    };
    switch (tag) {
        case Tag::H6: return diagonal && close(m.a, 1.0, eps) && close(m.d, 1.0, eps);
        case Tag::H5Lambda: return diagonal && on_spiral(m.a);
        case Tag::H5Zero: return diagonal && unit(m.a);
        case Tag::H5Inf: return diagonal && positive(m.a);
        case Tag::H5N:
            return upper && close(m.a, 1.0, eps) && close(m.d, 1.0, eps) && std::abs(m.b.real()) <= eps;
        case Tag::H4N: return upper && close(m.a, 1.0, eps) && close(m.d, 1.0, eps);
        case Tag::H4: return diagonal;
        case Tag::H2: return upper;
        case Tag::H0: return true;
        case Tag::H3Lambda: return upper && on_spiral(m.a);
        case Tag::H3Plus: return close(m.d, std::conj(m.a), eps) && close(m.b, -std::conj(m.c), eps);
        case Tag::H3Minus: return close(m.d, std::conj(m.a), eps) && close(m.b, std::conj(m.c), eps);
        case Tag::H3Zero: return upper && unit(m.a);
        case Tag::H4Inf: return upper && positive(m.a) && std::abs(m.b.real()) <= eps;
        case Tag::H3Inf: return upper && positive(m.a);
    }
    return false;
}

// ---- component indices ----

ComponentId with_m(long m) { return {m, 0, 1, false}; }
ComponentId with_nu(long nu) { return {0, static_cast<int>(nu), 1, false}; }

std::vector<ComponentId> candidates(const SubgroupDescriptor& d, const Mat2& g) {
    const SubgroupParams& p = d.params();
    std::vector<ComponentId> out;
    switch (d.family()) {
        case Family::H5Lambda_n:
        case Family::H3Lambda_n:
            if (usable(g.a)) out.push_back(with_nu(nearest_index(spiral_phase(g.a, p.lambda), p.n)));
            break;
        case Family::H5Lambda_n_eta:
            if (usable(g.a)) out.push_back(with_nu(nearest_index(spiral_phase(g.a, p.lambda), p.n)));
            if (usable(g.c)) {
                ComponentId id = with_nu(nearest_index(spiral_phase(g.c, p.lambda), p.n, p.eta));
                id.flip = true;
                out.push_back(id);
            }
            break;
        case Family::H5Inf_n:
        case Family::H4N_n:
        case Family::H3Inf_n:
            out.push_back(with_nu(nearest_index(std::arg(g.a), p.n)));
            break;
        case Family::H5Inf_n_eta:
            out.push_back(with_nu(nearest_index(std::arg(g.a), p.n)));
            if (usable(g.c)) {
                ComponentId id = with_nu(nearest_index(std::arg(g.c), p.n, p.eta));
                id.flip = true;
                out.push_back(id);
            }
            break;
        case Family::H5Zero_k:
        case Family::H3Zero_k:
            if (usable(g.a)) out.push_back(with_m(nearest_power(std::abs(g.a), p.k)));
            break;
        case Family::H5Zero_k_h:
            if (usable(g.a)) out.push_back(with_m(nearest_power(std::abs(g.a), p.k)));
            if (usable(g.c)) {
                ComponentId id = with_m(nearest_power(std::abs(g.c) / p.h, p.k));
                id.flip = true;
                out.push_back(id);
            }
            break;
        case Family::H5Zero_1_h:
        case Family::H4_plus:
        case Family::H3Minus_plus:
            out.push_back({});
            out.push_back({0, 0, 1, true});
            break;
        case Family::H5N_k_h_nu:
            if (usable(g.a)) out.push_back(with_m(nearest_power(std::abs(g.a), p.k)));
            break;
        case Family::H5N_k_h_nu_plus:
            if (usable(g.a)) {
                const long m = nearest_power(std::abs(g.a), p.k);
                out.push_back({m, 0, 1, false});
                out.push_back({m, 0, -1, false});
            }
            break;
        case Family::H5N_k_h_plusplus:
            if (usable(g.a)) {
                out.push_back({nearest_power(std::abs(g.a), p.k), static_cast<int>(nearest_index(std::arg(g.a), 4)),
                               1, false});
            }
            break;
        case Family::H5N_1_h_0:
            out.push_back(with_m(std::lround(g.b.real() / p.h)));
            break;
        case Family::H5N_1_h_2: {
            const double sigma = g.a.real() >= 0.0 ? 1.0 : -1.0;
            out.push_back(with_m(std::lround(sigma * g.b.real() / p.h)));
            break;
        }
        case Family::H5N_1_h_0plus: {
            const int sigma = g.a.real() >= 0.0 ? 1 : -1;
            const long m = p.h > 0.0 ? std::lround(sigma * g.b.real() / p.h) : 0;
            out.push_back({m, 0, sigma, false});
            break;
        }
        case Family::H5N_1_h_1plus:
            if (usable(g.a)) {
                const long m = std::lround((g.b / g.a).real() / p.h);
                const int sigma = (g.a / ipow(m)).real() >= 0.0 ? 1 : -1;
                out.push_back({m, 0, sigma, false});
            }
            break;
        case Family::H5N_1_h:
            for (int nu = 0; nu < 2; ++nu) {
                out.push_back({0, nu, 1, false});
                out.push_back({0, nu, -1, false});
            }
            break;
        case Family::H5N_1_h_plusplus:
            if (usable(g.a)) {
                out.push_back({std::lround((g.b / g.a).real() / p.h),
                               static_cast<int>(nearest_index(std::arg(g.a), 4)), 1, false});
            }
            break;
        case Family::H4N_k_n_eta:
            if (usable(g.a)) {
                const long m = nearest_power(std::abs(g.a), p.k);
                out.push_back({m, static_cast<int>(nearest_index(std::arg(g.a), p.n, m * p.eta)), 1, false});
            }
            break;
        case Family::H4Inf_plus:
            out.push_back({});
            out.push_back({0, 0, -1, false});
            break;
        case Family::H4Inf_plusplus:
            out.push_back(with_nu(nearest_index(std::arg(g.a), 4)));
            break;
        case Family::H6_finite:
            for (std::size_t i = 0; i < d.elements().size(); ++i) out.push_back(with_nu(static_cast<long>(i)));
            break;
        default:  // connected
            out.push_back({});
            break;
    }
    return out;
}

Mat2 representative_matrix(const SubgroupDescriptor& d, const ComponentId& id) {
    const SubgroupParams& p = d.params();
    const double sign = id.sign < 0 ? -1.0 : 1.0;
    switch (d.family()) {
        case Family::H5Lambda_n:
        case Family::H5Inf_n:
        case Family::H4N_n:
        case Family::H3Lambda_n:
        case Family::H3Inf_n:
            return root(p.n, id.nu);
        case Family::H5Lambda_n_eta:
        case Family::H5Inf_n_eta:
            if (id.flip) return antidiag(cis(2.0 * kPi * (id.nu + p.eta) / p.n));
            return root(p.n, id.nu);
        case Family::H5Zero_k:
        case Family::H3Zero_k:
            return unimodular_diag(std::pow(p.k, static_cast<double>(id.m)));
        case Family::H5Zero_k_h: {
            const double km = std::pow(p.k, static_cast<double>(id.m));
            return id.flip ? antidiag(p.h * km) : unimodular_diag(km);
        }
        case Family::H5Zero_1_h:
            return id.flip ? antidiag(p.h) : Mat2::identity();
        case Family::H5N_k_h_nu:
        case Family::H5N_k_h_nu_plus: {
            const Complex x = ipow(static_cast<long>(p.nu) * id.m) * std::pow(p.k, static_cast<double>(id.m));
            return sign * discrete_triangular(x, 1.0 / x, p.h);
        }
        case Family::H5N_k_h_plusplus: {
            const double km = std::pow(p.k, static_cast<double>(id.m));
            return discrete_triangular(ipow(id.nu) * km, ipow(-id.nu) / km, p.h);
        }
        case Family::H5N_1_h_0:
            return translation(static_cast<double>(id.m) * p.h);
        case Family::H5N_1_h_2:
            return ((id.m % 2 == 0) ? 1.0 : -1.0) * translation(static_cast<double>(id.m) * p.h);
        case Family::H5N_1_h_0plus:
            return sign * translation(static_cast<double>(id.m) * p.h);
        case Family::H5N_1_h_1plus:
            return sign * ipow(id.m) * Mat2{1.0, static_cast<double>(id.m) * p.h, 0.0, ipow(-2 * id.m)};
        case Family::H5N_1_h:
            return id.nu == 0 ? sign * Mat2::identity() : sign * Mat2{kI, kI * p.h, 0.0, -kI};
        case Family::H5N_1_h_plusplus:
            return Mat2{ipow(id.nu), ipow(id.nu) * (static_cast<double>(id.m) * p.h), 0.0, ipow(-id.nu)};
        case Family::H4N_k_n_eta:
            return unimodular_diag(std::pow(p.k, static_cast<double>(id.m)) *
                                   cis(2.0 * kPi * (id.nu + static_cast<double>(id.m) * p.eta) / p.n));
        case Family::H4_plus:
        case Family::H3Minus_plus:
            return id.flip ? i_sigma2() : Mat2::identity();
        case Family::H4Inf_plus:
            return sign * Mat2::identity();
        case Family::H4Inf_plusplus:
            return unimodular_diag(ipow(id.nu));
        case Family::H6_finite: {
            if (id.nu < 0 || static_cast<std::size_t>(id.nu) >= d.elements().size()) {
                throw Error(ErrorCode::InvalidParameter, "H6_finite: element index out of range");
            }
            return d.elements()[static_cast<std::size_t>(id.nu)].matrix();
        }
        default:
            return Mat2::identity();
    }
}

std::optional<ComponentId> locate(const SubgroupDescriptor& d, const GroupElement& g, const Tolerances& tol) {
    const Mat2& m = g.matrix();
    const SubalgebraClass base = d.identity_class();
    for (const ComponentId& id : candidates(d, m)) {
        const Mat2 q = representative_matrix(d, id);
        // q has det 1, so its inverse is the adjugate.
        const Mat2 q_inv{q.d, -q.b, -q.c, q.a};
        const double eps = tol.member * std::max(1.0, q.norm() * m.norm());
        if (in_connected(base.tag, base.lambda, q_inv * m, eps)) return id;
    }
    return std::nullopt;
}

}  // namespace

std::string_view to_string(Family f) { return info(f).name; }

std::optional<Family> parse_family(std::string_view name) {
    for (const auto& e : kFamilies) {
        if (e.name == name) return e.family;
    }
    return std::nullopt;
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> families = [] {
        std::vector<Family> out;
        for (const auto& e : kFamilies) out.push_back(e.family);
        return out;
    }();
    return families;
}

unsigned family_params(Family f) { return info(f).params; }
std::string_view family_domain(Family f) { return info(f).domain; }

SubgroupDescriptor SubgroupDescriptor::make(Family f, const SubgroupParams& p) {
    validate(f, p);
    return SubgroupDescriptor(f, restrict_params(f, p));
}

SubgroupDescriptor SubgroupDescriptor::connected(const SubalgebraClass& cls) {
    static_assert(static_cast<int>(Family::H3Inf) == static_cast<int>(Tag::H3Inf));
    SubgroupParams p;
    p.lambda = cls.lambda;
    return make(static_cast<Family>(cls.tag), p);
}

SubgroupDescriptor SubgroupDescriptor::finite(const std::vector<GroupElement>& generators, std::size_t max_order,
                                              const Tolerances& tol) {
    std::vector<GroupElement> elements{GroupElement::identity()};
    const auto known = [&](const GroupElement& g) {
        return std::any_of(elements.begin(), elements.end(), [&](const GroupElement& e) {
            return (e.matrix() - g.matrix()).norm() <= tol.member * std::max(1.0, g.matrix().norm());
        });
    };
    for (const GroupElement& g : generators) {
        if (!known(g)) elements.push_back(g);
    }
    // Multiply by generators until nothing new appears; a finite set closed
    // under right multiplication by generators is the generated group.
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (const GroupElement& g : generators) {
            const GroupElement prod = elements[i] * g;
            if (known(prod)) continue;
            if (elements.size() >= max_order) {
                throw Error(ErrorCode::Unsupported,
                            "generated group exceeds " + std::to_string(max_order) + " elements");
            }
            elements.push_back(prod);
        }
    }
    SubgroupDescriptor d(Family::H6_finite, {});
    d.elements_ = std::move(elements);
    return d;
}

bool SubgroupDescriptor::is_connected() const {
    return static_cast<int>(family_) <= static_cast<int>(Family::H3Inf);
}

SubalgebraClass SubgroupDescriptor::identity_class() const {
    return {info(family_).base, has(family_, kLambda) ? params_.lambda : 0.0};
}

SubgroupDescriptor SubgroupDescriptor::identity_component() const { return connected(identity_class()); }

std::string SubgroupDescriptor::name() const {
    std::string out(info(family_).name);
    std::vector<std::string> parts;
    if (has(family_, kLambda)) parts.push_back("lambda=" + format_double(params_.lambda));
    if (has(family_, kN)) parts.push_back("n=" + std::to_string(params_.n));
    if (has(family_, kEta)) parts.push_back("eta=" + format_double(params_.eta));
    if (has(family_, kK)) parts.push_back("k=" + format_double(params_.k));
    if (has(family_, kH)) parts.push_back("h=" + format_double(params_.h));
    if (has(family_, kNu)) parts.push_back("nu=" + std::to_string(params_.nu));
    if (family_ == Family::H6_finite) parts.push_back("order=" + std::to_string(elements_.size()));
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i == 0 ? ":" : ",") + parts[i];
    return out;
}

bool operator==(const SubgroupDescriptor& x, const SubgroupDescriptor& y) {
    if (x.family_ != y.family_) return false;
    const SubgroupParams& p = x.params_;
    const SubgroupParams& q = y.params_;
    if (!(nearly(p.lambda, q.lambda) && p.n == q.n && nearly(p.eta, q.eta) && nearly(p.k, q.k) &&
          nearly(p.h, q.h) && p.nu == q.nu)) {
        return false;
    }
    if (x.elements_.size() != y.elements_.size()) return false;
    for (std::size_t i = 0; i < x.elements_.size(); ++i) {
        if ((x.elements_[i].matrix() - y.elements_[i].matrix()).norm() > 1e-12) return false;
    }
    return true;
}

bool contains(const SubgroupDescriptor& d, const GroupElement& g, const Tolerances& tol) {
    return locate(d, g, tol).has_value();
}

ComponentId component_of(const SubgroupDescriptor& d, const GroupElement& g, const Tolerances& tol) {
    auto id = locate(d, g, tol);
    if (!id) throw Error(ErrorCode::NotMember, "element is not in " + d.name());
    return *id;
}

GroupElement component_representative(const SubgroupDescriptor& d, const ComponentId& id) {
    return GroupElement::normalized(representative_matrix(d, id));
}

std::vector<Component> enumerate_components(const SubgroupDescriptor& d, int bound) {
    if (bound < 0) throw Error(ErrorCode::InvalidParameter, "bound must be >= 0");
    const SubgroupParams& p = d.params();
    std::vector<ComponentId> ids;
    const auto each_m = [&](auto&& emit) {
        for (long m = -bound; m <= bound; ++m) emit(m);
    };
    switch (d.family()) {
        case Family::H5Lambda_n:
        case Family::H5Inf_n:
        case Family::H4N_n:
        case Family::H3Lambda_n:
        case Family::H3Inf_n:
            for (int nu = 0; nu < p.n; ++nu) ids.push_back(with_nu(nu));
            break;
        case Family::H5Lambda_n_eta:
        case Family::H5Inf_n_eta:
            for (int nu = 0; nu < p.n; ++nu) ids.push_back(with_nu(nu));
            for (int nu = 0; nu < p.n; ++nu) ids.push_back({0, nu, 1, true});
            break;
        case Family::H5Zero_k:
        case Family::H3Zero_k:
        case Family::H5N_k_h_nu:
        case Family::H5N_1_h_0:
        case Family::H5N_1_h_2:
            each_m([&](long m) { ids.push_back(with_m(m)); });
            break;
        case Family::H5Zero_k_h:
            each_m([&](long m) { ids.push_back(with_m(m)); });
            each_m([&](long m) { ids.push_back({m, 0, 1, true}); });
            break;
        case Family::H5Zero_1_h:
        case Family::H4_plus:
        case Family::H3Minus_plus:
            ids.push_back({});
            ids.push_back({0, 0, 1, true});
            break;
        case Family::H5N_k_h_nu_plus:
        case Family::H5N_1_h_1plus:
            for (int sign : {1, -1}) each_m([&](long m) { ids.push_back({m, 0, sign, false}); });
            break;
        case Family::H5N_1_h_0plus:
            if (p.h == 0.0) {
                ids.push_back({});
                ids.push_back({0, 0, -1, false});
            } else {
                for (int sign : {1, -1}) each_m([&](long m) { ids.push_back({m, 0, sign, false}); });
            }
            break;
        case Family::H5N_k_h_plusplus:
        case Family::H5N_1_h_plusplus:
            for (int nu = 0; nu < 4; ++nu) each_m([&](long m) { ids.push_back({m, nu, 1, false}); });
            break;
        case Family::H5N_1_h:
            for (int nu = 0; nu < 2; ++nu) {
                for (int sign : {1, -1}) ids.push_back({0, nu, sign, false});
            }
            break;
        case Family::H4N_k_n_eta:
            for (int nu = 0; nu < p.n; ++nu) each_m([&](long m) { ids.push_back({m, nu, 1, false}); });
            break;
        case Family::H4Inf_plus:
            ids.push_back({});
            ids.push_back({0, 0, -1, false});
            break;
        case Family::H4Inf_plusplus:
            for (int nu = 0; nu < 4; ++nu) ids.push_back(with_nu(nu));
            break;
        case Family::H6_finite:
            for (std::size_t i = 0; i < d.elements().size(); ++i) ids.push_back(with_nu(static_cast<long>(i)));
            break;
        default:
            ids.push_back({});
            break;
    }
    std::vector<Component> out;
    out.reserve(ids.size());
    for (const ComponentId& id : ids) out.push_back({id, component_representative(d, id)});
    return out;
}

std::optional<long> component_count(const SubgroupDescriptor& d) {
    const SubgroupParams& p = d.params();
    switch (d.family()) {
        case Family::H5Lambda_n:
        case Family::H5Inf_n:
        case Family::H4N_n:
        case Family::H3Lambda_n:
        case Family::H3Inf_n:
            return p.n;
        case Family::H5Lambda_n_eta:
        case Family::H5Inf_n_eta:
            return 2L * p.n;
        case Family::H5Zero_1_h:
        case Family::H4_plus:
        case Family::H3Minus_plus:
        case Family::H4Inf_plus:
            return 2;
        case Family::H5N_1_h:
        case Family::H4Inf_plusplus:
            return 4;
        case Family::H5N_1_h_0plus:
            if (p.h == 0.0) return 2;
            return std::nullopt;
        case Family::H6_finite:
            return static_cast<long>(d.elements().size());
        case Family::H5Zero_k:
        case Family::H5Zero_k_h:
        case Family::H3Zero_k:
        case Family::H5N_k_h_nu:
        case Family::H5N_k_h_nu_plus:
        case Family::H5N_k_h_plusplus:
        case Family::H5N_1_h_0:
        case Family::H5N_1_h_2:
        case Family::H5N_1_h_1plus:
        case Family::H5N_1_h_plusplus:
        case Family::H4N_k_n_eta:
            return std::nullopt;
        default:
            return 1;
    }
}

SubgroupDescriptor normalizer(const SubgroupDescriptor& d) {
    if (!d.is_connected()) {
        const SubgroupDescriptor outer = normalizer(d.identity_component());
        // d sits between its identity component and that normalizer; when it
        // is the normalizer itself it is self-normalizing.
        if (outer == d) return d;
        throw Error(ErrorCode::Unsupported, "normalizer of " + d.name() + " is not determined");
    }
    switch (d.family()) {
        case Family::H6:
        case Family::H0:
            return SubgroupDescriptor::make(Family::H0);
        case Family::H5Lambda:
        case Family::H5Zero:
        case Family::H5Inf:
        case Family::H4:
            return SubgroupDescriptor::make(Family::H4_plus);
        case Family::H5N: {
            // Upper triangular with a in i^nu R_+ and b arbitrary.
            SubgroupParams p;
            p.n = 4;
            return SubgroupDescriptor::make(Family::H3Inf_n, p);
        }
        case Family::H4N:
        case Family::H3Lambda:
        case Family::H3Zero:
        case Family::H3Inf:
        case Family::H2:
            return SubgroupDescriptor::make(Family::H2);
        case Family::H3Plus:
            return SubgroupDescriptor::make(Family::H3Plus);
        case Family::H3Minus:
            return SubgroupDescriptor::make(Family::H3Minus_plus);
        case Family::H4Inf:
            return SubgroupDescriptor::make(Family::H4Inf_plusplus);
        default:
            break;
    }
    throw Error(ErrorCode::Unsupported, "normalizer of " + d.name() + " is not determined");
}

std::optional<Complex> validate_triangular_discrete(const std::vector<GroupElement>& elements,
                                                    const Tolerances& tol) {
    for (const GroupElement& g : elements) {
        const Mat2& m = g.matrix();
        if (std::abs(m.c) > tol.member * std::max(1.0, m.norm())) {
            throw Error(ErrorCode::NotTriangular, "element is not upper triangular");
        }
    }
    const auto gap = [](const Mat2& m) { return m.a - 1.0 / m.a; };
    const auto away_from_unit = [&](const Mat2& m) { return std::abs(std::abs(m.a) - 1.0) > tol.member; };

    // Best-conditioned element fixes h.
    const GroupElement* pivot = nullptr;
    for (const GroupElement& g : elements) {
        if (!pivot || std::abs(gap(g.matrix())) > std::abs(gap(pivot->matrix()))) pivot = &g;
    }
    if (!pivot || std::abs(gap(pivot->matrix())) <= tol.member) return Complex{0.0};
    const Complex h = pivot->matrix().b / gap(pivot->matrix());

    const bool strict = std::any_of(elements.begin(), elements.end(),
                                    [&](const GroupElement& g) { return away_from_unit(g.matrix()); });
    for (const GroupElement& g : elements) {
        const Mat2& m = g.matrix();
        const bool plus_minus_one = std::abs(gap(m)) <= tol.member;
        if (plus_minus_one && !strict) continue;
        const Complex expected = gap(m) * h;
        if (std::abs(m.b - expected) > tol.member * (1.0 + std::abs(m.b) + std::abs(expected))) {
            return std::nullopt;
        }
    }
    return h;
}

bool contains_minus_e(const SubgroupDescriptor& d, const Tolerances& tol) {
    return contains(d, GroupElement::minus_identity(), tol);
}

SubgroupDescriptor connected_from_class(const SubalgebraClass& cls) { return SubgroupDescriptor::connected(cls); }

}  // namespace lorentz
