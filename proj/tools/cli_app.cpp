#include "cli_app.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lorentz/error.hpp"
#include "lorentz/homspace.hpp"
#include "lorentz/json_io.hpp"
#include "lorentz/orbit.hpp"
#include "lorentz/subalgebra.hpp"
#include "lorentz/subgroup.hpp"

namespace lorentz::cli {

namespace {

struct Globals {
    std::string format = "text";
    std::optional<double> tol;
    int bound = 3;

    bool json() const { return format == "json"; }
    Tolerances tolerances() const { return tol ? Tolerances::uniform(*tol) : Tolerances{}; }
};

struct ParamFlags {
    std::optional<double> lambda, eta, k, h;
    std::optional<int> n, nu;

    void attach(CLI::App* app) {
        app->add_option("--lambda", lambda, "lambda parameter");
        app->add_option("--n", n, "n parameter");
        app->add_option("--eta", eta, "eta parameter");
        app->add_option("--k", k, "k parameter");
        app->add_option("--h", h, "h parameter");
        app->add_option("--nu", nu, "nu parameter");
    }
};

int exit_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::ZeroElement:
        case ErrorCode::ZeroVector:
        case ErrorCode::ZeroSpinor: return 3;
        case ErrorCode::UnclassifiableDimension:
        case ErrorCode::NotASubalgebra: return 4;
        case ErrorCode::Unsupported:
        case ErrorCode::UnsupportedS: return 5;
        default: return 2;
    }
}

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::Parse, what); }

double to_double(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const double x = std::stod(s, &used);
        if (used == s.size()) return x;
    } catch (const std::exception&) {
    }
    parse_fail(what + ": not a number: '" + s + "'");
}

int to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const int x = std::stoi(s, &used);
        if (used == s.size()) return x;
    } catch (const std::exception&) {
    }
    parse_fail(what + ": not an integer: '" + s + "'");
}

void set_param(Family f, SubgroupParams& p, const std::string& key, const std::string& value) {
    const unsigned used = family_params(f);
    const auto need = [&](unsigned flag) {
        if ((used & flag) == 0) parse_fail(std::string(to_string(f)) + " takes no parameter '" + key + "'");
    };
    if (key == "lambda") {
        need(kLambda);
        p.lambda = to_double(value, key);
    } else if (key == "n") {
        need(kN);
        p.n = to_int(value, key);
    } else if (key == "eta") {
        need(kEta);
        p.eta = to_double(value, key);
    } else if (key == "k") {
        need(kK);
        p.k = to_double(value, key);
    } else if (key == "h") {
        need(kH);
        p.h = to_double(value, key);
    } else if (key == "nu") {
        need(kNu);
        p.nu = to_int(value, key);
    } else {
        parse_fail("unknown parameter '" + key + "'");
    }
}

// "Name" or "Name:key=value,key=value"; flags override inline values.
SubgroupDescriptor parse_descriptor(const std::string& text, const ParamFlags& flags = {}) {
    const auto colon = text.find(':');
    const std::string name = text.substr(0, colon);
    const auto family = parse_family(name);
    if (!family) parse_fail("unknown subgroup family '" + name + "' (see 'catalog list')");
    if (*family == Family::H6_finite) parse_fail("H6_finite is not available from the command line");

    SubgroupParams p;
    if (colon != std::string::npos) {
        std::stringstream rest(text.substr(colon + 1));
        std::string item;
        while (std::getline(rest, item, ',')) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) parse_fail("expected key=value, got '" + item + "'");
            set_param(*family, p, item.substr(0, eq), item.substr(eq + 1));
        }
    }
    const auto flag = [&](const auto& opt, const char* key) {
        if (opt) {
            std::ostringstream os;
            os.precision(17);
            os << *opt;
            set_param(*family, p, key, os.str());
        }
    };
    flag(flags.lambda, "lambda");
    flag(flags.n, "n");
    flag(flags.eta, "eta");
    flag(flags.k, "k");
    flag(flags.h, "h");
    flag(flags.nu, "nu");
    return SubgroupDescriptor::make(*family, p);
}

Json read_json(const std::string& path, std::istream& in) {
    try {
        if (path == "-") return Json::parse(in);
        std::ifstream file(path);
        if (!file) parse_fail("cannot open '" + path + "'");
        return Json::parse(file);
    } catch (const Json::parse_error& e) {
        parse_fail(std::string("invalid JSON: ") + e.what());
    }
}

Json tolerances_json(const Tolerances& t) {
    return Json{{"det", t.det}, {"alg", t.alg}, {"cls", t.cls}, {"rank", t.rank}, {"member", t.member}};
}

Json envelope(const std::string& command, const Globals& g, Json result) {
    return Json{{"tool", kToolName},
                {"version", kVersion},
                {"command", command},
                {"tolerances", tolerances_json(g.tolerances())},
                {"result", std::move(result)}};
}

Json component_json(const ComponentId& id) {
    return Json{{"m", id.m}, {"nu", id.nu}, {"sign", id.sign}, {"flip", id.flip}};
}

std::string component_text(const ComponentId& id) {
    std::ostringstream os;
    os << "m=" << id.m << " nu=" << id.nu << " sign=" << (id.sign < 0 ? "-" : "+")
       << " flip=" << (id.flip ? "yes" : "no");
    return os.str();
}

std::string class_text(const SubalgebraClass& cls) {
    std::ostringstream os;
    os << to_string(cls.tag);
    if (cls.has_lambda()) os << " lambda=" << cls.lambda;
    return os.str();
}

Json class_json(const SubalgebraClass& cls) {
    Json j{{"tag", to_string(cls.tag)}, {"dim", cls.dim()}};
    if (cls.has_lambda()) j["lambda"] = cls.lambda;
    return j;
}

// ---- commands ----

void cmd_classify_element(const std::string& path, const Globals& g, std::istream& in, std::ostream& out) {
    const AlgebraElement x = algebra_from_json(read_json(path, in));
    const Tolerances tol = g.tolerances();
    const OrbitReport r = canonical_form(x, tol);
    const double residual = canonical_residual(x, r);
    if (g.json()) {
        Json res{{"class", to_string(r.element_class.tag)},
                 {"mu", r.element_class.mu},
                 {"nu", r.element_class.nu},
                 {"invariants", Json{{"c1", r.invariants.c1}, {"c2", r.invariants.c2}}},
                 {"representative", algebra_to_json(r.representative)},
                 {"conjugator", matrix_to_json(r.conjugator.matrix())},
                 {"residual", residual}};
        out << envelope("classify-element", g, std::move(res)).dump(2) << "\n";
        return;
    }
    out << "class: " << to_string(r.element_class.tag) << "\n"
        << "mu: " << r.element_class.mu << "\n"
        << "nu: " << r.element_class.nu << "\n"
        << "invariants: c1 = " << r.invariants.c1 << ", c2 = " << r.invariants.c2 << "\n"
        << "representative: " << r.representative << "\n"
        << "conjugator: " << r.conjugator << "\n"
        << "residual: " << residual << "\n";
}

void cmd_identify(const std::string& path, const Globals& g, std::istream& in, std::ostream& out) {
    const auto gens = generators_from_json(read_json(path, in));
    const Tolerances tol = g.tolerances();
    const Identification id = identify(closure(gens, tol), tol);
    if (g.json()) {
        Json res = class_json(id.cls);
        res["witness"] = matrix_to_json(id.witness.matrix());
        res["residual"] = id.residual;
        out << envelope("identify-subalgebra", g, std::move(res)).dump(2) << "\n";
        return;
    }
    out << class_text(id.cls) << "\n"
        << "dim: " << id.cls.dim() << "\n"
        << "witness: " << id.witness << "\n"
        << "residual: " << id.residual << "\n";
}

void cmd_contains(const SubgroupDescriptor& d, const std::string& path, const Globals& g, std::istream& in,
                  std::ostream& out) {
    const Tolerances tol = g.tolerances();
    const GroupElement elem(matrix_from_json(read_json(path, in)), tol);
    const bool member = contains(d, elem, tol);
    std::optional<ComponentId> id;
    if (member) id = component_of(d, elem, tol);
    if (g.json()) {
        Json res{{"descriptor", d.name()}, {"member", member}};
        if (id) res["component"] = component_json(*id);
        out << envelope("subgroup contains", g, std::move(res)).dump(2) << "\n";
        return;
    }
    out << (member ? "true" : "false") << "\n";
    if (id) out << "component: " << component_text(*id) << "\n";
}

void cmd_components(const SubgroupDescriptor& d, const Globals& g, std::ostream& out) {
    const auto comps = enumerate_components(d, g.bound);
    const auto count = component_count(d);
    if (g.json()) {
        Json list = Json::array();
        for (const auto& c : comps) {
            list.push_back(Json{{"id", component_json(c.id)},
                                {"representative", matrix_to_json(c.representative.matrix())}});
        }
        Json res{{"descriptor", d.name()}, {"bound", g.bound}};
        res["count"] = count ? Json(*count) : Json("infinite");
        res["components"] = std::move(list);
        out << envelope("subgroup components", g, std::move(res)).dump(2) << "\n";
        return;
    }
    out << d.name() << ": ";
    if (count) {
        out << *count << " component(s)\n";
    } else {
        out << "infinitely many components, |m| <= " << g.bound << " shown\n";
    }
    for (const auto& c : comps) out << component_text(c.id) << ": " << c.representative << "\n";
}

void cmd_normalizer(const SubgroupDescriptor& d, const Globals& g, std::ostream& out) {
    const SubgroupDescriptor n = normalizer(d);
    if (g.json()) {
        out << envelope("subgroup normalizer", g, Json{{"descriptor", d.name()}, {"normalizer", n.name()}}).dump(2)
            << "\n";
        return;
    }
    out << n.name() << "\n";
}

void cmd_minus_e(const SubgroupDescriptor& d, const Globals& g, std::ostream& out) {
    const bool r = contains_minus_e(d, g.tolerances());
    if (g.json()) {
        out << envelope("subgroup minus-e", g, Json{{"descriptor", d.name()}, {"contains_minus_e", r}}).dump(2)
            << "\n";
        return;
    }
    out << (r ? "true" : "false") << "\n";
}

FourVector four_vector(const std::vector<std::string>& xs) {
    if (xs.size() != 4) parse_fail("expected four components x0 x1 x2 x3");
    return {to_double(xs[0], "x0"), to_double(xs[1], "x1"), to_double(xs[2], "x2"), to_double(xs[3], "x3")};
}

void cmd_fourvector_classify(const FourVector& x, const Globals& g, std::ostream& out) {
    const FourVectorReport r = classify_fourvector(x, g.tolerances());
    const FourVector image = act_fourvector(r.witness, x);
    if (g.json()) {
        Json res{{"orbit", to_string(r.orbit.tag)},
                 {"cone", r.orbit.cone},
                 {"scale", r.orbit.scale},
                 {"stabilizer", r.stabilizer.name()},
                 {"space", r.label.name()},
                 {"witness", matrix_to_json(r.witness.matrix())},
                 {"image", Json::array({image.x0, image.x1, image.x2, image.x3})}};
        out << envelope("fourvector classify", g, std::move(res)).dump(2) << "\n";
        return;
    }
    out << to_string(r.orbit.tag) << ", stabilizer " << r.stabilizer.name() << ", space " << r.label.name() << "\n"
        << "scale: " << r.orbit.scale << "\n"
        << "witness: " << r.witness << "\n";
}

void cmd_fourvector_velocity(const FourVector& x, const Globals& g, std::ostream& out) {
    const VelocityReport r = classify_velocity(x, g.tolerances());
    if (g.json()) {
        Json res{{"orbit", to_string(r.tag)}, {"stabilizer", r.stabilizer.name()}, {"space", r.label.name()}};
        out << envelope("fourvector velocity", g, std::move(res)).dump(2) << "\n";
        return;
    }
    out << to_string(r.tag) << ", stabilizer " << r.stabilizer.name() << ", space " << r.label.name() << "\n";
}

void cmd_covmap(const std::string& a, const std::string& b, const Globals& g, std::ostream& out) {
    const SubgroupDescriptor h = parse_descriptor(a);
    const SubgroupDescriptor hp = parse_descriptor(b);
    const CovariantMapAnswer r = covariant_map_exists(h, hp);
    if (g.json()) {
        Json res{{"source", space_label(h).name()},
                 {"target", space_label(hp).name()},
                 {"answer", to_string(r.kind)},
                 {"reason", r.reason},
                 {"resolved", r.resolved}};
        res["count"] = r.count ? Json(*r.count) : Json(nullptr);
        out << envelope("covmap", g, std::move(res)).dump(2) << "\n";
        return;
    }
    out << to_string(r.kind) << "\n" << "reason: " << r.reason << "\n";
}

std::string params_text(unsigned mask) {
    std::string s;
    const std::pair<unsigned, const char*> names[] = {{kLambda, "lambda"}, {kN, "n"},  {kEta, "eta"},
                                                      {kK, "k"},           {kH, "h"},  {kNu, "nu"}};
    for (const auto& [flag, name] : names) {
        if (mask & flag) s += (s.empty() ? "" : ",") + std::string(name);
    }
    return s;
}

void cmd_catalog(const Globals& g, std::ostream& out) {
    if (g.json()) {
        Json list = Json::array();
        for (Family f : all_families()) {
            const std::string name(to_string(f));
            Json params = Json::array();
            const std::string p = params_text(family_params(f));
            std::stringstream ss(p);
            std::string item;
            while (std::getline(ss, item, ',')) params.push_back(item);
            list.push_back(Json{{"family", name},
                                {"space", "Pi" + name.substr(1)},
                                {"params", std::move(params)},
                                {"domain", family_domain(f)}});
        }
        out << envelope("catalog list", g, Json{{"families", std::move(list)}}).dump(2) << "\n";
        return;
    }
    for (Family f : all_families()) {
        const std::string name(to_string(f));
        out << name << "  space Pi" << name.substr(1);
        const std::string p = params_text(family_params(f));
        if (!p.empty()) out << "  params " << p;
        if (!family_domain(f).empty()) out << "  domain " << family_domain(f);
        out << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classification of subalgebras, subgroups and homogeneous spaces of SL(2,C)", kToolName};
    // -h stays free for the --h parameter flag.
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--tol", g.tol, "Uniform tolerance for det, alg, cls and member checks")
        ->check(CLI::PositiveNumber);
    app.add_option("--bound", g.bound, "Truncation |m| <= bound for component lists")->check(CLI::NonNegativeNumber);

    std::function<void()> action;

    std::string path;
    auto* classify = app.add_subcommand("classify-element", "Adjoint orbit of an algebra element");
    classify->add_option("input", path, "JSON file with {alpha, beta}, or - for stdin")->required();
    classify->fallthrough();
    classify->callback([&] { action = [&] { cmd_classify_element(path, g, in, out); }; });

    auto* ident = app.add_subcommand("identify-subalgebra", "Catalog class of the subalgebra generated by a list");
    ident->add_option("input", path, "JSON file with a generator list, or - for stdin")->required();
    ident->fallthrough();
    ident->callback([&] { action = [&] { cmd_identify(path, g, in, out); }; });

    auto* subgroup = app.add_subcommand("subgroup", "Subgroup catalog queries");
    subgroup->require_subcommand(1);
    subgroup->fallthrough();
    std::string descriptor;
    ParamFlags flags;

    auto* contains_cmd = subgroup->add_subcommand("contains", "Membership and component of a matrix");
    contains_cmd->add_option("descriptor", descriptor, "Family[:key=value,...]")->required();
    contains_cmd->add_option("input", path, "JSON file with [[a, b], [c, d]], or - for stdin")->required();
    flags.attach(contains_cmd);
    contains_cmd->fallthrough();
    contains_cmd->callback(
        [&] { action = [&] { cmd_contains(parse_descriptor(descriptor, flags), path, g, in, out); }; });

    auto* comps = subgroup->add_subcommand("components", "Representatives of the connected components");
    comps->add_option("descriptor", descriptor, "Family[:key=value,...]")->required();
    flags.attach(comps);
    comps->fallthrough();
    comps->callback([&] { action = [&] { cmd_components(parse_descriptor(descriptor, flags), g, out); }; });

    auto* norm = subgroup->add_subcommand("normalizer", "Normalizer in SL(2,C)");
    norm->add_option("descriptor", descriptor, "Family[:key=value,...]")->required();
    flags.attach(norm);
    norm->fallthrough();
    norm->callback([&] { action = [&] { cmd_normalizer(parse_descriptor(descriptor, flags), g, out); }; });

    auto* minus_e = subgroup->add_subcommand("minus-e", "Whether -e is a member");
    minus_e->add_option("descriptor", descriptor, "Family[:key=value,...]")->required();
    flags.attach(minus_e);
    minus_e->fallthrough();
    minus_e->callback([&] { action = [&] { cmd_minus_e(parse_descriptor(descriptor, flags), g, out); }; });

    auto* fourvector = app.add_subcommand("fourvector", "Orbits of four-vectors");
    fourvector->require_subcommand(1);
    fourvector->fallthrough();
    std::vector<std::string> xs;
    auto* fv_classify = fourvector->add_subcommand("classify", "Orbit, stabilizer and witness");
    fv_classify->add_option("x", xs, "x0 x1 x2 x3")->expected(4)->required()->allow_extra_args(false);
    fv_classify->fallthrough();
    fv_classify->callback([&] { action = [&] { cmd_fourvector_classify(four_vector(xs), g, out); }; });
    auto* fv_velocity = fourvector->add_subcommand("velocity", "Orbit of the ray in the velocity space");
    fv_velocity->add_option("x", xs, "x0 x1 x2 x3")->expected(4)->required()->allow_extra_args(false);
    fv_velocity->fallthrough();
    fv_velocity->callback([&] { action = [&] { cmd_fourvector_velocity(four_vector(xs), g, out); }; });

    std::string source, target;
    auto* covmap = app.add_subcommand("covmap", "Existence of a covariant map G/H -> G/H'");
    covmap->add_option("H", source, "Source stabilizer Family[:key=value,...]")->required();
    covmap->add_option("Hprime", target, "Target stabilizer Family[:key=value,...]")->required();
    covmap->fallthrough();
    covmap->callback([&] { action = [&] { cmd_covmap(source, target, g, out); }; });

    auto* catalog = app.add_subcommand("catalog", "Catalog listings");
    catalog->require_subcommand(1);
    catalog->fallthrough();
    auto* list = catalog->add_subcommand("list", "All subgroup families");
    list->fallthrough();
    list->callback([&] { action = [&] { cmd_catalog(g, out); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (action) action();
        return 0;
    } catch (const Error& e) {
        err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace lorentz::cli
