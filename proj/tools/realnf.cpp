#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "realnf/classifier.hpp"
#include "realnf/parser.hpp"

using json = nlohmann::ordered_json;
using namespace realnf;

namespace {

std::string endpoint_str(const std::optional<Rat>& v, bool lower) {
    if (!v) return lower ? "-inf" : "+inf";
    return rat_str(*v);
}

json interval_json(const Interval& iv) {
    return json{{"lower", endpoint_str(iv.lo, true)},
                {"upper", endpoint_str(iv.hi, false)},
                {"lower_closed", iv.lo_closed},
                {"upper_closed", iv.hi_closed}};
}

json record_json(const NormalFormRecord& r) {
    return json{{"type", r.subtype.label()},
                {"normal_form", r.normal_form},
                {"minpoly", r.parameter.minpoly.str("z")},
                {"interval", interval_json(r.parameter.iv)}};
}

SingularityType parse_type_label(const std::string& label) {
    SingularityType t{Family::E12};
    size_t i = 0;
    auto read_int = [&]() {
        size_t start = i;
        while (i < label.size() && std::isdigit(static_cast<unsigned char>(label[i]))) ++i;
        if (i == start) throw std::invalid_argument("bad type label: " + label);
        return std::stoi(label.substr(start, i - start));
    };
    if (label.rfind("Ytilde", 0) == 0) {
        i = 6;
        t.fam = Family::Ytilde;
        t.r = read_int();
    } else if (label[0] == 'Y') {
        i = 1;
        t.fam = Family::Yrs;
        t.r = read_int();
        if (i >= label.size() || label[i] != ',')
            throw std::invalid_argument("bad Y label: " + label);
        ++i;
        t.s = read_int();
    } else {
        char c = label[0];
        i = 1;
        int n = read_int();
        switch (c) {
            case 'E':
                if (n == 12) t.fam = Family::E12;
                else if (n == 13) t.fam = Family::E13;
                else if (n == 14) t.fam = Family::E14;
                else throw std::invalid_argument("bad E index");
                break;
            case 'Z':
                if (n == 11) t.fam = Family::Z11;
                else if (n == 12) t.fam = Family::Z12;
                else if (n == 13) t.fam = Family::Z13;
                else throw std::invalid_argument("bad Z index");
                break;
            case 'W':
                if (n == 12) t.fam = Family::W12;
                else if (n == 13) t.fam = Family::W13;
                else throw std::invalid_argument("bad W index");
                break;
            case 'X':
                if (n == 9) t.fam = Family::X9;
                else {
                    t.fam = Family::X9k;
                    t.k = n - 9;
                    if (t.k <= 0) throw std::invalid_argument("bad X index");
                }
                break;
            case 'J':
                if (n == 10) t.fam = Family::J10;
                else {
                    t.fam = Family::J10k;
                    t.k = n - 10;
                    if (t.k <= 0) throw std::invalid_argument("bad J index");
                }
                break;
            default:
                throw std::invalid_argument("bad type label: " + label);
        }
    }
    for (; i < label.size(); ++i) {
        if (label[i] == '+') t.signs.push_back(1);
        else if (label[i] == '-') t.signs.push_back(-1);
        else throw std::invalid_argument("bad sign suffix: " + label);
    }
    TypeData td = type_data(t);
    if (static_cast<int>(t.signs.size()) != td.sign_arity)
        throw std::invalid_argument("type " + label + " needs " + std::to_string(td.sign_arity) +
                                    " sign(s)");
    return t;
}

Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    Rat r(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    r.canonicalize();
    return r;
}

// seeded right-equivalent representative: unimodular shears composed with a
// perturbation above the determinacy degree
BiPoly<Rat> perturb_normal_form(const SingularityType& t, const Rat& a, std::uint64_t seed) {
    TypeData td = type_data(t);
    BiPoly<Rat> f = normal_form_poly(t, a);
    SplitMix64 rng(seed);
    Automorphism<Rat> m = Automorphism<Rat>::identity();
    int shears = 2 + static_cast<int>(rng.below(2));
    for (int i = 0; i < shears; ++i) {
        long v = rng.range(-3, 3);
        Automorphism<Rat> s = (i % 2 == 0)
                                  ? Automorphism<Rat>::linear(Rat(1), Rat(v), Rat(0), Rat(1))
                                  : Automorphism<Rat>::linear(Rat(1), Rat(0), Rat(v), Rat(1));
        m = compose(s, m);
    }
    if (rng.below(2)) {
        Automorphism<Rat> flip = Automorphism<Rat>::linear(Rat(-1), Rat(0), Rat(0), Rat(1));
        m = compose(flip, m);
    }
    f = apply_substitution(f, m);
    int base = td.mu + 2;
    int nterms = 1 + static_cast<int>(rng.below(3));
    for (int n = 0; n < nterms; ++n) {
        int d = base + static_cast<int>(rng.below(2));
        int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(d + 1)));
        long c = rng.range(-4, 4);
        f.add_term(i, d - i, Rat(c));
    }
    return f;
}

int run_classify(const std::string& text, bool as_json, bool diagnostics) {
    json out;
    out["input"] = text;
    BiPoly<Rat> f;
    try {
        f = parse_polynomial(text);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    }
    Diagnostics diag;
    std::vector<NormalFormRecord> recs;
    std::string status = "classified";
    std::string detail;
    try {
        recs = classify(f, &diag);
    } catch (const ClassifyError& e) {
        if (e.kind == FailKind::Internal) {
            std::cerr << "internal error: " << e.what() << "\n";
            return 1;
        }
        status = status_of(e.kind);
        detail = e.what();
    }
    if (as_json) {
        out["status"] = status;
        json rj = json::array();
        for (const auto& r : recs) rj.push_back(record_json(r));
        out["records"] = rj;
        if (!detail.empty()) out["detail"] = detail;
        if (diagnostics) {
            json dj;
            dj["mu"] = diag.mu;
            dj["corank"] = diag.corank;
            if (!diag.complex_type.empty()) dj["complex_type"] = diag.complex_type;
            out["diagnostics"] = dj;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "input: " << text << "\n";
        std::cout << "status: " << status << "\n";
        if (!detail.empty()) std::cout << "detail: " << detail << "\n";
        if (diagnostics) {
            std::cout << "mu: " << diag.mu << "\ncorank: " << diag.corank << "\n";
            if (!diag.complex_type.empty())
                std::cout << "complex type: " << diag.complex_type << "\n";
        }
        for (const auto& r : recs) {
            std::cout << r.subtype.label() << "  " << r.normal_form
                      << "  minpoly: " << r.parameter.minpoly.str("z")
                      << "  interval: " << r.parameter.iv.str() << "\n";
        }
    }
    return status == "classified" ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arnold normal forms of real corank-2, modality-1 plane curve singularities"};
    app.require_subcommand(0, 1);

    std::string poly_text, format = "text";
    bool diagnostics = false;
    app.add_option("polynomial", poly_text, "polynomial in x, y with rational coefficients");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--diagnostics", diagnostics, "include mu, corank, and the complex type");

    auto* perturb = app.add_subcommand("perturb", "emit a seeded right-equivalent germ");
    std::string type_label, param = "1";
    std::uint64_t seed = 1;
    perturb->add_option("--type", type_label, "subtype label, e.g. E14+ or X9++")->required();
    perturb->add_option("--param", param, "rational parameter value")->required();
    perturb->add_option("--seed", seed, "PRNG seed (splitmix64)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (perturb->parsed()) {
            SingularityType t = parse_type_label(type_label);
            Rat a = parse_rat(param);
            TypeData td = type_data(t);
            if (td.restriction == Restriction::ANonzero && a == 0)
                throw std::invalid_argument("parameter must be nonzero for this type");
            bool sq4 = (t.fam == Family::X9 && t.signs[0] == t.signs[1]) ||
                       (t.fam == Family::J10 && t.signs[0] == 1);
            if (td.restriction == Restriction::ASquaredNot4 && sq4 && (a == 2 || a == -2))
                throw std::invalid_argument("parameter must avoid a^2 = 4 for this type");
            std::cout << render_poly(perturb_normal_form(t, a, seed)) << "\n";
            return 0;
        }
        if (poly_text.empty()) {
            std::cerr << "usage: realnf \"<polynomial>\" [--format text|json] [--diagnostics]\n";
            return 1;
        }
        return run_classify(poly_text, format == "json", diagnostics);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
