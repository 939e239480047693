#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "fconn/io.hpp"
#include "fconn/reduce.hpp"
#include "json.hpp"

using namespace fconn;
using nlohmann::json;

namespace {

int exit_code(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::Parse:
            return 2;
        case ErrorKind::InsufficientPrecision:
            return 3;
        case ErrorKind::NotRegular:
        case ErrorKind::NotCompatible:
        case ErrorKind::NotRegularClass:
        case ErrorKind::InvalidFormalType:
            return 4;
        case ErrorKind::Resonant:
            return 5;
        case ErrorKind::Mismatch:
            return 6;
        default:
            return 1;
    }
}

std::optional<Q> opt_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    Q q = parse_rational(s);
    if (q <= 0) throw Error(ErrorKind::Parse, "precision must be positive");
    if (q.get_den() > 1000) throw Error(ErrorKind::Parse, "precision denominator is too large");
    return q;
}

void write_out(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::Parse, "cannot write '" + path + "'");
    out << text << "\n";
}

struct Options {
    std::string input, input2, precision, point, partition, out;
    int n = 0;
    bool as_json = false;
};

int cmd_slope(const Options& o) {
    SlopeResult s = slope(load_connection(o.input));
    if (o.as_json) {
        std::cout << json{{"slope", to_string(s.slope)}, {"x", s.x.str()}, {"fundamental", s.fundamental}}.dump(2) << "\n";
    } else {
        std::cout << "slope = " << to_string(s.slope) << ", x = " << s.x.str()
                  << ", fundamental = " << (s.fundamental ? "true" : "false") << "\n";
    }
    return 0;
}

int cmd_stratum(const Options& o) {
    Connection c = load_connection(o.input);
    ApartmentPoint x = o.point.empty() ? slope(c).x : parse_point(o.point);
    if (x.n() != c.n()) throw Error(ErrorKind::Mismatch, "point has the wrong size");
    Stratum st = leading_stratum(c, x);
    bool fund = is_fundamental(st);
    auto reg = fund ? is_regular_stratum(st) : std::nullopt;
    std::string regular = reg ? reg->cls.str() : "no";
    if (o.as_json) {
        std::cout << json{{"x", x.str()}, {"depth", to_string(st.r)}, {"fundamental", fund}, {"regular", regular},
                          {"leading", st.beta0.str()}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "x = " << x.str() << ", depth = " << to_string(st.r) << ", fundamental = " << (fund ? "true" : "false")
                  << ", regular = " << regular << "\n";
        std::cout << "leading = " << st.beta0.str() << "\n";
    }
    return 0;
}

int cmd_reduce(const Options& o) {
    Connection c = load_connection(o.input);
    TorusData t = TorusData::make(parse_partition(o.partition));
    ApartmentPoint x = o.point.empty() ? t.base_point : parse_point(o.point);
    if (x.n() != t.n()) throw Error(ErrorKind::Mismatch, "point has the wrong size");
    ReductionResult r = reduce_to_formal_type(c, t, x, opt_rational(o.precision));
    if (!o.out.empty()) write_out(o.out, formal_type_json(r.formal_type));
    if (o.as_json) {
        json doc{{"formal_type", json::parse(formal_type_json(r.formal_type))},
                 {"gauge", json::parse(connection_json(r.p.g))},
                 {"certified_grade", to_string(r.certified_grade)}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "formal type: " << r.formal_type.str() << "\n";
        std::cout << "p = " << r.p.g.str() << "\n";
        std::cout << "certified to grade " << to_string(r.certified_grade) << "\n";
    }
    return 0;
}

int cmd_orbit(const Options& o) {
    FormalType a1 = load_formal_type(o.input), a2 = load_formal_type(o.input2);
    if (!validate(a1).valid || !validate(a2).valid) throw Error(ErrorKind::Parse, "formal type file is not valid");
    if (!(a1.torus.cls == a2.torus.cls) || a1.depth != a2.depth)
        throw Error(ErrorKind::Mismatch, "formal types have different tori or depths");
    auto w = orbit_equivalent(a1, a2);
    if (o.as_json)
        std::cout << json{{"equivalent", w.has_value()}, {"word", w ? w->str(a1.torus) : ""}}.dump(2) << "\n";
    else if (w)
        std::cout << "equivalent via " << w->str(a1.torus) << "\n";
    else
        std::cout << "inequivalent\n";
    return 0;
}

int cmd_classes(const Options& o) {
    if (o.n < 1 || o.n > 8) throw Error(ErrorKind::Parse, "n must lie in 1..8");
    json doc = json::array();
    for (const WeylClass& c : regular_classes(o.n)) {
        std::string depths = regular_depths(c).str();
        if (o.as_json)
            doc.push_back({{"class", c.str()}, {"depths", depths}});
        else
            std::cout << c.str() << " depths " << depths << "\n";
    }
    if (o.as_json) std::cout << doc.dump(2) << "\n";
    return 0;
}

int cmd_compatible(const Options& o) {
    TorusData t = TorusData::make(parse_partition(o.partition));
    ApartmentPoint y = parse_point(o.point);
    if (t.n() != o.n || y.n() != o.n) throw Error(ErrorKind::Parse, "sizes of n, partition and point differ");
    auto wit = compatible_points(t, y);
    std::string center;
    if (wit) {
        center = "(";
        for (size_t j = 0; j < wit->center.size(); ++j) center += (j ? "," : "") + to_string(wit->center[j]);
        center += ")";
    }
    if (o.as_json) {
        json doc{{"member", wit.has_value()}};
        if (wit) doc["witness"] = {{"w", wit->w.str()}, {"center", center}};
        std::cout << doc.dump(2) << "\n";
    } else if (wit) {
        std::cout << "member: " << wit->w.str() << ", center = " << center << "\n";
    } else {
        std::cout << "not in Pi_gamma\n";
    }
    return 0;
}

int cmd_validate(const Options& o) {
    FormalType a = load_formal_type(o.input);
    std::optional<ApartmentPoint> x;
    if (!o.point.empty()) x = parse_point(o.point);
    Validation v = validate(a, x);
    if (o.as_json) {
        json hp = json::array();
        for (auto [i, j] : v.hyperplanes) hp.push_back({i + 1, j + 1});
        std::cout << json{{"valid", v.valid}, {"reason", v.reason}, {"hyperplanes", hp}}.dump(2) << "\n";
    } else if (v.valid) {
        std::cout << "valid";
        for (auto [i, j] : v.hyperplanes) std::cout << "; on hyperplane a" << i + 1 << " - a" << j + 1 << " = x" << i + 1 << " - x" << j + 1;
        std::cout << "\n";
    } else {
        std::cout << "invalid: " << v.reason << "\n";
    }
    return v.valid ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Formal types of meromorphic connections"};
    app.require_subcommand(1);
    Options o;
    auto json_flag = [&](CLI::App* c) { c->add_flag("--json", o.as_json, "emit the canonical JSON serialization"); };

    auto* s_slope = app.add_subcommand("slope", "slope of a connection and its fundamental stratum");
    s_slope->add_option("input", o.input, "connection file")->required();
    json_flag(s_slope);

    auto* s_stratum = app.add_subcommand("stratum", "leading stratum at a point");
    s_stratum->add_option("input", o.input, "connection file")->required();
    s_stratum->add_option("--point", o.point, "point a/b,c/d,... (default: from the slope)");
    json_flag(s_stratum);

    auto* s_reduce = app.add_subcommand("reduce", "gauge a connection to its formal type");
    s_reduce->add_option("input", o.input, "connection file")->required();
    s_reduce->add_option("--partition", o.partition, "torus type e1,e2,...")->required();
    s_reduce->add_option("--point", o.point, "point (default: the torus base point)");
    s_reduce->add_option("--precision", o.precision, "grade to certify, p/q");
    s_reduce->add_option("--out", o.out, "write the formal type here");
    json_flag(s_reduce);

    auto* s_orbit = app.add_subcommand("orbit", "decide whether two formal types are equivalent");
    s_orbit->add_option("first", o.input, "formal type file")->required();
    s_orbit->add_option("second", o.input2, "formal type file")->required();
    json_flag(s_orbit);

    auto* s_classes = app.add_subcommand("classes", "regular classes of S_n and their depths");
    s_classes->add_option("n", o.n)->required();
    json_flag(s_classes);

    auto* s_compat = app.add_subcommand("compatible-points", "membership of a point in Pi_gamma");
    s_compat->add_option("n", o.n)->required();
    s_compat->add_option("partition", o.partition)->required();
    s_compat->add_option("point", o.point)->required();
    json_flag(s_compat);

    auto* s_validate = app.add_subcommand("validate-type", "check a formal type file");
    s_validate->add_option("input", o.input, "formal type file")->required();
    s_validate->add_option("--point", o.point, "report resonance hyperplanes through this point");
    json_flag(s_validate);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        if (*s_slope) return cmd_slope(o);
        if (*s_stratum) return cmd_stratum(o);
        if (*s_reduce) return cmd_reduce(o);
        if (*s_orbit) return cmd_orbit(o);
        if (*s_classes) return cmd_classes(o);
        if (*s_compat) return cmd_compatible(o);
        if (*s_validate) return cmd_validate(o);
    } catch (const PrecisionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e);
    }
    return 1;
}
