#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fconn/formaltype.hpp"
#include "fconn/io.hpp"
#include "fconn/reduce.hpp"
#include "fconn/strata.hpp"
#include "fconn/torus.hpp"

namespace py = pybind11;
using namespace fconn;

namespace {

std::optional<Q> opt_rational(const std::optional<std::string>& s) {
    if (!s) return std::nullopt;
    return parse_rational(*s);
}

py::dict slope_of(const std::string& text) {
    SlopeResult s = slope(parse_connection(text));
    py::dict d;
    d["slope"] = to_string(s.slope);
    d["x"] = s.x.str();
    d["fundamental"] = s.fundamental;
    return d;
}

py::dict reduce(const std::string& text, const std::string& partition, const std::optional<std::string>& point,
                const std::optional<std::string>& precision) {
    Connection c = parse_connection(text);
    TorusData t = TorusData::make(parse_partition(partition));
    ApartmentPoint x = point ? parse_point(*point) : t.base_point;
    if (x.n() != t.n()) throw Error(ErrorKind::Mismatch, "point has the wrong size");
    ReductionResult r = reduce_to_formal_type(c, t, x, opt_rational(precision));
    py::dict d;
    d["formal_type"] = formal_type_json(r.formal_type);
    d["summary"] = r.formal_type.str();
    d["gauge"] = connection_json(r.p.g);
    d["certified_grade"] = to_string(r.certified_grade);
    return d;
}

std::optional<std::string> orbit(const std::string& first, const std::string& second) {
    FormalType a1 = parse_formal_type(first), a2 = parse_formal_type(second);
    if (!validate(a1).valid || !validate(a2).valid) throw Error(ErrorKind::Parse, "formal type is not valid");
    if (!(a1.torus.cls == a2.torus.cls) || a1.depth != a2.depth)
        throw Error(ErrorKind::Mismatch, "formal types have different tori or depths");
    auto w = orbit_equivalent(a1, a2);
    if (!w) return std::nullopt;
    return w->str(a1.torus);
}

std::vector<std::pair<std::string, std::string>> classes(int n) {
    if (n < 1 || n > 8) throw Error(ErrorKind::Parse, "n must lie in 1..8");
    std::vector<std::pair<std::string, std::string>> out;
    for (const WeylClass& c : regular_classes(n)) out.emplace_back(c.str(), regular_depths(c).str());
    return out;
}

bool valid_type(const std::string& text) { return validate(parse_formal_type(text)).valid; }

}  // namespace

PYBIND11_MODULE(_fconn, m) {
    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<PrecisionError>(m, "PrecisionError", base.ptr());

    m.def("slope", &slope_of, py::arg("connection_json"));
    m.def("reduce", &reduce, py::arg("connection_json"), py::arg("partition"), py::arg("point") = py::none(),
          py::arg("precision") = py::none());
    m.def("orbit", &orbit, py::arg("first_json"), py::arg("second_json"));
    m.def("classes", &classes, py::arg("n"));
    m.def("valid_type", &valid_type, py::arg("formal_type_json"));
}
