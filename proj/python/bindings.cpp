#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qhm/boundary_moduli.hpp"
#include "qhm/errors.hpp"
#include "qhm/json_io.hpp"
#include "qhm/positive_moduli.hpp"
#include "qhm/sampling.hpp"
#include "qhm/triangle.hpp"

namespace py = pybind11;
using namespace qhm;

// Data crosses the boundary as JSON text; the python package wraps it with json.loads/dumps.
namespace {

Tuple tuple_of(const std::string& s, const std::string& model) {
    return tuple_from_json(parse_json_text(s), parse_model(model));
}

std::string dump(const json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_qhmoduli, m) {
    m.doc() = "moduli of point tuples in quaternionic hyperbolic space (JSON-text interface)";

    py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
    auto domain = py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
    py::register_exception<RealizationError>(m, "RealizationError", PyExc_ValueError);
    (void)domain;

    m.def("gram", [](const std::string& p, const std::string& model) { return dump(gram(tuple_of(p, model))); },
          py::arg("tuple"), py::arg("model") = "ball");
    m.def(
        "inertia",
        [](const std::string& G, double eps) {
            return dump(inertia(parse_json_text(G).get<GramMatrix>(), Tolerances::with_eps(eps)));
        },
        py::arg("gram"), py::arg("eps") = 1e-9);
    m.def(
        "realize",
        [](const std::string& G, int n, const std::string& model, double eps) {
            return dump(tuple_to_json(
                realize(parse_json_text(G).get<GramMatrix>(), n, parse_model(model), Tolerances::with_eps(eps))));
        },
        py::arg("gram"), py::arg("n"), py::arg("model") = "ball", py::arg("eps") = 1e-9);
    m.def(
        "boundary_coordinate",
        [](const std::string& p, const std::string& model, double eps) {
            return dump(boundary_coordinate(tuple_of(p, model), Tolerances::with_eps(eps)));
        },
        py::arg("tuple"), py::arg("model") = "ball", py::arg("eps") = 1e-9);
    m.def(
        "positive_coordinate",
        [](const std::string& p, const std::string& model, double eps) {
            return dump(positive_coordinate(tuple_of(p, model), Tolerances::with_eps(eps)));
        },
        py::arg("tuple"), py::arg("model") = "ball", py::arg("eps") = 1e-9);
    m.def(
        "congruent",
        [](const std::string& a, const std::string& b, const std::string& model, double eps) {
            const Tolerances tol = Tolerances::with_eps(eps);
            const Tuple p = tuple_of(a, model), q = tuple_of(b, model);
            if (classify(p[0], tol) == PointClass::Null) {
                if (p.size() != q.size()) throw UsageError("tuples of different length");
                return congruent_boundary(p, q, tol);
            }
            return congruent(p, q, tol);
        },
        py::arg("a"), py::arg("b"), py::arg("model") = "ball", py::arg("eps") = 1e-9);
    m.def(
        "rotation_normalize",
        [](const std::string& v, double eps) {
            const auto q = parse_json_text(v).get<std::vector<Quaternion>>();
            const RotationNormalized rn = rotation_normalize_vector(q, Tolerances::with_eps(eps));
            return dump(json{{"values", rn.values}, {"stratum", rn.stratum}, {"rotation", rn.rotation.q()}});
        },
        py::arg("values"), py::arg("eps") = 1e-9);
    m.def(
        "pair_moduli",
        [](const std::string& p, const std::string& model) {
            const Tuple t = tuple_of(p, model);
            if (t.size() != 2) throw UsageError("pair_moduli needs exactly two points");
            return pair_moduli(t[0], t[1]);
        },
        py::arg("pair"), py::arg("model") = "ball");
    m.def("triangle_det", [](double r1, double r2, double r3, double a) { return triangle_det({r1, r2, r3, a}); });
    m.def("triangle_exists", [](double r1, double r2, double r3, double a) { return triangle_exists({r1, r2, r3, a}); });
    m.def(
        "realize_triangle",
        [](double r1, double r2, double r3, double a, const std::string& model) {
            return dump(tuple_to_json(realize_triangle({r1, r2, r3, a}, parse_model(model))));
        },
        py::arg("r1"), py::arg("r2"), py::arg("r3"), py::arg("alpha"), py::arg("model") = "ball");
    m.def(
        "random_tuple",
        [](const std::string& kind, int n, int mm, std::uint64_t seed, const std::string& model) {
            std::mt19937_64 rng(seed);
            const Model md = parse_model(model);
            Tuple p;
            if (kind == "boundary-tuple")
                p = random_boundary_tuple(n, mm, rng, md);
            else if (kind == "positive-regular")
                p = random_positive_regular(n, mm, rng, md);
            else if (kind == "positive-parabolic")
                p = random_positive_parabolic(n, mm, rng, md);
            else
                throw UsageError("unknown kind " + kind);
            return dump(tuple_to_json(p));
        },
        py::arg("kind"), py::arg("n"), py::arg("m"), py::arg("seed") = 0, py::arg("model") = "ball");
    m.def(
        "random_isometry",
        [](int n, std::uint64_t seed, const std::string& model) {
            return dump(json(random_isometry(n, seed, parse_model(model))));
        },
        py::arg("n"), py::arg("seed") = 0, py::arg("model") = "ball");
    m.def(
        "apply_isometry",
        [](const std::string& g, const std::string& p) {
            const Isometry iso = parse_json_text(g).get<Isometry>();
            return dump(tuple_to_json(iso(tuple_of(p, to_string(iso.model)))));
        },
        py::arg("isometry"), py::arg("tuple"));
}
