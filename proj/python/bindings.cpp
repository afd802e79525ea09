#include "qtorus/error.hpp"
#include "qtorus/hc1.hpp"
#include "qtorus/json_io.hpp"
#include "qtorus/verify.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace qtorus;
using io::Json;

namespace {

// Structured results cross the boundary as JSON text; the Python package decodes them.
std::string dump(const Json& j) { return j.dump(); }

Json suite_json(const SuiteReport& s) {
    return {{"suite", s.name}, {"trials", s.trials}, {"checks", s.checks}, {"failures", s.failures},
            {"counters", s.counters}};
}

QMatrixPtr torus_from(const std::string& config) { return io::torus_from_json(Json::parse(config)); }

io::ModuleSpec spec_from(const std::string& spec) { return io::module_spec_from_json(Json::parse(spec)); }

FinRep rep_from(const std::string& spec) {
    const auto s = spec_from(spec);
    return make_rep(s.torus, s.d, s.points, s.rep);
}

Degree degree(const std::vector<std::int64_t>& v) { return Degree(IntVector(v.begin(), v.end())); }

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact arithmetic for rational quantum tori and toroidal Lie algebras";

    static py::exception<Error> exc(m, "QTorusError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            py::set_error(exc, (std::string(to_string(e.code())) + ": " + e.what()).c_str());
        } catch (const nlohmann::json::exception& e) {
            py::set_error(exc, (std::string("invalid-input: ") + e.what()).c_str());
        }
    });

    py::class_<Cyclotomic>(m, "Cyclotomic")
        .def(py::init<long>(), py::arg("value") = 0)
        .def(py::init([](std::int64_t conductor, const std::vector<std::pair<std::string, std::string>>& coeffs) {
                 std::vector<Rational> c;
                 for (const auto& [num, den] : coeffs)
                     c.emplace_back(Integer(num), Integer(den));
                 for (auto& x : c)
                     x.canonicalize();
                 return Cyclotomic(conductor, std::move(c));
             }),
             py::arg("conductor"), py::arg("coeffs"))
        .def_static("root_of_unity", &Cyclotomic::root_of_unity, py::arg("m"), py::arg("k"))
        .def_property_readonly("conductor", &Cyclotomic::conductor)
        .def("is_zero", &Cyclotomic::is_zero)
        .def("is_one", &Cyclotomic::is_one)
        .def("inverse", &Cyclotomic::inverse)
        .def("pow", &Cyclotomic::pow)
        .def("to_json", [](const Cyclotomic& c) { return dump(io::to_json(c)); })
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def(py::self != py::self)
        .def("__str__", &Cyclotomic::to_string)
        .def("__repr__", [](const Cyclotomic& c) { return "Cyclotomic(" + c.to_string() + ")"; });

    py::class_<QMatrix, std::shared_ptr<QMatrix>>(m, "Torus")
        .def(py::init([](const std::string& config) {
                 return std::const_pointer_cast<QMatrix>(torus_from(config));
             }),
             py::arg("config"))
        .def_property_readonly("n", &QMatrix::n)
        .def_property_readonly("conductor", &QMatrix::conductor)
        .def_property_readonly("exps", &QMatrix::exps)
        .def_property_readonly("radf_basis", [](const QMatrix& q) { return q.radf().basis(); })
        .def_property_readonly("central_powers", &QMatrix::central_powers)
        .def("in_radf", [](const QMatrix& q, const std::vector<std::int64_t>& a) { return q.in_radf(degree(a)); })
        .def("sigma", [](const QMatrix& q, const std::vector<std::int64_t>& a,
                         const std::vector<std::int64_t>& b) { return sigma(q, degree(a), degree(b)); })
        .def("skew", [](const QMatrix& q, const std::vector<std::int64_t>& a,
                        const std::vector<std::int64_t>& b) { return skew(q, degree(a), degree(b)); })
        .def("hc1_dim", [](const QMatrix& q, const std::vector<std::int64_t>& r) { return graded_dim(q, degree(r)); })
        .def("hc1_bruteforce_dim",
             [](const QMatrix& q, const std::vector<std::int64_t>& r, std::int64_t support) {
                 return bruteforce_dim(q, degree(r), support);
             },
             py::arg("r"), py::arg("support") = 3);

    m.def("bracket", [](const std::string& config, std::size_t d, const std::string& lhs, const std::string& rhs) {
        const auto q = torus_from(config);
        return dump(io::to_json(bracket(io::toroidal_from_json(q, d, Json::parse(lhs)),
                                        io::toroidal_from_json(q, d, Json::parse(rhs)))));
    });
    m.def("cocycle_suite", [](const std::string& config, std::size_t trials, std::uint64_t seed) {
        return dump(suite_json(cocycle_suite(torus_from(config), trials, seed)));
    });
    m.def("center_suite", [](const std::string& config, std::size_t trials, std::uint64_t seed) {
        return dump(suite_json(center_suite(torus_from(config), trials, seed)));
    });
    m.def("jacobi_suite", [](const std::string& config, std::size_t d, std::size_t trials, std::uint64_t seed) {
        return dump(suite_json(jacobi_suite(torus_from(config), d, trials, seed)));
    });
    m.def("fiber_decompose", [](const std::string& spec) {
        const auto s = spec_from(spec);
        Json fibers = Json::array();
        for (const auto& k : s.points.tuples()) {
            Json item = io::to_json(wedderburn(build_fiber(s.torus, s.points, k)));
            item["k"] = k;
            fibers.push_back(std::move(item));
        }
        return dump({{"fibers", fibers}, {"crt_rank", crt_rank(s.torus, s.points)}});
    });
    m.def("fiber_reps", [](const std::string& spec) {
        const auto s = spec_from(spec);
        const Pullback p = build_pullback(s.torus, s.points);
        Json reps = Json::array();
        for (const auto& block : p.reps)
            for (const auto& r : block)
                reps.push_back(io::to_json(r));
        return dump(reps);
    });
    m.def("module_dim", [](const std::string& spec) { return rep_from(spec).dim(); });
    m.def("module_axiom_suite", [](const std::string& spec, std::size_t trials, std::uint64_t seed) {
        return dump(suite_json(module_axiom_suite(rep_from(spec), trials, seed)));
    });
    m.def("vplus_dim", [](const std::string& spec) { return vplus(rep_from(spec)).size(); });
    m.def("vplus_weights", [](const std::string& spec) {
        const FinRep rep = rep_from(spec);
        Json out = Json::array();
        for (const auto& w : weight_spaces(rep, vplus(rep))) {
            Json values = Json::array();
            for (const auto& v : w.values)
                values.push_back(v.get_str());
            out.push_back({{"coroot_values", values},
                           {"weight", io::to_json(w.weight)},
                           {"mult", w.basis.size()},
                           {"dominant_integral", is_dominant_integral(w.weight)}});
        }
        return dump(out);
    });
    m.def("integrability_index",
          [](const std::string& spec, std::size_t i, std::size_t j, const std::vector<std::int64_t>& a) {
              const FinRep rep = rep_from(spec);
              const std::size_t d = rep.rank_d();
              if (i >= d || j >= d)
                  fail(ErrorCode::invalid_argument, "matrix index out of range");
              return integrability_index(rep, Matrix::unit(d, d, i, j), degree(a));
          });
    m.def("loop_checks", [](const std::string& spec, std::size_t truncation) {
        Json out = Json::array();
        for (const auto& c : loop_checks(rep_from(spec), truncation))
            out.push_back({{"beta", c.beta}, {"j", c.j}, {"lambda", c.lambda_value.get_str()},
                           {"forward", c.forward}, {"converse", c.converse}, {"bound_holds", c.bound_holds}});
        return dump(out);
    });
    m.def("highest_central_operator", [](const std::string& spec, std::size_t i, std::int64_t max_k) {
        const auto z = highest_central_operator(rep_from(spec), i, max_k);
        return dump({{"found", z.found}, {"k", z.k}, {"h", z.h}, {"degree", io::to_json(z.degree)},
                     {"rank", z.rank}, {"vplus_dim", z.vplus_dim}});
    });
    m.def("decompose_window", [](const std::string& spec, std::int64_t bound) {
        return dump(io::to_json(decompose_window(rep_from(spec), bound)));
    });
}
