#include "hamnf/errors.hpp"
#include "hamnf/group.hpp"
#include "hamnf/normal_form.hpp"
#include "hamnf/problem.hpp"
#include "hamnf/report.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace hamnf;

// Scalars cross the boundary as fractions.Fraction (ints and "p/q" strings accepted on input).
namespace pybind11::detail {
template <> struct type_caster<Scalar> {
    PYBIND11_TYPE_CASTER(Scalar, const_name("fractions.Fraction"));

    bool load(handle src, bool) {
        if (!src || PyFloat_Check(src.ptr()))
            return false;
        try {
            if (py::isinstance<py::str>(src)) {
                value = parse_scalar(src.cast<std::string>());
                return true;
            }
            const py::object frac = py::module_::import("fractions").attr("Fraction")(src);
            value = Scalar(mpz_class(py::str(frac.attr("numerator")).cast<std::string>(), 10),
                           mpz_class(py::str(frac.attr("denominator")).cast<std::string>(), 10));
            value.canonicalize();
            return true;
        } catch (const py::error_already_set&) {
            PyErr_Clear();
            return false;
        } catch (const Error&) {
            return false;
        }
    }

    static handle cast(const Scalar& s, return_value_policy, handle) {
        const py::int_ num(py::str(s.get_num().get_str(10)));
        const py::int_ den(py::str(s.get_den().get_str(10)));
        return py::module_::import("fractions").attr("Fraction")(num, den).release();
    }
};
} // namespace pybind11::detail

namespace {

using Rows = std::vector<std::vector<Scalar>>;

Matrix to_matrix(const Rows& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            fail(ErrorKind::DimensionMismatch, "ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

Rows from_matrix(const Matrix& m) {
    Rows rows(m.rows(), std::vector<Scalar>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            rows[i][j] = m(i, j);
    return rows;
}

Poly make_poly(std::size_t n, const std::map<std::vector<unsigned>, Scalar>& terms) {
    Poly p(n);
    for (const auto& [e, c] : terms) {
        if (e.size() != n)
            fail(ErrorKind::DimensionMismatch, "exponent vector length differs from num_vars");
        p.add_term(Monomial(e), c);
    }
    return p;
}

// exponent tuples as keys so the dict round-trips through Poly(n, terms)
py::dict poly_terms(const Poly& p) {
    py::dict out;
    for (const auto& [m, c] : p.terms())
        out[py::tuple(py::cast(m.exponents()))] = py::cast(c);
    return out;
}

FiniteSymmetryGroup make_group(const std::vector<std::tuple<Rows, int, int>>& gens, std::size_t max_size) {
    std::vector<SignedGenerator> g;
    for (const auto& [m, s1, s2] : gens)
        g.push_back({to_matrix(m), s1, s2});
    return generate_group(g, max_size);
}

py::object loads(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

} // namespace

PYBIND11_MODULE(_hamnf, m) {
    m.doc() = "Exact Hamiltonian normal forms with semisymplectic symmetry";

    static py::exception<Error> hamnf_error(m, "HamnfError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object err = hamnf_error;
            py::object inst = err(e.what());
            inst.attr("kind") = std::string(kind_name(e.kind()));
            inst.attr("exit_code") = e.exit_code();
            PyErr_SetObject(err.ptr(), inst.ptr());
        }
    });

    py::class_<Poly>(m, "Poly")
        .def(py::init(&make_poly), py::arg("num_vars"), py::arg("terms") = std::map<std::vector<unsigned>, Scalar>{})
        .def_static("variable", &Poly::variable)
        .def_property_readonly("num_vars", &Poly::num_vars)
        .def_property_readonly("degree", &Poly::degree)
        .def("terms", &poly_terms)
        .def("coefficient", [](const Poly& p, const std::vector<unsigned>& e) { return p.coefficient(Monomial(e)); })
        .def("homogeneous_part", &Poly::homogeneous_part)
        .def("truncated", &Poly::truncated)
        .def("is_zero", &Poly::is_zero)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self * Scalar())
        .def(Scalar() * py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__str__", &Poly::to_string)
        .def("__repr__", [](const Poly& p) { return "Poly(" + p.to_string() + ")"; });

    py::class_<SymplecticForm>(m, "SymplecticForm")
        .def(py::init([](const Rows& r) { return SymplecticForm(to_matrix(r)); }))
        .def_static("canonical", &SymplecticForm::canonical)
        .def_property_readonly("dim", &SymplecticForm::dim)
        .def_property_readonly("matrix", [](const SymplecticForm& w) { return from_matrix(w.matrix()); });

    m.def("poisson", &poisson, py::arg("f"), py::arg("g"), py::arg("omega"));
    m.def(
        "hamiltonian_field", [](const Poly& h, const SymplecticForm& w) { return hamiltonian_field(h, w).components; },
        py::arg("h"), py::arg("omega"));
    m.def(
        "quadratic_from_matrix", [](const Rows& a, const SymplecticForm& w) { return quadratic_from_matrix(to_matrix(a), w); },
        py::arg("a"), py::arg("omega"));
    m.def(
        "classify_matrix",
        [](const Rows& b, const SymplecticForm& w) {
            switch (classify_matrix(to_matrix(b), w)) {
            case MatrixClass::Symplectic: return "symplectic";
            case MatrixClass::Antisymplectic: return "antisymplectic";
            default: return "neither";
            }
        },
        py::arg("b"), py::arg("omega"));

    py::class_<FiniteSymmetryGroup>(m, "SymmetryGroup")
        .def(py::init(&make_group), py::arg("generators"), py::arg("max_size") = 4096)
        .def_property_readonly("order", &FiniteSymmetryGroup::order)
        .def_property_readonly("elements",
                               [](const FiniteSymmetryGroup& g) {
                                   std::vector<Rows> out;
                                   for (const auto& e : g.elements())
                                       out.push_back(from_matrix(e));
                                   return out;
                               })
        .def_property_readonly("sigma1", &FiniteSymmetryGroup::sigma1)
        .def_property_readonly("sigma2", &FiniteSymmetryGroup::sigma2)
        .def("symmetry_types", [](const FiniteSymmetryGroup& g) {
            std::vector<std::string> out;
            for (SymmetryType t : classify_symmetry_types(g).types)
                out.emplace_back(to_string(t));
            return out;
        });

    m.def(
        "complement_basis",
        [](const Rows& l, const SymplecticForm& w, unsigned k) { return complement_basis(to_matrix(l), w, k).subspace.basis_polys(); },
        py::arg("linear_part"), py::arg("omega"), py::arg("degree"));
    m.def(
        "equivariant_complement",
        [](const Rows& l, const SymplecticForm& w, const FiniteSymmetryGroup& g, unsigned k) {
            return equivariant_complement(to_matrix(l), w, g, k).subspace.basis_polys();
        },
        py::arg("linear_part"), py::arg("omega"), py::arg("group"), py::arg("degree"));

    m.def(
        "normal_form",
        [](const Poly& h, const SymplecticForm& w, unsigned order, const FiniteSymmetryGroup* g) {
            const NormalFormReport r = g ? equivariant_normal_form(Jet(h, order), w, *g, order)
                                         : normal_form(Jet(h, order), w, order);
            return py::make_tuple(r.normal_form.poly, loads(to_json(r)));
        },
        py::arg("h"), py::arg("omega"), py::arg("order"), py::arg("group") = nullptr);

    m.def(
        "run_problem",
        [](const std::string& text, std::optional<std::string> task) {
            ProblemSpec spec = parse_problem(text);
            if (task)
                spec.task = parse_task(*task);
            const ReportDocument doc = run_task(spec);
            return py::make_tuple(loads(doc.machine), doc.human);
        },
        py::arg("text"), py::arg("task") = py::none());
}
