#include "hamnf/report.hpp"

#include "hamnf/errors.hpp"
#include "hamnf/rational.hpp"

#include <sstream>

namespace hamnf {

using nlohmann::json;

json to_json(const Scalar& s) { return to_string(s); }

json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

json to_json(const Poly& p) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back({{"exponents", m.exponents()}, {"coeff", to_json(c)}});
    return {{"num_vars", p.num_vars()}, {"terms", std::move(terms)}};
}

json to_json(const GradedSubspace& s) {
    json basis = json::array();
    for (const auto& p : s.basis_polys())
        basis.push_back(to_json(p));
    return {{"degree", s.degree()}, {"num_vars", s.num_vars()}, {"dim", s.dim()}, {"basis", std::move(basis)}};
}

Scalar scalar_from_json(const json& j) {
    require(j.is_string(), ErrorKind::ParseError, "expected a rational string");
    return parse_scalar(j.get<std::string>());
}

Matrix matrix_from_json(const json& j) {
    require(j.is_array(), ErrorKind::ParseError, "expected a matrix as a list of rows");
    std::vector<Vector> rows;
    const std::size_t cols = j.empty() ? 0 : j.front().size();
    for (const auto& r : j) {
        require(r.is_array() && r.size() == cols, ErrorKind::ParseError, "ragged matrix rows");
        Vector v;
        for (const auto& x : r)
            v.push_back(scalar_from_json(x));
        rows.push_back(std::move(v));
    }
    return Matrix::from_rows(rows, cols);
}

Poly poly_from_json(const json& j) {
    Poly p(j.at("num_vars").get<std::size_t>());
    for (const auto& t : j.at("terms"))
        p.add_term(Monomial(t.at("exponents").get<std::vector<unsigned>>()), scalar_from_json(t.at("coeff")));
    return p;
}

GradedSubspace subspace_from_json(const json& j) {
    const auto degree = j.at("degree").get<unsigned>();
    const auto n = j.at("num_vars").get<std::size_t>();
    std::vector<Poly> polys;
    for (const auto& b : j.at("basis"))
        polys.push_back(poly_from_json(b));
    return GradedSubspace::span(degree, n, polys);
}

namespace {

json to_json(const ComplementCertificate& c) {
    return {{"ambient_dim", c.ambient_dim},
            {"image_rank", c.image_rank},
            {"complement_dim", c.complement_dim},
            {"dimensions_add_up", c.dimensions_add_up},
            {"trivial_intersection", c.trivial_intersection},
            {"fischer_adjoint", c.fischer_adjoint},
            {"passed", c.passed()}};
}

json to_json(const EquivariantCertificate& c) {
    return {{"dim_invariant", c.dim_invariant},
            {"dim_ad_constraint", c.dim_ad_constraint},
            {"complement_dim", c.complement_dim},
            {"image_inside", c.image_inside},
            {"dimensions_add_up", c.dimensions_add_up},
            {"trivial_intersection", c.trivial_intersection},
            {"passed", c.passed()}};
}

json to_json(const PolyVectorField& f) {
    json out = json::array();
    for (const auto& c : f.components)
        out.push_back(to_json(c));
    return out;
}

json classification_json(const FiniteSymmetryGroup& g, const SymplecticForm& omega) {
    const auto types = classify_symmetry_types(g);
    const auto cosets = coset_structure(g);
    json elements = json::array();
    for (std::size_t i = 0; i < g.order(); ++i)
        elements.push_back({{"index", i},
                            {"matrix", to_json(g.element(i))},
                            {"sigma1", g.sigma1()[i]},
                            {"sigma2", g.sigma2()[i]},
                            {"class", std::string(to_string(classify_matrix(g.element(i), omega)))},
                            {"type", std::string(to_string(types.types[i]))}});
    json present = json::array();
    for (auto t : types.present)
        present.push_back(std::string(to_string(t)));
    const auto opt = [](const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); };
    return {{"order", g.order()},
            {"elements", std::move(elements)},
            {"types_present", std::move(present)},
            {"cosets",
             {{"gamma_pp", cosets.gamma_pp},
              {"delta1", opt(cosets.delta1)},
              {"delta2", opt(cosets.delta2)},
              {"delta3", opt(cosets.delta3)},
              {"index", cosets.index}}}};
}

std::string classification_text(const FiniteSymmetryGroup& g, const SymplecticForm& omega) {
    const auto types = classify_symmetry_types(g);
    const auto cosets = coset_structure(g);
    std::ostringstream out;
    out << "group of order " << g.order() << "\n";
    out << "  #  sigma1 sigma2  class           type  matrix\n";
    for (std::size_t i = 0; i < g.order(); ++i) {
        const std::string cls(to_string(classify_matrix(g.element(i), omega)));
        out << "  " << i << (i < 10 ? "  " : " ") << (g.sigma1()[i] > 0 ? "  +1  " : "  -1  ")
            << (g.sigma2()[i] > 0 ? "  +1  " : "  -1  ") << "  " << cls << std::string(16 - cls.size(), ' ')
            << to_string(types.types[i]) << "    " << g.element(i).to_string() << "\n";
    }
    out << "types present:";
    for (auto t : types.present)
        out << ' ' << to_string(t);
    out << "\nGamma_++ index " << cosets.index << ", delta1 "
        << (cosets.delta1 ? std::to_string(*cosets.delta1) : "-") << ", delta2 "
        << (cosets.delta2 ? std::to_string(*cosets.delta2) : "-") << ", delta3 "
        << (cosets.delta3 ? std::to_string(*cosets.delta3) : "-") << "\n";
    return out.str();
}

json problem_json(const ProblemSpec& spec) {
    return {{"name", spec.name},
            {"task", std::string(to_string(spec.task))},
            {"dimension", spec.dimension},
            {"omega", to_json(spec.omega)},
            {"order", spec.order},
            {"equivariant", spec.equivariant}};
}

Matrix linear_part_of(const ProblemSpec& spec, const SymplecticForm& omega) {
    if (spec.linear_part)
        return *spec.linear_part;
    return linearization(spec.hamiltonian().homogeneous_part(2), omega);
}

ReportDocument classify_task(const ProblemSpec& spec) {
    const auto g = spec.group();
    require(g.has_value(), ErrorKind::ValidationError, "task classify needs a group block");
    const SymplecticForm omega = spec.form();
    ReportDocument doc;
    doc.machine = {{"problem", problem_json(spec)}, {"status", "ok"}, {"classification", classification_json(*g, omega)}};
    doc.human = classification_text(*g, omega);
    return doc;
}

ReportDocument verify_task(const ProblemSpec& spec) {
    const SymplecticForm omega = spec.form();
    const auto g = spec.group();
    json checks = json::array();
    std::ostringstream text;
    const auto record = [&](const std::string& name) {
        checks.push_back({{"check", name}, {"passed", true}});
        text << "  ok  " << name << "\n";
    };
    record("omega is skew-symmetric and invertible");

    if (g) {
        verify_semisymplectic(*g, omega);
        record("group action is sigma1-semisymplectic");
    }
    const Matrix l = linear_part_of(spec, omega);
    if (!is_hamiltonian_matrix(l, omega))
        fail(ErrorKind::NotHamiltonianMatrix, "L^T[omega] + [omega]L != 0: L is not in sp_omega");
    record("L is omega-Hamiltonian");
    if (!is_hamiltonian_matrix(l.transpose(), omega))
        fail(ErrorKind::SNotSymplectic,
             "S not symplectic: L^T is not in sp_omega, so S = closure{exp(s L^T)} is not a subgroup of Sp_omega");
    record("L^T is omega-Hamiltonian (S acts symplectically)");
    if (g) {
        if (!check_equivariance(PolyVectorField::linear(l), *g, g->sigma2()))
            fail(ErrorKind::SymmetryHypothesisFailed, "linear field x -> Lx is not Gamma_sigma2-equivariant");
        record("x -> Lx is Gamma_sigma2-equivariant");
        if (!check_invariance(spec.hamiltonian(), *g, g->sigma1_sigma2()))
            fail(ErrorKind::SymmetryHypothesisFailed, "H is not Gamma_{sigma1 sigma2}-invariant");
        record("H is Gamma_{sigma1 sigma2}-invariant");
    }

    ReportDocument doc;
    doc.machine = {{"problem", problem_json(spec)}, {"status", "ok"}, {"checks", std::move(checks)},
                   {"linear_part", to_json(l)}};
    doc.human = "verification passed\n" + text.str();
    return doc;
}

std::string field_text(const PolyVectorField& f) {
    std::string s = "(";
    for (std::size_t i = 0; i < f.dim(); ++i)
        s += (i ? ", " : "") + f.components[i].to_string();
    return s + ")";
}

ReportDocument normal_form_task(const ProblemSpec& spec) {
    require(spec.order >= 2, ErrorKind::ValidationError, "task normal-form needs an order of at least 2");
    const SymplecticForm omega = spec.form();
    const Jet h(spec.hamiltonian(), spec.order);
    NormalFormReport r;
    std::optional<FiniteSymmetryGroup> g;
    if (spec.equivariant) {
        g = spec.group();
        require(g.has_value(), ErrorKind::ValidationError, "equivariant normal form needs a group block");
        r = equivariant_normal_form(h, omega, *g, spec.order);
    } else {
        r = normal_form(h, omega, spec.order);
    }
    if (!r.certificates_passed())
        fail(ErrorKind::DecompositionCertificateFailed, "a certificate failed; refusing to emit a report");

    ReportDocument doc;
    doc.machine = {{"problem", problem_json(spec)}, {"status", "ok"}, {"normal_form", to_json(r)}};
    if (g)
        doc.machine["classification"] = classification_json(*g, omega);

    std::ostringstream out;
    out << "normal form up to order " << r.order << (r.equivariant ? " (equivariant)" : "") << "\n";
    if (r.degenerate_linear_part)
        out << "note: linear part is zero, every term is resonant\n";
    out << "K = " << r.normal_form.poly.to_string() << "\n";
    out << "X_K = " << field_text(r.field) << "\n";
    for (const auto& d : r.degrees) {
        out << "degree " << d.degree << ": dim P^k " << d.ambient_dim << ", rank ad " << d.certificate.image_rank
            << ", complement dim " << d.complement.dim() << ", K^k = " << d.split.resonant.to_string() << "\n";
    }
    if (g)
        out << classification_text(*g, omega);
    doc.human = out.str();
    return doc;
}

} // namespace

json to_json(const NormalFormReport& r) {
    json degrees = json::array();
    for (const auto& d : r.degrees) {
        json rec = {{"degree", d.degree},
                    {"ambient_dim", d.ambient_dim},
                    {"complement", to_json(d.complement)},
                    {"certificate", to_json(d.certificate)},
                    {"bookkeeping", d.bookkeeping},
                    {"split",
                     {{"resonant", to_json(d.split.resonant)},
                      {"generator", to_json(d.split.generator)},
                      {"removed", to_json(d.split.removed)}}}};
        if (d.equivariant_certificate)
            rec["equivariant_certificate"] = to_json(*d.equivariant_certificate);
        degrees.push_back(std::move(rec));
    }
    json out = {{"order", r.order},
                {"input", to_json(r.input.poly)},
                {"linear_part", to_json(r.linear_part)},
                {"degenerate_linear_part", r.degenerate_linear_part},
                {"equivariant", r.equivariant},
                {"inner_product", "fischer"},
                {"degrees", std::move(degrees)},
                {"K", to_json(r.normal_form.poly)},
                {"X_K", to_json(r.field)},
                {"certificates_passed", r.certificates_passed()}};
    if (r.symmetry) {
        const auto& s = *r.symmetry;
        json classes = json::array();
        for (auto c : s.semisymplectic.classes)
            classes.push_back(std::string(to_string(c)));
        out["symmetry"] = {{"element_classes", std::move(classes)},
                           {"hamiltonian_invariant", s.hamiltonian_invariant},
                           {"linear_part_equivariant", s.linear_part_equivariant},
                           {"normal_form_invariant", s.normal_form_invariant},
                           {"field_equivariant", s.field_equivariant}};
    }
    return out;
}

ReportDocument run_task(const ProblemSpec& spec) {
    switch (spec.task) {
    case Task::Classify: return classify_task(spec);
    case Task::Verify: return verify_task(spec);
    case Task::NormalForm: return normal_form_task(spec);
    }
    fail(ErrorKind::InvalidArgument, "unknown task");
}

} // namespace hamnf
