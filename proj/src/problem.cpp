#include "hamnf/problem.hpp"

#include "hamnf/errors.hpp"
#include "hamnf/rational.hpp"

#include <yaml-cpp/yaml.h>

#include <fstream>
#include <set>
#include <sstream>

namespace hamnf {

std::string_view to_string(Task t) {
    switch (t) {
    case Task::Classify: return "classify";
    case Task::Verify: return "verify";
    case Task::NormalForm: return "normal-form";
    }
    return "normal-form";
}

Task parse_task(std::string_view name) {
    if (name == "classify")
        return Task::Classify;
    if (name == "verify")
        return Task::Verify;
    if (name == "normal-form")
        return Task::NormalForm;
    fail(ErrorKind::ParseError, "unknown task '" + std::string(name) + "' (expected classify, verify or normal-form)");
}

Poly ProblemSpec::hamiltonian() const {
    Poly h(dimension);
    for (const auto& t : terms)
        h.add_term(Monomial(t.exponents), t.coeff);
    if (linear_part)
        h += quadratic_from_matrix(*linear_part, form());
    return h;
}

std::optional<FiniteSymmetryGroup> ProblemSpec::group() const {
    if (generators.empty())
        return std::nullopt;
    return generate_group(generators, max_group_size);
}

namespace {

std::string at(const YAML::Node& node, std::string_view field) {
    std::string s = "line " + std::to_string(node.Mark().line + 1) + ", field '" + std::string(field) + "'";
    return s;
}

[[noreturn]] void parse_fail(const YAML::Node& node, std::string_view field, const std::string& what) {
    fail(ErrorKind::ParseError, at(node, field) + ": " + what);
}

YAML::Node child(const YAML::Node& parent, const char* key, std::string_view field, bool required) {
    const YAML::Node n = parent[key];
    if (!n && required)
        parse_fail(parent, field, "missing required key '" + std::string(key) + "'");
    return n;
}

Scalar scalar_of(const YAML::Node& node, std::string_view field) {
    if (!node.IsScalar())
        parse_fail(node, field, "expected a rational number");
    try {
        return parse_scalar(node.Scalar());
    } catch (const Error& e) {
        parse_fail(node, field, e.what());
    }
}

long integer_of(const YAML::Node& node, std::string_view field) {
    if (!node.IsScalar())
        parse_fail(node, field, "expected an integer");
    try {
        std::size_t used = 0;
        const long v = std::stol(node.Scalar(), &used);
        if (used != node.Scalar().size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        parse_fail(node, field, "expected an integer, got '" + node.Scalar() + "'");
    }
}

Matrix matrix_of(const YAML::Node& node, std::string_view field, std::size_t dim) {
    if (!node.IsSequence() || node.size() != dim)
        parse_fail(node, field, "expected " + std::to_string(dim) + " rows");
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const YAML::Node row = node[i];
        if (!row.IsSequence() || row.size() != dim)
            parse_fail(row, field, "row " + std::to_string(i + 1) + " must have " + std::to_string(dim) + " entries");
        for (std::size_t j = 0; j < dim; ++j)
            m(i, j) = scalar_of(row[j], field);
    }
    return m;
}

int sign_of(const YAML::Node& node, std::string_view field) {
    const long v = integer_of(node, field);
    if (v != 1 && v != -1)
        parse_fail(node, field, "sign must be 1 or -1");
    return static_cast<int>(v);
}

ProblemSpec parse_root(const YAML::Node& root) {
    if (!root.IsMap())
        fail(ErrorKind::ParseError, "line 1: problem document must be a mapping");
    static const std::set<std::string> known{"name", "dimension", "omega", "hamiltonian", "group", "order", "task", "equivariant"};
    for (const auto& kv : root) {
        const std::string key = kv.first.as<std::string>();
        if (!known.contains(key))
            parse_fail(kv.first, key, "unknown key");
    }

    ProblemSpec spec;
    if (const auto n = root["name"])
        spec.name = n.as<std::string>();

    const YAML::Node dim = child(root, "dimension", "dimension", true);
    const long d = integer_of(dim, "dimension");
    if (d <= 0 || d % 2 != 0)
        fail(ErrorKind::ValidationError, at(dim, "dimension") + ": dimension must be a positive even integer");
    spec.dimension = static_cast<std::size_t>(d);

    const YAML::Node omega = child(root, "omega", "omega", true);
    spec.omega = matrix_of(omega, "omega", spec.dimension);
    try {
        (void)SymplecticForm(spec.omega);
    } catch (const Error& e) {
        fail(ErrorKind::ValidationError, at(omega, "omega") + ": " + e.what());
    }

    if (const YAML::Node ham = root["hamiltonian"]) {
        if (!ham.IsMap())
            parse_fail(ham, "hamiltonian", "expected a mapping with 'terms' and optional 'linear_part'");
        if (const YAML::Node lp = ham["linear_part"]) {
            spec.linear_part = matrix_of(lp, "hamiltonian.linear_part", spec.dimension);
            if (!is_hamiltonian_matrix(*spec.linear_part, spec.form()))
                fail(ErrorKind::ValidationError,
                     at(lp, "hamiltonian.linear_part") + ": L^T[omega] + [omega]L != 0, L is not omega-Hamiltonian");
        }
        if (const YAML::Node terms = ham["terms"]) {
            if (!terms.IsSequence())
                parse_fail(terms, "hamiltonian.terms", "expected a list");
            for (const auto& t : terms) {
                const YAML::Node ex = child(t, "exponents", "hamiltonian.terms", true);
                if (!ex.IsSequence() || ex.size() != spec.dimension)
                    parse_fail(ex, "hamiltonian.terms.exponents",
                               "expected " + std::to_string(spec.dimension) + " exponents");
                TermSpec ts;
                for (const auto& e : ex) {
                    const long v = integer_of(e, "hamiltonian.terms.exponents");
                    if (v < 0)
                        parse_fail(e, "hamiltonian.terms.exponents", "exponents must be non-negative");
                    ts.exponents.push_back(static_cast<unsigned>(v));
                }
                ts.coeff = scalar_of(child(t, "coeff", "hamiltonian.terms", true), "hamiltonian.terms.coeff");
                unsigned total = 0;
                for (unsigned e : ts.exponents)
                    total += e;
                if (spec.linear_part && total == 2)
                    fail(ErrorKind::ValidationError,
                         at(ex, "hamiltonian.terms") + ": quadratic terms conflict with linear_part");
                spec.terms.push_back(std::move(ts));
            }
        }
    }

    if (const YAML::Node grp = root["group"]) {
        if (const YAML::Node ms = grp["max_size"]) {
            const long m = integer_of(ms, "group.max_size");
            if (m <= 0)
                fail(ErrorKind::ValidationError, at(ms, "group.max_size") + ": must be positive");
            spec.max_group_size = static_cast<std::size_t>(m);
        }
        const YAML::Node gens = child(grp, "generators", "group", true);
        if (!gens.IsSequence() || gens.size() == 0)
            parse_fail(gens, "group.generators", "expected a non-empty list");
        for (const auto& g : gens) {
            SignedGenerator sg;
            sg.matrix = matrix_of(child(g, "matrix", "group.generators", true), "group.generators.matrix", spec.dimension);
            sg.s1 = sign_of(child(g, "s1", "group.generators", true), "group.generators.s1");
            sg.s2 = sign_of(child(g, "s2", "group.generators", true), "group.generators.s2");
            spec.generators.push_back(std::move(sg));
        }
        try {
            (void)spec.group();
        } catch (const Error& e) {
            fail(e.kind() == ErrorKind::ClosureExceeded ? ErrorKind::ClosureExceeded : ErrorKind::ValidationError,
                 at(gens, "group.generators") + ": " + e.what());
        }
    }

    if (const YAML::Node o = root["order"]) {
        const long r = integer_of(o, "order");
        if (r < 2)
            fail(ErrorKind::ValidationError, at(o, "order") + ": order must be at least 2");
        spec.order = static_cast<unsigned>(r);
    }
    if (const YAML::Node t = root["task"]) {
        try {
            spec.task = parse_task(t.as<std::string>());
        } catch (const Error& e) {
            parse_fail(t, "task", e.what());
        }
    }
    if (const YAML::Node e = root["equivariant"]) {
        try {
            spec.equivariant = e.as<bool>();
        } catch (const YAML::Exception&) {
            parse_fail(e, "equivariant", "expected true or false");
        }
    }
    return spec;
}

} // namespace

ProblemSpec parse_problem(std::string_view text) {
    YAML::Node root;
    try {
        root = YAML::Load(std::string(text));
    } catch (const YAML::ParserException& e) {
        fail(ErrorKind::ParseError, "line " + std::to_string(e.mark.line + 1) + ": " + e.msg);
    }
    return parse_root(root);
}

ProblemSpec parse_problem_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::ParseError, "cannot read problem file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_problem(ss.str());
}

} // namespace hamnf
