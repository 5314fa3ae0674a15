#include "fixtures.hpp"

#include "hamnf/errors.hpp"
#include "hamnf/problem.hpp"
#include "hamnf/report.hpp"

#include <doctest.h>

#include <string>

using namespace hamnf;
using fx::mono;

namespace {

const std::string problems = HAMNF_PROBLEMS_DIR;

Error error_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e;
    }
    FAIL("expected an error");
    return Error(ErrorKind::InvalidArgument, "");
}

bool mentions(const Error& e, const std::string& needle) { return std::string(e.what()).find(needle) != std::string::npos; }

const char* plane = R"(
dimension: 2
omega: [[0, 1], [-1, 0]]
hamiltonian:
  terms:
    - {exponents: [2, 0], coeff: "1/2"}
    - {exponents: [0, 2], coeff: "1/2"}
    - {exponents: [4, 0], coeff: 1}
order: 4
)";

} // namespace

TEST_CASE("parse the shipped problem files") {
    const auto d4 = parse_problem_file(problems + "/dihedral_d4.yaml");
    CHECK(d4.dimension == 2);
    CHECK(d4.order == 7);
    CHECK(d4.equivariant);
    CHECK(d4.task == Task::NormalForm);
    CHECK(d4.group()->order() == 8);
    CHECK(d4.hamiltonian().homogeneous_part(2) == (mono({2, 0}) + mono({0, 2})) * rational(1, 2));

    const auto z = parse_problem_file(problems + "/z2xz2_reversible.yaml");
    CHECK(z.group()->order() == 4);
    CHECK(z.omega == fx::omega4().matrix());

    const auto s = parse_problem_file(problems + "/s_not_symplectic.yaml");
    CHECK(s.task == Task::Verify);
    REQUIRE(s.linear_part);
    CHECK(*s.linear_part == fx::l_ex3());
}

TEST_CASE("parse errors name line and field") {
    const auto e1 = error_of([] { parse_problem("dimension: 2\nomega: [[0, 1], [1, 0]]\n"); });
    CHECK(e1.kind() == ErrorKind::ValidationError);
    CHECK(mentions(e1, "omega not skew-symmetric"));
    CHECK(mentions(e1, "line 2"));

    const auto e2 = error_of([] { parse_problem("dimension: 2\nomega: [[0, 1/0], [-1, 0]]\n"); });
    CHECK(e2.kind() == ErrorKind::ParseError);
    CHECK(mentions(e2, "omega"));

    const auto e3 = error_of([] { parse_problem("dimension: 3\nomega: [[0]]\n"); });
    CHECK(e3.kind() == ErrorKind::ValidationError);

    const auto e4 = error_of([] { parse_problem("omega: [[0, 1], [-1, 0]]\n"); });
    CHECK(e4.kind() == ErrorKind::ParseError);
    CHECK(mentions(e4, "dimension"));

    const auto e5 = error_of([] { parse_problem("dimension: 2\nomega: [[0, 1], [-1, 0]]\ncolour: red\n"); });
    CHECK(mentions(e5, "unknown key"));

    const auto e6 = error_of([] { parse_problem("dimension: [2\n"); });
    CHECK(e6.kind() == ErrorKind::ParseError);

    const auto e7 = error_of([] { parse_problem("dimension: 2\nomega: [[0, 1], [-1, 0]]\ntask: dance\n"); });
    CHECK(mentions(e7, "task"));
    CHECK(e7.exit_code() == 2);
}

TEST_CASE("sign multiplicativity violations are validation errors naming the pair") {
    const char* doc = R"(
dimension: 2
omega: [[0, 1], [-1, 0]]
group:
  generators:
    - {matrix: [[-1, 0], [0, 1]], s1: -1, s2: 1}
    - {matrix: [[1, 0], [0, -1]], s1: -1, s2: 1}
    - {matrix: [[-1, 0], [0, -1]], s1: -1, s2: 1}
)";
    const auto e = error_of([&] { parse_problem(doc); });
    CHECK(e.kind() == ErrorKind::ValidationError);
    CHECK(mentions(e, "element"));
    CHECK(mentions(e, "group.generators"));
}

TEST_CASE("classify report reproduces the symmetry-type table") {
    auto spec = parse_problem_file(problems + "/z2xz2_reversible.yaml");
    spec.task = Task::Classify;
    const auto doc = run_task(spec);
    const auto& els = doc.machine.at("classification").at("elements");
    REQUIRE(els.size() == 4);
    std::map<std::string, std::string> by_matrix;
    for (const auto& e : els)
        by_matrix[e.at("matrix").dump()] = e.at("type").get<std::string>();
    CHECK(by_matrix[to_json(Matrix::identity(4)).dump()] == "SE");
    CHECK(by_matrix[to_json(fx::psi()).dump()] == "SR");
    CHECK(by_matrix[to_json(fx::tau() * fx::psi()).dump()] == "AE");
    CHECK(by_matrix[to_json(fx::tau()).dump()] == "AR");
    CHECK(doc.human.find("types present: SE SR AE AR") != std::string::npos);
}

TEST_CASE("verify refuses S outside Sp_omega") {
    const auto spec = parse_problem_file(problems + "/s_not_symplectic.yaml");
    const auto e = error_of([&] { run_task(spec); });
    CHECK(e.kind() == ErrorKind::SNotSymplectic);
    CHECK(e.exit_code() == 3);
    CHECK(mentions(e, "S not symplectic"));

    auto ok = parse_problem_file(problems + "/z2xz2_reversible.yaml");
    ok.task = Task::Verify;
    const auto doc = run_task(ok);
    CHECK(doc.machine.at("checks").size() == 6);
}

TEST_CASE("normal-form report") {
    const auto spec = parse_problem_file(problems + "/dihedral_d4.yaml");
    const auto doc = run_task(spec);
    const auto& nf = doc.machine.at("normal_form");
    CHECK(nf.at("certificates_passed").get<bool>());
    const Poly k = poly_from_json(nf.at("K"));
    CHECK(k.coefficient(Monomial({4, 0})) == rational(45, 56));
    CHECK(doc.human.find("K = ") != std::string::npos);

    auto plain = parse_problem(plane);
    const auto d2 = run_task(plain);
    CHECK(poly_from_json(d2.machine.at("normal_form").at("K")) ==
          (mono({2, 0}) + mono({0, 2})) * rational(1, 2) +
              (mono({4, 0}) + mono({2, 2}, 2) + mono({0, 4})) * rational(3, 8));

    plain.equivariant = true;
    CHECK(error_of([&] { run_task(plain); }).kind() == ErrorKind::ValidationError);
}

TEST_CASE("machine section round-trips exactly") {
    const auto doc = run_task(parse_problem_file(problems + "/z2xz2_reversible.yaml"));
    const auto reparsed = nlohmann::json::parse(doc.machine.dump());
    CHECK(reparsed == doc.machine);
    const auto& nf = reparsed.at("normal_form");
    for (const auto& d : nf.at("degrees")) {
        const GradedSubspace c = subspace_from_json(d.at("complement"));
        CHECK(to_json(c) == d.at("complement"));
        const Poly kk = poly_from_json(d.at("split").at("resonant"));
        CHECK(c.contains(kk));
    }
    CHECK(matrix_from_json(nf.at("linear_part")) == fx::l4());
    CHECK(scalar_from_json(to_json(rational(-7, 12))) == rational(-7, 12));
}

TEST_CASE("reports are byte-identical across runs") {
    const auto spec = parse_problem_file(problems + "/z2xz2_reversible.yaml");
    const auto a = run_task(spec), b = run_task(spec);
    CHECK(a.machine.dump() == b.machine.dump());
    CHECK(a.human == b.human);
}
