#pragma once

#include "hamnf/group.hpp"
#include "hamnf/matrix.hpp"
#include "hamnf/polynomial.hpp"
#include "hamnf/symplectic.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hamnf {

enum class Task { Classify, Verify, NormalForm };

std::string_view to_string(Task t);
Task parse_task(std::string_view name);

struct TermSpec {
    std::vector<unsigned> exponents;
    Scalar coeff;
};

/// A problem document after exact parsing and validation.
///
///     name: optional label
///     dimension: 4
///     omega: [[0, 0, 0, -1], [0, 0, 1, 0], [0, -1, 0, 0], [1, 0, 0, 0]]
///     hamiltonian:
///       linear_part: [[...]]        # optional; contributes the quadratic part
///       terms:
///         - {exponents: [1, 0, 1, 0], coeff: "-1"}
///     group:
///       max_size: 64
///       generators:
///         - {matrix: [[...]], s1: -1, s2: -1}
///     order: 6
///     task: normal-form            # classify | verify | normal-form
///     equivariant: true
///
/// Rationals are integers or "p/q" strings.
struct ProblemSpec {
    std::string name;
    std::size_t dimension = 0;
    Matrix omega;
    std::optional<Matrix> linear_part;
    std::vector<TermSpec> terms;
    std::vector<SignedGenerator> generators;
    std::size_t max_group_size = 4096;
    unsigned order = 0;
    Task task = Task::NormalForm;
    bool equivariant = false;

    SymplecticForm form() const { return SymplecticForm(omega); }
    /// H from terms plus the quadratic of linear_part, if any.
    Poly hamiltonian() const;
    std::optional<FiniteSymmetryGroup> group() const;
};

/// Throws ParseError for malformed documents and ValidationError for
/// well-formed ones that violate an invariant; messages name line and field.
ProblemSpec parse_problem(std::string_view text);
ProblemSpec parse_problem_file(const std::filesystem::path& path);

} // namespace hamnf
