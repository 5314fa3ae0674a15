// hamnf: exact normal forms of omega-Hamiltonian fields with semisymplectic symmetry.
#include "hamnf/errors.hpp"
#include "hamnf/problem.hpp"
#include "hamnf/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

struct Options {
    std::string problem;
    std::optional<unsigned> order;
    bool equivariant = false;
    std::string output;
    std::string format = "both";
};

int run(hamnf::Task task, const Options& opt) {
    hamnf::ProblemSpec spec = hamnf::parse_problem_file(opt.problem);
    spec.task = task;
    if (opt.order)
        spec.order = *opt.order;
    if (opt.equivariant)
        spec.equivariant = true;

    const hamnf::ReportDocument doc = hamnf::run_task(spec);
    std::string text;
    if (opt.format == "json" || opt.format == "both")
        text += doc.machine.dump(2) + "\n";
    if (opt.format == "text" || opt.format == "both")
        text += doc.human;

    if (opt.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(opt.output, std::ios::binary);
        if (!out)
            hamnf::fail(hamnf::ErrorKind::ParseError, "cannot write " + opt.output);
        out << text;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact truncated normal forms of omega-Hamiltonian vector fields"};
    app.require_subcommand(1);
    Options opt;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("problem", opt.problem, "Problem file (YAML)")->required()->check(CLI::ExistingFile);
        sub->add_option("--output,-o", opt.output, "Write the report to this path");
        sub->add_option("--format", opt.format, "Report sections to emit")
            ->check(CLI::IsMember({"json", "text", "both"}));
    };
    CLI::App* classify = app.add_subcommand("classify", "Classify group elements as SE/SR/AE/AR");
    add_common(classify);
    CLI::App* verify = app.add_subcommand("verify", "Check the symplectic and symmetry hypotheses");
    add_common(verify);
    CLI::App* nf = app.add_subcommand("normal-form", "Compute a normal form up to the given order");
    add_common(nf);
    nf->add_option("--order,-r", opt.order, "Truncation order r")->check(CLI::Range(2u, 64u));
    nf->add_flag("--equivariant", opt.equivariant, "Use the group block and preserve its symmetries");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const hamnf::Task task = classify->parsed() ? hamnf::Task::Classify
                             : verify->parsed() ? hamnf::Task::Verify
                                                : hamnf::Task::NormalForm;
    try {
        return run(task, opt);
    } catch (const hamnf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
