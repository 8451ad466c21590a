#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "commands.hpp"
#include "padelab/errors.hpp"

namespace {

using namespace padelab::cli;

void add_oracle_flags(CLI::App* cmd, OracleOptions& oracle) {
    cmd->add_option("--oracle", oracle.kind, "Source function: exp|geometric|polynomial|rational")
        ->required()
        ->check(CLI::IsMember({"exp", "geometric", "polynomial", "rational"}));
    cmd->add_option("--coeffs", oracle.poly_coeffs, "Polynomial coefficients, constant first");
    cmd->add_option("--num", oracle.num_coeffs, "Rational numerator coefficients");
    cmd->add_option("--den", oracle.den_coeffs, "Rational denominator coefficients");
}

int emit(const GlobalOptions& global, const std::string& payload) {
    if (global.out) {
        std::ofstream file(*global.out);
        if (!file) {
            std::cerr << "error: cannot open '" << *global.out << "' for writing\n";
            return 2;
        }
        file << payload;
        return 0;
    }
    std::cout << payload;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pade approximants about arbitrary centers: membership tables, density "
                 "constructions, and convergence experiments"};
    app.require_subcommand(1);

    GlobalOptions global;
    std::string mode = "float", format = "json", out;
    app.add_option("--mode", mode, "Arithmetic realization")
        ->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--grid-density", global.grid_density, "Default grid density for regions")
        ->check(CLI::PositiveNumber);
    app.add_option("--tol", global.tol, "Scale-aware zero threshold for floating determinants")
        ->check(CLI::PositiveNumber);
    app.add_option("--out", out, "Write the payload to a file instead of stdout");

    TableOptions table;
    auto* table_cmd = app.add_subcommand("table", "Membership/error grid over orders (p, q)");
    add_oracle_flags(table_cmd, table.oracle);
    table_cmd->add_option("--center", table.center, "Expansion center");
    table_cmd->add_option("--pmax", table.p_max, "Largest numerator order")->required();
    table_cmd->add_option("--qmax", table.q_max, "Largest denominator order")->required();
    table_cmd->add_option("--region", table.region,
                          "Error-measurement region (default disk:CENTER:0.5)");

    MembershipOptions membership;
    auto* membership_cmd =
        app.add_subcommand("membership", "Single normality verdict with determinant and scale");
    add_oracle_flags(membership_cmd, membership.oracle);
    membership_cmd->add_option("--center", membership.center, "Expansion center");
    membership_cmd->add_option("-p,--p", membership.p, "Numerator order")->required();
    membership_cmd->add_option("-q,--q", membership.q, "Denominator order")->required();

    ConstructOptions construct;
    auto* construct_cmd = app.add_subcommand(
        "construct", "Perturb a polynomial or rational function into its own approximant");
    construct_cmd
        ->add_option("--kind", construct.kind, "poly|poly-smooth|rational|rational-smooth")
        ->required()
        ->check(CLI::IsMember({"poly", "poly-smooth", "rational", "rational-smooth"}));
    construct_cmd->add_option("--poly", construct.poly_coeffs, "Base polynomial coefficients");
    construct_cmd->add_option("--num", construct.num_coeffs, "Base numerator coefficients");
    construct_cmd->add_option("--den", construct.den_coeffs, "Base denominator coefficients");
    construct_cmd->add_option("-p,--p", construct.p, "Perturbation exponent / numerator order")
        ->required();
    construct_cmd->add_option("-q,--q", construct.q, "Denominator order")->required();
    construct_cmd->add_option("--eps", construct.eps, "Approximation budget on the region")
        ->required();
    construct_cmd->add_option("--smooth-order", construct.smooth_order,
                              "Highest derivative bounded by eps (smooth kinds)");
    construct_cmd->add_option("--region", construct.region, "Sample region T");
    construct_cmd->add_option("--centers", construct.centers, "Verification centers");

    ConvergeOptions converge;
    auto* converge_cmd =
        app.add_subcommand("converge", "Approximation error along a family of orders");
    add_oracle_flags(converge_cmd, converge.oracle);
    converge_cmd->add_option("--indices", converge.indices,
                             "diagonal | row:Q | column:P | list:p/q,p/q,...");
    converge_cmd->add_option("--max-n", converge.max_n, "Number of steps")->required();
    converge_cmd->add_option("--centers", converge.centers, "Center set L");
    converge_cmd->add_option("--region", converge.region, "Measurement region K");
    converge_cmd->add_option("--deriv-orders", converge.deriv_orders,
                             "Report sup errors for derivatives 0..S");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // argument errors always exit with 2
    }
    global.mode = mode == "exact" ? Mode::Exact : Mode::Float;
    global.format = format == "json" ? Format::Json : Format::Csv;
    if (!out.empty()) global.out = out;

    try {
        if (table_cmd->parsed()) return emit(global, run_table(global, table));
        if (membership_cmd->parsed()) return emit(global, run_membership(global, membership));
        if (construct_cmd->parsed()) return emit(global, run_construct(global, construct));
        if (converge_cmd->parsed()) return emit(global, run_converge(global, converge));
    } catch (const padelab::ArgumentError& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    } catch (const padelab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
