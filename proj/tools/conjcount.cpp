#include <CLI11.hpp>

#include "conjcount/expr.hpp"
#include "conjcount/symmetric.hpp"
#include "conjcount/symord.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInternal = 4;

conjcount::Partition parse_partition_arg(const std::string& s) {
    std::vector<int> parts;
    for (const auto& tok : conjcount::split_commas(s)) {
        if (tok.empty()) continue;
        parts.push_back(std::stoi(tok));
    }
    return conjcount::Partition(parts);
}

int cmd_schur(const std::string& lambda_arg, int tau, const std::string& point_arg, int n,
              const std::string& mode_arg) {
    using namespace conjcount;
    if (!point_arg.empty()) {
        std::vector<Rat> point;
        for (const auto& tok : split_commas(point_arg)) point.push_back(parse_rat(tok));
        IndexMode mode = mode_arg == "box" ? IndexMode::Box : IndexMode::Weight;
        auto vals = schur_map_eval(n, tau, point, mode);
        for (size_t i = 0; i < vals.size(); ++i)
            std::cout << (i ? "," : "") << rat_to_string(vals[i]);
        std::cout << "\n";
        return kExitOk;
    }
    Partition lambda = parse_partition_arg(lambda_arg);
    std::cout << schur(lambda, tau).to_string() << "\n";
    return kExitOk;
}

int cmd_symord(const std::string& map_arg, long budget_ms, const std::string& out_dir) {
    using namespace conjcount;
    PolynomialMap p = parse_polynomial_map(map_arg);
    GroebnerBudget budget;
    if (budget_ms > 0) budget.max_steps = budget_ms * 100'000; // steps scale per ms
    SymordResult r = symord_via_elimination(p, budget);
    if (r.infinite()) std::cout << "infinite\n";
    else std::cout << *r.value << "\n";

    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        std::ofstream cert(std::filesystem::path(out_dir) / "symord_certificate.txt");
        cert << "# elimination ideal basis (variables x*, tag variables Y*)\n";
        cert << "# symord = min over generators of weighted degree, deg Y_k = k\n";
        for (const auto& g : r.elimination_basis.generators)
            cert << poly_to_string_xy(g, r.input_arity) << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symmetric-function, lattice and algebraic point counting toolkit"};
    app.require_subcommand(1);

    std::string lambda_arg, point_arg, mode_arg = "weight";
    int tau = 1, n = 0;
    auto* schur_cmd = app.add_subcommand("schur", "Schur polynomial or Schur map evaluation");
    schur_cmd->add_option("--lambda", lambda_arg, "partition, e.g. 2,1");
    schur_cmd->add_option("--tau", tau, "number of variables")->required();
    schur_cmd->add_option("--point", point_arg, "evaluation point (exact rationals)");
    schur_cmd->add_option("--n", n, "ambient n for the Schur map");
    schur_cmd->add_option("--mode", mode_arg, "index mode: weight | box");

    std::string map_arg, out_dir;
    long budget_ms = 0;
    auto* symord_cmd = app.add_subcommand("symord", "order of symmetric independence");
    symord_cmd->add_option("--map", map_arg, "polynomial map, e.g. \"x,x^2\"")->required();
    symord_cmd->add_option("--budget-ms", budget_ms, "work budget in milliseconds");
    symord_cmd->add_option("--out", out_dir, "directory for the Groebner certificate");

    CLI11_PARSE(app, argc, argv);

    try {
        if (schur_cmd->parsed()) return cmd_schur(lambda_arg, tau, point_arg, n, mode_arg);
        if (symord_cmd->parsed()) return cmd_symord(map_arg, budget_ms, out_dir);
    } catch (const conjcount::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitValidation;
}
