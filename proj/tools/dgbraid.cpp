#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "dgbraid/plan.hpp"

using namespace dgbraid;

namespace {

int cmdCheckCdga(const std::string& file) {
    CdgaPtr A = cdgaFromJson(loadJsonFile(file));
    auto rep = A->checkSquareZero();
    std::cout << rep.str(*A->algebra()) << "\n";
    return rep.pass ? 0 : 1;
}

int cmdSolvePoisson(const std::string& file, bool requireNonzeroPi, const std::string& emitDir) {
    LieNSpec spec = lieFromJson(loadJsonFile(file));
    PoissonSolution sol = solvePoisson(spec);
    std::cout << sol.describe(spec);

    if (requireNonzeroPi) {
        if (!sol.nonzeroPiDecided) {
            std::cout << "pi != 0: undecided (residual quadratic relations reported above)\n";
            return 1;
        }
        if (!sol.nonzeroPiFeasible) {
            std::cout << "pi != 0: infeasible\n";
            return 1;
        }
        std::cout << "pi != 0: feasible\n";
    }

    if (!emitDir.empty()) {
        std::filesystem::create_directories(emitDir);
        CdgaPtr A = buildCe(spec);
        auto P = std::make_shared<PolAlgebra>(A, 2);
        int k = 0;
        auto emit = [&](const RatVec& v) {
            PoissonCandidate cand = candidateFromVector(sol, P, v);
            std::ofstream out(emitDir + "/instance_" + std::to_string(k++) + ".json");
            out << poissonToJson(cand).dump(2) << "\n";
        };
        for (const auto& v : sol.genericComponent) emit(v);
        if (requireNonzeroPi && sol.nonzeroPiFeasible) emit(sol.nonzeroPiWitness);
        std::cout << "wrote " << k << " candidate files to " << emitDir << "\n";
    }
    return 0;
}

int cmdVerify(const std::string& planFile, int hbar, long seed, const std::string& jsonOut,
              bool serial) {
    Plan plan = loadPlanFile(planFile);
    PlanOptions opts;
    if (hbar >= 0) opts.hbarFilter = hbar;
    if (seed >= 0) opts.seedOverride = (uint64_t)seed;
    opts.parallel = !serial;
    PlanOutcome out = runPlan(plan, opts);
    std::cout << formatReport(out.report);
    if (!jsonOut.empty()) {
        std::ofstream f(jsonOut);
        f << out.report.dump(2) << "\n";
    }
    if (out.inputError) return 2;
    return out.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verifier for infinitesimal 2-braidings on dg-module categories"};
    app.require_subcommand(1);

    std::string cdgaFile;
    auto* check = app.add_subcommand("check-cdga", "square-zero check of a CDGA spec");
    check->add_option("file", cdgaFile, "algebra spec (JSON)")->required();

    std::string lieFile, emitDir;
    bool requireNonzeroPi = false;
    auto* solve = app.add_subcommand("solve-poisson", "solve the 2-shifted Poisson constraints");
    solve->add_option("file", lieFile, "Lie spec (JSON)")->required();
    solve->add_flag("--require-nonzero-pi", requireNonzeroPi,
                    "exit 1 unless a solution with pi != 0 exists");
    solve->add_option("--emit-dir", emitDir, "write solution instances as candidate files");

    std::string planFile, jsonOut;
    int hbar = -1;
    long seed = -1;
    bool serial = false;
    auto* verify = app.add_subcommand("verify", "run a verification plan");
    verify->add_option("plan", planFile, "check-plan file (JSON)")->required();
    verify->add_option("--hbar", hbar, "run only checks of this hbar order (0, 2 or 3)")
        ->check(CLI::IsMember({0, 2, 3}));
    verify->add_option("--seed", seed, "override the plan seed");
    verify->add_option("--json", jsonOut, "write the JSON report here");
    verify->add_flag("--serial", serial, "disable parallel check execution");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmdCheckCdga(cdgaFile);
        if (solve->parsed()) return cmdSolvePoisson(lieFile, requireNonzeroPi, emitDir);
        if (verify->parsed()) return cmdVerify(planFile, hbar, seed, jsonOut, serial);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
