#pragma once

#include <optional>

#include "dgbraid/io.hpp"
#include "dgbraid/rng.hpp"

namespace dgbraid {

/// One named check in a verification plan.
struct PlanCheckSpec {
    std::string name;
    std::string kind;
    std::vector<std::string> modules;
    std::vector<std::vector<std::string>> morphisms;  // named morphism tuples
    int hbarOrder = 0;
    bool mustPass = true;
};

/// A loaded verification plan: the CDGA, the Poisson candidate, a named
/// module dictionary, and the checks to run. The seed fully determines all
/// randomized samples.
struct Plan {
    CdgaPtr A;
    PolAlgebraPtr P;
    PoissonCandidate poisson;
    std::optional<LieNSpec> lie;
    std::vector<std::pair<std::string, ModulePtr>> modules;
    std::vector<std::pair<std::string, ModMap>> morphisms;  // closed degree-0
    std::vector<PlanCheckSpec> checks;
    uint64_t seed = 1;

    ModulePtr module(const std::string& name) const;
    const ModMap& morphism(const std::string& name) const;
};

Plan loadPlan(const Json& j, const std::string& baseDir);
Plan loadPlanFile(const std::string& path);

struct PlanOptions {
    std::optional<int> hbarFilter;  // run only checks with this hbar order
    std::optional<uint64_t> seedOverride;
    bool parallel = true;
};

struct PlanOutcome {
    Json report;
    bool pass = true;        // all must-pass checks passed
    bool inputError = false; // a check could not run (dangling reference etc.)
    int failed = 0;
};

PlanOutcome runPlan(const Plan& plan, const PlanOptions& opts);

/// Human-readable summary (one line per check; residues for failures,
/// polynomials truncated after 20 terms).
std::string formatReport(const Json& report);

}  // namespace dgbraid
