#include "dgbraid/plan.hpp"

#include <filesystem>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dgbraid {

ModulePtr Plan::module(const std::string& name) const {
    for (const auto& [n, m] : modules)
        if (n == name) return m;
    throw Error("plan: dangling module reference '" + name + "'");
}

const ModMap& Plan::morphism(const std::string& name) const {
    for (const auto& [n, m] : morphisms)
        if (n == name) return m;
    throw Error("plan: dangling morphism reference '" + name + "'");
}

Plan loadPlan(const Json& j, const std::string& baseDir) {
    Plan plan;
    auto resolve = [&](const std::string& p) {
        std::filesystem::path fp(p);
        if (fp.is_absolute() || baseDir.empty()) return p;
        return (std::filesystem::path(baseDir) / fp).string();
    };

    if (j.contains("lie")) {
        plan.lie = lieFromJson(loadJsonFile(resolve(j.at("lie").get<std::string>())));
        plan.A = buildCe(*plan.lie);
    } else if (j.contains("algebra")) {
        const Json& a = j.at("algebra");
        plan.A = a.is_string() ? cdgaFromJson(loadJsonFile(resolve(a.get<std::string>())))
                               : cdgaFromJson(a);
    } else
        throw Error("plan: needs \"lie\" or \"algebra\"");

    int shift = j.value("shift", 2);
    plan.P = std::make_shared<PolAlgebra>(plan.A, shift);
    plan.seed = j.value("seed", (uint64_t)1);

    if (j.contains("poisson")) {
        const Json& p = j.at("poisson");
        if (p.is_string())
            plan.poisson = poissonFromJson(loadJsonFile(resolve(p.get<std::string>())), plan.P);
        else if (p.contains("components"))
            plan.poisson = poissonFromJson(p, plan.P);
        else if (p.contains("solve")) {
            // an instance of the solver family, with named parameter values
            if (!plan.lie) throw Error("plan: poisson.solve requires a lie spec");
            PoissonSolution sol = solvePoisson(*plan.lie);
            const auto& fam = sol.genericComponent;
            RatVec v(sol.nPi + sol.nTilde, Rational(0));
            const Json& params = p.at("solve");
            for (size_t i = 0; i < fam.size(); ++i) {
                std::string key = "p" + std::to_string(i);
                Rational c = params.contains(key)
                                 ? Rational(params.at(key).get<std::string>())
                                 : Rational(0);
                c.canonicalize();
                for (size_t t = 0; t < v.size(); ++t) v[t] += c * fam[i][t];
            }
            plan.poisson = candidateFromVector(sol, plan.P, v);
        }
    } else {
        plan.poisson.pol = plan.P;
    }

    if (j.contains("modules"))
        for (const auto& mj : j.at("modules")) {
            std::string name = mj.at("name").get<std::string>();
            ModulePtr m;
            if (mj.contains("file"))
                m = moduleFromJson(loadJsonFile(resolve(mj.at("file").get<std::string>())), plan.A);
            else if (mj.contains("inline"))
                m = moduleFromJson(mj.at("inline"), plan.A);
            else if (mj.contains("strict_rep")) {
                if (!plan.lie) throw Error("plan: strict_rep requires a lie spec");
                const auto& reps = plan.lie->reps;
                auto it = reps.find(mj.at("strict_rep").get<std::string>());
                if (it == reps.end())
                    throw Error("plan: unknown rep '" + mj.at("strict_rep").get<std::string>() + "'");
                m = strictRepModule(*plan.lie, it->second, plan.A);
            } else if (mj.contains("free")) {
                std::vector<DgMod::BasisElem> basis;
                int k = 0;
                for (const auto& dg : mj.at("free"))
                    basis.push_back({name + std::to_string(++k), dg.get<int>()});
                int r = (int)basis.size();
                m = std::make_shared<DgMod>(plan.A, std::move(basis),
                                            std::vector<GradedPoly>(r * r,
                                                                    GradedPoly(plan.A->algebra())));
            } else if (mj.contains("tensor")) {
                ObjTuple factors;
                for (const auto& f : mj.at("tensor"))
                    factors.push_back(plan.module(f.get<std::string>()));
                m = tensorAll(factors);
            } else if (mj.contains("gauge_of")) {
                Rng rng(plan.seed ^ (0x9e37u + (uint64_t)mj.value("twist", 0)));
                m = gaugeTransform(rng, plan.module(mj.at("gauge_of").get<std::string>()));
            } else
                throw Error("plan: module '" + name + "' has no recognized constructor");
            plan.modules.push_back({name, m});
        }

    if (j.contains("morphisms"))
        for (const auto& mj : j.at("morphisms")) {
            std::string name = mj.at("name").get<std::string>();
            ModulePtr src = plan.module(mj.at("src").get<std::string>());
            ModulePtr tgt = plan.module(mj.at("tgt").get<std::string>());
            ModMap f(src, tgt, 0);
            if (mj.contains("closure_of"))
                // a declarative closed map: homDiff of a given degree -1 map
                f = homDiff(mapFromJson(mj.at("closure_of"), src, tgt));
            else
                f = mapFromJson(mj, src, tgt);
            if (f.degree() != 0 || !homDiff(f).isZero())
                throw Error("plan: morphism '" + name + "' must be a closed degree-0 map");
            plan.morphisms.push_back({name, std::move(f)});
        }

    if (j.contains("checks"))
        for (const auto& cj : j.at("checks")) {
            PlanCheckSpec c;
            c.name = cj.at("name").get<std::string>();
            c.kind = cj.at("kind").get<std::string>();
            if (cj.contains("modules"))
                for (const auto& m : cj.at("modules")) c.modules.push_back(m.get<std::string>());
            if (cj.contains("morphisms"))
                for (const auto& tuple : cj.at("morphisms")) {
                    std::vector<std::string> names;
                    for (const auto& n : tuple) names.push_back(n.get<std::string>());
                    c.morphisms.push_back(std::move(names));
                }
            c.hbarOrder = cj.value("hbar_order", 0);
            c.mustPass = cj.value("must_pass", true);
            plan.checks.push_back(std::move(c));
        }
    return plan;
}

Plan loadPlanFile(const std::string& path) {
    return loadPlan(loadJsonFile(path), std::filesystem::path(path).parent_path().string());
}

namespace {

uint64_t fnv(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (char c : s) {
        h ^= (unsigned char)c;
        h *= 1099511628211ull;
    }
    return h;
}

struct Samples {
    std::vector<ObjTuple> tuples;
    std::vector<MorTuple> mors;
    std::vector<MorTuple> morsMinus1;
};

/// Tuples of the given width from the check's module list (cyclic windows),
/// one seeded morphism tuple per object tuple, and degree -1 tuples.
Samples buildSamples(const Plan& plan, const PlanCheckSpec& spec, int width, Rng& rng) {
    Samples s;
    ObjTuple mods;
    for (const auto& n : spec.modules) mods.push_back(plan.module(n));
    if ((int)mods.size() < width)
        throw Error("plan check '" + spec.name + "': needs at least " + std::to_string(width) +
                    " modules");
    size_t n = mods.size();
    for (size_t k = 0; k < n; ++k) {
        ObjTuple t;
        for (int w = 0; w < width; ++w) t.push_back(mods[(k + w) % n]);
        s.tuples.push_back(t);
        if ((int)n == width && n > 1) break;  // a single window covers the list
    }
    for (const auto& t : s.tuples) {
        MorTuple ids;
        for (const auto& m : t) ids.push_back(ModMap::identity(m));
        s.mors.push_back(ids);
        MorTuple rnd;
        for (const auto& m : t) rnd.push_back(randomClosedMap(rng, m, m));
        s.mors.push_back(rnd);
        MorTuple down;
        bool first = true;
        for (const auto& m : t) {
            if (first) {
                down.push_back(randomMap(rng, m, m, -1));
                first = false;
            } else
                down.push_back(randomClosedMap(rng, m, m));
        }
        s.morsMinus1.push_back(down);
    }
    // named morphism tuples listed by the check
    for (const auto& tuple : spec.morphisms) {
        if ((int)tuple.size() != width)
            throw Error("plan check '" + spec.name + "': morphism tuple width mismatch");
        MorTuple named;
        for (const auto& n : tuple) named.push_back(plan.morphism(n));
        s.mors.push_back(std::move(named));
        s.tuples.push_back(srcTupleOf(s.mors.back()));
    }
    return s;
}

CheckReport runCheck(const Plan& plan, const PlanCheckSpec& spec, uint64_t seed) {
    Rng rng(seed ^ fnv(spec.name));
    const GradedPoly pi2 = plan.poisson.components.count(2)
                               ? plan.poisson.components.at(2)
                               : GradedPoly(plan.P->ext());

    if (spec.kind == "square_zero") {
        CheckReport rep;
        rep.name = spec.name;
        auto r = plan.A->checkSquareZero();
        Residue res;
        res.label = "d(d(gen))";
        res.strictZero = res.modExactZero = res.pass = r.pass;
        if (!r.pass) res.detail = r.str(*plan.A->algebra());
        rep.add(res);
        return rep;
    }
    if (spec.kind == "mc") {
        CheckReport rep;
        rep.name = spec.name;
        auto r = mcCheck(plan.poisson);
        if (!r.structural) {
            Residue res;
            res.label = "structural";
            res.pass = false;
            res.detail = r.structuralError;
            rep.add(res);
            return rep;
        }
        for (const auto& w : r.weights) {
            Residue res;
            res.label = "weight " + std::to_string(w.weight);
            res.strictZero = res.modExactZero = res.pass = w.pass;
            res.supportCount = w.residue.support();
            if (!w.pass) res.detail = w.residue.str();
            rep.add(res);
        }
        return rep;
    }
    if (spec.kind == "t_closed") {
        CheckReport rep;
        rep.name = spec.name;
        Samples s = buildSamples(plan, spec, 2, rng);
        int idx = 0;
        for (const auto& t : s.tuples)
            rep.add(strictResidue("homDiff(t) #" + std::to_string(idx++),
                                  homDiff(tSingle(*plan.P, pi2, t[0], t[1]))));
        return rep;
    }
    if (spec.kind == "xi_pseudonaturality") {
        Samples s = buildSamples(plan, spec, 1, rng);
        // off-diagonal closed morphisms between distinct modules
        ObjTuple mods;
        for (const auto& n : spec.modules) mods.push_back(plan.module(n));
        for (size_t a = 0; a + 1 < mods.size(); ++a)
            s.mors.push_back({randomClosedMap(rng, mods[a], mods[a + 1])});
        return checkPseudonaturality(spec.name, xiCS(plan.A), s.tuples, s.mors, s.morsMinus1);
    }
    if (spec.kind == "t_pseudonaturality") {
        Samples s = buildSamples(plan, spec, 2, rng);
        return checkPseudonaturality(spec.name, tCS(plan.P, pi2), s.tuples, s.mors, s.morsMinus1);
    }
    if (spec.kind == "hexagons") {
        Samples s = buildSamples(plan, spec, 3, rng);
        CheckReport rep = checkHexagons(*plan.P, pi2, s.tuples, s.mors);
        rep.name = spec.name;
        return rep;
    }
    if (spec.kind == "gamma_equivariance") {
        Samples s = buildSamples(plan, spec, 2, rng);
        CheckReport rep = checkGammaEquivariance(*plan.P, pi2, s.tuples, s.mors);
        rep.name = spec.name;
        return rep;
    }
    if (spec.kind == "tij") {
        Samples s3 = buildSamples(plan, spec, 3, rng);
        Samples s4 = buildSamples(plan, spec, 4, rng);
        CheckReport rep = checkTijCalculus(plan.P, pi2, s3.tuples, s3.mors, s4.tuples, s4.mors);
        rep.name = spec.name;
        return rep;
    }
    if (spec.kind == "gamma_modification") {
        Samples s = buildSamples(plan, spec, 3, rng);
        CheckReport rep = checkGammaModification(plan.P, pi2, s.tuples, s.mors);
        rep.name = spec.name;
        return rep;
    }
    if (spec.kind == "first_order_hexagon") {
        Samples s3 = buildSamples(plan, spec, 3, rng);
        Samples s2 = buildSamples(plan, spec, 2, rng);
        CheckReport rep = checkFirstOrderHexagon(plan.A, plan.P, pi2, s3.tuples, s3.mors,
                                                 s2.tuples, s2.mors);
        rep.name = spec.name;
        return rep;
    }
    if (spec.kind == "phi_mod_hbar3") {
        Samples s3 = buildSamples(plan, spec, 3, rng);
        Samples s4 = buildSamples(plan, spec, 4, rng);
        CheckReport rep = checkPhiModHbar3(plan.A, plan.P, pi2, s3.tuples, s3.mors, s4.tuples,
                                           s4.mors);
        rep.name = spec.name;
        return rep;
    }
    throw Error("plan: unknown check kind '" + spec.kind + "'");
}

std::string truncateDetail(const std::string& s) {
    // Residue polynomials are listed in full up to 20 terms.
    int terms = 0;
    size_t i = 0;
    for (; i < s.size(); ++i) {
        if (s[i] == '+' || s[i] == ';') ++terms;
        if (terms >= 20) break;
    }
    if (i == s.size()) return s;
    return s.substr(0, i) + " ... (truncated)";
}

}  // namespace

PlanOutcome runPlan(const Plan& plan, const PlanOptions& opts) {
    uint64_t seed = opts.seedOverride.value_or(plan.seed);
    std::vector<const PlanCheckSpec*> selected;
    for (const auto& c : plan.checks)
        if (!opts.hbarFilter || c.hbarOrder == *opts.hbarFilter) selected.push_back(&c);

    std::vector<CheckReport> results(selected.size());
    std::vector<std::string> errors(selected.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
#endif
    for (int i = 0; i < (int)selected.size(); ++i) {
        try {
            results[i] = runCheck(plan, *selected[i], seed);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    }

    PlanOutcome out;
    out.report["seed"] = seed;
    out.report["checks"] = Json::array();
    for (size_t i = 0; i < selected.size(); ++i) {
        const PlanCheckSpec& spec = *selected[i];
        Json cj;
        cj["name"] = spec.name;
        cj["kind"] = spec.kind;
        cj["hbar_order"] = spec.hbarOrder;
        cj["must_pass"] = spec.mustPass;
        if (!errors[i].empty()) {
            cj["error"] = errors[i];
            cj["pass"] = false;
            out.inputError = true;
        } else {
            const CheckReport& rep = results[i];
            cj["pass"] = rep.pass;
            Json rs = Json::array();
            for (const auto& r : rep.residues) {
                Json rj;
                rj["label"] = r.label;
                rj["pass"] = r.pass;
                rj["strict_zero"] = r.strictZero;
                rj["mod_exact_zero"] = r.modExactZero;
                rj["support"] = r.supportCount;
                if (!r.pass && !r.detail.empty()) rj["residue"] = truncateDetail(r.detail);
                rs.push_back(std::move(rj));
            }
            cj["residues"] = std::move(rs);
            if (!rep.notes.empty()) cj["notes"] = rep.notes;
        }
        bool pass = cj["pass"].get<bool>();
        if (!pass) {
            ++out.failed;
            if (spec.mustPass) out.pass = false;
        }
        out.report["checks"].push_back(std::move(cj));
    }
    out.report["summary"] = {{"pass", out.pass},
                             {"checks", (int)selected.size()},
                             {"failed", out.failed}};
    return out;
}

std::string formatReport(const Json& report) {
    std::string out;
    for (const auto& c : report.at("checks")) {
        bool pass = c.at("pass").get<bool>();
        out += pass ? "[PASS] " : "[FAIL] ";
        out += c.at("name").get<std::string>();
        if (c.contains("error"))
            out += "  error: " + c.at("error").get<std::string>();
        else {
            size_t n = c.at("residues").size();
            out += "  (" + std::to_string(n) + " residues)";
        }
        out += "\n";
        if (c.contains("notes"))
            for (const auto& note : c.at("notes"))
                out += "       note: " + note.get<std::string>() + "\n";
        if (!pass && c.contains("residues"))
            for (const auto& r : c.at("residues")) {
                if (r.at("pass").get<bool>()) continue;
                out += "       " + r.at("label").get<std::string>();
                if (r.contains("residue")) out += " = " + r.at("residue").get<std::string>();
                out += "\n";
            }
    }
    const Json& s = report.at("summary");
    out += s.at("pass").get<bool>() ? "summary: PASS" : "summary: FAIL";
    out += " (" + std::to_string((int)s.at("checks")) + " checks, " +
           std::to_string((int)s.at("failed")) + " failed)\n";
    return out;
}

}  // namespace dgbraid
