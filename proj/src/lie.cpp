#include "dgbraid/lie.hpp"

#include <algorithm>

namespace dgbraid {

LieNSpec::Rep LieNSpec::adjoint() const {
    Rep rep;
    rep.dim = dim();
    rep.matrices.assign(dim(), RatMat(dim(), RatVec(dim(), Rational(0))));
    // Arrays m_a[b][c] = f[b][a][c] satisfy the array commutator
    // [m_a, m_b] = f[a][b][c] m_c (checkRep's convention).
    for (int a = 0; a < dim(); ++a)
        for (int b = 0; b < dim(); ++b)
            for (int c = 0; c < dim(); ++c) rep.matrices[a][b][c] = f[b][a][c];
    return rep;
}

void LieNSpec::checkRep(const Rep& rep) const {
    int d = rep.dim;
    if ((int)rep.matrices.size() != dim()) throw Error("rep: matrix count mismatch");
    for (int a = 0; a < dim(); ++a)
        for (int b = 0; b < dim(); ++b)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j) {
                    Rational lhs = 0;
                    for (int k = 0; k < d; ++k)
                        lhs += rep.matrices[a][i][k] * rep.matrices[b][k][j] -
                               rep.matrices[b][i][k] * rep.matrices[a][k][j];
                    Rational rhs = 0;
                    for (int c = 0; c < dim(); ++c) rhs += f[a][b][c] * rep.matrices[c][i][j];
                    if (lhs != rhs) throw Error("rep: representation property fails");
                }
}

std::string thetaName(const std::string& basisName) {
    if (basisName.size() > 1 && basisName[0] == 'x') return "th" + basisName.substr(1);
    return "th" + basisName;
}

CdgaPtr buildCe(const LieNSpec& spec, bool validate) {
    auto alg = std::make_shared<Algebra>();
    int d = spec.dim();
    for (const auto& b : spec.basis) alg->add(thetaName(b), 1);
    int nuId = -1;
    if (spec.N == 2) nuId = alg->add("nu", 2);
    AlgebraPtr A = alg;

    std::vector<GradedPoly> diff;
    for (int a = 0; a < d; ++a) {
        GradedPoly p(A);
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                // d(theta^a) = -1/2 f^a_{bc} theta^b theta^c, f^a_{bc} = f[b][c][a]
                Rational coef = spec.fAt(b, c, a) * Rational(-1, 2);
                if (coef == 0) continue;
                p += (GradedPoly::gen(A, b) * GradedPoly::gen(A, c)).scaled(Scalar(coef));
            }
        diff.push_back(p);
    }
    if (spec.N == 2) {
        GradedPoly p(A);
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b)
                for (int c = 0; c < d; ++c) {
                    Rational coef = spec.kappaAt(a, b, c) * Rational(-1, 6);
                    if (coef == 0) continue;
                    p += (GradedPoly::gen(A, a) * GradedPoly::gen(A, b) * GradedPoly::gen(A, c))
                             .scaled(Scalar(coef));
                }
        diff.push_back(p);
        (void)nuId;
    }
    auto ce = std::make_shared<Cdga>(A, std::move(diff));
    if (validate) {
        auto rep = ce->checkSquareZero();
        if (!rep.pass)
            throw Error("buildCe: square-zero fails (invalid Jacobi/cocycle data): " +
                        rep.str(*A));
    }
    return ce;
}

ModulePtr strictRepModule(const LieNSpec& spec, const LieNSpec::Rep& rep, const CdgaPtr& ce) {
    spec.checkRep(rep);
    int d = rep.dim;
    std::vector<DgMod::BasisElem> basis;
    for (int i = 0; i < d; ++i) basis.push_back({"w" + std::to_string(i + 1), 0});
    std::vector<GradedPoly> diff(d * d, GradedPoly(ce->algebra()));
    for (int a = 0; a < spec.dim(); ++a)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                if (rep.matrices[a][i][j] == 0) continue;
                diff[i * d + j] +=
                    GradedPoly::gen(ce->algebra(), a).scaled(Scalar(-rep.matrices[a][i][j]));
            }
    auto M = std::make_shared<DgMod>(ce, std::move(basis), std::move(diff));
    auto chk = checkModule(*M);
    if (!chk.pass) throw Error("strictRepModule: square-zero check failed");
    return M;
}

int PoissonSolution::piIndex(int a, int b) const {
    if (a > b) std::swap(a, b);
    // pairs (a,b), a<=b, ordered lexicographically
    return a * dim - a * (a - 1) / 2 + (b - a);
}

Rational PoissonSolution::piOf(const RatVec& v, int a, int b) const {
    return v[piIndex(a, b)];
}

namespace {

std::vector<RatVec> intersectPiZero(const PoissonSolution& sol,
                                    const std::vector<RatVec>& family) {
    // Solve for combinations of family vectors whose pi-block vanishes.
    size_t p = family.size();
    RatMat sys;
    for (int c = 0; c < sol.nPi; ++c) {
        RatVec row(p, Rational(0));
        bool nz = false;
        for (size_t i = 0; i < p; ++i) {
            row[i] = family[i][c];
            if (row[i] != 0) nz = true;
        }
        if (nz) sys.push_back(std::move(row));
    }
    std::vector<RatVec> out;
    for (const auto& comb : nullspaceBasis(sys, (int)p)) {
        RatVec v(sol.nPi + sol.nTilde, Rational(0));
        for (size_t i = 0; i < p; ++i)
            for (size_t c = 0; c < v.size(); ++c) v[c] += comb[i] * family[i][c];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

PoissonSolution solveLieInvariance(const LieNSpec& spec) {
    PoissonSolution sol;
    sol.dim = spec.dim();
    sol.stringCase = false;
    int d = sol.dim;
    sol.nPi = d * (d + 1) / 2;
    sol.nTilde = 0;

    RatMat sys;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                RatVec row(sol.nPi, Rational(0));
                bool nz = false;
                for (int e = 0; e < d; ++e) {
                    // f^a_{ce} pi^{eb} + f^b_{ce} pi^{ae}
                    Rational f1 = spec.fAt(c, e, a), f2 = spec.fAt(c, e, b);
                    if (f1 != 0) {
                        row[sol.piIndex(e, b)] += f1;
                        nz = true;
                    }
                    if (f2 != 0) {
                        row[sol.piIndex(a, e)] += f2;
                        nz = true;
                    }
                }
                if (nz) sys.push_back(std::move(row));
            }
    sol.linearBasis = nullspaceBasis(sys, sol.nPi);
    sol.piRank = (int)sol.linearBasis.size();
    sol.genericComponent = sol.linearBasis;
    sol.piZeroComponent.clear();
    sol.nonzeroPiFeasible = !sol.linearBasis.empty();
    if (sol.nonzeroPiFeasible) sol.nonzeroPiWitness = sol.linearBasis[0];
    return sol;
}

PoissonSolution solveStringPoisson(const LieNSpec& spec) {
    if (spec.N != 2) throw Error("solveStringPoisson: N=2 spec required");
    PoissonSolution sol;
    sol.dim = spec.dim();
    sol.stringCase = true;
    int d = sol.dim;
    sol.nPi = d * (d + 1) / 2;
    sol.nTilde = d * d;
    int cols = sol.nPi + sol.nTilde;

    RatMat sys;
    // invariance: f^a_{ce} pi^{eb} + f^b_{ce} pi^{ae} = 0
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                RatVec row(cols, Rational(0));
                bool nz = false;
                for (int e = 0; e < d; ++e) {
                    Rational f1 = spec.fAt(c, e, a), f2 = spec.fAt(c, e, b);
                    if (f1 != 0) {
                        row[sol.piIndex(e, b)] += f1;
                        nz = true;
                    }
                    if (f2 != 0) {
                        row[sol.piIndex(a, e)] += f2;
                        nz = true;
                    }
                }
                if (nz) sys.push_back(std::move(row));
            }
    // f^e_{bc} tilde^a_e - f^a_{be} tilde^e_c + f^a_{ce} tilde^e_b
    //   - kappa_{bce} pi^{ea} = 0
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c = 0; c < d; ++c) {
                RatVec row(cols, Rational(0));
                bool nz = false;
                for (int e = 0; e < d; ++e) {
                    Rational f1 = spec.fAt(b, c, e);   // f^e_{bc}
                    Rational f2 = spec.fAt(b, e, a);   // f^a_{be}
                    Rational f3 = spec.fAt(c, e, a);   // f^a_{ce}
                    Rational kk = spec.kappaAt(b, c, e);
                    if (f1 != 0) {
                        row[sol.tildeIndex(a, e)] += f1;
                        nz = true;
                    }
                    if (f2 != 0) {
                        row[sol.tildeIndex(e, c)] -= f2;
                        nz = true;
                    }
                    if (f3 != 0) {
                        row[sol.tildeIndex(e, b)] += f3;
                        nz = true;
                    }
                    if (kk != 0) {
                        row[sol.piIndex(e, a)] -= kk;
                        nz = true;
                    }
                }
                if (nz) sys.push_back(std::move(row));
            }
    sol.linearBasis = nullspaceBasis(sys, cols);

    // Rank of the pi-blocks.
    RatMat piBlocks;
    for (const auto& v : sol.linearBasis)
        piBlocks.push_back(RatVec(v.begin(), v.begin() + sol.nPi));
    {
        RatMat tmp = piBlocks;
        sol.piRank = (int)rref(tmp).size();
    }

    sol.piZeroComponent = intersectPiZero(sol, sol.linearBasis);

    auto quadratic = [&](const RatVec& v) {
        // Q_{ab}(v) = sum_c pi^{ac} tilde^b_c + pi^{bc} tilde^a_c
        RatMat q(d, RatVec(d, Rational(0)));
        for (int a = 0; a < d; ++a)
            for (int b = a; b < d; ++b) {
                Rational s = 0;
                for (int c = 0; c < d; ++c)
                    s += sol.piOf(v, a, c) * v[sol.tildeIndex(b, c)] +
                         sol.piOf(v, b, c) * v[sol.tildeIndex(a, c)];
                q[a][b] = s;
            }
        return q;
    };

    if (sol.piRank == 0) {
        sol.genericComponent = sol.linearBasis;
        sol.nonzeroPiFeasible = false;
        sol.nonzeroPiDecided = true;
        return sol;
    }

    if (sol.piRank == 1) {
        // Adapted basis: one lifting vector v0 with pi-part pi0, the rest
        // with vanishing pi-part. The quadratic is bilinear in (pi, tilde),
        // so Q = lambda * L with L linear in the adapted parameters.
        size_t lead = 0;
        int leadCoord = -1;
        for (size_t i = 0; i < sol.linearBasis.size() && leadCoord < 0; ++i)
            for (int c = 0; c < sol.nPi; ++c)
                if (sol.linearBasis[i][c] != 0) {
                    lead = i;
                    leadCoord = c;
                    break;
                }
        std::vector<RatVec> adapted;  // adapted[0] = v0; others pi-free
        adapted.push_back(sol.linearBasis[lead]);
        for (size_t i = 0; i < sol.linearBasis.size(); ++i) {
            if (i == lead) continue;
            RatVec v = sol.linearBasis[i];
            Rational ratio = v[leadCoord] / adapted[0][leadCoord];
            for (int c = 0; c < cols; ++c) v[c] -= ratio * adapted[0][c];
            adapted.push_back(std::move(v));
        }
        size_t p = adapted.size();

        // L_{ab}(s) = sum_c pi0^{ac} tilde(s)^b_c + pi0^{bc} tilde(s)^a_c.
        const RatVec& v0 = adapted[0];
        RatMat lsys;  // rows over (a,b), columns over adapted parameters
        for (int a = 0; a < d; ++a)
            for (int b = a; b < d; ++b) {
                RatVec row(p, Rational(0));
                bool nz = false;
                for (size_t i = 0; i < p; ++i) {
                    Rational s = 0;
                    for (int c = 0; c < d; ++c)
                        s += sol.piOf(v0, a, c) * adapted[i][sol.tildeIndex(b, c)] +
                             sol.piOf(v0, b, c) * adapted[i][sol.tildeIndex(a, c)];
                    row[i] = s;
                    if (s != 0) nz = true;
                }
                if (nz) {
                    std::string rel = "lambda*(";
                    bool first = true;
                    for (size_t i = 0; i < p; ++i) {
                        if (row[i] == 0) continue;
                        if (!first) rel += " + ";
                        first = false;
                        rel += ratStr(row[i]) + "*s" + std::to_string(i);
                    }
                    rel += ") = 0";
                    sol.quadRelations.push_back(rel);
                    lsys.push_back(std::move(row));
                }
            }

        // Generic component: L = 0 with lambda kept free.
        for (const auto& comb : nullspaceBasis(lsys, (int)p)) {
            RatVec v(cols, Rational(0));
            for (size_t i = 0; i < p; ++i)
                for (int c = 0; c < cols; ++c) v[c] += comb[i] * adapted[i][c];
            sol.genericComponent.push_back(std::move(v));
        }

        // Feasibility of pi != 0: L = 0 with lambda = 1 (scale invariance).
        RatMat feas = lsys;
        RatVec rhs(feas.size(), Rational(0));
        // Move the lambda column to the right-hand side.
        RatMat feasMu;
        for (size_t r = 0; r < feas.size(); ++r) {
            RatVec row(feas[r].begin() + 1, feas[r].end());
            feasMu.push_back(std::move(row));
            rhs[r] = -feas[r][0];
        }
        auto point = solveLinear(feasMu, rhs);
        sol.nonzeroPiDecided = true;
        sol.nonzeroPiFeasible = point.has_value();
        if (point) {
            RatVec v = adapted[0];
            for (size_t i = 1; i < p; ++i)
                for (int c = 0; c < cols; ++c) v[c] += (*point)[i - 1] * adapted[i][c];
            sol.nonzeroPiWitness = std::move(v);
        }
        return sol;
    }

    // piRank >= 2: report the residual quadratic relations on the raw
    // parameters and decide feasibility only via exact probes.
    size_t p = sol.linearBasis.size();
    for (int a = 0; a < d; ++a)
        for (int b = a; b < d; ++b) {
            std::string rel;
            for (size_t i = 0; i < p; ++i)
                for (size_t j = 0; j < p; ++j) {
                    Rational s = 0;
                    for (int c = 0; c < d; ++c)
                        s += sol.piOf(sol.linearBasis[i], a, c) *
                                 sol.linearBasis[j][sol.tildeIndex(b, c)] +
                             sol.piOf(sol.linearBasis[i], b, c) *
                                 sol.linearBasis[j][sol.tildeIndex(a, c)];
                    if (s != 0) {
                        if (!rel.empty()) rel += " + ";
                        rel += ratStr(s) + "*s" + std::to_string(i) + "*s" + std::to_string(j);
                    }
                }
            if (!rel.empty()) sol.quadRelations.push_back(rel + " = 0");
        }
    sol.genericComponent = sol.quadRelations.empty() ? sol.linearBasis : sol.piZeroComponent;
    sol.nonzeroPiDecided = false;
    std::vector<RatVec> probes = sol.linearBasis;
    for (size_t i = 0; i + 1 < sol.linearBasis.size(); ++i) {
        RatVec v = sol.linearBasis[i];
        for (int c = 0; c < cols; ++c) v[c] += sol.linearBasis[i + 1][c];
        probes.push_back(std::move(v));
    }
    for (const auto& v : probes) {
        bool piNz = false;
        for (int c = 0; c < sol.nPi; ++c)
            if (v[c] != 0) piNz = true;
        if (!piNz) continue;
        auto q = quadratic(v);
        bool ok = true;
        for (int a = 0; a < d && ok; ++a)
            for (int b = a; b < d && ok; ++b)
                if (q[a][b] != 0) ok = false;
        if (ok) {
            sol.nonzeroPiFeasible = true;
            sol.nonzeroPiDecided = true;
            sol.nonzeroPiWitness = v;
            break;
        }
    }
    return sol;
}

PoissonSolution solvePoisson(const LieNSpec& spec) {
    return spec.N == 2 ? solveStringPoisson(spec) : solveLieInvariance(spec);
}

PoissonCandidate candidateFromVector(const PoissonSolution& sol, const PolAlgebraPtr& P,
                                     const RatVec& v) {
    const AlgebraPtr& E = P->ext();
    int d = sol.dim;
    GradedPoly pi2(E);
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
            Rational c = sol.piOf(v, a, b) / 2;
            if (c == 0) continue;
            pi2 += (GradedPoly::gen(E, P->sgenId(a)) * GradedPoly::gen(E, P->sgenId(b)))
                       .scaled(Scalar(c));
        }
    if (sol.stringCase) {
        int nu = d;  // the nu generator follows the theta block
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                Rational c = sol.tildeOf(v, a, b);
                if (c == 0) continue;
                pi2 += (GradedPoly::gen(E, b) * GradedPoly::gen(E, P->sgenId(a)) *
                        GradedPoly::gen(E, P->sgenId(nu)))
                           .scaled(Scalar(c));
            }
    }
    PoissonCandidate cand;
    cand.pol = P;
    if (!pi2.isZero()) cand.components[2] = pi2;
    return cand;
}

std::string candidateExpr(const PoissonSolution& sol, const PolAlgebraPtr& P, const RatVec& v) {
    PoissonCandidate c = candidateFromVector(sol, P, v);
    auto it = c.components.find(2);
    return it == c.components.end() ? "0" : it->second.str();
}

std::string PoissonSolution::describe(const LieNSpec& spec) const {
    std::string out;
    out += "linear solution space: dimension " + std::to_string(linearBasis.size()) + "\n";
    out += "pi-block rank: " + std::to_string(piRank) + "\n";
    if (!quadRelations.empty()) {
        out += "residual quadratic relations:\n";
        for (const auto& r : quadRelations) out += "  " + r + "\n";
    }
    auto showFamily = [&](const std::string& label, const std::vector<RatVec>& fam) {
        out += label + ": dimension " + std::to_string(fam.size()) + "\n";
        for (size_t i = 0; i < fam.size(); ++i) {
            out += "  p" + std::to_string(i) + ": ";
            bool first = true;
            for (int a = 0; a < dim; ++a)
                for (int b = a; b < dim; ++b) {
                    Rational c = piOf(fam[i], a, b);
                    if (c == 0) continue;
                    if (!first) out += ", ";
                    first = false;
                    out += "pi(" + spec.basis[a] + "," + spec.basis[b] + ")=" + ratStr(c);
                }
            if (stringCase)
                for (int a = 0; a < dim; ++a)
                    for (int b = 0; b < dim; ++b) {
                        Rational c = tildeOf(fam[i], a, b);
                        if (c == 0) continue;
                        if (!first) out += ", ";
                        first = false;
                        out += "tilde(" + spec.basis[a] + ";" + spec.basis[b] + ")=" + ratStr(c);
                    }
            if (first) out += "0";
            out += "\n";
        }
    };
    showFamily("solution family (quadratics vanish identically)", genericComponent);
    if (stringCase) showFamily("pi = 0 slice", piZeroComponent);
    return out;
}

}  // namespace dgbraid
