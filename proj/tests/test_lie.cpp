#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgbraid/parse.hpp"
#include "fixtures.hpp"

using namespace dgbraid;
using namespace dgbraid::fixtures;

namespace {

/// The inner derivation ad_z of sl2 in solution-vector coordinates.
RatVec sl2InnerDerivation(const PoissonSolution& sol, int z) {
    LieNSpec s = sl2Spec(2);
    RatVec v(sol.nPi + sol.nTilde, Rational(0));
    // tilde(x_b) = [x_z, x_b] = f[z][b][a] x_a
    for (int b = 0; b < 3; ++b)
        for (int a = 0; a < 3; ++a) v[sol.tildeIndex(a, b)] = s.f[z][b][a];
    return v;
}

}  // namespace

TEST_CASE("solve_lie_invariance: sl2 Casimir is unique up to scale") {
    PoissonSolution sol = solveLieInvariance(sl2Spec());
    REQUIRE(sol.linearBasis.size() == 1);
    const RatVec& v = sol.linearBasis[0];
    // proportional to pi(+,-) = 1, pi(3,3) = 1/2
    Rational lam = sol.piOf(v, 0, 1);
    REQUIRE(lam != 0);
    CHECK(sol.piOf(v, 2, 2) == lam / 2);
    CHECK(sol.piOf(v, 0, 0) == 0);
    CHECK(sol.piOf(v, 1, 1) == 0);
    CHECK(sol.piOf(v, 0, 2) == 0);
    CHECK(sol.piOf(v, 1, 2) == 0);
}

TEST_CASE("solve_lie_invariance: heis contains z^2; abelian is unconstrained") {
    PoissonSolution sol = solveLieInvariance(heisSpec());
    // the invariant space contains lambda/2 z^2
    RatVec z2(sol.nPi, Rational(0));
    z2[sol.piIndex(2, 2)] = 1;
    CHECK(inSpan(sol.linearBasis, z2));

    LieNSpec ab;
    ab.N = 1;
    ab.basis = {"x1", "x2"};
    ab.f.assign(2, std::vector<RatVec>(2, RatVec(2, Rational(0))));
    PoissonSolution solAb = solveLieInvariance(ab);
    CHECK(solAb.linearBasis.size() == 3);  // all of Sym^2
}

TEST_CASE("solve_string_poisson: sl2_kappa is infeasible for pi != 0") {
    PoissonSolution sol = solveStringPoisson(sl2Spec(2));
    CHECK(sol.piRank == 1);
    CHECK(sol.nonzeroPiDecided);
    CHECK(!sol.nonzeroPiFeasible);
    // the pi = 0 slice is exactly the 3-dimensional derivation space (all inner)
    REQUIRE(sol.piZeroComponent.size() == 3);
    RatMat inner;
    for (int z = 0; z < 3; ++z) inner.push_back(sl2InnerDerivation(sol, z));
    CHECK(spanEqual(sol.piZeroComponent, inner));
}

TEST_CASE("solve_string_poisson: the Heisenberg multiparameter family") {
    LieNSpec spec = heisSpec();
    PoissonSolution sol = solveStringPoisson(spec);
    CHECK(sol.piRank == 1);
    CHECK(sol.nonzeroPiDecided);
    CHECK(sol.nonzeroPiFeasible);

    // expected family: pi = lambda/2 z^2, tilde(x) = a x + b y + c z,
    // tilde(y) = d x - (a+lambda) y + e z, tilde(z) = 0
    // basis indices: x=0, y=1, z=2
    RatMat expect;
    auto vec = [&](auto fill) {
        RatVec v(sol.nPi + sol.nTilde, Rational(0));
        fill(v);
        return v;
    };
    // lambda: pi(z,z) = 1 and tilde^y_y = -1
    expect.push_back(vec([&](RatVec& v) {
        v[sol.piIndex(2, 2)] = 1;
        v[sol.tildeIndex(1, 1)] = -1;
    }));
    // a: tilde^x_x = 1, tilde^y_y = -1
    expect.push_back(vec([&](RatVec& v) {
        v[sol.tildeIndex(0, 0)] = 1;
        v[sol.tildeIndex(1, 1)] = -1;
    }));
    // b: tilde^y_x = 1
    expect.push_back(vec([&](RatVec& v) { v[sol.tildeIndex(1, 0)] = 1; }));
    // c: tilde^z_x = 1
    expect.push_back(vec([&](RatVec& v) { v[sol.tildeIndex(2, 0)] = 1; }));
    // d: tilde^x_y = 1
    expect.push_back(vec([&](RatVec& v) { v[sol.tildeIndex(0, 1)] = 1; }));
    // e: tilde^z_y = 1
    expect.push_back(vec([&](RatVec& v) { v[sol.tildeIndex(2, 1)] = 1; }));

    REQUIRE(sol.genericComponent.size() == 6);
    CHECK(spanEqual(sol.genericComponent, expect));

    // tilde(z) = 0 on the whole family
    for (const auto& v : sol.genericComponent)
        for (int a = 0; a < 3; ++a) CHECK(sol.tildeOf(v, a, 2) == 0);
}

TEST_CASE("every emitted instance passes mc_check") {
    for (int which = 0; which < 3; ++which) {
        LieNSpec spec = which == 0 ? sl2Spec() : which == 1 ? sl2Spec(2) : heisSpec();
        CdgaPtr A = buildCe(spec);
        auto P = std::make_shared<PolAlgebra>(A, 2);
        PoissonSolution sol = solvePoisson(spec);
        Rng rng(91 + which);
        for (int iter = 0; iter < 5; ++iter) {
            RatVec v(sol.nPi + sol.nTilde, Rational(0));
            for (const auto& b : sol.genericComponent) {
                Rational c = rng.smallRational();
                for (size_t t = 0; t < v.size(); ++t) v[t] += c * b[t];
            }
            PoissonCandidate cand = candidateFromVector(sol, P, v);
            CHECK(mcCheck(cand).pass);
        }
        if (sol.nonzeroPiFeasible) {
            PoissonCandidate cand = candidateFromVector(sol, P, sol.nonzeroPiWitness);
            CHECK(mcCheck(cand).pass);
        }
    }
}

TEST_CASE("strict_rep_module: reps pass, trivial rep is the zero differential") {
    LieNSpec spec = sl2Spec();
    CdgaPtr A = buildCe(spec);
    ModulePtr V = strictRepModule(spec, sl2Fundamental(), A);
    CHECK(checkModule(*V).pass);
    ModulePtr Adj = strictRepModule(spec, spec.adjoint(), A);
    CHECK(checkModule(*Adj).pass);

    LieNSpec::Rep trivial;
    trivial.dim = 2;
    trivial.matrices.assign(3, RatMat(2, RatVec(2, Rational(0))));
    ModulePtr T = strictRepModule(spec, trivial, A);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(T->entry(i, j).isZero());
}

TEST_CASE("candidate expressions are parseable and stable") {
    LieNSpec spec = heisSpec();
    CdgaPtr A = buildCe(spec);
    auto P = std::make_shared<PolAlgebra>(A, 2);
    PoissonSolution sol = solveStringPoisson(spec);
    RatVec v(sol.nPi + sol.nTilde, Rational(0));
    for (const auto& b : sol.genericComponent)
        for (size_t t = 0; t < v.size(); ++t) v[t] += b[t];
    std::string expr = candidateExpr(sol, P, v);
    GradedPoly parsed = parsePoly(expr, P->ext());
    PoissonCandidate cand = candidateFromVector(sol, P, v);
    CHECK(parsed == cand.components.at(2));
}

TEST_CASE("mutation tests: broken structure constants fail square-zero") {
    // sl2 with a genuinely broken bracket
    LieNSpec bad = sl2Spec();
    bad.f[2][0][0] = 3;
    bad.f[0][2][0] = -3;
    CHECK(!buildCe(bad, false)->checkSquareZero().pass);
    // string sl2 with the same broken bracket
    LieNSpec badString = sl2Spec(2);
    badString.f[2][0][0] = 3;
    badString.f[0][2][0] = -3;
    CHECK(!buildCe(badString, false)->checkSquareZero().pass);
    // heis with an extra bracket [x,z] = x
    LieNSpec badHeis = heisSpec();
    badHeis.f[0][2][0] = 1;
    badHeis.f[2][0][0] = -1;
    CHECK(!buildCe(badHeis, false)->checkSquareZero().pass);
}
