#pragma once

#include "dgbraid/lie.hpp"
#include "dgbraid/rng.hpp"

namespace dgbraid::fixtures {

/// sl2 with basis x+, x-, x3: [x+,x-] = x3, [x3,x+-] = +-2 x+-;
/// with N = 2 also kappa(x+,x-,x3) = 1 (the rescaled-Killing 3-cocycle).
inline LieNSpec sl2Spec(int N = 1) {
    LieNSpec s;
    s.N = N;
    s.basis = {"x+", "x-", "x3"};
    s.f.assign(3, std::vector<RatVec>(3, RatVec(3, Rational(0))));
    auto setF = [&](int a, int b, int c, long v) {
        s.f[a][b][c] = v;
        s.f[b][a][c] = -v;
    };
    setF(0, 1, 2, 1);
    setF(2, 0, 0, 2);
    setF(2, 1, 1, -2);
    if (N == 2) {
        s.kappa.assign(3, std::vector<RatVec>(3, RatVec(3, Rational(0))));
        int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
        for (int p = 0; p < 6; ++p) s.kappa[perm[p][0]][perm[p][1]][perm[p][2]] = p < 3 ? 1 : -1;
    }
    return s;
}

/// Heisenberg string Lie 2-algebra: [x,y] = z, kappa(x,y,z) = 1.
inline LieNSpec heisSpec() {
    LieNSpec s;
    s.N = 2;
    s.basis = {"x", "y", "z"};
    s.f.assign(3, std::vector<RatVec>(3, RatVec(3, Rational(0))));
    s.f[0][1][2] = 1;
    s.f[1][0][2] = -1;
    s.kappa.assign(3, std::vector<RatVec>(3, RatVec(3, Rational(0))));
    int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    for (int p = 0; p < 6; ++p) s.kappa[perm[p][0]][perm[p][1]][perm[p][2]] = p < 3 ? 1 : -1;
    return s;
}

/// The sl2 fundamental representation (textbook e, f, h arrays).
inline LieNSpec::Rep sl2Fundamental() {
    LieNSpec::Rep rep;
    rep.dim = 2;
    rep.matrices = {
        {{Rational(0), Rational(1)}, {Rational(0), Rational(0)}},
        {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}},
        {{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}},
    };
    return rep;
}

/// The Heisenberg 3-dimensional nilpotent representation.
inline LieNSpec::Rep heisStandard() {
    LieNSpec::Rep rep;
    rep.dim = 3;
    rep.matrices.assign(3, RatMat(3, RatVec(3, Rational(0))));
    rep.matrices[0][0][1] = 1;  // x: w1 -> w2 slot (array convention)
    rep.matrices[1][1][2] = 1;  // y
    rep.matrices[2][0][2] = 1;  // z
    return rep;
}

/// lambda * (s+ s- + 1/4 s3^2): the sl2 Casimir bivector.
inline GradedPoly casimir(const PolAlgebraPtr& P, const Rational& lambda = 1) {
    const AlgebraPtr& E = P->ext();
    GradedPoly p = GradedPoly::gen(E, P->sgenId(0)) * GradedPoly::gen(E, P->sgenId(1)) +
                   (GradedPoly::gen(E, P->sgenId(2)) * GradedPoly::gen(E, P->sgenId(2)))
                       .scaled(Scalar(Rational(1, 4)));
    return p.scaled(Scalar(lambda));
}

/// 1/2 s_z^2 + tilde-term: the Heisenberg family instance a=b=c=d=e=0, lambda=1.
inline GradedPoly heisPi(const PolAlgebraPtr& P) {
    const AlgebraPtr& E = P->ext();
    return (GradedPoly::gen(E, P->sgenId(2)) * GradedPoly::gen(E, P->sgenId(2)))
               .scaled(Scalar(1, 2)) -
           GradedPoly::gen(E, 1) * GradedPoly::gen(E, P->sgenId(1)) *
               GradedPoly::gen(E, P->sgenId(3));
}

/// A rank-2 free module with basis degrees {0,1} and zero differential;
/// tensoring with strict reps and gauge-transforming produces non-strict
/// modules.
inline ModulePtr stepModule(const CdgaPtr& A, const std::string& tag = "v") {
    std::vector<DgMod::BasisElem> basis = {{tag + "0", 0}, {tag + "1", 1}};
    return std::make_shared<DgMod>(A, std::move(basis),
                                   std::vector<GradedPoly>(4, GradedPoly(A->algebra())));
}

/// Basis degrees {0,2}: gauge entries of degree 2 pick up the degree-2
/// generator of a string CE algebra, so the tilde part of the Poisson
/// structure acts non-trivially on the gauged modules.
inline ModulePtr wideModule(const CdgaPtr& A, const std::string& tag = "u") {
    std::vector<DgMod::BasisElem> basis = {{tag + "0", 0}, {tag + "2", 2}};
    return std::make_shared<DgMod>(A, std::move(basis),
                                   std::vector<GradedPoly>(4, GradedPoly(A->algebra())));
}

}  // namespace dgbraid::fixtures
