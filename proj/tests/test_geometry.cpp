#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dgbraid/parse.hpp"
#include "fixtures.hpp"

using namespace dgbraid;
using namespace dgbraid::fixtures;

TEST_CASE("deriv_apply: Leibniz evaluation") {
    CdgaPtr A = buildCe(sl2Spec());
    Derivation dPlus = Derivation::coordinate(A->algebra(), 0);
    // d+(th+ th3) = th3 (hand Leibniz with sign (-1)^{(-1)(1)})
    CHECK(dPlus.apply(A->gen("th+") * A->gen("th3")) == A->gen("th3"));
    Derivation d3 = Derivation::coordinate(A->algebra(), 2);
    CHECK(d3.apply(A->one()).isZero());
    CHECK(d3.apply(A->gen("th3") * A->gen("th3")).isZero());
}

TEST_CASE("deriv_bracket: commutator as a derivation") {
    CdgaPtr A = buildCe(sl2Spec());
    Derivation dPlus = Derivation::coordinate(A->algebra(), 0);
    CHECK(derivBracket(dPlus, dPlus).isZero());
    // [D,D] = 0 for even D
    Derivation even = Derivation::zero(A->algebra(), 0);
    even.values[0] = A->gen("th+");
    even.values[1] = -A->gen("th-");
    CHECK(derivBracket(even, even).isZero());
    // [d_A, d3] on th3: oracle = dA o d3 + d3 o dA evaluated directly
    Derivation dA{A->algebra(), 1, A->diff()};
    Derivation d3 = Derivation::coordinate(A->algebra(), 2);
    Derivation comm = derivBracket(dA, d3);
    GradedPoly oracle = dA.apply(d3.apply(A->gen("th3"))) + d3.apply(dA.apply(A->gen("th3")));
    CHECK(comm.values[2] == oracle);
}

TEST_CASE("de_rham and duality pairings") {
    CdgaPtr A = buildCe(sl2Spec());
    CHECK(deRham(A->one()).isZero());
    CHECK(deRham(GradedPoly::constant(A->algebra(), Scalar(5, 3))).isZero());

    // Dual basis: <D, ddR(a)> = D(a) by definition; the left pairing picks up
    // the Koszul sign, <ddR(th3), d_3> = (-1)^{|d_3||th3|} = -1.
    Derivation d3 = Derivation::coordinate(A->algebra(), 2);
    Derivation dPlus = Derivation::coordinate(A->algebra(), 0);
    Kaehler dTh3 = deRham(A->gen("th3"));
    CHECK(pairRight(d3, dTh3) == A->one());
    CHECK(pairRight(dPlus, dTh3).isZero());
    CHECK(pairLeft(dTh3, d3) == -A->one());
    CHECK(pairLeft(dTh3, dPlus).isZero());
    CHECK(pairRight(dPlus, deRham(A->gen("th+"))) == A->one());

    // de_rham(th+ th-) checked against <d_a, .> for all coordinates
    GradedPoly p = A->gen("th+") * A->gen("th-");
    Kaehler dp = deRham(p);
    for (int a = 0; a < 3; ++a) {
        Derivation D = Derivation::coordinate(A->algebra(), a);
        CHECK(pairRight(D, dp) == D.apply(p));
    }
}

TEST_CASE("duality <D, ddR p> = D(p) on random inputs") {
    CdgaPtr A = buildCe(sl2Spec(2));
    Rng rng(5);
    for (int iter = 0; iter < 40; ++iter) {
        int dd = 1 + (int)rng.below(4);
        GradedPoly p = randomCombination(rng, A->algebra(), monomialsOfDegree(A->algebra(), dd));
        Derivation D = Derivation::zero(A->algebra(), (int)rng.below(3) - 1);
        for (int g = 0; g < A->algebra()->size(); ++g) {
            int vd = A->algebra()->degree(g) + D.degree;
            if (vd >= 0)
                D.values[g] =
                    randomCombination(rng, A->algebra(), monomialsOfDegree(A->algebra(), vd));
        }
        CHECK(pairRight(D, deRham(p)) == D.apply(p));
    }
}

TEST_CASE("polyvec differential reproduces the shifted-derivation formulas") {
    CdgaPtr A = buildCe(sl2Spec());
    auto P = std::make_shared<PolAlgebra>(A, 2);
    const AlgebraPtr& E = P->ext();
    // d(s3) = -2 th+ s+ + 2 th- s-
    GradedPoly d_s3 = P->diff(GradedPoly::gen(E, P->sgenId(2)));
    GradedPoly expect =
        (GradedPoly::gen(E, 0) * GradedPoly::gen(E, P->sgenId(0))).scaled(Scalar(-2)) +
        (GradedPoly::gen(E, 1) * GradedPoly::gen(E, P->sgenId(1))).scaled(Scalar(2));
    CHECK(d_s3 == expect);

    // string case: d(s_nu) = 0 and d(s_a) carries +1/2 kappa_{abc} th^b th^c s_nu
    CdgaPtr S = buildCe(sl2Spec(2));
    auto PS = std::make_shared<PolAlgebra>(S, 2);
    const AlgebraPtr& ES = PS->ext();
    CHECK(PS->diff(GradedPoly::gen(ES, PS->sgenId(3))).isZero());
    GradedPoly d_sp = PS->diff(GradedPoly::gen(ES, PS->sgenId(0)));
    // d(s_+) = -f^c_{+b} th^b s_c + 1/2 kappa_{+bc} th^b th^c s_nu
    //        = 2 th3 s_+ - th- s_3 + th- th3 s_nu
    GradedPoly kappaPart =
        GradedPoly::gen(ES, 1) * GradedPoly::gen(ES, 2) * GradedPoly::gen(ES, PS->sgenId(3));
    GradedPoly fPart =
        (GradedPoly::gen(ES, 2) * GradedPoly::gen(ES, PS->sgenId(0))).scaled(Scalar(2)) +
        (GradedPoly::gen(ES, 1) * GradedPoly::gen(ES, PS->sgenId(2))).scaled(Scalar(-1));
    CHECK(d_sp == fPart + kappaPart);

    // d squares to zero on the extended algebra whenever the base does
    CHECK(P->extCdga()->checkSquareZero().pass);
    CHECK(PS->extCdga()->checkSquareZero().pass);
}

TEST_CASE("lift and lower between the base and extended algebras") {
    CdgaPtr A = buildCe(sl2Spec());
    auto P = std::make_shared<PolAlgebra>(A, 2);
    GradedPoly p = A->gen("th+") * A->gen("th-") + A->one().scaled(Scalar(2, 3));
    CHECK(P->lower(P->lift(p)) == p);
    CHECK_THROWS_AS((void)P->lower(GradedPoly::gen(P->ext(), P->sgenId(0))), Error);
}

TEST_CASE("schouten: generator rules and the Casimir") {
    CdgaPtr A = buildCe(sl2Spec());
    auto P = std::make_shared<PolAlgebra>(A, 2);
    const AlgebraPtr& E = P->ext();
    GradedPoly s3 = GradedPoly::gen(E, P->sgenId(2));
    CHECK(P->schouten(s3, GradedPoly::gen(E, 0)).isZero());
    CHECK(P->schouten(s3, GradedPoly::gen(E, 2)) == GradedPoly::one(E));
    GradedPoly pi = casimir(P);
    CHECK(P->schouten(pi, pi).isZero());
}

TEST_CASE("schouten laws (i)-(iii) exactly on random homogeneous triples") {
    for (int which = 0; which < 2; ++which) {
        CdgaPtr A = which == 0 ? buildCe(sl2Spec()) : buildCe(heisSpec());
        auto P = std::make_shared<PolAlgebra>(A, 2);
        int n = 2;
        Rng rng(1234 + which);
        int done = 0;
        while (done < 60) {
            int wp = (int)rng.below(4), wq = (int)rng.below(4), wr = (int)rng.below(3);
            int dp = (int)rng.below(7), dq = (int)rng.below(7), dr = (int)rng.below(7);
            GradedPoly p = randomPolyvector(rng, *P, dp, wp);
            GradedPoly q = randomPolyvector(rng, *P, dq, wq);
            GradedPoly r = randomPolyvector(rng, *P, dr, wr);
            if (p.isZero() || q.isZero() || r.isZero()) continue;
            ++done;

            // (i) antisymmetry: {P,Q} + (-1)^{n+1} (-1)^{|P||Q|} {Q,P} = 0
            GradedPoly br = P->schouten(p, q);
            GradedPoly flip = P->schouten(q, p);
            int sgn = ((n + 1) & 1) ? -1 : 1;
            if ((dp & 1) && (dq & 1)) sgn = -sgn;
            CHECK((br + (sgn > 0 ? flip : -flip)).isZero());

            // (ii) derivation property
            GradedPoly lhs = P->schouten(p, q * r);
            GradedPoly second = q * P->schouten(p, r);
            if (((dp - n - 1) * dq) & 1) second = -second;
            CHECK(lhs == P->schouten(p, q) * r + second);

            // (iii) Jacobi identity
            GradedPoly j1 = P->schouten(p, P->schouten(q, r));
            GradedPoly j2 = P->schouten(P->schouten(p, q), r);
            if (((dp - n - 1) * (n + 1)) & 1) j2 = -j2;
            GradedPoly j3 = P->schouten(q, P->schouten(p, r));
            if (((dp - n - 1) * (dq - n - 1)) & 1) j3 = -j3;
            CHECK(j1 == j2 + j3);

            // weight drops by exactly 1
            if (!br.isZero()) CHECK(*P->weightOf(br) == wp + wq - 1);

            // (-1)^{n+1} d{P,Q} = {dP,Q} + (-1)^{|P|} {P,dQ}
            GradedPoly third = P->schouten(p, P->diff(q));
            if (dp & 1) third = -third;
            GradedPoly lhsD = P->diff(br);
            if ((n + 1) & 1) lhsD = -lhsD;
            CHECK(lhsD == P->schouten(P->diff(p), q) + third);
        }
    }
}

TEST_CASE("schouten laws at shift n = 3 (the engine is parametric in n)") {
    CdgaPtr A = buildCe(sl2Spec());
    auto P = std::make_shared<PolAlgebra>(A, 3);
    const int n = 3;
    CHECK(P->extCdga()->checkSquareZero().pass);
    Rng rng(888);
    int done = 0;
    while (done < 25) {
        int wp = (int)rng.below(3), wq = (int)rng.below(3);
        int dp = (int)rng.below(8), dq = (int)rng.below(8);
        GradedPoly p = randomPolyvector(rng, *P, dp, wp);
        GradedPoly q = randomPolyvector(rng, *P, dq, wq);
        if (p.isZero() || q.isZero()) continue;
        ++done;
        GradedPoly br = P->schouten(p, q);
        GradedPoly flip = P->schouten(q, p);
        int sgn = ((n + 1) & 1) ? -1 : 1;
        if ((dp & 1) && (dq & 1)) sgn = -sgn;
        CHECK((br + (sgn > 0 ? flip : -flip)).isZero());
        GradedPoly third = P->schouten(p, P->diff(q));
        if (dp & 1) third = -third;
        GradedPoly lhsD = P->diff(br);
        if ((n + 1) & 1) lhsD = -lhsD;
        CHECK(lhsD == P->schouten(P->diff(p), q) + third);
    }
}

TEST_CASE("extended pairing of weight-2 polyvectors") {
    CdgaPtr A = buildCe(sl2Spec());
    auto P = std::make_shared<PolAlgebra>(A, 2);
    const AlgebraPtr& E = P->ext();
    GradedPoly spm = GradedPoly::gen(E, P->sgenId(0)) * GradedPoly::gen(E, P->sgenId(1));
    Kaehler dThm = deRham(A->gen("th-")), dThp = deRham(A->gen("th+"));
    Kaehler dTh3 = deRham(A->gen("th3"));
    CHECK(P->pairWeight2(spm, dThm, dThp) == A->one());
    CHECK(P->pairWeight2(spm, dTh3, dTh3).isZero());
    CHECK_THROWS_AS((void)P->pairWeight2(GradedPoly::gen(E, P->sgenId(0)), dTh3, dTh3), Error);

    // <pi, .> o gamma = <pi, .>: swapping the shifted slots with the Koszul
    // sign of the [1]-shifted forms reproduces the same value
    Rng rng(77);
    GradedPoly pi = casimir(P);
    for (int iter = 0; iter < 20; ++iter) {
        GradedPoly a = randomCombination(rng, A->algebra(),
                                         monomialsOfDegree(A->algebra(), 1 + (int)rng.below(2)));
        GradedPoly b = randomCombination(rng, A->algebra(),
                                         monomialsOfDegree(A->algebra(), 1 + (int)rng.below(2)));
        if (a.isZero() || b.isZero()) continue;
        Kaehler oa = deRham(a), ob = deRham(b);
        GradedPoly lhs = P->pairWeight2(pi, oa, ob);
        GradedPoly rhs = P->pairWeight2(pi, ob, oa);
        auto da = oa.degree();
        auto db = ob.degree();
        if (da && db && ((*da - 1) & 1) && ((*db - 1) & 1)) rhs = -rhs;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("mc_check: Casimir passes at every scale, non-invariant fails") {
    CdgaPtr A = buildCe(sl2Spec());
    auto P = std::make_shared<PolAlgebra>(A, 2);
    for (long lam : {1L, 3L}) {
        PoissonCandidate c;
        c.pol = P;
        c.components[2] = casimir(P, lam);
        CHECK(mcCheck(c).pass);
    }
    PoissonCandidate bad;
    bad.pol = P;
    bad.components[2] =
        GradedPoly::gen(P->ext(), P->sgenId(2)) * GradedPoly::gen(P->ext(), P->sgenId(2));
    auto rep = mcCheck(bad);
    CHECK(!rep.pass);
    CHECK(rep.weights.front().weight == 2);
    CHECK(!rep.weights.front().residue.isZero());
}

TEST_CASE("mc_check: Heisenberg family instance passes") {
    CdgaPtr H = buildCe(heisSpec());
    auto P = std::make_shared<PolAlgebra>(H, 2);
    PoissonCandidate c;
    c.pol = P;
    c.components[2] = heisPi(P);
    CHECK(mcCheck(c).pass);
}

TEST_CASE("mc_check: structural errors reported before evaluation") {
    CdgaPtr A = buildCe(sl2Spec());
    auto P = std::make_shared<PolAlgebra>(A, 2);
    PoissonCandidate c;
    c.pol = P;
    c.components[2] = GradedPoly::gen(P->ext(), P->sgenId(0));  // weight 1, wrong degree
    auto rep = mcCheck(c);
    CHECK(!rep.pass);
    CHECK(!rep.structural);
}

TEST_CASE("polyvec_basis enumeration") {
    CdgaPtr A = buildCe(sl2Spec());
    auto P = std::make_shared<PolAlgebra>(A, 2);
    CHECK(P->basis(4, 2).size() == 6);
    CHECK(P->basis(4, 3).empty());

    CdgaPtr H = buildCe(heisSpec());
    auto PH = std::make_shared<PolAlgebra>(H, 2);
    bool hasSS = false, hasThSnu = false;
    for (const auto& m : PH->basis(4, 2)) {
        int nTheta = 0, nSnu = 0, nS = 0;
        for (auto [g, e] : m.factors()) {
            if (!PH->isSgen(g) && g < 3) nTheta += e;
            if (g == PH->sgenId(3)) nSnu += e;
            if (PH->isSgen(g) && g != PH->sgenId(3)) nS += e;
        }
        if (nS == 2 && nTheta == 0 && nSnu == 0) hasSS = true;
        if (nTheta == 1 && nS == 1 && nSnu == 1) hasThSnu = true;
    }
    CHECK(hasSS);
    CHECK(hasThSnu);

    // degree-0 generators are rejected by the enumeration
    auto algU = std::make_shared<Algebra>(std::vector<Generator>{{"u", 0}});
    auto cdgaU = std::make_shared<Cdga>(algU, std::vector<GradedPoly>{GradedPoly(algU)});
    auto PU = std::make_shared<PolAlgebra>(cdgaU, 2);
    CHECK_THROWS_AS((void)PU->basis(2, 1), Error);
}
