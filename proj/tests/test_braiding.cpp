#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"

using namespace dgbraid;
using namespace dgbraid::fixtures;

namespace {

struct World {
    LieNSpec spec;
    CdgaPtr A;
    PolAlgebraPtr P;
    GradedPoly pi2;
    ModulePtr V, Adj, step, NS, NS2;
};

World sl2World(uint64_t seed = 17) {
    World w;
    w.spec = sl2Spec();
    w.A = buildCe(w.spec);
    w.P = std::make_shared<PolAlgebra>(w.A, 2);
    w.pi2 = casimir(w.P);
    w.V = strictRepModule(w.spec, sl2Fundamental(), w.A);
    w.Adj = strictRepModule(w.spec, w.spec.adjoint(), w.A);
    w.step = stepModule(w.A);
    Rng rng(seed);
    w.NS = gaugeTransform(rng, tensorModule(w.V, w.step));
    w.NS2 = gaugeTransform(rng, tensorModule(w.step, w.V));
    return w;
}

World heisWorld(uint64_t seed = 23) {
    World w;
    w.spec = heisSpec();
    w.A = buildCe(w.spec);
    w.P = std::make_shared<PolAlgebra>(w.A, 2);
    w.pi2 = heisPi(w.P);
    w.V = strictRepModule(w.spec, heisStandard(), w.A);
    w.step = stepModule(w.A);
    Rng rng(seed);
    // the degree-{0,2} factor lets the gauged differentials pick up nu, so
    // the tilde part of pi acts non-trivially
    w.NS = gaugeTransform(rng, tensorModule(w.V, wideModule(w.A)));
    w.NS2 = gaugeTransform(rng, tensorModule(w.step, w.V));
    w.Adj = w.NS2;
    return w;
}

MorTuple closedTuple(Rng& rng, const ObjTuple& t) {
    MorTuple m;
    for (const auto& mod : t) m.push_back(randomClosedMap(rng, mod, mod));
    return m;
}

}  // namespace

TEST_CASE("xi: unit module, strict formula oracle, closedness") {
    World w = sl2World();
    // xi_A = 0
    CHECK(xiSingle(w.A, DgMod::unit(w.A)).isZero());

    // strict module: xi_M(1 (x) w_i) = s^-1 ddR(th^a) M_{ai}^j (x) w_j with
    // M_{ai}^j = -rho_a[i][j]
    ModMap xi = xiSingle(w.A, w.V);
    auto fund = sl2Fundamental();
    for (int i = 0; i < 2; ++i)
        for (int a = 0; a < 3; ++a)
            for (int j = 0; j < 2; ++j) {
                GradedPoly expect(w.A->algebra());
                if (fund.matrices[a][i][j] != 0)
                    expect = GradedPoly::constant(w.A->algebra(),
                                                  Scalar(-fund.matrices[a][i][j]));
                CHECK(xi.entry(i, a * 2 + j) == expect);
            }

    // hom_diff(xi_M) = 0 for valid modules, including non-strict ones
    for (const auto& M : {w.V, w.Adj, w.step, w.NS, w.NS2})
        CHECK(homDiff(xiSingle(w.A, M)).isZero());
}

TEST_CASE("xi_double: identities and constants die, non-strict maps survive") {
    World w = sl2World();
    CHECK(xiDouble(w.A, ModMap::identity(w.NS)).isZero());
    CHECK(xiDouble(w.A, ModMap::identity(w.V).scaled(Scalar(3))).isZero());
    Rng rng(31);
    bool nonzero = false;
    for (int i = 0; i < 10 && !nonzero; ++i) {
        ModMap h = randomClosedMap(rng, w.NS, w.NS);
        if (!xiDouble(w.A, h).isZero()) nonzero = true;
    }
    CHECK(nonzero);
    CHECK_THROWS_AS((void)xiDouble(w.A, randomMap(rng, w.NS, w.NS, 0)), Error);
}

TEST_CASE("xi pseudo-naturality on a mixed corpus") {
    World w = sl2World();
    Rng rng(41);
    std::vector<ObjTuple> objects = {{w.V}, {w.Adj}, {w.step}, {w.NS}, {w.NS2}};
    std::vector<MorTuple> mors, morsMinus1;
    for (const auto& t : objects) {
        mors.push_back({ModMap::identity(t[0])});
        mors.push_back({randomClosedMap(rng, t[0], t[0])});
        morsMinus1.push_back({randomMap(rng, t[0], t[0], -1)});
    }
    mors.push_back({randomClosedMap(rng, w.V, w.NS)});
    mors.push_back({randomClosedMap(rng, w.NS, w.NS2)});
    CheckReport rep = checkPseudonaturality("xi", xiCS(w.A), objects, mors, morsMinus1);
    CHECK(rep.pass);

    // regression: dropping the minus sign in xi_double breaks property (1)
    CompSet broken = xiCS(w.A);
    broken.dbl = [A = w.A](const MorTuple& hs) { return -xiDouble(A, hs[0]); };
    bool anyFail = false;
    CheckReport bad = checkPseudonaturality("xi-broken", broken, objects, mors, morsMinus1);
    for (const auto& r : bad.residues)
        if (!r.pass) anyFail = true;
    CHECK(anyFail);
}

TEST_CASE("strictly natural component sets pass with all residues zero") {
    World w = sl2World();
    Rng rng(43);
    CompSet idCS = CompSet::identityOf(2, Functor::tensor());
    std::vector<ObjTuple> objects = {{w.V, w.NS}, {w.NS, w.step}};
    std::vector<MorTuple> mors;
    for (const auto& t : objects) mors.push_back(closedTuple(rng, t));
    CheckReport rep = checkPseudonaturality("id", idCS, objects, mors, {});
    CHECK(rep.pass);
    for (const auto& r : rep.residues) CHECK(r.strictZero);
}

TEST_CASE("t_single: zero-differential factors, Casimir matrix oracle") {
    World w = sl2World();
    // a factor with zero differential kills t
    CHECK(tSingle(*w.P, w.pi2, w.step, w.V).isZero());
    CHECK(tSingle(*w.P, w.pi2, w.V, w.step).isZero());

    // Casimir oracle on strict reps: t = sum pi^{ab} rho_a (x) rho_b
    auto reps = std::map<std::string, LieNSpec::Rep>{{"fund", sl2Fundamental()},
                                                     {"adj", w.spec.adjoint()}};
    for (const auto& [nameM, repM] : reps)
        for (const auto& [nameN, repN] : reps) {
            ModulePtr M = strictRepModule(w.spec, repM, w.A);
            ModulePtr N = strictRepModule(w.spec, repN, w.A);
            ModMap t = tSingle(*w.P, w.pi2, M, N);
            // pi^{ab} for the Casimir: pi^{+-} = pi^{-+} = 1, pi^{33} = 1/2
            RatMat piMat(3, RatVec(3, Rational(0)));
            piMat[0][1] = piMat[1][0] = 1;
            piMat[2][2] = Rational(1, 2);
            int dM = repM.dim, dN = repN.dim;
            for (int i = 0; i < dM; ++i)
                for (int q = 0; q < dN; ++q)
                    for (int j = 0; j < dM; ++j)
                        for (int r = 0; r < dN; ++r) {
                            Rational c = 0;
                            for (int a = 0; a < 3; ++a)
                                for (int b = 0; b < 3; ++b)
                                    c += piMat[a][b] * repM.matrices[a][i][j] *
                                         repN.matrices[b][q][r];
                            GradedPoly expect =
                                GradedPoly::constant(w.A->algebra(), Scalar(c));
                            CHECK(t.entry(i * dN + q, j * dN + r) == expect);
                        }
        }
}

TEST_CASE("t is closed on strict and non-strict samples") {
    World w = sl2World();
    for (auto [M, N] : {std::pair{w.V, w.Adj}, {w.V, w.NS}, {w.NS, w.NS2}, {w.NS2, w.NS}})
        CHECK(homDiff(tSingle(*w.P, w.pi2, M, N)).isZero());
    World h = heisWorld();
    for (auto [M, N] : {std::pair{h.V, h.V}, {h.V, h.NS}, {h.NS, h.NS2}})
        CHECK(homDiff(tSingle(*h.P, h.pi2, M, N)).isZero());
}

TEST_CASE("t_double: strict inputs vanish, non-strict survive") {
    World w = sl2World();
    ModMap idV = ModMap::identity(w.V);
    CHECK(tDouble(*w.P, w.pi2, idV, idV).isZero());
    ModMap scal = ModMap::identity(w.V).scaled(Scalar(2));
    CHECK(tDouble(*w.P, w.pi2, scal, scal).isZero());
    Rng rng(47);
    bool nonzero = false;
    for (int i = 0; i < 10 && !nonzero; ++i) {
        ModMap hNS = randomClosedMap(rng, w.NS, w.NS);
        if (!tDouble(*w.P, w.pi2, hNS, idV).isZero()) nonzero = true;
    }
    CHECK(nonzero);
}

TEST_CASE("t pseudo-naturality") {
    World w = sl2World();
    Rng rng(53);
    std::vector<ObjTuple> objects = {{w.V, w.NS}, {w.NS, w.NS2}, {w.Adj, w.V}};
    std::vector<MorTuple> mors, morsMinus1;
    for (const auto& t : objects) {
        mors.push_back({ModMap::identity(t[0]), ModMap::identity(t[1])});
        mors.push_back(closedTuple(rng, t));
        morsMinus1.push_back({randomMap(rng, t[0], t[0], -1), randomClosedMap(rng, t[1], t[1])});
    }
    CheckReport rep = checkPseudonaturality("t", tCS(w.P, w.pi2), objects, mors, morsMinus1);
    CHECK(rep.pass);
}

TEST_CASE("hexagons and gamma-equivariance for the sl2 Casimir") {
    World w = sl2World();
    Rng rng(59);
    std::vector<ObjTuple> triples = {{w.V, w.Adj, w.V}, {w.V, w.NS, w.step}, {w.NS, w.V, w.NS2}};
    std::vector<MorTuple> morTriples;
    for (const auto& t : triples) morTriples.push_back(closedTuple(rng, t));
    CheckReport hex = checkHexagons(*w.P, w.pi2, triples, morTriples);
    CHECK(hex.pass);

    std::vector<ObjTuple> pairs = {{w.V, w.Adj}, {w.V, w.NS}, {w.NS, w.NS2}, {w.step, w.NS}};
    std::vector<MorTuple> morPairs;
    for (const auto& t : pairs) morPairs.push_back(closedTuple(rng, t));
    CheckReport eq = checkGammaEquivariance(*w.P, w.pi2, pairs, morPairs);
    CHECK(eq.pass);

    // regression: a handmade asymmetric rule in place of the symmetric pairing
    // (pairing only d_+ against the first slot and d_3 against the second)
    // violates the single-component equivariance identity
    auto asymT = [&](const ModulePtr& M, const ModulePtr& N) {
        ModulePtr T = tensorModule(M, N);
        ModMap r(T, T, 0);
        Derivation Dp = Derivation::coordinate(w.A->algebra(), 0);
        Derivation D3 = Derivation::coordinate(w.A->algebra(), 2);
        int rN = N->rank();
        for (int i = 0; i < M->rank(); ++i)
            for (int j = 0; j < M->rank(); ++j)
                for (int q = 0; q < rN; ++q)
                    for (int r2 = 0; r2 < rN; ++r2) {
                        if (M->entry(i, j).isZero() || N->entry(q, r2).isZero()) continue;
                        GradedPoly val = pairRight(Dp, deRham(M->entry(i, j))) *
                                         pairRight(D3, deRham(N->entry(q, r2)));
                        r.entry(i * rN + q, j * rN + r2) += val;
                    }
        return r;
    };
    ModMap g = gammaComponent(w.V, w.Adj);
    ModMap lhsA = compose(g, asymT(w.V, w.Adj));
    ModMap rhsA = compose(retarget(asymT(w.Adj, w.V), g.tgt(), g.tgt()), g);
    CHECK(!(lhsA - rhsA).isZero());
}

TEST_CASE("hexagons and gamma-equivariance for the Heisenberg family") {
    World h = heisWorld();
    Rng rng(61);

    // the samples must genuinely exercise the tilde part of pi: the gauged
    // differential contains nu, and the tilde term alone contributes to t
    bool nuInDiff = false;
    for (int i = 0; i < h.NS->rank(); ++i)
        for (int j = 0; j < h.NS->rank(); ++j)
            for (const auto& [m, c] : h.NS->entry(i, j).terms())
                if (m.exponentOf(3) > 0) nuInDiff = true;
    CHECK(nuInDiff);
    GradedPoly tildeOnly = -(GradedPoly::gen(h.P->ext(), 1) *
                             GradedPoly::gen(h.P->ext(), h.P->sgenId(1)) *
                             GradedPoly::gen(h.P->ext(), h.P->sgenId(3)));
    CHECK(!tSingle(*h.P, tildeOnly, h.NS, h.NS).isZero());

    std::vector<ObjTuple> triples = {{h.V, h.NS, h.step}, {h.NS, h.V, h.NS2}};
    std::vector<MorTuple> morTriples;
    for (const auto& t : triples) morTriples.push_back(closedTuple(rng, t));
    CHECK(checkHexagons(*h.P, h.pi2, triples, morTriples).pass);

    std::vector<ObjTuple> pairs = {{h.V, h.NS}, {h.NS, h.NS2}};
    std::vector<MorTuple> morPairs;
    for (const auto& t : pairs) morPairs.push_back(closedTuple(rng, t));
    CHECK(checkGammaEquivariance(*h.P, h.pi2, pairs, morPairs).pass);
}

TEST_CASE("non-invariant bivector: hexagons hold structurally but t is not closed") {
    World w = sl2World();
    GradedPoly bad = GradedPoly::gen(w.P->ext(), w.P->sgenId(2)) *
                     GradedPoly::gen(w.P->ext(), w.P->sgenId(2));
    // the closedness precondition fails
    CHECK(!homDiff(tSingle(*w.P, bad, w.NS, w.V)).isZero());
    // while the structural (linear-in-t) hexagon identities still pass, with
    // the failed precondition flagged in the report
    std::vector<ObjTuple> triples = {{w.NS, w.V, w.step}};
    CheckReport hex = checkHexagons(*w.P, bad, triples, {});
    CHECK(hex.pass);
    REQUIRE(!hex.notes.empty());
    CHECK(hex.notes.front().find("precondition") != std::string::npos);
    // malformed candidates are rejected before evaluation
    CHECK_THROWS_AS((void)tSingle(*w.P, GradedPoly::gen(w.P->ext(), w.P->sgenId(0)), w.V, w.V),
                    Error);
}

TEST_CASE("equivariance doubles hold only mod-exact on some non-strict pairs") {
    World w = sl2World();
    Rng rng(89);
    bool sawNonStrict = false;
    for (int iter = 0; iter < 8; ++iter) {
        ModMap h = randomClosedMap(rng, w.NS, w.NS);
        ModMap k = randomClosedMap(rng, w.NS2, w.NS2);
        ModMap g = gammaComponent(w.NS, w.NS2);
        ModMap td = tDouble(*w.P, w.pi2, h, k);
        ModMap td2 = tDouble(*w.P, w.pi2, k, h);
        ModMap res = compose(g, td) - compose(retarget(td2, g.tgt(), g.tgt()), g);
        CHECK(isExact(res));
        if (!res.isZero()) sawNonStrict = true;
    }
    // the 2-homotopy term is genuinely nonzero on some samples
    CHECK(sawNonStrict);
}

TEST_CASE("t_double: with constant k on a strict factor only the first summand survives") {
    World w = sl2World();
    Rng rng(97);
    ModMap h = randomClosedMap(rng, w.NS, w.NS);
    Scalar c(3);
    ModMap k = ModMap::identity(w.V).scaled(c);
    ModMap td = tDouble(*w.P, w.pi2, h, k);
    // term-by-term oracle: second summand dies since ddR kills the constant
    // entries of k; first summand reduces to c * <pi2, ddR(h_i^j), ddR(N_q^r)>
    ModMap oracle(td.src(), td.tgt(), -1);
    int rN = w.V->rank();
    for (int i = 0; i < w.NS->rank(); ++i)
        for (int j = 0; j < w.NS->rank(); ++j) {
            if (h.entry(i, j).isZero()) continue;
            Kaehler om = deRham(h.entry(i, j));
            for (int q = 0; q < rN; ++q)
                for (int r2 = 0; r2 < rN; ++r2) {
                    if (w.V->entry(q, r2).isZero()) continue;
                    GradedPoly val =
                        w.P->pairWeight2(w.pi2, om, deRham(w.V->entry(q, r2))).scaled(c);
                    int e = w.V->degreeOf(q) - w.V->degreeOf(r2);
                    int sgn = -1;
                    if ((w.NS->degreeOf(j) & 1) && (e & 1)) sgn = -sgn;
                    if (sgn < 0) val = -val;
                    oracle.entry(i * rN + q, j * rN + r2) += val;
                }
        }
    CHECK(td == oracle);
}

TEST_CASE("samples with negative basis degrees") {
    World w = sl2World();
    // a complex spread over degrees [-1, 1]
    std::vector<DgMod::BasisElem> basis = {{"u0", -1}, {"u1", 0}, {"u2", 1}};
    auto wide = std::make_shared<DgMod>(w.A, std::move(basis),
                                        std::vector<GradedPoly>(9, GradedPoly(w.A->algebra())));
    Rng rng(101);
    ModulePtr NSw = gaugeTransform(rng, tensorModule(w.V, wide));
    CHECK(checkModule(*NSw).pass);
    CHECK(homDiff(tSingle(*w.P, w.pi2, NSw, w.NS)).isZero());
    std::vector<ObjTuple> pairs = {{NSw, w.NS}};
    std::vector<MorTuple> morPairs = {
        {randomClosedMap(rng, NSw, NSw), randomClosedMap(rng, w.NS, w.NS)}};
    CHECK(checkGammaEquivariance(*w.P, w.pi2, pairs, morPairs).pass);
    std::vector<ObjTuple> triples = {{w.V, NSw, w.step}};
    std::vector<MorTuple> morTriples = {{randomClosedMap(rng, w.V, w.V),
                                         randomClosedMap(rng, NSw, NSw),
                                         randomClosedMap(rng, w.step, w.step)}};
    CHECK(checkHexagons(*w.P, w.pi2, triples, morTriples).pass);
}

TEST_CASE("pnat_compose: unit laws and coherence modification") {
    World w = sl2World();
    Rng rng(67);
    CompSet t = tCS(w.P, w.pi2);
    CompSet id2 = CompSet::identityOf(2, Functor::tensor());
    ObjTuple pair = {w.NS, w.V};
    MorTuple hs = closedTuple(rng, pair);
    // vertical composite with the identity transformation
    CompSet vc = vcompose(t, id2);
    CHECK(vc.single(pair) == t.single(pair));
    CHECK(vc.dbl(hs) == t.dbl(hs));
    CompSet cv = vcompose(id2, t);
    CHECK(cv.single(pair) == t.single(pair));
    CHECK(cv.dbl(hs) == t.dbl(hs));

    // (gamma o t) single components = gamma_{M,N} t_{M,N}
    CompSet gt = vcompose(gammaCS(w.A), t);
    ModMap expect = compose(retarget(gammaComponent(w.NS, w.V), tensorAll(pair),
                                     tensorAll({w.V, w.NS})),
                            t.single(pair));
    CHECK(gt.single(pair) == expect);

    // coherence modification of the * composition: with zeta: id => Omega(x).,
    // eta: Omega(x). => Omega(x). and the D-level pair (zeta', eta'), the
    // component is eta'_{H(c)} zeta'_{G(c),H(c)}(eta_c) F'(zeta_c); it
    // vanishes whenever zeta' is strictly natural, and for zeta' = xi it
    // vanishes when eta_c is the identity (property (2)).
    CompSet xi = xiCS(w.A);
    CompSet idOmega = CompSet::identityOf(1, Functor::omegaTensor(w.A));
    ObjTuple one = {w.NS};
    CHECK(starCoherence(idOmega, idOmega, idOmega, xi, one).isZero());
    CHECK(starCoherence(idOmega, xi, idOmega, xi, one).isZero());
}

TEST_CASE("horizontal composition against direct whiskering") {
    World w = sl2World();
    // Id_{Omega (x) -} * xi = the xi components post-composed with the functor
    CompSet xi = xiCS(w.A);
    CompSet idOm = CompSet::identityOf(1, Functor::omegaTensor(w.A));
    CompSet wh = hcompose(idOm, xi);
    ObjTuple one = {w.NS};
    // (Id * xi)_c = F'(xi_c) composed with the identity
    ModMap lhs = wh.single(one);
    ModMap rhs = idOm.src.mor({xi.single(one)});
    CHECK(lhs == rhs);
}

TEST_CASE("xi splits over tensor products") {
    // xi_{N(x)L} = xi_N (x) id + (gamma_{N,Omega} (x) id)(id (x) xi_L), and the
    // analogous splitting of the homotopy components; both hold strictly.
    World w = sl2World();
    ModulePtr Om = omegaShifted(w.A);
    for (auto [N, L] : {std::pair{w.V, w.NS}, {w.NS, w.NS2}, {w.step, w.V}}) {
        ModulePtr NL = tensorModule(N, L);
        ModulePtr flatT = tensorAll({Om, N, L});
        ModMap lhs = retarget(xiSingle(w.A, NL), NL, flatT);
        ModMap term1 = retarget(tensorMap(xiSingle(w.A, N), ModMap::identity(L)), NL, flatT);
        ModMap inner = retarget(tensorMap(ModMap::identity(N), xiSingle(w.A, L)), NL,
                                tensorAll({N, Om, L}));
        ModMap move = retarget(tensorMap(gammaComponent(N, Om), ModMap::identity(L)),
                               tensorAll({N, Om, L}), flatT);
        CHECK(lhs == term1 + compose(move, inner));

        Rng rng(113);
        ModMap k = randomClosedMap(rng, N, N), l = randomClosedMap(rng, L, L);
        ModMap dlhs = retarget(xiDouble(w.A, tensorMap(k, l)), NL, flatT);
        ModMap dterm1 = retarget(tensorMap(xiDouble(w.A, k), l), NL, flatT);
        ModMap dinner =
            retarget(tensorMap(k, xiDouble(w.A, l)), NL, tensorAll({N, Om, L}));
        CHECK(dlhs == dterm1 + compose(move, dinner));
    }
}

TEST_CASE("the explicit 2-homotopy witnessing gamma-equivariance of the doubles") {
    // gamma o (xi_dbl(h) (x) (id (x) k) xi_N + xi_{M'} h (x) xi_dbl(k)) o gamma
    //   = xi_{N'} k (x) xi_dbl(h) + xi_dbl(k) (x) (id (x) h) xi_M
    //     + homDiff(xi_dbl(k) (x) xi_dbl(h)),
    // strictly, before passing to the truncated quotient.
    World w = sl2World();
    ModulePtr Om = omegaShifted(w.A);
    Rng rng(127);
    for (auto [M, N] : {std::pair{w.NS, w.NS2}, {w.V, w.NS}}) {
        ModMap h = randomClosedMap(rng, M, M), k = randomClosedMap(rng, N, N);
        ModulePtr OmM = omegaShiftTensor(w.A, M), OmN = omegaShiftTensor(w.A, N);

        ModMap inner =
            tensorMap(xiDouble(w.A, h),
                      compose(tensorMap(ModMap::identity(Om), k), xiSingle(w.A, N))) +
            tensorMap(compose(xiSingle(w.A, M), h), xiDouble(w.A, k));
        ModMap gIn = gammaComponent(N, M);
        ModMap gOut = gammaComponent(OmM, OmN);
        ModMap lhs = compose(gOut, compose(retarget(inner, gIn.tgt(), gOut.src()), gIn));

        ModMap rhs1 =
            tensorMap(compose(xiSingle(w.A, N), k), xiDouble(w.A, h));
        ModMap rhs2 =
            tensorMap(xiDouble(w.A, k),
                      compose(tensorMap(ModMap::identity(Om), h), xiSingle(w.A, M)));
        ModMap witness = homDiff(tensorMap(xiDouble(w.A, k), xiDouble(w.A, h)));
        ModMap rhs = retarget(rhs1, lhs.src(), lhs.tgt()) +
                     retarget(rhs2, lhs.src(), lhs.tgt()) +
                     retarget(witness, lhs.src(), lhs.tgt());
        CHECK(lhs == rhs);
    }
}

TEST_CASE("t_ij calculus on 3- and 4-factor samples") {
    World w = sl2World();
    Rng rng(71);
    std::vector<ObjTuple> triples = {{w.V, w.NS, w.step}, {w.NS, w.NS2, w.V}};
    std::vector<MorTuple> morTriples;
    for (const auto& t : triples) morTriples.push_back(closedTuple(rng, t));
    std::vector<ObjTuple> quads = {{w.V, w.NS, w.step, w.V}};
    std::vector<MorTuple> morQuads;
    for (const auto& t : quads) morQuads.push_back(closedTuple(rng, t));
    CHECK(checkTijCalculus(w.P, w.pi2, triples, morTriples, quads, morQuads).pass);

    // t_{12} with a zero-differential third factor equals t (x) id
    ObjTuple t3 = {w.V, w.NS, w.step};
    CompSet t12 = tijCS(w.P, w.pi2, 3, 0, 1);
    ModMap direct = retarget(tensorMap(tSingle(*w.P, w.pi2, w.V, w.NS), ModMap::identity(w.step)),
                             tensorAll(t3), tensorAll(t3));
    CHECK(t12.single(t3) == direct);
}

TEST_CASE("gamma modification: witness law, symmetry, strict vanishing") {
    World w = sl2World();
    Rng rng(73);
    std::vector<ObjTuple> triples = {{w.NS, w.V, w.NS2}, {w.V, w.NS, w.step}};
    std::vector<MorTuple> morTriples;
    for (const auto& t : triples) morTriples.push_back(closedTuple(rng, t));
    CHECK(checkGammaModification(w.P, w.pi2, triples, morTriples).pass);

    // Gamma = 0 on all-strict triples (constant t entries are killed by ddR)
    ObjTuple strict = {w.V, w.Adj, w.V};
    CHECK(gammaModification(*w.P, w.pi2, strict, 0, 1, 2).isZero());
    // and nonzero on non-strict ones
    CHECK(!gammaModification(*w.P, w.pi2, triples[0], 0, 1, 2).isZero());

    // a flipped sign breaks modification law (1)
    CompSet t12 = tijCS(w.P, w.pi2, 3, 0, 1);
    CompSet t12_3 = tIJCS(w.P, w.pi2, 3, {0, 1}, {2});
    CompSet comm = csCommutator(t12, t12_3);
    ModMap gamma = gammaModification(*w.P, w.pi2, triples[0], 0, 1, 2);
    CHECK(!(comm.single(triples[0]) - homDiff(-gamma)).isZero());
}

TEST_CASE("Gamma from the right-entry rewriting agrees with Gamma_ijk") {
    // the alternative witness obtained from pseudo-naturality of t_{k(ij)}
    // in its right entry: conjugate t_dbl(id_{M_k}, t_{M_i,M_j}) by the
    // (k,i,j) ordering
    World w = sl2World();
    std::vector<ObjTuple> triples = {{w.NS, w.V, w.NS2}, {w.V, w.NS, w.step}};
    for (const auto& mods : triples) {
        ModMap gammaLeft = gammaModification(*w.P, w.pi2, mods, 0, 1, 2);

        std::vector<int> order = {2, 0, 1};
        std::vector<int> invOrder(3);
        for (int t = 0; t < 3; ++t) invOrder[order[t]] = t;
        ModulePtr MiMj = tensorModule(mods[0], mods[1]);
        ModMap tij = tSingle(*w.P, w.pi2, mods[0], mods[1]);
        ModMap inner =
            tDouble(*w.P, w.pi2, ModMap::identity(mods[2]), retarget(tij, MiMj, MiMj));
        ObjTuple permuted = {mods[2], mods[0], mods[1]};
        ModulePtr flatP = tensorAll(permuted);
        inner = retarget(inner, flatP, flatP);
        ModMap fwd = koszulPermutation(mods, order);
        ModMap back = koszulPermutation(permuted, invOrder);
        ModMap gammaRight = compose(back, compose(inner, fwd));

        CHECK(gammaLeft == gammaRight);
    }
}

TEST_CASE("randomized small modules: braiding laws across degrees [-1,1]") {
    // random semi-free modules of rank <= 3 with basis degrees in [-1,1],
    // obtained by gauging free complexes against the strict rep
    World w = sl2World();
    Rng rng(107);
    auto randomModule = [&]() -> ModulePtr {
        int rank = 2 + (int)rng.below(2);
        std::vector<DgMod::BasisElem> basis;
        for (int i = 0; i < rank; ++i)
            basis.push_back({"m" + std::to_string(i), (int)rng.below(3) - 1});
        auto free = std::make_shared<DgMod>(
            w.A, std::move(basis),
            std::vector<GradedPoly>(rank * rank, GradedPoly(w.A->algebra())));
        return rng.below(2) ? gaugeTransform(rng, free)
                            : gaugeTransform(rng, tensorModule(w.V, free));
    };
    for (int iter = 0; iter < 3; ++iter) {
        ModulePtr M = randomModule(), N = randomModule(), L = randomModule();
        CHECK(homDiff(tSingle(*w.P, w.pi2, M, N)).isZero());
        std::vector<ObjTuple> pairs = {{M, N}};
        std::vector<MorTuple> morPairs = {
            {randomClosedMap(rng, M, M), randomClosedMap(rng, N, N)}};
        CHECK(checkGammaEquivariance(*w.P, w.pi2, pairs, morPairs).pass);
        std::vector<ObjTuple> triples = {{M, N, L}};
        std::vector<MorTuple> morTriples = {{randomClosedMap(rng, M, M),
                                             randomClosedMap(rng, N, N),
                                             randomClosedMap(rng, L, L)}};
        CHECK(checkHexagons(*w.P, w.pi2, triples, morTriples).pass);
        CHECK(checkGammaModification(w.P, w.pi2, triples, morTriples).pass);
    }
}

TEST_CASE("zero modification between equal component sets passes") {
    World w = sl2World();
    Rng rng(103);
    CompSet t = tCS(w.P, w.pi2);
    std::vector<ObjTuple> pairs = {{w.NS, w.V}, {w.V, w.NS2}};
    std::vector<MorTuple> mors;
    for (const auto& p : pairs) mors.push_back({randomClosedMap(rng, p[0], p[0]),
                                                randomClosedMap(rng, p[1], p[1])});
    auto zero = [&](const ObjTuple& c) {
        return ModMap::zero(t.src.obj(c), t.tgt.obj(c), -1);
    };
    CHECK(checkModification("zero", zero, t, t, pairs, mors).pass);
}

TEST_CASE("first-order hexagons over Q[h]/(h^2)") {
    World w = sl2World();
    Rng rng(79);
    std::vector<ObjTuple> triples = {{w.V, w.NS, w.step}, {w.NS, w.V, w.NS2}};
    std::vector<MorTuple> morTriples;
    for (const auto& t : triples) morTriples.push_back(closedTuple(rng, t));
    std::vector<ObjTuple> pairs = {{w.V, w.NS}, {w.NS, w.NS2}};
    std::vector<MorTuple> morPairs;
    for (const auto& t : pairs) morPairs.push_back(closedTuple(rng, t));
    CheckReport rep = checkFirstOrderHexagon(w.A, w.P, w.pi2, triples, morTriples, pairs, morPairs);
    CHECK(rep.pass);

    // t = 0 reduces to the strict symmetric hexagons
    GradedPoly zero(w.P->ext());
    CheckReport triv = checkFirstOrderHexagon(w.A, w.P, zero, triples, morTriples, pairs, morPairs);
    CHECK(triv.pass);
}

TEST_CASE("Phi identities modulo h^3") {
    World w = sl2World();
    Rng rng(83);
    // all-strict samples: defects vanish strictly
    std::vector<ObjTuple> strictTriples = {{w.V, w.Adj, w.V}};
    std::vector<MorTuple> strictMors;
    for (const auto& t : strictTriples) {
        MorTuple ids;
        for (const auto& m : t) ids.push_back(ModMap::identity(m));
        strictMors.push_back(ids);
    }
    std::vector<ObjTuple> quads = {{w.V, w.V, w.Adj, w.V}};
    std::vector<MorTuple> morQuads;
    for (const auto& t : quads) morQuads.push_back(closedTuple(rng, t));
    CheckReport strictRep =
        checkPhiModHbar3(w.A, w.P, w.pi2, strictTriples, strictMors, quads, morQuads);
    CHECK(strictRep.pass);
    // on strict reps the hexagon identities hold strictly: every defect residue
    // is strictly zero
    for (const auto& r : strictRep.residues)
        if (r.label.find("defect") != std::string::npos) CHECK(r.strictZero);

    // non-strict samples: defects witnessed by the Gamma combinations
    std::vector<ObjTuple> triples = {{w.NS, w.V, w.NS2}};
    std::vector<MorTuple> morTriples;
    for (const auto& t : triples) morTriples.push_back(closedTuple(rng, t));
    CheckReport rep = checkPhiModHbar3(w.A, w.P, w.pi2, triples, morTriples, quads, morQuads);
    CHECK(rep.pass);
    bool sawNonzeroDefect = false;
    for (const auto& r : rep.residues)
        if (r.label.find("witness") != std::string::npos && !r.strictZero) sawNonzeroDefect = true;
    (void)sawNonzeroDefect;  // informational: defects may or may not vanish strictly
}
