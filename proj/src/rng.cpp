#include "dgbraid/rng.hpp"

namespace dgbraid {

GradedPoly randomCombination(Rng& rng, const AlgebraPtr& alg, const std::vector<Monomial>& basis) {
    GradedPoly p(alg);
    for (const auto& m : basis) p.addTerm(m, Scalar(rng.smallRational()));
    return p;
}

GradedPoly randomPolyvector(Rng& rng, const PolAlgebra& P, int degree, int weight) {
    return randomCombination(rng, P.ext(), P.basis(degree, weight));
}

ModulePtr gaugeTransform(Rng& rng, const ModulePtr& M) {
    const CdgaPtr& A = M->cdga();
    const AlgebraPtr& alg = M->algebra();
    int r = M->rank();

    // phi = 1 + E with E strictly lower in a degree filtration, so phi is
    // invertible with inverse 1 - E + E^2 - ...
    std::vector<GradedPoly> E(r * r, GradedPoly(alg));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            int d = M->degreeOf(i) - M->degreeOf(j);
            if (d <= 0) continue;  // keeps E nilpotent in the filtration
            for (const auto& m : monomialsOfDegree(alg, d))
                if (rng.below(2) == 0) E[i * r + j].addTerm(m, Scalar(rng.smallRational()));
        }

    auto matMul = [&](const std::vector<GradedPoly>& a, const std::vector<GradedPoly>& b) {
        std::vector<GradedPoly> c(r * r, GradedPoly(alg));
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < r; ++k)
                for (int j = 0; j < r; ++j)
                    if (!a[i * r + j].isZero() && !b[j * r + k].isZero())
                        c[i * r + k] += a[i * r + j] * b[j * r + k];
        return c;
    };
    auto matAddId = [&](std::vector<GradedPoly> a, const Scalar& s) {
        for (int i = 0; i < r; ++i) a[i * r + i] += GradedPoly::constant(alg, s);
        return a;
    };

    std::vector<GradedPoly> phi = matAddId(E, Scalar::one());
    // inverse of 1 + E: alternating geometric series; E is nilpotent because
    // entries strictly decrease the basis-degree filtration.
    std::vector<GradedPoly> inv(r * r, GradedPoly(alg));
    std::vector<GradedPoly> power(r * r, GradedPoly(alg));
    for (int i = 0; i < r; ++i) power[i * r + i] = GradedPoly::one(alg);
    int sign = 1;
    for (int k = 0; k <= r; ++k) {
        for (int idx = 0; idx < r * r; ++idx)
            inv[idx] += sign < 0 ? -power[idx] : power[idx];
        power = matMul(power, E);
        sign = -sign;
        bool zero = true;
        for (const auto& e : power)
            if (!e.isZero()) zero = false;
        if (zero) break;
    }

    ModMap phiMap(M, M, 0, phi);
    ModMap invMap(M, M, 0, inv);

    // d'(1 (x) w_i) = phi(d(phi^{-1}(1 (x) w_i))):
    // d'_il = sum_j dA(inv_ij) phi_jl
    //       + sum_{jk} (-1)^{|inv_ij|} inv_ij M_jk phi_kl.
    std::vector<GradedPoly> diffNew(r * r, GradedPoly(alg));
    for (int i = 0; i < r; ++i)
        for (int l = 0; l < r; ++l) {
            GradedPoly e(alg);
            for (int j = 0; j < r; ++j) {
                const GradedPoly& inv_ij = invMap.entry(i, j);
                if (inv_ij.isZero()) continue;
                GradedPoly dInv = A->applyDiff(inv_ij);
                if (!dInv.isZero() && !phiMap.entry(j, l).isZero())
                    e += dInv * phiMap.entry(j, l);
                for (int k = 0; k < r; ++k) {
                    if (M->entry(j, k).isZero() || phiMap.entry(k, l).isZero()) continue;
                    GradedPoly t = inv_ij * M->entry(j, k) * phiMap.entry(k, l);
                    if ((M->degreeOf(i) - M->degreeOf(j)) & 1) t = -t;
                    e += t;
                }
            }
            diffNew[i * r + l] = std::move(e);
        }

    std::vector<DgMod::BasisElem> basis;
    for (int i = 0; i < r; ++i) basis.push_back({M->basisElem(i).name + "'", M->degreeOf(i)});
    auto out = std::make_shared<DgMod>(A, std::move(basis), std::move(diffNew));
    if (!checkModule(*out).pass) throw Error("gaugeTransform: internal square-zero failure");
    return out;
}

ModMap randomMap(Rng& rng, const ModulePtr& src, const ModulePtr& tgt, int degree) {
    ModMap f(src, tgt, degree);
    for (int i = 0; i < src->rank(); ++i)
        for (int j = 0; j < tgt->rank(); ++j) {
            int d = f.entryDegree(i, j);
            if (d < 0) continue;
            for (const auto& m : monomialsOfDegree(src->algebra(), d))
                if (rng.below(3) == 0) f.entry(i, j).addTerm(m, Scalar(rng.smallRational()));
        }
    return f;
}

ModMap randomClosedMap(Rng& rng, const ModulePtr& src, const ModulePtr& tgt) {
    ModMap f = homDiff(randomMap(rng, src, tgt, -1));
    if (src == tgt) f = f + ModMap::identity(src).scaled(Scalar(rng.smallNonzero()));
    return f;
}

}  // namespace dgbraid
