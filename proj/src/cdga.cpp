#include "dgbraid/cdga.hpp"

namespace dgbraid {

Cdga::Cdga(AlgebraPtr alg, std::vector<GradedPoly> diff)
    : alg_(std::move(alg)), diff_(std::move(diff)) {
    if ((int)diff_.size() != alg_->size())
        throw Error("Cdga: differential table size does not match generator count");
    for (int i = 0; i < alg_->size(); ++i) {
        if (diff_[i].isZero()) continue;
        auto d = diff_[i].degree();
        if (!d || *d != alg_->degree(i) + 1)
            throw Error("Cdga: d(" + alg_->gen(i).name + ") must be homogeneous of degree " +
                        std::to_string(alg_->degree(i) + 1));
    }
}

GradedPoly leibnizApply(const GradedPoly& p, int degree,
                        const std::vector<GradedPoly>& genValues) {
    const AlgebraPtr& alg = p.algebra();
    GradedPoly out(alg);
    for (const auto& [m, c] : p.terms()) {
        // D(g1^e1 ... gk^ek) = sum_i (-1)^{degree*|prefix_i|} prefix_i * e_i g_i^{e_i-1} D(g_i) * suffix_i
        int prefixDeg = 0;
        const auto& fs = m.factors();
        for (size_t i = 0; i < fs.size(); ++i) {
            auto [g, e] = fs[i];
            const GradedPoly& dg = genValues[g];
            if (!dg.isZero()) {
                GradedPoly piece = GradedPoly::constant(alg, c);
                if ((degree & 1) && (prefixDeg & 1)) piece = -piece;
                piece = piece.scaled(Scalar((long)e));
                // prefix * g^{e-1}
                std::vector<Monomial::Factor> pre(fs.begin(), fs.begin() + i);
                if (e > 1) pre.push_back({g, e - 1});
                piece = piece * GradedPoly::term(alg, Monomial(std::move(pre)), Scalar::one());
                piece = piece * dg;
                std::vector<Monomial::Factor> suf(fs.begin() + i + 1, fs.end());
                piece = piece * GradedPoly::term(alg, Monomial(std::move(suf)), Scalar::one());
                out += piece;
            }
            prefixDeg += e * alg->degree(g);
        }
    }
    return out;
}

GradedPoly Cdga::applyDiff(const GradedPoly& p) const {
    if (p.algebra() != alg_) throw Error("Cdga::applyDiff: element over a different algebra");
    return leibnizApply(p, 1, diff_);
}

SquareZeroReport Cdga::checkSquareZero() const {
    SquareZeroReport rep;
    for (int i = 0; i < alg_->size(); ++i) {
        GradedPoly dd = applyDiff(diff_[i]);
        if (!dd.isZero()) {
            rep.pass = false;
            rep.failingGenerator = i;
            rep.residue = dd;
            return rep;
        }
    }
    return rep;
}

std::string SquareZeroReport::str(const Algebra& a) const {
    if (pass) return "square-zero: pass";
    return "square-zero: FAIL at generator " + a.gen(failingGenerator).name +
           ", d(d(g)) = " + residue.str();
}

}  // namespace dgbraid
