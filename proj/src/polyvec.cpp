#include "dgbraid/polyvec.hpp"

#include <functional>

namespace dgbraid {

PolAlgebra::PolAlgebra(CdgaPtr base, int shift) : base_(std::move(base)), n_(shift) {
    const Algebra& A = *base_->algebra();
    auto ext = std::make_shared<Algebra>();
    for (const auto& g : A.gens()) ext->add(g.name, g.degree);
    std::string s = "s" + std::to_string(n_ + 1) + "d";
    for (const auto& g : A.gens()) ext->add(s + "(" + g.name + ")", n_ + 1 - g.degree);
    extAlg_ = ext;

    // Differential table: d_A on base generators; on s-generators
    // d(s^{n+1} D_a) = (-1)^{n+1} s^{n+1}[d_A, D_a], with coefficients
    // transported past s^{n+1} by the Koszul sign (-1)^{|c|(n+1)}.
    std::vector<GradedPoly> diff;
    diff.reserve(2 * A.size());
    for (int i = 0; i < A.size(); ++i) diff.push_back(lift(base_->diffOf(i)));
    Derivation dA{base_->algebra(), 1, base_->diff()};
    for (int a = 0; a < A.size(); ++a) {
        Derivation comm = derivBracket(dA, Derivation::coordinate(base_->algebra(), a));
        GradedPoly v(extAlg_);
        for (int b = 0; b < A.size(); ++b) {
            if (comm.values[b].isZero()) continue;
            for (const auto& [deg, part] : comm.values[b].homogeneousParts()) {
                GradedPoly piece = lift(part) * GradedPoly::gen(extAlg_, sgenId(b));
                int sign = 1;
                if ((n_ + 1) & 1) sign = -sign;                 // (-1)^{n+1}
                if (((n_ + 1) & 1) && (deg & 1)) sign = -sign;  // (-1)^{|c|(n+1)}
                if (sign < 0) piece = -piece;
                v += piece;
            }
        }
        diff.push_back(v);
    }
    extCdga_ = std::make_shared<Cdga>(extAlg_, std::move(diff));
}

GradedPoly PolAlgebra::lift(const GradedPoly& p) const {
    if (p.algebra() == extAlg_) return p;
    if (p.algebra() != base_->algebra()) throw Error("PolAlgebra::lift: foreign algebra");
    GradedPoly out(extAlg_);
    for (const auto& [m, c] : p.terms()) out.addTerm(m, c);  // base ids coincide
    return out;
}

GradedPoly PolAlgebra::lower(const GradedPoly& p) const {
    GradedPoly out(base_->algebra());
    for (const auto& [m, c] : p.terms()) {
        for (const auto& [g, e] : m.factors())
            if (isSgen(g)) throw Error("PolAlgebra::lower: element has positive weight");
        out.addTerm(m, c);
    }
    return out;
}

int PolAlgebra::weightOf(const Monomial& m) const {
    int w = 0;
    for (const auto& [g, e] : m.factors())
        if (isSgen(g)) w += e;
    return w;
}

std::optional<int> PolAlgebra::weightOf(const GradedPoly& p) const {
    if (p.isZero()) return std::nullopt;
    int w = weightOf(p.terms().begin()->first);
    for (const auto& [m, c] : p.terms())
        if (weightOf(m) != w) throw Error("PolAlgebra::weightOf: mixed weight");
    return w;
}

std::map<int, GradedPoly> PolAlgebra::weightParts(const GradedPoly& p) const {
    std::map<int, GradedPoly> parts;
    for (const auto& [m, c] : p.terms()) {
        int w = weightOf(m);
        auto it = parts.find(w);
        if (it == parts.end()) it = parts.emplace(w, GradedPoly(extAlg_)).first;
        it->second.addTerm(m, c);
    }
    return parts;
}

GradedPoly PolAlgebra::bracketGenerators(int gp, int gq) const {
    const Algebra& E = *extAlg_;
    bool sp = isSgen(gp), sq = isSgen(gq);
    if (!sp && !sq) return GradedPoly(extAlg_);  // {a, a'} = 0
    if (sp && sq) return GradedPoly(extAlg_);    // coordinate derivations commute
    if (sp && !sq) {
        // {s^{n+1} D_a, b} = D_a(b) = delta_ab
        return gp - numBase() == gq ? GradedPoly::one(extAlg_) : GradedPoly(extAlg_);
    }
    // {b, s^{n+1} D_a} = -(-1)^{n+1} (-1)^{|b||s_a|} delta_ab
    if (gq - numBase() != gp) return GradedPoly(extAlg_);
    int sign = -1;
    if ((n_ + 1) & 1) sign = -sign;
    if ((E.degree(gp) & 1) && (E.degree(gq) & 1)) sign = -sign;
    return sign < 0 ? -GradedPoly::one(extAlg_) : GradedPoly::one(extAlg_);
}

GradedPoly PolAlgebra::bracketMonomials(const Monomial& mp, const Monomial& mq) const {
    const Algebra& E = *extAlg_;
    if (mp.isUnit() || mq.isUnit()) return GradedPoly(extAlg_);

    auto asPoly = [&](const Monomial& m) { return GradedPoly::term(extAlg_, m, Scalar::one()); };

    // Left argument: peel off the first generator factor x, mp = x * rest:
    // {x R, Q} = (-1)^{(n+1)|x|} x {R, Q} + (-1)^{|R||Q|} {x, Q} R.
    if (mp.totalExponent() > 1) {
        auto [gx, ex] = mp.factors().front();
        std::vector<Monomial::Factor> restF(mp.factors().begin(), mp.factors().end());
        if (ex > 1)
            restF.front().second = ex - 1;
        else
            restF.erase(restF.begin());
        Monomial rest(std::move(restF));

        GradedPoly term1 = GradedPoly::gen(extAlg_, gx) * bracketMonomials(rest, mq);
        if (((n_ + 1) & 1) && (E.degree(gx) & 1)) term1 = -term1;
        GradedPoly term2 = bracketMonomials(Monomial::gen(gx), mq) * asPoly(rest);
        if ((rest.parity(E) & 1) && (mq.parity(E) & 1)) term2 = -term2;
        return term1 + term2;
    }

    // Left argument is a single generator x. Split the right argument:
    // {x, Q1 Q2} = {x, Q1} Q2 + (-1)^{(|x|-n-1)|Q1|} Q1 {x, Q2}.
    int gx = mp.factors().front().first;
    if (mq.totalExponent() > 1) {
        auto [gy, ey] = mq.factors().front();
        Monomial q1 = Monomial::gen(gy);
        std::vector<Monomial::Factor> q2F(mq.factors().begin(), mq.factors().end());
        if (ey > 1)
            q2F.front().second = ey - 1;
        else
            q2F.erase(q2F.begin());
        Monomial q2(std::move(q2F));

        GradedPoly term1 = bracketMonomials(mp, q1) * asPoly(q2);
        GradedPoly term2 = GradedPoly::gen(extAlg_, gy) * bracketMonomials(mp, q2);
        int e = (E.degree(gx) - n_ - 1) * E.degree(gy);
        if (e & 1) term2 = -term2;
        return term1 + term2;
    }
    return bracketGenerators(gx, mq.factors().front().first);
}

GradedPoly PolAlgebra::schouten(const GradedPoly& p, const GradedPoly& q) const {
    if (p.algebra() != extAlg_ || q.algebra() != extAlg_)
        throw Error("PolAlgebra::schouten: operands not in this polyvector algebra");
    GradedPoly out(extAlg_);
    for (const auto& [mp, cp] : p.terms())
        for (const auto& [mq, cq] : q.terms()) out += bracketMonomials(mp, mq).scaled(cp * cq);
    return out;
}

GradedPoly PolAlgebra::pairWeight2(const GradedPoly& pi2, const Kaehler& omega,
                                   const Kaehler& omegaPrime) const {
    const AlgebraPtr& A = base_->algebra();
    GradedPoly out(A);
    if (pi2.isZero() || omega.isZero() || omegaPrime.isZero()) return out;
    auto w = weightOf(pi2);
    if (!w || *w != 2) throw Error("PolAlgebra::pairWeight2: weight-2 component required");

    auto omegaParts = omega.homogeneousParts();
    for (const auto& [m, c] : pi2.terms()) {
        // Normal form puts the base part before the s-part: m = B * s_a s_b.
        std::vector<Monomial::Factor> baseF;
        std::vector<int> sgens;
        for (const auto& [g, e] : m.factors()) {
            if (isSgen(g))
                for (int k = 0; k < e; ++k) sgens.push_back(g - numBase());
            else
                baseF.push_back({g, e});
        }
        GradedPoly B = GradedPoly::term(A, Monomial(std::move(baseF)), c);
        int a = sgens[0], b = sgens[1];
        Derivation Da = Derivation::coordinate(A, a), Db = Derivation::coordinate(A, b);

        // <sD sD', s^-1 w (x) s^-1 w'> = (-1)^{|w|+|D|} <D, <D',w> w'>
        //   + (-1)^{(|D|+1)(|D'|+1)} (-1)^{|w|+|D'|} <D', <D,w> w'>
        GradedPoly val(A);
        for (const auto& [dw, wpart] : omegaParts) {
            GradedPoly t1 = pairRight(Da, omegaPrime.leftMul(pairRight(Db, wpart)));
            if ((dw + Da.degree) & 1) t1 = -t1;
            GradedPoly t2 = pairRight(Db, omegaPrime.leftMul(pairRight(Da, wpart)));
            if ((dw + Db.degree) & 1) t2 = -t2;
            if (((Da.degree + 1) & 1) && ((Db.degree + 1) & 1)) t2 = -t2;
            val += t1 + t2;
        }
        out += B * val;
    }
    return out;
}

std::vector<Monomial> PolAlgebra::basis(int degree, int weight) const {
    const Algebra& A = *base_->algebra();
    const Algebra& E = *extAlg_;
    for (const auto& g : A.gens())
        if (g.degree <= 0)
            throw Error("PolAlgebra::basis: requires all base generators of positive degree");

    std::vector<Monomial> out;
    // Enumerate s-generator multisets of total exponent `weight`, then fill
    // with base monomials of the remaining degree.
    std::vector<Monomial::Factor> sfac;
    std::function<void(int, int, int)> pickS = [&](int fromGen, int left, int sdeg) {
        if (left == 0) {
            int l = degree - sdeg;
            if (l < 0) return;
            std::vector<Monomial::Factor> bfac;
            std::function<void(int, int)> pickB = [&](int fromB, int bleft) {
                if (bleft == 0) {
                    std::vector<Monomial::Factor> all(bfac);
                    all.insert(all.end(), sfac.begin(), sfac.end());
                    out.push_back(Monomial(std::move(all)));
                    return;
                }
                if (fromB >= A.size()) return;
                int d = A.degree(fromB);
                int maxE = A.odd(fromB) ? 1 : bleft / d;
                for (int e = maxE; e >= 1; --e) {
                    bfac.push_back({fromB, e});
                    pickB(fromB + 1, bleft - e * d);
                    bfac.pop_back();
                }
                pickB(fromB + 1, bleft);
            };
            pickB(0, l);
            return;
        }
        if (fromGen >= A.size()) return;
        int sid = sgenId(fromGen);
        int maxE = E.odd(sid) ? 1 : left;
        for (int e = maxE; e >= 1; --e) {
            sfac.push_back({sid, e});
            pickS(fromGen + 1, left - e, sdeg + e * E.degree(sid));
            sfac.pop_back();
        }
        pickS(fromGen + 1, left, sdeg);
    };
    pickS(0, weight, 0);
    return out;
}

GradedPoly PoissonCandidate::weight2() const {
    auto it = components.find(2);
    return it == components.end() ? GradedPoly(pol->ext()) : it->second;
}

McReport mcCheck(const PoissonCandidate& pi) {
    McReport rep;
    const PolAlgebra& P = *pi.pol;
    int n = P.shift();
    int maxW = 0;
    for (const auto& [w, comp] : pi.components) {
        if (comp.isZero()) continue;
        if (w < 2) {
            rep.structural = false;
            rep.structuralError = "component of weight < 2";
            rep.pass = false;
            return rep;
        }
        auto cw = P.weightOf(comp);
        if (!cw || *cw != w) {
            rep.structural = false;
            rep.structuralError = "component of declared weight " + std::to_string(w) +
                                  " is not pure of that weight";
            rep.pass = false;
            return rep;
        }
        auto d = comp.degree();
        if (!d || *d != n + 2) {
            rep.structural = false;
            rep.structuralError = "component of weight " + std::to_string(w) +
                                  " is not homogeneous of degree n+2";
            rep.pass = false;
            return rep;
        }
        maxW = std::max(maxW, w);
    }
    auto component = [&](int w) {
        auto it = pi.components.find(w);
        return it == pi.components.end() ? GradedPoly(P.ext()) : it->second;
    };
    for (int m = 2; m <= std::max(maxW, 2 * maxW - 1); ++m) {
        GradedPoly res = P.diff(component(m));
        for (int k = 2; k <= maxW; ++k) {
            int l = m + 1 - k;
            if (l < 2 || l > maxW) continue;
            res += P.schouten(component(k), component(l)).scaled(Scalar(1, 2));
        }
        if (!res.isZero() || m <= maxW)
            rep.weights.push_back({m, res.isZero(), res});
        if (!res.isZero()) rep.pass = false;
    }
    return rep;
}

}  // namespace dgbraid
