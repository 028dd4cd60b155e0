#include "dgbraid/derivation.hpp"

namespace dgbraid {

Derivation Derivation::zero(const AlgebraPtr& a, int degree) {
    Derivation d{a, degree, {}};
    d.values.assign(a->size(), GradedPoly(a));
    return d;
}

Derivation Derivation::coordinate(const AlgebraPtr& a, int gen) {
    Derivation d = zero(a, -a->degree(gen));
    d.values[gen] = GradedPoly::one(a);
    return d;
}

GradedPoly Derivation::apply(const GradedPoly& p) const {
    if (p.algebra() != alg) throw Error("Derivation::apply: element over a different algebra");
    return leibnizApply(p, degree, values);
}

Derivation Derivation::scaledLeft(const GradedPoly& c) const {
    auto cd = c.degree();
    Derivation r{alg, degree + (cd ? *cd : 0), {}};
    r.values.reserve(values.size());
    for (const auto& v : values) r.values.push_back(c * v);
    return r;
}

Derivation Derivation::operator+(const Derivation& o) const {
    if (degree != o.degree) throw Error("Derivation: adding derivations of different degree");
    Derivation r{alg, degree, {}};
    for (size_t i = 0; i < values.size(); ++i) r.values.push_back(values[i] + o.values[i]);
    return r;
}

bool Derivation::isZero() const {
    for (const auto& v : values)
        if (!v.isZero()) return false;
    return true;
}

Derivation derivBracket(const Derivation& d1, const Derivation& d2) {
    if (d1.alg != d2.alg) throw Error("derivBracket: different algebras");
    Derivation r = Derivation::zero(d1.alg, d1.degree + d2.degree);
    int sign = (d1.degree & 1) && (d2.degree & 1) ? -1 : 1;
    for (int g = 0; g < d1.alg->size(); ++g) {
        // [D,D'](g) = D(D'(g)) - (-1)^{|D||D'|} D'(D(g))
        GradedPoly v = d1.apply(d2.values[g]);
        GradedPoly w = d2.apply(d1.values[g]);
        r.values[g] = sign < 0 ? v + w : v - w;
    }
    return r;
}

Kaehler Kaehler::zero(const AlgebraPtr& a) {
    Kaehler k{a, {}};
    k.coeff.assign(a->size(), GradedPoly(a));
    return k;
}

bool Kaehler::isZero() const {
    for (const auto& c : coeff)
        if (!c.isZero()) return false;
    return true;
}

Kaehler Kaehler::operator+(const Kaehler& o) const {
    Kaehler r{alg, {}};
    for (size_t i = 0; i < coeff.size(); ++i) r.coeff.push_back(coeff[i] + o.coeff[i]);
    return r;
}

Kaehler Kaehler::leftMul(const GradedPoly& p) const {
    Kaehler r{alg, {}};
    for (const auto& c : coeff) r.coeff.push_back(p * c);
    return r;
}

Kaehler Kaehler::rightMul(const GradedPoly& p) const {
    // omega * p: move p left past each ddR(gen_i), Koszul sign (-1)^{|p||gen_i|}.
    Kaehler r = zero(alg);
    for (const auto& [dp, part] : p.homogeneousParts()) {
        for (size_t i = 0; i < coeff.size(); ++i) {
            GradedPoly piece = coeff[i] * part;
            if ((dp & 1) && (alg->degree((int)i) & 1)) piece = -piece;
            r.coeff[i] += piece;
        }
    }
    return r;
}

std::map<int, Kaehler> Kaehler::homogeneousParts() const {
    std::map<int, Kaehler> parts;
    for (size_t i = 0; i < coeff.size(); ++i) {
        for (const auto& [dp, part] : coeff[i].homogeneousParts()) {
            int d = dp + alg->degree((int)i);
            auto it = parts.find(d);
            if (it == parts.end()) it = parts.emplace(d, Kaehler::zero(alg)).first;
            it->second.coeff[i] += part;
        }
    }
    return parts;
}

std::optional<int> Kaehler::degree() const {
    auto parts = homogeneousParts();
    if (parts.empty()) return std::nullopt;
    if (parts.size() > 1) throw Error("Kaehler::degree: inhomogeneous form");
    return parts.begin()->first;
}

Kaehler deRham(const GradedPoly& p) {
    const AlgebraPtr& alg = p.algebra();
    Kaehler out = Kaehler::zero(alg);
    for (const auto& [m, c] : p.terms()) {
        const auto& fs = m.factors();
        for (size_t i = 0; i < fs.size(); ++i) {
            auto [g, e] = fs[i];
            // ddR contribution at factor i: e * prefix*g^{e-1}*suffix, with
            // ddR(g) moved right past the suffix (degree |g|*|suffix| sign).
            int sufDeg = 0;
            for (size_t j = i + 1; j < fs.size(); ++j)
                sufDeg += fs[j].second * alg->degree(fs[j].first);
            std::vector<Monomial::Factor> rest;
            rest.reserve(fs.size());
            for (size_t j = 0; j < fs.size(); ++j) {
                if (j == i) {
                    if (e > 1) rest.push_back({g, e - 1});
                } else
                    rest.push_back(fs[j]);
            }
            Scalar coef = c * Scalar((long)e);
            if ((alg->degree(g) & 1) && (sufDeg & 1)) coef = -coef;
            out.coeff[g].addTerm(Monomial(std::move(rest)), coef);
        }
    }
    return out;
}

GradedPoly evalForm(const Kaehler& omega, const Derivation& d) {
    GradedPoly out(omega.alg);
    for (size_t i = 0; i < omega.coeff.size(); ++i) {
        if (omega.coeff[i].isZero() || d.values[i].isZero()) continue;
        GradedPoly piece = omega.coeff[i] * d.values[i];
        if ((d.degree & 1) && (omega.alg->degree((int)i) & 1)) piece = -piece;
        out += piece;
    }
    return out;
}

GradedPoly pairLeft(const Kaehler& omega, const Derivation& d) { return evalForm(omega, d); }

GradedPoly pairRight(const Derivation& d, const Kaehler& omega) {
    GradedPoly out(omega.alg);
    for (const auto& [deg, part] : omega.homogeneousParts()) {
        GradedPoly piece = evalForm(part, d);
        if ((d.degree & 1) && (deg & 1)) piece = -piece;
        out += piece;
    }
    return out;
}

}  // namespace dgbraid
