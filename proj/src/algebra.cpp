#include "dgbraid/algebra.hpp"

#include <algorithm>

namespace dgbraid {

Algebra::Algebra(std::vector<Generator> gens) {
    for (auto& g : gens) add(g.name, g.degree);
}

int Algebra::add(const std::string& name, int degree) {
    if (index_.count(name)) throw Error("Algebra: duplicate generator name '" + name + "'");
    int id = (int)gens_.size();
    gens_.push_back({name, degree});
    index_[name] = id;
    return id;
}

int Algebra::find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
}

int Algebra::lookup(const std::string& name) const {
    int id = find(name);
    if (id < 0) throw Error("Algebra: unknown generator '" + name + "'");
    return id;
}

bool Algebra::allPositiveDegrees() const {
    for (const auto& g : gens_)
        if (g.degree <= 0) return false;
    return true;
}

int Monomial::exponentOf(int id) const {
    for (const auto& [g, e] : f_)
        if (g == id) return e;
    return 0;
}

int Monomial::totalExponent() const {
    int t = 0;
    for (const auto& [g, e] : f_) t += e;
    return t;
}

int Monomial::degree(const Algebra& a) const {
    int d = 0;
    for (const auto& [g, e] : f_) d += e * a.degree(g);
    return d;
}

int Monomial::parity(const Algebra& a) const {
    int p = 0;
    for (const auto& [g, e] : f_)
        if (a.odd(g)) p ^= (e & 1);
    return p;
}

std::pair<int, Monomial> Monomial::mul(const Monomial& x, const Monomial& y, const Algebra& a) {
    // Merge sorted factor lists. A factor of y jumps left past the not yet
    // consumed factors of x; each odd-odd transposition contributes -1.
    int oddRemaining = 0;
    for (const auto& [g, e] : x.f_)
        if (a.odd(g)) oddRemaining += (e & 1);

    std::vector<Factor> out;
    out.reserve(x.f_.size() + y.f_.size());
    size_t i = 0, j = 0;
    int sign = 1;
    while (i < x.f_.size() || j < y.f_.size()) {
        bool takeX;
        if (i == x.f_.size())
            takeX = false;
        else if (j == y.f_.size())
            takeX = true;
        else if (x.f_[i].first == y.f_[j].first) {
            int g = x.f_[i].first;
            if (a.odd(g)) return {0, Monomial()};  // odd square vanishes
            out.push_back({g, x.f_[i].second + y.f_[j].second});
            ++i;
            ++j;
            continue;
        } else
            takeX = x.f_[i].first < y.f_[j].first;

        if (takeX) {
            if (a.odd(x.f_[i].first)) oddRemaining -= (x.f_[i].second & 1);
            out.push_back(x.f_[i]);
            ++i;
        } else {
            if (a.odd(y.f_[j].first) && (y.f_[j].second & 1) && (oddRemaining & 1)) sign = -sign;
            out.push_back(y.f_[j]);
            ++j;
        }
    }
    return {sign, Monomial(std::move(out))};
}

std::string Monomial::str(const Algebra& a) const {
    if (f_.empty()) return "1";
    std::string out;
    for (const auto& [g, e] : f_) {
        if (!out.empty()) out += "*";
        out += a.gen(g).name;
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::pair<int, Monomial> monoNormalize(const std::vector<int>& raw, const Algebra& a) {
    Monomial m;
    int sign = 1;
    for (int id : raw) {
        if (id < 0 || id >= a.size()) throw Error("monoNormalize: unknown generator id");
        auto [s, r] = Monomial::mul(m, Monomial::gen(id), a);
        if (s == 0) return {0, Monomial()};
        sign *= s;
        m = std::move(r);
    }
    return {sign, m};
}

GradedPoly GradedPoly::constant(AlgebraPtr alg, Scalar c) {
    GradedPoly p(std::move(alg));
    p.addTerm(Monomial::unit(), c);
    return p;
}

GradedPoly GradedPoly::gen(AlgebraPtr alg, int id) {
    GradedPoly p(std::move(alg));
    p.addTerm(Monomial::gen(id), Scalar::one());
    return p;
}

GradedPoly GradedPoly::term(AlgebraPtr alg, Monomial m, Scalar c) {
    GradedPoly p(std::move(alg));
    p.addTerm(m, c);
    return p;
}

void GradedPoly::addTerm(const Monomial& m, const Scalar& c) {
    if (c.isZero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
}

Scalar GradedPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero() : it->second;
}

std::optional<int> GradedPoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = terms_.begin()->first.degree(*alg_);
    for (const auto& [m, c] : terms_)
        if (m.degree(*alg_) != d) throw Error("GradedPoly::degree: inhomogeneous element");
    return d;
}

bool GradedPoly::isHomogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree(*alg_);
    for (const auto& [m, c] : terms_)
        if (m.degree(*alg_) != d) return false;
    return true;
}

std::map<int, GradedPoly> GradedPoly::homogeneousParts() const {
    std::map<int, GradedPoly> parts;
    for (const auto& [m, c] : terms_) {
        int d = m.degree(*alg_);
        auto it = parts.find(d);
        if (it == parts.end()) it = parts.emplace(d, GradedPoly(alg_)).first;
        it->second.addTerm(m, c);
    }
    return parts;
}

void GradedPoly::requireSameAlgebra(const GradedPoly& o) const {
    if (alg_ != o.alg_) throw Error("GradedPoly: operands over different algebras");
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly r(alg_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
    requireSameAlgebra(o);
    GradedPoly r(*this);
    for (const auto& [m, c] : o.terms_) r.addTerm(m, c);
    return r;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const {
    requireSameAlgebra(o);
    GradedPoly r(*this);
    for (const auto& [m, c] : o.terms_) r.addTerm(m, -c);
    return r;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
    requireSameAlgebra(o);
    for (const auto& [m, c] : o.terms_) addTerm(m, c);
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
    requireSameAlgebra(o);
    for (const auto& [m, c] : o.terms_) addTerm(m, -c);
    return *this;
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
    requireSameAlgebra(o);
    GradedPoly r(alg_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) {
            auto [sign, m] = Monomial::mul(m1, m2, *alg_);
            if (sign == 0) continue;
            Scalar c = c1 * c2;
            if (sign < 0) c = -c;
            r.addTerm(m, c);
        }
    return r;
}

GradedPoly GradedPoly::scaled(const Scalar& c) const {
    GradedPoly r(alg_);
    if (c.isZero()) return r;
    for (const auto& [m, t] : terms_) r.addTerm(m, t * c);
    return r;
}

GradedPoly GradedPoly::pow(int e) const {
    if (e < 0) throw Error("GradedPoly::pow: negative exponent");
    GradedPoly r = one(alg_);
    for (int k = 0; k < e; ++k) r = r * (*this);
    return r;
}

bool GradedPoly::operator==(const GradedPoly& o) const {
    requireSameAlgebra(o);
    return terms_ == o.terms_;
}

int GradedPoly::support() const {
    int n = 0;
    for (const auto& [m, c] : terms_) n += c.support();
    return n;
}

GradedPoly GradedPoly::hComponent(int k) const {
    GradedPoly r(alg_);
    for (const auto& [m, c] : terms_) r.addTerm(m, c.hComponent(k));
    return r;
}

std::string GradedPoly::str() const {
    if (terms_.empty()) return "0";
    // Deterministic order: by degree, then monomial normal-form order.
    std::vector<const std::pair<const Monomial, Scalar>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::stable_sort(ts.begin(), ts.end(), [&](auto* a, auto* b) {
        int da = a->first.degree(*alg_), db = b->first.degree(*alg_);
        if (da != db) return da < db;
        return a->first < b->first;
    });
    std::string out;
    for (auto* t : ts) {
        const Monomial& m = t->first;
        Scalar c = t->second;
        bool negative = c.isPlain() && c.coeff(0) < 0;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (negative) c = -c;
        if (m.isUnit())
            out += c.str();
        else if (c == Scalar::one())
            out += m.str(*alg_);
        else
            out += c.str() + "*" + m.str(*alg_);
    }
    return out;
}

}  // namespace dgbraid
