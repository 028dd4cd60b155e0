#include "dgbraid/homotopy.hpp"

#include <functional>

#include "dgbraid/linsolve.hpp"

namespace dgbraid {

std::vector<Monomial> monomialsOfDegree(const AlgebraPtr& alg, int degree) {
    if (!alg->allPositiveDegrees())
        throw Error("monomialsOfDegree: infinite-dimensional coefficient space "
                    "(non-positive-degree generators)");
    std::vector<Monomial> out;
    if (degree < 0) return out;
    std::vector<Monomial::Factor> fac;
    std::function<void(int, int)> pick = [&](int from, int left) {
        if (left == 0) {
            out.push_back(Monomial(fac));
            return;
        }
        if (from >= alg->size()) return;
        int d = alg->degree(from);
        int maxE = alg->odd(from) ? 1 : left / d;
        for (int e = maxE; e >= 1; --e) {
            if (e * d > left) continue;
            fac.push_back({from, e});
            pick(from + 1, left - e * d);
            fac.pop_back();
        }
        pick(from + 1, left);
    };
    pick(0, degree);
    return out;
}

namespace {

/// Decides exactness of a plain-rational degree-(-1) map.
bool isExactPlain(const ModMap& r) {
    if (r.isZero()) return true;
    const ModulePtr& M = r.src();
    const ModulePtr& T = r.tgt();
    const CdgaPtr& A = M->cdga();
    const AlgebraPtr& alg = M->algebra();
    int rM = M->rank(), rT = T->rank();

    // Unknowns: coefficients of admissible monomials in each entry of a
    // degree-(-2) map q.
    struct Unknown {
        int i, j;
        Monomial m;
    };
    std::vector<Unknown> unknowns;
    for (int i = 0; i < rM; ++i)
        for (int j = 0; j < rT; ++j) {
            int d = M->degreeOf(i) - T->degreeOf(j) - 2;
            for (auto& m : monomialsOfDegree(alg, d)) unknowns.push_back({i, j, m});
        }

    std::map<std::pair<int, Monomial>, int> rowIndex;  // (entry flat index, monomial) -> row
    auto rowOf = [&](int entry, const Monomial& m) {
        auto key = std::make_pair(entry, m);
        auto it = rowIndex.find(key);
        if (it != rowIndex.end()) return it->second;
        int id = (int)rowIndex.size();
        rowIndex.emplace(key, id);
        return id;
    };

    // Sparse columns of homDiff in the unknowns.
    std::vector<std::vector<std::pair<int, Rational>>> cols(unknowns.size());
    auto addPoly = [&](std::vector<std::pair<int, Rational>>& col, int entry, const GradedPoly& p) {
        for (const auto& [m, c] : p.terms()) col.push_back({rowOf(entry, m), c.coeff(0)});
    };
    for (size_t u = 0; u < unknowns.size(); ++u) {
        const auto& [i, j, m] = unknowns[u];
        GradedPoly mono = GradedPoly::term(alg, m, Scalar::one());
        // d_A(q_ij) lands in entry (i, j).
        addPoly(cols[u], i * rT + j, A->applyDiff(mono));
        // (-1)^{|q_ij|} q_ij T_jk lands in entries (i, k).
        int qdeg = M->degreeOf(i) - T->degreeOf(j) - 2;
        for (int k = 0; k < rT; ++k) {
            if (T->entry(j, k).isZero()) continue;
            GradedPoly t = mono * T->entry(j, k);
            if (qdeg & 1) t = -t;
            addPoly(cols[u], i * rT + k, t);
        }
        // -(-1)^{|q|}(-1)^{|q||M_pi|} M_pi q_ij = -M_pi q_ij (|q| = -2 even),
        // landing in entries (p, j).
        for (int p = 0; p < rM; ++p) {
            if (M->entry(p, i).isZero()) continue;
            addPoly(cols[u], p * rT + j, -(M->entry(p, i) * mono));
        }
    }

    // Right-hand side.
    std::vector<std::pair<int, Rational>> rhsEntries;
    for (int i = 0; i < rM; ++i)
        for (int k = 0; k < rT; ++k)
            for (const auto& [m, c] : r.entry(i, k).terms())
                rhsEntries.push_back({rowOf(i * rT + k, m), c.coeff(0)});

    size_t rows = rowIndex.size();
    RatMat mat(rows, RatVec(unknowns.size(), Rational(0)));
    for (size_t u = 0; u < unknowns.size(); ++u)
        for (const auto& [row, val] : cols[u]) mat[row][u] += val;
    RatVec b(rows, Rational(0));
    for (const auto& [row, val] : rhsEntries) b[row] += val;

    return solveLinear(mat, b).has_value();
}

}  // namespace

bool isExact(const ModMap& r) {
    if (r.degree() != -1) throw Error("isExact: expected a degree -1 map");
    if (r.isZero()) return true;
    for (int k = 0; k < 3; ++k) {
        ModMap comp = r.hComponent(k);
        if (comp.isZero()) continue;
        if (!isExactPlain(comp)) return false;
    }
    return true;
}

bool homotopyEqualModExact(const ModMap& g, const ModMap& gPrime) {
    if (!g.sameShape(gPrime)) throw Error("homotopyEqualModExact: shape mismatch");
    return isExact(g - gPrime);
}

Residue strictResidue(const std::string& label, const ModMap& r) {
    Residue out;
    out.label = label;
    out.strictZero = r.isZero();
    out.modExactZero = out.strictZero;
    out.supportCount = r.support();
    out.pass = out.strictZero;
    if (!out.strictZero) out.detail = r.str();
    return out;
}

Residue modExactResidue(const std::string& label, const ModMap& r) {
    Residue out;
    out.label = label;
    out.strictZero = r.isZero();
    out.modExactZero = out.strictZero || isExact(r);
    out.supportCount = r.support();
    out.pass = out.modExactZero;
    if (!out.strictZero) out.detail = r.str();
    return out;
}

}  // namespace dgbraid
