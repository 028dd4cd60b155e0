#include "dgbraid/io.hpp"

#include <cctype>
#include <fstream>

namespace dgbraid {

Json loadJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw Error("JSON parse error in " + path + ": " + e.what());
    }
    return j;
}

CdgaPtr cdgaFromJson(const Json& j) {
    auto alg = std::make_shared<Algebra>();
    for (const auto& g : j.at("generators"))
        alg->add(g.at("name").get<std::string>(), g.at("degree").get<int>());
    AlgebraPtr A = alg;
    std::vector<GradedPoly> diff(alg->size(), GradedPoly(A));
    if (j.contains("differential"))
        for (const auto& [name, expr] : j.at("differential").items())
            diff[alg->lookup(name)] = parsePoly(expr.get<std::string>(), A);
    return std::make_shared<Cdga>(A, std::move(diff));
}

Json cdgaToJson(const Cdga& A) {
    Json j;
    j["generators"] = Json::array();
    for (const auto& g : A.algebra()->gens())
        j["generators"].push_back({{"name", g.name}, {"degree", g.degree}});
    Json d = Json::object();
    for (int i = 0; i < A.algebra()->size(); ++i)
        if (!A.diffOf(i).isZero()) d[A.algebra()->gen(i).name] = A.diffOf(i).str();
    j["differential"] = d;
    return j;
}

ModulePtr moduleFromJson(const Json& j, const CdgaPtr& A) {
    std::vector<DgMod::BasisElem> basis;
    std::map<std::string, int> index;
    for (const auto& b : j.at("basis")) {
        index[b.at("name").get<std::string>()] = (int)basis.size();
        basis.push_back({b.at("name").get<std::string>(), b.at("degree").get<int>()});
    }
    int r = (int)basis.size();
    std::vector<GradedPoly> diff(r * r, GradedPoly(A->algebra()));
    if (j.contains("diff"))
        for (const auto& [row, cols] : j.at("diff").items()) {
            auto it = index.find(row);
            if (it == index.end()) throw Error("module spec: unknown basis element " + row);
            for (const auto& [col, expr] : cols.items()) {
                auto jt = index.find(col);
                if (jt == index.end()) throw Error("module spec: unknown basis element " + col);
                diff[it->second * r + jt->second] = parsePoly(expr.get<std::string>(), A->algebra());
            }
        }
    return std::make_shared<DgMod>(A, std::move(basis), std::move(diff));
}

ModMap mapFromJson(const Json& j, const ModulePtr& src, const ModulePtr& tgt) {
    int degree = j.value("degree", 0);
    ModMap f(src, tgt, degree);
    auto find = [](const ModulePtr& m, const std::string& name) {
        for (int i = 0; i < m->rank(); ++i)
            if (m->basisElem(i).name == name) return i;
        throw Error("map spec: unknown basis element " + name);
    };
    if (j.contains("entries"))
        for (const auto& [row, cols] : j.at("entries").items()) {
            int i = find(src, row);
            for (const auto& [col, expr] : cols.items())
                f.entry(i, find(tgt, col)) = parsePoly(expr.get<std::string>(), src->algebra());
        }
    f.validate();
    return f;
}

PoissonCandidate poissonFromJson(const Json& j, const PolAlgebraPtr& P) {
    if (j.value("shift", 2) != P->shift())
        throw Error("poisson candidate: shift does not match the plan's shift");
    PoissonCandidate c;
    c.pol = P;
    for (const auto& [w, expr] : j.at("components").items())
        c.components[std::stoi(w)] = parsePoly(expr.get<std::string>(), P->ext());
    return c;
}

PoissonCandidate poissonFromJson(const Json& j, const CdgaPtr& A) {
    return poissonFromJson(j, std::make_shared<PolAlgebra>(A, j.value("shift", 2)));
}

Json poissonToJson(const PoissonCandidate& c) {
    Json j;
    j["shift"] = c.pol->shift();
    Json comps = Json::object();
    for (const auto& [w, p] : c.components) comps[std::to_string(w)] = p.str();
    j["components"] = comps;
    return j;
}

namespace {

Rational ratFromString(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

int basisIndex(const LieNSpec& spec, const std::string& token) {
    for (size_t i = 0; i < spec.basis.size(); ++i)
        if (spec.basis[i] == token) return (int)i;
    // shorthand: a bare suffix of an x-prefixed basis name
    for (size_t i = 0; i < spec.basis.size(); ++i)
        if (spec.basis[i] == "x" + token) return (int)i;
    throw Error("lie spec: unknown basis element '" + token + "'");
}

std::vector<std::string> splitKey(const std::string& key) {
    // "(+,-,3)" or "+,-" -> tokens
    std::string s = key;
    if (!s.empty() && s.front() == '(') s = s.substr(1, s.size() - 2);
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace((unsigned char)ch))
            cur += ch;
    }
    out.push_back(cur);
    return out;
}

}  // namespace

LieNSpec lieFromJson(const Json& j) {
    LieNSpec spec;
    spec.N = j.value("N", 1);
    for (const auto& b : j.at("basis")) spec.basis.push_back(b.get<std::string>());
    int d = spec.dim();
    spec.f.assign(d, std::vector<RatVec>(d, RatVec(d, Rational(0))));
    if (j.contains("f"))
        for (const auto& [key, row] : j.at("f").items()) {
            auto toks = splitKey(key);
            if (toks.size() != 2) throw Error("lie spec: f key must name a pair: " + key);
            int a = basisIndex(spec, toks[0]), b = basisIndex(spec, toks[1]);
            for (const auto& [cTok, val] : row.items()) {
                int c = basisIndex(spec, cTok);
                Rational v = ratFromString(val.get<std::string>());
                spec.f[a][b][c] = v;
                spec.f[b][a][c] = -v;  // antisymmetry
            }
        }
    if (spec.N == 2) {
        spec.kappa.assign(d, std::vector<RatVec>(d, RatVec(d, Rational(0))));
        if (j.contains("kappa"))
            for (const auto& [key, val] : j.at("kappa").items()) {
                auto toks = splitKey(key);
                if (toks.size() != 3) throw Error("lie spec: kappa key must name a triple: " + key);
                int a = basisIndex(spec, toks[0]), b = basisIndex(spec, toks[1]),
                    c = basisIndex(spec, toks[2]);
                Rational v = ratFromString(val.get<std::string>());
                int idx[3] = {a, b, c};
                int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
                for (int p = 0; p < 6; ++p) {
                    Rational s = p < 3 ? v : -v;
                    spec.kappa[idx[perm[p][0]]][idx[perm[p][1]]][idx[perm[p][2]]] = s;
                }
            }
    }
    if (j.contains("reps"))
        for (const auto& [name, rj] : j.at("reps").items()) {
            LieNSpec::Rep rep;
            if (rj.is_object() && rj.value("adjoint", false)) {
                rep = spec.adjoint();
            } else if (rj.is_object() && rj.contains("trivial")) {
                rep.dim = rj.at("trivial").get<int>();
                rep.matrices.assign(d, RatMat(rep.dim, RatVec(rep.dim, Rational(0))));
            } else {
                const Json& mats = rj.at("matrices");
                for (int a = 0; a < d; ++a) {
                    const Json& m = mats.at(spec.basis[a]);
                    RatMat mat;
                    for (const auto& row : m) {
                        RatVec rr;
                        for (const auto& v : row) rr.push_back(ratFromString(v.get<std::string>()));
                        mat.push_back(std::move(rr));
                    }
                    if (rep.dim == 0) rep.dim = (int)mat.size();
                    rep.matrices.push_back(std::move(mat));
                }
            }
            spec.checkRep(rep);
            spec.reps[name] = std::move(rep);
        }
    return spec;
}

}  // namespace dgbraid
