#include "dgbraid/dgmod.hpp"

#include <mutex>

namespace dgbraid {

namespace {

// Tensor products and Omega-modules are memoized so that repeated
// constructions over the same factors are pointer-identical; map shape
// checks rely on this. Keys hold the factors alive, so pointer identity
// cannot alias.
std::mutex memoMutex;
std::map<std::pair<ModulePtr, ModulePtr>, ModulePtr>& tensorMemo() {
    static std::map<std::pair<ModulePtr, ModulePtr>, ModulePtr> m;
    return m;
}
std::map<CdgaPtr, ModulePtr>& omegaMemo() {
    static std::map<CdgaPtr, ModulePtr> m;
    return m;
}

}  // namespace

DgMod::DgMod(CdgaPtr A, std::vector<BasisElem> basis, std::vector<GradedPoly> diff)
    : A_(std::move(A)), basis_(std::move(basis)), diff_(std::move(diff)) {
    int r = (int)basis_.size();
    if ((int)diff_.size() != r * r) throw Error("DgMod: differential matrix shape mismatch");
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            const GradedPoly& e = diff_[i * r + j];
            if (e.isZero()) continue;
            auto d = e.degree();
            if (!d || *d != entryDegree(i, j))
                throw Error("DgMod: entry (" + basis_[i].name + "," + basis_[j].name +
                            ") has wrong degree");
        }
}

ModulePtr DgMod::unit(const CdgaPtr& A) {
    return std::make_shared<DgMod>(A, std::vector<DgMod::BasisElem>{{"1", 0}},
                                   std::vector<GradedPoly>{GradedPoly(A->algebra())});
}

ModuleReport checkModule(const DgMod& M) {
    ModuleReport rep;
    const Cdga& A = *M.cdga();
    int r = M.rank();
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) {
            GradedPoly res = A.applyDiff(M.entry(i, k));
            for (int j = 0; j < r; ++j) {
                if (M.entry(i, j).isZero() || M.entry(j, k).isZero()) continue;
                GradedPoly prod = M.entry(i, j) * M.entry(j, k);
                if (M.entryDegree(i, j) & 1) prod = -prod;
                res += prod;
            }
            if (!res.isZero()) {
                rep.pass = false;
                rep.i = i;
                rep.k = k;
                rep.residue = res;
                return rep;
            }
        }
    return rep;
}

ModMap::ModMap(ModulePtr src, ModulePtr tgt, int degree)
    : src_(std::move(src)), tgt_(std::move(tgt)), deg_(degree) {
    mat_.assign(src_->rank() * tgt_->rank(), GradedPoly(src_->algebra()));
}

ModMap::ModMap(ModulePtr src, ModulePtr tgt, int degree, std::vector<GradedPoly> mat)
    : src_(std::move(src)), tgt_(std::move(tgt)), deg_(degree), mat_(std::move(mat)) {
    if ((int)mat_.size() != src_->rank() * tgt_->rank()) throw Error("ModMap: matrix shape mismatch");
}

ModMap ModMap::identity(const ModulePtr& M) {
    ModMap f(M, M, 0);
    for (int i = 0; i < M->rank(); ++i) f.entry(i, i) = GradedPoly::one(M->algebra());
    return f;
}

bool ModMap::isZero() const {
    for (const auto& e : mat_)
        if (!e.isZero()) return false;
    return true;
}

bool ModMap::operator==(const ModMap& o) const {
    if (!sameShape(o)) return false;
    return mat_ == o.mat_;
}

ModMap ModMap::operator+(const ModMap& o) const {
    if (!sameShape(o)) throw Error("ModMap::+: shape mismatch");
    ModMap r(src_, tgt_, deg_);
    for (size_t k = 0; k < mat_.size(); ++k) r.mat_[k] = mat_[k] + o.mat_[k];
    return r;
}

ModMap ModMap::operator-(const ModMap& o) const { return *this + (-o); }

ModMap ModMap::operator-() const {
    ModMap r(src_, tgt_, deg_);
    for (size_t k = 0; k < mat_.size(); ++k) r.mat_[k] = -mat_[k];
    return r;
}

ModMap ModMap::scaled(const Scalar& c) const {
    ModMap r(src_, tgt_, deg_);
    for (size_t k = 0; k < mat_.size(); ++k) r.mat_[k] = mat_[k].scaled(c);
    return r;
}

void ModMap::validate() const {
    for (int i = 0; i < src_->rank(); ++i)
        for (int j = 0; j < tgt_->rank(); ++j) {
            const GradedPoly& e = entry(i, j);
            if (e.isZero()) continue;
            auto d = e.degree();
            if (!d || *d != entryDegree(i, j)) throw Error("ModMap: entry of wrong degree");
        }
}

ModMap ModMap::hComponent(int k) const {
    ModMap r(src_, tgt_, deg_);
    for (size_t t = 0; t < mat_.size(); ++t) r.mat_[t] = mat_[t].hComponent(k);
    return r;
}

int ModMap::support() const {
    int n = 0;
    for (const auto& e : mat_) n += e.support();
    return n;
}

std::string ModMap::str() const {
    std::string out;
    for (int i = 0; i < src_->rank(); ++i)
        for (int j = 0; j < tgt_->rank(); ++j) {
            if (entry(i, j).isZero()) continue;
            if (!out.empty()) out += "; ";
            out += src_->basisElem(i).name + "->" + tgt_->basisElem(j).name + ": " +
                   entry(i, j).str();
        }
    return out.empty() ? "0" : out;
}

ModMap homDiff(const ModMap& f) {
    const Cdga& A = *f.src()->cdga();
    const DgMod& M = *f.src();
    const DgMod& N = *f.tgt();
    ModMap r(f.src(), f.tgt(), f.degree() + 1);
    for (int i = 0; i < M.rank(); ++i)
        for (int k = 0; k < N.rank(); ++k) {
            GradedPoly e = A.applyDiff(f.entry(i, k));
            for (int j = 0; j < N.rank(); ++j) {
                if (f.entry(i, j).isZero() || N.entry(j, k).isZero()) continue;
                GradedPoly t = f.entry(i, j) * N.entry(j, k);
                if (f.entryDegree(i, j) & 1) t = -t;
                e += t;
            }
            for (int j = 0; j < M.rank(); ++j) {
                if (M.entry(i, j).isZero() || f.entry(j, k).isZero()) continue;
                GradedPoly t = M.entry(i, j) * f.entry(j, k);
                // -(-1)^{|f|} (-1)^{|f||M_i^j|} M_i^j f_j^k
                int sgn = (f.degree() & 1) ? -1 : 1;
                if ((f.degree() & 1) && (M.entryDegree(i, j) & 1)) sgn = -sgn;
                if (sgn > 0) t = -t;
                e += t;
            }
            r.entry(i, k) = std::move(e);
        }
    return r;
}

ModMap compose(const ModMap& g, const ModMap& h) {
    if (h.tgt() != g.src()) throw Error("compose: shapes not composable");
    const DgMod& M = *h.src();
    const DgMod& P = *g.tgt();
    ModMap r(h.src(), g.tgt(), g.degree() + h.degree());
    for (int i = 0; i < M.rank(); ++i)
        for (int k = 0; k < P.rank(); ++k) {
            GradedPoly e(M.algebra());
            for (int j = 0; j < h.tgt()->rank(); ++j) {
                if (h.entry(i, j).isZero() || g.entry(j, k).isZero()) continue;
                GradedPoly t = h.entry(i, j) * g.entry(j, k);
                if ((g.degree() & 1) && (h.entryDegree(i, j) & 1)) t = -t;
                e += t;
            }
            r.entry(i, k) = std::move(e);
        }
    return r;
}

ModulePtr tensorModule(const ModulePtr& M, const ModulePtr& N) {
    if (M->cdga() != N->cdga()) throw Error("tensorModule: modules over different CDGAs");
    {
        std::lock_guard<std::mutex> lock(memoMutex);
        auto it = tensorMemo().find({M, N});
        if (it != tensorMemo().end()) return it->second;
    }
    int rM = M->rank(), rN = N->rank();
    std::vector<DgMod::BasisElem> basis;
    basis.reserve(rM * rN);
    for (int i = 0; i < rM; ++i)
        for (int q = 0; q < rN; ++q)
            basis.push_back({M->basisElem(i).name + "*" + N->basisElem(q).name,
                             M->degreeOf(i) + N->degreeOf(q)});
    int r = rM * rN;
    std::vector<GradedPoly> diff(r * r, GradedPoly(M->algebra()));
    for (int i = 0; i < rM; ++i)
        for (int q = 0; q < rN; ++q) {
            int row = i * rN + q;
            for (int j = 0; j < rM; ++j)
                if (!M->entry(i, j).isZero()) diff[row * r + j * rN + q] += M->entry(i, j);
            for (int s = 0; s < rN; ++s) {
                if (N->entry(q, s).isZero()) continue;
                GradedPoly t = N->entry(q, s);
                // (-1)^{|w_i| (1 + |N_q^s|)}
                if ((M->degreeOf(i) & 1) && ((1 + N->entryDegree(q, s)) & 1)) t = -t;
                diff[row * r + i * rN + s] += t;
            }
        }
    auto T = std::make_shared<DgMod>(M->cdga(), std::move(basis), std::move(diff));
    std::lock_guard<std::mutex> lock(memoMutex);
    auto [it, inserted] = tensorMemo().emplace(std::make_pair(M, N), T);
    return it->second;
}

ModulePtr tensorAll(const std::vector<ModulePtr>& Ms) {
    if (Ms.empty()) throw Error("tensorAll: empty factor list");
    ModulePtr T = Ms[0];
    for (size_t k = 1; k < Ms.size(); ++k) T = tensorModule(T, Ms[k]);
    return T;
}

ModMap tensorMap(const ModMap& h, const ModMap& k) {
    ModulePtr src = tensorModule(h.src(), k.src());
    ModulePtr tgt = tensorModule(h.tgt(), k.tgt());
    ModMap r(src, tgt, h.degree() + k.degree());
    int rNt = k.tgt()->rank();
    for (int i = 0; i < h.src()->rank(); ++i)
        for (int q = 0; q < k.src()->rank(); ++q)
            for (int j = 0; j < h.tgt()->rank(); ++j)
                for (int s = 0; s < rNt; ++s) {
                    if (h.entry(i, j).isZero() || k.entry(q, s).isZero()) continue;
                    GradedPoly t = h.entry(i, j) * k.entry(q, s);
                    int sgn = 1;
                    if ((k.degree() & 1) && (h.src()->degreeOf(i) & 1)) sgn = -sgn;
                    if ((k.entryDegree(q, s) & 1) && (h.tgt()->degreeOf(j) & 1)) sgn = -sgn;
                    if (sgn < 0) t = -t;
                    r.entry(i * k.src()->rank() + q, j * rNt + s) += t;
                }
    return r;
}

ModMap gammaComponent(const ModulePtr& M, const ModulePtr& N) {
    ModulePtr src = tensorModule(M, N);
    ModulePtr tgt = tensorModule(N, M);
    ModMap r(src, tgt, 0);
    for (int i = 0; i < M->rank(); ++i)
        for (int q = 0; q < N->rank(); ++q) {
            Scalar c = Scalar::one();
            if ((M->degreeOf(i) & 1) && (N->degreeOf(q) & 1)) c = -c;
            r.entry(i * N->rank() + q, q * M->rank() + i) =
                GradedPoly::constant(M->algebra(), c);
        }
    return r;
}

ModMap koszulPermutation(const std::vector<ModulePtr>& mods, const std::vector<int>& order) {
    size_t k = mods.size();
    if (order.size() != k) throw Error("koszulPermutation: order size mismatch");
    ModulePtr src = tensorAll(mods);
    std::vector<ModulePtr> permuted;
    permuted.reserve(k);
    for (int p : order) permuted.push_back(mods[p]);
    ModulePtr tgt = tensorAll(permuted);

    // Position of each source factor in the target order.
    std::vector<int> newPos(k);
    for (size_t t = 0; t < k; ++t) newPos[order[t]] = (int)t;

    std::vector<int> ranks(k), idx(k, 0);
    for (size_t t = 0; t < k; ++t) ranks[t] = mods[t]->rank();

    ModMap r(src, tgt, 0);
    while (true) {
        // Koszul sign: product over source pairs p<q that end up reversed.
        int sign = 1;
        for (size_t p = 0; p < k; ++p)
            for (size_t q = p + 1; q < k; ++q)
                if (newPos[p] > newPos[q] && (mods[p]->degreeOf(idx[p]) & 1) &&
                    (mods[q]->degreeOf(idx[q]) & 1))
                    sign = -sign;
        int srcFlat = 0, tgtFlat = 0;
        for (size_t t = 0; t < k; ++t) srcFlat = srcFlat * ranks[t] + idx[t];
        for (size_t t = 0; t < k; ++t) tgtFlat = tgtFlat * ranks[order[t]] + idx[order[t]];
        r.entry(srcFlat, tgtFlat) =
            GradedPoly::constant(src->algebra(), sign < 0 ? Scalar(-1) : Scalar(1));

        int t = (int)k - 1;
        while (t >= 0) {
            if (++idx[t] < ranks[t]) break;
            idx[t] = 0;
            --t;
        }
        if (t < 0) break;
    }
    return r;
}

ModulePtr omegaShifted(const CdgaPtr& A) {
    {
        std::lock_guard<std::mutex> lock(memoMutex);
        auto it = omegaMemo().find(A);
        if (it != omegaMemo().end()) return it->second;
    }
    const Algebra& alg = *A->algebra();
    int n = alg.size();
    std::vector<DgMod::BasisElem> basis;
    basis.reserve(n);
    for (int a = 0; a < n; ++a) basis.push_back({"sdR(" + alg.gen(a).name + ")", alg.degree(a) - 1});
    std::vector<GradedPoly> diff(n * n, GradedPoly(A->algebra()));
    for (int a = 0; a < n; ++a) {
        // d(s^-1 ddR(g_a)) = -s^-1 ddR(d_A g_a); s^-1(q ddR(g_c)) = (-1)^{|q|} q * basis_c.
        Kaehler k = deRham(A->applyDiff(GradedPoly::gen(A->algebra(), a)));
        for (int c = 0; c < n; ++c) {
            for (const auto& [dq, part] : k.coeff[c].homogeneousParts()) {
                GradedPoly piece = part;
                if (!(dq & 1)) piece = -piece;  // -(-1)^{|q|}
                diff[a * n + c] += piece;
            }
        }
    }
    auto Om = std::make_shared<DgMod>(A, std::move(basis), std::move(diff));
    std::lock_guard<std::mutex> lock(memoMutex);
    auto [it, inserted] = omegaMemo().emplace(A, Om);
    return it->second;
}

ModulePtr omegaShiftTensor(const CdgaPtr& A, const ModulePtr& M) {
    return tensorModule(omegaShifted(A), M);
}

}  // namespace dgbraid
