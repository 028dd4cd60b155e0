#pragma once

#include "dgbraid/derivation.hpp"

namespace dgbraid {

class DgMod;
using ModulePtr = std::shared_ptr<const DgMod>;

/// Finitely generated semi-free A-dg-module: free on named basis elements
/// with the differential stored as d(1 (x) w_i) = sum_j M_i^j (x) w_j,
/// coefficients on the left of the basis vector.
class DgMod {
  public:
    struct BasisElem {
        std::string name;
        int degree;
    };

    DgMod(CdgaPtr A, std::vector<BasisElem> basis, std::vector<GradedPoly> diff);

    const CdgaPtr& cdga() const { return A_; }
    const AlgebraPtr& algebra() const { return A_->algebra(); }
    int rank() const { return (int)basis_.size(); }
    const BasisElem& basisElem(int i) const { return basis_[i]; }
    int degreeOf(int i) const { return basis_[i].degree; }
    const GradedPoly& entry(int i, int j) const { return diff_[i * rank() + j]; }
    int entryDegree(int i, int j) const { return basis_[i].degree + 1 - basis_[j].degree; }

    /// The monoidal unit: A as a rank-1 module over itself.
    static ModulePtr unit(const CdgaPtr& A);

  private:
    CdgaPtr A_;
    std::vector<BasisElem> basis_;
    std::vector<GradedPoly> diff_;  // rank x rank, row-major
};

struct ModuleReport {
    bool pass = true;
    int i = -1, k = -1;  // first failing matrix position
    GradedPoly residue;
};

/// Square-zero check: d_A(M_i^k) + sum_j (-1)^{|M_i^j|} M_i^j M_j^k = 0.
ModuleReport checkModule(const DgMod& M);

/// Degree-homogeneous A-linear map between semi-free modules, stored as
/// h(1 (x) w_i) = sum_j h_i^j (x) w'_j.
class ModMap {
  public:
    ModMap() = default;
    ModMap(ModulePtr src, ModulePtr tgt, int degree);
    ModMap(ModulePtr src, ModulePtr tgt, int degree, std::vector<GradedPoly> mat);

    static ModMap identity(const ModulePtr& M);
    static ModMap zero(const ModulePtr& src, const ModulePtr& tgt, int degree) {
        return ModMap(src, tgt, degree);
    }

    const ModulePtr& src() const { return src_; }
    const ModulePtr& tgt() const { return tgt_; }
    int degree() const { return deg_; }
    const GradedPoly& entry(int i, int j) const { return mat_[i * tgt_->rank() + j]; }
    GradedPoly& entry(int i, int j) { return mat_[i * tgt_->rank() + j]; }
    int entryDegree(int i, int j) const { return src_->degreeOf(i) - tgt_->degreeOf(j) + deg_; }

    bool isZero() const;
    bool sameShape(const ModMap& o) const {
        return src_ == o.src_ && tgt_ == o.tgt_ && deg_ == o.deg_;
    }
    bool operator==(const ModMap& o) const;

    ModMap operator+(const ModMap& o) const;
    ModMap operator-(const ModMap& o) const;
    ModMap operator-() const;
    ModMap scaled(const Scalar& c) const;

    /// Throws unless every nonzero entry is homogeneous of its slot degree.
    void validate() const;

    /// Coefficient of h^k, entrywise.
    ModMap hComponent(int k) const;

    int support() const;
    std::string str() const;

  private:
    ModulePtr src_, tgt_;
    int deg_ = 0;
    std::vector<GradedPoly> mat_;
};

/// d(f) = d_tgt f - (-1)^{|f|} f d_src; raises degree by 1.
ModMap homDiff(const ModMap& f);

/// Composite g after h; Koszul transport of g past h's coefficients.
ModMap compose(const ModMap& g, const ModMap& h);

/// Relative tensor product of modules; basis (i,q) flattened row-major.
ModulePtr tensorModule(const ModulePtr& M, const ModulePtr& N);
ModulePtr tensorAll(const std::vector<ModulePtr>& Ms);

/// Tensor of maps, (h (x) k)(m (x) n) = (-1)^{|k||m|} h(m) (x) k(n).
ModMap tensorMap(const ModMap& h, const ModMap& k);

/// The symmetric braiding component M (x) N -> N (x) M.
ModMap gammaComponent(const ModulePtr& M, const ModulePtr& N);

/// The Koszul permutation isomorphism (x)_l M_l -> (x)_l M_{order[l]};
/// order lists source positions in target order.
ModMap koszulPermutation(const std::vector<ModulePtr>& mods, const std::vector<int>& order);

/// Omega_A[1] as a dg-module: basis s^-1 ddR(gen) of degree |gen|-1 with
/// the shift-negated induced differential.
ModulePtr omegaShifted(const CdgaPtr& A);

/// Omega_A[1] (x)_A M.
ModulePtr omegaShiftTensor(const CdgaPtr& A, const ModulePtr& M);

}  // namespace dgbraid
