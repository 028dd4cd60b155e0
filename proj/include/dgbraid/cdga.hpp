#pragma once

#include <memory>
#include <string>
#include <vector>

#include "dgbraid/algebra.hpp"

namespace dgbraid {

struct SquareZeroReport {
    bool pass = true;
    int failingGenerator = -1;   // id of first failing generator
    GradedPoly residue;          // d(d(g)) for that generator
    std::string str(const Algebra& a) const;
};

/// Finitely generated semi-free CDGA: a free graded-commutative algebra with
/// a degree-1 differential given on generators and extended by the Leibniz rule.
class Cdga {
  public:
    Cdga(AlgebraPtr alg, std::vector<GradedPoly> diff);

    const AlgebraPtr& algebra() const { return alg_; }
    const GradedPoly& diffOf(int gen) const { return diff_[gen]; }
    const std::vector<GradedPoly>& diff() const { return diff_; }

    /// d extended as a degree-1 derivation: d(xy) = d(x)y + (-1)^{|x|} x d(y).
    GradedPoly applyDiff(const GradedPoly& p) const;

    /// d(d(g)) for every generator; pass iff all vanish identically.
    SquareZeroReport checkSquareZero() const;

    GradedPoly zero() const { return GradedPoly::zero(alg_); }
    GradedPoly one() const { return GradedPoly::one(alg_); }
    GradedPoly gen(int id) const { return GradedPoly::gen(alg_, id); }
    GradedPoly gen(const std::string& name) const { return gen(alg_->lookup(name)); }

  private:
    AlgebraPtr alg_;
    std::vector<GradedPoly> diff_;
};

using CdgaPtr = std::shared_ptr<const Cdga>;

/// Applies a generator-valued degree-`degree` map as a (left) derivation:
/// D(xy) = D(x)y + (-1)^{degree*|x|} x D(y). Shared by d_A, T_A elements and
/// the polyvector differential.
GradedPoly leibnizApply(const GradedPoly& p, int degree,
                        const std::vector<GradedPoly>& genValues);

}  // namespace dgbraid
