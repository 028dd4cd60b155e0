#pragma once

#include "dgbraid/derivation.hpp"

namespace dgbraid {

/// The n-shifted polyvector algebra of a semi-free CDGA: the free
/// graded-commutative algebra on the base generators followed by one
/// shifted-derivation generator per base generator, named s<n+1>d(<gen>)
/// with degree n+1-|gen|. Carries the induced differential.
class PolAlgebra {
  public:
    PolAlgebra(CdgaPtr base, int shift);

    const CdgaPtr& base() const { return base_; }
    const AlgebraPtr& ext() const { return extAlg_; }
    const CdgaPtr& extCdga() const { return extCdga_; }
    int shift() const { return n_; }
    int numBase() const { return base_->algebra()->size(); }

    int sgenId(int baseGen) const { return numBase() + baseGen; }
    bool isSgen(int extGen) const { return extGen >= numBase(); }

    /// Lifts a base-algebra element into the extended algebra.
    GradedPoly lift(const GradedPoly& p) const;
    /// Projects an s-generator-free element back to the base algebra.
    GradedPoly lower(const GradedPoly& p) const;

    /// Weight = total exponent in s-generators. Throws on mixed weight.
    std::optional<int> weightOf(const GradedPoly& p) const;
    int weightOf(const Monomial& m) const;
    std::map<int, GradedPoly> weightParts(const GradedPoly& p) const;

    /// The differential on polyvectors (d_A on base generators, the shifted
    /// hom-complex differential on s-generators, extended by Leibniz).
    GradedPoly diff(const GradedPoly& p) const { return extCdga_->applyDiff(p); }

    /// Schouten-Nijenhuis bracket, weight drops by 1.
    GradedPoly schouten(const GradedPoly& p, const GradedPoly& q) const;

    /// Extended duality pairing of a pure-weight-2 polyvector against two
    /// shifted Kaehler forms (both over the base algebra).
    GradedPoly pairWeight2(const GradedPoly& pi2, const Kaehler& omega,
                           const Kaehler& omegaPrime) const;

    /// All extended-algebra monomials of the given degree and weight.
    /// Requires all base generators of positive degree.
    std::vector<Monomial> basis(int degree, int weight) const;

  private:
    GradedPoly bracketMonomials(const Monomial& mp, const Monomial& mq) const;
    GradedPoly bracketGenerators(int gp, int gq) const;

    CdgaPtr base_;
    int n_;
    AlgebraPtr extAlg_;
    CdgaPtr extCdga_;
};

using PolAlgebraPtr = std::shared_ptr<const PolAlgebra>;

/// A Poisson structure candidate: finitely many pure-weight components of
/// degree n+2, weight >= 2.
struct PoissonCandidate {
    PolAlgebraPtr pol;
    std::map<int, GradedPoly> components;  // weight -> pure-weight polyvector

    /// The weight-2 component (zero polyvector if absent).
    GradedPoly weight2() const;
};

struct McWeightResult {
    int weight;
    bool pass;
    GradedPoly residue;
};

struct McReport {
    bool pass = true;
    bool structural = true;  // degree/weight preconditions held
    std::string structuralError;
    std::vector<McWeightResult> weights;
};

/// Evaluates d(pi^(m)) + 1/2 sum_{k+l-1=m} {pi^(k),pi^(l)} for every weight m.
McReport mcCheck(const PoissonCandidate& pi);

}  // namespace dgbraid
