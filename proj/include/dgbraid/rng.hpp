#pragma once

#include <cstdint>

#include "dgbraid/braiding.hpp"

namespace dgbraid {

/// Deterministic splitmix64 stream; the seed fully determines every
/// randomized sample, independent of platform and standard library.
class Rng {
  public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, n).
    uint64_t below(uint64_t n) { return next() % n; }
    /// Small rational with numerator in [-3,3] and denominator in {1,2}.
    Rational smallRational() {
        long num = (long)below(7) - 3;
        long den = 1 + (long)below(2);
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    /// Small nonzero rational.
    Rational smallNonzero() {
        Rational r = smallRational();
        while (r == 0) r = smallRational();
        return r;
    }

  private:
    uint64_t state_;
};

/// Random element spanned by the given monomials.
GradedPoly randomCombination(Rng& rng, const AlgebraPtr& alg, const std::vector<Monomial>& basis);

/// Random homogeneous polyvector of the given degree and weight (possibly 0).
GradedPoly randomPolyvector(Rng& rng, const PolAlgebra& P, int degree, int weight);

/// Conjugates the differential of M by a random unipotent degree-0
/// automorphism 1 + E (entries of positive polynomial degree); the result is
/// automatically square-zero and generally non-strict.
ModulePtr gaugeTransform(Rng& rng, const ModulePtr& M);

/// Random degree-d map between modules (entries homogeneous of slot degree,
/// drawn from the monomial basis); not closed in general.
ModMap randomMap(Rng& rng, const ModulePtr& src, const ModulePtr& tgt, int degree);

/// Random closed degree-0 map: a rational multiple of the identity
/// (when src == tgt) plus homDiff of a random degree -1 map.
ModMap randomClosedMap(Rng& rng, const ModulePtr& src, const ModulePtr& tgt);

}  // namespace dgbraid
