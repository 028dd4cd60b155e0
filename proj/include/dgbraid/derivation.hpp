#pragma once

#include "dgbraid/cdga.hpp"

namespace dgbraid {

/// Homogeneous derivation of a free graded-commutative algebra, specified by
/// its generator values and extended by the graded Leibniz rule
/// D(ab) = D(a)b + (-1)^{|D||a|} a D(b).
struct Derivation {
    AlgebraPtr alg;
    int degree = 0;
    std::vector<GradedPoly> values;  // values[i] = D(gen_i), degree |gen_i| + degree

    static Derivation zero(const AlgebraPtr& a, int degree);
    /// Coordinate derivation dual to a generator: D(gen_j) = delta_ij.
    static Derivation coordinate(const AlgebraPtr& a, int gen);

    GradedPoly apply(const GradedPoly& p) const;
    Derivation scaledLeft(const GradedPoly& c) const;  // (c*D)(a) = c*D(a)
    Derivation operator+(const Derivation& o) const;
    bool isZero() const;
};

/// Graded commutator [D,D'] = D D' - (-1)^{|D||D'|} D' D, as a derivation.
Derivation derivBracket(const Derivation& d1, const Derivation& d2);

/// Element of the Kaehler differentials: sum_i coeff[i] * ddR(gen_i) with
/// coefficients on the left. Unshifted; the [1]-shift is applied at use sites.
struct Kaehler {
    AlgebraPtr alg;
    std::vector<GradedPoly> coeff;

    static Kaehler zero(const AlgebraPtr& a);
    bool isZero() const;
    Kaehler operator+(const Kaehler& o) const;
    Kaehler leftMul(const GradedPoly& p) const;   // p * omega
    Kaehler rightMul(const GradedPoly& p) const;  // omega * p
    std::map<int, Kaehler> homogeneousParts() const;
    std::optional<int> degree() const;  // |p_i| + |gen_i|; nullopt for 0
};

/// Leibniz expansion of ddR: A -> Omega_A (degree 0, no Koszul sign in the
/// product rule).
Kaehler deRham(const GradedPoly& p);

/// omega(D): evaluation of a form on a derivation, with
/// (ddR a)(D) = (-1)^{|D||a|} D(a) and (p*f)(D) = p*f(D).
GradedPoly evalForm(const Kaehler& omega, const Derivation& d);

/// Left pairing <omega, D> := omega(D).
GradedPoly pairLeft(const Kaehler& omega, const Derivation& d);
/// Right pairing <D, omega> := (-1)^{|D||omega|} omega(D).
GradedPoly pairRight(const Derivation& d, const Kaehler& omega);

}  // namespace dgbraid
