#pragma once

#include "dgbraid/dgmod.hpp"
#include "dgbraid/linsolve.hpp"
#include "dgbraid/polyvec.hpp"

namespace dgbraid {

/// Structure constants of an ordinary Lie algebra (N=1) or a string-shaped
/// Lie 2-algebra (N=2: a Lie algebra plus a 3-cocycle kappa).
struct LieNSpec {
    int N = 1;
    std::vector<std::string> basis;
    // f[a][b][c]: [x_a, x_b] = f[a][b][c] x_c, antisymmetric in (a,b).
    std::vector<std::vector<RatVec>> f;
    // kappa[a][b][c]: totally antisymmetric 3-cocycle (N=2 only).
    std::vector<std::vector<RatVec>> kappa;
    // Representations by name: matrices[a] is the array of x_a, acting as
    // w_i -> sum_j m[i][j] w_j; the array commutator must realize f.
    struct Rep {
        int dim = 0;
        std::vector<RatMat> matrices;  // one per basis element
    };
    std::map<std::string, Rep> reps;

    int dim() const { return (int)basis.size(); }
    Rational fAt(int a, int b, int c) const { return f[a][b][c]; }
    Rational kappaAt(int a, int b, int c) const { return kappa.empty() ? Rational(0) : kappa[a][b][c]; }

    /// The adjoint representation derived from f.
    Rep adjoint() const;
    /// Validates [m_a, m_b] = f_ab^c m_c as arrays.
    void checkRep(const Rep& rep) const;
};

/// Chevalley-Eilenberg CDGA: degree-1 generators dual to the Lie basis
/// (named th<suffix>) and, for N=2, one degree-2 generator nu.
/// Throws on square-zero failure unless validate is false.
CdgaPtr buildCe(const LieNSpec& spec, bool validate = true);

/// Generator name for a Lie basis element: x<suffix> -> th<suffix>,
/// otherwise th<name>.
std::string thetaName(const std::string& basisName);

/// Strict-representation module: basis in degree 0, differential
/// M_i^j = -sum_a rep[a][i][j] theta^a (the unique uniform sign for which
/// square-zero is the representation property).
ModulePtr strictRepModule(const LieNSpec& spec, const LieNSpec::Rep& rep, const CdgaPtr& ce);

/// Exact parametrizations of the 2-shifted Poisson constraint systems.
/// Unknown coordinates: symmetric pi^{ab} on pairs a<=b, then (string case)
/// tilde^a_b flattened row-major.
struct PoissonSolution {
    int dim = 0;
    bool stringCase = false;
    int nPi = 0, nTilde = 0;

    std::vector<RatVec> linearBasis;  // nullspace of the linear systems
    int piRank = 0;                   // rank of the pi-block of linearBasis

    /// Component on which the residual quadratic relations vanish identically
    /// (equals linearBasis when there are no quadratics).
    std::vector<RatVec> genericComponent;
    /// Slice pi = 0 of the linear family.
    std::vector<RatVec> piZeroComponent;

    std::vector<std::string> quadRelations;  // residual relations on parameters
    bool nonzeroPiFeasible = false;
    bool nonzeroPiDecided = true;
    RatVec nonzeroPiWitness;

    int piIndex(int a, int b) const;  // a<=b after sorting
    int tildeIndex(int a, int b) const { return nPi + a * dim + b; }
    Rational piOf(const RatVec& v, int a, int b) const;
    Rational tildeOf(const RatVec& v, int a, int b) const {
        return stringCase ? v[tildeIndex(a, b)] : Rational(0);
    }

    std::string describe(const LieNSpec& spec) const;
};

/// g-invariance system for an ordinary Lie algebra (N=1).
PoissonSolution solveLieInvariance(const LieNSpec& spec);

/// Joint linear systems plus the quadratic annihilation condition for the
/// string case (N=2).
PoissonSolution solveStringPoisson(const LieNSpec& spec);

PoissonSolution solvePoisson(const LieNSpec& spec);

/// Turns a solution vector into a Poisson candidate over Pol(CE, 2).
PoissonCandidate candidateFromVector(const PoissonSolution& sol, const PolAlgebraPtr& P,
                                     const RatVec& v);

/// The candidate expression as parseable text.
std::string candidateExpr(const PoissonSolution& sol, const PolAlgebraPtr& P, const RatVec& v);

}  // namespace dgbraid
