#pragma once

#include "dgbraid/dgmod.hpp"

namespace dgbraid {

/// All normal-form monomials of the given degree; requires every generator of
/// positive degree so the list is finite (degree 0 yields only the unit).
std::vector<Monomial> monomialsOfDegree(const AlgebraPtr& alg, int degree);

/// Whether the degree-(-1) difference g - g' is exact, i.e. equals homDiff(q)
/// for some degree-(-2) map q, decided by an exact linear solve over the
/// finite coefficient space of admissible q entries. This is equality in the
/// [-1,0]-truncated hom-complex.
bool homotopyEqualModExact(const ModMap& g, const ModMap& gPrime);

/// Same decision for a single map against zero. For maps with h-series
/// coefficients each h-order is decided independently.
bool isExact(const ModMap& r);

struct Residue {
    std::string label;
    bool strictZero = false;
    bool modExactZero = false;  // meaningful for degree -1 residues
    int supportCount = 0;
    std::string detail;  // residue printed as an exact polynomial map
    bool pass = false;
};

/// Residue of a degree-0 identity: pass iff strictly zero.
Residue strictResidue(const std::string& label, const ModMap& r);

/// Residue of a degree-(-1) identity: pass iff exact; strict zero is recorded
/// as bonus information.
Residue modExactResidue(const std::string& label, const ModMap& r);

}  // namespace dgbraid
