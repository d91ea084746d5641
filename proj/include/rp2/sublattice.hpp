#pragma once

#include "rp2/intmat.hpp"
#include "rp2/lattice.hpp"

namespace rp2 {

/// A finite-index-or-smaller-rank sublattice of a BlowupLattice, given by an
/// explicit list of rationally independent generators.
struct Sublattice {
    BlowupLattice ambient;
    std::vector<LatticeClass> generators;

    Sublattice(BlowupLattice amb, std::vector<LatticeClass> gens);

    int rank() const { return static_cast<int>(generators.size()); }

    /// Generators as columns of an (ambient rank) x (sublattice rank) matrix.
    IntMat generator_matrix() const;
};

struct Mod2Kernel {
    Sublattice sublattice;
    int index; // 2 for a nonzero functional, 1 when w is trivial mod 2
};

/// Kernel of the mod-2 pairing functional lambda -> lambda.w mod 2.
Mod2Kernel kernel_of_mod2_pairing(const BlowupLattice& lat, const Mod2Class& w);

/// {lambda : lambda.c = 0}, an integer kernel computation.
Sublattice orthogonal_complement(const BlowupLattice& lat, const LatticeClass& c);

IntMat gram(const Sublattice& s);

/// |det(Gram)|.
Int discriminant(const Sublattice& s);

/// Index of sub inside full: |det| of the change-of-basis matrix expressing
/// sub's generators integrally in full's generators. Requires equal ranks and
/// integral containment.
Int inclusion_index(const Sublattice& sub, const Sublattice& full);

/// Invariant factors (> 1) of the quotient full/sub.
std::vector<Int> quotient_structure(const Sublattice& sub, const Sublattice& full);

/// True iff k*lambda is an integral combination of sub's generators.
bool multiple_membership(const LatticeClass& lambda, const Int& k, const Sublattice& sub);

/// Convenience: sublattice spanned by the union of two generator lists
/// (used for orthogonal sums such as Lambda' + Z<Sigma>).
Sublattice span_union(const Sublattice& a, const Sublattice& b);

} // namespace rp2
