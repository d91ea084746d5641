#pragma once

#include "rp2/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rp2 {

/// The rank-(n+1) lattice Z<H, E_1..E_n> with diagonal form (+1, -1, ..., -1).
/// The four-point variant uses the labels H, ~E0..~E3.
struct BlowupLattice {
    int n_exceptional = 0;
    std::vector<std::string> basis_labels;

    /// Z<H, E_1..E_n>.
    static BlowupLattice standard(int n);
    /// Z<H, ~E0, ~E1, ~E2, ~E3> (the four-fold blow-up).
    static BlowupLattice tilde4();

    int rank() const { return n_exceptional + 1; }
    bool operator==(const BlowupLattice&) const = default;
};

/// An integral homology class: exact integer coefficients in the basis of
/// its owning lattice.
struct LatticeClass {
    BlowupLattice lattice;
    std::vector<Int> coefficients;

    LatticeClass() = default;
    LatticeClass(BlowupLattice lat, std::vector<Int> coeffs);

    bool is_zero() const;
    std::string to_string() const;

    LatticeClass operator+(const LatticeClass& other) const;
    LatticeClass operator-(const LatticeClass& other) const;
    LatticeClass operator-() const;
    LatticeClass operator*(const Int& scalar) const;
    bool operator==(const LatticeClass&) const = default;
};

/// Basis class helpers. index 0 is H; index i >= 1 is the i-th exceptional
/// generator (E_i, or ~E_{i-1} in the tilde basis).
LatticeClass basis_class(const BlowupLattice& lat, int index);
LatticeClass h_class(const BlowupLattice& lat);
LatticeClass c1_class(const BlowupLattice& lat);

/// A mod-2 homology class carried by a chosen integral lift.
struct Mod2Class {
    LatticeClass lift;

    std::vector<int> reduction() const;
    bool is_zero_mod2() const;
};

/// The intersection pairing a0*b0 - sum_{i>=1} a_i*b_i.
Int pairing(const LatticeClass& a, const LatticeClass& b);

/// pairing(c1, a) = 3*a0 + sum_{i>=1} a_i.
Int c1_degree(const LatticeClass& a);

/// True iff the gcd of the coefficients is 1. Zero class is a domain error.
bool is_primitive(const LatticeClass& a);

/// (lift . lift) mod 4, normalized to {0,1,2,3}. Independent of lift choice.
int pontrjagin_square(const Mod2Class& m);

/// Query for enumerate_classes. Exactly one of h_degree or H-orthogonality
/// (H in orthogonal_to, or h_degree = 0) must bound the H coefficient.
struct EnumQuery {
    Int square;
    Int c1_deg;
    std::vector<LatticeClass> orthogonal_to;
    std::optional<Int> h_degree; // nullopt: derive 0 from orthogonality to H
    bool primitive_only = false;
};

/// All classes with the prescribed square, c1-degree, orthogonality and
/// H-degree constraints, sorted lexicographically by coefficient vector.
/// Queries that leave the H coefficient unbounded are rejected.
std::vector<LatticeClass> enumerate_classes(const BlowupLattice& lat,
                                            const EnumQuery& query);

} // namespace rp2
