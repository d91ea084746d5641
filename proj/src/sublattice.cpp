#include "rp2/sublattice.hpp"

namespace rp2 {

Sublattice::Sublattice(BlowupLattice amb, std::vector<LatticeClass> gens)
    : ambient(std::move(amb)), generators(std::move(gens)) {
    for (const auto& g : generators)
        if (g.lattice != ambient)
            throw DomainError("sublattice generator from a different lattice");
    if (integer_rank(generator_matrix()) != rank())
        throw DomainError("sublattice generators are linearly dependent");
}

IntMat Sublattice::generator_matrix() const {
    const std::size_t rows = static_cast<std::size_t>(ambient.rank());
    IntMat m(rows, std::vector<Int>(generators.size(), 0));
    for (std::size_t j = 0; j < generators.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i)
            m[i][j] = generators[j].coefficients[i];
    return m;
}

Mod2Kernel kernel_of_mod2_pairing(const BlowupLattice& lat, const Mod2Class& w) {
    if (w.lift.lattice != lat) throw DomainError("mod-2 class from a different lattice");

    // The functional is lambda -> pairing(lambda, lift) mod 2; on the basis
    // vector e_i its value is the i-th bit of the lift.
    std::vector<int> bits = w.reduction();

    std::vector<LatticeClass> gens;
    int pivot = -1;
    for (int i = lat.rank() - 1; i >= 0; --i)
        if (bits[static_cast<std::size_t>(i)]) { pivot = i; break; }

    if (pivot < 0) {
        for (int i = 0; i < lat.rank(); ++i) gens.push_back(basis_class(lat, i));
        return Mod2Kernel{Sublattice(lat, std::move(gens)), 1};
    }

    for (int i = 0; i < lat.rank(); ++i) {
        if (i == pivot) continue;
        if (bits[static_cast<std::size_t>(i)])
            gens.push_back(basis_class(lat, i) - basis_class(lat, pivot));
        else
            gens.push_back(basis_class(lat, i));
    }
    gens.push_back(basis_class(lat, pivot) * Int(2));
    return Mod2Kernel{Sublattice(lat, std::move(gens)), 2};
}

Sublattice orthogonal_complement(const BlowupLattice& lat, const LatticeClass& c) {
    if (c.lattice != lat) throw DomainError("class from a different lattice");
    IntMat row(1, std::vector<Int>(static_cast<std::size_t>(lat.rank())));
    for (int i = 0; i < lat.rank(); ++i)
        row[0][static_cast<std::size_t>(i)] = pairing(basis_class(lat, i), c);

    std::vector<LatticeClass> gens;
    for (auto& col : integer_kernel(row))
        gens.emplace_back(lat, std::move(col));
    return Sublattice(lat, std::move(gens));
}

IntMat gram(const Sublattice& s) {
    const std::size_t r = static_cast<std::size_t>(s.rank());
    IntMat g(r, std::vector<Int>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            g[i][j] = pairing(s.generators[i], s.generators[j]);
    return g;
}

Int discriminant(const Sublattice& s) {
    Int d = determinant(gram(s));
    if (d == 0) throw DomainError("degenerate Gram matrix");
    return abs(d);
}

namespace {

// sub's generators expressed integrally in full's generators, as columns.
IntMat change_of_basis(const Sublattice& sub, const Sublattice& full) {
    if (sub.ambient != full.ambient) throw DomainError("ambient lattices differ");
    if (sub.rank() != full.rank()) throw DomainError("rank mismatch between sublattices");

    const IntMat full_gens = full.generator_matrix();
    const std::size_t r = static_cast<std::size_t>(sub.rank());
    IntMat m(r, std::vector<Int>(r));
    for (std::size_t j = 0; j < r; ++j) {
        auto x = solve_integer(full_gens, sub.generators[j].coefficients);
        if (!x)
            throw DomainError("sublattice is not contained in the claimed overlattice");
        for (std::size_t i = 0; i < r; ++i) m[i][j] = (*x)[i];
    }
    return m;
}

} // namespace

Int inclusion_index(const Sublattice& sub, const Sublattice& full) {
    return abs(determinant(change_of_basis(sub, full)));
}

std::vector<Int> quotient_structure(const Sublattice& sub, const Sublattice& full) {
    SmithForm snf = smith_normal_form(change_of_basis(sub, full));
    std::vector<Int> factors;
    for (const Int& d : snf.diagonal)
        if (d > 1) factors.push_back(d);
    return factors;
}

bool multiple_membership(const LatticeClass& lambda, const Int& k, const Sublattice& sub) {
    if (lambda.lattice != sub.ambient) throw DomainError("class from a different lattice");
    std::vector<Int> target(lambda.coefficients);
    for (auto& c : target) c *= k;
    return solve_integer(sub.generator_matrix(), target).has_value();
}

Sublattice span_union(const Sublattice& a, const Sublattice& b) {
    if (a.ambient != b.ambient) throw DomainError("ambient lattices differ");
    std::vector<LatticeClass> gens = a.generators;
    gens.insert(gens.end(), b.generators.begin(), b.generators.end());
    return Sublattice(a.ambient, std::move(gens));
}

} // namespace rp2
