#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "rp2/blowup.hpp"
#include "rp2/sublattice.hpp"

using namespace rp2;

namespace {

const BlowupLattice kLat1 = BlowupLattice::standard(1);
const BlowupLattice kLat3 = BlowupLattice::standard(3);
const BlowupLattice kLat4 = BlowupLattice::tilde4();

LatticeClass cls(const BlowupLattice& lat, std::vector<long> coeffs) {
    std::vector<Int> c;
    for (long x : coeffs) c.emplace_back(x);
    return LatticeClass(lat, std::move(c));
}

Sublattice full(const BlowupLattice& lat) {
    std::vector<LatticeClass> gens;
    for (int i = 0; i < lat.rank(); ++i) gens.push_back(basis_class(lat, i));
    return Sublattice(lat, std::move(gens));
}

// mutual containment of generators = equality of sublattices
bool same_sublattice(const Sublattice& a, const Sublattice& b) {
    for (const auto& g : a.generators)
        if (!multiple_membership(g, 1, b)) return false;
    for (const auto& g : b.generators)
        if (!multiple_membership(g, 1, a)) return false;
    return true;
}

const Mod2Class kL{cls(kLat3, {0, 1, 1, 1})};

} // namespace

TEST_CASE("mod-2 kernel of the Lagrangian functional on Lambda_3") {
    Mod2Kernel ker = kernel_of_mod2_pairing(kLat3, kL);
    CHECK(ker.index == 2);

    // the paper's generator set {H, E1-E2, E2-E3, 2E3}
    Sublattice paper(kLat3, {h_class(kLat3),
                             cls(kLat3, {0, 1, -1, 0}),
                             cls(kLat3, {0, 0, 1, -1}),
                             cls(kLat3, {0, 0, 0, 2})});
    CHECK(same_sublattice(ker.sublattice, paper));

    // a different generating family for the same sublattice
    Sublattice alt(kLat3, {h_class(kLat3),
                           cls(kLat3, {0, 1, -1, 0}),
                           cls(kLat3, {0, 1, 0, -1}),
                           cls(kLat3, {0, 2, 0, 0})});
    CHECK(same_sublattice(ker.sublattice, alt));
}

TEST_CASE("mod-2 kernel on the one-point blow-up") {
    Mod2Kernel ker = kernel_of_mod2_pairing(kLat1, Mod2Class{cls(kLat1, {0, 1})});
    CHECK(ker.index == 2);
    Sublattice expected(kLat1, {h_class(kLat1), cls(kLat1, {0, 2})});
    CHECK(same_sublattice(ker.sublattice, expected));

    // oracle: direct scan of the functional's kernel on a box of Z^2
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b) {
            LatticeClass v = cls(kLat1, {a, b});
            bool in_kernel = (pairing(v, cls(kLat1, {0, 1})) % 2) == 0;
            CHECK(multiple_membership(v, 1, ker.sublattice) == in_kernel);
        }
}

TEST_CASE("trivial mod-2 class gives the full lattice") {
    Mod2Kernel ker = kernel_of_mod2_pairing(kLat3, Mod2Class{cls(kLat3, {0, 0, 0, 0})});
    CHECK(ker.index == 1);
    CHECK(same_sublattice(ker.sublattice, full(kLat3)));
}

TEST_CASE("gram matrices") {
    Sublattice sigma_span(kLat4, {sigma_class(kLat4)});
    CHECK(gram(sigma_span) == IntMat{{Int(-4)}});

    Sublattice h2e(kLat1, {h_class(kLat1), cls(kLat1, {0, 2})});
    CHECK(gram(h2e) == IntMat{{Int(1), Int(0)}, {Int(0), Int(-4)}});

    Sublattice roots(kLat3, {cls(kLat3, {0, 1, -1, 0}), cls(kLat3, {0, 0, 1, -1})});
    CHECK(gram(roots) == IntMat{{Int(-2), Int(1)}, {Int(1), Int(-2)}});
}

TEST_CASE("discriminants of the paper's lattices") {
    Mod2Kernel ker = kernel_of_mod2_pairing(kLat3, kL);
    CHECK(discriminant(ker.sublattice) == 4);

    Sublattice sigma_span(kLat4, {sigma_class(kLat4)});
    CHECK(discriminant(sigma_span) == 4);

    Sublattice tilde_prime = orthogonal_complement(kLat4, sigma_class(kLat4));
    CHECK(discriminant(tilde_prime) == 4);
    Sublattice sum = span_union(tilde_prime, sigma_span);
    CHECK(discriminant(sum) == 16);
}

TEST_CASE("inclusion indices and quotient groups") {
    Mod2Kernel ker = kernel_of_mod2_pairing(kLat3, kL);
    CHECK(inclusion_index(ker.sublattice, full(kLat3)) == 2);
    CHECK(quotient_structure(ker.sublattice, full(kLat3)) == std::vector<Int>{Int(2)});

    Sublattice tilde_prime = orthogonal_complement(kLat4, sigma_class(kLat4));
    Sublattice sum = span_union(tilde_prime, Sublattice(kLat4, {sigma_class(kLat4)}));
    CHECK(inclusion_index(sum, full(kLat4)) == 4);
    CHECK(quotient_structure(sum, full(kLat4)) == std::vector<Int>{Int(4)});

    CHECK(inclusion_index(full(kLat3), full(kLat3)) == 1);
    CHECK(quotient_structure(full(kLat3), full(kLat3)).empty());
}

TEST_CASE("quotient structure matches the determinantal-divisor oracle") {
    Mod2Kernel ker = kernel_of_mod2_pairing(kLat3, kL);
    // inclusion matrix of Lambda'_3 in Lambda_3 is just the generator matrix
    auto oracle = testing::invariant_factors_oracle(ker.sublattice.generator_matrix());
    std::vector<Int> nontrivial;
    for (const Int& f : oracle)
        if (f > 1) nontrivial.push_back(f);
    CHECK(quotient_structure(ker.sublattice, full(kLat3)) == nontrivial);

    Sublattice tilde_prime = orthogonal_complement(kLat4, sigma_class(kLat4));
    Sublattice sum = span_union(tilde_prime, Sublattice(kLat4, {sigma_class(kLat4)}));
    auto oracle4 = testing::invariant_factors_oracle(sum.generator_matrix());
    std::vector<Int> nontrivial4;
    for (const Int& f : oracle4)
        if (f > 1) nontrivial4.push_back(f);
    CHECK(quotient_structure(sum, full(kLat4)) == nontrivial4);
}

TEST_CASE("4*lambda lies in the orthogonal sum, 2*lambda does not") {
    Sublattice tilde_prime = orthogonal_complement(kLat4, sigma_class(kLat4));
    Sublattice sum = span_union(tilde_prime, Sublattice(kLat4, {sigma_class(kLat4)}));

    for (int i = 0; i < kLat4.rank(); ++i)
        CHECK(multiple_membership(basis_class(kLat4, i), 4, sum));
    CHECK_FALSE(multiple_membership(basis_class(kLat4, 1), 2, sum)); // ~E0
    CHECK(multiple_membership(h_class(kLat4), 1, sum));
}

TEST_CASE("index^2 * disc(full) = disc(sub) on nested pairs") {
    Mod2Kernel ker = kernel_of_mod2_pairing(kLat3, kL);
    Sublattice lat3_full = full(kLat3);
    Int idx = inclusion_index(ker.sublattice, lat3_full);
    CHECK(idx * idx * discriminant(lat3_full) == discriminant(ker.sublattice));

    Sublattice tilde_prime = orthogonal_complement(kLat4, sigma_class(kLat4));
    Sublattice sum = span_union(tilde_prime, Sublattice(kLat4, {sigma_class(kLat4)}));
    Sublattice lat4_full = full(kLat4);
    Int idx4 = inclusion_index(sum, lat4_full);
    CHECK(idx4 * idx4 * discriminant(lat4_full) == discriminant(sum));
}

TEST_CASE("discriminant is multiplicative on orthogonal sums") {
    testing::RatGen gen(37);
    int tested = 0;
    while (tested < 30) {
        std::vector<Int> a, b;
        for (int i = 0; i < 5; ++i) {
            a.emplace_back(gen.integer(-3, 3));
            b.emplace_back(gen.integer(-3, 3));
        }
        LatticeClass x(kLat4, a), y(kLat4, b);
        if (x.is_zero() || y.is_zero() || pairing(x, y) != 0) continue;
        if (pairing(x, x) == 0 || pairing(y, y) == 0) continue;
        Sublattice sx(kLat4, {x}), sy(kLat4, {y});
        Sublattice both = span_union(sx, sy);
        CHECK(discriminant(both) == discriminant(sx) * discriminant(sy));
        ++tested;
    }
}

TEST_CASE("dependent generators are rejected") {
    CHECK_THROWS_AS(Sublattice(kLat3, {h_class(kLat3), h_class(kLat3) * Int(2)}),
                    DomainError);
}
