#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "rp2/blowup.hpp"

using namespace rp2;

namespace {

const BlowupLattice kLat4 = BlowupLattice::tilde4();

}

TEST_CASE("sigma class and its invariants") {
    LatticeClass sigma = sigma_class(kLat4);
    CHECK(sigma.coefficients ==
          std::vector<Int>{Int(0), Int(1), Int(-1), Int(-1), Int(-1)});
    CHECK(pairing(sigma, sigma) == -4);
    CHECK(pairing(sigma, h_class(kLat4)) == 0);
    CHECK(c1_degree(sigma) == -2);
    CHECK_THROWS_AS(sigma_class(BlowupLattice::standard(3)), DomainError);
}

TEST_CASE("the standard correspondence") {
    Correspondence c = standard_correspondence();
    CHECK(c.image_of_h() == h_class(kLat4));
    CHECK(c.image_of_2e(3) ==
          LatticeClass(kLat4, {Int(0), Int(1), Int(1), Int(1), Int(-1)}));
    CHECK(c1_degree(c.image_of_h()) == 3);
    CHECK(correspondence_invariants_hold(c));

    // half difference (image(2E1) - image(2E2))/2 = ~E2 - ~E1
    LatticeClass diff = c.image_of_2e(1) - c.image_of_2e(2);
    LatticeClass half(kLat4, {diff.coefficients[0] / 2, diff.coefficients[1] / 2,
                              diff.coefficients[2] / 2, diff.coefficients[3] / 2,
                              diff.coefficients[4] / 2});
    CHECK(half == basis_class(kLat4, 3) - basis_class(kLat4, 2));
    CHECK(pairing(half, half) == -2);
}

TEST_CASE("correspondence enumeration is the S3-orbit of the standard map") {
    auto maps = enumerate_correspondences();
    REQUIRE(maps.size() == 6);
    CHECK(std::find(maps.begin(), maps.end(), standard_correspondence()) != maps.end());
    for (const auto& c : maps) {
        CHECK(correspondence_invariants_hold(c));
        CHECK(c.image_of_h() == h_class(kLat4));
        // images of 2Ei are permutations of the standard images
        Correspondence std_map = standard_correspondence();
        for (int i = 1; i <= 3; ++i) {
            bool found = false;
            for (int j = 1; j <= 3; ++j)
                if (c.image_of_2e(i) == std_map.image_of_2e(j)) found = true;
            CHECK(found);
        }
    }
    // all six maps are distinct
    for (std::size_t i = 0; i < maps.size(); ++i)
        for (std::size_t j = i + 1; j < maps.size(); ++j) CHECK(!(maps[i] == maps[j]));
}

TEST_CASE("period transform worked instance") {
    PeriodVector3 p(Rat(3, 10), Rat(3, 10), Rat(3, 10));
    PeriodVector4 q = period_forward(p, EpsilonValue{Rat(1, 20)});
    CHECK(q.valid);
    CHECK(q.mu_tilde ==
          std::array<Rat, 4>{Rat(1, 2), Rat(1, 10), Rat(1, 10), Rat(1, 10)});

    PeriodVector4 boundary = period_forward(p, EpsilonValue{Rat(3, 20)});
    CHECK_FALSE(boundary.valid);
    CHECK(boundary.violation == "mu~1 > 0 fails");
    CHECK(boundary.mu_tilde[1] == 0);
}

TEST_CASE("the four linear relations hold for every transform") {
    testing::RatGen gen(5);
    for (int trial = 0; trial < 1000; ++trial) {
        auto mu = gen.period_triple();
        PeriodVector3 p(mu[0], mu[1], mu[2]);
        Rat eps = gen.rational(1, 30, 31, 400);
        PeriodVector4 q = period_forward(p, EpsilonValue{eps});

        CHECK(q.mu_tilde[0] - (q.mu_tilde[1] + q.mu_tilde[2] + q.mu_tilde[3]) == 4 * eps);
        CHECK(q.mu_tilde[0] - q.mu_tilde[1] + q.mu_tilde[2] + q.mu_tilde[3] == 2 * mu[0]);
        CHECK(q.mu_tilde[0] + q.mu_tilde[1] - q.mu_tilde[2] + q.mu_tilde[3] == 2 * mu[1]);
        CHECK(q.mu_tilde[0] + q.mu_tilde[1] + q.mu_tilde[2] - q.mu_tilde[3] == 2 * mu[2]);

        InversePeriods back = period_inverse(q);
        CHECK(back.mu.values() == p.values());
        CHECK(back.eps == eps);
        CHECK(back.eps_positive);

        CHECK(volume_identity(p, EpsilonValue{eps}));
    }
}

TEST_CASE("period inverse worked instance and degenerate flag") {
    PeriodVector4 q{Rat(1), {Rat(1, 2), Rat(1, 10), Rat(1, 10), Rat(1, 10)}, true, ""};
    InversePeriods inv = period_inverse(q);
    CHECK(inv.mu.values() == std::array<Rat, 3>{Rat(3, 10), Rat(3, 10), Rat(3, 10)});
    CHECK(inv.eps == Rat(1, 20));

    PeriodVector4 degenerate{Rat(1), {Rat(1, 2), Rat(1, 6), Rat(1, 6), Rat(1, 6)}, true, ""};
    InversePeriods flat = period_inverse(degenerate);
    CHECK(flat.eps == 0);
    CHECK_FALSE(flat.eps_positive);

    PeriodVector4 scaled{Rat(2), {Rat(1, 2), Rat(1, 10), Rat(1, 10), Rat(1, 10)}, true, ""};
    CHECK_THROWS_AS(period_inverse(scaled), DomainError);
}

TEST_CASE("epsilon supremum") {
    EpsilonSupremum sup = epsilon_supremum(PeriodVector3(Rat(3, 10), Rat(3, 10), Rat(3, 10)));
    CHECK(sup.sup == Rat(3, 20));
    CHECK_FALSE(sup.attained);
    CHECK(sup.binding == "mu~1 > 0");

    EpsilonSupremum empty = epsilon_supremum(PeriodVector3(Rat(1, 5), Rat(1, 5), Rat(1, 2)));
    CHECK(empty.sup == 0);

    EpsilonSupremum boundary =
        epsilon_supremum(PeriodVector3(Rat(1, 5), Rat(3, 10), Rat(1, 2)));
    CHECK(boundary.sup == 0);
}

TEST_CASE("validity of the transform is monotone in eps up to the supremum") {
    for (long a = 1; a < 20; ++a)
        for (long b = a; b < 20; ++b)
            for (long c = b; c < 20; ++c) {
                if (a + b >= 20 || a + c >= 20 || b + c >= 20) continue;
                PeriodVector3 p(Rat(a, 20), Rat(b, 20), Rat(c, 20));
                EpsilonSupremum sup = epsilon_supremum(p);
                bool triangle = a + b > c && a + c > b && b + c > a;
                CHECK((sup.sup > 0) == triangle);
                if (sup.sup > 0) {
                    // valid strictly inside the interval, invalid at the endpoint
                    for (int k = 1; k <= 4; ++k) {
                        Rat eps = sup.sup * Rat(k, 5);
                        CHECK(period_forward(p, EpsilonValue{eps}).valid);
                    }
                    CHECK_FALSE(period_forward(p, EpsilonValue{sup.sup}).valid);
                }
            }
}

TEST_CASE("automatic positivity of the volume") {
    testing::RatGen gen(71);
    for (int trial = 0; trial < 10000; ++trial) {
        auto mu = gen.period_triple();
        Rat vol = 1 - (mu[0] * mu[0] + mu[1] * mu[1] + mu[2] * mu[2]);
        CHECK(vol > 0);
    }
}

TEST_CASE("period vector validation") {
    CHECK_THROWS_AS(PeriodVector3(Rat(0), Rat(1, 2), Rat(1, 4)), DomainError);
    CHECK_THROWS_AS(PeriodVector3(Rat(3, 5), Rat(3, 5), Rat(1, 10)), DomainError);
    CHECK_THROWS_AS(EpsilonValue{Rat(0)}, DomainError);
}

TEST_CASE("betti transport") {
    BettiTriple x4{0, 1, 4};
    CHECK(betti_transport(x4, BettiDirection::blowdown) == BettiTriple{0, 1, 3});
    CHECK(betti_transport(betti_transport(x4, BettiDirection::blowdown),
                          BettiDirection::blowup) == x4);
    CHECK_THROWS_AS(betti_transport(BettiTriple{0, 1, 0}, BettiDirection::blowdown),
                    DomainError);
}
