#include "rp2/blowup.hpp"

#include <algorithm>

namespace rp2 {

namespace {

const char* kMuName[4] = {"mu~0", "mu~1", "mu~2", "mu~3"};

} // namespace

PeriodVector3::PeriodVector3(Rat mu1, Rat mu2, Rat mu3) : mu_{mu1, mu2, mu3} {
    for (auto& m : mu_) m.canonicalize();
    for (int i = 0; i < 3; ++i)
        if (mu_[i] <= 0)
            throw DomainError("effectivity: mu" + std::to_string(i + 1) + " > 0 fails");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (mu_[i] + mu_[j] >= 1)
                throw DomainError("effectivity: mu" + std::to_string(i + 1) + " + mu" +
                                  std::to_string(j + 1) + " < 1 fails");
}

const Rat& PeriodVector3::mu(int i) const {
    if (i < 1 || i > 3) throw DomainError("period index out of range");
    return mu_[static_cast<std::size_t>(i - 1)];
}

EpsilonValue::EpsilonValue(Rat e) : eps(std::move(e)) {
    eps.canonicalize();
    if (eps <= 0) throw DomainError("eps > 0 fails");
}

const LatticeClass& Correspondence::image_of_2e(int i) const {
    if (i < 1 || i > 3) throw DomainError("generator index out of range");
    return images[static_cast<std::size_t>(i)];
}

LatticeClass sigma_class(const BlowupLattice& lat4) {
    if (lat4 != BlowupLattice::tilde4())
        throw DomainError("Sigma lives in the four-fold tilde lattice");
    return LatticeClass(lat4, {Int(0), Int(1), Int(-1), Int(-1), Int(-1)});
}

Correspondence standard_correspondence() {
    BlowupLattice lat = BlowupLattice::tilde4();
    return Correspondence{{
        h_class(lat),
        LatticeClass(lat, {Int(0), Int(1), Int(-1), Int(1), Int(1)}),
        LatticeClass(lat, {Int(0), Int(1), Int(1), Int(-1), Int(1)}),
        LatticeClass(lat, {Int(0), Int(1), Int(1), Int(1), Int(-1)}),
    }};
}

bool correspondence_invariants_hold(const Correspondence& c) {
    // Source Gram of (H, 2E1, 2E2, 2E3): diag(1, -4, -4, -4); source
    // c1-degrees: (3, 2, 2, 2).
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Int expected = 0;
            if (i == j) expected = (i == 0) ? 1 : -4;
            if (pairing(c.images[i], c.images[j]) != expected) return false;
        }
    for (int i = 0; i < 4; ++i)
        if (c1_degree(c.images[i]) != ((i == 0) ? 3 : 2)) return false;

    // Half-differences (image(2Ei) - image(2Ej))/2 must be integral of
    // square -2, mirroring Ei - Ej = (2Ei - 2Ej)/2 on the source side.
    for (int i = 1; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            LatticeClass diff = c.images[i] - c.images[j];
            std::vector<Int> half(diff.coefficients);
            for (auto& x : half) {
                if (mpz_odd_p(x.get_mpz_t())) return false;
                x /= 2;
            }
            LatticeClass half_cls(diff.lattice, std::move(half));
            if (pairing(half_cls, half_cls) != -2) return false;
        }
    return true;
}

std::vector<Correspondence> enumerate_correspondences() {
    BlowupLattice lat = BlowupLattice::tilde4();
    LatticeClass h = h_class(lat);
    LatticeClass sigma = sigma_class(lat);

    // Images of 2Ei: square -4, c1-degree 2, orthogonal to H and Sigma.
    EnumQuery eq;
    eq.square = -4;
    eq.c1_deg = 2;
    eq.orthogonal_to = {h, sigma};
    std::vector<LatticeClass> minus4 = enumerate_classes(lat, eq);

    // Images of H: square 1, c1-degree 3, orthogonal to Sigma, with the
    // H-coefficient ranging over [-3, 3]. The bound is exhaustive: square 1
    // forces a0^2 = 1 + sum k_i^2, and c1-degree 3 forces
    // 3 a0 + sum k_i = 3 with sum k_i^2 = a0^2 - 1, so |a0| <= 3.
    std::vector<LatticeClass> h_candidates;
    for (int a0 = -3; a0 <= 3; ++a0) {
        EnumQuery hq;
        hq.square = 1;
        hq.c1_deg = 3;
        hq.orthogonal_to = {sigma};
        hq.h_degree = Int(a0);
        for (auto& cls : enumerate_classes(lat, hq)) h_candidates.push_back(std::move(cls));
    }

    std::vector<Correspondence> out;
    for (const auto& hi : h_candidates) {
        for (std::size_t i = 0; i < minus4.size(); ++i)
            for (std::size_t j = 0; j < minus4.size(); ++j)
                for (std::size_t k = 0; k < minus4.size(); ++k) {
                    if (i == j || i == k || j == k) continue;
                    Correspondence c{{hi, minus4[i], minus4[j], minus4[k]}};
                    if (correspondence_invariants_hold(c)) out.push_back(std::move(c));
                }
    }
    return out;
}

PeriodVector4 period_forward(const PeriodVector3& p, const EpsilonValue& e) {
    const Rat m1 = p.mu(1), m2 = p.mu(2), m3 = p.mu(3);
    PeriodVector4 q;
    q.lambda = 1;
    q.mu_tilde[0] = (m1 + m2 + m3) / 2 + e.eps;
    q.mu_tilde[1] = (m2 + m3 - m1) / 2 - e.eps;
    q.mu_tilde[2] = (m1 + m3 - m2) / 2 - e.eps;
    q.mu_tilde[3] = (m1 + m2 - m3) / 2 - e.eps;
    for (auto& m : q.mu_tilde) m.canonicalize();

    q.valid = true;
    for (int i = 0; i < 4 && q.valid; ++i)
        if (q.mu_tilde[static_cast<std::size_t>(i)] <= 0) {
            q.valid = false;
            q.violation = std::string(kMuName[i]) + " > 0 fails";
        }
    if (q.valid) {
        Rat sq = 0;
        for (const auto& m : q.mu_tilde) sq += m * m;
        if (1 - sq <= 0) {
            q.valid = false;
            q.violation = "1 - sum mu~i^2 > 0 fails";
        }
    }
    if (q.valid &&
        q.mu_tilde[0] - (q.mu_tilde[1] + q.mu_tilde[2] + q.mu_tilde[3]) <= 0) {
        q.valid = false;
        q.violation = "mu~0 - (mu~1 + mu~2 + mu~3) > 0 fails";
    }
    for (int i = 1; i < 4 && q.valid; ++i)
        if (1 - q.mu_tilde[0] - q.mu_tilde[static_cast<std::size_t>(i)] <= 0) {
            q.valid = false;
            q.violation = "1 - mu~0 - " + std::string(kMuName[i]) + " > 0 fails";
        }
    return q;
}

InversePeriods period_inverse(const PeriodVector4& q) {
    if (q.lambda != 1) throw DomainError("period inversion requires lambda = 1");
    const Rat &t0 = q.mu_tilde[0], &t1 = q.mu_tilde[1], &t2 = q.mu_tilde[2],
              &t3 = q.mu_tilde[3];
    Rat m1 = (t0 - t1 + t2 + t3) / 2;
    Rat m2 = (t0 + t1 - t2 + t3) / 2;
    Rat m3 = (t0 + t1 + t2 - t3) / 2;
    Rat eps = (t0 - t1 - t2 - t3) / 4;
    eps.canonicalize();
    return InversePeriods{PeriodVector3(m1, m2, m3), eps, eps > 0};
}

EpsilonSupremum epsilon_supremum(const PeriodVector3& p) {
    const Rat m1 = p.mu(1), m2 = p.mu(2), m3 = p.mu(3);
    const std::array<Rat, 3> linear = {
        (m2 + m3 - m1) / 2, // mu~1 > 0
        (m1 + m3 - m2) / 2, // mu~2 > 0
        (m1 + m2 - m3) / 2, // mu~3 > 0
    };
    int binding = 0;
    for (int i = 1; i < 3; ++i)
        if (linear[static_cast<std::size_t>(i)] < linear[static_cast<std::size_t>(binding)])
            binding = i;
    Rat sup = linear[static_cast<std::size_t>(binding)];
    if (sup <= 0) return EpsilonSupremum{Rat(0), false, ""};

    // The remaining constraints never bind on (0, sup]:
    //   1 - mu~0 - mu~i = 1 - mu_j - mu_k > 0 is eps-independent, and the
    //   volume constraint eps^2 < (1 - sum mu_i^2)/4 is implied by the
    //   others (compare exactly by squaring).
    Rat volume_bound_sq = (1 - (m1 * m1 + m2 * m2 + m3 * m3)) / 4;
    if (sup * sup >= volume_bound_sq)
        throw DomainError("volume constraint binds before positivity; "
                          "inadmissible period vector");

    sup.canonicalize();
    return EpsilonSupremum{sup, false, std::string(kMuName[binding + 1]) + " > 0"};
}

bool volume_identity(const PeriodVector3& p, const EpsilonValue& e) {
    PeriodVector4 q = period_forward(p, e);
    Rat lhs = 0;
    for (const auto& m : q.mu_tilde) lhs += m * m;
    Rat rhs = 0;
    for (int i = 1; i <= 3; ++i) rhs += p.mu(i) * p.mu(i);
    rhs += 4 * e.eps * e.eps;
    return lhs == rhs;
}

BettiTriple betti_transport(const BettiTriple& x, BettiDirection direction) {
    if (direction == BettiDirection::blowup)
        return BettiTriple{x.b1, x.b2_plus, x.b2_minus + 1};
    if (x.b2_minus < 1) throw DomainError("blowdown underflows b2^-");
    return BettiTriple{x.b1, x.b2_plus, x.b2_minus - 1};
}

} // namespace rp2
