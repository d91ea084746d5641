#pragma once

#include "rp2/lattice.hpp"

#include <array>
#include <string>
#include <vector>

namespace rp2 {

/// Blow-up sizes (mu1, mu2, mu3) of the triply blown-up unit ball.
/// Construction enforces mu_i > 0 and mu_i + mu_j < 1; the triangle
/// inequality is NOT an invariant here (deciding it is the whole point).
class PeriodVector3 {
public:
    PeriodVector3(Rat mu1, Rat mu2, Rat mu3);

    const Rat& mu(int i) const; // i in {1,2,3}
    std::array<Rat, 3> values() const { return mu_; }

private:
    std::array<Rat, 3> mu_;
};

/// Periods (lambda; ~mu0..~mu3) of the four-fold blow-up, with a validity
/// flag for the open-cone inequalities. Invalid vectors carry the name of
/// the first violated inequality.
struct PeriodVector4 {
    Rat lambda;
    std::array<Rat, 4> mu_tilde;
    bool valid = false;
    std::string violation; // empty when valid
};

struct EpsilonValue {
    Rat eps;

    explicit EpsilonValue(Rat e);
    Rat size_of_blowup() const { return 4 * eps; }
};

struct BettiTriple {
    Int b1, b2_plus, b2_minus;
    bool operator==(const BettiTriple&) const = default;
};

enum class BettiDirection { blowdown, blowup };

/// The isometric embedding of the even sublattice Lambda'_3 into the
/// Sigma-orthogonal part of Lambda_4, stored by the images of the
/// generators (H, 2E1, 2E2, 2E3).
struct Correspondence {
    std::array<LatticeClass, 4> images; // images of H, 2E1, 2E2, 2E3

    const LatticeClass& image_of_h() const { return images[0]; }
    const LatticeClass& image_of_2e(int i) const; // i in {1,2,3}
    bool operator==(const Correspondence&) const = default;
};

/// [Sigma] = ~E0 - ~E1 - ~E2 - ~E3 in the tilde lattice.
LatticeClass sigma_class(const BlowupLattice& lat4);

Correspondence standard_correspondence();

/// Exhaustive search for all generator assignments satisfying the
/// correspondence invariants. Returns the S3-orbit of the standard map.
std::vector<Correspondence> enumerate_correspondences();

/// Checks isometry, c1-degree preservation, and half-difference integrality.
bool correspondence_invariants_hold(const Correspondence& c);

PeriodVector4 period_forward(const PeriodVector3& p, const EpsilonValue& e);

struct InversePeriods {
    PeriodVector3 mu;
    Rat eps;
    bool eps_positive;
};

/// Inverse of period_forward; requires lambda = 1. Non-positive eps is
/// flagged, not thrown.
InversePeriods period_inverse(const PeriodVector4& q);

struct EpsilonSupremum {
    Rat sup;
    bool attained;       // always false: the constraints are strict
    std::string binding; // name of the binding constraint, empty when sup = 0
};

/// sup{eps > 0 : period_forward(p, eps) is valid}; 0 when some triangle
/// inequality fails (or holds with equality).
EpsilonSupremum epsilon_supremum(const PeriodVector3& p);

/// Exact check of sum ~mu_i^2 = sum mu_i^2 + 4 eps^2.
bool volume_identity(const PeriodVector3& p, const EpsilonValue& e);

BettiTriple betti_transport(const BettiTriple& x, BettiDirection direction);

} // namespace rp2
