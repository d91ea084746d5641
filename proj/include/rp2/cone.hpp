#pragma once

#include "rp2/blowup.hpp"

#include <optional>
#include <utility>

namespace rp2 {

/// [w~4] = lambda*[H] - sum mu~i [~Ei].
struct KahlerClass {
    Rat lambda;
    std::array<Rat, 4> mu_tilde;
};

/// Distinguished classes of the ruled model of the four-fold blow-up.
LatticeClass fiber_class(const BlowupLattice& lat4);            // F = H - ~E0
LatticeClass e_prime_class(const BlowupLattice& lat4, int i);   // ~E'_i = H - ~E0 - ~Ei

/// Symplectic area of C against the Kahler class: lambda*c0 + sum mu~i*c_i.
Rat area(const KahlerClass& w, const LatticeClass& c);
/// Area in the three-fold ball picture ([w3] = H - sum mu_i E_i, lambda = 1).
Rat area(const PeriodVector3& p, const LatticeClass& c);

struct ConditionCheck {
    bool holds;
    std::vector<std::string> failed; // names of violated conditions
};

/// Conditions (1~)(2~)(3~) of the Kahler-cone lemma, all strict.
ConditionCheck tilde_cone_membership(const KahlerClass& w);

/// Conditions (1)-(3) on raw blow-up sizes: positive volume, effectivity,
/// triangle inequality.
ConditionCheck ball_form_conditions(const std::array<Rat, 3>& mu);

struct DecompositionCoefficients {
    Int d, m;
    std::array<Int, 3> n_prime;
};

/// [C] = d[Sigma] + m[F] - sum n'_i [~E'_i] in the unimodular basis
/// {Sigma, F, ~E'_1..3}; d = C.F, n'_i = C.~E'_i, m = C.Sigma + 4d.
DecompositionCoefficients decompose_curve_class(const LatticeClass& c);

enum class CurveCase { sigma, fiber_component, general_positive, not_covered };

struct PositivityCertificate {
    CurveCase kind;
    Rat total_area;
    // case general_positive: non-negative summand areas adding up to
    // total_area, with the d[Sigma] term strictly positive.
    std::vector<std::pair<std::string, Rat>> summands;
};

/// Case analysis of the cone lemma for a curve class C against a cone
/// member w. Classes outside the lemma's case split get not_covered.
PositivityCertificate positivity_certificate(const LatticeClass& c, const KahlerClass& w);

/// All mod-2 classes in span{E_1..E_n} with Pontrjagin square 1 mod 4.
std::vector<Mod2Class> audin_scan(int n);

struct CertificateWitness {
    Rat eps;
    std::array<Rat, 4> mu_tilde;
};

/// Serializable decision record for the Lagrangian RP^2 question.
struct Certificate {
    bool yes = false;
    std::array<Rat, 3> mu;
    Rat epsilon_sup;
    bool attained = false;
    std::optional<CertificateWitness> witness; // present iff YES
    std::optional<std::string> violation;      // present iff NO
    int violated_index = 0;                    // k of the failed mu_k < mu_i + mu_j
    std::string engine;
};

/// Re-checks a certificate from its own data: YES witnesses must transform
/// to a valid period vector, NO violations must re-evaluate false.
bool replay(const Certificate& cert);

/// The top-level decision. Conditions (1)-(2) are preconditions (domain
/// errors); the verdict is the strict triangle inequality.
Certificate admits_lagrangian_rp2(const std::array<Rat, 3>& mu);

} // namespace rp2
