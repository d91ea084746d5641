#include "rp2/cone.hpp"

namespace rp2 {

namespace {

constexpr const char* kEngine = "rp2-triangle/1.0.0";

} // namespace

LatticeClass fiber_class(const BlowupLattice& lat4) {
    if (lat4 != BlowupLattice::tilde4())
        throw DomainError("fiber class lives in the four-fold tilde lattice");
    return LatticeClass(lat4, {Int(1), Int(-1), Int(0), Int(0), Int(0)});
}

LatticeClass e_prime_class(const BlowupLattice& lat4, int i) {
    if (lat4 != BlowupLattice::tilde4())
        throw DomainError("~E'_i lives in the four-fold tilde lattice");
    if (i < 1 || i > 3) throw DomainError("~E'_i index out of range");
    std::vector<Int> c = {Int(1), Int(-1), Int(0), Int(0), Int(0)};
    c[static_cast<std::size_t>(i + 1)] = -1;
    return LatticeClass(lat4, std::move(c));
}

Rat area(const KahlerClass& w, const LatticeClass& c) {
    if (c.lattice != BlowupLattice::tilde4())
        throw DomainError("Kahler area needs a class in the tilde lattice");
    Rat acc = w.lambda * Rat(c.coefficients[0]);
    for (int i = 0; i < 4; ++i)
        acc += w.mu_tilde[static_cast<std::size_t>(i)] *
               Rat(c.coefficients[static_cast<std::size_t>(i + 1)]);
    acc.canonicalize();
    return acc;
}

Rat area(const PeriodVector3& p, const LatticeClass& c) {
    if (c.lattice != BlowupLattice::standard(3))
        throw DomainError("ball-form area needs a class in the three-fold lattice");
    Rat acc = Rat(c.coefficients[0]);
    for (int i = 1; i <= 3; ++i)
        acc += p.mu(i) * Rat(c.coefficients[static_cast<std::size_t>(i)]);
    acc.canonicalize();
    return acc;
}

ConditionCheck tilde_cone_membership(const KahlerClass& w) {
    ConditionCheck out{true, {}};
    auto fail = [&](const std::string& name) {
        out.holds = false;
        out.failed.push_back(name);
    };

    Rat sq = w.lambda * w.lambda;
    for (const auto& m : w.mu_tilde) sq -= m * m;
    if (sq <= 0) fail("(1~) lambda^2 - sum mu~i^2 > 0");

    for (int i = 0; i < 4; ++i)
        if (w.mu_tilde[static_cast<std::size_t>(i)] <= 0)
            fail("(2~) mu~" + std::to_string(i) + " > 0");
    for (int i = 1; i < 4; ++i)
        if (w.mu_tilde[0] + w.mu_tilde[static_cast<std::size_t>(i)] >= w.lambda)
            fail("(2~) mu~0 + mu~" + std::to_string(i) + " < lambda");

    if (w.mu_tilde[0] - (w.mu_tilde[1] + w.mu_tilde[2] + w.mu_tilde[3]) <= 0)
        fail("(3~) mu~0 - (mu~1 + mu~2 + mu~3) > 0");
    return out;
}

ConditionCheck ball_form_conditions(const std::array<Rat, 3>& mu) {
    ConditionCheck out{true, {}};
    auto fail = [&](const std::string& name) {
        out.holds = false;
        out.failed.push_back(name);
    };

    Rat sq = 1;
    for (const auto& m : mu) sq -= m * m;
    if (sq <= 0) fail("(1) positive volume: 1 - sum mu_i^2 > 0");

    for (int i = 0; i < 3; ++i)
        if (mu[static_cast<std::size_t>(i)] <= 0)
            fail("(2) effectivity: mu" + std::to_string(i + 1) + " > 0");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (mu[static_cast<std::size_t>(i)] + mu[static_cast<std::size_t>(j)] >= 1)
                fail("(2) effectivity: mu" + std::to_string(i + 1) + " + mu" +
                     std::to_string(j + 1) + " < 1");

    for (int k = 0; k < 3; ++k) {
        int i = (k + 1) % 3, j = (k + 2) % 3;
        if (mu[static_cast<std::size_t>(k)] >=
            mu[static_cast<std::size_t>(i)] + mu[static_cast<std::size_t>(j)])
            fail("(3) triangle: mu" + std::to_string(k + 1) + " < mu" +
                 std::to_string(i + 1) + " + mu" + std::to_string(j + 1));
    }
    return out;
}

DecompositionCoefficients decompose_curve_class(const LatticeClass& c) {
    BlowupLattice lat = BlowupLattice::tilde4();
    if (c.lattice != lat)
        throw DomainError("decomposition needs a class in the tilde lattice");
    LatticeClass f = fiber_class(lat);
    LatticeClass sigma = sigma_class(lat);

    DecompositionCoefficients out;
    out.d = pairing(c, f);
    for (int i = 1; i <= 3; ++i)
        out.n_prime[static_cast<std::size_t>(i - 1)] = pairing(c, e_prime_class(lat, i));
    out.m = pairing(c, sigma) + 4 * out.d;
    return out;
}

PositivityCertificate positivity_certificate(const LatticeClass& c, const KahlerClass& w) {
    ConditionCheck cone = tilde_cone_membership(w);
    if (!cone.holds)
        throw DomainError("Kahler class is not in the cone: " + cone.failed.front());

    BlowupLattice lat = BlowupLattice::tilde4();
    LatticeClass sigma = sigma_class(lat);
    LatticeClass f = fiber_class(lat);

    PositivityCertificate out;
    out.total_area = area(w, c);

    if (c == sigma) {
        out.kind = CurveCase::sigma;
        return out;
    }

    Int d = pairing(c, f);
    if (d == 0) {
        std::vector<LatticeClass> fiber_components = {f};
        for (int i = 1; i <= 3; ++i) {
            fiber_components.push_back(basis_class(lat, i + 1)); // ~Ei
            fiber_components.push_back(e_prime_class(lat, i));
        }
        for (const auto& comp : fiber_components)
            if (c == comp) {
                out.kind = CurveCase::fiber_component;
                return out;
            }
        out.kind = CurveCase::not_covered;
        return out;
    }

    if (d > 0) {
        DecompositionCoefficients dc = decompose_curve_class(c);
        bool side_ok = pairing(c, sigma) > 0; // forces m - 4d > 0
        for (const Int& np : dc.n_prime)
            if (np < 0 || np > dc.d) side_ok = false;
        if (side_ok) {
            out.kind = CurveCase::general_positive;
            Rat area_sigma = area(w, sigma);
            Rat area_f = area(w, f);
            Int m3d = dc.m - 3 * dc.d;
            out.summands.emplace_back(dc.d.get_str() + "*Sigma", Rat(dc.d) * area_sigma);
            out.summands.emplace_back(m3d.get_str() + "*F", Rat(m3d) * area_f);
            for (int i = 1; i <= 3; ++i) {
                Int coeff = dc.d - dc.n_prime[static_cast<std::size_t>(i - 1)];
                out.summands.emplace_back(coeff.get_str() + "*F", Rat(coeff) * area_f);
            }
            for (int i = 1; i <= 3; ++i) {
                const Int& np = dc.n_prime[static_cast<std::size_t>(i - 1)];
                Rat base = area(w, f - e_prime_class(lat, i)); // = mu~i
                out.summands.emplace_back(
                    np.get_str() + "*(F-~E'" + std::to_string(i) + ")", Rat(np) * base);
            }
            for (auto& s : out.summands) s.second.canonicalize();
            return out;
        }
    }

    out.kind = CurveCase::not_covered;
    return out;
}

std::vector<Mod2Class> audin_scan(int n) {
    if (n < 1 || n > 3) throw DomainError("audin scan is defined for n in {1,2,3}");
    BlowupLattice lat = BlowupLattice::standard(n);
    std::vector<Mod2Class> out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<Int> coeffs(static_cast<std::size_t>(n + 1), 0);
        for (int i = 1; i <= n; ++i)
            if (mask & (1u << (i - 1))) coeffs[static_cast<std::size_t>(i)] = 1;
        Mod2Class m{LatticeClass(lat, std::move(coeffs))};
        if (pontrjagin_square(m) == 1) out.push_back(std::move(m));
    }
    return out;
}

bool replay(const Certificate& cert) {
    if (cert.yes) {
        if (!cert.witness) return false;
        try {
            PeriodVector3 p(cert.mu[0], cert.mu[1], cert.mu[2]);
            PeriodVector4 q = period_forward(p, EpsilonValue(cert.witness->eps));
            return q.valid && q.mu_tilde == cert.witness->mu_tilde;
        } catch (const DomainError&) {
            return false;
        }
    }
    if (!cert.violation || cert.violated_index < 1 || cert.violated_index > 3) return false;
    int k = cert.violated_index - 1;
    int i = (k + 1) % 3, j = (k + 2) % 3;
    // The named inequality mu_k < mu_i + mu_j must indeed be false.
    return cert.mu[static_cast<std::size_t>(k)] >=
           cert.mu[static_cast<std::size_t>(i)] + cert.mu[static_cast<std::size_t>(j)];
}

Certificate admits_lagrangian_rp2(const std::array<Rat, 3>& mu) {
    ConditionCheck cond = ball_form_conditions(mu);
    for (const auto& name : cond.failed)
        if (name.rfind("(3)", 0) != 0)
            throw DomainError(name + " fails");

    Certificate cert;
    cert.mu = mu;
    for (auto& m : cert.mu) m.canonicalize();
    cert.engine = kEngine;

    PeriodVector3 p(mu[0], mu[1], mu[2]);
    EpsilonSupremum sup = epsilon_supremum(p);
    cert.epsilon_sup = sup.sup;
    cert.attained = false;

    if (sup.sup > 0) {
        cert.yes = true;
        Rat witness_eps = sup.sup / 2;
        witness_eps.canonicalize();
        PeriodVector4 q = period_forward(p, EpsilonValue(witness_eps));
        if (!q.valid)
            throw DomainError("internal: witness failed re-validation: " + q.violation);
        cert.witness = CertificateWitness{witness_eps, q.mu_tilde};
    } else {
        cert.yes = false;
        for (int k = 0; k < 3 && !cert.violation; ++k) {
            int i = (k + 1) % 3, j = (k + 2) % 3;
            if (mu[static_cast<std::size_t>(k)] >=
                mu[static_cast<std::size_t>(i)] + mu[static_cast<std::size_t>(j)]) {
                cert.violated_index = k + 1;
                cert.violation = "mu" + std::to_string(k + 1) + " < mu" +
                                 std::to_string(i + 1) + " + mu" + std::to_string(j + 1) +
                                 " fails";
            }
        }
    }
    return cert;
}

} // namespace rp2
