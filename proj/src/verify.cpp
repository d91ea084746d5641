#include "rp2/verify.hpp"

#include "rp2/cone.hpp"
#include "rp2/sublattice.hpp"

#include <algorithm>
#include <sstream>

namespace rp2 {

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const VerifyCheck& c) { return c.pass; });
}

namespace {

Sublattice full_sublattice(const BlowupLattice& lat) {
    std::vector<LatticeClass> gens;
    for (int i = 0; i < lat.rank(); ++i) gens.push_back(basis_class(lat, i));
    return Sublattice(lat, std::move(gens));
}

std::string join_classes(const std::vector<LatticeClass>& classes) {
    std::string out;
    for (const auto& c : classes) {
        if (!out.empty()) out += ", ";
        out += c.to_string();
    }
    return out;
}

} // namespace

VerifyReport run_verify() {
    VerifyReport report;
    auto add = [&](const std::string& id, bool pass, const std::string& detail) {
        report.checks.push_back(VerifyCheck{id, pass, detail});
    };

    const BlowupLattice lat3 = BlowupLattice::standard(3);
    const BlowupLattice lat4 = BlowupLattice::tilde4();
    const LatticeClass sigma = sigma_class(lat4);
    const LatticeClass h4 = h_class(lat4);

    // Sigma's defining pairings.
    {
        Int sq = pairing(sigma, sigma);
        Int dh = pairing(sigma, h4);
        Int dc = c1_degree(sigma);
        add("sigma-pairings", sq == -4 && dh == 0 && dc == -2,
            "Sigma^2 = " + sq.get_str() + ", Sigma.H = " + dh.get_str() +
                ", c1.Sigma = " + dc.get_str());
    }

    // Uniqueness of Sigma among primitive (-4)-classes of c1-degree -2.
    {
        EnumQuery q;
        q.square = -4;
        q.c1_deg = -2;
        q.orthogonal_to = {h4};
        q.primitive_only = true;
        auto primitive = enumerate_classes(lat4, q);
        q.primitive_only = false;
        auto all = enumerate_classes(lat4, q);
        add("sigma-uniqueness",
            primitive.size() == 4 && all.size() == 8,
            "primitive count " + std::to_string(primitive.size()) +
                " (expect 4), unfiltered " + std::to_string(all.size()) +
                " (expect 8: permutations of Sigma plus -2~Ei)");
    }

    // The displayed class lists of the isomorphism argument.
    {
        EnumQuery q;
        q.square = -2;
        q.c1_deg = 0;
        q.orthogonal_to = {h4, sigma};
        q.primitive_only = true;
        auto roots = enumerate_classes(lat4, q);
        add("minus2-classes", roots.size() == 6,
            std::to_string(roots.size()) + " classes (expect the 6 ±(~Ei-~Ej)): " +
                join_classes(roots));

        q.square = -4;
        q.c1_deg = 2;
        auto quads = enumerate_classes(lat4, q);
        add("minus4-classes", quads.size() == 3,
            std::to_string(quads.size()) + " classes (expect 3): " + join_classes(quads));
    }

    // Discriminants and the index-4 quotient of the lattice lemma.
    const LatticeClass l_mod2(lat3, {Int(0), Int(1), Int(1), Int(1)});
    Mod2Kernel ker = kernel_of_mod2_pairing(lat3, Mod2Class{l_mod2});
    Sublattice lambda3 = full_sublattice(lat3);
    Sublattice lambda4 = full_sublattice(lat4);
    Sublattice sigma_span(lat4, {sigma});
    Sublattice tilde_prime = orthogonal_complement(lat4, sigma);
    Sublattice orth_sum = span_union(tilde_prime, sigma_span);
    {
        Int d1 = discriminant(ker.sublattice);
        Int d2 = discriminant(sigma_span);
        Int d3 = discriminant(orth_sum);
        add("discriminants", d1 == 4 && d2 == 4 && d3 == 16,
            "disc(Lambda'_3) = " + d1.get_str() + ", disc(Z<Sigma>) = " + d2.get_str() +
                ", disc(Lambda~'_4 + Z<Sigma>) = " + d3.get_str() + " (expect 4, 4, 16)");
    }
    {
        Int idx2 = inclusion_index(ker.sublattice, lambda3);
        auto quot2 = quotient_structure(ker.sublattice, lambda3);
        bool q2 = quot2.size() == 1 && quot2[0] == 2;
        add("index-2-sublattice", idx2 == 2 && q2,
            "[Lambda_3 : Lambda'_3] = " + idx2.get_str() + ", quotient = Z" +
                (quot2.empty() ? std::string("1") : quot2[0].get_str()));

        Int idx4 = inclusion_index(orth_sum, lambda4);
        auto quot4 = quotient_structure(orth_sum, lambda4);
        bool q4 = quot4.size() == 1 && quot4[0] == 4;
        add("index-4-quotient", idx4 == 4 && q4,
            "index = " + idx4.get_str() + ", quotient = Z" +
                (quot4.empty() ? std::string("1") : quot4[0].get_str()) +
                " (expect index 4, quotient Z4)");
    }
    {
        bool all4 = true;
        for (int i = 0; i < lat4.rank(); ++i)
            all4 = all4 && multiple_membership(basis_class(lat4, i), 4, orth_sum);
        bool two_fails = !multiple_membership(basis_class(lat4, 1), 2, orth_sum);
        add("multiple-4-membership", all4 && two_fails,
            std::string("4*lambda lies in Lambda~'_4 + Z<Sigma> for every basis vector: ") +
                (all4 ? "yes" : "no") + "; 2*~E0 membership fails: " +
                (two_fails ? "yes" : "no"));
    }

    // The isomorphism lemma: exactly the S3-orbit of the standard map.
    {
        auto maps = enumerate_correspondences();
        bool has_standard = std::find(maps.begin(), maps.end(),
                                      standard_correspondence()) != maps.end();
        bool invariants = std::all_of(maps.begin(), maps.end(),
                                      correspondence_invariants_hold);
        add("correspondence-lemma",
            maps.size() == 6 && has_standard && invariants,
            std::to_string(maps.size()) +
                " isometries found (expect 6 = |S3|); standard map present: " +
                (has_standard ? "yes" : "no"));
    }

    // Worked period instance.
    {
        PeriodVector3 p(Rat(3, 10), Rat(3, 10), Rat(3, 10));
        EpsilonValue e{Rat(1, 20)};
        PeriodVector4 q = period_forward(p, e);
        bool values = q.mu_tilde == std::array<Rat, 4>{Rat(1, 2), Rat(1, 10), Rat(1, 10),
                                                       Rat(1, 10)};
        Rat four_eps = q.mu_tilde[0] - (q.mu_tilde[1] + q.mu_tilde[2] + q.mu_tilde[3]);
        bool relations = four_eps == 4 * e.eps && volume_identity(p, e);
        InversePeriods back = period_inverse(q);
        bool round_trip = back.eps == e.eps && back.mu.values() == p.values();
        add("period-transform", q.valid && values && relations && round_trip,
            "(3/10,3/10,3/10), eps 1/20 -> (1/2,1/10,1/10,1/10); 4eps and volume "
            "identities hold; inverse round-trips");

        EpsilonSupremum sup = epsilon_supremum(p);
        add("epsilon-supremum", sup.sup == Rat(3, 20) && !sup.attained,
            "eps_sup = " + format_rational(sup.sup) + " (expect 3/20), attained = false, "
            "binding " + sup.binding);
    }

    // Audin obstruction scan.
    {
        auto s1 = audin_scan(1);
        auto s2 = audin_scan(2);
        auto s3 = audin_scan(3);
        bool ok = s1.empty() && s2.empty() && s3.size() == 1 &&
                  s3[0].lift == LatticeClass(lat3, {Int(0), Int(1), Int(1), Int(1)});
        add("audin-scan", ok,
            "n=1: " + std::to_string(s1.size()) + ", n=2: " + std::to_string(s2.size()) +
                ", n=3: " + std::to_string(s3.size()) +
                " (expect 0, 0, 1 with class E1+E2+E3)");
    }

    // The basis {Sigma, F, ~E'_1..3} is unimodular.
    {
        std::vector<LatticeClass> basis = {sigma, fiber_class(lat4)};
        for (int i = 1; i <= 3; ++i) basis.push_back(e_prime_class(lat4, i));
        IntMat m(5, std::vector<Int>(5));
        for (std::size_t j = 0; j < 5; ++j)
            for (std::size_t i = 0; i < 5; ++i) m[i][j] = basis[j].coefficients[i];
        Int det = determinant(m);
        add("decomposition-basis", abs(det) == 1,
            "det{Sigma, F, ~E'_1..3} = " + det.get_str() + " (expect ±1)");
    }

    // Positivity of the fiber-component areas at a sample cone member.
    {
        KahlerClass w{Rat(1), {Rat(1, 2), Rat(1, 10), Rat(1, 10), Rat(1, 10)}};
        bool member = tilde_cone_membership(w).holds;
        bool positive = member;
        std::vector<LatticeClass> classes = {sigma, fiber_class(lat4)};
        for (int i = 1; i <= 3; ++i) {
            classes.push_back(basis_class(lat4, i + 1));
            classes.push_back(e_prime_class(lat4, i));
        }
        for (const auto& c : classes) positive = positive && area(w, c) > 0;
        add("cone-membership", positive,
            "(1; 1/2, 1/10, 1/10, 1/10) is in the cone and every fiber component "
            "has positive area");
    }

    // Decision worked instances.
    {
        Certificate yes = admits_lagrangian_rp2({Rat(3, 10), Rat(3, 10), Rat(3, 10)});
        Certificate no1 = admits_lagrangian_rp2({Rat(1, 5), Rat(1, 5), Rat(1, 2)});
        Certificate no2 = admits_lagrangian_rp2({Rat(1, 5), Rat(3, 10), Rat(1, 2)});
        bool ok = yes.yes && yes.epsilon_sup == Rat(3, 20) && !no1.yes && !no2.yes &&
                  replay(yes) && replay(no1) && replay(no2);
        add("decision-instances", ok,
            "(3/10,3/10,3/10) YES with eps_sup 3/20; (1/5,1/5,1/2) NO; "
            "(1/5,3/10,1/2) NO; all certificates replay");
    }

    return report;
}

std::string render_report(const VerifyReport& report) {
    std::ostringstream out;
    for (const auto& c : report.checks)
        out << (c.pass ? "PASS" : "FAIL") << "  " << c.id << ": " << c.detail << "\n";
    out << (report.all_pass() ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
    return out.str();
}

} // namespace rp2
