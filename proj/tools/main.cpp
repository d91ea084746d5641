#include "CLI11.hpp"

#include "rp2/batch.hpp"
#include "rp2/cone.hpp"
#include "rp2/serialize.hpp"
#include "rp2/verify.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace rp2;

std::array<Rat, 3> parse_mu3(const std::vector<std::string>& args) {
    return {parse_rational(args[0]), parse_rational(args[1]), parse_rational(args[2])};
}

std::string tuple4(const std::array<Rat, 4>& values) {
    std::string out = "(";
    for (int i = 0; i < 4; ++i) {
        if (i) out += ", ";
        out += format_rational(values[static_cast<std::size_t>(i)]);
    }
    return out + ")";
}

int cmd_decide(const std::vector<std::string>& mu_args, bool json, bool quiet) {
    Certificate cert = admits_lagrangian_rp2(parse_mu3(mu_args));
    if (json) {
        std::cout << certificate_to_json(cert).dump(2) << "\n";
    } else if (quiet) {
        std::cout << (cert.yes ? "YES" : "NO") << "\n";
    } else if (cert.yes) {
        std::cout << "YES\n";
        std::cout << "epsilon_sup = " << format_rational(cert.epsilon_sup)
                  << " (not attained)\n";
        std::cout << "witness: eps = " << format_rational(cert.witness->eps)
                  << ", mu~ = " << tuple4(cert.witness->mu_tilde) << "\n";
    } else {
        std::cout << "NO\n";
        std::cout << "violation: " << *cert.violation << "\n";
    }
    return cert.yes ? 0 : 1;
}

int cmd_transform(const std::vector<std::string>& mu_args, const std::string& eps_arg,
                  bool json) {
    PeriodVector3 p(parse_rational(mu_args[0]), parse_rational(mu_args[1]),
                    parse_rational(mu_args[2]));
    EpsilonValue e{parse_rational(eps_arg)};
    PeriodVector4 q = period_forward(p, e);
    Rat four_eps = q.mu_tilde[0] - (q.mu_tilde[1] + q.mu_tilde[2] + q.mu_tilde[3]);
    four_eps.canonicalize();

    if (json) {
        Json j;
        j["lambda"] = format_rational(q.lambda);
        Json mt = Json::array();
        for (const auto& m : q.mu_tilde) mt.push_back(format_rational(m));
        j["mu_tilde"] = std::move(mt);
        j["valid"] = q.valid;
        j["violation"] = q.valid ? Json(nullptr) : Json(q.violation);
        j["four_eps"] = format_rational(four_eps);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "mu~ = " << tuple4(q.mu_tilde) << "\n";
        if (q.valid)
            std::cout << "valid\n";
        else
            std::cout << "invalid: " << q.violation << "\n";
        std::cout << "mu~0 - (mu~1 + mu~2 + mu~3) = " << format_rational(four_eps)
                  << " = 4*eps\n";
    }
    return 0;
}

int cmd_inverse(const std::vector<std::string>& mt_args, bool json) {
    PeriodVector4 q;
    q.lambda = 1;
    for (int i = 0; i < 4; ++i)
        q.mu_tilde[static_cast<std::size_t>(i)] =
            parse_rational(mt_args[static_cast<std::size_t>(i)]);
    InversePeriods inv = period_inverse(q);

    if (json) {
        Json j;
        Json mu = Json::array();
        for (const auto& m : inv.mu.values()) mu.push_back(format_rational(m));
        j["mu"] = std::move(mu);
        j["eps"] = format_rational(inv.eps);
        j["eps_positive"] = inv.eps_positive;
        std::cout << j.dump(2) << "\n";
    } else {
        auto v = inv.mu.values();
        std::cout << "mu = (" << format_rational(v[0]) << ", " << format_rational(v[1])
                  << ", " << format_rational(v[2]) << ")\n";
        std::cout << "eps = " << format_rational(inv.eps) << "\n";
        if (!inv.eps_positive)
            std::cout << "flagged: eps <= 0, no rational blow-up of that size\n";
    }
    return 0;
}

int cmd_epsilon_max(const std::vector<std::string>& mu_args, bool json) {
    PeriodVector3 p(parse_rational(mu_args[0]), parse_rational(mu_args[1]),
                    parse_rational(mu_args[2]));
    EpsilonSupremum sup = epsilon_supremum(p);
    if (json) {
        Json j;
        j["epsilon_sup"] = format_rational(sup.sup);
        j["attained"] = sup.attained;
        j["binding"] = sup.binding;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "epsilon_sup = " << format_rational(sup.sup) << "\n";
        if (sup.sup > 0)
            std::cout << "not attained; binding constraint: " << sup.binding << "\n";
        else
            std::cout << "empty interval (triangle inequality fails)\n";
    }
    return 0;
}

struct EnumerateArgs {
    std::string lattice = "B4";
    long square = 0;
    long c1 = 0;
    std::string orth;
    long h_degree = 0;
    bool has_h_degree = false;
    bool primitive = false;
};

int cmd_enumerate(const EnumerateArgs& args, bool json) {
    BlowupLattice lat;
    if (args.lattice == "B4")
        lat = BlowupLattice::tilde4();
    else if (args.lattice == "B3")
        lat = BlowupLattice::standard(3);
    else if (args.lattice == "B2")
        lat = BlowupLattice::standard(2);
    else if (args.lattice == "B1")
        lat = BlowupLattice::standard(1);
    else
        throw DomainError("unknown lattice " + args.lattice + " (use B1, B2, B3, B4)");

    EnumQuery q;
    q.square = args.square;
    q.c1_deg = args.c1;
    q.primitive_only = args.primitive;
    if (args.has_h_degree) q.h_degree = Int(args.h_degree);

    std::stringstream orth(args.orth);
    std::string token;
    while (std::getline(orth, token, ',')) {
        if (token.empty()) continue;
        if (token == "H") {
            q.orthogonal_to.push_back(h_class(lat));
        } else if (token == "Sigma") {
            q.orthogonal_to.push_back(sigma_class(lat));
        } else {
            auto it = std::find(lat.basis_labels.begin(), lat.basis_labels.end(), token);
            if (it == lat.basis_labels.end())
                throw DomainError("unknown orthogonality label " + token);
            q.orthogonal_to.push_back(
                basis_class(lat, static_cast<int>(it - lat.basis_labels.begin())));
        }
    }

    auto classes = enumerate_classes(lat, q);
    if (json) {
        Json arr = Json::array();
        for (const auto& c : classes) arr.push_back(class_to_json(c));
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& c : classes) std::cout << c.to_string() << "\n";
        std::cout << "total: " << classes.size() << "\n";
    }
    return 0;
}

int cmd_decompose(const std::vector<long>& coeffs, bool json) {
    BlowupLattice lat = BlowupLattice::tilde4();
    std::vector<Int> c;
    for (long x : coeffs) c.emplace_back(x);
    LatticeClass cls(lat, std::move(c));
    DecompositionCoefficients dc = decompose_curve_class(cls);

    if (json) {
        Json j;
        j["class"] = class_to_json(cls);
        j["d"] = dc.d.get_si();
        j["m"] = dc.m.get_si();
        j["n_prime"] = {dc.n_prime[0].get_si(), dc.n_prime[1].get_si(),
                        dc.n_prime[2].get_si()};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << cls.to_string() << " = d*Sigma + m*F - sum n'_i*~E'_i with d = "
                  << dc.d.get_str() << ", m = " << dc.m.get_str() << ", n' = ("
                  << dc.n_prime[0].get_str() << ", " << dc.n_prime[1].get_str() << ", "
                  << dc.n_prime[2].get_str() << ")\n";
    }
    return 0;
}

int cmd_kahler(const std::vector<std::string>& args, bool json) {
    KahlerClass w;
    w.lambda = parse_rational(args[0]);
    for (int i = 0; i < 4; ++i)
        w.mu_tilde[static_cast<std::size_t>(i)] =
            parse_rational(args[static_cast<std::size_t>(i + 1)]);
    ConditionCheck check = tilde_cone_membership(w);

    if (json) {
        Json j;
        j["member"] = check.holds;
        j["failed"] = check.failed;
        std::cout << j.dump(2) << "\n";
    } else if (check.holds) {
        std::cout << "in the Kahler cone\n";
    } else {
        std::cout << "not in the Kahler cone\n";
        for (const auto& f : check.failed) std::cout << "failed: " << f << "\n";
    }
    return check.holds ? 0 : 1;
}

int cmd_audin(int n, bool json) {
    auto classes = audin_scan(n);
    if (json) {
        Json arr = Json::array();
        for (const auto& m : classes) arr.push_back(class_to_json(m.lift));
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& m : classes) std::cout << m.lift.to_string() << "\n";
        std::cout << "total: " << classes.size() << "\n";
    }
    return 0;
}

int cmd_verify(bool json, bool quiet) {
    VerifyReport report = run_verify();
    if (json) {
        Json arr = Json::array();
        for (const auto& c : report.checks) {
            Json j;
            j["id"] = c.id;
            j["pass"] = c.pass;
            j["detail"] = c.detail;
            arr.push_back(std::move(j));
        }
        std::cout << arr.dump(2) << "\n";
    } else if (!quiet) {
        std::cout << render_report(report);
    }
    return report.all_pass() ? 0 : 1;
}

int cmd_batch(const std::string& input_path, const std::string& output_path, bool quiet) {
    std::ifstream input(input_path);
    if (!input) throw DomainError("cannot read " + input_path);
    Json output;
    BatchSummary summary = run_batch(input, output);

    std::ofstream out(output_path);
    if (!out) throw DomainError("cannot write " + output_path);
    out << output.dump(2) << "\n";

    if (!quiet)
        std::cout << "YES: " << summary.yes << "  NO: " << summary.no
                  << "  errors: " << summary.errors << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact decision procedure for Lagrangian RP^2 embeddings in the "
                 "triply blown-up symplectic ball"};
    app.require_subcommand(1);

    bool json = false, quiet = false;
    app.add_flag("--json", json, "machine-readable JSON output");
    app.add_flag("--quiet", quiet, "suppress informational output");

    std::vector<std::string> decide_mu;
    auto* decide = app.add_subcommand("decide", "decide existence of a Lagrangian RP^2");
    decide->add_option("mu", decide_mu, "blow-up sizes mu1 mu2 mu3")->expected(3);

    std::vector<std::string> transform_mu;
    std::string transform_eps;
    auto* transform = app.add_subcommand("transform", "periods of the rational blow-up");
    transform->add_option("mu", transform_mu, "blow-up sizes mu1 mu2 mu3")->expected(3);
    transform->add_option("--eps", transform_eps, "rational blow-up parameter")->required();

    std::vector<std::string> inverse_mt;
    auto* inverse = app.add_subcommand("inverse", "recover (mu, eps) from tilde periods");
    inverse->add_option("mu_tilde", inverse_mt, "periods mu~0 mu~1 mu~2 mu~3")->expected(4);

    std::vector<std::string> epsmax_mu;
    auto* epsmax = app.add_subcommand("epsilon-max", "maximal rational blow-up parameter");
    epsmax->add_option("mu", epsmax_mu, "blow-up sizes mu1 mu2 mu3")->expected(3);

    EnumerateArgs enum_args;
    auto* enumerate = app.add_subcommand("enumerate", "classes with prescribed invariants");
    enumerate->add_option("--lattice", enum_args.lattice, "B1, B2, B3 or B4 (default B4)");
    enumerate->add_option("--square", enum_args.square, "self-intersection")->required();
    enumerate->add_option("--c1", enum_args.c1, "c1-degree")->required();
    enumerate->add_option("--orth", enum_args.orth,
                          "comma-separated orthogonality constraints (H, Sigma, labels)");
    auto* hdeg = enumerate->add_option("--h-degree", enum_args.h_degree,
                                       "fixed pairing with H");
    enumerate->add_flag("--primitive", enum_args.primitive, "primitive classes only");

    std::vector<long> decompose_coeffs;
    auto* decompose = app.add_subcommand("decompose",
                                         "coefficients in the {Sigma, F, ~E'_i} basis");
    decompose->add_option("coefficients", decompose_coeffs,
                          "class coefficients in (H, ~E0..~E3)")->expected(5);

    std::vector<std::string> kahler_args;
    auto* kahler = app.add_subcommand("kahler", "Kahler cone membership");
    kahler->add_option("periods", kahler_args, "lambda mu~0 mu~1 mu~2 mu~3")->expected(5);

    int audin_n = 3;
    auto* audin = app.add_subcommand("audin", "mod-2 classes with Pontrjagin square 1");
    audin->add_option("n", audin_n, "number of blow-ups (1, 2 or 3)")->required();

    auto* verify = app.add_subcommand("verify", "re-derive every lemma and report");

    std::string batch_in, batch_out;
    auto* batch = app.add_subcommand("batch", "decide a CSV file of period triples");
    batch->add_option("input", batch_in, "CSV input path")->required();
    batch->add_option("output", batch_out, "JSON output path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (decide->parsed()) return cmd_decide(decide_mu, json, quiet);
        if (transform->parsed()) return cmd_transform(transform_mu, transform_eps, json);
        if (inverse->parsed()) return cmd_inverse(inverse_mt, json);
        if (epsmax->parsed()) return cmd_epsilon_max(epsmax_mu, json);
        if (enumerate->parsed()) {
            enum_args.has_h_degree = hdeg->count() > 0;
            return cmd_enumerate(enum_args, json);
        }
        if (decompose->parsed()) return cmd_decompose(decompose_coeffs, json);
        if (kahler->parsed()) return cmd_kahler(kahler_args, json);
        if (audin->parsed()) return cmd_audin(audin_n, json);
        if (verify->parsed()) return cmd_verify(json, quiet);
        if (batch->parsed()) return cmd_batch(batch_in, batch_out, quiet);
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
