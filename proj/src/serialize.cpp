#include "rp2/serialize.hpp"

namespace rp2 {

Json certificate_to_json(const Certificate& cert) {
    Json j;
    j["verdict"] = cert.yes ? "YES" : "NO";
    Json mu = Json::array();
    for (const auto& m : cert.mu) mu.push_back(format_rational(m));
    j["mu"] = std::move(mu);
    j["epsilon_sup"] = format_rational(cert.epsilon_sup);
    j["attained"] = cert.attained;
    if (cert.witness) {
        Json w;
        w["epsilon"] = format_rational(cert.witness->eps);
        Json mt = Json::array();
        for (const auto& m : cert.witness->mu_tilde) mt.push_back(format_rational(m));
        w["mu_tilde"] = std::move(mt);
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    j["violation"] = cert.violation ? Json(*cert.violation) : Json(nullptr);
    j["engine"] = cert.engine;
    return j;
}

Json class_to_json(const LatticeClass& c) {
    Json j;
    Json coeffs = Json::array();
    for (const Int& x : c.coefficients) {
        if (x.fits_slong_p())
            coeffs.push_back(x.get_si());
        else
            coeffs.push_back(x.get_str());
    }
    j["coefficients"] = std::move(coeffs);
    j["basis"] = c.lattice.basis_labels;
    return j;
}

Json gram_to_json(const IntMat& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const Int& x : row) r.push_back(x.get_si());
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace rp2
