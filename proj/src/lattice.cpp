#include "rp2/lattice.hpp"

#include <algorithm>

namespace rp2 {

BlowupLattice BlowupLattice::standard(int n) {
    BlowupLattice lat;
    lat.n_exceptional = n;
    lat.basis_labels.push_back("H");
    for (int i = 1; i <= n; ++i) lat.basis_labels.push_back("E" + std::to_string(i));
    return lat;
}

BlowupLattice BlowupLattice::tilde4() {
    BlowupLattice lat;
    lat.n_exceptional = 4;
    lat.basis_labels.push_back("H");
    for (int i = 0; i <= 3; ++i) lat.basis_labels.push_back("~E" + std::to_string(i));
    return lat;
}

LatticeClass::LatticeClass(BlowupLattice lat, std::vector<Int> coeffs)
    : lattice(std::move(lat)), coefficients(std::move(coeffs)) {
    if (static_cast<int>(coefficients.size()) != lattice.rank())
        throw DomainError("coefficient vector length does not match lattice rank");
}

bool LatticeClass::is_zero() const {
    return std::all_of(coefficients.begin(), coefficients.end(),
                       [](const Int& c) { return c == 0; });
}

std::string LatticeClass::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        const Int& c = coefficients[i];
        if (c == 0) continue;
        if (out.empty()) {
            if (c == -1) out += "-";
            else if (c != 1) out += c.get_str();
        } else {
            out += (c > 0) ? "+" : "-";
            Int a = abs(c);
            if (a != 1) out += a.get_str();
        }
        out += lattice.basis_labels[i];
    }
    return out.empty() ? "0" : out;
}

LatticeClass LatticeClass::operator+(const LatticeClass& other) const {
    if (lattice != other.lattice) throw DomainError("classes belong to different lattices");
    std::vector<Int> c(coefficients);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.coefficients[i];
    return LatticeClass(lattice, std::move(c));
}

LatticeClass LatticeClass::operator-(const LatticeClass& other) const {
    return *this + (-other);
}

LatticeClass LatticeClass::operator-() const {
    std::vector<Int> c(coefficients);
    for (auto& x : c) x = -x;
    return LatticeClass(lattice, std::move(c));
}

LatticeClass LatticeClass::operator*(const Int& scalar) const {
    std::vector<Int> c(coefficients);
    for (auto& x : c) x *= scalar;
    return LatticeClass(lattice, std::move(c));
}

LatticeClass basis_class(const BlowupLattice& lat, int index) {
    if (index < 0 || index >= lat.rank()) throw DomainError("basis index out of range");
    std::vector<Int> c(lat.rank(), 0);
    c[index] = 1;
    return LatticeClass(lat, std::move(c));
}

LatticeClass h_class(const BlowupLattice& lat) { return basis_class(lat, 0); }

LatticeClass c1_class(const BlowupLattice& lat) {
    std::vector<Int> c(lat.rank(), -1);
    c[0] = 3;
    return LatticeClass(lat, std::move(c));
}

std::vector<int> Mod2Class::reduction() const {
    std::vector<int> bits;
    bits.reserve(lift.coefficients.size());
    for (const Int& c : lift.coefficients)
        bits.push_back(mpz_odd_p(c.get_mpz_t()) ? 1 : 0);
    return bits;
}

bool Mod2Class::is_zero_mod2() const {
    for (int b : reduction())
        if (b) return false;
    return true;
}

Int pairing(const LatticeClass& a, const LatticeClass& b) {
    if (a.lattice != b.lattice) throw DomainError("pairing across different lattices");
    Int acc = a.coefficients[0] * b.coefficients[0];
    for (std::size_t i = 1; i < a.coefficients.size(); ++i)
        acc -= a.coefficients[i] * b.coefficients[i];
    return acc;
}

Int c1_degree(const LatticeClass& a) {
    return pairing(c1_class(a.lattice), a);
}

bool is_primitive(const LatticeClass& a) {
    if (a.is_zero()) throw DomainError("primitivity of the zero class is undefined");
    Int g = 0;
    for (const Int& c : a.coefficients) g = gcd(g, c);
    return g == 1;
}

int pontrjagin_square(const Mod2Class& m) {
    Int sq = pairing(m.lift, m.lift);
    Int r = sq % 4;
    if (r < 0) r += 4;
    return static_cast<int>(r.get_si());
}

namespace {

// Largest B with B^2 <= n (n >= 0).
Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool lex_less(const LatticeClass& a, const LatticeClass& b) {
    return std::lexicographical_compare(a.coefficients.begin(), a.coefficients.end(),
                                        b.coefficients.begin(), b.coefficients.end());
}

} // namespace

std::vector<LatticeClass> enumerate_classes(const BlowupLattice& lat,
                                            const EnumQuery& query) {
    for (const auto& orth : query.orthogonal_to)
        if (orth.lattice != lat)
            throw DomainError("orthogonality constraint from a different lattice");

    std::optional<Int> h_deg = query.h_degree;
    if (!h_deg) {
        LatticeClass h = h_class(lat);
        for (const auto& orth : query.orthogonal_to)
            if (orth == h) { h_deg = 0; break; }
    }
    if (!h_deg)
        throw DomainError("unbounded enumeration: fix the H-degree or require "
                          "orthogonality to H (the form is indefinite, so the "
                          "level set is infinite otherwise)");

    const Int a0 = *h_deg;
    const Int norm_budget = a0 * a0 - query.square; // sum k_i^2
    std::vector<LatticeClass> out;
    if (norm_budget < 0) return out;

    const Int bound = isqrt(norm_budget);
    const int n = lat.n_exceptional;

    std::vector<Int> coeffs(lat.rank(), 0);
    coeffs[0] = a0;

    // Depth-first in ascending coefficient order gives lexicographic output.
    auto scan = [&](auto&& self, int i, Int remaining) -> void {
        if (i > n) {
            if (remaining != 0) return;
            LatticeClass cls(lat, coeffs);
            if (c1_degree(cls) != query.c1_deg) return;
            for (const auto& orth : query.orthogonal_to)
                if (pairing(cls, orth) != 0) return;
            if (query.primitive_only && (cls.is_zero() || !is_primitive(cls))) return;
            out.push_back(std::move(cls));
            return;
        }
        for (Int k = -bound; k <= bound; ++k) {
            Int used = k * k;
            if (used > remaining) continue;
            coeffs[i] = k;
            self(self, i + 1, remaining - used);
        }
        coeffs[i] = 0;
    };
    scan(scan, 1, norm_budget);

    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

} // namespace rp2
