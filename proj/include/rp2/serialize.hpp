#pragma once

#include "rp2/cone.hpp"
#include "rp2/sublattice.hpp"

#include <nlohmann/json.hpp>

namespace rp2 {

using Json = nlohmann::ordered_json;

/// {verdict, mu, epsilon_sup, attained, witness, violation, engine} with
/// rationals as lowest-terms "p/q" strings. Key order is fixed so repeated
/// runs are byte-identical.
Json certificate_to_json(const Certificate& cert);

/// Integer coefficient array paired with the basis-label array.
Json class_to_json(const LatticeClass& c);

Json gram_to_json(const IntMat& m);

} // namespace rp2
