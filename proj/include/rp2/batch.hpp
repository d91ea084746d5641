#pragma once

#include "rp2/serialize.hpp"

#include <iosfwd>
#include <string>

namespace rp2 {

struct BatchSummary {
    std::size_t yes = 0;
    std::size_t no = 0;
    std::size_t errors = 0;
};

/// Reads CSV rows (header mu1,mu2,mu3 with an optional id column), decides
/// each row, and returns the certificates as a JSON array in input order.
/// Malformed rows become error entries; only an unreadable header is fatal.
/// RP2_TRIANGLE_THREADS caps the number of worker threads.
BatchSummary run_batch(std::istream& input, Json& output);

} // namespace rp2
