#pragma once

#include "rp2/rational.hpp"

#include <optional>
#include <vector>

namespace rp2 {

/// Dense integer matrix, row-major.
using IntMat = std::vector<std::vector<Int>>;

IntMat identity_matrix(std::size_t n);
IntMat matmul(const IntMat& a, const IntMat& b);

/// Exact determinant of a square matrix (Bareiss fraction-free elimination).
Int determinant(IntMat a);

/// Smith normal form U*A*V = diag(d_1..d_r, 0..), with d_i >= 0 and
/// d_i | d_{i+1}. U and V are unimodular.
struct SmithForm {
    IntMat u;
    IntMat v;
    std::vector<Int> diagonal; // length min(m, n)
    int rank = 0;
};

SmithForm smith_normal_form(IntMat a);

int integer_rank(const IntMat& a);

/// One integral solution of A*x = b, or nullopt when none exists.
std::optional<std::vector<Int>> solve_integer(const IntMat& a,
                                              const std::vector<Int>& b);

/// Basis of {x : A*x = 0}, returned as columns (each inner vector is one
/// basis element of length = #cols of A).
std::vector<std::vector<Int>> integer_kernel(const IntMat& a);

} // namespace rp2
