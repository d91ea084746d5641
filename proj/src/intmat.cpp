#include "rp2/intmat.hpp"

#include <algorithm>

namespace rp2 {

IntMat identity_matrix(std::size_t n) {
    IntMat m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat matmul(const IntMat& a, const IntMat& b) {
    std::size_t m = a.size(), k = b.size(), n = b.empty() ? 0 : b[0].size();
    IntMat out(m, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

Int determinant(IntMat a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw DomainError("determinant of a non-square matrix");
    if (n == 0) return 1;

    // Bareiss: division-free up to exact divisions by the previous pivot.
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

namespace {

struct SnfState {
    IntMat d, u, v;
    std::size_t m, n;

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap(d[a], d[b]);
        std::swap(u[a], u[b]);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < m; ++i) std::swap(d[i][a], d[i][b]);
        for (std::size_t i = 0; i < n; ++i) std::swap(v[i][a], v[i][b]);
    }
    void add_row(std::size_t dst, std::size_t src, const Int& factor) {
        for (std::size_t j = 0; j < n; ++j) d[dst][j] += factor * d[src][j];
        for (std::size_t j = 0; j < m; ++j) u[dst][j] += factor * u[src][j];
    }
    void add_col(std::size_t dst, std::size_t src, const Int& factor) {
        for (std::size_t i = 0; i < m; ++i) d[i][dst] += factor * d[i][src];
        for (std::size_t i = 0; i < n; ++i) v[i][dst] += factor * v[i][src];
    }
    void negate_row(std::size_t r) {
        for (auto& x : d[r]) x = -x;
        for (auto& x : u[r]) x = -x;
    }
};

} // namespace

SmithForm smith_normal_form(IntMat a) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    for (const auto& row : a)
        if (row.size() != n) throw DomainError("ragged matrix");

    SnfState s{std::move(a), identity_matrix(m), identity_matrix(n), m, n};
    const std::size_t steps = std::min(m, n);

    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // Pivot: smallest nonzero |entry| in the trailing block.
            std::size_t pi = t, pj = t;
            bool found = false;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (s.d[i][j] == 0) continue;
                    if (!found || abs(s.d[i][j]) < abs(s.d[pi][pj])) {
                        pi = i;
                        pj = j;
                        found = true;
                    }
                }
            if (!found) { t = steps; break; }
            s.swap_rows(t, pi);
            s.swap_cols(t, pj);

            for (;;) {
                bool dirty = false;
                for (std::size_t i = t + 1; i < m; ++i) {
                    if (s.d[i][t] == 0) continue;
                    Int q = s.d[i][t] / s.d[t][t]; // truncated
                    s.add_row(i, t, -q);
                    if (s.d[i][t] != 0) {
                        s.swap_rows(t, i); // strictly smaller remainder becomes pivot
                        dirty = true;
                    }
                }
                for (std::size_t j = t + 1; j < n; ++j) {
                    if (s.d[t][j] == 0) continue;
                    Int q = s.d[t][j] / s.d[t][t];
                    s.add_col(j, t, -q);
                    if (s.d[t][j] != 0) {
                        s.swap_cols(t, j);
                        dirty = true;
                    }
                }
                if (!dirty) break;
            }

            // Divisibility fix-up: the pivot must divide the trailing block.
            bool redo = false;
            for (std::size_t i = t + 1; i < m && !redo; ++i)
                for (std::size_t j = t + 1; j < n && !redo; ++j)
                    if (s.d[i][j] % s.d[t][t] != 0) {
                        s.add_row(t, i, 1);
                        redo = true;
                    }
            if (!redo) {
                if (s.d[t][t] < 0) s.negate_row(t);
                break;
            }
        }
        if (t == steps) break;
    }

    SmithForm out;
    out.u = std::move(s.u);
    out.v = std::move(s.v);
    out.diagonal.resize(steps);
    out.rank = 0;
    for (std::size_t t = 0; t < steps; ++t) {
        out.diagonal[t] = s.d[t][t];
        if (out.diagonal[t] != 0) ++out.rank;
    }
    return out;
}

int integer_rank(const IntMat& a) {
    return smith_normal_form(a).rank;
}

std::optional<std::vector<Int>> solve_integer(const IntMat& a,
                                              const std::vector<Int>& b) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    if (b.size() != m) throw DomainError("rhs length mismatch");

    SmithForm snf = smith_normal_form(a);

    std::vector<Int> c(m, 0); // c = U * b
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) c[i] += snf.u[i][j] * b[j];

    std::vector<Int> y(n, 0);
    for (std::size_t i = 0; i < m; ++i) {
        Int d = (i < snf.diagonal.size()) ? snf.diagonal[i] : Int(0);
        if (d == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            if (c[i] % d != 0) return std::nullopt;
            y[i] = c[i] / d;
        }
    }

    std::vector<Int> x(n, 0); // x = V * y
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) x[i] += snf.v[i][j] * y[j];
    return x;
}

std::vector<std::vector<Int>> integer_kernel(const IntMat& a) {
    const std::size_t n = a.empty() ? 0 : a[0].size();
    SmithForm snf = smith_normal_form(a);
    std::vector<std::vector<Int>> basis;
    for (std::size_t j = static_cast<std::size_t>(snf.rank); j < n; ++j) {
        std::vector<Int> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = snf.v[i][j];
        basis.push_back(std::move(col));
    }
    return basis;
}

} // namespace rp2
