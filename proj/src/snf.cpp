#include "troproots/snf.hpp"

#include <cstdlib>
#include <stdexcept>

namespace troproots {

namespace {

void swap_rows(IntMatrix& m, int i, int j)
{
    for (int c = 0; c < m.cols; ++c)
        std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMatrix& m, int i, int j)
{
    for (int r = 0; r < m.rows; ++r)
        std::swap(m.at(r, i), m.at(r, j));
}

// row i -= q * row j
void add_row(IntMatrix& m, int i, int j, long long q)
{
    for (int c = 0; c < m.cols; ++c)
        m.at(i, c) -= q * m.at(j, c);
}

void add_col(IntMatrix& m, int i, int j, long long q)
{
    for (int r = 0; r < m.rows; ++r)
        m.at(r, i) -= q * m.at(r, j);
}

void negate_row(IntMatrix& m, int i)
{
    for (int c = 0; c < m.cols; ++c)
        m.at(i, c) = -m.at(i, c);
}

IntMatrix identity(int n)
{
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

} // namespace

SmithForm smith_normal_form(IntMatrix a)
{
    SmithForm out;
    out.u = identity(a.rows);
    out.v = identity(a.cols);

    int n = std::min(a.rows, a.cols);
    for (int k = 0; k < n; ++k) {
        // Move a smallest nonzero entry of the trailing block to (k,k).
        while (true) {
            int pi = -1, pj = -1;
            long long best = 0;
            for (int i = k; i < a.rows; ++i)
                for (int j = k; j < a.cols; ++j) {
                    long long v = std::llabs(a.at(i, j));
                    if (v != 0 && (pi < 0 || v < best)) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0)
                break; // trailing block is zero
            if (pi != k) {
                swap_rows(a, k, pi);
                swap_rows(out.u, k, pi);
            }
            if (pj != k) {
                swap_cols(a, k, pj);
                swap_cols(out.v, k, pj);
            }
            bool clean = true;
            for (int i = k + 1; i < a.rows; ++i) {
                long long q = a.at(i, k) / a.at(k, k);
                if (q != 0) {
                    add_row(a, i, k, q);
                    add_row(out.u, i, k, q);
                }
                if (a.at(i, k) != 0)
                    clean = false;
            }
            for (int j = k + 1; j < a.cols; ++j) {
                long long q = a.at(k, j) / a.at(k, k);
                if (q != 0) {
                    add_col(a, j, k, q);
                    add_col(out.v, j, k, q);
                }
                if (a.at(k, j) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (a.at(k, k) < 0) {
            negate_row(a, k);
            negate_row(out.u, k);
        }
    }
    // Enforce the divisibility chain s_k | s_{k+1}.
    for (int k = 0; k + 1 < n; ++k) {
        for (int j = k + 1; j < n; ++j) {
            if (a.at(k, k) == 0 && a.at(j, j) != 0) {
                swap_rows(a, k, j);
                swap_rows(out.u, k, j);
                swap_cols(a, k, j);
                swap_cols(out.v, k, j);
            }
            if (a.at(k, k) != 0 && a.at(j, j) % a.at(k, k) != 0) {
                // Fold column j into column k and rediagonalize the 2x2.
                add_col(a, k, j, -1);
                add_col(out.v, k, j, -1);
                // Euclid on (a_kk, a_jk) by row operations.
                while (a.at(j, k) != 0) {
                    long long q = a.at(k, k) / a.at(j, k);
                    add_row(a, k, j, q);
                    add_row(out.u, k, j, q);
                    swap_rows(a, k, j);
                    swap_rows(out.u, k, j);
                }
                long long q = a.at(k, j) / a.at(k, k);
                add_col(a, j, k, q);
                add_col(out.v, j, k, q);
                if (a.at(k, k) < 0) {
                    negate_row(a, k);
                    negate_row(out.u, k);
                }
                if (a.at(j, j) < 0) {
                    negate_row(a, j);
                    negate_row(out.u, j);
                }
            }
        }
    }
    out.s = std::move(a);
    return out;
}

std::optional<std::vector<long long>> solve_integer(const IntMatrix& a,
                                                    const std::vector<long long>& b)
{
    if (static_cast<int>(b.size()) != a.rows)
        throw std::invalid_argument("right-hand side size mismatch");
    SmithForm snf = smith_normal_form(a);

    // y = U b; then S z = y and x = V z.
    std::vector<long long> y(a.rows, 0);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.rows; ++j)
            y[i] += snf.u.at(i, j) * b[j];

    std::vector<long long> z(a.cols, 0);
    int n = std::min(a.rows, a.cols);
    for (int i = 0; i < a.rows; ++i) {
        long long s = i < n ? snf.s.at(i, i) : 0;
        if (s == 0) {
            if (y[i] != 0)
                return std::nullopt;
        } else {
            if (y[i] % s != 0)
                return std::nullopt;
            z[i] = y[i] / s;
        }
    }

    std::vector<long long> x(a.cols, 0);
    for (int i = 0; i < a.cols; ++i)
        for (int j = 0; j < a.cols; ++j)
            x[i] += snf.v.at(i, j) * z[j];
    return x;
}

} // namespace troproots
