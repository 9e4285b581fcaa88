#ifndef TROPROOTS_SNF_HPP
#define TROPROOTS_SNF_HPP

#include <optional>
#include <vector>

namespace troproots {

// Dense integer matrix, row-major.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> data;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0) {}
    long long& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    long long at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
};

// U * A * V = S with U, V unimodular and S diagonal (Smith normal form).
struct SmithForm {
    IntMatrix s;
    IntMatrix u;
    IntMatrix v;
};

SmithForm smith_normal_form(IntMatrix a);

// One integer solution of A x = b, if any.
std::optional<std::vector<long long>> solve_integer(const IntMatrix& a,
                                                    const std::vector<long long>& b);

} // namespace troproots

#endif
