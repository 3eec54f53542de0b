#pragma once

#include <vector>

#include "cohalab/rational.hpp"

namespace cohalab {

/// Exact rank by fraction-free (Bareiss) elimination over the integers.
/// Rows are scaled by their denominator LCM first. Pivoting is
/// deterministic: first nonzero column, first row.
inline int exact_rank(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());

    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (int i = 0; i < rows; ++i) {
        BigInt l = 1;
        for (int j = 0; j < cols; ++j) l = lcm(l, denominator(m[i][j]));
        for (int j = 0; j < cols; ++j) a[i][j] = numerator(m[i][j]) * (l / denominator(m[i][j]));
    }

    int rank = 0;
    BigInt prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int i = rank; i < rows; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

} // namespace cohalab
