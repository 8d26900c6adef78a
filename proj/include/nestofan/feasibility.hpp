#pragma once

// Exact phase-one simplex: decides whether { z >= 0 : A z = b } is nonempty.
// Bland's rule, dense tableau over cpp_rational. Problems here have at most a
// few dozen columns, so nothing smarter is needed.

#include "arith.hpp"

#include <vector>

namespace nestofan {

inline bool nonnegative_solution_exists(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const std::size_t rows = a.size();
    if (rows == 0) return true;
    const std::size_t cols = a.front().size();
    for (std::size_t i = 0; i < rows; ++i) {
        if (b[i] < 0) {
            for (auto& x : a[i]) x = -x;
            b[i] = -b[i];
        }
    }
    // Tableau columns: original | artificial | rhs.
    const std::size_t width = cols + rows + 1;
    std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(width, Rational(0)));
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) t[i][j] = a[i][j];
        t[i][cols + i] = 1;
        t[i][width - 1] = b[i];
        basis[i] = cols + i;
    }
    // Reduced costs of "minimize sum of artificials".
    std::vector<Rational> cost(width, Rational(0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < width; ++j)
            if (j < cols || j == width - 1) cost[j] -= t[i][j];

    while (true) {
        std::size_t enter = width;
        for (std::size_t j = 0; j + 1 < width; ++j)
            if (cost[j] < 0) {
                enter = j;
                break;
            }
        if (enter == width) break;
        std::size_t leave = rows;
        Rational best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0) continue;
            Rational ratio = t[i][width - 1] / t[i][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows) break;  // unbounded direction; cannot happen for phase one
        Rational inv = 1 / t[leave][enter];
        for (auto& x : t[leave]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            Rational f = t[i][enter];
            for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
        }
        if (cost[enter] != 0) {
            Rational f = cost[enter];
            for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    return cost[width - 1] == 0;
}

}  // namespace nestofan
