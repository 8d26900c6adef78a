#pragma once

// Integer lattice vectors and the small amount of exact linear algebra the
// fan kernel needs: Bareiss determinants, rational rank, coordinates of a
// vector in a linearly independent generating set.

#include "arith.hpp"

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nestofan {

struct LatticeVector {
    std::vector<Integer> coords;

    LatticeVector() = default;
    explicit LatticeVector(std::vector<Integer> c) : coords(std::move(c)) {}
    LatticeVector(std::initializer_list<long> c) : coords(c.begin(), c.end()) {}

    std::size_t rank() const { return coords.size(); }
    const Integer& operator[](std::size_t k) const { return coords[k]; }

    bool is_zero() const {
        return std::all_of(coords.begin(), coords.end(), [](const Integer& x) { return x == 0; });
    }

    friend bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.coords == b.coords; }
    friend bool operator<(const LatticeVector& a, const LatticeVector& b) {
        return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                            b.coords.end());
    }

    friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) {
        for (std::size_t k = 0; k < a.coords.size(); ++k) a.coords[k] += b.coords[k];
        return a;
    }

    std::string str() const {
        std::string out = "(";
        for (std::size_t k = 0; k < coords.size(); ++k) {
            if (k) out += ",";
            out += coords[k].str();
        }
        return out + ")";
    }
};

inline Integer content(const LatticeVector& v) {
    Integer g = 0;
    for (const auto& x : v.coords) g = gcd(g, abs(x));
    return g;
}

inline bool is_primitive(const LatticeVector& v) { return content(v) == 1; }

/// The primitive lattice vector on the ray through v.
inline LatticeVector primitive(LatticeVector v) {
    Integer g = content(v);
    if (g == 0) throw InputError("not a ray direction");
    for (auto& x : v.coords) x /= g;
    return v;
}

inline Integer dot(const LatticeVector& a, const LatticeVector& b) {
    Integer s = 0;
    for (std::size_t k = 0; k < a.coords.size(); ++k) s += a.coords[k] * b.coords[k];
    return s;
}

using IntegerMatrix = std::vector<std::vector<Integer>>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Fraction-free Gaussian elimination (Bareiss); m must be square.
inline Integer determinant(IntegerMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    Integer sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Rank over the rationals of the row family.
inline std::size_t rank_of(std::span<const LatticeVector> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().rank();
    RationalMatrix m;
    m.reserve(rows.size());
    for (const auto& r : rows) m.emplace_back(r.coords.begin(), r.coords.end());
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[rank][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// gcd of all k x k minors of the k x r matrix whose rows are `rows`.
/// Equals 1 iff the rows extend to a basis of Z^r.
inline Integer maximal_minor_gcd(std::span<const LatticeVector> rows) {
    const std::size_t k = rows.size();
    if (k == 0) return 1;
    const std::size_t r = rows.front().rank();
    if (k > r) return 0;
    std::vector<std::size_t> cols(k);
    for (std::size_t j = 0; j < k; ++j) cols[j] = j;
    Integer g = 0;
    while (true) {
        IntegerMatrix minor(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor[i][j] = rows[i].coords[cols[j]];
        g = gcd(g, abs(determinant(std::move(minor))));
        if (g == 1) return g;
        // next k-combination of {0..r-1}
        std::size_t pos = k;
        while (pos > 0 && cols[pos - 1] == r - k + pos - 1) --pos;
        if (pos == 0) break;
        ++cols[pos - 1];
        for (std::size_t j = pos; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
    return g;
}

/// Coefficients c with sum_i c_i * generators[i] == target, assuming the
/// generators are linearly independent. Empty if target is outside their span.
inline std::optional<std::vector<Rational>> coordinates_in(std::span<const LatticeVector> generators,
                                                            const LatticeVector& target) {
    const std::size_t k = generators.size();
    const std::size_t r = target.rank();
    // Augmented system: r equations, k unknowns.
    RationalMatrix m(r, std::vector<Rational>(k + 1));
    for (std::size_t row = 0; row < r; ++row) {
        for (std::size_t j = 0; j < k; ++j) m[row][j] = Rational(generators[j].coords[row]);
        m[row][k] = Rational(target.coords[row]);
    }
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < k && rank < r; ++c) {
        std::size_t p = rank;
        while (p < r && m[p][c] == 0) ++p;
        if (p == r) continue;
        std::swap(m[rank], m[p]);
        Rational inv = 1 / m[rank][c];
        for (std::size_t j = c; j <= k; ++j) m[rank][j] *= inv;
        for (std::size_t i = 0; i < r; ++i) {
            if (i == rank || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j <= k; ++j) m[i][j] -= f * m[rank][j];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (std::size_t i = rank; i < r; ++i)
        if (m[i][k] != 0) return std::nullopt;
    std::vector<Rational> coeffs(k, Rational(0));
    for (std::size_t i = 0; i < rank; ++i) coeffs[pivot_col[i]] = m[i][k];
    return coeffs;
}

/// Rows h_j with h_j . g_i = delta_ij for r linearly independent generators
/// of a rank-r lattice; empty when they are dependent.
inline std::optional<RationalMatrix> dual_basis(std::span<const LatticeVector> generators) {
    const std::size_t r = generators.size();
    // [G | I] with the generators as columns, reduced to [I | G^{-1}].
    RationalMatrix m(r, std::vector<Rational>(2 * r, Rational(0)));
    for (std::size_t row = 0; row < r; ++row) {
        if (generators[row].rank() != r) return std::nullopt;
        for (std::size_t j = 0; j < r; ++j) m[row][j] = Rational(generators[j].coords[row]);
        m[row][r + row] = 1;
    }
    for (std::size_t c = 0; c < r; ++c) {
        std::size_t p = c;
        while (p < r && m[p][c] == 0) ++p;
        if (p == r) return std::nullopt;
        std::swap(m[c], m[p]);
        const Rational inv = 1 / m[c][c];
        for (std::size_t j = c; j < 2 * r; ++j) m[c][j] *= inv;
        for (std::size_t i = 0; i < r; ++i) {
            if (i == c || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < 2 * r; ++j) m[i][j] -= f * m[c][j];
        }
    }
    RationalMatrix out(r);
    for (std::size_t i = 0; i < r; ++i) out[i].assign(m[i].begin() + static_cast<std::ptrdiff_t>(r), m[i].end());
    return out;
}

}  // namespace nestofan
