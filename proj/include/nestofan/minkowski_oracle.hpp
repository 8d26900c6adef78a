#pragma once

// Independent cross-check for nested_fan: realize the nestohedron of a
// connected building set as the Minkowski sum of the simplices Delta_I,
// enumerate its vertices, find its facets among the 0/1 directions, and
// read off the inner normal fan. Nothing here goes through stellar
// subdivision.

#include "building_set.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace nestofan {

namespace detail {

using Point = std::vector<long>;

/// Sum over members of the vertex of Delta_I minimizing c; empty when c
/// has a tie inside some member (not generic).
inline std::optional<Point> minimizing_vertex(const BuildingSet& b, const std::vector<long>& c) {
    Point v(b.ground().size(), 0);
    for (const auto& member : b.members()) {
        std::size_t best = member.front();
        bool tie = false;
        for (std::size_t k = 1; k < member.size(); ++k) {
            auto i = member[k];
            if (c[i] < c[best]) {
                best = i;
                tie = false;
            } else if (c[i] == c[best]) {
                tie = true;
            }
        }
        if (tie) return std::nullopt;
        ++v[best];
    }
    return v;
}

/// Rank of a small integer matrix by fraction-free (Bareiss) elimination.
/// Entries here are vertex coordinates bounded by the member count, so the
/// intermediate minors stay far inside 128 bits.
inline std::size_t small_rank(std::vector<std::vector<__int128>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    __int128 prev = 1;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && rows[p][c] == 0) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        for (std::size_t i = rank + 1; i < rows.size(); ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                rows[i][j] = (rows[rank][c] * rows[i][j] - rows[i][c] * rows[rank][j]) / prev;
            rows[i][c] = 0;
        }
        prev = rows[rank][c];
        ++rank;
    }
    return rank;
}

}  // namespace detail

inline Fan minkowski_nestohedron_oracle(const BuildingSet& b, std::uint64_t seed = 0) {
    const std::size_t m = b.ground().size();
    if (m > 6) throw InputError("oracle is desk-scale only");
    if (b.mode() != BuildingMode::plain) throw InputError("oracle needs a plain building set");
    if (m < 2 || !is_connected(b)) throw InputError("oracle needs a connected building set on >= 2 labels");

    std::set<detail::Point> vertices;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coord(-1000, 1000);
    for (std::size_t t = 0; t < 8 * m; ++t) {
        std::vector<long> c(m);
        for (auto& x : c) x = coord(rng);
        if (auto v = detail::minimizing_vertex(b, c)) vertices.insert(*v);
    }
    // Every generic direction orders the ground set, so the rank vectors of
    // all permutations reach every vertex.
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<long> c(m);
        for (std::size_t k = 0; k < m; ++k) c[perm[k]] = static_cast<long>(k);
        vertices.insert(*detail::minimizing_vertex(b, c));
    } while (std::next_permutation(perm.begin(), perm.end()));

    const std::vector<detail::Point> verts(vertices.begin(), vertices.end());
    // Candidate inner facet normals: indicator vectors of proper subsets A.
    std::vector<LatticeVector> rays;
    std::vector<std::optional<Label>> labels;
    std::vector<std::vector<std::size_t>> incident(verts.size());
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << m); ++mask) {
        std::vector<long> value(verts.size(), 0);
        for (std::size_t w = 0; w < verts.size(); ++w)
            for (std::size_t k = 0; k < m; ++k)
                if (mask >> k & 1) value[w] += verts[w][k];
        const long low = *std::min_element(value.begin(), value.end());
        std::vector<std::size_t> tight;
        for (std::size_t w = 0; w < verts.size(); ++w)
            if (value[w] == low) tight.push_back(w);
        std::vector<std::vector<__int128>> edges;
        for (auto w : tight) {
            std::vector<__int128> diff(m);
            for (std::size_t k = 0; k < m; ++k) diff[k] = verts[w][k] - verts[tight.front()][k];
            edges.push_back(std::move(diff));
        }
        if (detail::small_rank(std::move(edges)) + 2 != m) continue;  // not a facet
        std::vector<Integer> ray(m - 1);
        const long last = mask >> (m - 1) & 1;
        for (std::size_t k = 0; k + 1 < m; ++k) ray[k] = static_cast<long>(mask >> k & 1) - last;
        const std::size_t index = rays.size();
        rays.emplace_back(std::move(ray));
        if (std::popcount(mask) == 1)
            labels.emplace_back(b.ground()[static_cast<std::size_t>(std::countr_zero(mask))]);
        else
            labels.emplace_back();
        for (auto w : tight) incident[w].push_back(index);
    }
    std::vector<Cone> cones;
    for (auto& idx : incident) cones.emplace_back(std::move(idx));
    return Fan(m - 1, std::move(rays), std::move(cones), std::move(labels));
}

/// Calls fn(b) for every connected plain building set b on the ground
/// labels 1..m, in a fixed order; returns how many there are. A family is
/// a bit set over the subsets of [m]; the search adds one subset at a time
/// and closes under unions of overlapping members, which reaches every
/// closed family.
template <typename Fn>
std::size_t for_each_connected_building_set(std::size_t m, Fn&& fn) {
    if (m < 1 || m > 5) throw InputError("enumeration is limited to ground sets of size 1..5");
    std::vector<Label> ground;
    for (std::size_t k = 1; k <= m; ++k) ground.push_back(Label::simple(static_cast<long>(k)));
    const std::uint32_t full = (std::uint32_t{1} << m) - 1;
    auto bit = [](std::uint32_t s) { return std::uint64_t{1} << s; };
    auto close_with = [&](std::uint64_t family, std::uint32_t s) {
        std::vector<std::uint32_t> work{s};
        family |= bit(s);
        while (!work.empty()) {
            const std::uint32_t t = work.back();
            work.pop_back();
            for (std::uint64_t rest = family; rest; rest &= rest - 1) {
                const auto x = static_cast<std::uint32_t>(std::countr_zero(rest));
                if ((x & t) && !(family & bit(x | t))) {
                    family |= bit(x | t);
                    work.push_back(x | t);
                }
            }
        }
        return family;
    };
    std::uint64_t base = bit(full);
    for (std::size_t k = 0; k < m; ++k) base |= bit(std::uint32_t{1} << k);
    std::set<std::uint64_t> seen{base};
    std::vector<std::uint64_t> stack{base};
    while (!stack.empty()) {
        const std::uint64_t family = stack.back();
        stack.pop_back();
        for (std::uint32_t s = 1; s < full; ++s) {
            if (std::popcount(s) < 2 || (family & bit(s))) continue;
            const std::uint64_t next = close_with(family, s);
            if (seen.insert(next).second) stack.push_back(next);
        }
    }
    for (auto family : seen) {
        std::set<Subset> members;
        for (std::uint64_t rest = family; rest; rest &= rest - 1) {
            const auto x = static_cast<std::uint32_t>(std::countr_zero(rest));
            Subset out;
            for (std::size_t k = 0; k < m; ++k)
                if (x >> k & 1) out.push_back(k);
            members.insert(std::move(out));
        }
        fn(BuildingSet(ground, std::move(members), BuildingMode::plain));
    }
    return seen.size();
}

/// Every connected plain building set on the ground labels 1..m, m <= 4.
inline std::vector<BuildingSet> connected_building_sets(std::size_t m) {
    if (m < 1 || m > 4) throw InputError("enumeration is limited to ground sets of size 1..4");
    std::vector<BuildingSet> out;
    for_each_connected_building_set(m, [&](BuildingSet b) { out.push_back(std::move(b)); });
    return out;
}

/// A random connected plain building set on 1..m: random non-singleton
/// subsets, closed under unions of overlapping pairs, plus the ground set.
template <typename Rng>
BuildingSet random_connected_building_set(std::size_t m, Rng& rng, double density = 0.25) {
    if (m < 1 || m > 20) throw InputError("random building sets are limited to 1..20 labels");
    std::vector<Label> ground;
    for (std::size_t k = 1; k <= m; ++k) ground.push_back(Label::simple(static_cast<long>(k)));
    const std::uint64_t full = (std::uint64_t{1} << m) - 1;
    std::bernoulli_distribution pick(density);
    std::set<std::uint64_t> fam{full};
    for (std::uint64_t s = 1; s < full; ++s)
        if (std::popcount(s) >= 2 && pick(rng)) fam.insert(s);
    for (bool changed = true; changed;) {
        changed = false;
        for (auto x : fam)
            for (auto y : fam)
                if ((x & y) && !fam.count(x | y)) {
                    fam.insert(x | y);
                    changed = true;
                }
    }
    std::set<Subset> members;
    for (std::size_t k = 0; k < m; ++k) members.insert(Subset{k});
    for (auto s : fam) {
        Subset out;
        for (std::size_t k = 0; k < m; ++k)
            if (s >> k & 1) out.push_back(k);
        members.insert(std::move(out));
    }
    return BuildingSet(std::move(ground), std::move(members), BuildingMode::plain);
}

}  // namespace nestofan
